#pragma once

#include <optional>
#include <span>
#include <vector>

#include "supergrading/gradings.hpp"

namespace supergrading {

// Coefficients over (eps_1..eps_a, delta_1..delta_b).
struct Root {
  std::vector<int> coeffs;
  Parity parity;
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

struct RootSystem {
  AlgebraKind kind;
  int m;  // gl(m|n) or osp(m|2n)
  int n;
  int eps;    // number of eps coordinates
  int delta;  // number of delta coordinates
  std::vector<Root> roots;

  // (eps_i, eps_j) = [i = j], (delta_i, delta_j) = -[i = j], (eps, delta) = 0
  long form(std::span<const int> a, std::span<const int> b) const;
  bool contains(std::span<const int> coeffs) const;
  std::optional<Root> find(std::span<const int> coeffs) const;
};

RootSystem build_roots(AlgebraKind kind, int m, int n);
RootSystem build_roots(const Realization& r);
bool is_isotropic(const RootSystem& rs, const Root& a);

struct MarkedBase {
  std::vector<Root> simple;
  std::vector<int> marks;
  friend bool operator==(const MarkedBase&, const MarkedBase&) = default;
};

// Odd reflection when simple[k] is isotropic, even reflection otherwise.
MarkedBase reflect_marked(const RootSystem& rs, const MarkedBase& b, std::size_t k);

// Values of Deg on eps_i and delta_j.
struct DegreeMap {
  std::vector<Rational> weights;
  // Throws NonIntegralGrading when the value is not an integer.
  int degree(std::span<const int> coeffs) const;
};

DegreeMap degree_map(const Grading& g);

// Simple roots of the positive system {alpha : l(alpha) > 0} for a regular
// functional with the given values on eps_1.., delta_1...
std::vector<Root> base_from_functional(const RootSystem& rs, std::span<const long> values);
std::vector<Root> standard_base(const RootSystem& rs);
// Coordinates of coeffs in the simple roots, when it lies in their span.
std::optional<std::vector<Rational>> base_coordinates(std::span<const Root> simple, std::span<const int> coeffs);
// Linearly independent and every root a nonnegative or nonpositive integer
// combination, with equally many of each sign.
bool is_base(const RootSystem& rs, std::span<const Root> simple);

MarkedBase mark(const std::vector<Root>& simple, const DegreeMap& deg);
MarkedBase find_nonnegative_base(const RootSystem& rs, const DegreeMap& deg, std::vector<Root> start);
MarkedBase find_nonnegative_base(const Grading& g);

// Marked Dynkin diagrams reachable by reflections at degree-zero simple roots,
// one representative per diagram up to vertex reordering.
std::vector<MarkedBase> equivalence_class(const RootSystem& rs, const MarkedBase& b);
bool marked_equivalent(const RootSystem& rs, const MarkedBase& b1, const MarkedBase& b2);
// Same Gram matrix, parities and marks after some reordering of vertices.
bool same_marked_diagram(const RootSystem& rs, const MarkedBase& a, const MarkedBase& b);

}  // namespace supergrading
