#pragma once

#include <optional>
#include <span>
#include <vector>

#include "supergrading/partitions.hpp"
#include "supergrading/superalgebra.hpp"

namespace supergrading {

class Grading {
 public:
  Grading(RealizationPtr ambient, Vector h, std::vector<int> degrees);

  const RealizationPtr& ambient() const { return ambient_; }
  // Diagonal of the defining element H.
  const Vector& h() const { return h_; }
  AlgebraElement element() const;
  // Degree of each homogeneous basis element, in basis order.
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(std::size_t basis_index) const { return degrees_[basis_index]; }
  bool is_even() const;

 private:
  RealizationPtr ambient_;
  Vector h_;
  std::vector<int> degrees_;
};

// Throws NonIntegralGrading when an ad H eigenvalue is not an integer.
Grading grading_from(RealizationPtr r, std::span<const Rational> h_diagonal);
Grading grading_from(const AlgebraElement& h);
std::optional<Grading> try_grading_from(RealizationPtr r, std::span<const Rational> h_diagonal);

struct Sl2Triple {
  AlgebraElement e;
  AlgebraElement f;
  AlgebraElement h;
};

struct BlockType {
  AlgebraKind kind;
  int even;  // m_i
  int odd;   // n_i for gl, 2n_i for osp
  long dim() const;
  long even_dim() const;
  long odd_dim() const;
  friend bool operator==(const BlockType&, const BlockType&) = default;
};

struct CentralizerReport {
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  std::vector<AlgebraElement> basis;
  std::vector<BlockType> block_types;
};

struct Dims {
  long even;
  long odd;
  friend bool operator==(const Dims&, const Dims&) = default;
};

CentralizerReport centralizer(RealizationPtr r, const AlgebraElement& e);
Dims dim_formula_gl(const SuperPartition& sp);
// The even part with the symplectic term n + sum (j-1) q_j + #{odd q_j}/2.
Dims dim_formula_osp(const SuperPartition& sp);
// The same expression with the symplectic leading term n/2, as literally written.
Rational dim_formula_osp_even_literal(const SuperPartition& sp);

// Throws NotCompletable when no f exists.
Sl2Triple complete_sl2(RealizationPtr r, const AlgebraElement& e, const AlgebraElement& h);
CentralizerReport s_centralizer(RealizationPtr r, const Sl2Triple& s);
std::vector<BlockType> predicted_s_centralizer(AlgebraKind kind, const SuperPartition& sp);

// Precomputes ad e and ker(ad e) so that many gradings can be tested for the
// same nilpotent.
class GoodnessChecker {
 public:
  GoodnessChecker(RealizationPtr r, const AlgebraElement& e);

  struct Verdict {
    bool in_degree_two;
    bool kernel_criterion;  // ker(ad e) inside nonnegative degrees
    bool rank_criterion;    // injective in degrees <= -1, surjective in >= -1
    bool good() const { return in_degree_two && kernel_criterion; }
  };

  Verdict check(const Grading& g) const;
  // Throws std::logic_error if the two criteria disagree.
  bool is_good(const Grading& g) const;
  bool is_richardson(const Grading& g) const;

  const Matrix& ad_e() const { return ad_e_; }
  const std::vector<Vector>& kernel() const { return kernel_; }

 private:
  bool in_degree_two(const Grading& g) const;

  RealizationPtr r_;
  Vector e_coords_;
  Matrix ad_e_;
  std::vector<Vector> kernel_;
};

bool is_good(const Grading& g, const AlgebraElement& e);
bool is_richardson(const Grading& g, const AlgebraElement& e);

// Basis pairs with degrees i, j, i != -j, and nonzero invariant form.
std::size_t form_violations(const Grading& g);

}  // namespace supergrading
