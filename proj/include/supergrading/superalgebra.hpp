#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "supergrading/linalg.hpp"

namespace supergrading {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline char parity_sign(Parity p) { return p == Parity::even ? '+' : '-'; }

enum class AlgebraKind { gl, osp };

struct BasisElement {
  Matrix matrix;
  Parity parity;
  std::string name;
  // An entry that is nonzero here and zero in every other basis element;
  // coordinates are read off at it.
  std::size_t pivot_row;
  std::size_t pivot_col;
};

class Realization {
 public:
  static std::shared_ptr<const Realization> gl(int m, int n);
  // osp(m|2n)
  static std::shared_ptr<const Realization> osp(int m, int n);

  AlgebraKind kind() const { return kind_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int odd_dim() const { return kind_ == AlgebraKind::gl ? n_ : 2 * n_; }
  std::size_t size() const { return static_cast<std::size_t>(m_ + odd_dim()); }
  std::size_t dim() const { return basis_.size(); }
  // floor(m/2) for osp, 0 for gl.
  int k() const { return kind_ == AlgebraKind::osp ? m_ / 2 : 0; }
  std::string name() const;

  Parity index_parity(std::size_t i) const { return index_parity_[i]; }
  // gl: 1..m+n. osp: signed labels 0, ±1, ..., ±(k+n).
  int label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(int label) const;
  bool has_label(int label) const;

  const Matrix& phi() const { return phi_; }
  std::span<const BasisElement> basis() const { return basis_; }
  const BasisElement& basis(std::size_t i) const { return basis_[i]; }

  Vector coordinates(const Matrix& x) const;
  Matrix combine(std::span<const Rational> coords) const;

  Matrix even_part(const Matrix& x) const;
  Matrix odd_part(const Matrix& x) const;
  Rational supertrace(const Matrix& x) const;
  // Superbracket on matrices of this algebra, extended bilinearly.
  Matrix bracket(const Matrix& x, const Matrix& y) const;
  // Matrix with a single entry at the rows/cols of the given labels.
  Matrix unit(int row_label, int col_label, const Rational& value = 1) const;

 private:
  Realization() = default;
  void assign_pivots();

  AlgebraKind kind_ = AlgebraKind::gl;
  int m_ = 0;
  int n_ = 0;
  std::vector<Parity> index_parity_;
  std::vector<int> labels_;
  std::vector<std::size_t> label_index_;  // offset by k+n
  Matrix phi_;
  std::vector<BasisElement> basis_;
};

using RealizationPtr = std::shared_ptr<const Realization>;

RealizationPtr build_gl(int m, int n);
RealizationPtr build_osp(int m, int n);

struct AlgebraElement {
  RealizationPtr ambient;
  Matrix matrix;
};

// Validates membership for osp ambients; throws MembershipFailure otherwise.
AlgebraElement make_element(RealizationPtr r, Matrix m);
AlgebraElement basis_element(RealizationPtr r, std::size_t i);

AlgebraElement superbracket(const AlgebraElement& x, const AlgebraElement& y);
Rational invariant_form(const AlgebraElement& x, const AlgebraElement& y);

// phi(x u, v) = -(-1)^{|x||u|} phi(u, x v) for all basis vectors u, v, and x
// homogeneous of the given parity.
bool is_member_osp(const Realization& r, const Matrix& x, Parity parity);
bool is_member(const Realization& r, const Matrix& x);

// Column j holds the coordinates of [x, basis_j].
Matrix adjoint_matrix(const AlgebraElement& x);

// The restriction of e to V0 or V1 as a square matrix.
Matrix parity_block(const Realization& r, const Matrix& x, Parity p);
// Jordan block sizes of a nilpotent matrix, largest first.
std::vector<int> nilpotent_jordan_type(const Matrix& x);

}  // namespace supergrading
