#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "supergrading/rational.hpp"

namespace supergrading {

using Vector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<Rational>& entries() const { return data_; }

  bool is_zero() const;
  bool is_diagonal() const;
  Vector diagonal() const;
  static Matrix diagonal(std::span<const Rational> d);

  Matrix transpose() const;
  Vector apply(std::span<const Rational> v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);

// Rank by fraction-free (Bareiss) elimination over the integers after
// clearing row denominators.
std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0}. Vector i has a 1 at the i-th free column and 0 at
// every other free column.
std::vector<Vector> kernel_basis(const Matrix& m);

// A particular solution of a x = b (free variables set to 0), or nullopt when
// the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, std::span<const Rational> b);

// Rows and columns picked out of m, in the given order.
Matrix submatrix(const Matrix& m, std::span<const std::size_t> rows,
                 std::span<const std::size_t> cols);

}  // namespace supergrading
