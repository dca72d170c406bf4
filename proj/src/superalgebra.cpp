#include "supergrading/superalgebra.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "supergrading/errors.hpp"

namespace supergrading {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::string describe(const Realization& r, const Matrix& x) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const Rational& v = x(i, j);
      if (v == 0) continue;
      if (v < 0) {
        out << '-';
      } else if (!first) {
        out << '+';
      }
      Rational a = abs(v);
      if (a != 1) out << a.get_str();
      out << "E_{" << r.label(i) << ',' << r.label(j) << '}';
      first = false;
    }
  }
  return first ? "0" : out.str();
}

BasisElement make_basis_element(const Realization& r, Matrix m, Parity parity) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) {
        std::string name = describe(r, m);
        return {std::move(m), parity, std::move(name), i, j};
      }
    }
  }
  throw std::logic_error("zero basis element");
}

}  // namespace

std::shared_ptr<const Realization> Realization::gl(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("gl(m|n) needs m, n >= 0 and m + n >= 1");
  std::shared_ptr<Realization> r(new Realization());
  r->kind_ = AlgebraKind::gl;
  r->m_ = m;
  r->n_ = n;
  const std::size_t size = static_cast<std::size_t>(m + n);
  r->label_index_.assign(size + 1, npos);
  for (std::size_t i = 0; i < size; ++i) {
    r->index_parity_.push_back(static_cast<int>(i) < m ? Parity::even : Parity::odd);
    r->labels_.push_back(static_cast<int>(i) + 1);
    r->label_index_[i + 1] = i;
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      Matrix e(size, size);
      e(i, j) = 1;
      Parity p = r->index_parity_[i] + r->index_parity_[j];
      r->basis_.push_back(make_basis_element(*r, std::move(e), p));
    }
  }
  return r;
}

std::shared_ptr<const Realization> Realization::osp(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("osp(m|2n) needs m >= 1 and n >= 1");
  std::shared_ptr<Realization> r(new Realization());
  r->kind_ = AlgebraKind::osp;
  r->m_ = m;
  r->n_ = n;
  const int k = m / 2;
  const bool has_zero = m % 2 == 1;
  const std::size_t size = static_cast<std::size_t>(m + 2 * n);

  auto push = [&](int label, Parity p) {
    r->labels_.push_back(label);
    r->index_parity_.push_back(p);
  };
  if (has_zero) push(0, Parity::even);
  for (int i = 1; i <= k; ++i) push(i, Parity::even);
  for (int i = 1; i <= k; ++i) push(-i, Parity::even);
  for (int i = k + 1; i <= k + n; ++i) push(i, Parity::odd);
  for (int i = k + 1; i <= k + n; ++i) push(-i, Parity::odd);

  r->label_index_.assign(static_cast<std::size_t>(2 * (k + n) + 1), npos);
  for (std::size_t i = 0; i < size; ++i) {
    r->label_index_[static_cast<std::size_t>(r->labels_[i] + k + n)] = i;
  }

  Matrix phi(size, size);
  if (has_zero) phi(r->index_of(0), r->index_of(0)) = 2;
  for (int i = 1; i <= k + n; ++i) {
    phi(r->index_of(i), r->index_of(-i)) = 1;
    phi(r->index_of(-i), r->index_of(i)) = i <= k ? 1 : -1;
  }
  r->phi_ = phi;

  auto add_even = [&](std::initializer_list<std::tuple<int, int, int>> terms) {
    Matrix x(size, size);
    for (auto [a, b, c] : terms) x(r->index_of(a), r->index_of(b)) += c;
    r->basis_.push_back(make_basis_element(*r, std::move(x), Parity::even));
  };

  if (has_zero) {
    for (int i = 1; i <= k; ++i) {
      add_even({{i, 0, 2}, {0, -i, -1}});
      add_even({{0, i, 1}, {-i, 0, -2}});
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      add_even({{i, -j, 1}, {j, -i, -1}});
      add_even({{-j, i, 1}, {-i, j, -1}});
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) add_even({{i, j, 1}, {-j, -i, -1}});
  }
  for (int i = k + 1; i <= k + n; ++i) {
    for (int j = k + 1; j <= k + n; ++j) add_even({{i, j, 1}, {-j, -i, -1}});
  }
  for (int i = k + 1; i <= k + n; ++i) {
    add_even({{i, -i, 1}});
    add_even({{-i, i, 1}});
  }
  for (int i = k + 1; i <= k + n; ++i) {
    for (int j = i + 1; j <= k + n; ++j) {
      add_even({{i, -j, 1}, {j, -i, 1}});
      add_even({{-i, j, 1}, {-j, i, 1}});
    }
  }

  // Odd part: kernel of the membership equations on the off-diagonal blocks.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (r->index_parity_[a] != r->index_parity_[b]) unknowns.emplace_back(a, b);
    }
  }
  Matrix eqs(size * size, unknowns.size());
  for (std::size_t u = 0; u < size; ++u) {
    const int sign = r->index_parity_[u] == Parity::odd ? -1 : 1;
    for (std::size_t v = 0; v < size; ++v) {
      const std::size_t row = u * size + v;
      for (std::size_t c = 0; c < unknowns.size(); ++c) {
        auto [a, b] = unknowns[c];
        // phi(x u, v) picks x_{a u} phi_{a v}; phi(u, x v) picks phi_{u a} x_{a v}.
        if (b == u && phi(a, v) != 0) eqs(row, c) += phi(a, v);
        if (b == v && phi(u, a) != 0) eqs(row, c) += sign * phi(u, a);
      }
    }
  }
  for (const auto& vec : kernel_basis(eqs)) {
    Matrix x(size, size);
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      if (vec[c] != 0) x(unknowns[c].first, unknowns[c].second) = vec[c];
    }
    r->basis_.push_back(make_basis_element(*r, std::move(x), Parity::odd));
  }

  r->assign_pivots();
  return r;
}

void Realization::assign_pivots() {
  auto exclusive = [&](std::size_t owner, std::size_t a, std::size_t b) {
    for (std::size_t t = 0; t < basis_.size(); ++t) {
      if (t != owner && basis_[t].matrix(a, b) != 0) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto& bi = basis_[i];
    if (exclusive(i, bi.pivot_row, bi.pivot_col)) continue;
    bool found = false;
    for (std::size_t a = 0; a < size() && !found; ++a) {
      for (std::size_t b = 0; b < size() && !found; ++b) {
        if (bi.matrix(a, b) != 0 && exclusive(i, a, b)) {
          bi.pivot_row = a;
          bi.pivot_col = b;
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("basis element without an exclusive entry");
  }
}

std::string Realization::name() const {
  std::ostringstream out;
  if (kind_ == AlgebraKind::gl) {
    out << "gl(" << m_ << '|' << n_ << ')';
  } else {
    out << "osp(" << m_ << '|' << 2 * n_ << ')';
  }
  return out.str();
}

std::size_t Realization::index_of(int label) const {
  if (!has_label(label)) throw std::out_of_range("no basis vector with label " + std::to_string(label));
  if (kind_ == AlgebraKind::gl) return label_index_[static_cast<std::size_t>(label)];
  return label_index_[static_cast<std::size_t>(label + k() + n_)];
}

bool Realization::has_label(int label) const {
  if (kind_ == AlgebraKind::gl) {
    return label >= 1 && label <= m_ + n_;
  }
  const int off = label + k() + n_;
  return off >= 0 && static_cast<std::size_t>(off) < label_index_.size() &&
         label_index_[static_cast<std::size_t>(off)] != npos;
}

Vector Realization::coordinates(const Matrix& x) const {
  if (x.rows() != size() || x.cols() != size()) throw SizeMismatch("matrix size does not match algebra");
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    const auto& v = x(b.pivot_row, b.pivot_col);
    if (v != 0) c[i] = v / b.matrix(b.pivot_row, b.pivot_col);
  }
  return c;
}

Matrix Realization::combine(std::span<const Rational> coords) const {
  if (coords.size() != basis_.size()) throw SizeMismatch("coordinate vector length mismatch");
  Matrix x(size(), size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) x += basis_[i].matrix * coords[i];
  }
  return x;
}

Matrix Realization::even_part(const Matrix& x) const {
  Matrix out(size(), size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (index_parity_[i] == index_parity_[j]) out(i, j) = x(i, j);
    }
  }
  return out;
}

Matrix Realization::odd_part(const Matrix& x) const {
  Matrix out(size(), size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (index_parity_[i] != index_parity_[j]) out(i, j) = x(i, j);
    }
  }
  return out;
}

Rational Realization::supertrace(const Matrix& x) const {
  Rational t;
  for (std::size_t i = 0; i < size(); ++i) {
    if (index_parity_[i] == Parity::even) {
      t += x(i, i);
    } else {
      t -= x(i, i);
    }
  }
  return t;
}

Matrix Realization::bracket(const Matrix& x, const Matrix& y) const {
  // [x, y] = xy - yx + 2 y1 x1 for the odd parts x1, y1.
  Matrix out = x * y - y * x;
  Matrix x1 = odd_part(x);
  Matrix y1 = odd_part(y);
  if (!x1.is_zero() && !y1.is_zero()) out += (y1 * x1) * Rational(2);
  return out;
}

Matrix Realization::unit(int row_label, int col_label, const Rational& value) const {
  Matrix x(size(), size());
  x(index_of(row_label), index_of(col_label)) = value;
  return x;
}

RealizationPtr build_gl(int m, int n) { return Realization::gl(m, n); }
RealizationPtr build_osp(int m, int n) { return Realization::osp(m, n); }

AlgebraElement make_element(RealizationPtr r, Matrix m) {
  if (m.rows() != r->size() || m.cols() != r->size()) throw SizeMismatch("matrix size does not match algebra");
  if (!is_member(*r, m)) throw MembershipFailure("matrix is not in " + r->name());
  return {std::move(r), std::move(m)};
}

AlgebraElement basis_element(RealizationPtr r, std::size_t i) {
  Matrix m = r->basis(i).matrix;
  return {std::move(r), std::move(m)};
}

AlgebraElement superbracket(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.ambient != y.ambient) throw AmbientMismatch();
  return {x.ambient, x.ambient->bracket(x.matrix, y.matrix)};
}

Rational invariant_form(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.ambient != y.ambient) throw AmbientMismatch();
  return x.ambient->supertrace(x.matrix * y.matrix);
}

bool is_member_osp(const Realization& r, const Matrix& x, Parity parity) {
  if (r.kind() != AlgebraKind::osp) throw std::invalid_argument("is_member_osp needs an osp realization");
  const std::size_t size = r.size();
  if (x.rows() != size || x.cols() != size) return false;
  Matrix wrong = parity == Parity::even ? r.odd_part(x) : r.even_part(x);
  if (!wrong.is_zero()) return false;

  const Matrix& phi = r.phi();
  Matrix left = x.transpose() * phi;  // (u, v) -> phi(x u, v)
  Matrix right = phi * x;             // (u, v) -> phi(u, x v)
  for (std::size_t u = 0; u < size; ++u) {
    const bool flip = parity == Parity::odd && r.index_parity(u) == Parity::odd;
    for (std::size_t v = 0; v < size; ++v) {
      Rational s = flip ? Rational(left(u, v) - right(u, v)) : Rational(left(u, v) + right(u, v));
      if (s != 0) return false;
    }
  }
  return true;
}

bool is_member(const Realization& r, const Matrix& x) {
  if (x.rows() != r.size() || x.cols() != r.size()) return false;
  if (r.kind() == AlgebraKind::gl) return true;
  return is_member_osp(r, r.even_part(x), Parity::even) && is_member_osp(r, r.odd_part(x), Parity::odd);
}

Matrix adjoint_matrix(const AlgebraElement& x) {
  const Realization& r = *x.ambient;
  Matrix ad(r.dim(), r.dim());
  for (std::size_t j = 0; j < r.dim(); ++j) {
    Vector c = r.coordinates(r.bracket(x.matrix, r.basis(j).matrix));
    for (std::size_t i = 0; i < r.dim(); ++i) {
      if (c[i] != 0) ad(i, j) = c[i];
    }
  }
  return ad;
}

Matrix parity_block(const Realization& r, const Matrix& x, Parity p) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.index_parity(i) == p) idx.push_back(i);
  }
  return submatrix(x, idx, idx);
}

std::vector<int> nilpotent_jordan_type(const Matrix& x) {
  const std::size_t n = x.rows();
  if (n == 0) return {};
  // at_least[j] = number of blocks of size >= j = rank(x^{j-1}) - rank(x^j).
  std::vector<std::size_t> ranks{n};
  Matrix power = x;
  while (ranks.back() != 0) {
    ranks.push_back(rank(power));
    if (ranks.size() > n + 1) throw std::domain_error("matrix is not nilpotent");
    power = power * x;
  }
  std::vector<int> type;
  for (std::size_t j = ranks.size() - 1; j >= 1; --j) {
    std::size_t at_least = ranks[j - 1] - ranks[j];
    std::size_t longer = j + 1 < ranks.size() ? ranks[j] - ranks[j + 1] : 0;
    for (std::size_t c = 0; c < at_least - longer; ++c) type.push_back(static_cast<int>(j));
  }
  return type;
}

}  // namespace supergrading
