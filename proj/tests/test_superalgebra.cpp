#include <doctest.h>

#include "supergrading/errors.hpp"
#include "supergrading/superalgebra.hpp"

using namespace supergrading;

namespace {

std::size_t count_parity(const Realization& r, Parity p) {
  std::size_t c = 0;
  for (const auto& b : r.basis()) c += b.parity == p;
  return c;
}

AlgebraElement el(const RealizationPtr& r, int i, int j) { return make_element(r, r->unit(i, j)); }

}  // namespace

TEST_CASE("gl realization") {
  auto g11 = build_gl(1, 1);
  CHECK(g11->dim() == 4);
  CHECK(count_parity(*g11, Parity::even) == 2);
  CHECK(count_parity(*g11, Parity::odd) == 2);
  auto g21 = build_gl(2, 1);
  CHECK(g21->dim() == 9);
  CHECK(g21->name() == "gl(2|1)");
  const auto idx = g21->coordinates(g21->unit(1, 3));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] != 0) CHECK(g21->basis(i).parity == Parity::odd);
  }
  CHECK(build_gl(0, 2)->dim() == 4);
  CHECK_THROWS(build_gl(0, 0));
}

TEST_CASE("osp realization") {
  auto a = build_osp(1, 1);
  CHECK(count_parity(*a, Parity::even) == 3);
  CHECK(count_parity(*a, Parity::odd) == 2);
  auto b = build_osp(2, 1);
  CHECK(count_parity(*b, Parity::even) == 4);
  CHECK(count_parity(*b, Parity::odd) == 4);
  CHECK(b->name() == "osp(2|2)");
  auto c = build_osp(3, 1);
  for (const auto& x : c->basis()) CHECK(is_member_osp(*c, x.matrix, x.parity));
  auto d = build_osp(5, 2);
  // so(5) + sp(4) + 5*4
  CHECK(d->dim() == 10 + 10 + 20);
}

TEST_CASE("osp membership") {
  auto r = build_osp(2, 1);
  CHECK(is_member_osp(*r, Matrix(4, 4), Parity::even));
  CHECK_FALSE(is_member_osp(*r, Matrix::identity(4), Parity::even));
  CHECK_THROWS_AS(make_element(r, Matrix::identity(4)), MembershipFailure);
}

TEST_CASE("superbracket") {
  auto g = build_gl(2, 0);
  CHECK(superbracket(el(g, 1, 2), el(g, 2, 1)).matrix == Matrix{{1, 0}, {0, -1}});
  auto h = build_gl(2, 1);
  CHECK(superbracket(el(h, 1, 3), el(h, 3, 1)).matrix == Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  const auto x = el(h, 1, 2);
  CHECK(superbracket(x, x).matrix.is_zero());
  CHECK_THROWS_AS(superbracket(el(g, 1, 2), el(h, 1, 2)), AmbientMismatch);
}

TEST_CASE("invariant form") {
  auto g = build_gl(2, 0);
  CHECK(invariant_form(el(g, 1, 2), el(g, 2, 1)) == 1);
  auto h = build_gl(1, 1);
  CHECK(invariant_form(el(h, 1, 1), el(h, 2, 2)) == 0);
  for (auto r : {build_gl(2, 1), build_osp(3, 1)}) {
    for (std::size_t i = 0; i < r->dim(); ++i) {
      for (std::size_t j = 0; j < r->dim(); ++j) {
        const auto x = basis_element(r, i);
        const auto y = basis_element(r, j);
        const int sign = r->basis(i).parity == Parity::odd && r->basis(j).parity == Parity::odd ? -1 : 1;
        CHECK(invariant_form(x, y) - sign * invariant_form(y, x) == 0);
      }
    }
  }
}

TEST_CASE("adjoint matrix") {
  auto g = build_gl(2, 1);
  CHECK(adjoint_matrix(make_element(g, Matrix(3, 3))).is_zero());
  const auto h = make_element(g, Matrix::diagonal(Vector{3, 1, -2}));
  const Matrix ad = adjoint_matrix(h);
  CHECK(ad.is_diagonal());
  for (std::size_t j = 0; j < g->dim(); ++j) {
    const auto& b = g->basis(j);
    CHECK(ad(j, j) == h.matrix(b.pivot_row, b.pivot_row) - h.matrix(b.pivot_col, b.pivot_col));
  }
}

TEST_CASE("nilpotent Jordan type") {
  Matrix j(4, 4);
  j(0, 1) = 1;
  j(1, 2) = 1;
  CHECK(nilpotent_jordan_type(j) == std::vector<int>{3, 1});
  CHECK(nilpotent_jordan_type(Matrix(2, 2)) == std::vector<int>{1, 1});
}
