#include <doctest.h>

#include "supergrading/errors.hpp"
#include "supergrading/gradings.hpp"
#include "supergrading/pyramids.hpp"

using namespace supergrading;

namespace {

ElementPair dynkin_gl(const SuperPartition& sp) {
  return realize_pyramid(dynkin_pyramid(sp), build_gl(sp.m(), sp.n()));
}

std::size_t basis_index(const Realization& r, int i, int j) {
  const Vector c = r.coordinates(r.unit(i, j));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) return k;
  }
  return c.size();
}

}  // namespace

TEST_CASE("grading from H") {
  auto r = build_gl(2, 0);
  const Vector zero(2);
  const Grading flat = grading_from(r, zero);
  for (int d : flat.degrees()) CHECK(d == 0);
  const Vector h{-1, 1};
  const Grading g = grading_from(r, h);
  CHECK(g.degree(basis_index(*r, 1, 2)) == -2);
  CHECK(g.degree(basis_index(*r, 2, 1)) == 2);
  CHECK(g.degree(basis_index(*r, 1, 1)) == 0);
  const Vector half{ratio(1, 2), 0};
  CHECK_THROWS_AS(grading_from(r, half), NonIntegralGrading);
  CHECK_FALSE(try_grading_from(r, half));
  CHECK(g.is_even());
}

TEST_CASE("half-integer osp shifts") {
  auto r = build_osp(6, 2);
  const OspPyramid p = dynkin_pyramid_osp({{3, 3}, {4}});
  const auto pair = realize_osp_pyramid(p, r);
  const Vector s{ratio(1, 2)};
  const Vector none;
  Vector diag = pair.h.matrix.diagonal();
  const Matrix z = shift_matrix(r, p, s, none).matrix;
  for (std::size_t i = 0; i < diag.size(); ++i) diag[i] += z(i, i);
  CHECK_THROWS_AS(grading_from(r, diag), NonIntegralGrading);
}

TEST_CASE("centralizer dimensions") {
  auto r = build_gl(1, 1);
  const auto rep = centralizer(r, make_element(r, Matrix(2, 2)));
  CHECK(rep.even_dim == 2);
  CHECK(rep.odd_dim == 2);

  const SuperPartition sp{{3, 1}, {4, 2}};
  const auto pair = dynkin_gl(sp);
  const auto c = centralizer(pair.e.ambient, pair.e);
  CHECK(c.even_dim == 16);
  CHECK(c.odd_dim == 14);
  CHECK(dim_formula_gl(sp) == Dims{16, 14});
  CHECK(dim_formula_gl({{1}, {1}}) == Dims{2, 2});

  auto o = build_osp(9, 3);
  const auto op = realize_osp_pyramid(dynkin_pyramid_osp({{5, 3, 1}, {3, 3}}), o);
  CHECK(centralizer(o, op.e).odd_dim == 14);
  CHECK(dim_formula_osp({{5, 3, 1}, {3, 3}}).odd == 14);
  CHECK(dim_formula_osp({{1}, {2}}) == Dims{1, 1});
  CHECK(dim_formula_osp_even_literal({{1}, {2}}) == ratio(1, 2));

  auto o2 = build_osp(6, 2);
  const auto p2 = realize_osp_pyramid(dynkin_pyramid_osp({{3, 3}, {4}}), o2);
  const auto c2 = centralizer(o2, p2.e);
  const Dims f2 = dim_formula_osp({{3, 3}, {4}});
  CHECK(static_cast<long>(c2.even_dim) == f2.even);
  CHECK(static_cast<long>(c2.odd_dim) == f2.odd);
}

TEST_CASE("sl2 completion") {
  auto r = build_gl(2, 0);
  const auto e = make_element(r, r->unit(1, 2));
  const auto h = make_element(r, Matrix::diagonal(Vector{1, -1}));
  const auto s = complete_sl2(r, e, h);
  CHECK(s.f.matrix == r->unit(2, 1));

  const auto z = make_element(r, Matrix(2, 2));
  CHECK(complete_sl2(r, z, z).f.matrix.is_zero());
  const auto wrong = make_element(r, Matrix::diagonal(Vector{2, -2}));
  CHECK_THROWS_AS(complete_sl2(r, e, wrong), NotCompletable);

  const auto pair = dynkin_gl({{3, 1}, {4, 2}});
  const auto t = complete_sl2(pair.e.ambient, pair.e, pair.h);
  CHECK(superbracket(t.e, t.f).matrix == t.h.matrix);
  Matrix minus_two_f(t.f.matrix.rows(), t.f.matrix.cols());
  minus_two_f -= t.f.matrix;
  minus_two_f -= t.f.matrix;
  CHECK(superbracket(t.h, t.f).matrix == minus_two_f);
}

TEST_CASE("s-centralizer factors") {
  const SuperPartition sp{{3, 1}, {4, 2}};
  const auto pair = dynkin_gl(sp);
  const auto r = pair.e.ambient;
  const auto sc = s_centralizer(r, complete_sl2(r, pair.e, pair.h));
  long predicted = 0;
  for (const auto& b : predicted_s_centralizer(AlgebraKind::gl, sp)) predicted += b.dim();
  CHECK(predicted == 4);
  CHECK(sc.basis.size() == 4);

  const auto one = dynkin_gl({{1}, {1}});
  const auto sc1 = s_centralizer(one.e.ambient, complete_sl2(one.e.ambient, one.e, one.h));
  CHECK(sc1.basis.size() == 4);

  auto o = build_osp(6, 2);
  const auto op = realize_osp_pyramid(dynkin_pyramid_osp({{3, 3}, {4}}), o);
  const auto sco = s_centralizer(o, complete_sl2(o, op.e, op.h));
  long po = 0;
  for (const auto& b : predicted_s_centralizer(AlgebraKind::osp, {{3, 3}, {4}})) po += b.dim();
  CHECK(static_cast<long>(sco.basis.size()) == po);
  for (const auto& x : sco.basis) CHECK(superbracket(op.h, x).matrix.is_zero());
}

TEST_CASE("goodness") {
  auto r = build_gl(1, 1);
  const auto zero = make_element(r, Matrix(2, 2));
  CHECK(is_good(grading_from(r, Vector(2)), zero));

  auto g = build_gl(2, 0);
  const auto e = make_element(g, g->unit(1, 2));
  CHECK(is_good(grading_from(g, Vector{3, 1}), e));
  CHECK_FALSE(is_good(grading_from(g, Vector{4, 0}), e));

  const SuperPartition sp{{3, 1}, {4, 2}};
  auto big = build_gl(4, 6);
  for (const auto& p : enumerate_pyr(sp)) {
    auto q = realize_pyramid(p, big);
    GoodnessChecker checker(big, q.e);
    const auto v = checker.check(grading_from(q.h));
    CHECK(v.good());
    CHECK(v.rank_criterion);
  }
}

TEST_CASE("Richardson test") {
  auto r = build_gl(2, 0);
  const auto zero = make_element(r, Matrix(2, 2));
  CHECK(is_richardson(grading_from(r, Vector(2)), zero));
  const auto pair = dynkin_gl({{2}, {}});
  CHECK(is_richardson(grading_from(pair.h), pair.e));
  const auto odd = dynkin_gl({{2}, {1}});
  const Vector h{-1, 1, 0};
  CHECK_THROWS_AS(is_richardson(grading_from(odd.e.ambient, h), odd.e), OddGrading);
}

TEST_CASE("graded pieces are orthogonal") {
  for (const auto& p : enumerate_pyr({{3, 1}, {4, 2}})) {
    auto q = realize_pyramid(p, build_gl(4, 6));
    CHECK(form_violations(grading_from(q.h)) == 0);
  }
}
