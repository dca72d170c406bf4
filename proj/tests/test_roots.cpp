#include <doctest.h>

#include <algorithm>

#include "supergrading/classification.hpp"
#include "supergrading/errors.hpp"
#include "supergrading/roots.hpp"

using namespace supergrading;

namespace {

std::size_t count_parity(const RootSystem& rs, Parity p) {
  return static_cast<std::size_t>(
      std::count_if(rs.roots.begin(), rs.roots.end(), [&](const Root& r) { return r.parity == p; }));
}

Root root(const RootSystem& rs, std::vector<int> c) {
  auto r = rs.find(c);
  REQUIRE(r);
  return *r;
}

}  // namespace

TEST_CASE("root systems") {
  const auto a = build_roots(AlgebraKind::gl, 1, 1);
  CHECK(a.roots.size() == 2);
  for (const auto& r : a.roots) {
    CHECK(r.parity == Parity::odd);
    CHECK(is_isotropic(a, r));
  }
  const auto b = build_roots(AlgebraKind::gl, 2, 1);
  CHECK(b.roots.size() == 6);
  CHECK(count_parity(b, Parity::even) == 2);
  CHECK(count_parity(b, Parity::odd) == 4);

  const auto c = build_roots(AlgebraKind::osp, 3, 1);
  CHECK(c.roots.size() == 10);
  for (std::vector<int> v : {std::vector<int>{1, 0}, {-1, 0}, {0, 2}, {0, -2}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1},
                             {0, 1}, {0, -1}}) {
    if (v == std::vector<int>{0, 1} || v == std::vector<int>{0, -1}) {
      CHECK(c.contains(v));
      CHECK_FALSE(is_isotropic(c, root(c, v)));
    } else {
      CHECK(c.contains(v));
    }
  }
  CHECK(is_isotropic(c, root(c, {1, -1})));
  CHECK_FALSE(is_isotropic(b, root(b, {1, -1, 0})));

  // dim g = rank + number of roots
  for (auto r : {build_gl(3, 2), build_osp(5, 2), build_osp(4, 2)}) {
    const auto rs = build_roots(*r);
    const std::size_t rank = static_cast<std::size_t>(r->kind() == AlgebraKind::gl ? r->m() + r->n() : r->k() + r->n());
    CHECK(rs.roots.size() + rank == r->dim());
  }
}

TEST_CASE("standard bases") {
  for (auto [kind, m, n] : {std::tuple{AlgebraKind::gl, 2, 1}, {AlgebraKind::gl, 3, 3}, {AlgebraKind::osp, 3, 1},
                            {AlgebraKind::osp, 4, 2}, {AlgebraKind::osp, 2, 2}}) {
    const auto rs = build_roots(kind, m, n);
    const auto base = standard_base(rs);
    CHECK(is_base(rs, base));
    CHECK(base.size() == static_cast<std::size_t>(kind == AlgebraKind::gl ? m + n - 1 : m / 2 + n));
  }
}

TEST_CASE("odd reflections") {
  const auto rs = build_roots(AlgebraKind::gl, 2, 1);
  const Root a1 = root(rs, {1, 0, -1});
  const Root a2 = root(rs, {0, -1, 1});
  const MarkedBase b{{a1, a2}, {0, 3}};
  const MarkedBase r = reflect_marked(rs, b, 0);
  CHECK(r.simple[0].coeffs == std::vector<int>{-1, 0, 1});
  CHECK(r.simple[1].coeffs == std::vector<int>{1, -1, 0});
  CHECK(r.simple[1].parity == Parity::even);
  CHECK(r.marks == std::vector<int>{0, 3});

  const MarkedBase c{{a1, a2}, {2, 5}};
  CHECK(reflect_marked(rs, c, 0).marks == std::vector<int>{-2, 7});
  CHECK(reflect_marked(rs, reflect_marked(rs, c, 0), 0) == c);
  CHECK(is_base(rs, reflect_marked(rs, c, 0).simple));
}

TEST_CASE("nonnegative bases") {
  auto r = build_gl(1, 1);
  const auto zero = find_nonnegative_base(grading_from(r, Vector(2)));
  for (int d : zero.marks) CHECK(d == 0);

  const auto g = grading_from(r, Vector{-1, 1});
  const auto b = find_nonnegative_base(g);
  REQUIRE(b.simple.size() == 1);
  CHECK(b.simple[0].coeffs == std::vector<int>{-1, 1});
  CHECK(b.marks == std::vector<int>{2});

  const auto set = good_gradings_gl({{3, 1}, {4, 2}});
  for (const auto& rec : set.members) {
    const auto c = find_nonnegative_base(rec.grading);
    for (int d : c.marks) CHECK((d >= 0 && d <= 2));
  }
}

TEST_CASE("degree maps are linear") {
  const auto set = good_gradings_gl({{3, 1}, {4, 2}});
  const auto& g = set.members.front().grading;
  const auto rs = build_roots(*g.ambient());
  const auto deg = degree_map(g);
  for (const auto& a : rs.roots) {
    std::vector<int> neg = a.coeffs;
    for (auto& x : neg) x = -x;
    CHECK(deg.degree(neg) == -deg.degree(a.coeffs));
    for (const auto& b : rs.roots) {
      std::vector<int> sum(a.coeffs.size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.coeffs[i] + b.coeffs[i];
      if (rs.contains(sum)) CHECK(deg.degree(sum) == deg.degree(a.coeffs) + deg.degree(b.coeffs));
    }
  }
}

TEST_CASE("marked equivalence") {
  const auto rs = build_roots(AlgebraKind::gl, 2, 2);
  const auto base = standard_base(rs);
  MarkedBase zero{base, std::vector<int>(base.size(), 0)};
  CHECK(marked_equivalent(rs, zero, zero));
  // all odd reflections at degree 0 stay in the class
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (!is_isotropic(rs, base[k])) continue;
    const auto r = reflect_marked(rs, zero, k);
    CHECK(marked_equivalent(rs, zero, r));
    CHECK(marked_equivalent(rs, r, zero));
  }

  // no degree-zero isotropic simple root: a single diagram
  MarkedBase rigid{base, {}};
  for (const auto& s : base) rigid.marks.push_back(is_isotropic(rs, s) ? 1 : 0);
  CHECK(equivalence_class(rs, rigid).size() == 1);

  MarkedBase other = rigid;
  other.marks.assign(base.size(), 2);
  CHECK_FALSE(marked_equivalent(rs, rigid, other));
  CHECK(same_marked_diagram(rs, rigid, rigid));
}
