#include <doctest.h>

#include <algorithm>

#include "supergrading/errors.hpp"
#include "supergrading/pyramids.hpp"

using namespace supergrading;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t c = 0;
  for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++c;
  return c;
}

bool centrally_symmetric(const OspPyramid& p) {
  return std::all_of(p.boxes.begin(), p.boxes.end(), [&](const OspBox& b) {
    const OspBox* m = p.box_at(-b.x, -b.y);
    return m && m->parity == b.parity && m->label == -b.label;
  });
}

}  // namespace

TEST_CASE("pyramid enumeration") {
  CHECK(enumerate_pyr({{1}, {1}}).size() == 1);
  CHECK(enumerate_pyr({{3, 1}, {4, 2}}).size() == 27);
  CHECK(enumerate_pyr({{2, 2}, {}}).size() == 1);
  for (const auto& p : enumerate_pyr({{3, 1}, {4, 2}})) {
    CHECK(p.is_valid());
    CHECK(p.even_boxes() == 4);
    CHECK(p.odd_boxes() == 6);
  }
  const Pyramid d = dynkin_pyramid({{3, 1}, {4, 2}});
  for (const auto& row : d.rows) CHECK(row.first == -row.last());
}

TEST_CASE("realize gl pyramid") {
  auto r = build_gl(2, 0);
  auto pair = realize_pyramid(dynkin_pyramid({{2}, {}}), r);
  // the box at x=-1 moves to the box at x=1
  CHECK(pair.e.matrix == Matrix{{0, 0}, {1, 0}});
  CHECK(pair.h.matrix == Matrix{{-1, 0}, {0, 1}});
  Matrix he = superbracket(pair.h, pair.e).matrix;
  Matrix two_e = pair.e.matrix;
  two_e += pair.e.matrix;
  CHECK(he == two_e);

  auto s = build_gl(1, 1);
  auto zero = realize_pyramid(dynkin_pyramid({{1}, {1}}), s);
  CHECK(zero.e.matrix.is_zero());
  CHECK(zero.h.matrix.is_zero());

  auto big = build_gl(4, 6);
  for (const auto& p : enumerate_pyr({{3, 1}, {4, 2}})) {
    auto q = realize_pyramid(p, big);
    CHECK(nilpotent_jordan_type(parity_block(*big, q.e.matrix, Parity::even)) == Partition{3, 1});
    CHECK(nilpotent_jordan_type(parity_block(*big, q.e.matrix, Parity::odd)) == Partition{4, 2});
    Matrix hq = superbracket(q.h, q.e).matrix;
    Matrix eq = q.e.matrix;
    eq += q.e.matrix;
    CHECK(hq == eq);
  }
  CHECK_THROWS_AS(realize_pyramid(dynkin_pyramid({{2}, {}}), s), SizeMismatch);
}

TEST_CASE("orthosymplectic pyramid shapes") {
  const OspPyramid a = dynkin_pyramid_osp({{5, 3, 1}, {3, 3}});
  CHECK(a.boxes.size() == 15);
  CHECK(centrally_symmetric(a));
  REQUIRE(!a.rows.empty());
  CHECK(a.rows[0].kind == OspRowKind::zeroth);
  CHECK(a.rows[0].columns.size() == 5);
  CHECK(a.rows[1].kind == OspRowKind::even_skew);
  CHECK(a.rows[1].columns == std::vector<int>{0, 2});

  const OspPyramid b = dynkin_pyramid_osp({{4, 4, 1}, {6}});
  CHECK(b.boxes.size() == 15);
  CHECK(centrally_symmetric(b));
  auto skew = std::find_if(b.rows.begin(), b.rows.end(), [](const OspRow& r) { return r.kind == OspRowKind::odd_skew; });
  REQUIRE(skew != b.rows.end());
  CHECK(skew->columns.size() == 3);

  const OspPyramid c = dynkin_pyramid_osp({{1}, {2}});
  REQUIRE(c.boxes.size() == 3);
  REQUIRE(c.box_at(0, 0));
  CHECK(c.box_at(0, 0)->parity == Parity::even);
  REQUIRE(c.box_at(1, 2));
  CHECK(c.box_at(1, 2)->parity == Parity::odd);
  CHECK(c.box_at(-1, -2));

  CHECK_THROWS_AS(dynkin_pyramid_osp({{2}, {2}}), NotOrthosymplectic);
}

TEST_CASE("realize orthosymplectic pyramid") {
  for (auto [sp, m, n] : {std::tuple{SuperPartition{{1, 1}, {2}}, 2, 1}, {SuperPartition{{3, 3}, {4}}, 6, 2},
                          {SuperPartition{{5, 1}, {2, 2}}, 6, 2}, {SuperPartition{{5, 3, 1}, {3, 3}}, 9, 3},
                          {SuperPartition{{4, 4, 1}, {6}}, 9, 3}}) {
    auto r = build_osp(m, n);
    auto pair = realize_osp_pyramid(dynkin_pyramid_osp(sp), r);
    CHECK(is_member_osp(*r, pair.e.matrix, Parity::even));
    CHECK(is_member_osp(*r, pair.h.matrix, Parity::even));
    CHECK(nilpotent_jordan_type(parity_block(*r, pair.e.matrix, Parity::even)) == sp.p);
    CHECK(nilpotent_jordan_type(parity_block(*r, pair.e.matrix, Parity::odd)) == sp.q);
    Matrix he = superbracket(pair.h, pair.e).matrix;
    Matrix two_e = pair.e.matrix;
    two_e += pair.e.matrix;
    CHECK(he == two_e);
  }
}

TEST_CASE("shift matrix") {
  auto r = build_osp(6, 2);
  const OspPyramid p = dynkin_pyramid_osp({{3, 3}, {4}});
  const Vector one{1};
  const Vector zero{0};
  const Vector none;
  CHECK(shift_matrix(r, p, zero, none).matrix.is_zero());
  const Matrix z = shift_matrix(r, p, one, none).matrix;
  CHECK(z.is_diagonal());
  std::size_t plus = 0;
  std::size_t minus = 0;
  for (std::size_t i = 0; i < z.rows(); ++i) {
    plus += z(i, i) == 1;
    minus += z(i, i) == -1;
  }
  CHECK(plus == 3);
  CHECK(minus == 3);
  CHECK_THROWS_AS(shift_matrix(r, p, none, none), LengthMismatch);

  auto q = build_osp(2, 2);
  const OspPyramid pq = dynkin_pyramid_osp({{1, 1}, {2, 2}});
  auto pair = realize_osp_pyramid(pq, q);
  const auto zz = shift_matrix(q, pq, one, one);
  CHECK(superbracket(zz, pair.e).matrix.is_zero());
  CHECK(superbracket(zz, pair.h).matrix.is_zero());
}

TEST_CASE("render") {
  const std::string two = render(dynkin_pyramid({{2}, {}}));
  CHECK(count(two, "[+]") == 2);
  const std::string p = render(dynkin_pyramid({{3, 1}, {4, 2}}));
  CHECK(count(p, "[+]") == 4);
  CHECK(count(p, "[-]") == 6);
  const std::string o = render(dynkin_pyramid_osp({{5, 3, 1}, {3, 3}}), true);
  CHECK(count(o, "[+]") == 9);
  CHECK(count(o, "[-]") == 6);
  CHECK(render_svg(dynkin_pyramid({{2}, {}})).find("<svg") != std::string::npos);
}
