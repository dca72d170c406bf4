#include <doctest.h>

#include "supergrading/classification.hpp"
#include "supergrading/errors.hpp"

using namespace supergrading;

TEST_CASE("gl classification") {
  CHECK(good_gradings_gl({{1}, {1}}).size() == 1);
  CHECK(good_gradings_gl({{2, 2}, {}}).size() == 1);
  const auto set = good_gradings_gl({{3, 1}, {4, 2}});
  CHECK(set.size() == 27);
  GoodnessChecker checker(set.ambient, set.e);
  for (const auto& rec : set.members) {
    CHECK(rec.provenance == Provenance::pyramid);
    CHECK(checker.is_good(rec.grading));
  }
}

TEST_CASE("degree map deduplication") {
  auto set = good_gradings_gl({{2}, {}});
  REQUIRE(set.size() == 1);
  GradingRecord copy = set.members.front();
  CHECK_FALSE(set.insert(copy));
  // a central shift of H gives the same degree map
  Vector h = copy.grading.h();
  for (auto& x : h) x += 5;
  copy.grading = grading_from(set.ambient, h);
  CHECK_FALSE(set.insert(copy));
  CHECK(set.size() == 1);
}

TEST_CASE("brute force oracle") {
  const SuperPartition sp{{3, 1}, {4, 2}};
  OracleStats stats;
  const auto oracle = brute_force_shifts(build_gl(4, 6), sp, 4, &stats);
  CHECK(oracle.degree_maps() == good_gradings_gl(sp).degree_maps());
  CHECK(stats.disagreements == 0);
  CHECK(stats.distinct >= oracle.size());
  CHECK_THROWS(brute_force_shifts(build_gl(4, 6), sp, 3));

  const auto osp = brute_force_shifts(build_osp(6, 2), {{3, 3}, {4}}, 4);
  CHECK(osp.size() == 3);
  for (const SuperPartition& s : {SuperPartition{{2}, {1}}, SuperPartition{{1, 1}, {2}}, SuperPartition{{3}, {}}}) {
    auto r = build_gl(s.m(), s.n());
    const int b = std::max(1, max_part(s));
    CHECK(brute_force_shifts(r, s, b).degree_maps() == brute_force_shifts(r, s, b + 2).degree_maps());
  }
}

TEST_CASE("osp classification") {
  const auto a = classify_osp({{3, 3}, {4}}, true);
  CHECK(a.gradings.size() == 3);
  CHECK(a.shift_case == "even-i");
  REQUIRE(a.closed_form_matches_oracle);
  CHECK(*a.closed_form_matches_oracle);
  CHECK(good_gradings_osp({{5, 3, 1}, {3, 3}}).size() == 1);
  CHECK(good_gradings_osp({{1}, {2}}).size() == 1);
  CHECK_THROWS_AS(good_gradings_osp({{2}, {2}}), NotOrthosymplectic);

  // 1 in C(p): the oracle supplies the answer
  const auto b = classify_osp({{1, 1}, {2, 2}});
  CHECK(b.oracle_used);
  GoodnessChecker checker(b.gradings.ambient, b.gradings.e);
  for (const auto& rec : b.gradings.members) CHECK(checker.is_good(rec.grading));
}

TEST_CASE("extensions of even gradings") {
  const SuperPartition sp{{3, 1}, {4, 2}};
  const int fp[] = {-2, 0};
  const int fq[] = {-3, -1};
  const auto dyn = extensions_of_even_grading(sp, single_parity_pyramid({3, 1}, fp, Parity::even),
                                              single_parity_pyramid({4, 2}, fq, Parity::odd));
  CHECK(dyn.size() == 3);
  const int gp[] = {-2, -2};
  const int gq[] = {-3, 1};
  const auto none = extensions_of_even_grading(sp, single_parity_pyramid({3, 1}, gp, Parity::even),
                                               single_parity_pyramid({4, 2}, gq, Parity::odd));
  CHECK(none.size() == 0);

  const SuperPartition zero{{1, 1}, {1}};
  const int z2[] = {0, 0};
  const int z1[] = {0};
  CHECK(extensions_of_even_grading(zero, single_parity_pyramid({1, 1}, z2, Parity::even),
                                   single_parity_pyramid({1}, z1, Parity::odd))
            .size() == 1);
}
