#include <doctest.h>

#include "supergrading/errors.hpp"
#include "supergrading/partitions.hpp"

using namespace supergrading;

TEST_CASE("super partition enumeration") {
  CHECK(enumerate_super_partitions(1, 1) == std::vector<SuperPartition>{{{1}, {1}}});
  CHECK(enumerate_super_partitions(2, 1).size() == 2);
  CHECK(enumerate_super_partitions(4, 6).size() == 55);
  CHECK(partitions_of(4).front() == Partition{4});
  CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
  CHECK(partitions_of(0) == std::vector<Partition>{{}});
}

TEST_CASE("orthosymplectic partitions") {
  CHECK(is_orthosymplectic({{5, 3, 1}, {3, 3}}));
  CHECK_FALSE(is_orthosymplectic({{2}, {2}}));
  CHECK(is_orthosymplectic({{1, 1}, {2}}));
  CHECK_THROWS_AS(require_orthosymplectic({{2}, {2}}), NotOrthosymplectic);
  for (const auto& sp : enumerate_orthosymplectic(4, 2)) {
    CHECK(is_orthosymplectic(sp));
    CHECK(sp.m() == 4);
    CHECK(sp.n() == 4);
  }
}

TEST_CASE("dual partition") {
  CHECK(dual_partition({4, 3, 2, 1}) == Partition{4, 3, 2, 1});
  CHECK(dual_partition({3}) == Partition{1, 1, 1});
  CHECK(dual_partition({2, 2}) == Partition{2, 2});
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : partitions_of(n)) CHECK(dual_partition(dual_partition(p)) == p);
  }
}

TEST_CASE("merge with parity tags") {
  using P = Parity;
  CHECK(psi_merge({{3, 1}, {4, 2}}) ==
        std::vector<TaggedPart>{{4, P::odd}, {3, P::even}, {2, P::odd}, {1, P::even}});
  CHECK(psi_merge({{2}, {2}}) == std::vector<TaggedPart>{{2, P::even}, {2, P::odd}});
  CHECK(psi_merge({{}, {3}}) == std::vector<TaggedPart>{{3, P::odd}});
}

TEST_CASE("shift parts") {
  auto a = cp_dq({{3, 3}, {4}});
  CHECK(a.c == std::vector<int>{3});
  CHECK(a.d.empty());
  auto b = cp_dq({{5, 3, 1}, {3, 3}});
  CHECK(b.c.empty());
  CHECK(b.d.empty());
  auto c = cp_dq({{1, 1}, {2, 2}});
  CHECK(c.c == std::vector<int>{1});
  CHECK(c.d == std::vector<int>{2});
}

TEST_CASE("part grouping") {
  auto g = part_grouping({{3, 3, 1}, {3, 2}});
  REQUIRE(g.size() == 3);
  CHECK(g[0].part == 3);
  CHECK(g[0].m == 2);
  CHECK(g[0].n == 1);
  CHECK(g[2].part == 1);
}
