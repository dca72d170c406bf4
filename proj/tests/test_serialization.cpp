#include <doctest.h>

#include "supergrading/serialization.hpp"

using namespace supergrading;

TEST_CASE("rationals as strings") {
  CHECK(to_json(ratio(-3, 2)) == Json("-3/2"));
  CHECK(rational_from_json(Json("5/10")) == ratio(1, 2));
  CHECK(rational_from_json(Json(3)) == 3);
}

TEST_CASE("partition round trip") {
  const SuperPartition sp{{3, 1}, {4, 2}};
  CHECK(to_json(sp).dump() == R"({"p":[3,1],"q":[4,2]})");
  CHECK(super_partition_from_json(to_json(sp)) == sp);
  CHECK_THROWS(super_partition_from_json(Json::parse(R"({"p":[1,3]})")));
}

TEST_CASE("pyramid round trip") {
  for (const auto& p : enumerate_pyr({{3, 1}, {4, 2}})) CHECK(pyramid_from_json(to_json(p)) == p);
  CHECK(to_json(dynkin_pyramid({{2}, {}})).dump() == R"({"rows":[{"len":2,"parity":"+","f":-1}]})");
}

TEST_CASE("grading round trip") {
  auto r = build_gl(2, 0);
  const Grading g = grading_from(r, Vector{ratio(1, 2), ratio(-3, 2)});
  const Json j = to_json(g);
  CHECK(j["H"].dump() == R"(["1/2","-3/2"])");
  CHECK(j["degrees"]["E_{1,2}"] == 2);
  CHECK(grading_from_json(r, j).degrees() == g.degrees());
}

TEST_CASE("marked base round trip") {
  const auto rs = build_roots(AlgebraKind::gl, 2, 1);
  const MarkedBase b = mark(standard_base(rs), DegreeMap{{2, 0, -1}});
  const Json j = to_json(b);
  CHECK(j.dump() == R"({"simple":[[1,-1,0],[0,1,-1]],"marks":[2,1]})");
  CHECK(marked_base_from_json(rs, j) == b);
}

TEST_CASE("classification report") {
  const Json j = to_json(classify_osp({{3, 3}, {4}}, true));
  CHECK(j["count"] == 3);
  CHECK(j["oracle_agreement"] == true);
  CHECK(j["gradings"].size() == 3);
  CHECK(j["gradings"][0]["provenance"] == "shift-vector");
}
