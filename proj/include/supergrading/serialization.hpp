#pragma once

#include <json.hpp>

#include "supergrading/classification.hpp"
#include "supergrading/pyramids.hpp"
#include "supergrading/roots.hpp"

namespace supergrading {

using Json = nlohmann::ordered_json;

// Rationals are written as "a" or "a/b" strings.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const SuperPartition& sp);
SuperPartition super_partition_from_json(const Json& j);

// {"rows":[{"len":3,"parity":"+","f":-2},...]}, rows bottom-up.
Json to_json(const Pyramid& pyr);
Pyramid pyramid_from_json(const Json& j);

// {"boxes":[{"x":..,"y":..,"parity":"+","label":..},...]}
Json to_json(const OspPyramid& pyr);

// {"H":[...],"degrees":{"E_{1,2}":2,...}}
Json to_json(const Grading& g);
Grading grading_from_json(RealizationPtr r, const Json& j);

// {"simple":[[1,-1,0],...],"marks":[0,...]}
Json to_json(const MarkedBase& b);
MarkedBase marked_base_from_json(const RootSystem& rs, const Json& j);

Json to_json(const GoodGradingSet& set);
Json to_json(const OspClassification& c);

}  // namespace supergrading
