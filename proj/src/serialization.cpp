#include "supergrading/serialization.hpp"

#include <stdexcept>

namespace supergrading {

namespace {

std::string parity_string(Parity p) { return std::string(1, parity_sign(p)); }

Parity parity_from(const Json& j) {
  const std::string s = j.get<std::string>();
  if (s == "+") return Parity::even;
  if (s == "-") return Parity::odd;
  throw std::invalid_argument("parity must be \"+\" or \"-\", got \"" + s + "\"");
}

Partition partition_from(const Json& j) {
  Partition r = j.get<Partition>();
  if (!is_partition(r)) throw std::invalid_argument("not a partition: " + j.dump());
  return r;
}

const char* provenance_name(Provenance p) { return p == Provenance::pyramid ? "pyramid" : "shift-vector"; }

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

Json to_json(const SuperPartition& sp) { return Json{{"p", sp.p}, {"q", sp.q}}; }

SuperPartition super_partition_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("orbit must be an object {\"p\":[...],\"q\":[...]}");
  SuperPartition sp;
  if (j.contains("p")) sp.p = partition_from(j.at("p"));
  if (j.contains("q")) sp.q = partition_from(j.at("q"));
  return sp;
}

Json to_json(const Pyramid& pyr) {
  Json rows = Json::array();
  for (const auto& row : pyr.rows) {
    rows.push_back(Json{{"len", row.length}, {"parity", parity_string(row.parity)}, {"f", row.first}});
  }
  return Json{{"rows", rows}};
}

Pyramid pyramid_from_json(const Json& j) {
  Pyramid pyr;
  for (const auto& row : j.at("rows")) {
    pyr.rows.push_back({row.at("len").get<int>(), parity_from(row.at("parity")), row.at("f").get<int>()});
  }
  return pyr;
}

Json to_json(const OspPyramid& pyr) {
  Json boxes = Json::array();
  for (const auto& b : pyr.boxes) {
    boxes.push_back(Json{{"x", b.x}, {"y", b.y}, {"parity", parity_string(b.parity)}, {"label", b.label}});
  }
  return Json{{"boxes", boxes}};
}

Json to_json(const Grading& g) {
  Json h = Json::array();
  for (const auto& v : g.h()) h.push_back(to_json(v));
  Json degrees = Json::object();
  const auto basis = g.ambient()->basis();
  for (std::size_t i = 0; i < basis.size(); ++i) degrees[basis[i].name] = g.degree(i);
  return Json{{"H", h}, {"degrees", degrees}};
}

Grading grading_from_json(RealizationPtr r, const Json& j) {
  const Json& h = j.is_object() ? j.at("H") : j;
  if (!h.is_array()) throw std::invalid_argument("H must be an array");
  Vector diag;
  for (const auto& v : h) diag.push_back(rational_from_json(v));
  if (diag.size() != r->size()) {
    throw std::invalid_argument("H has " + std::to_string(diag.size()) + " entries, expected " +
                                std::to_string(r->size()));
  }
  return grading_from(std::move(r), diag);
}

Json to_json(const MarkedBase& b) {
  Json simple = Json::array();
  for (const auto& r : b.simple) simple.push_back(r.coeffs);
  return Json{{"simple", simple}, {"marks", b.marks}};
}

MarkedBase marked_base_from_json(const RootSystem& rs, const Json& j) {
  MarkedBase b;
  for (const auto& c : j.at("simple")) {
    auto coeffs = c.get<std::vector<int>>();
    auto root = rs.find(coeffs);
    if (!root) throw std::invalid_argument("not a root: " + c.dump());
    b.simple.push_back(*root);
  }
  b.marks = j.at("marks").get<std::vector<int>>();
  if (b.marks.size() != b.simple.size()) throw std::invalid_argument("marks and simple roots differ in length");
  return b;
}

Json to_json(const GoodGradingSet& set) {
  Json members = Json::array();
  for (const auto& rec : set.members) {
    Json m = to_json(rec.grading);
    m["provenance"] = provenance_name(rec.provenance);
    if (rec.pyramid) m["pyramid"] = to_json(*rec.pyramid);
    if (!rec.shift.empty()) {
      Json s = Json::array();
      for (const auto& v : rec.shift) s.push_back(to_json(v));
      m["shift"] = s;
    }
    members.push_back(std::move(m));
  }
  return Json{{"algebra", set.ambient->name()},
              {"orbit", to_json(set.orbit)},
              {"count", set.size()},
              {"gradings", members}};
}

Json to_json(const OspClassification& c) {
  Json j = to_json(c.gradings);
  j["case"] = c.shift_case;
  j["oracle_used"] = c.oracle_used;
  j["closed_form_count"] = c.closed_form.size();
  if (c.closed_form_matches_oracle) {
    j["oracle_agreement"] = *c.closed_form_matches_oracle;
  } else {
    j["oracle_agreement"] = nullptr;
  }
  return j;
}

}  // namespace supergrading
