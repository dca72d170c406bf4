#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "supergrading/gradings.hpp"
#include "supergrading/pyramids.hpp"

namespace supergrading {

enum class Provenance { pyramid, shift_vector };

struct GradingRecord {
  Grading grading;
  Provenance provenance;
  std::optional<Pyramid> pyramid;
  // Oracle members: the diagonal of z = H - h. Closed-form osp members: (s, t).
  Vector shift;
};

struct GoodGradingSet {
  SuperPartition orbit;
  RealizationPtr ambient;
  AlgebraElement e;
  std::vector<GradingRecord> members;

  std::size_t size() const { return members.size(); }
  std::set<std::vector<int>> degree_maps() const;
  bool contains(const std::vector<int>& degrees) const;
  // False (and nothing stored) when the degree map is already present.
  bool insert(GradingRecord record);
};

GoodGradingSet good_gradings_gl(const SuperPartition& sp);

struct OspClassification {
  GoodGradingSet gradings;     // the answer
  GoodGradingSet closed_form;  // members admitted by the shift table
  std::string shift_case;
  bool oracle_used = false;
  std::optional<bool> closed_form_matches_oracle;
};

// The oracle runs when `with_oracle` is set or when 1 is in C(p).
OspClassification classify_osp(const SuperPartition& sp, bool with_oracle = false);
GoodGradingSet good_gradings_osp(const SuperPartition& sp);

struct OracleObserver {
  // Called once per distinct integral degree map.
  std::function<void(const Grading&, const GoodnessChecker::Verdict&)> on_candidate;
};

struct OracleStats {
  std::size_t lattice_points = 0;
  std::size_t integral = 0;
  std::size_t distinct = 0;
  std::size_t disagreements = 0;  // kernel vs rank criterion
  std::size_t free_parameters = 0;
};

GoodGradingSet brute_force_shifts(RealizationPtr r, const SuperPartition& sp, int bound,
                                  OracleStats* stats = nullptr, const OracleObserver* observer = nullptr);

int max_part(const SuperPartition& sp);

// Members of good_gradings_gl(sp) whose restriction to g0 is the grading
// defined by the two single-parity pyramids.
GoodGradingSet extensions_of_even_grading(const SuperPartition& sp, const Pyramid& even_p, const Pyramid& even_q);

}  // namespace supergrading
