#include "supergrading/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "supergrading/errors.hpp"

namespace supergrading {

int SuperPartition::m() const { return std::accumulate(p.begin(), p.end(), 0); }
int SuperPartition::n() const { return std::accumulate(q.begin(), q.end(), 0); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<SuperPartition> enumerate_super_partitions(int m, int n) {
  std::vector<SuperPartition> out;
  for (const auto& p : partitions_of(m)) {
    for (const auto& q : partitions_of(n)) out.push_back({p, q});
  }
  return out;
}

Partition dual_partition(const Partition& r) {
  Partition dual;
  if (r.empty()) return dual;
  const int largest = *std::max_element(r.begin(), r.end());
  for (int j = 1; j <= largest; ++j) {
    dual.push_back(static_cast<int>(std::count_if(r.begin(), r.end(), [j](int x) { return x >= j; })));
  }
  return dual;
}

bool is_partition(const Partition& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] <= 0) return false;
    if (i > 0 && r[i] > r[i - 1]) return false;
  }
  return true;
}

int multiplicity(const Partition& r, int part) {
  return static_cast<int>(std::count(r.begin(), r.end(), part));
}

namespace {

// Parts of the given residue mod 2 must occur with even multiplicity.
bool even_multiplicity_for(const Partition& r, int residue) {
  std::map<int, int> counts;
  for (int x : r) ++counts[x];
  for (auto [part, count] : counts) {
    if (part % 2 == residue && count % 2 != 0) return false;
  }
  return true;
}

}  // namespace

bool is_orthogonal(const Partition& p) { return is_partition(p) && even_multiplicity_for(p, 0); }

bool is_symplectic(const Partition& q) { return is_partition(q) && even_multiplicity_for(q, 1); }

bool is_orthosymplectic(const SuperPartition& sp) { return is_orthogonal(sp.p) && is_symplectic(sp.q); }

void require_orthosymplectic(const SuperPartition& sp) {
  if (!is_orthosymplectic(sp)) throw NotOrthosymplectic("partition pair is not orthosymplectic");
}

std::vector<SuperPartition> enumerate_orthosymplectic(int m, int n) {
  std::vector<SuperPartition> out;
  for (const auto& p : partitions_of(m)) {
    if (!is_orthogonal(p)) continue;
    for (const auto& q : partitions_of(2 * n)) {
      if (is_symplectic(q)) out.push_back({p, q});
    }
  }
  return out;
}

std::vector<TaggedPart> psi_merge(const SuperPartition& sp) {
  std::vector<TaggedPart> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < sp.p.size() || j < sp.q.size()) {
    if (j == sp.q.size() || (i < sp.p.size() && sp.p[i] >= sp.q[j])) {
      out.push_back({sp.p[i++], Parity::even});
    } else {
      out.push_back({sp.q[j++], Parity::odd});
    }
  }
  return out;
}

std::vector<PartGroup> part_grouping(const SuperPartition& sp) {
  std::map<int, PartGroup, std::greater<>> groups;
  for (int x : sp.p) {
    auto& g = groups.try_emplace(x, PartGroup{x, 0, 0}).first->second;
    ++g.m;
  }
  for (int x : sp.q) {
    auto& g = groups.try_emplace(x, PartGroup{x, 0, 0}).first->second;
    ++g.n;
  }
  std::vector<PartGroup> out;
  for (const auto& [part, g] : groups) out.push_back(g);
  return out;
}

ShiftParts cp_dq(const SuperPartition& sp) {
  require_orthosymplectic(sp);
  ShiftParts out;
  for (const auto& g : part_grouping(sp)) {
    if (g.part % 2 == 1 && g.m == 2 && g.n == 0) out.c.push_back(g.part);
    if (g.part % 2 == 0 && g.n == 2 && g.m == 0) out.d.push_back(g.part);
  }
  return out;
}

}  // namespace supergrading
