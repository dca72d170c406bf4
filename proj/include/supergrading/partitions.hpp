#pragma once

#include <vector>

#include "supergrading/superalgebra.hpp"

namespace supergrading {

// Parts stored largest first.
using Partition = std::vector<int>;

struct SuperPartition {
  Partition p;
  Partition q;

  int m() const;
  int n() const;  // |q|; for osp(m|2n) this is 2n
  friend bool operator==(const SuperPartition&, const SuperPartition&) = default;
  friend auto operator<=>(const SuperPartition&, const SuperPartition&) = default;
};

// Partitions of n in decreasing lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);
std::vector<SuperPartition> enumerate_super_partitions(int m, int n);

Partition dual_partition(const Partition& r);
bool is_partition(const Partition& r);
int multiplicity(const Partition& r, int part);

bool is_orthogonal(const Partition& p);
bool is_symplectic(const Partition& q);
bool is_orthosymplectic(const SuperPartition& sp);
void require_orthosymplectic(const SuperPartition& sp);

// Orthosymplectic partitions (p|q) with |p| = m and |q| = 2n.
std::vector<SuperPartition> enumerate_orthosymplectic(int m, int n);

struct TaggedPart {
  int length;
  Parity parity;
  friend bool operator==(const TaggedPart&, const TaggedPart&) = default;
};

// All parts of p and q, largest first; on ties the p-part comes first.
std::vector<TaggedPart> psi_merge(const SuperPartition& sp);

struct PartGroup {
  int part;
  int m;  // multiplicity in p
  int n;  // multiplicity in q
};

// Distinct parts of p and q, largest first.
std::vector<PartGroup> part_grouping(const SuperPartition& sp);

struct ShiftParts {
  std::vector<int> c;  // C(p): odd parts of p with multiplicity 2, not parts of q
  std::vector<int> d;  // D(q): even parts of q with multiplicity 2, not parts of p
};

ShiftParts cp_dq(const SuperPartition& sp);

}  // namespace supergrading
