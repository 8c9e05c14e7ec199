#pragma once

#include <array>
#include <optional>
#include <utility>

#include "sdsched/core.hpp"

namespace sdsched {

// 3-Partition input: split 3q positive integers into q triplets, each summing
// to B.
struct ThreePartitionInstance {
  i64 q = 0;
  i64 B = 0;
  std::vector<i64> x;  // 3q values

  // B/4 < x_i < B/2 for every value. Recorded per instance, never assumed.
  bool strict_bounds() const;
  // B/4 <= x_i <= B/2 (4*x in [B, 2B]), what the three-voter geometry needs.
  bool weak_bounds() const;
  void require_valid() const;  // 3q values, all positive, sum == q*B
};

// q index triples partitioning {1..3q}; indices refer to positions in x.
struct TripletPartition {
  std::vector<std::array<int, 3>> triplets;
};

// True iff the triples partition {1..3q} exactly and each sums to B.
bool verify_partition(const ThreePartitionInstance& tp, const TripletPartition& sol);

// Canonical form for comparisons: indices sorted inside each triple, triples
// sorted among themselves.
TripletPartition canonical_partition(const TripletPartition& sol);

// Rewrites the instance to have even q, B >= 8 and B divisible by 4 while
// preserving the yes/no answer: values are scaled by 8 whenever B < 8 or
// B % 4 != 0, then a forced triple (B/2-2, B/4+1, B/4+1) is appended when q
// is odd.
ThreePartitionInstance normalize_3partition(const ThreePartitionInstance& tp);

enum class ReductionVariant { four_voter, three_voter };

const char* to_string(ReductionVariant v);

// Which set a task belongs to inside a reduced instance.
struct Role {
  enum class Set {
    J,    // integer task, four-voter variant (length x_i)
    C1,   // filler blocks, four-voter variant
    C2,
    C3,
    C4,
    Sep,  // single separator task a_b, four-voter variant
    T,    // integer task, three-voter variant (length K*x_i)
    L,    // left block, three-voter variant
    R,    // right block
    M,    // middle block
    S,    // separator set S^sub, three-voter variant
  };
  Set set = Set::J;
  int sub = 0;     // separator-set index for Set::S, otherwise 0
  int member = 0;  // 1-based index inside the set; the x-index for J and T

  bool operator==(const Role&) const = default;
};

std::string role_tag(const Role& role);
Role parse_role_tag(const std::string& tag);

// A reduced instance plus everything needed to audit it: the threshold z, the
// role of every task, the source constants and the closed-form cost
// components.
struct ReducedInstance {
  Instance instance;
  ReductionVariant variant = ReductionVariant::four_voter;
  i64 z = 0;
  i64 q = 0;
  i64 B = 0;
  // Three-voter constants; zero in the four-voter variant.
  i64 K = 0;
  i64 Bprime = 0;
  i64 O = 0;
  i64 Oprime = 0;
  std::vector<Role> roles;  // one per task, indexed by id-1
  std::vector<std::pair<std::string, i64>> breakdown;

  i64 breakdown_value(const std::string& key) const;
  bool has_breakdown(const std::string& key) const;
};

// Four-voter construction: one task per integer plus four filler sets of q*B
// unit tasks and q-1 unit separators. The threshold is the deviation of the
// all-median schedule, computed by the median oracle; the closed-form
// cross-check is recorded in the breakdown together with a match flag.
ReducedInstance build_reduction4(const ThreePartitionInstance& tp);

// Three-voter construction with scaled integer tasks (K*x_i), three unit-task
// blocks L, R, M of q*B' tasks each, q small separator sets of O tasks and two
// large ones of O' tasks. The threshold z comes from the closed form (lower
// bound D_NF plus the witness slack); the builder verifies that the median
// oracle reproduces D_NF and that z < D_NF + 2*K*O.
ReducedInstance build_reduction3(const ThreePartitionInstance& tp);

// Schedule certifying a yes-instance: filler blocks at their median slots and
// the integer tasks of triplet b between consecutive separators. Its
// deviation equals z exactly.
Schedule build_witness4(const ReducedInstance& red, const TripletPartition& sol);

// Same for the three-voter variant; triplets run longest-first before the
// centre and shortest-first after it. Its deviation is at most z.
Schedule build_witness3(const ReducedInstance& red, const TripletPartition& sol);

// Groups the integer tasks by how many separators precede them in sched and
// recovers the triplet partition, or fails when the groups do not form one.
std::optional<TripletPartition> decode(const ReducedInstance& red, const Schedule& sched);

}  // namespace sdsched
