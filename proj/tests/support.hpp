#pragma once

// Shared helpers for the unit and acceptance suites: seeded generators and
// structural checks on reduced instances.

#include <algorithm>
#include <numeric>
#include <vector>

#include "sdsched/core.hpp"
#include "sdsched/io.hpp"
#include "sdsched/metrics.hpp"
#include "sdsched/reductions.hpp"

namespace testsupport {

using namespace sdsched;

inline std::vector<TaskId> random_permutation(SplitMix64& rng, int n) {
  std::vector<TaskId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), TaskId{1});
  for (int i = n - 1; i >= 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
  }
  return perm;
}

inline Instance random_instance(SplitMix64& rng, int max_n, int max_v, i64 pmax) {
  Instance inst;
  inst.n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
  inst.v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_v)));
  for (int i = 0; i < inst.n; ++i) {
    inst.lengths.push_back(1 + static_cast<i64>(rng.below(static_cast<std::uint64_t>(pmax))));
  }
  for (int k = 0; k < inst.v; ++k) inst.prefs.push_back(random_permutation(rng, inst.n));
  return inst;
}

inline Instance random_unit_instance(SplitMix64& rng, int max_n, int max_v) {
  Instance inst = random_instance(rng, max_n, max_v, 1);
  return inst;
}

// A yes 3-Partition instance: q triplets drawn to sum to B, the 3q values
// shuffled over the positions. Returns the instance and the planted solution.
struct PlantedThreePartition {
  ThreePartitionInstance tp;
  TripletPartition solution;
};

inline PlantedThreePartition planted_3partition(SplitMix64& rng, i64 q, i64 B) {
  std::vector<i64> values;
  for (i64 t = 0; t < q; ++t) {
    const i64 a = 1 + static_cast<i64>(rng.below(static_cast<std::uint64_t>(B - 2)));
    const i64 b = 1 + static_cast<i64>(rng.below(static_cast<std::uint64_t>(B - a - 1)));
    values.push_back(a);
    values.push_back(b);
    values.push_back(B - a - b);
  }
  std::vector<TaskId> where = random_permutation(rng, static_cast<int>(3 * q));
  PlantedThreePartition out;
  out.tp.q = q;
  out.tp.B = B;
  out.tp.x.assign(static_cast<std::size_t>(3 * q), 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.tp.x[static_cast<std::size_t>(where[i]) - 1] = values[i];
  }
  for (i64 t = 0; t < q; ++t) {
    out.solution.triplets.push_back({static_cast<int>(where[static_cast<std::size_t>(3 * t)]),
                                     static_cast<int>(where[static_cast<std::size_t>(3 * t + 1)]),
                                     static_cast<int>(where[static_cast<std::size_t>(3 * t + 2)])});
  }
  return out;
}

// Same, but every triplet is drawn from the given multisets of values (used
// for bound-respecting instances, e.g. {5,5,6} for B=16).
inline PlantedThreePartition planted_3partition_from(SplitMix64& rng, i64 q, i64 B,
                                                     const std::vector<i64>& triplet_values) {
  std::vector<i64> values;
  for (i64 t = 0; t < q; ++t) {
    for (i64 value : triplet_values) values.push_back(value);
  }
  std::vector<TaskId> where = random_permutation(rng, static_cast<int>(3 * q));
  PlantedThreePartition out;
  out.tp.q = q;
  out.tp.B = B;
  out.tp.x.assign(static_cast<std::size_t>(3 * q), 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.tp.x[static_cast<std::size_t>(where[i]) - 1] = values[i];
  }
  for (i64 t = 0; t < q; ++t) {
    out.solution.triplets.push_back({static_cast<int>(where[static_cast<std::size_t>(3 * t)]),
                                     static_cast<int>(where[static_cast<std::size_t>(3 * t + 1)]),
                                     static_cast<int>(where[static_cast<std::size_t>(3 * t + 2)])});
  }
  return out;
}

inline bool same_partition(const TripletPartition& a, const TripletPartition& b) {
  return canonical_partition(a).triplets == canonical_partition(b).triplets;
}

// Every separator task gets the same completion time from every voter.
inline bool separators_unanimous(const ReducedInstance& red) {
  const auto dues = due_dates(red.instance);
  for (std::size_t i = 0; i < red.roles.size(); ++i) {
    const Role::Set set = red.roles[i].set;
    const bool separator = set == Role::Set::Sep || set == Role::Set::S;
    if (!separator) continue;
    for (std::size_t k = 1; k < dues.size(); ++k) {
      if (dues[k][i] != dues[0][i]) return false;
    }
  }
  return true;
}

// Positions (0-based) of every member of a separator set in the schedule.
inline std::vector<std::size_t> set_positions(const ReducedInstance& red, const Schedule& sched,
                                              Role::Set set, int sub) {
  std::vector<std::pair<int, std::size_t>> found;
  for (std::size_t pos = 0; pos < sched.order.size(); ++pos) {
    const Role& role = red.roles[static_cast<std::size_t>(sched.order[pos]) - 1];
    if (role.set == set && role.sub == sub) found.emplace_back(role.member, pos);
  }
  std::sort(found.begin(), found.end());
  std::vector<std::size_t> out;
  for (auto& [member, pos] : found) out.push_back(pos);
  return out;
}

// The set occupies consecutive positions in index order.
inline bool contiguous_and_index_ordered(const ReducedInstance& red, const Schedule& sched,
                                         Role::Set set, int sub) {
  const auto positions = set_positions(red, sched, set, sub);
  for (std::size_t j = 1; j < positions.size(); ++j) {
    if (positions[j] != positions[j - 1] + 1) return false;
  }
  return true;
}

}  // namespace testsupport
