#pragma once

#include "sdsched/core.hpp"

namespace sdsched {

// Where a single task is cheapest to finish. Any completion time inside
// [median_lo, median_hi] costs exactly min_deviation summed over the voters;
// outside the interval the cost is strictly larger.
struct MedianInfo {
  TaskId task = 0;
  std::vector<i64> sorted_due_dates;  // ascending, one entry per voter
  i64 median_lo = 0;                  // ceil(v/2)-th smallest due date
  i64 median_hi = 0;                  // (floor(v/2)+1)-th smallest; == median_lo for odd v
  i64 min_deviation = 0;
};

// Due-date table: result[k][i] is the completion time of task i+1 in the
// preferred schedule of voter k+1.
std::vector<std::vector<i64>> due_dates(const Instance& inst);

// Sum over voters and tasks of |C_i(sched) - d_i^k|.
DeviationBreakdown deviation(const Instance& inst, const Schedule& sched);

// Same with each task's term multiplied by its length (weight = length).
DeviationBreakdown weighted_deviation(const Instance& inst, const Schedule& sched);

// Sum of per-item position differences between two permutations of {1..n}.
i64 spearman_distance(const Schedule& a, const Schedule& b);

// Number of unordered pairs the two permutations order differently.
i64 kendall_tau(const Schedule& a, const Schedule& b);

MedianInfo median_info(const Instance& inst, TaskId task);

// Total deviation of the (generally infeasible) schedule that completes every
// task inside its median interval. A valid lower bound for every schedule.
i64 ideal_lower_bound(const Instance& inst);

// Cheapest deviation of a single task over completion times >= at_or_after,
// given its ascending due dates and precomputed median data. Used as the
// per-task term of admissible search bounds.
i64 min_deviation_at_or_after(const MedianInfo& info, i64 at_or_after);

}  // namespace sdsched
