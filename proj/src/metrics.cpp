#include "sdsched/metrics.hpp"

#include <algorithm>

namespace sdsched {

std::vector<std::vector<i64>> due_dates(const Instance& inst) {
  std::vector<std::vector<i64>> dues;
  dues.reserve(inst.prefs.size());
  for (const auto& pref : inst.prefs) {
    dues.push_back(completion_times_of_order(inst.lengths, pref));
  }
  return dues;
}

namespace {

DeviationBreakdown accumulate_deviation(const Instance& inst, const Schedule& sched,
                                        bool weighted) {
  require_valid(inst);
  require_valid_schedule(inst, sched);
  const auto completion = completion_times_of_order(inst.lengths, sched.order);
  const auto dues = due_dates(inst);

  DeviationBreakdown out;
  out.per_task.assign(static_cast<std::size_t>(inst.n), 0);
  out.per_voter.assign(static_cast<std::size_t>(inst.v), 0);
  for (int k = 0; k < inst.v; ++k) {
    for (int i = 0; i < inst.n; ++i) {
      i64 term = abs_diff(completion[static_cast<std::size_t>(i)],
                          dues[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
      if (weighted) term = checked_mul(term, inst.lengths[static_cast<std::size_t>(i)]);
      out.per_task[static_cast<std::size_t>(i)] =
          checked_add(out.per_task[static_cast<std::size_t>(i)], term);
      out.per_voter[static_cast<std::size_t>(k)] =
          checked_add(out.per_voter[static_cast<std::size_t>(k)], term);
      out.total = checked_add(out.total, term);
    }
  }
  return out;
}

}  // namespace

DeviationBreakdown deviation(const Instance& inst, const Schedule& sched) {
  return accumulate_deviation(inst, sched, false);
}

DeviationBreakdown weighted_deviation(const Instance& inst, const Schedule& sched) {
  return accumulate_deviation(inst, sched, true);
}

namespace {

std::vector<int> positions_of(const Schedule& s, const char* which) {
  const int n = static_cast<int>(s.order.size());
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    TaskId t = s.order[static_cast<std::size_t>(p)];
    if (t < 1 || t > n || pos[static_cast<std::size_t>(t) - 1] != -1) {
      throw ValidationError(std::string(which) + " is not a permutation of 1..n");
    }
    pos[static_cast<std::size_t>(t) - 1] = p + 1;
  }
  return pos;
}

}  // namespace

i64 spearman_distance(const Schedule& a, const Schedule& b) {
  if (a.order.size() != b.order.size()) {
    throw ValidationError("permutation size mismatch: " + std::to_string(a.order.size()) +
                          " vs " + std::to_string(b.order.size()));
  }
  const auto pa = positions_of(a, "first permutation");
  const auto pb = positions_of(b, "second permutation");
  i64 total = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    total = checked_add(total, abs_diff(pa[i], pb[i]));
  }
  return total;
}

i64 kendall_tau(const Schedule& a, const Schedule& b) {
  if (a.order.size() != b.order.size()) {
    throw ValidationError("permutation size mismatch: " + std::to_string(a.order.size()) +
                          " vs " + std::to_string(b.order.size()));
  }
  const auto pa = positions_of(a, "first permutation");
  const auto pb = positions_of(b, "second permutation");
  const std::size_t n = pa.size();
  i64 disagreements = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool ab = pa[i] < pa[j];
      const bool ba = pb[i] < pb[j];
      if (ab != ba) ++disagreements;
    }
  }
  return disagreements;
}

namespace {

MedianInfo median_from_dues(TaskId task, std::vector<i64> dues) {
  std::sort(dues.begin(), dues.end());
  const int v = static_cast<int>(dues.size());
  MedianInfo info;
  info.task = task;
  // ceil(v/2)-th and (floor(v/2)+1)-th order statistics, 1-based.
  info.median_lo = dues[static_cast<std::size_t>((v + 1) / 2 - 1)];
  info.median_hi = dues[static_cast<std::size_t>(v / 2)];
  i64 dev = 0;
  for (int i = 0; i < v / 2; ++i) {
    dev = checked_add(dev, checked_sub(dues[static_cast<std::size_t>(v - 1 - i)],
                                       dues[static_cast<std::size_t>(i)]));
  }
  info.min_deviation = dev;
  info.sorted_due_dates = std::move(dues);
  return info;
}

}  // namespace

MedianInfo median_info(const Instance& inst, TaskId task) {
  require_valid(inst);
  if (task < 1 || task > inst.n) {
    throw ValidationError("task id " + std::to_string(task) + " out of range");
  }
  const auto dues = due_dates(inst);
  std::vector<i64> mine;
  mine.reserve(dues.size());
  for (const auto& row : dues) mine.push_back(row[static_cast<std::size_t>(task) - 1]);
  return median_from_dues(task, std::move(mine));
}

i64 ideal_lower_bound(const Instance& inst) {
  require_valid(inst);
  const auto dues = due_dates(inst);
  i64 total = 0;
  std::vector<i64> mine(static_cast<std::size_t>(inst.v), 0);
  for (int i = 0; i < inst.n; ++i) {
    for (int k = 0; k < inst.v; ++k) {
      mine[static_cast<std::size_t>(k)] = dues[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    }
    const auto info = median_from_dues(static_cast<TaskId>(i + 1), mine);
    total = checked_add(total, info.min_deviation);
  }
  return total;
}

i64 min_deviation_at_or_after(const MedianInfo& info, i64 at_or_after) {
  if (at_or_after <= info.median_hi) return info.min_deviation;
  i64 cost = 0;
  for (i64 d : info.sorted_due_dates) cost = checked_add(cost, abs_diff(at_or_after, d));
  return cost;
}

}  // namespace sdsched
