#include "sdsched/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "sdsched/metrics.hpp"

namespace sdsched {

const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::brute: return "brute";
    case SolveMethod::bnb: return "bnb";
    case SolveMethod::assignment: return "assignment";
    case SolveMethod::two_voter: return "two-voter";
  }
  return "?";
}

namespace {

constexpr i64 kInfinity = std::numeric_limits<i64>::max();

i64 objective_of(const Instance& inst, const Schedule& sched, bool weighted) {
  return weighted ? weighted_deviation(inst, sched).total : deviation(inst, sched).total;
}

std::vector<TaskId> identity_order(int n) {
  std::vector<TaskId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), TaskId{1});
  return order;
}

}  // namespace

SolveResult solve_brute(const Instance& inst, bool weighted, int cap) {
  require_valid(inst);
  if (inst.n > cap) {
    throw PreconditionError("brute force refuses n=" + std::to_string(inst.n) +
                            " (cap is " + std::to_string(cap) + ")");
  }
  // std::next_permutation enumerates in lexicographic order, so keeping the
  // first strictly better schedule yields the lexicographically smallest
  // optimum.
  std::vector<TaskId> order = identity_order(inst.n);
  Schedule best{order};
  i64 best_obj = objective_of(inst, best, weighted);
  while (std::next_permutation(order.begin(), order.end())) {
    i64 obj = objective_of(inst, Schedule{order}, weighted);
    if (obj < best_obj) {
      best_obj = obj;
      best.order = order;
    }
  }
  return SolveResult{std::move(best), best_obj, SolveMethod::brute, std::nullopt};
}

SolveResult solve_two_voter(const Instance& inst, bool weighted) {
  require_valid(inst);
  if (inst.v != 2) {
    throw PreconditionError("two-voter rule requires exactly 2 voters, got " +
                            std::to_string(inst.v));
  }
  Schedule sched{inst.prefs[0]};
  i64 obj = objective_of(inst, sched, weighted);
  return SolveResult{std::move(sched), obj, SolveMethod::two_voter, std::nullopt};
}

namespace {

// Minimum-cost perfect matching on a square cost matrix via the standard
// potentials formulation. Returns row_of_col: row assigned to each column.
std::vector<int> hungarian(const std::vector<std::vector<i64>>& cost) {
  const int n = static_cast<int>(cost.size());
  std::vector<i64> u(static_cast<std::size_t>(n) + 1, 0), v(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0), way(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<i64> minv(static_cast<std::size_t>(n) + 1, kInfinity);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      int i0 = p[static_cast<std::size_t>(j0)];
      int j1 = -1;
      i64 delta = kInfinity;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        i64 cur = cost[static_cast<std::size_t>(i0) - 1][static_cast<std::size_t>(j) - 1] -
                  u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    do {
      int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_of_col(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) row_of_col[static_cast<std::size_t>(j) - 1] = p[static_cast<std::size_t>(j)];
  return row_of_col;
}

}  // namespace

SolveResult solve_assignment(const Instance& inst) {
  require_valid(inst);
  for (i64 p : inst.lengths) {
    if (p != 1) {
      throw PreconditionError(
          "assignment solver requires unit task lengths; use bnb or brute instead");
    }
  }
  const auto dues = due_dates(inst);
  const int n = inst.n;
  // cost of finishing task i at slot t (completion time t, slots 1..n)
  std::vector<std::vector<i64>> cost(static_cast<std::size_t>(n),
                                     std::vector<i64>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int t = 1; t <= n; ++t) {
      i64 c = 0;
      for (int k = 0; k < inst.v; ++k) {
        c = checked_add(c, abs_diff(t, dues[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]));
      }
      cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(t) - 1] = c;
    }
  }
  const auto row_of_col = hungarian(cost);
  Schedule sched;
  sched.order.resize(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) {
    sched.order[static_cast<std::size_t>(t) - 1] = static_cast<TaskId>(row_of_col[static_cast<std::size_t>(t) - 1]);
  }
  i64 obj = objective_of(inst, sched, false);
  return SolveResult{std::move(sched), obj, SolveMethod::assignment, std::nullopt};
}

namespace {

struct BnbSearch {
  const Instance& inst;
  bool weighted;
  i64 budget;
  i64 nodes = 0;

  std::vector<MedianInfo> medians;  // per task, 0-based
  std::vector<int> branch_order;    // task indices sorted by (median_lo, id)

  std::vector<char> used;
  std::vector<TaskId> prefix;
  i64 makespan = 0;
  i64 prefix_cost = 0;

  std::vector<TaskId> best_order;
  i64 best_obj = kInfinity;
  bool have_incumbent = false;

  BnbSearch(const Instance& instance, bool weighted_mode, i64 node_budget)
      : inst(instance), weighted(weighted_mode), budget(node_budget) {
    const auto dues = due_dates(inst);
    medians.reserve(static_cast<std::size_t>(inst.n));
    std::vector<i64> mine(static_cast<std::size_t>(inst.v), 0);
    for (int i = 0; i < inst.n; ++i) {
      for (int k = 0; k < inst.v; ++k) {
        mine[static_cast<std::size_t>(k)] =
            dues[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
      }
      std::vector<i64> sorted = mine;
      std::sort(sorted.begin(), sorted.end());
      MedianInfo info;
      info.task = static_cast<TaskId>(i + 1);
      info.median_lo = sorted[static_cast<std::size_t>((inst.v + 1) / 2 - 1)];
      info.median_hi = sorted[static_cast<std::size_t>(inst.v / 2)];
      i64 dev = 0;
      for (int j = 0; j < inst.v / 2; ++j) {
        dev = checked_add(dev, checked_sub(sorted[static_cast<std::size_t>(inst.v - 1 - j)],
                                           sorted[static_cast<std::size_t>(j)]));
      }
      info.min_deviation = dev;
      info.sorted_due_dates = std::move(sorted);
      medians.push_back(std::move(info));
    }
    branch_order.resize(static_cast<std::size_t>(inst.n));
    std::iota(branch_order.begin(), branch_order.end(), 0);
    std::sort(branch_order.begin(), branch_order.end(), [this](int a, int b) {
      if (medians[static_cast<std::size_t>(a)].median_lo !=
          medians[static_cast<std::size_t>(b)].median_lo) {
        return medians[static_cast<std::size_t>(a)].median_lo <
               medians[static_cast<std::size_t>(b)].median_lo;
      }
      return a < b;
    });
    used.assign(static_cast<std::size_t>(inst.n), 0);
    prefix.reserve(static_cast<std::size_t>(inst.n));
  }

  i64 weight_of(int task) const {
    return weighted ? inst.lengths[static_cast<std::size_t>(task)] : 1;
  }

  // Deviation of task completing at time c, weighted if applicable.
  i64 task_cost_at(int task, i64 c) const {
    i64 s = 0;
    for (i64 d : medians[static_cast<std::size_t>(task)].sorted_due_dates) {
      s = checked_add(s, abs_diff(c, d));
    }
    return checked_mul(s, weight_of(task));
  }

  // Cheapest cost of task if it completes no earlier than at_or_after.
  i64 task_bound(int task, i64 at_or_after) const {
    return checked_mul(min_deviation_at_or_after(medians[static_cast<std::size_t>(task)], at_or_after),
                       weight_of(task));
  }

  // Admissible remaining cost once `chosen` is scheduled and the makespan is
  // `clock`: every other unscheduled task completes at clock + its length or
  // later.
  i64 remaining_bound(int chosen, i64 clock) const {
    i64 total = 0;
    for (int t = 0; t < inst.n; ++t) {
      if (used[static_cast<std::size_t>(t)] || t == chosen) continue;
      total = checked_add(total,
                          task_bound(t, checked_add(clock, inst.lengths[static_cast<std::size_t>(t)])));
    }
    return total;
  }

  void enter_node() {
    if (++nodes > budget) {
      Schedule inc{have_incumbent ? best_order : prefix};
      i64 obj = have_incumbent ? best_obj : prefix_cost;
      throw BudgetError("node budget of " + std::to_string(budget) +
                            " exhausted; best incumbent objective " + std::to_string(obj) +
                            " not proven optimal",
                        std::move(inc), obj, false);
    }
  }

  void descend(int task, i64 completion, i64 cost_with_task) {
    used[static_cast<std::size_t>(task)] = 1;
    prefix.push_back(static_cast<TaskId>(task + 1));
    i64 saved_makespan = makespan;
    i64 saved_cost = prefix_cost;
    makespan = completion;
    prefix_cost = cost_with_task;
    search_optimum();
    makespan = saved_makespan;
    prefix_cost = saved_cost;
    prefix.pop_back();
    used[static_cast<std::size_t>(task)] = 0;
  }

  void search_optimum() {
    if (static_cast<int>(prefix.size()) == inst.n) {
      if (prefix_cost < best_obj) {
        best_obj = prefix_cost;
        best_order = prefix;
        have_incumbent = true;
      }
      return;
    }
    for (int task : branch_order) {
      if (used[static_cast<std::size_t>(task)]) continue;
      i64 completion = checked_add(makespan, inst.lengths[static_cast<std::size_t>(task)]);
      i64 cost_with_task = checked_add(prefix_cost, task_cost_at(task, completion));
      i64 bound = checked_add(cost_with_task, remaining_bound(task, completion));
      if (bound >= best_obj) continue;
      enter_node();
      descend(task, completion, cost_with_task);
    }
  }

  // Second pass: walk children in task-id order keeping nodes whose bound can
  // still reach `target`; the first complete schedule found is the
  // lexicographically smallest optimum.
  bool search_lexmin(i64 target) {
    if (static_cast<int>(prefix.size()) == inst.n) {
      best_order = prefix;
      return true;
    }
    for (int task = 0; task < inst.n; ++task) {
      if (used[static_cast<std::size_t>(task)]) continue;
      i64 completion = checked_add(makespan, inst.lengths[static_cast<std::size_t>(task)]);
      i64 cost_with_task = checked_add(prefix_cost, task_cost_at(task, completion));
      i64 bound = checked_add(cost_with_task, remaining_bound(task, completion));
      if (bound > target) continue;
      if (++nodes > budget) {
        throw BudgetError("node budget of " + std::to_string(budget) +
                              " exhausted while canonicalizing ties; objective " +
                              std::to_string(best_obj) + " is proven optimal",
                          Schedule{best_order}, best_obj, true);
      }
      used[static_cast<std::size_t>(task)] = 1;
      prefix.push_back(static_cast<TaskId>(task + 1));
      i64 saved_makespan = makespan;
      i64 saved_cost = prefix_cost;
      makespan = completion;
      prefix_cost = cost_with_task;
      bool found = search_lexmin(target);
      makespan = saved_makespan;
      prefix_cost = saved_cost;
      prefix.pop_back();
      used[static_cast<std::size_t>(task)] = 0;
      if (found) return true;
    }
    return false;
  }
};

}  // namespace

SolveResult solve_bnb(const Instance& inst, bool weighted, i64 node_budget) {
  require_valid(inst);
  BnbSearch search(inst, weighted, node_budget);
  search.search_optimum();
  if (!search.search_lexmin(search.best_obj)) {
    throw Error("internal error: tie-break pass lost the optimum");
  }
  Schedule sched{search.best_order};
  i64 obj = objective_of(inst, sched, weighted);
  if (obj != search.best_obj) {
    throw Error("internal error: search objective does not match recomputation");
  }
  return SolveResult{std::move(sched), obj, SolveMethod::bnb, search.nodes};
}

}  // namespace sdsched
