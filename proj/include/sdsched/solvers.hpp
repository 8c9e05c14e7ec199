#pragma once

#include <optional>

#include "sdsched/core.hpp"

namespace sdsched {

enum class SolveMethod { brute, bnb, assignment, two_voter };

const char* to_string(SolveMethod m);

struct SolveResult {
  Schedule schedule;
  i64 objective = 0;  // recomputed from the returned schedule, never trusted from the search
  SolveMethod method = SolveMethod::brute;
  std::optional<i64> nodes_explored;  // search methods only
};

// Search aborted because the node budget ran out. Carries the best incumbent;
// the incumbent is not a proven optimum unless objective_proven says so
// (budget can also run out while canonicalizing the tie-break order).
struct BudgetError : Error {
  Schedule incumbent;
  i64 incumbent_objective = 0;
  bool objective_proven = false;

  BudgetError(const std::string& msg, Schedule inc, i64 obj, bool proven)
      : Error(msg), incumbent(std::move(inc)), incumbent_objective(obj), objective_proven(proven) {}
};

inline constexpr int kBruteDefaultCap = 10;
inline constexpr i64 kDefaultNodeBudget = 10'000'000;

// Exhaustive search over all n! schedules. Ties broken by lexicographically
// smallest task order. Refuses instances with n above the cap.
SolveResult solve_brute(const Instance& inst, bool weighted, int cap = kBruteDefaultCap);

// Two voters: either preference is optimal (every task already sits in its
// median interval there), so the first one is returned. Holds for the
// weighted objective as well.
SolveResult solve_two_voter(const Instance& inst, bool weighted);

// Unit-length unweighted instances as a minimum-cost slot assignment, solved
// exactly with the Hungarian method. Rejects any other instance.
SolveResult solve_assignment(const Instance& inst);

// Exact depth-first branch and bound over which task runs next. The node
// bound adds, for every unscheduled task, the cheapest deviation it can still
// reach given the prefix makespan; this is admissible, so the result is the
// global optimum with the same tie-breaking as solve_brute.
SolveResult solve_bnb(const Instance& inst, bool weighted, i64 node_budget = kDefaultNodeBudget);

}  // namespace sdsched
