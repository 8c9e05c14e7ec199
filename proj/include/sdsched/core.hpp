#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdsched {

using i64 = std::int64_t;

// Task identifiers are 1-based in every external format.
using TaskId = std::int32_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact 64-bit integer arithmetic overflowed. Results are never wrapped.
struct OverflowError : Error {
  using Error::Error;
};

// Input data violates a structural invariant (bad permutation, nonpositive
// length, size mismatch between instance and schedule, ...).
struct ValidationError : Error {
  using Error::Error;
};

// An operation was invoked outside its stated preconditions.
struct PreconditionError : Error {
  using Error::Error;
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline i64 abs_diff(i64 a, i64 b) { return a >= b ? checked_sub(a, b) : checked_sub(b, a); }

// Exact division; the quotient must leave no remainder.
i64 exact_div(i64 a, i64 b);

// Ceiling of a/b for a >= 0, b > 0.
i64 ceil_div(i64 a, i64 b);

// A set of tasks with positive integer lengths together with one preferred
// schedule (a permutation of all tasks) per voter.
struct Instance {
  int n = 0;                               // number of tasks
  int v = 0;                               // number of voters
  std::vector<i64> lengths;                // n entries; lengths[i] is the length of task i+1
  std::vector<std::vector<TaskId>> prefs;  // v permutations of {1..n}

  i64 length(TaskId t) const { return lengths[static_cast<std::size_t>(t) - 1]; }
};

// A permutation of all tasks, executed back to back from time 0 on one
// machine. No idle time, no preemption.
struct Schedule {
  std::vector<TaskId> order;

  bool operator==(const Schedule&) const = default;
};

// Total deviation with optional per-task / per-voter itemization.
// total == sum(per_task) == sum(per_voter) whenever the itemizations are set.
struct DeviationBreakdown {
  i64 total = 0;
  std::vector<i64> per_task;   // indexed by task id - 1, summed over voters
  std::vector<i64> per_voter;  // indexed by voter - 1
};

// Returns every invariant violation of the instance; empty means well formed.
// Violations are data, not failures.
std::vector<std::string> validate_instance(const Instance& inst);

// Throws ValidationError listing all violations if the instance is malformed.
void require_valid(const Instance& inst);

// Throws ValidationError if sched is not a permutation of inst's tasks.
void require_valid_schedule(const Instance& inst, const Schedule& sched);

// Completion time of every task, indexed by task id - 1. The first task of
// the order completes at its own length, the last at the total length.
std::vector<i64> completion_times(const Instance& inst, const Schedule& sched);

// Same, for a raw order assumed to be a valid permutation of 1..lengths.size().
std::vector<i64> completion_times_of_order(const std::vector<i64>& lengths,
                                           const std::vector<TaskId>& order);

}  // namespace sdsched
