#include "sdsched/core.hpp"

#include <algorithm>

namespace sdsched {

i64 exact_div(i64 a, i64 b) {
  if (b == 0 || a % b != 0) {
    throw Error("exact division failed: " + std::to_string(a) + " / " + std::to_string(b));
  }
  return a / b;
}

i64 ceil_div(i64 a, i64 b) {
  if (a < 0 || b <= 0) throw Error("ceil_div expects a >= 0, b > 0");
  return (a + b - 1) / b;
}

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out;
  if (inst.n < 1) out.push_back("task count must be at least 1");
  if (inst.v < 1) out.push_back("voter count must be at least 1");
  if (static_cast<int>(inst.lengths.size()) != inst.n) {
    out.push_back("length list has " + std::to_string(inst.lengths.size()) + " entries, expected " +
                  std::to_string(inst.n));
  }
  for (std::size_t i = 0; i < inst.lengths.size(); ++i) {
    if (inst.lengths[i] < 1) {
      out.push_back("task " + std::to_string(i + 1) + " has nonpositive length " +
                    std::to_string(inst.lengths[i]));
    }
  }
  if (static_cast<int>(inst.prefs.size()) != inst.v) {
    out.push_back("preference list has " + std::to_string(inst.prefs.size()) +
                  " entries, expected " + std::to_string(inst.v));
  }
  for (std::size_t k = 0; k < inst.prefs.size(); ++k) {
    const auto& p = inst.prefs[k];
    const std::string who = "preference of voter " + std::to_string(k + 1);
    if (static_cast<int>(p.size()) != inst.n) {
      out.push_back(who + " lists " + std::to_string(p.size()) + " tasks, expected " +
                    std::to_string(inst.n));
      continue;
    }
    std::vector<char> seen(static_cast<std::size_t>(std::max(inst.n, 0)), 0);
    for (TaskId t : p) {
      if (t < 1 || t > inst.n) {
        out.push_back(who + " contains out-of-range task id " + std::to_string(t));
      } else if (seen[static_cast<std::size_t>(t) - 1]) {
        out.push_back(who + " contains duplicate task id " + std::to_string(t));
      } else {
        seen[static_cast<std::size_t>(t) - 1] = 1;
      }
    }
  }
  return out;
}

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string msg;
  for (const auto& s : violations) {
    if (!msg.empty()) msg += "; ";
    msg += s;
  }
  return msg;
}

}  // namespace

void require_valid(const Instance& inst) {
  auto violations = validate_instance(inst);
  if (!violations.empty()) throw ValidationError("invalid instance: " + join_violations(violations));
}

void require_valid_schedule(const Instance& inst, const Schedule& sched) {
  if (static_cast<int>(sched.order.size()) != inst.n) {
    throw ValidationError("schedule lists " + std::to_string(sched.order.size()) +
                          " tasks, expected " + std::to_string(inst.n));
  }
  std::vector<char> seen(static_cast<std::size_t>(inst.n), 0);
  for (TaskId t : sched.order) {
    if (t < 1 || t > inst.n) {
      throw ValidationError("schedule contains out-of-range task id " + std::to_string(t));
    }
    if (seen[static_cast<std::size_t>(t) - 1]) {
      throw ValidationError("schedule contains duplicate task id " + std::to_string(t));
    }
    seen[static_cast<std::size_t>(t) - 1] = 1;
  }
}

std::vector<i64> completion_times_of_order(const std::vector<i64>& lengths,
                                           const std::vector<TaskId>& order) {
  std::vector<i64> completion(lengths.size(), 0);
  i64 clock = 0;
  for (TaskId t : order) {
    clock = checked_add(clock, lengths[static_cast<std::size_t>(t) - 1]);
    completion[static_cast<std::size_t>(t) - 1] = clock;
  }
  return completion;
}

std::vector<i64> completion_times(const Instance& inst, const Schedule& sched) {
  require_valid(inst);
  require_valid_schedule(inst, sched);
  return completion_times_of_order(inst.lengths, sched.order);
}

}  // namespace sdsched
