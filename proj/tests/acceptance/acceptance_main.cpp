// Acceptance harness: one line per criterion, [PASS]/[FAIL], exit code equals
// the number of failed criteria. Every check is an exact integer comparison.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "sdsched/io.hpp"
#include "sdsched/metrics.hpp"
#include "sdsched/reductions.hpp"
#include "sdsched/solvers.hpp"
#include "support.hpp"

using namespace sdsched;
namespace ts = testsupport;

namespace {

struct Criterion {
  int failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

int finish(int number, const char* title, Criterion& c,
           std::chrono::steady_clock::time_point started) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  std::printf("[%s] criterion %d: %s (%lld ms)\n", c.failures == 0 ? "PASS" : "FAIL", number,
              title, static_cast<long long>(elapsed));
  for (const auto& note : c.notes) std::printf("       %s\n", note.c_str());
  return c.failures == 0 ? 0 : 1;
}

#define RUN_CRITERION(num, title, body)                       \
  {                                                           \
    const auto started = std::chrono::steady_clock::now();    \
    Criterion crit;                                           \
    body(crit);                                               \
    failed += finish(num, title, crit, started);              \
  }

i64 objective_of(const Instance& inst, const Schedule& sched, bool weighted) {
  return weighted ? weighted_deviation(inst, sched).total : deviation(inst, sched).total;
}

bool schedule_is_all_median(const Instance& inst, const Schedule& sched) {
  const auto completion = completion_times(inst, sched);
  for (int i = 0; i < inst.n; ++i) {
    const auto info = median_info(inst, static_cast<TaskId>(i + 1));
    if (completion[static_cast<std::size_t>(i)] < info.median_lo ||
        completion[static_cast<std::size_t>(i)] > info.median_hi) {
      return false;
    }
  }
  return true;
}

bool exists_all_median_schedule(const Instance& inst) {
  std::vector<TaskId> order(static_cast<std::size_t>(inst.n));
  std::iota(order.begin(), order.end(), TaskId{1});
  do {
    if (schedule_is_all_median(inst, Schedule{order})) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// Criterion 1 keeps its instances around for criterion 3.
std::vector<Instance> solver_agreement_instances;

void criterion_solver_agreement(Criterion& c) {
  SplitMix64 rng(10001);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = ts::random_instance(rng, 7, 5, 5);
    solver_agreement_instances.push_back(inst);
    for (bool weighted : {false, true}) {
      const auto brute = solve_brute(inst, weighted);
      const auto bnb = solve_bnb(inst, weighted);
      c.expect(brute.objective == bnb.objective,
               "trial " + std::to_string(trial) + (weighted ? " weighted" : "") +
                   ": bnb " + std::to_string(bnb.objective) + " vs brute " +
                   std::to_string(brute.objective));
    }
    const bool unit =
        std::all_of(inst.lengths.begin(), inst.lengths.end(), [](i64 p) { return p == 1; });
    if (unit) {
      const auto brute = solve_brute(inst, false);
      const auto hung = solve_assignment(inst);
      c.expect(hung.objective == brute.objective,
               "trial " + std::to_string(trial) + ": assignment " +
                   std::to_string(hung.objective) + " vs brute " + std::to_string(brute.objective));
    }
  }
}

void criterion_two_voter(Criterion& c) {
  SplitMix64 rng(10002);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = ts::random_instance(rng, 7, 1, 5);
    inst.v = 2;
    inst.prefs.push_back(ts::random_permutation(rng, inst.n));
    for (bool weighted : {false, true}) {
      const i64 first = objective_of(inst, Schedule{inst.prefs[0]}, weighted);
      const i64 second = objective_of(inst, Schedule{inst.prefs[1]}, weighted);
      const i64 best = solve_brute(inst, weighted).objective;
      c.expect(first == second, "trial " + std::to_string(trial) + ": preference objectives differ");
      c.expect(first == best, "trial " + std::to_string(trial) + ": preference misses the optimum");
    }
  }
}

void criterion_median_bound(Criterion& c) {
  c.expect(!solver_agreement_instances.empty(), "criterion 1 must run first");
  for (std::size_t idx = 0; idx < solver_agreement_instances.size(); ++idx) {
    const Instance& inst = solver_agreement_instances[idx];
    const auto best = solve_brute(inst, false);
    const i64 lb = ideal_lower_bound(inst);
    c.expect(lb <= best.objective, "instance " + std::to_string(idx) + ": bound above optimum");
    if (schedule_is_all_median(inst, best.schedule)) {
      c.expect(lb == best.objective,
               "instance " + std::to_string(idx) + ": all-median optimum misses the bound");
    }
  }
}

void criterion_footrule_vs_kendall(Criterion& c) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<TaskId> pa(static_cast<std::size_t>(n));
    std::iota(pa.begin(), pa.end(), TaskId{1});
    do {
      std::vector<TaskId> pb(static_cast<std::size_t>(n));
      std::iota(pb.begin(), pb.end(), TaskId{1});
      do {
        const i64 tau = kendall_tau(Schedule{pa}, Schedule{pb});
        const i64 foot = spearman_distance(Schedule{pa}, Schedule{pb});
        if (!(tau <= foot && foot <= 2 * tau)) {
          c.expect(false, "violated at n=" + std::to_string(n));
          return;
        }
      } while (std::next_permutation(pb.begin(), pb.end()));
    } while (std::next_permutation(pa.begin(), pa.end()));
  }
}

void criterion_reduction4(Criterion& c) {
  SplitMix64 rng(10005);
  for (i64 q : {2, 4}) {
    for (int which = 0; which < 5; ++which) {
      const i64 B = 6 + static_cast<i64>(rng.below(10));
      const auto planted = ts::planted_3partition(rng, q, B);
      const ReducedInstance red = build_reduction4(planted.tp);
      const std::string label = "q=" + std::to_string(q) + " B=" + std::to_string(B);

      c.expect(red.z == ideal_lower_bound(red.instance), label + ": z is not the median bound");
      c.expect(ts::separators_unanimous(red), label + ": separators not unanimous");

      const Schedule witness = build_witness4(red, planted.solution);
      c.expect(deviation(red.instance, witness).total == red.z,
               label + ": witness deviation differs from z");

      const auto decoded = decode(red, witness);
      c.expect(decoded.has_value() && ts::same_partition(*decoded, planted.solution),
               label + ": decode does not invert the witness");
    }
  }
}

void criterion_reduction3(Criterion& c) {
  SplitMix64 rng(10006);
  const std::vector<std::pair<i64, i64>> shapes = {{2, 8}, {2, 16}, {4, 16}};
  for (const auto& [q, B] : shapes) {
    const std::vector<i64> triplet = B == 8 ? std::vector<i64>{3, 3, 2} : std::vector<i64>{5, 5, 6};
    const auto planted = ts::planted_3partition_from(rng, q, B, triplet);
    const ReducedInstance red = build_reduction3(planted.tp);
    const std::string label = "q=" + std::to_string(q) + " B=" + std::to_string(B);

    const i64 d_nf = red.breakdown_value("D_NF");
    c.expect(red.z == d_nf + red.breakdown_value("slack"), label + ": z is not D_NF + slack");
    // Integrality of z, checked as an exact identity over 16ths.
    const i64 q2 = q * q;
    c.expect(16 * red.z == 16 * d_nf + 51 * q2 * red.Bprime - 2 * q * red.Bprime +
                               12 * q2 * red.O + 24 * q * red.O,
             label + ": z does not match its closed form over 16ths");
    c.expect(ideal_lower_bound(red.instance) == d_nf, label + ": median oracle disagrees with D_NF");
    c.expect(d_nf < red.z, label + ": z not above D_NF");
    c.expect(red.z < d_nf + 2 * red.K * red.O, label + ": z not below D_NF + 2KO");
    c.expect(ts::separators_unanimous(red), label + ": separators not unanimous");

    const Schedule witness = build_witness3(red, planted.solution);
    const i64 dev = deviation(red.instance, witness).total;
    c.expect(dev >= d_nf, label + ": witness beats the lower bound");
    c.expect(dev <= red.z, label + ": witness misses the threshold");

    const auto decoded = decode(red, witness);
    c.expect(decoded.has_value() && ts::same_partition(*decoded, planted.solution),
             label + ": decode does not invert the witness");
  }
}

void criterion_micro_all_median(Criterion& c) {
  std::vector<Instance> micro;

  // Unanimous voters: the shared preference is an all-median schedule.
  micro.push_back(Instance{4, 3, {2, 1, 3, 1},
                           {{3, 1, 4, 2}, {3, 1, 4, 2}, {3, 1, 4, 2}}});
  // Two voters always attain the bound.
  micro.push_back(Instance{4, 2, {2, 1, 3, 1}, {{1, 2, 3, 4}, {4, 3, 2, 1}}});
  // Three voters pulling one long task around; the bound is still attainable.
  micro.push_back(Instance{3, 3, {3, 1, 1}, {{1, 2, 3}, {2, 1, 3}, {2, 3, 1}}});
  // Tasks 1 and 2 both have median slot 2: no all-median schedule exists.
  micro.push_back(Instance{3, 3, {1, 1, 1}, {{1, 2, 3}, {3, 1, 2}, {2, 1, 3}}});
  // Same collision with a longer task thrown in.
  micro.push_back(Instance{4, 3, {1, 1, 1, 2}, {{1, 2, 3, 4}, {3, 1, 2, 4}, {2, 1, 4, 3}}});
  // Reduction-shaped micro instance with a feasible triplet placement.
  micro.push_back(Instance{7, 4, {2, 1, 1, 1, 1, 1, 1},
                           {{1, 4, 5, 2, 3, 6, 7},
                            {2, 3, 1, 4, 5, 6, 7},
                            {2, 3, 4, 5, 1, 6, 7},
                            {2, 3, 6, 7, 4, 5, 1}}});
  // Opposed unit voters, even count: wide median intervals, bound attainable.
  micro.push_back(Instance{3, 2, {1, 1, 1}, {{1, 2, 3}, {3, 2, 1}}});

  int attained_count = 0, unattained_count = 0;
  for (std::size_t idx = 0; idx < micro.size(); ++idx) {
    const Instance& inst = micro[idx];
    const auto best = solve_brute(inst, false);
    const i64 lb = ideal_lower_bound(inst);
    const bool attained = best.objective == lb;
    const bool feasible = exists_all_median_schedule(inst);
    c.expect(attained == feasible,
             "micro " + std::to_string(idx) + ": attained=" + std::to_string(attained) +
                 " feasible=" + std::to_string(feasible));
    c.expect(lb <= best.objective, "micro " + std::to_string(idx) + ": bound above optimum");
    (attained ? attained_count : unattained_count) += 1;
  }
  c.expect(attained_count > 0 && unattained_count > 0,
           "the micro set must cover both outcomes");
}

void criterion_determinism_and_formats(Criterion& c) {
  const std::string data_dir = SDSCHED_TEST_DATA_DIR;

  // Golden instance fixture: regenerated bytes match the frozen file.
  const std::string golden = read_file(data_dir + "/random_n6_v3_seed42.sd");
  c.expect(gen_random_text(RandomSpec{6, 3, 5, 42}) == golden,
           "seeded generation no longer reproduces the frozen fixture");
  const Instance inst = read_instance(golden);
  c.expect(write_instance(inst, {"seed 42"}) == golden, "golden instance does not round-trip");

  // Golden 3-partition and schedule fixtures.
  const std::string tp_text = read_file(data_dir + "/three_partition_q2_b8.3p");
  c.expect(write_3partition(read_3partition(tp_text)) == tp_text,
           "golden 3-partition does not round-trip");
  const std::string sched_text = read_file(data_dir + "/schedule_n6.sched");
  c.expect(write_schedule(read_schedule(sched_text)) == sched_text,
           "golden schedule does not round-trip");

  // Golden reduced instance: bytes stable through read/write.
  const std::string reduced_text = read_file(data_dir + "/reduced4_q2_b6.sd");
  c.expect(write_reduced(read_reduced(reduced_text)) == reduced_text,
           "golden reduced instance does not round-trip");

  // Regenerating the reduction reproduces the file bit for bit.
  ThreePartitionInstance tp{2, 6, {1, 2, 3, 1, 2, 3}};
  c.expect(write_reduced(build_reduction4(tp)) == reduced_text,
           "rebuilding the reduction changed its serialization");
}

}  // namespace

int main() {
  int failed = 0;
  std::printf("acceptance suite: exact-integer checks, seeded inputs\n");

  RUN_CRITERION(1, "brute, bnb and assignment agree on 300 seeded instances",
                criterion_solver_agreement);
  RUN_CRITERION(2, "either preference is optimal for 200 seeded two-voter instances",
                criterion_two_voter);
  RUN_CRITERION(3, "median bound below every optimum, tight on all-median optima",
                criterion_median_bound);
  RUN_CRITERION(4, "kendall-tau <= footrule <= 2x kendall-tau, exhaustive n <= 6",
                criterion_footrule_vs_kendall);
  RUN_CRITERION(5, "four-voter reduction coherent on planted yes-instances",
                criterion_reduction4);
  RUN_CRITERION(6, "three-voter reduction coherent for (q,B) in {(2,8),(2,16),(4,16)}",
                criterion_reduction3);
  RUN_CRITERION(7, "micro instances: bound attained exactly when an all-median schedule exists",
                criterion_micro_all_median);
  RUN_CRITERION(8, "golden files round-trip and seeded generation is frozen",
                criterion_determinism_and_formats);

  if (failed == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criteria failed\n", failed);
  }
  return failed;
}
