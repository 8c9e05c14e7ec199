#include "sdsched/reductions.hpp"

#include <algorithm>
#include <map>

#include "sdsched/metrics.hpp"

namespace sdsched {

bool ThreePartitionInstance::strict_bounds() const {
  for (i64 xi : x) {
    if (!(4 * xi > B && 2 * xi < B)) return false;
  }
  return true;
}

bool ThreePartitionInstance::weak_bounds() const {
  for (i64 xi : x) {
    if (!(4 * xi >= B && 2 * xi <= B)) return false;
  }
  return true;
}

void ThreePartitionInstance::require_valid() const {
  if (q < 1) throw ValidationError("3-partition instance needs q >= 1");
  if (static_cast<i64>(x.size()) != 3 * q) {
    throw ValidationError("3-partition instance lists " + std::to_string(x.size()) +
                          " integers, expected " + std::to_string(3 * q));
  }
  i64 sum = 0;
  for (i64 xi : x) {
    if (xi < 1) throw ValidationError("3-partition values must be positive");
    sum = checked_add(sum, xi);
  }
  if (sum != checked_mul(q, B)) {
    throw ValidationError("3-partition values sum to " + std::to_string(sum) + ", expected q*B = " +
                          std::to_string(checked_mul(q, B)));
  }
}

bool verify_partition(const ThreePartitionInstance& tp, const TripletPartition& sol) {
  if (static_cast<i64>(sol.triplets.size()) != tp.q) return false;
  std::vector<char> seen(tp.x.size(), 0);
  for (const auto& t : sol.triplets) {
    i64 sum = 0;
    for (int idx : t) {
      if (idx < 1 || idx > static_cast<int>(tp.x.size())) return false;
      if (seen[static_cast<std::size_t>(idx) - 1]) return false;
      seen[static_cast<std::size_t>(idx) - 1] = 1;
      sum += tp.x[static_cast<std::size_t>(idx) - 1];
    }
    if (sum != tp.B) return false;
  }
  return true;
}

TripletPartition canonical_partition(const TripletPartition& sol) {
  TripletPartition out = sol;
  for (auto& t : out.triplets) std::sort(t.begin(), t.end());
  std::sort(out.triplets.begin(), out.triplets.end());
  return out;
}

ThreePartitionInstance normalize_3partition(const ThreePartitionInstance& tp) {
  tp.require_valid();
  ThreePartitionInstance out = tp;
  if (out.B < 8 || out.B % 4 != 0) {
    out.B = checked_mul(out.B, 8);
    for (auto& xi : out.x) xi = checked_mul(xi, 8);
  }
  if (out.q % 2 != 0) {
    // Forced triple: B/2-2 can only pair with the two B/4+1 values, so the
    // padded instance is a yes-instance iff the original is.
    out.x.push_back(out.B / 2 - 2);
    out.x.push_back(out.B / 4 + 1);
    out.x.push_back(out.B / 4 + 1);
    out.q += 1;
  }
  return out;
}

const char* to_string(ReductionVariant v) {
  return v == ReductionVariant::four_voter ? "four_voter" : "three_voter";
}

std::string role_tag(const Role& role) {
  switch (role.set) {
    case Role::Set::J: return "J:" + std::to_string(role.member);
    case Role::Set::C1: return "C1:" + std::to_string(role.member);
    case Role::Set::C2: return "C2:" + std::to_string(role.member);
    case Role::Set::C3: return "C3:" + std::to_string(role.member);
    case Role::Set::C4: return "C4:" + std::to_string(role.member);
    case Role::Set::Sep: return "A:" + std::to_string(role.member);
    case Role::Set::T: return "T:" + std::to_string(role.member);
    case Role::Set::L: return "L:" + std::to_string(role.member);
    case Role::Set::R: return "R:" + std::to_string(role.member);
    case Role::Set::M: return "M:" + std::to_string(role.member);
    case Role::Set::S:
      return "S" + std::to_string(role.sub) + ":" + std::to_string(role.member);
  }
  throw Error("unreachable role set");
}

Role parse_role_tag(const std::string& tag) {
  const auto colon = tag.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= tag.size()) {
    throw ValidationError("malformed role tag '" + tag + "'");
  }
  const std::string set = tag.substr(0, colon);
  Role role;
  try {
    role.member = std::stoi(tag.substr(colon + 1));
  } catch (const std::exception&) {
    throw ValidationError("malformed role tag '" + tag + "'");
  }
  if (set == "J") {
    role.set = Role::Set::J;
  } else if (set == "C1") {
    role.set = Role::Set::C1;
  } else if (set == "C2") {
    role.set = Role::Set::C2;
  } else if (set == "C3") {
    role.set = Role::Set::C3;
  } else if (set == "C4") {
    role.set = Role::Set::C4;
  } else if (set == "A") {
    role.set = Role::Set::Sep;
  } else if (set == "T") {
    role.set = Role::Set::T;
  } else if (set == "L") {
    role.set = Role::Set::L;
  } else if (set == "R") {
    role.set = Role::Set::R;
  } else if (set == "M") {
    role.set = Role::Set::M;
  } else if (set.size() > 1 && set[0] == 'S') {
    role.set = Role::Set::S;
    try {
      role.sub = std::stoi(set.substr(1));
    } catch (const std::exception&) {
      throw ValidationError("malformed role tag '" + tag + "'");
    }
  } else {
    throw ValidationError("unknown role tag '" + tag + "'");
  }
  return role;
}

i64 ReducedInstance::breakdown_value(const std::string& key) const {
  for (const auto& [k, val] : breakdown) {
    if (k == key) return val;
  }
  throw Error("breakdown component '" + key + "' missing");
}

bool ReducedInstance::has_breakdown(const std::string& key) const {
  for (const auto& [k, val] : breakdown) {
    if (k == key) return true;
  }
  return false;
}

namespace {

constexpr i64 kMaxReducedTasks = 50'000'000;

void append_range(std::vector<TaskId>& out, i64 first, i64 count) {
  for (i64 id = first; id < first + count; ++id) out.push_back(static_cast<TaskId>(id));
}

}  // namespace

ReducedInstance build_reduction4(const ThreePartitionInstance& tp) {
  tp.require_valid();
  const i64 q = tp.q;
  const i64 B = tp.B;
  const i64 qB = checked_mul(q, B);

  const i64 n64 = checked_add(checked_add(3 * q, 4 * qB), q - 1);
  if (n64 > kMaxReducedTasks) {
    throw PreconditionError("reduced instance would have " + std::to_string(n64) + " tasks");
  }
  const int n = static_cast<int>(n64);

  // id layout: J = 1..3q, then C1..C4 (qB unit tasks each), then a_1..a_{q-1}
  const i64 j_first = 1;
  const i64 c_first[4] = {3 * q + 1, 3 * q + qB + 1, 3 * q + 2 * qB + 1, 3 * q + 3 * qB + 1};
  const i64 sep_first = 3 * q + 4 * qB + 1;

  ReducedInstance red;
  red.variant = ReductionVariant::four_voter;
  red.q = q;
  red.B = B;

  red.instance.n = n;
  red.instance.v = 4;
  red.instance.lengths.assign(static_cast<std::size_t>(n), 1);
  for (i64 i = 0; i < 3 * q; ++i) {
    red.instance.lengths[static_cast<std::size_t>(i)] = tp.x[static_cast<std::size_t>(i)];
  }

  red.roles.resize(static_cast<std::size_t>(n));
  for (i64 i = 0; i < 3 * q; ++i) {
    red.roles[static_cast<std::size_t>(i)] = Role{Role::Set::J, 0, static_cast<int>(i + 1)};
  }
  const Role::Set c_sets[4] = {Role::Set::C1, Role::Set::C2, Role::Set::C3, Role::Set::C4};
  for (int c = 0; c < 4; ++c) {
    for (i64 j = 0; j < qB; ++j) {
      red.roles[static_cast<std::size_t>(c_first[c] + j) - 1] =
          Role{c_sets[c], 0, static_cast<int>(j + 1)};
    }
  }
  for (i64 b = 0; b < q - 1; ++b) {
    red.roles[static_cast<std::size_t>(sep_first + b) - 1] =
        Role{Role::Set::Sep, 0, static_cast<int>(b + 1)};
  }

  // The routed set: q blocks of B unit tasks with the separators in between.
  auto interleaved = [&](i64 set_first) {
    std::vector<TaskId> out;
    for (i64 g = 0; g < q; ++g) {
      append_range(out, set_first + g * B, B);
      if (g < q - 1) out.push_back(static_cast<TaskId>(sep_first + g));
    }
    return out;
  };
  auto whole = [&](i64 set_first) {
    std::vector<TaskId> out;
    append_range(out, set_first, qB);
    return out;
  };
  auto j_block = [&]() {
    std::vector<TaskId> out;
    append_range(out, j_first, 3 * q);
    return out;
  };
  auto concat = [](std::vector<std::vector<TaskId>> parts) {
    std::vector<TaskId> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };

  red.instance.prefs = {
      concat({j_block(), whole(c_first[1]), interleaved(c_first[0]), whole(c_first[2]),
              whole(c_first[3])}),
      concat({whole(c_first[0]), j_block(), interleaved(c_first[1]), whole(c_first[2]),
              whole(c_first[3])}),
      concat({whole(c_first[0]), whole(c_first[1]), interleaved(c_first[2]), j_block(),
              whole(c_first[3])}),
      concat({whole(c_first[0]), whole(c_first[1]), interleaved(c_first[3]), whole(c_first[2]),
              j_block()}),
  };
  require_valid(red.instance);

  // Threshold: deviation of the all-median schedule, computed by the median
  // oracle. The closed-form rows are kept for cross-checking only; a mismatch
  // on the integer-task row is expected and flagged, the oracle value wins.
  red.z = ideal_lower_bound(red.instance);

  i64 sum_ib = 0;  // sum over i < q of i*B: separator delay of filler groups
  for (i64 i = 0; i < q; ++i) sum_ib = checked_add(sum_ib, checked_mul(i, B));
  const i64 qb2 = checked_mul(qB, qB);
  const i64 row_c1 = checked_add(checked_mul(2, qb2), sum_ib);
  const i64 row_c2 = checked_add(qb2, sum_ib);
  const i64 row_c3 = row_c2;
  const i64 row_c4 = row_c1;
  const i64 row_j =
      checked_mul(3 * q, checked_add(checked_mul(3, qB), q - 1));
  i64 closed_total = row_c1;
  closed_total = checked_add(closed_total, row_c2);
  closed_total = checked_add(closed_total, row_c3);
  closed_total = checked_add(closed_total, row_c4);
  closed_total = checked_add(closed_total, row_j);

  red.breakdown = {
      {"C1", row_c1},
      {"C2", row_c2},
      {"C3", row_c3},
      {"C4", row_c4},
      {"closed_form_J", row_j},
      {"closed_form_total", closed_total},
      {"closed_form_matches", closed_total == red.z ? 1 : 0},
  };
  return red;
}

namespace {

// Geometry shared by the three-voter builder and its witness: where every set
// starts in the id space.
struct ThreeVoterLayout {
  i64 q, B, K, Bprime, O, Oprime;
  i64 t_first, l_first, r_first, m_first, s0_first, small_first, slast_first;
  i64 n;

  static ThreeVoterLayout from_constants(i64 q, i64 B) {
    ThreeVoterLayout g;
    g.q = q;
    g.B = B;
    g.K = checked_mul(4, ceil_div(checked_add(checked_mul(3, checked_mul(q, q)), 6 * q), 4));
    g.Bprime = checked_mul(B, g.K);
    g.O = checked_mul(
        2, ceil_div(checked_add(checked_mul(51, checked_mul(checked_mul(q, q), B)),
                                checked_mul(2, checked_mul(q, B))),
                    16));
    g.Oprime = checked_mul(3, checked_add(checked_mul(q, g.O), checked_mul(2 * q, g.Bprime)));
    const i64 qBp = checked_mul(q, g.Bprime);
    g.t_first = 1;
    g.l_first = 3 * q + 1;
    g.r_first = g.l_first + qBp;
    g.m_first = g.r_first + qBp;
    g.s0_first = g.m_first + qBp;
    g.small_first = g.s0_first + g.Oprime;
    g.slast_first = g.small_first + checked_mul(q, g.O);
    g.n = checked_sub(checked_add(g.slast_first, g.Oprime), 1);
    return g;
  }

  i64 small_set_first(i64 k) const { return small_first + (k - 1) * O; }  // k in 1..q

  // Middle region of a preference: the given set split into q blocks of B'
  // unit tasks routed through the small separator intervals, with the central
  // set filling the interval between S^{q/2} and S^{q/2+1}. Emits every
  // separator set from S^1 through S^{q+2}.
  void append_middle(std::vector<TaskId>& out, i64 blocks_first,
                     const std::vector<TaskId>& central) const {
    const i64 half = q / 2;
    for (i64 i = 0; i < half; ++i) {
      append_range(out, blocks_first + i * Bprime, Bprime);
      append_range(out, small_set_first(i + 1), O);
    }
    out.insert(out.end(), central.begin(), central.end());
    append_range(out, small_set_first(half + 1), O);
    for (i64 i = half; i < q - 1; ++i) {
      append_range(out, blocks_first + i * Bprime, Bprime);
      append_range(out, small_set_first(i + 2), O);
    }
    append_range(out, blocks_first + (q - 1) * Bprime, Bprime);
    append_range(out, slast_first, Oprime);
  }
};

}  // namespace

ReducedInstance build_reduction3(const ThreePartitionInstance& tp) {
  tp.require_valid();
  if (tp.q < 2 || tp.q % 2 != 0) {
    throw PreconditionError("three-voter reduction needs an even triplet count; normalize first");
  }
  if (tp.B < 8 || tp.B % 4 != 0) {
    throw PreconditionError("three-voter reduction needs B >= 8 and divisible by 4; normalize first");
  }
  if (!tp.weak_bounds()) {
    throw PreconditionError("three-voter reduction needs B/4 <= x_i <= B/2 for every value");
  }

  const auto g = ThreeVoterLayout::from_constants(tp.q, tp.B);
  if (g.n > kMaxReducedTasks) {
    throw PreconditionError("reduced instance would have " + std::to_string(g.n) + " tasks");
  }
  const i64 q = g.q;
  const int n = static_cast<int>(g.n);

  ReducedInstance red;
  red.variant = ReductionVariant::three_voter;
  red.q = q;
  red.B = g.B;
  red.K = g.K;
  red.Bprime = g.Bprime;
  red.O = g.O;
  red.Oprime = g.Oprime;

  red.instance.n = n;
  red.instance.v = 3;
  red.instance.lengths.assign(static_cast<std::size_t>(n), 1);
  for (i64 i = 0; i < 3 * q; ++i) {
    red.instance.lengths[static_cast<std::size_t>(i)] =
        checked_mul(g.K, tp.x[static_cast<std::size_t>(i)]);
  }

  red.roles.resize(static_cast<std::size_t>(n));
  auto tag_range = [&](i64 first, i64 count, Role::Set set, int sub) {
    for (i64 j = 0; j < count; ++j) {
      red.roles[static_cast<std::size_t>(first + j) - 1] = Role{set, sub, static_cast<int>(j + 1)};
    }
  };
  tag_range(g.t_first, 3 * q, Role::Set::T, 0);
  tag_range(g.l_first, q * g.Bprime, Role::Set::L, 0);
  tag_range(g.r_first, q * g.Bprime, Role::Set::R, 0);
  tag_range(g.m_first, q * g.Bprime, Role::Set::M, 0);
  tag_range(g.s0_first, g.Oprime, Role::Set::S, 0);
  for (i64 k = 1; k <= q; ++k) tag_range(g.small_set_first(k), g.O, Role::Set::S, static_cast<int>(k));
  tag_range(g.slast_first, g.Oprime, Role::Set::S, static_cast<int>(q + 2));

  auto whole = [&](i64 first, i64 count) {
    std::vector<TaskId> out;
    append_range(out, first, count);
    return out;
  };
  const auto t_all = whole(g.t_first, 3 * q);
  const auto m_all = whole(g.m_first, q * g.Bprime);

  auto build_pref = [&](i64 head_first, i64 head_count, i64 blocks_first,
                        const std::vector<TaskId>& central, i64 tail_first, i64 tail_count) {
    std::vector<TaskId> out;
    out.reserve(static_cast<std::size_t>(n));
    append_range(out, head_first, head_count);
    append_range(out, g.s0_first, g.Oprime);
    g.append_middle(out, blocks_first, central);
    append_range(out, tail_first, tail_count);
    return out;
  };

  const i64 qBp = checked_mul(q, g.Bprime);
  red.instance.prefs = {
      build_pref(g.t_first, 3 * q, g.l_first, m_all, g.r_first, qBp),
      build_pref(g.l_first, qBp, g.r_first, m_all, g.t_first, 3 * q),
      build_pref(g.l_first, qBp, g.m_first, t_all, g.r_first, qBp),
  };
  require_valid(red.instance);

  // Closed-form cost of the all-median schedule, per set.
  const i64 half = q / 2;
  i64 d_l = 0;
  for (i64 i = 0; i < half; ++i) {
    d_l = checked_add(d_l, checked_mul(g.Bprime,
                                       checked_add(checked_add(qBp, g.Oprime), checked_mul(i, g.O))));
    d_l = checked_add(
        d_l, checked_mul(g.Bprime, checked_add(checked_add(checked_mul(2, qBp), g.Oprime),
                                               checked_mul(half + 1 + i, g.O))));
  }
  const i64 d_r = d_l;
  i64 d_m = 0;
  for (i64 i = 0; i < half; ++i) {
    d_m = checked_add(
        d_m, checked_mul(g.Bprime, checked_add(checked_add(g.O, exact_div(qBp, 2)),
                                               checked_mul(i, g.O))));
  }
  d_m = checked_mul(2, d_m);
  const i64 d_t = checked_mul(
      3 * q, checked_mul(2, checked_add(checked_add(g.Oprime,
                                                    checked_mul(half, checked_add(g.O, g.Bprime))),
                                        qBp)));
  i64 d_nf = checked_add(checked_add(d_l, d_r), checked_add(d_m, d_t));

  // Slack granted on top of the lower bound: the witness cost of routing the
  // triplets into their intervals. All divisions are exact by construction
  // (K multiple of 4, q even, O even).
  const i64 q2 = checked_mul(q, q);
  const i64 slack =
      checked_add(checked_add(exact_div(checked_sub(checked_mul(51, checked_mul(q2, g.Bprime)),
                                                    checked_mul(2, checked_mul(q, g.Bprime))),
                                        16),
                              exact_div(checked_mul(3, checked_mul(q2, g.O)), 4)),
                  exact_div(checked_mul(3, checked_mul(q, g.O)), 2));
  red.z = checked_add(d_nf, slack);

  const i64 oracle_lb = ideal_lower_bound(red.instance);
  if (oracle_lb != d_nf) {
    throw Error("three-voter layout broken: median oracle gives " + std::to_string(oracle_lb) +
                ", closed form gives " + std::to_string(d_nf));
  }
  const i64 gap = checked_mul(2, checked_mul(g.K, g.O));
  if (!(checked_add(d_nf, gap) > red.z)) {
    throw Error("three-voter threshold broken: z exceeds D_NF + 2*K*O");
  }

  red.breakdown = {
      {"D_L", d_l}, {"D_R", d_r}, {"D_M", d_m}, {"D_T", d_t}, {"D_NF", d_nf}, {"slack", slack},
  };
  return red;
}

namespace {

// Extracts (x index -> task id, x value) for the integer tasks and checks the
// partition against them.
struct IntegerTasks {
  std::vector<TaskId> id_of_index;  // 1-based x index -> task id
  ThreePartitionInstance tp;        // reconstructed source instance
};

IntegerTasks integer_tasks_of(const ReducedInstance& red) {
  const bool four = red.variant == ReductionVariant::four_voter;
  const Role::Set want = four ? Role::Set::J : Role::Set::T;
  IntegerTasks out;
  out.tp.q = red.q;
  out.tp.B = red.B;
  out.tp.x.assign(static_cast<std::size_t>(3 * red.q), 0);
  out.id_of_index.assign(static_cast<std::size_t>(3 * red.q), 0);
  for (std::size_t i = 0; i < red.roles.size(); ++i) {
    const Role& role = red.roles[i];
    if (role.set != want) continue;
    if (role.member < 1 || role.member > static_cast<int>(out.tp.x.size())) {
      throw ValidationError("integer-task role index out of range");
    }
    const i64 len = red.instance.lengths[i];
    out.tp.x[static_cast<std::size_t>(role.member) - 1] =
        four ? len : exact_div(len, red.K);
    out.id_of_index[static_cast<std::size_t>(role.member) - 1] = static_cast<TaskId>(i + 1);
  }
  for (TaskId id : out.id_of_index) {
    if (id == 0) throw ValidationError("reduced instance is missing integer tasks");
  }
  return out;
}

void require_partition(const ThreePartitionInstance& tp, const TripletPartition& sol) {
  if (!verify_partition(tp, sol)) {
    throw PreconditionError("partition is not a valid 3-partition of the source instance");
  }
}

std::vector<TaskId> set_ids_in_member_order(const ReducedInstance& red, Role::Set set, int sub) {
  std::vector<std::pair<int, TaskId>> found;
  for (std::size_t i = 0; i < red.roles.size(); ++i) {
    const Role& role = red.roles[i];
    if (role.set == set && role.sub == sub) {
      found.emplace_back(role.member, static_cast<TaskId>(i + 1));
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<TaskId> out;
  out.reserve(found.size());
  for (auto& [member, id] : found) out.push_back(id);
  return out;
}

}  // namespace

Schedule build_witness4(const ReducedInstance& red, const TripletPartition& sol) {
  if (red.variant != ReductionVariant::four_voter) {
    throw PreconditionError("witness builder expects a four-voter reduction");
  }
  const auto ints = integer_tasks_of(red);
  require_partition(ints.tp, sol);

  const auto c1 = set_ids_in_member_order(red, Role::Set::C1, 0);
  const auto c2 = set_ids_in_member_order(red, Role::Set::C2, 0);
  const auto c3 = set_ids_in_member_order(red, Role::Set::C3, 0);
  const auto c4 = set_ids_in_member_order(red, Role::Set::C4, 0);
  const auto seps = set_ids_in_member_order(red, Role::Set::Sep, 0);

  Schedule out;
  out.order.reserve(red.instance.lengths.size());
  out.order.insert(out.order.end(), c1.begin(), c1.end());
  out.order.insert(out.order.end(), c2.begin(), c2.end());
  for (std::size_t b = 0; b < sol.triplets.size(); ++b) {
    std::array<int, 3> t = sol.triplets[b];
    std::sort(t.begin(), t.end());
    for (int idx : t) out.order.push_back(ints.id_of_index[static_cast<std::size_t>(idx) - 1]);
    if (b + 1 < sol.triplets.size()) out.order.push_back(seps[b]);
  }
  out.order.insert(out.order.end(), c3.begin(), c3.end());
  out.order.insert(out.order.end(), c4.begin(), c4.end());
  return out;
}

Schedule build_witness3(const ReducedInstance& red, const TripletPartition& sol) {
  if (red.variant != ReductionVariant::three_voter) {
    throw PreconditionError("witness builder expects a three-voter reduction");
  }
  const auto ints = integer_tasks_of(red);
  require_partition(ints.tp, sol);
  const i64 q = red.q;
  const i64 half = q / 2;

  const auto l_ids = set_ids_in_member_order(red, Role::Set::L, 0);
  const auto r_ids = set_ids_in_member_order(red, Role::Set::R, 0);
  const auto m_ids = set_ids_in_member_order(red, Role::Set::M, 0);
  const auto s0 = set_ids_in_member_order(red, Role::Set::S, 0);
  const auto slast = set_ids_in_member_order(red, Role::Set::S, static_cast<int>(q + 2));

  // Triplet b, ordered longest-first before the centre and shortest-first
  // after it; ties broken by x index for determinism.
  auto triplet_ids = [&](std::size_t b, bool longest_first) {
    std::array<int, 3> t = sol.triplets[b];
    std::sort(t.begin(), t.end(), [&](int a, int c) {
      const i64 xa = ints.tp.x[static_cast<std::size_t>(a) - 1];
      const i64 xc = ints.tp.x[static_cast<std::size_t>(c) - 1];
      if (xa != xc) return longest_first ? xa > xc : xa < xc;
      return a < c;
    });
    std::vector<TaskId> out;
    for (int idx : t) out.push_back(ints.id_of_index[static_cast<std::size_t>(idx) - 1]);
    return out;
  };
  auto small_sep = [&](i64 k) { return set_ids_in_member_order(red, Role::Set::S, static_cast<int>(k)); };

  Schedule out;
  out.order.reserve(red.instance.lengths.size());
  out.order.insert(out.order.end(), l_ids.begin(), l_ids.end());
  out.order.insert(out.order.end(), s0.begin(), s0.end());
  for (i64 b = 1; b <= half; ++b) {
    const auto trip = triplet_ids(static_cast<std::size_t>(b) - 1, true);
    out.order.insert(out.order.end(), trip.begin(), trip.end());
    const auto sep = small_sep(b);
    out.order.insert(out.order.end(), sep.begin(), sep.end());
  }
  out.order.insert(out.order.end(), m_ids.begin(), m_ids.end());
  {
    const auto sep = small_sep(half + 1);
    out.order.insert(out.order.end(), sep.begin(), sep.end());
  }
  for (i64 b = half + 1; b <= q; ++b) {
    const auto trip = triplet_ids(static_cast<std::size_t>(b) - 1, false);
    out.order.insert(out.order.end(), trip.begin(), trip.end());
    if (b < q) {
      const auto sep = small_sep(b + 1);
      out.order.insert(out.order.end(), sep.begin(), sep.end());
    }
  }
  out.order.insert(out.order.end(), slast.begin(), slast.end());
  out.order.insert(out.order.end(), r_ids.begin(), r_ids.end());
  return out;
}

std::optional<TripletPartition> decode(const ReducedInstance& red, const Schedule& sched) {
  require_valid_schedule(red.instance, sched);
  const i64 q = red.q;
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(q));
  std::vector<i64> group_sum(static_cast<std::size_t>(q), 0);

  if (red.variant == ReductionVariant::four_voter) {
    i64 seps_before = 0;
    for (TaskId id : sched.order) {
      const Role& role = red.roles[static_cast<std::size_t>(id) - 1];
      if (role.set == Role::Set::Sep) {
        ++seps_before;
      } else if (role.set == Role::Set::J) {
        const std::size_t g = static_cast<std::size_t>(seps_before);
        groups[g].push_back(role.member);
        group_sum[g] = checked_add(group_sum[g], red.instance.length(id));
        if (groups[g].size() > 3) return std::nullopt;
      }
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (groups[g].size() != 3 || group_sum[g] != red.B) return std::nullopt;
    }
  } else {
    // Group by the number of complete small separator sets already seen; the
    // central interval (after q/2 of them) may not hold integer tasks.
    i64 smalls_before = 0;
    for (TaskId id : sched.order) {
      const Role& role = red.roles[static_cast<std::size_t>(id) - 1];
      if (role.set == Role::Set::S && role.sub >= 1 && role.sub <= q) {
        ++smalls_before;
      } else if (role.set == Role::Set::T) {
        if (smalls_before % red.O != 0) return std::nullopt;  // inside a separator block
        const i64 sets_before = smalls_before / red.O;
        if (sets_before == q / 2) return std::nullopt;  // central interval holds no triplet
        const std::size_t g =
            static_cast<std::size_t>(sets_before < q / 2 ? sets_before : sets_before - 1);
        groups[g].push_back(role.member);
        group_sum[g] = checked_add(group_sum[g], red.instance.length(id));
        if (groups[g].size() > 3) return std::nullopt;
      }
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (groups[g].size() != 3 || group_sum[g] != checked_mul(red.B, red.K)) return std::nullopt;
    }
  }

  TripletPartition out;
  for (const auto& g : groups) {
    out.triplets.push_back({g[0], g[1], g[2]});
  }
  return out;
}

}  // namespace sdsched
