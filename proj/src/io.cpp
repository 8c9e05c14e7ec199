#include "sdsched/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace sdsched {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Significant lines only: comments and blank lines are dropped here.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    Line line;
    line.number = number;
    std::istringstream ls(raw);
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

i64 parse_i64(const std::string& tok, int line) {
  try {
    std::size_t pos = 0;
    i64 value = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
}

int parse_int(const std::string& tok, int line) {
  i64 value = parse_i64(tok, line);
  if (value < INT32_MIN || value > INT32_MAX) throw ParseError("integer out of range: " + tok, line);
  return static_cast<int>(value);
}

void expect_header(const std::vector<Line>& lines, const std::string& format) {
  if (lines.empty()) throw ParseError("empty file, expected '" + format + " v1' header", 1);
  const Line& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0] != format) {
    throw ParseError("expected '" + format + " v1' header", head.number);
  }
  if (head.tokens[1] != "v1") {
    throw ParseError("unsupported " + format + " version '" + head.tokens[1] + "'", head.number);
  }
}

const Line& line_at(const std::vector<Line>& lines, std::size_t idx, const std::string& what) {
  if (idx >= lines.size()) {
    const int last = lines.empty() ? 1 : lines.back().number;
    throw ParseError("missing " + what, last);
  }
  return lines[idx];
}

// Checks that ids form a permutation of 1..n; reports the offending id.
void check_permutation(const std::vector<TaskId>& ids, int n, const std::string& what, int line) {
  if (static_cast<int>(ids.size()) != n) {
    throw ParseError(what + " lists " + std::to_string(ids.size()) + " task ids, expected " +
                         std::to_string(n),
                     line);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (TaskId t : ids) {
    if (t < 1 || t > n) {
      throw ParseError(what + " contains out-of-range task id " + std::to_string(t), line);
    }
    if (seen[static_cast<std::size_t>(t) - 1]) {
      throw ParseError(what + " contains duplicate task id " + std::to_string(t), line);
    }
    seen[static_cast<std::size_t>(t) - 1] = 1;
  }
}

struct InstanceParse {
  Instance inst;
  std::size_t next_section = 0;  // index into the token lines after the pref lines
  std::vector<Line> lines;
};

InstanceParse parse_instance_body(const std::string& text) {
  InstanceParse out;
  out.lines = tokenize(text);
  expect_header(out.lines, "sd-instance");

  const Line& counts = line_at(out.lines, 1, "'n <int> v <int>' line");
  if (counts.tokens.size() != 4 || counts.tokens[0] != "n" || counts.tokens[2] != "v") {
    throw ParseError("expected 'n <int> v <int>'", counts.number);
  }
  out.inst.n = parse_int(counts.tokens[1], counts.number);
  out.inst.v = parse_int(counts.tokens[3], counts.number);
  if (out.inst.n < 1) throw ParseError("task count must be at least 1", counts.number);
  if (out.inst.v < 1) throw ParseError("voter count must be at least 1", counts.number);

  const Line& plime = line_at(out.lines, 2, "'p <lengths>' line");
  if (plime.tokens.empty() || plime.tokens[0] != "p") {
    throw ParseError("expected 'p <lengths>'", plime.number);
  }
  if (static_cast<int>(plime.tokens.size()) != out.inst.n + 1) {
    throw ParseError("expected " + std::to_string(out.inst.n) + " task lengths", plime.number);
  }
  for (int i = 1; i <= out.inst.n; ++i) {
    i64 p = parse_i64(plime.tokens[static_cast<std::size_t>(i)], plime.number);
    if (p < 1) {
      throw ParseError("task " + std::to_string(i) + " has nonpositive length " + std::to_string(p),
                       plime.number);
    }
    out.inst.lengths.push_back(p);
  }

  for (int k = 1; k <= out.inst.v; ++k) {
    const Line& pref = line_at(out.lines, static_cast<std::size_t>(2 + k),
                               "'pref " + std::to_string(k) + " ...' line");
    if (pref.tokens.size() < 2 || pref.tokens[0] != "pref") {
      throw ParseError("expected 'pref " + std::to_string(k) + " <task ids>'", pref.number);
    }
    if (parse_int(pref.tokens[1], pref.number) != k) {
      throw ParseError("preferences must appear in voter order; expected voter " + std::to_string(k),
                       pref.number);
    }
    std::vector<TaskId> ids;
    for (std::size_t t = 2; t < pref.tokens.size(); ++t) {
      ids.push_back(static_cast<TaskId>(parse_int(pref.tokens[t], pref.number)));
    }
    check_permutation(ids, out.inst.n, "preference of voter " + std::to_string(k), pref.number);
    out.inst.prefs.push_back(std::move(ids));
  }
  out.next_section = static_cast<std::size_t>(3 + out.inst.v);
  return out;
}

void append_ints(std::string& out, const std::vector<i64>& values) {
  for (i64 value : values) {
    out += ' ';
    out += std::to_string(value);
  }
}

}  // namespace

Instance read_instance(const std::string& text) {
  return parse_instance_body(text).inst;  // trailing sections are ignored
}

std::string write_instance(const Instance& inst, const std::vector<std::string>& comments) {
  require_valid(inst);
  std::string out = "sd-instance v1\n";
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "n " + std::to_string(inst.n) + " v " + std::to_string(inst.v) + "\n";
  out += "p";
  append_ints(out, inst.lengths);
  out += "\n";
  for (int k = 1; k <= inst.v; ++k) {
    out += "pref " + std::to_string(k);
    for (TaskId t : inst.prefs[static_cast<std::size_t>(k) - 1]) {
      out += ' ';
      out += std::to_string(t);
    }
    out += "\n";
  }
  return out;
}

Schedule read_schedule(const std::string& text) {
  const auto lines = tokenize(text);
  expect_header(lines, "sd-schedule");
  const Line& order = line_at(lines, 1, "'order <task ids>' line");
  if (order.tokens.empty() || order.tokens[0] != "order") {
    throw ParseError("expected 'order <task ids>'", order.number);
  }
  Schedule sched;
  for (std::size_t t = 1; t < order.tokens.size(); ++t) {
    sched.order.push_back(static_cast<TaskId>(parse_int(order.tokens[t], order.number)));
  }
  check_permutation(sched.order, static_cast<int>(sched.order.size()), "schedule", order.number);
  return sched;
}

std::string write_schedule(const Schedule& sched) {
  std::string out = "sd-schedule v1\norder";
  for (TaskId t : sched.order) {
    out += ' ';
    out += std::to_string(t);
  }
  out += "\n";
  return out;
}

ThreePartitionInstance read_3partition(const std::string& text) {
  const auto lines = tokenize(text);
  expect_header(lines, "3partition");
  const Line& counts = line_at(lines, 1, "'q <int> B <int>' line");
  if (counts.tokens.size() != 4 || counts.tokens[0] != "q" || counts.tokens[2] != "B") {
    throw ParseError("expected 'q <int> B <int>'", counts.number);
  }
  ThreePartitionInstance tp;
  tp.q = parse_i64(counts.tokens[1], counts.number);
  tp.B = parse_i64(counts.tokens[3], counts.number);
  const Line& xs = line_at(lines, 2, "'x <3q integers>' line");
  if (xs.tokens.empty() || xs.tokens[0] != "x") throw ParseError("expected 'x <integers>'", xs.number);
  for (std::size_t t = 1; t < xs.tokens.size(); ++t) {
    tp.x.push_back(parse_i64(xs.tokens[t], xs.number));
  }
  try {
    tp.require_valid();
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), xs.number);
  }
  return tp;
}

std::string write_3partition(const ThreePartitionInstance& tp) {
  std::string out = "3partition v1\n";
  out += "q " + std::to_string(tp.q) + " B " + std::to_string(tp.B) + "\n";
  out += "x";
  append_ints(out, tp.x);
  out += "\n";
  return out;
}

TripletPartition read_partition(const std::string& text) {
  const auto lines = tokenize(text);
  expect_header(lines, "triplets");
  TripletPartition sol;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "t" || line.tokens.size() != 4) {
      throw ParseError("expected 't <i> <j> <k>'", line.number);
    }
    sol.triplets.push_back({parse_int(line.tokens[1], line.number),
                            parse_int(line.tokens[2], line.number),
                            parse_int(line.tokens[3], line.number)});
  }
  if (sol.triplets.empty()) {
    throw ParseError("partition file lists no triplets", lines.back().number);
  }
  return sol;
}

std::string write_partition(const TripletPartition& sol) {
  std::string out = "triplets v1\n";
  for (const auto& t : sol.triplets) {
    out += "t " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + "\n";
  }
  return out;
}

ReducedInstance read_reduced(const std::string& text) {
  auto parsed = parse_instance_body(text);
  ReducedInstance red;
  red.instance = std::move(parsed.inst);

  bool have_variant = false, have_z = false;
  std::vector<std::string> tags(static_cast<std::size_t>(red.instance.n));
  std::size_t tags_seen = 0;
  for (std::size_t i = parsed.next_section; i < parsed.lines.size(); ++i) {
    const Line& line = parsed.lines[i];
    const std::string& kind = line.tokens[0];
    if (kind == "reduction") {
      if (line.tokens.size() != 2) throw ParseError("expected 'reduction <variant>'", line.number);
      if (line.tokens[1] == "four_voter") {
        red.variant = ReductionVariant::four_voter;
      } else if (line.tokens[1] == "three_voter") {
        red.variant = ReductionVariant::three_voter;
      } else {
        throw ParseError("unknown reduction variant '" + line.tokens[1] + "'", line.number);
      }
      have_variant = true;
    } else if (kind == "const") {
      if (line.tokens.size() != 3) throw ParseError("expected 'const <name> <value>'", line.number);
      const i64 value = parse_i64(line.tokens[2], line.number);
      const std::string& name = line.tokens[1];
      if (name == "q") red.q = value;
      else if (name == "B") red.B = value;
      else if (name == "K") red.K = value;
      else if (name == "B'") red.Bprime = value;
      else if (name == "O") red.O = value;
      else if (name == "O'") red.Oprime = value;
      else if (name == "z") { red.z = value; have_z = true; }
      // unknown constants are ignored
    } else if (kind == "breakdown") {
      if (line.tokens.size() != 3) throw ParseError("expected 'breakdown <name> <value>'", line.number);
      red.breakdown.emplace_back(line.tokens[1], parse_i64(line.tokens[2], line.number));
    } else if (kind == "roles") {
      if (line.tokens.size() != 3) throw ParseError("expected 'roles <id> <tag>'", line.number);
      const int id = parse_int(line.tokens[1], line.number);
      if (id < 1 || id > red.instance.n) {
        throw ParseError("role for out-of-range task id " + std::to_string(id), line.number);
      }
      if (!tags[static_cast<std::size_t>(id) - 1].empty()) {
        throw ParseError("duplicate role for task id " + std::to_string(id), line.number);
      }
      tags[static_cast<std::size_t>(id) - 1] = line.tokens[2];
      ++tags_seen;
    }
    // unknown sections are ignored for forward compatibility
  }
  if (!have_variant) throw ParseError("reduced instance is missing its 'reduction' line", 1);
  if (!have_z) throw ParseError("reduced instance is missing 'const z'", 1);
  if (red.q < 1 || red.B < 1) {
    throw ParseError("reduced instance is missing 'const q' or 'const B'", 1);
  }
  if (red.variant == ReductionVariant::three_voter &&
      (red.K < 1 || red.Bprime < 1 || red.O < 1 || red.Oprime < 1)) {
    throw ParseError("three-voter reduced instance is missing K, B', O or O'", 1);
  }
  if (tags_seen != static_cast<std::size_t>(red.instance.n)) {
    throw ParseError("reduced instance carries " + std::to_string(tags_seen) + " roles, expected " +
                         std::to_string(red.instance.n),
                     1);
  }
  red.roles.reserve(tags.size());
  for (const auto& tag : tags) red.roles.push_back(parse_role_tag(tag));
  return red;
}

std::string write_reduced(const ReducedInstance& red) {
  std::string summary = std::string(to_string(red.variant)) + " reduction: q=" +
                        std::to_string(red.q) + " B=" + std::to_string(red.B);
  if (red.variant == ReductionVariant::three_voter) {
    summary += " K=" + std::to_string(red.K) + " B'=" + std::to_string(red.Bprime) +
               " O=" + std::to_string(red.O) + " O'=" + std::to_string(red.Oprime);
  }
  summary += " Z=" + std::to_string(red.z);

  std::string out = write_instance(red.instance, {summary});
  out += "reduction " + std::string(to_string(red.variant)) + "\n";
  out += "const q " + std::to_string(red.q) + "\n";
  out += "const B " + std::to_string(red.B) + "\n";
  if (red.variant == ReductionVariant::three_voter) {
    out += "const K " + std::to_string(red.K) + "\n";
    out += "const B' " + std::to_string(red.Bprime) + "\n";
    out += "const O " + std::to_string(red.O) + "\n";
    out += "const O' " + std::to_string(red.Oprime) + "\n";
  }
  out += "const z " + std::to_string(red.z) + "\n";
  for (const auto& [key, value] : red.breakdown) {
    out += "breakdown " + key + " " + std::to_string(value) + "\n";
  }
  for (std::size_t i = 0; i < red.roles.size(); ++i) {
    out += "roles " + std::to_string(i + 1) + " " + role_tag(red.roles[i]) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw Error("failed writing '" + path + "'");
}

Instance gen_random(const RandomSpec& spec) {
  if (spec.n < 1 || spec.v < 1 || spec.pmax < 1) {
    throw PreconditionError("random spec needs n >= 1, v >= 1, pmax >= 1");
  }
  SplitMix64 rng(spec.seed);
  Instance inst;
  inst.n = spec.n;
  inst.v = spec.v;
  inst.lengths.reserve(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    inst.lengths.push_back(1 + static_cast<i64>(rng.below(static_cast<std::uint64_t>(spec.pmax))));
  }
  for (int k = 0; k < spec.v; ++k) {
    std::vector<TaskId> perm(static_cast<std::size_t>(spec.n));
    std::iota(perm.begin(), perm.end(), TaskId{1});
    for (int i = spec.n - 1; i >= 1; --i) {
      const auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
      std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    inst.prefs.push_back(std::move(perm));
  }
  return inst;
}

std::string gen_random_text(const RandomSpec& spec) {
  return write_instance(gen_random(spec), {"seed " + std::to_string(spec.seed)});
}

}  // namespace sdsched
