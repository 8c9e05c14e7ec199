#pragma once

#include <cstdint>
#include <string>

#include "sdsched/core.hpp"
#include "sdsched/reductions.hpp"

namespace sdsched {

struct ParseError : Error {
  int line = 0;
  ParseError(const std::string& msg, int line_number)
      : Error("line " + std::to_string(line_number) + ": " + msg), line(line_number) {}
};

// Line-oriented ASCII formats, '\n' endings. Comment lines start with '#' and
// are ignored on read. Writers are canonical: single spaces, fixed field
// order, trailing newline. read(write(x)) == x; write(read(text))
// canonicalizes. Readers ignore unknown trailing sections.

Instance read_instance(const std::string& text);
std::string write_instance(const Instance& inst, const std::vector<std::string>& comments = {});

Schedule read_schedule(const std::string& text);
std::string write_schedule(const Schedule& sched);

ThreePartitionInstance read_3partition(const std::string& text);
std::string write_3partition(const ThreePartitionInstance& tp);

TripletPartition read_partition(const std::string& text);
std::string write_partition(const TripletPartition& sol);

// Reduced instances are instance files followed by machine-readable sidecar
// sections (reduction/const/breakdown/roles) that plain instance readers skip.
ReducedInstance read_reduced(const std::string& text);
std::string write_reduced(const ReducedInstance& red);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// splitmix64, by its published constants; platform independent.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

struct RandomSpec {
  int n = 0;
  int v = 0;
  i64 pmax = 1;
  std::uint64_t seed = 0;
};

// Deterministic generation: one splitmix64 stream seeded by spec.seed,
// consumed in fixed order — the n lengths first (uniform in [1, pmax]), then
// one Fisher-Yates shuffle per voter (for i = n-1 down to 1, swap position i
// with a draw from [0, i]).
Instance gen_random(const RandomSpec& spec);

// Canonical instance file for the spec, with the seed recorded in a header
// comment. Identical specs yield byte-identical files.
std::string gen_random_text(const RandomSpec& spec);

}  // namespace sdsched
