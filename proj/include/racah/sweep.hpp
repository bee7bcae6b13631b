#pragma once

// Parameter-grid sweep: for every catalog spec whose irreducibility
// criterion holds, run the relevant verification harness and merge the
// per-spec records into one deterministic JSON report.

#include "racah/module_spec.hpp"
#include "racah/serialize.hpp"

#include <vector>

namespace racah {

// a, b, c values of the builtin grid: 0, +-1/4, +-1/2, +-1, 3/2, 5/2.
std::vector<Rat> builtin_grid_values();

struct SweepOptions {
  std::vector<Family> families;
  int d_max = 4;
  // Either a value grid (all triples are formed) or explicit triples.
  std::vector<Rat> values;
  std::vector<std::array<Rat, 3>> triples;
  bool timings = false;  // off by default so reports are byte-stable
};

struct SweepResult {
  Json report;
  int failed = 0;
  int inconclusive = 0;
};

// Sequential and deterministic: records are emitted in spec order
// regardless of any job-count hint the caller received.
SweepResult run_sweep(const SweepOptions& opts);

}  // namespace racah
