#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wlp/diagram.hpp"

namespace wlp {

struct SelftestOptions {
  int max_n = 7;          // exhaustive sweeps cover 4..max_n vertices
  int random_count = 50;  // extra random diagrams for the heavy properties
  int random_n_lo = 9;
  int random_n_hi = 12;
  std::uint32_t seed = 20250810;
};

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Admissible diagram drawn by rejection from random chord sets.
WilsonLoopDiagram random_admissible_diagram(std::mt19937& rng, int n_lo, int n_hi);

/// Runs the named verification cases in a fixed order; each line of the
/// returned table is independent of the others.
std::vector<CaseResult> run_selftest(const SelftestOptions& options);

}  // namespace wlp
