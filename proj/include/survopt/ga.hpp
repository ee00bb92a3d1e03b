#pragma once

#include <array>
#include <cstdint>

#include "survopt/horizon.hpp"

namespace survopt::ga {

struct GaConfig {
  int population_size = 30;
  int generations = 100;
  double crossover_rate = 0.9;
  double mutation_rate = 0.1;
  std::uint64_t seed = 1;
  int m_min = 1;  // cycle-count search range, inclusive
  int m_max = 30;
};

// Genetic search over (m, k): integer cycle count, real-coded k with blend
// crossover and gaussian perturbation, tournament selection, one elite
// carried per generation. Deterministic for a fixed seed. Throws
// std::invalid_argument on bad config and std::runtime_error when the best
// individual found is infeasible (nothing in range admits a cycle).
horizon::HorizonPolicy ga_optimize(const horizon::HorizonParams& par,
                                   const GaConfig& cfg);

// Worked-example replay. A display row carries the derived schedule fields
// (t_r, t1, T, Q, TC) alongside the decision pair (m, k). The row-level
// operators below act on the derived columns only, so the honest total cost
// of a row is fixed by (m, k) alone; recomputed_tc reports that cost next to
// whatever the shuffled row claims (NaN when (m, k) admits no cycle).
struct DemoRow {
  int m = 0;
  double k = 0.0;
  double tr = 0.0;
  double t1 = 0.0;
  double T = 0.0;
  double Q = 0.0;
  double TC = 0.0;
};

struct DemoReplay {
  DemoRow row;
  double recomputed_tc = 0.0;
};

// Exchange the (t_r, t1) column pair between two parent rows.
std::array<DemoReplay, 2> demo_crossover(const horizon::HorizonParams& par,
                                         const DemoRow& r1, const DemoRow& r2);

// Swap t_r and t1 within a single row.
DemoReplay demo_mutation(const horizon::HorizonParams& par, const DemoRow& r);

}  // namespace survopt::ga
