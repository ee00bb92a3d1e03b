#pragma once

#include <string>
#include <vector>

#include "survopt/convention.hpp"
#include "survopt/stats.hpp"

namespace survopt::strat {

enum class Estimator {
  mean,       // stratified sample mean
  ratio,      // classical ratio on x                  (t1)
  srd,        // single ratio-difference on x          (t2)
  drd,        // double ratio-difference, x and z      (t3)
  dpd,        // double product-difference, x and z    (t4)
  mixed_rp,   // ratio on x, product on z              (t5)
  mixed_pr,   // product on x, ratio on z              (t6)
  regsum,     // per-stratum double-regression sum     (t7)
  pooled      // pooled two-slope regression           (t_p)
};

// First-order MSE of one estimator over the frame (absolute units).
double mse(const stats::StratifiedFrame& fr, Estimator e,
           Convention c = Convention::strict);

// Percent relative efficiency vs the stratified mean: 100 * MSE(mean)/MSE(e).
double pre(const stats::StratifiedFrame& fr, Estimator e,
           Convention c = Convention::strict);

struct PreRow {
  std::string name;
  double mse = 0.0;
  double pre = 0.0;
};

// All nine rows in display order.
std::vector<PreRow> pre_table(const stats::StratifiedFrame& fr,
                              Convention c = Convention::strict);

// Pooled estimator internals: the optimal weights and the quantities the
// surface is built from. The minimised MSE coincides with the two-slope
// regression bound ybar^2 (v200 - u1 v110 - u2 v101).
struct PooledSolution {
  double b1 = 0.0, b2 = 0.0;  // pooled regression slopes
  double u1 = 0.0, u2 = 0.0;  // normal-equation solution in the v-moments
  double m1 = 0.0, m2 = 0.0;  // optimal surface weights
  double mse = 0.0;
};

PooledSolution solve_pooled(const stats::StratifiedFrame& fr);

// The pooled MSE surface at arbitrary weights (used to verify stationarity).
double pooled_surface(const stats::StratifiedFrame& fr, double m1, double m2);

struct GapRow {
  std::string name;
  double gap = 0.0;       // MSE(mean) - MSE(e); positive means e wins
  bool preferred = false;
};

// Efficiency conditions of each estimator against the plain mean.
std::vector<GapRow> efficiency_gaps(const stats::StratifiedFrame& fr,
                                    Convention c = Convention::strict);

}  // namespace survopt::strat
