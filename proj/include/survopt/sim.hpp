#pragma once

#include <cstdint>
#include <vector>

namespace survopt::sim {

// Target profile for a synthetic finite population. Marginals are matched
// by mean and coefficient of variation — lognormal above CV 1, else normal
// — and dependence comes from a Gaussian copula whose latent correlation is
// recalibrated until every achieved Pearson correlation lands within 0.02
// of its target. Setting P in (0, 1) switches the second variable to a
// binary attribute: the latent normal is cut at its empirical 1-P quantile,
// so the attribute count is N*P to rounding. Setting cz > 0 adds a third
// variable z with its own targets.
struct PopulationTargets {
  std::size_t N = 0;
  double ybar = 1.0;
  double cy = 0.5;
  double xbar = 1.0;
  double cx = 0.5;
  double rho = 0.0;  // y-x (or y-attribute) Pearson target
  double P = -1.0;   // attribute prevalence; negative keeps x numeric
  double zbar = 1.0;
  double cz = -1.0;  // enable z by making this positive
  double rho_yz = 0.0;
  double rho_xz = 0.0;
};

struct SyntheticPopulation {
  std::size_t N = 0;
  std::vector<double> y;
  std::vector<double> x;    // empty in attribute mode
  std::vector<int> phi;     // empty unless attribute mode
  std::vector<double> z;    // empty unless z enabled
  std::uint64_t seed = 0;
  // achieved-vs-target report
  double ybar = 0.0, cy = 0.0;
  double xbar = 0.0, cx = 0.0;
  double rho = 0.0;
  double p = 0.0;
  double zbar = 0.0, cz = 0.0;
  double rho_yz = 0.0, rho_xz = 0.0;
  int tries = 0;  // copula recalibration attempts spent
};

// Deterministic for a fixed seed. Throws std::invalid_argument on a target
// correlation above 0.95 in magnitude, a jointly inconsistent (non
// positive-definite) correlation matrix, or non-positive means/CVs; throws
// std::runtime_error when 50 recalibration attempts cannot land within
// 0.02 (tiny populations with ambitious targets).
SyntheticPopulation generate_population(const PopulationTargets& targets,
                                        std::uint64_t seed);

enum class Estimator {
  mean,     // plain expansion estimator ybar_s
  ratio,    // ybar_s * Xbar / xbar_s
  product,  // ybar_s * xbar_s / Xbar
};

struct MseOptions {
  Estimator estimator = Estimator::mean;
  std::size_t n = 0;
  long replicates = 10000;
  std::uint64_t seed = 1;
};

struct MseResult {
  double mse = 0.0;        // mean squared error about the true mean of y
  double bias = 0.0;
  double mc_stderr = 0.0;  // standard error of the mse estimate; 0 if exact
  long reps_used = 0;
  long degenerate = 0;     // draws where the estimator was undefined
  bool enumerated = false;
};

// Replicated SRSWOR evaluation of the estimator itself (not a variance
// formula). When C(N, n) <= 1e6 every sample is enumerated once and the
// result is exact; otherwise `replicates` Monte-Carlo draws are taken.
// Throws std::invalid_argument unless n < N and replicates >= 1e4, or when
// the estimator needs a numeric x the population lacks; throws
// std::runtime_error when degenerate draws reach 0.1% of the total.
MseResult empirical_mse(const SyntheticPopulation& pop,
                        const MseOptions& opt);

}  // namespace survopt::sim
