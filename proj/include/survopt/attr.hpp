#pragma once

#include <string>
#include <vector>

#include "survopt/convention.hpp"

namespace survopt::attr {

// Finite population summarised by a study variable y and an auxiliary
// attribute with incidence P. When a first-phase sample is present
// (nprime > 0) the two-phase variants apply.
struct Population {
  double N = 0.0, n = 0.0;
  double ybar = 0.0;
  double P = 0.0;
  double cy = 0.0, cp = 0.0;  // CV of y, CV of the attribute
  double rho = 0.0;           // point-biserial correlation
  double beta2 = 0.0;         // attribute kurtosis (member catalog only)
  double nprime = 0.0, pprime = 0.0;

  bool two_phase() const { return nprime > 0.0; }
  double kp() const { return rho * cy / cp; }
  double f1() const { return 1.0 / n - 1.0 / N; }
  double f2() const { return 1.0 / nprime - 1.0 / N; }
  double f3() const { return f1() - f2(); }
  double sphi() const { return cp * P; }
  double ffrac() const { return n / N; }
};

// One member of the shrinkage families: shape constants K1..K5 and the
// three exponents. In the two-phase forms the exponent slots read
// (m, n, gamma) but keep the same storage.
struct Member {
  double K1 = 1.0, K2 = 1.0, K3 = 1.0, K4 = 1.0, K5 = 1.0;
  double alpha = 1.0, beta = 1.0, lambda = 1.0;
};

double V1(const Population& p, const Member& m);  // K1 P / (K1 P + K2 K3)
double V2(const Population& p, const Member& m);  // K4 P / (K4 P + K5)

double mse_mean(const Population& p);  // ybar^2 f1 Cy^2

// Exponential shift family (single phase).
double mse_shift(const Population& p, const Member& m);
double bias_shift(const Population& p, const Member& m);

// Mixed power family (single phase).
double mse_mixed(const Population& p, const Member& m);
double bias_mixed(const Population& p, const Member& m);

struct Weights {
  double w1 = 0.0, w2 = 0.0, w3 = 0.0;
};

// Optimal weights for the three-term combination: unit sum, slope matched
// to kp, first-order bias removed.
Weights solve_weights(const Population& p, const Member& m);

// Combined-estimator MSE surface at given weights; at the solved weights it
// collapses to min_mse.
double mse_weighted(const Population& p, const Member& m, const Weights& w);
double min_mse(const Population& p);  // ybar^2 f1 Cy^2 (1 - rho^2)

// Two-phase analogues. R2 carries the printed 1/2 factor; the strict mixed
// MSE omits the cross term, sign_consistent restores it.
double R1(const Population& p, const Member& m);
double R2(const Population& p, const Member& m);
double mse_shift_d(const Population& p, const Member& m);
double mse_mixed_d(const Population& p, const Member& m,
                   Convention c = Convention::strict);
Weights solve_weights_d(const Population& p, const Member& m);
double mse_weighted_d(const Population& p, const Member& m, const Weights& w);
double min_mse_d(const Population& p);  // ybar^2 Cy^2 (f1 - f3 rho^2)

double pre(const Population& p, double mse);

// Catalog of the 25 published member parameterisations: (id, first, second),
// where the pair instantiates (K1, K3) for the shift family or (K4, K5) for
// the mixed family.
struct CatalogRow {
  std::string id;
  double first = 0.0;
  double second = 0.0;
};

std::vector<CatalogRow> member_catalog(const Population& p);

}  // namespace survopt::attr
