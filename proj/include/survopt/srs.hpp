#pragma once

#include <string>
#include <vector>

#include "survopt/convention.hpp"

namespace survopt::srs {

// Simple-random-sampling (without replacement) summary of a finite
// population with one auxiliary variable.
struct Population {
  double N = 0.0, n = 0.0;
  double ybar = 0.0, xbar = 0.0;
  double cy = 0.0, cx = 0.0;  // coefficients of variation
  double rho = 0.0;

  double lam() const { return (N - n) / (N * n); }
  // expansion variable of the dual (transformed-auxiliary) estimators
  double g() const { return n / (N - n); }
  double cyx() const { return rho * cy * cx; }
};

// The three |theta| shifts used by the ratio/product families:
// classical theta = 1, cv-shifted xbar/(xbar + Cx), rho-shifted
// xbar/(xbar + rho).
enum class Shift { none, cv, corr };

double shift_factor(const Population& p, Shift s);

// First-order MSEs of the plain mean and the shifted ratio/product
// estimators.
double mse_mean(const Population& p);
double mse_ratio(const Population& p, Shift s);
double mse_product(const Population& p, Shift s);

// Duals estimate from the complement-transformed auxiliary; their MSEs are
// g^2 times the parent's.
double mse_dual_ratio(const Population& p, Shift s);
double mse_dual_product(const Population& p, Shift s);

struct KOpt {
  double k = 0.0;
  double mse = 0.0;
};

// Optimally weighted duals (convex weight k on the dual term). The product
// branch of the shifted families carries a lambda^2 factor in its printed
// optimal-k numerator; Convention::sign_consistent drops the extra lambda.
KOpt opt_dual_ratio(const Population& p, Shift s);
KOpt opt_dual_product(const Population& p, Shift s,
                      Convention c = Convention::strict);

// Two-parameter shrinkage family over a pair of transformed auxiliaries.
struct TwoParamConfig {
  double alpha = 1.0, beta = 1.0;
  double psi = 1.0, delta = 1.0, omega = 1.0, mu = 1.0;
};

struct TwoParamOpt {
  double m1 = 0.0, m2 = 0.0;
  double mse = 0.0;
};

TwoParamOpt opt_two_param(const Population& p, const TwoParamConfig& cfg);

}  // namespace survopt::srs
