#pragma once

#include <optional>

#include "survopt/fuzzy.hpp"

namespace survopt::eoq {

// Two-warehouse lot-size model. Stock above the owned-warehouse capacity W
// sits in a rented warehouse at the higher holding rate F; the owned stock
// (rate H) is either drip-released in lots of K at Ct per shipment, or moved
// in one go at Ct_star per unit when the release rule is off.
struct EoqParams {
  double D = 0.0;   // demand rate
  double A = 0.0;   // ordering cost per order
  double F = 0.0;   // rented-warehouse holding cost per unit-time
  double H = 0.0;   // owned-warehouse holding cost per unit-time
  double W = 0.0;   // owned-warehouse capacity
  double Ct = 0.0;  // transport cost per release lot
  std::optional<double> Ct_star;  // per-unit transport cost, no-release variant
};

struct FuzzyEoqParams {
  fuzzy::TrapezoidalFuzzy D, F, H, A, W;
  double Ct = 0.0;
  std::optional<double> Ct_star;
};

struct EoqSolution {
  double Q = 0.0;
  double K = 0.0;  // 0 when the release rule is off
  double cost = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Fuzzy cost comes back as the assembled quadruple plus its graded mean.
struct FuzzyCost {
  fuzzy::TrapezoidalFuzzy quad;
  double value = 0.0;
};

double crisp_cost(double Q, double K, const EoqParams& p);
FuzzyCost fuzzy_cost(double Q, double K, const FuzzyEoqParams& p);

// Average cost when the whole owned stock moves once at Ct_star per unit.
double no_release_cost(double Q, const EoqParams& p);
FuzzyCost no_release_cost(double Q, const FuzzyEoqParams& p);

// Alternation on the two first-order conditions: K from the transport /
// holding balance (clamped into (0, W]), then Q given K, until the joint
// step shrinks below 1e-9 * (1 + Q + K) or 200 rounds.
EoqSolution solve_crisp(const EoqParams& p);
EoqSolution solve_fuzzy(const FuzzyEoqParams& p);

// Closed-form optimum of the no-release cost.
EoqSolution solve_no_release(const EoqParams& p);
EoqSolution solve_no_release(const FuzzyEoqParams& p);

// Release rule pays off iff (Ct_star - Ct/K) > K (F - H) / (2 D).
bool k_release_economical(const EoqParams& p, double K);

}  // namespace survopt::eoq
