#pragma once

#include <optional>
#include <utility>

namespace survopt::horizon {

// Finite-horizon two-warehouse model for a deteriorating product. The
// horizon H is cut into m equal cycles of length T = H/m; each cycle holds
// stock until t1 = kT and backlogs demand on [t1, T]. Owned storage (W1
// units, deterioration alpha after lifetime mu1) empties at t1; rented
// storage (deterioration beta after lifetime mu2) empties earlier, at the
// handover time t_r. Demand is a + b*q on stock q; costs are discounted
// at the net rate R.
struct HorizonParams {
  double a = 0.0;      // base demand rate
  double b = 0.0;      // stock sensitivity of demand
  double W1 = 0.0;     // owned-warehouse capacity
  double A = 0.0;      // ordering cost per order
  double Chr = 0.0;    // rented holding cost per unit-time
  double Cho = 0.0;    // owned holding cost per unit-time
  double C2 = 0.0;     // deterioration cost per unit
  double C3 = 0.0;     // shortage cost per unit-time
  double C4 = 0.0;     // lost-sale cost per unit
  double p = 0.0;      // purchase cost per unit
  double s = 0.0;      // selling price per unit (s > p; enters no cost term)
  double alpha = 0.0;  // owned-warehouse deterioration rate
  double beta = 0.0;   // rented-warehouse deterioration rate
  double delta = 0.0;  // backlogging decay per unit of waiting time
  double mu1 = 0.0;    // deterioration-free lifetime in owned storage
  double mu2 = 0.0;    // deterioration-free lifetime in rented storage
  double R = 0.0;      // net discount rate
  double H = 0.0;      // planning horizon
};

// Throws std::invalid_argument naming the offending field. mu1 == mu2 == 0
// is admitted (the no-lifetime degenerate case); rates near zero are
// epsilon-guarded internally rather than rejected.
void validate(const HorizonParams& par);

// Depletion time of the rented stock from the owned/rented handover match,
// bisected to 1e-12 on [mu2, t1]. nullopt when t1 <= mu2 or the match has
// no root there (the cycle is infeasible for these parameters).
std::optional<double> solve_tr(const HorizonParams& par, double t1);

// Rented stock at time zero implied by depletion at tr.
double initial_rw_stock(const HorizonParams& par, double tr);

// Inventory trajectories. Each throws std::domain_error outside its span.
double inventory_rw(double t, const HorizonParams& par, double tr);
double inventory_ow(double t, const HorizonParams& par, double tr, double t1);
// Signed stock on [t1, T]: zero at t1, then negative while demand backlogs
// at the linearized partial rate; shortage_level(T) == -BI.
double shortage_level(double t, const HorizonParams& par, double t1, double T);

struct OrderQuantities {
  double W2 = 0.0;  // rented stock at time zero
  double S = 0.0;   // W1 + W2, peak on-hand stock
  double BI = 0.0;  // backlog cleared at the next replenishment
  double Q = 0.0;   // S + BI, order size
};
std::optional<OrderQuantities> order_quantities(const HorizonParams& par,
                                                int m, double k);

// One-cycle discounted components and the horizon total
// TC = TCF * G + A e^{-RH}, G the geometric replication factor.
struct CostComponents {
  double T = 0.0, t1 = 0.0, tr = 0.0;
  double W2 = 0.0, S = 0.0, BI = 0.0, Q = 0.0;
  double OC = 0.0, HCr = 0.0, HCo = 0.0, DCr = 0.0, DCo = 0.0;
  double SC = 0.0, LC = 0.0, PC = 0.0;
  double TCF = 0.0, G = 0.0, TC = 0.0;
};
std::optional<CostComponents> total_cost(int m, double k,
                                         const HorizonParams& par);

// Best k for fixed m: sign-change scan of the finite-difference derivative
// over k = 0.01..0.99, then derivative bisection. converged=false means no
// interior stationary point existed and k is the scan-grid argmin. d2 is
// the numeric curvature at k (NaN when a probe point was infeasible).
struct KSolution {
  double k = 0.0;
  double TC = 0.0;
  bool converged = false;
  double d2 = 0.0;
};
std::optional<KSolution> solve_k(int m, const HorizonParams& par);

struct HorizonPolicy {
  int m = 0;
  double k = 0.0;
  double T = 0.0, t1 = 0.0, tr = 0.0;
  double W2 = 0.0, S = 0.0, BI = 0.0, Q = 0.0;
  double TC = 0.0;
  bool converged = false;  // from the chosen m's KSolution
};

// Incremental search: m = 1, 2, ... until TC first increases (cap m = 500).
// Throws std::runtime_error when no m yields a feasible cycle.
HorizonPolicy optimize(const HorizonParams& par);

// Geometric replication factor (1 - e^{-RH}) / (1 - e^{-RT}), equal to
// sum_{j=0}^{m-1} e^{-RjT}; R is epsilon-guarded.
double geometric_factor(double R, double H, int m);

// Series-truncated quadratic for the handover time; diagnostic only, the
// exact bisection above is authoritative. Returns both roots.
std::optional<std::pair<double, double>> tr_quadratic(const HorizonParams& par,
                                                      double t1);

}  // namespace survopt::horizon
