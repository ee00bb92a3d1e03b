#include "survopt/horizon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "survopt/numeric.hpp"

namespace survopt::horizon {

namespace {

// R and b sit in denominators throughout; clamping tiny values keeps the
// closed forms finite and matches the exact limits well past the tolerances
// used anywhere downstream.
HorizonParams guarded(HorizonParams par) {
  if (par.R < 1e-8) par.R = 1e-8;
  if (par.b < 1e-9) par.b = 1e-9;
  return par;
}

// Owned-warehouse level continuity at the rented-stock depletion time:
// decayed-capacity branch meets the depletion branch.
double handover_mismatch(const HorizonParams& g, double t1, double tr) {
  const double ab = g.alpha + g.b;
  return (g.a / ab) * std::expm1(ab * (t1 - tr)) -
         g.W1 * std::exp(g.alpha * (g.mu1 - tr));
}

std::optional<double> solve_tr_g(const HorizonParams& g, double t1) {
  if (t1 <= g.mu2) return std::nullopt;
  double lo = g.mu2, hi = t1;
  const double flo = handover_mismatch(g, t1, lo);
  const double fhi = handover_mismatch(g, t1, hi);
  if (flo < 0.0 || fhi > 0.0) return std::nullopt;  // not bracketed
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (handover_mismatch(g, t1, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double rw_stock_g(const HorizonParams& g, double tr) {
  const double bb = g.beta + g.b;
  return (g.a / g.b) * std::expm1(g.b * g.mu2) +
         (g.a / bb) * std::exp(g.b * g.mu2) * std::expm1(bb * (tr - g.mu2));
}

std::optional<CostComponents> components_g(const HorizonParams& g, int m,
                                           double k) {
  const double T = g.H / m;
  const double t1 = k * T;
  const auto tr_opt = solve_tr_g(g, t1);
  if (!tr_opt) return std::nullopt;
  const double tr = *tr_opt;

  const double a = g.a, b = g.b, R = g.R;
  const double bb = g.beta + b;
  const double ab = g.alpha + b;
  const double w2 = rw_stock_g(g, tr);

  // discounted holding integrals, piecewise closed forms
  const double I1 = w2 * num::eint(R + b, g.mu2) +
                    (a / b) * (num::eint(R + b, g.mu2) - num::eint(R, g.mu2));
  const double I2 =
      (a / bb) * ((std::exp(bb * (tr - g.mu2) - R * g.mu2) - std::exp(-R * tr)) /
                      (bb + R) -
                  (std::exp(-R * g.mu2) - std::exp(-R * tr)) / R);
  const double J1 = g.W1 * num::eint(R, g.mu1);
  const double J2 = g.W1 * std::exp(g.alpha * g.mu1) *
                    (std::exp(-(g.alpha + R) * g.mu1) -
                     std::exp(-(g.alpha + R) * tr)) /
                    (g.alpha + R);
  const double J3 =
      (a / ab) * ((std::exp(ab * (t1 - tr) - R * tr) - std::exp(-R * t1)) /
                      (ab + R) -
                  (std::exp(-R * tr) - std::exp(-R * t1)) / R);

  const double HCr = g.Chr * (I1 + I2);
  const double HCo = g.Cho * (J1 + J2 + J3);
  const double DCr = g.C2 * g.beta * I2;
  const double DCo = g.C2 * g.alpha * (J2 + J3);

  const double D = T - t1;
  const double x = R * D;
  const double SC =
      g.C3 * a * std::exp(-R * t1) *
      ((1.0 - g.delta * D) * num::psi1(x) / (R * R) +
       0.5 * g.delta * num::psi2(x) / (R * R * R));
  const double LC =
      g.C4 * a * g.delta * std::exp(-R * t1) * num::phi(x) / (R * R);

  const double BI = a * D * (1.0 - 0.5 * g.delta * D);
  const double S = g.W1 + w2;
  const double PC = g.p * (S + std::exp(-R * T) * BI);
  const double OC = g.A;

  const double TCF = OC + HCr + HCo + DCr + DCo + SC + LC + PC;
  const double G = std::expm1(-R * g.H) / std::expm1(-R * T);
  const double TC = TCF * G + g.A * std::exp(-R * g.H);

  CostComponents c;
  c.T = T;
  c.t1 = t1;
  c.tr = tr;
  c.W2 = w2;
  c.S = S;
  c.BI = BI;
  c.Q = S + BI;
  c.OC = OC;
  c.HCr = HCr;
  c.HCo = HCo;
  c.DCr = DCr;
  c.DCo = DCo;
  c.SC = SC;
  c.LC = LC;
  c.PC = PC;
  c.TCF = TCF;
  c.G = G;
  c.TC = TC;
  return c;
}

std::optional<double> tc_g(const HorizonParams& g, int m, double k) {
  const auto c = components_g(g, m, k);
  if (!c) return std::nullopt;
  return c->TC;
}

void check_m(int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
}

std::optional<KSolution> solve_k_g(const HorizonParams& g, int m) {
  std::vector<std::pair<double, double>> feas;
  for (int i = 1; i <= 99; ++i) {
    const double kk = i / 100.0;
    if (const auto v = tc_g(g, m, kk)) feas.emplace_back(kk, *v);
  }
  if (feas.empty()) return std::nullopt;

  const double h = 1e-7;
  auto deriv = [&](double kk) -> std::optional<double> {
    const auto va = tc_g(g, m, kk + h);
    const auto vb = tc_g(g, m, kk - h);
    if (!va || !vb) return std::nullopt;
    return (*va - *vb) / (2.0 * h);
  };

  KSolution sol;
  bool found = false;
  for (std::size_t i = 0; i + 1 < feas.size(); ++i) {
    const auto d0 = deriv(feas[i].first);
    const auto d1 = deriv(feas[i + 1].first);
    if (!d0 || !d1) continue;
    if (*d0 < 0.0 && *d1 >= 0.0) {
      double lo = feas[i].first, hi = feas[i + 1].first;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto dm = deriv(mid);
        if (!dm) break;
        if (*dm < 0.0)
          lo = mid;
        else
          hi = mid;
        if (hi - lo < 1e-12) break;
      }
      sol.k = 0.5 * (lo + hi);
      sol.TC = *tc_g(g, m, sol.k);
      sol.converged = true;
      found = true;
      break;
    }
  }
  if (!found) {
    // no interior stationary point: best scan gridpoint (feasibility edge)
    const auto it = std::min_element(
        feas.begin(), feas.end(),
        [](const auto& x, const auto& y) { return x.second < y.second; });
    sol.k = it->first;
    sol.TC = it->second;
    sol.converged = false;
  }

  const auto va = tc_g(g, m, sol.k + 1e-4);
  const auto vb = tc_g(g, m, sol.k - 1e-4);
  sol.d2 = (va && vb) ? (*va - 2.0 * sol.TC + *vb) / 1e-8
                      : std::numeric_limits<double>::quiet_NaN();
  return sol;
}

}  // namespace

void validate(const HorizonParams& par) {
  auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
  if (!(par.a > 0.0)) fail("a: base demand rate must be positive");
  if (!(par.b >= 0.0)) fail("b: stock sensitivity must be non-negative");
  if (!(par.W1 >= 0.0)) fail("W1: owned capacity must be non-negative");
  if (!(par.A >= 0.0)) fail("A: ordering cost must be non-negative");
  if (!(par.Cho >= 0.0)) fail("Cho: owned holding cost must be non-negative");
  if (!(par.Chr > par.Cho))
    fail("Chr: rented holding cost must exceed the owned holding cost");
  if (!(par.C2 >= 0.0)) fail("C2: deterioration cost must be non-negative");
  if (!(par.C3 >= 0.0)) fail("C3: shortage cost must be non-negative");
  if (!(par.C4 >= 0.0)) fail("C4: lost-sale cost must be non-negative");
  if (!(par.p >= 0.0)) fail("p: purchase cost must be non-negative");
  if (!(par.s > par.p)) fail("s: selling price must exceed the purchase cost");
  if (!(par.alpha >= 0.0 && par.alpha < 1.0))
    fail("alpha: owned deterioration rate must lie in [0, 1)");
  if (!(par.beta >= 0.0 && par.beta < 1.0))
    fail("beta: rented deterioration rate must lie in [0, 1)");
  if (!(par.alpha > par.beta))
    fail("alpha: owned stock must deteriorate faster than rented stock");
  if (!(par.delta >= 0.0 && par.delta <= 1.0))
    fail("delta: backlogging decay must lie in [0, 1]");
  if (!(par.mu1 >= 0.0)) fail("mu1: owned lifetime must be non-negative");
  if (!(par.mu2 >= par.mu1))
    fail("mu2: rented lifetime must be at least the owned lifetime");
  if (!(par.R >= 0.0)) fail("R: discount rate must be non-negative");
  if (!(par.H > 0.0)) fail("H: planning horizon must be positive");
}

std::optional<double> solve_tr(const HorizonParams& par, double t1) {
  return solve_tr_g(guarded(par), t1);
}

double initial_rw_stock(const HorizonParams& par, double tr) {
  return rw_stock_g(guarded(par), tr);
}

double inventory_rw(double t, const HorizonParams& par, double tr) {
  if (t < 0.0 || t > tr)
    throw std::domain_error("rented-warehouse level defined on [0, tr] only");
  const HorizonParams g = guarded(par);
  const double bb = g.beta + g.b;
  if (t <= g.mu2) {
    const double w2 = rw_stock_g(g, tr);
    return w2 * std::exp(-g.b * t) + (g.a / g.b) * std::expm1(-g.b * t);
  }
  return (g.a / bb) * std::expm1(bb * (tr - t));
}

double inventory_ow(double t, const HorizonParams& par, double tr, double t1) {
  if (t < 0.0 || t > t1)
    throw std::domain_error("owned-warehouse level defined on [0, t1] only");
  const HorizonParams g = guarded(par);
  if (t <= g.mu1) return g.W1;
  if (t <= tr) return g.W1 * std::exp(g.alpha * (g.mu1 - t));
  const double ab = g.alpha + g.b;
  return (g.a / ab) * std::expm1(ab * (t1 - t));
}

double shortage_level(double t, const HorizonParams& par, double t1,
                      double T) {
  if (t < t1 || t > T)
    throw std::domain_error("shortage level defined on [t1, T] only");
  const HorizonParams g = guarded(par);
  return g.a * (t1 - t) * (1.0 - g.delta * T + 0.5 * g.delta * (t1 + t));
}

std::optional<OrderQuantities> order_quantities(const HorizonParams& par,
                                                int m, double k) {
  check_m(m);
  const HorizonParams g = guarded(par);
  const double T = g.H / m;
  const double t1 = k * T;
  const auto tr = solve_tr_g(g, t1);
  if (!tr) return std::nullopt;
  OrderQuantities q;
  q.W2 = rw_stock_g(g, *tr);
  if (q.W2 < 0.0)
    throw std::domain_error("negative rented stock implied by the handover");
  q.S = g.W1 + q.W2;
  const double D = T - t1;
  q.BI = g.a * D * (1.0 - 0.5 * g.delta * D);
  q.Q = q.S + q.BI;
  return q;
}

std::optional<CostComponents> total_cost(int m, double k,
                                         const HorizonParams& par) {
  check_m(m);
  return components_g(guarded(par), m, k);
}

std::optional<KSolution> solve_k(int m, const HorizonParams& par) {
  check_m(m);
  return solve_k_g(guarded(par), m);
}

HorizonPolicy optimize(const HorizonParams& par) {
  validate(par);
  const HorizonParams g = guarded(par);
  std::optional<HorizonPolicy> prev;
  for (int m = 1; m <= 500; ++m) {
    const auto ks = solve_k_g(g, m);
    if (!ks) {
      if (!prev)
        throw std::runtime_error(
            "no feasible cycle count: the shortest cycle already leaves the "
            "rented warehouse unusable");
      break;
    }
    if (prev && ks->TC > prev->TC) break;
    const auto c = components_g(g, m, ks->k);
    HorizonPolicy pol;
    pol.m = m;
    pol.k = ks->k;
    pol.T = c->T;
    pol.t1 = c->t1;
    pol.tr = c->tr;
    pol.W2 = c->W2;
    pol.S = c->S;
    pol.BI = c->BI;
    pol.Q = c->Q;
    pol.TC = ks->TC;
    pol.converged = ks->converged;
    prev = pol;
  }
  return *prev;
}

double geometric_factor(double R, double H, int m) {
  check_m(m);
  if (R < 1e-8) R = 1e-8;
  return std::expm1(-R * H) / std::expm1(-R * H / m);
}

std::optional<std::pair<double, double>> tr_quadratic(const HorizonParams& par,
                                                      double t1) {
  const HorizonParams g = guarded(par);
  const double ab = g.alpha + g.b;
  const double ea = std::exp(g.alpha * g.mu1);
  const double et = std::exp(ab * t1);
  const double A2 = g.W1 * g.alpha * ea + g.a * et;
  const double disc =
      A2 * A2 + (4.0 * g.a * g.alpha * g.b / ab) *
                    (g.W1 * ea - (g.a / ab) * et + g.a / ab);
  if (disc < 0.0) return std::nullopt;
  const double den = 2.0 * (-g.a * g.alpha * g.b / ab);
  const double rt = std::sqrt(disc);
  return std::make_pair((A2 + rt) / den, (A2 - rt) / den);
}

}  // namespace survopt::horizon
