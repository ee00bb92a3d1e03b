#include "survopt/eoq.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace survopt::eoq {

namespace {

void check_qk(double Q, double K) {
  if (Q <= 0.0 || K <= 0.0) throw std::domain_error("Q and K must be positive");
}

double gsum(const std::array<double, 4>& v) {
  return (v[0] + 2.0 * v[1] + 2.0 * v[2] + v[3]) / 6.0;
}

std::array<double, 4> arr(const fuzzy::TrapezoidalFuzzy& t) {
  return {t.c, t.a, t.b, t.d};
}

// Graded aggregates of the componentwise cost quadruple. Product terms that
// enter with a minus sign pair component i with capacity component 4-i; the
// quadruple subtraction rule reflects its right operand, and these products
// are subtrahends.
struct GradedSums {
  double S_AD;  // gsum(A .* D)
  double Fbar;  // graded mean of F
  double G1;    // gsum(rev(W) .* (F (-) H))
  double G2;    // graded mean of F (-) H
  double G4;    // gsum((F (-) H) .* W.^2)
  double Dbar;  // graded mean of D
  double WDs;   // gsum(rev(W) .* D)
  double Wbar;  // graded mean of W; ceiling for the release lot
};

GradedSums graded(const FuzzyEoqParams& p) {
  auto d = arr(p.D), f = arr(p.F), a = arr(p.A), w = arr(p.W);
  auto fh = arr(fuzzy::fuzzy_sub(p.F, p.H));
  std::array<double, 4> ad{}, wfh{}, fhw2{}, wd{};
  for (int i = 0; i < 4; ++i) {
    ad[i] = a[i] * d[i];
    wfh[i] = w[3 - i] * fh[i];
    fhw2[i] = fh[i] * w[i] * w[i];
    wd[i] = w[3 - i] * d[i];
  }
  return {gsum(ad), gsum(f),  gsum(wfh), gsum(fh),
          gsum(fhw2), gsum(d), gsum(wd),  gsum(w)};
}

}  // namespace

double crisp_cost(double Q, double K, const EoqParams& p) {
  check_qk(Q, K);
  double fh = p.F - p.H;
  return p.A * p.D / Q + p.F * Q / 2.0 - p.W * fh + K / 2.0 * fh -
         K * p.W / (2.0 * Q) * fh + p.Ct * (Q - p.W) * p.D / (Q * K) +
         p.W * p.W / (2.0 * Q) * fh;
}

FuzzyCost fuzzy_cost(double Q, double K, const FuzzyEoqParams& p) {
  check_qk(Q, K);
  auto d = arr(p.D), f = arr(p.F), a = arr(p.A), w = arr(p.W);
  auto fh = arr(fuzzy::fuzzy_sub(p.F, p.H));
  std::array<double, 4> q{};
  for (int i = 0; i < 4; ++i) {
    double wr = w[3 - i];
    q[i] = a[i] * d[i] / Q + f[i] * Q / 2.0 - wr * fh[i] + fh[i] * K / 2.0 -
           wr * fh[i] * K / (2.0 * Q) + p.Ct * d[i] / K -
           p.Ct * wr * d[i] / (Q * K) + fh[i] * w[i] * w[i] / (2.0 * Q);
  }
  return {{q[0], q[1], q[2], q[3]}, gsum(q)};
}

double no_release_cost(double Q, const EoqParams& p) {
  if (Q <= 0.0) throw std::domain_error("Q must be positive");
  if (!p.Ct_star)
    throw std::invalid_argument("no-release variant needs Ct_star configured");
  double fh = p.F - p.H;
  return p.A * p.D / Q + p.F * Q / 2.0 + p.W * p.W * fh / (2.0 * Q) -
         p.W * fh + (Q - p.W) * *p.Ct_star * p.D / Q;
}

FuzzyCost no_release_cost(double Q, const FuzzyEoqParams& p) {
  if (Q <= 0.0) throw std::domain_error("Q must be positive");
  if (!p.Ct_star)
    throw std::invalid_argument("no-release variant needs Ct_star configured");
  double cts = *p.Ct_star;
  auto d = arr(p.D), f = arr(p.F), a = arr(p.A), w = arr(p.W);
  auto fh = arr(fuzzy::fuzzy_sub(p.F, p.H));
  std::array<double, 4> q{};
  for (int i = 0; i < 4; ++i) {
    double wr = w[3 - i];
    q[i] = a[i] * d[i] / Q + f[i] * Q / 2.0 - wr * fh[i] +
           cts * (d[i] - wr * d[i] / Q) + fh[i] * w[i] * w[i] / (2.0 * Q);
  }
  return {{q[0], q[1], q[2], q[3]}, gsum(q)};
}

EoqSolution solve_crisp(const EoqParams& p) {
  if (!(p.F > p.H))
    throw std::invalid_argument("K-release optimum undefined: needs F > H");
  double fh = p.F - p.H;
  EoqSolution s;
  double Q = 2.0 * p.W, K = p.W / 2.0;
  for (int it = 1; it <= 200; ++it) {
    s.iterations = it;
    double Kn = std::min(std::sqrt(2.0 * p.Ct * p.D / fh), p.W);
    double rad = (2.0 * p.A * p.D - Kn * p.W * fh -
                  2.0 * p.Ct * p.W * p.D / Kn + p.W * p.W * fh) /
                 p.F;
    if (!(rad > 0.0)) break;
    double Qn = std::sqrt(rad);
    bool done = std::abs(Qn - Q) + std::abs(Kn - K) < 1e-9 * (1.0 + Qn + Kn);
    Q = Qn;
    K = Kn;
    if (done) {
      s.converged = true;
      break;
    }
  }
  s.Q = Q;
  s.K = K;
  s.cost = crisp_cost(Q, K, p);
  return s;
}

EoqSolution solve_fuzzy(const FuzzyEoqParams& p) {
  GradedSums g = graded(p);
  if (!(g.G2 > 0.0))
    throw std::invalid_argument(
        "K-release optimum undefined: needs graded-mean F > graded-mean H");
  EoqSolution s;
  double Q = 2.0 * g.Wbar, K = g.Wbar / 2.0;
  for (int it = 1; it <= 200; ++it) {
    s.iterations = it;
    double knum = 2.0 * p.Ct * (Q * g.Dbar - g.WDs);
    double kden = Q * g.G2 - g.G1;
    if (!(knum > 0.0) || !(kden > 0.0)) break;
    double Kn = std::min(std::sqrt(knum / kden), g.Wbar);
    double rad =
        (2.0 * g.S_AD + g.G4 - g.G1 * Kn - 2.0 * p.Ct * g.WDs / Kn) / g.Fbar;
    if (!(rad > 0.0)) break;
    double Qn = std::sqrt(rad);
    bool done = std::abs(Qn - Q) + std::abs(Kn - K) < 1e-9 * (1.0 + Qn + Kn);
    Q = Qn;
    K = Kn;
    if (done) {
      s.converged = true;
      break;
    }
  }
  s.Q = Q;
  s.K = K;
  s.cost = fuzzy_cost(Q, K, p).value;
  return s;
}

EoqSolution solve_no_release(const EoqParams& p) {
  if (!p.Ct_star)
    throw std::invalid_argument("no-release variant needs Ct_star configured");
  double rad = (2.0 * p.A * p.D + p.W * p.W * (p.F - p.H) -
                2.0 * *p.Ct_star * p.D * p.W) /
               p.F;
  if (!(rad > 0.0))
    throw std::domain_error("no-release optimum undefined for these parameters");
  EoqSolution s;
  s.Q = std::sqrt(rad);
  s.K = 0.0;
  s.cost = no_release_cost(s.Q, p);
  s.iterations = 1;
  s.converged = true;
  return s;
}

EoqSolution solve_no_release(const FuzzyEoqParams& p) {
  if (!p.Ct_star)
    throw std::invalid_argument("no-release variant needs Ct_star configured");
  GradedSums g = graded(p);
  double rad =
      (2.0 * g.S_AD + g.G4 - 2.0 * *p.Ct_star * g.WDs) / g.Fbar;
  if (!(rad > 0.0))
    throw std::domain_error("no-release optimum undefined for these parameters");
  EoqSolution s;
  s.Q = std::sqrt(rad);
  s.K = 0.0;
  s.cost = no_release_cost(s.Q, p).value;
  s.iterations = 1;
  s.converged = true;
  return s;
}

bool k_release_economical(const EoqParams& p, double K) {
  if (K <= 0.0) throw std::domain_error("K must be positive");
  if (!p.Ct_star)
    throw std::invalid_argument("k_release_economical needs Ct_star configured");
  return (*p.Ct_star - p.Ct / K) > K * (p.F - p.H) / (2.0 * p.D);
}

}  // namespace survopt::eoq
