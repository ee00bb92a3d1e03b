#pragma once

#include <functional>
#include <optional>

namespace survopt::num {

// Stable kernels for discounted-flow integrals. All three vanish at 0 like
// x^2 (phi, psi1) or x^3 (psi2); series branches kick in below |x| = 1e-3
// where the closed forms lose digits to cancellation.

// phi(x) = exp(-x) - 1 + x
double phi(double x);

// psi1(x) = 1 - (1 + x) exp(-x)
double psi1(double x);

// psi2(x) = 2 - (2 + 2x + x^2) exp(-x)
double psi2(double x);

// eint(x, t) = integral of exp(-x u) du over [0, t] = (1 - exp(-x t)) / x,
// with the x -> 0 limit handled.
double eint(double x, double t);

struct RootResult {
  double root = 0.0;
  int iters = 0;
  bool converged = false;
};

// Bisection on [lo, hi]. Requires a sign change (either orientation);
// returns nullopt when f(lo) and f(hi) have the same strict sign.
std::optional<RootResult> bisect(const std::function<double(double)>& f,
                                 double lo, double hi,
                                 double tol = 1e-12, int max_iter = 200);

// Adaptive Simpson quadrature on [a, b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10, int max_depth = 50);

struct GridPoint {
  double x = 0.0;
  double value = 0.0;
};

// Dense scan of f over n+1 equally spaced points on [lo, hi]; returns the
// argmin. Points where f returns NaN are skipped; nullopt if all are NaN.
std::optional<GridPoint> grid_min(const std::function<double(double)>& f,
                                  double lo, double hi, int n);

// Central finite differences.
double fd1(const std::function<double(double)>& f, double x, double h);
double fd2(const std::function<double(double)>& f, double x, double h);

}  // namespace survopt::num
