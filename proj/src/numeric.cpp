#include "survopt/numeric.hpp"

#include <cmath>
#include <limits>

namespace survopt::num {

double phi(double x) {
  if (std::fabs(x) < 1e-3) {
    // x^2/2 (1 - x/3 + x^2/12 - x^3/60)
    return 0.5 * x * x * (1.0 + x * (-1.0 / 3.0 + x * (1.0 / 12.0 - x / 60.0)));
  }
  return std::expm1(-x) + x;
}

double psi1(double x) {
  if (std::fabs(x) < 1e-3) {
    // x^2/2 (1 - 2x/3 + x^2/4 - x^3/15)
    return 0.5 * x * x * (1.0 + x * (-2.0 / 3.0 + x * (0.25 - x / 15.0)));
  }
  return -std::expm1(-x) - x * std::exp(-x);
}

double psi2(double x) {
  if (std::fabs(x) < 1e-3) {
    // x^3/3 (1 - 3x/4 + 3x^2/10)
    return x * x * x / 3.0 * (1.0 + x * (-0.75 + x * 0.3));
  }
  return 2.0 - (2.0 + 2.0 * x + x * x) * std::exp(-x);
}

double eint(double x, double t) {
  if (std::fabs(x) < 1e-12) return t * (1.0 - 0.5 * x * t);
  return -std::expm1(-x * t) / x;
}

std::optional<RootResult> bisect(const std::function<double(double)>& f,
                                 double lo, double hi, double tol,
                                 int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return RootResult{lo, 0, true};
  if (fhi == 0.0) return RootResult{hi, 0, true};
  if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;
  RootResult r;
  for (r.iters = 0; r.iters < max_iter; ++r.iters) {
    double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol) {
      r.root = mid;
      r.converged = true;
      return r;
    }
    double fm = f(mid);
    if (fm == 0.0) {
      r.root = mid;
      r.converged = true;
      return r;
    }
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  r.root = 0.5 * (lo + hi);
  r.converged = false;
  return r;
}

namespace {

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                double fa, double fm, double fb, double whole, double tol,
                int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = simpson(fa, flm, fm, a, m);
  double right = simpson(fm, frm, fb, m, b);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_depth) {
  if (a == b) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a);
  double fm = f(m);
  double fb = f(b);
  double whole = simpson(fa, fm, fb, a, b);
  return adaptive(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

std::optional<GridPoint> grid_min(const std::function<double(double)>& f,
                                  double lo, double hi, int n) {
  std::optional<GridPoint> best;
  for (int i = 0; i <= n; ++i) {
    double x = lo + (hi - lo) * static_cast<double>(i) / n;
    double v = f(x);
    if (std::isnan(v)) continue;
    if (!best || v < best->value) best = GridPoint{x, v};
  }
  return best;
}

double fd1(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double fd2(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace survopt::num
