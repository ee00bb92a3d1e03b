#include "survopt/srs.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace survopt::srs {

double shift_factor(const Population& p, Shift s) {
  switch (s) {
    case Shift::none:
      return 1.0;
    case Shift::cv:
      return p.xbar / (p.xbar + p.cx);
    case Shift::corr:
      return p.xbar / (p.xbar + p.rho);
  }
  return 1.0;
}

double mse_mean(const Population& p) {
  return p.lam() * p.ybar * p.ybar * p.cy * p.cy;
}

double mse_ratio(const Population& p, Shift s) {
  double th = shift_factor(p, s);
  return p.lam() * p.ybar * p.ybar *
         (p.cy * p.cy + th * th * p.cx * p.cx - 2.0 * th * p.cyx());
}

double mse_product(const Population& p, Shift s) {
  double th = shift_factor(p, s);
  return p.lam() * p.ybar * p.ybar *
         (p.cy * p.cy + th * th * p.cx * p.cx + 2.0 * th * p.cyx());
}

double mse_dual_ratio(const Population& p, Shift s) {
  double g = p.g();
  return g * g * mse_ratio(p, s);
}

double mse_dual_product(const Population& p, Shift s) {
  double g = p.g();
  return g * g * mse_product(p, s);
}

namespace {

// shared pieces of the optimal-k expressions
struct Ctx {
  double g2, lam, cy2, cx2, cyx, y2;
};

Ctx ctx(const Population& p) {
  double g = p.g();
  return {g * g, p.lam(), p.cy * p.cy, p.cx * p.cx, p.cyx(),
          p.ybar * p.ybar};
}

}  // namespace

KOpt opt_dual_ratio(const Population& p, Shift s) {
  auto c = ctx(p);
  double v = shift_factor(p, s);
  double k;
  if (s == Shift::none) {
    k = (c.g2 * (c.lam * c.cx2 - c.lam * c.cyx) + 1.0) /
        (c.g2 * (3.0 * c.cx2 * c.lam - 4.0 * c.cyx * c.lam + c.lam * c.cy2) + 1.0);
  } else {
    k = (c.g2 * (c.lam * v * v * c.cx2 - c.lam * v * c.cyx) + 1.0) /
        (c.g2 * (3.0 * v * v * c.cx2 * c.lam - 4.0 * v * c.cyx * c.lam +
                 c.lam * c.cy2) + 1.0);
  }
  double m = c.y2 * (c.g2 * (k * k * c.lam * c.cy2 +
                             (3.0 * k * k - 2.0 * k) * c.lam * v * v * c.cx2 -
                             2.0 * (2.0 * k * k - k) * c.lam * v * c.cyx) +
                     (k - 1.0) * (k - 1.0));
  return {k, m};
}

KOpt opt_dual_product(const Population& p, Shift s, Convention conv) {
  auto c = ctx(p);
  double k;
  if (s == Shift::none) {
    k = (c.g2 * c.lam * c.cyx + 1.0) /
        (c.g2 * (c.cx2 * c.lam + 4.0 * c.cyx * c.lam + c.lam * c.cy2) + 1.0);
    double m = c.y2 * (c.g2 * (k * k * c.lam * c.cy2 + k * k * c.lam * c.cx2 +
                               2.0 * (2.0 * k * k - k) * c.lam * c.cyx) +
                       (k - 1.0) * (k - 1.0));
    return {k, m};
  }
  double v = shift_factor(p, s);
  // the printed numerator carries lambda twice for the shifted product duals
  double lam_num = (conv == Convention::strict) ? c.lam * c.lam : c.lam;
  k = (c.g2 * lam_num * v * c.cyx + 1.0) /
      (c.g2 * (3.0 * v * v * c.cx2 * c.lam + 4.0 * v * c.cyx * c.lam +
               c.lam * c.cy2) + 1.0);
  double m = c.y2 * (c.g2 * (k * k * c.lam * c.cy2 +
                             k * k * c.lam * v * v * c.cx2 +
                             2.0 * (2.0 * k * k - k) * c.lam * v * c.cyx) +
                     (k - 1.0) * (k - 1.0));
  return {k, m};
}

TwoParamOpt opt_two_param(const Population& p, const TwoParamConfig& cfg) {
  double lam = p.lam();
  double h = p.g();
  double cy2 = p.cy * p.cy, cx2 = p.cx * p.cx;
  double cyx = p.rho * p.cy * p.cx;
  double r1 = cfg.psi * p.xbar / (cfg.psi * p.xbar + cfg.delta);
  double r2 = cfg.omega * p.xbar / (cfg.omega * p.xbar + cfg.mu);
  double a = cfg.alpha, b = cfg.beta;
  double l1 = a * r1 * h + b * h * r2 / 2.0;
  double l2 = a * (a + 1.0) * h * h * r1 * r1 / 2.0 +
              a * b * h * h * r1 * r2 / 2.0 + b * b * h * h * r2 * r2 / 8.0 +
              b * h * h * r2 * r2 / 4.0;
  double l3 = a * h * h * r1 + b * h * h * r2 / 2.0;
  double l4 = l3;
  double y2 = p.ybar * p.ybar;
  double t1 = y2 * (1.0 + lam * h * h * cy2 + l1 * l1 * lam * cx2 -
                    2.0 * h * l1 * lam * cyx + 2.0 * l2 * lam * cx2 -
                    2.0 * l3 * lam * cyx);
  double t2 = h * h * lam * p.xbar * p.xbar * cx2;
  double t3 = p.ybar * p.xbar *
              (l4 * lam * cx2 + l1 * lam * h * cx2 - h * h * lam * cyx);
  double t4 = y2 * (1.0 + l2 * lam * cx2 - l3 * lam * cyx);
  double t5 = p.ybar * p.xbar * l4 * lam * cx2;
  Eigen::Matrix2d m;
  m << t1, t3, t3, t2;
  Eigen::Vector2d rhs(t4, t5);
  Eigen::Vector2d w = m.colPivHouseholderQr().solve(rhs);
  TwoParamOpt out;
  out.m1 = w(0);
  out.m2 = w(1);
  out.mse = y2 + out.m1 * out.m1 * t1 + out.m2 * out.m2 * t2 +
            2.0 * out.m1 * out.m2 * t3 - 2.0 * out.m1 * t4 -
            2.0 * out.m2 * t5;
  return out;
}

}  // namespace survopt::srs
