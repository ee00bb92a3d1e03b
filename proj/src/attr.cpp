#include "survopt/attr.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace survopt::attr {

double V1(const Population& p, const Member& m) {
  return m.K1 * p.P / (m.K1 * p.P + m.K2 * m.K3);
}

double V2(const Population& p, const Member& m) {
  return m.K4 * p.P / (m.K4 * p.P + m.K5);
}

double mse_mean(const Population& p) {
  return p.ybar * p.ybar * p.f1() * p.cy * p.cy;
}

double mse_shift(const Population& p, const Member& m) {
  double v1 = V1(p, m);
  double a = m.alpha;
  return p.ybar * p.ybar * p.f1() *
         (p.cy * p.cy +
          p.cp * p.cp * (a * a * v1 * v1 - 2.0 * a * v1 * p.kp()));
}

double bias_shift(const Population& p, const Member& m) {
  double v1 = V1(p, m);
  double a = m.alpha;
  return p.ybar * p.f1() * p.cp * p.cp *
         (a * (a + 1.0) * v1 * v1 / 2.0 - a * v1 * p.kp());
}

namespace {

double q2_of(const Population& p, const Member& m) {
  return m.beta - m.lambda * V2(p, m) / 2.0;
}

double a2_of(const Population& p, const Member& m) {
  double v2 = V2(p, m);
  double b = m.beta, l = m.lambda;
  return l * v2 * b / 2.0 - b * (b - 1.0) / 2.0 -
         l * (l + 2.0) * v2 * v2 / 8.0 - b * p.kp() + l * v2 * p.kp() / 2.0;
}

}  // namespace

double mse_mixed(const Population& p, const Member& m) {
  double q = q2_of(p, m);
  return p.ybar * p.ybar * p.f1() *
         (p.cy * p.cy + p.cp * p.cp * q * q - 2.0 * p.kp() * p.cp * p.cp * q);
}

double bias_mixed(const Population& p, const Member& m) {
  return p.ybar * p.f1() * p.cp * p.cp * a2_of(p, m);
}

Weights solve_weights(const Population& p, const Member& m) {
  double v1 = V1(p, m);
  double a1 = m.alpha * (m.alpha + 1.0) * v1 * v1 / 2.0 - m.alpha * v1 * p.kp();
  double a2 = a2_of(p, m);
  Eigen::Matrix3d mat;
  mat << 1.0, 1.0, 1.0,
         0.0, m.alpha * v1, q2_of(p, m),
         0.0, a1, a2;
  Eigen::Vector3d rhs(1.0, p.kp(), 0.0);
  Eigen::Vector3d w = mat.colPivHouseholderQr().solve(rhs);
  return {w(0), w(1), w(2)};
}

double mse_weighted(const Population& p, const Member& m, const Weights& w) {
  double q = w.w2 * m.alpha * V1(p, m) + w.w3 * q2_of(p, m);
  return p.ybar * p.ybar * p.f1() *
         (p.cy * p.cy + p.cp * p.cp * (q * q - 2.0 * q * p.kp()));
}

double min_mse(const Population& p) {
  return p.ybar * p.ybar * p.f1() * p.cy * p.cy * (1.0 - p.rho * p.rho);
}

double R1(const Population& p, const Member& m) {
  return m.K1 * p.P / (m.K1 * p.P + m.K2 * m.K3);
}

double R2(const Population& p, const Member& m) {
  return m.K4 * p.P / (2.0 * (m.K4 * p.P + m.K5));
}

double mse_shift_d(const Population& p, const Member& m) {
  double r1 = R1(p, m);
  double e = m.alpha;  // exponent "m" of the two-phase family
  double cp2 = p.cp * p.cp;
  return p.ybar * p.ybar *
         (p.f1() * p.cy * p.cy + e * e * r1 * r1 * p.f3() * cp2 -
          2.0 * e * r1 * p.kp() * p.f3() * cp2);
}

double mse_mixed_d(const Population& p, const Member& m, Convention c) {
  double l1 = m.beta - m.lambda * R2(p, m);  // exponents (n, gamma)
  double cp2 = p.cp * p.cp;
  double base = p.f1() * p.cy * p.cy + l1 * l1 * p.f3() * cp2;
  if (c == Convention::sign_consistent) {
    base -= 2.0 * l1 * p.kp() * p.f3() * cp2;
  }
  return p.ybar * p.ybar * base;
}

Weights solve_weights_d(const Population& p, const Member& mem) {
  double r1 = R1(p, mem);
  double r2 = R2(p, mem);
  double m = mem.alpha, n = mem.beta, gam = mem.lambda;
  double cp2 = p.cp * p.cp;
  double f1 = p.f1(), f2 = p.f2(), f3 = p.f3(), kp = p.kp();
  double pb1 = m * (m - 1.0) * r1 * r1 * f2 * cp2 / 2.0 +
               m * (m + 1.0) * r1 * r1 * f1 * cp2 / 2.0 -
               m * m * r1 * r1 * f2 * cp2 + m * r1 * f3 * kp * cp2;
  double pb2 = -n * (n - 1.0) * f1 * cp2 / 2.0 +
               n * (n + 1.0) * f2 * cp2 / 2.0 + n * f2 * kp * cp2 +
               n * n * f2 * cp2 + f3 * gam * r2 * kp * cp2 +
               f3 * gam * r2 * n * cp2;
  Eigen::Matrix3d mat;
  mat << 1.0, 1.0, 1.0,
         0.0, m * r1, n - gam * r2,
         0.0, pb1, pb2;
  Eigen::Vector3d rhs(1.0, kp, 0.0);
  Eigen::Vector3d w = mat.colPivHouseholderQr().solve(rhs);
  return {w(0), w(1), w(2)};
}

double mse_weighted_d(const Population& p, const Member& mem, const Weights& w) {
  double s = w.w2 * mem.alpha * R1(p, mem) +
             w.w3 * (mem.beta - mem.lambda * R2(p, mem));
  double cp2 = p.cp * p.cp;
  return p.ybar * p.ybar *
         (p.f1() * p.cy * p.cy + s * s * p.f3() * cp2 -
          2.0 * s * p.f3() * p.kp() * cp2);
}

double min_mse_d(const Population& p) {
  return p.ybar * p.ybar * p.cy * p.cy * (p.f1() - p.f3() * p.rho * p.rho);
}

double pre(const Population& p, double mse) {
  return 100.0 * mse_mean(p) / mse;
}

std::vector<CatalogRow> member_catalog(const Population& p) {
  double NP = p.N * p.P;
  double f = p.ffrac();
  return {
      {"1", 1.0, p.cp},        {"2", 1.0, p.beta2},
      {"3", p.beta2, p.cp},    {"4", p.cp, p.beta2},
      {"5", 1.0, p.rho},       {"6", NP, p.sphi()},
      {"7", NP, f},            {"8", p.beta2, p.kp()},
      {"9", NP, p.kp()},       {"10", p.N, 1.0},
      {"11", p.N, p.cp},       {"12", p.N, p.rho},
      {"13", p.N, p.sphi()},   {"14", p.N, f},
      {"15", p.N, 1.0 - f},    {"16", p.N, p.kp()},
      {"17", p.n, p.rho},      {"18", p.n, p.sphi()},
      {"19", p.n, f},          {"20", p.n, 1.0 - f},
      {"21", p.n, p.kp()},     {"22", p.beta2, p.P},
      {"23", NP, p.P},         {"24", p.N, p.P},
      {"25", p.n, p.P},
  };
}

}  // namespace survopt::attr
