#include "survopt/strat.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace survopt::strat {

namespace {

double regsum_mse(const stats::StratifiedFrame& fr) {
  double m = 0.0;
  for (std::size_t h = 0; h < fr.size(); ++h) {
    const auto& s = fr.strata()[h];
    const auto& d = fr.derived()[h];
    double g = d.W * d.W * d.f;
    double br = 1.0 - d.rxy * d.rxy - d.ryz * d.ryz +
                2.0 * d.rxy * d.ryz * d.rxz;
    m += g * s.sy * s.sy * br;
  }
  return m;
}

}  // namespace

double mse(const stats::StratifiedFrame& fr, Estimator e, Convention c) {
  const auto v = fr.vmoments();
  const double y2 = fr.ybar() * fr.ybar();
  // the mixed estimators carry the x-z term with opposite sign in the
  // strict reading; sign_consistent restores +v011/2 so that
  // mse(drd) + mse(dpd) == mse(mixed_rp) + mse(mixed_pr)
  const double xz = (c == Convention::strict) ? -v.v011 / 2.0 : v.v011 / 2.0;
  switch (e) {
    case Estimator::mean:
      return y2 * v.v200;
    case Estimator::ratio:
      return y2 * (v.v200 + v.v020 - 2.0 * v.v110);
    case Estimator::srd:
      return y2 * (v.v200 + v.v020 / 4.0 - v.v110);
    case Estimator::drd:
      return y2 * (v.v200 + v.v020 / 4.0 + v.v002 / 4.0 - v.v110 - v.v101 +
                   v.v011 / 2.0);
    case Estimator::dpd:
      return y2 * (v.v200 + v.v020 / 4.0 + v.v002 / 4.0 + v.v110 + v.v101 +
                   v.v011 / 2.0);
    case Estimator::mixed_rp:
      return y2 * (v.v200 + v.v020 / 4.0 + v.v002 / 4.0 - v.v110 + v.v101 + xz);
    case Estimator::mixed_pr:
      return y2 * (v.v200 + v.v020 / 4.0 + v.v002 / 4.0 + v.v110 - v.v101 + xz);
    case Estimator::regsum:
      return regsum_mse(fr);
    case Estimator::pooled:
      return solve_pooled(fr).mse;
  }
  return 0.0;
}

double pre(const stats::StratifiedFrame& fr, Estimator e, Convention c) {
  return 100.0 * mse(fr, Estimator::mean, c) / mse(fr, e, c);
}

std::vector<PreRow> pre_table(const stats::StratifiedFrame& fr, Convention c) {
  static const std::pair<Estimator, const char*> rows[] = {
      {Estimator::mean, "mean"},        {Estimator::ratio, "ratio"},
      {Estimator::srd, "srd"},          {Estimator::drd, "drd"},
      {Estimator::dpd, "dpd"},          {Estimator::mixed_rp, "mixed_rp"},
      {Estimator::mixed_pr, "mixed_pr"}, {Estimator::regsum, "regsum"},
      {Estimator::pooled, "pooled"},
  };
  std::vector<PreRow> out;
  double base = mse(fr, Estimator::mean, c);
  for (const auto& [e, name] : rows) {
    double m = mse(fr, e, c);
    out.push_back({name, m, 100.0 * base / m});
  }
  return out;
}

PooledSolution solve_pooled(const stats::StratifiedFrame& fr) {
  const auto v = fr.vmoments();
  const double yb = fr.ybar();
  double sxx = 0.0, szz = 0.0, sxy = 0.0, syz = 0.0;
  for (std::size_t h = 0; h < fr.size(); ++h) {
    const auto& s = fr.strata()[h];
    const auto& d = fr.derived()[h];
    double g = d.W * d.W * d.f;
    sxx += g * s.sx * s.sx;
    szz += g * s.sz * s.sz;
    sxy += g * d.cxy;
    syz += g * d.cyz;
  }
  PooledSolution sol;
  sol.b1 = sxy / sxx;
  sol.b2 = syz / szz;
  Eigen::Matrix2d a;
  a << v.v020, v.v011, v.v011, v.v002;
  Eigen::Vector2d rhs(v.v110, v.v101);
  Eigen::Vector2d u = a.colPivHouseholderQr().solve(rhs);
  sol.u1 = u(0);
  sol.u2 = u(1);
  sol.m1 = 2.0 * sol.u1 + 2.0 * sol.b1 / yb;
  sol.m2 = 2.0 * sol.u2 + 2.0 * sol.b2 / yb;
  sol.mse = pooled_surface(fr, sol.m1, sol.m2);
  return sol;
}

double pooled_surface(const stats::StratifiedFrame& fr, double m1, double m2) {
  const auto v = fr.vmoments();
  const double yb = fr.ybar();
  const auto sol = [&] {
    double sxx = 0.0, szz = 0.0, sxy = 0.0, syz = 0.0;
    for (std::size_t h = 0; h < fr.size(); ++h) {
      const auto& s = fr.strata()[h];
      const auto& d = fr.derived()[h];
      double g = d.W * d.W * d.f;
      sxx += g * s.sx * s.sx;
      szz += g * s.sz * s.sz;
      sxy += g * d.cxy;
      syz += g * d.cyz;
    }
    return std::pair{sxy / sxx, syz / szz};
  }();
  const double b1 = sol.first, b2 = sol.second;
  double p1 = m1 * m1 * v.v020 / 4.0 + m2 * m2 * v.v002 / 4.0 +
              m1 * m2 * v.v011 / 2.0 - m1 * v.v110 - m2 * v.v101;
  double p2 = b1 * b1 * v.v020 + b2 * b2 * v.v002 + 2.0 * b1 * b2 * v.v011;
  double p3 = -2.0 * b1 * v.v110 - 2.0 * b2 * v.v101 +
              m1 * (b1 * v.v020 + b2 * v.v011) +
              m2 * (b1 * v.v011 + b2 * v.v002);
  return yb * yb * (v.v200 + p1) + p2 - yb * p3;
}

std::vector<GapRow> efficiency_gaps(const stats::StratifiedFrame& fr,
                                    Convention c) {
  std::vector<GapRow> out;
  double base = mse(fr, Estimator::mean, c);
  for (const auto& row : pre_table(fr, c)) {
    if (row.name == "mean") continue;
    out.push_back({row.name, base - row.mse, base - row.mse > 0.0});
  }
  return out;
}

}  // namespace survopt::strat
