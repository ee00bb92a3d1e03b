#include "survopt/stats.hpp"

#include <cmath>

namespace survopt::stats {

void resolve_pair(std::optional<double> rho, std::optional<double> cov,
                  double s1, double s2, const std::string& label,
                  double& rho_out, double& cov_out) {
  if (!rho && !cov) {
    throw InconsistentInput("neither correlation nor covariance given for " + label);
  }
  if (rho && cov) {
    double derived = *rho * s1 * s2;
    double scale = std::max(std::fabs(*cov), std::fabs(derived));
    if (scale > 0.0 && std::fabs(*cov - derived) / scale > 1e-6) {
      throw InconsistentInput("correlation and covariance disagree for " + label);
    }
    rho_out = *rho;
    cov_out = *cov;
    return;
  }
  if (rho) {
    rho_out = *rho;
    cov_out = *rho * s1 * s2;
    return;
  }
  cov_out = *cov;
  if (s1 <= 0.0 || s2 <= 0.0) {
    throw InconsistentInput("cannot derive correlation for " + label + ": zero spread");
  }
  rho_out = *cov / (s1 * s2);
  if (std::fabs(rho_out) > 1.0 + 1e-12) {
    throw InconsistentInput("derived correlation out of range for " + label);
  }
}

StratifiedFrame::StratifiedFrame(std::vector<Stratum> strata)
    : strata_(std::move(strata)) {
  if (strata_.empty()) throw InconsistentInput("empty frame");
  for (const auto& s : strata_) {
    if (s.N <= 0.0 || s.n <= 0.0 || s.n > s.N) {
      throw InconsistentInput("bad stratum sizes");
    }
    ntotal_ += s.N;
  }
  derived_.reserve(strata_.size());
  int idx = 0;
  for (const auto& s : strata_) {
    StratumDerived d;
    d.W = s.N / ntotal_;
    d.f = 1.0 / s.n - 1.0 / s.N;
    std::string at = "stratum " + std::to_string(idx + 1);
    resolve_pair(s.rho_xy, s.cov_xy, s.sx, s.sy, at + " (x,y)", d.rxy, d.cxy);
    resolve_pair(s.rho_yz, s.cov_yz, s.sy, s.sz, at + " (y,z)", d.ryz, d.cyz);
    resolve_pair(s.rho_xz, s.cov_xz, s.sx, s.sz, at + " (x,z)", d.rxz, d.cxz);
    derived_.push_back(d);
    ybar_ += d.W * s.ybar;
    xbar_ += d.W * s.xbar;
    zbar_ += d.W * s.zbar;
    ++idx;
  }
}

VMoments StratifiedFrame::vmoments() const {
  VMoments v;
  for (std::size_t h = 0; h < strata_.size(); ++h) {
    const auto& s = strata_[h];
    const auto& d = derived_[h];
    double g = d.W * d.W * d.f;
    v.v200 += g * s.sy * s.sy;
    v.v020 += g * s.sx * s.sx;
    v.v002 += g * s.sz * s.sz;
    v.v110 += g * d.cxy;
    v.v101 += g * d.cyz;
    v.v011 += g * d.cxz;
  }
  v.v200 /= ybar_ * ybar_;
  v.v020 /= xbar_ * xbar_;
  v.v002 /= zbar_ * zbar_;
  v.v110 /= ybar_ * xbar_;
  v.v101 /= ybar_ * zbar_;
  v.v011 /= xbar_ * zbar_;
  return v;
}

}  // namespace survopt::stats
