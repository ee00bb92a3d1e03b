#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace survopt::stats {

// Raised when supplied summary statistics contradict each other.
struct InconsistentInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One stratum of a three-variable frame (study y, auxiliaries x and z).
// For each pair either the correlation or the covariance may be supplied;
// the other is derived. Supplying both is allowed only when they agree to
// 1e-6 relative.
struct Stratum {
  double N = 0.0;
  double n = 0.0;
  double ybar = 0.0, xbar = 0.0, zbar = 0.0;
  double sy = 0.0, sx = 0.0, sz = 0.0;
  std::optional<double> rho_xy, rho_yz, rho_xz;
  std::optional<double> cov_xy, cov_yz, cov_xz;
};

struct StratumDerived {
  double W = 0.0;  // N_h / N
  double f = 0.0;  // 1/n_h - 1/N_h
  double cxy = 0.0, cyz = 0.0, cxz = 0.0;
  double rxy = 0.0, ryz = 0.0, rxz = 0.0;
};

// Relative first- and second-order moments of the stratified estimator
// errors, indexed (y, x, z).
struct VMoments {
  double v200 = 0.0, v020 = 0.0, v002 = 0.0;
  double v110 = 0.0, v101 = 0.0, v011 = 0.0;
};

class StratifiedFrame {
 public:
  explicit StratifiedFrame(std::vector<Stratum> strata);

  const std::vector<Stratum>& strata() const { return strata_; }
  const std::vector<StratumDerived>& derived() const { return derived_; }
  std::size_t size() const { return strata_.size(); }

  double N() const { return ntotal_; }
  double ybar() const { return ybar_; }
  double xbar() const { return xbar_; }
  double zbar() const { return zbar_; }

  VMoments vmoments() const;

 private:
  std::vector<Stratum> strata_;
  std::vector<StratumDerived> derived_;
  double ntotal_ = 0.0;
  double ybar_ = 0.0, xbar_ = 0.0, zbar_ = 0.0;
};

// Resolve one correlation/covariance pair given the two spreads.
// Exposed for reuse by the simple-random-sampling summaries.
void resolve_pair(std::optional<double> rho, std::optional<double> cov,
                  double s1, double s2, const std::string& label,
                  double& rho_out, double& cov_out);

}  // namespace survopt::stats
