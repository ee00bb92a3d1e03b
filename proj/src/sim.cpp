#include "survopt/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "survopt/numeric.hpp"
#include "survopt/rng.hpp"

namespace survopt::sim {

namespace {

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double t : v) s += t;
  return s / static_cast<double>(v.size());
}

double sd_of(const std::vector<double>& v, double m) {
  double s = 0.0;
  for (double t : v) s += (t - m) * (t - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double ma = mean_of(a), mb = mean_of(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  const double den = std::sqrt(saa * sbb);
  return den > 0.0 ? sab / den : 0.0;
}

// Lower Cholesky factor of the latent correlation matrix; false when the
// targets are not jointly consistent.
struct Chol {
  bool has_z = false;
  double l10 = 0.0, l11 = 1.0;
  double l20 = 0.0, l21 = 0.0, l22 = 1.0;
};

bool factor(double r01, double r02, double r12, bool has_z, Chol& c) {
  const double d1 = 1.0 - r01 * r01;
  if (d1 <= 1e-10) return false;
  c.has_z = has_z;
  c.l10 = r01;
  c.l11 = std::sqrt(d1);
  if (has_z) {
    c.l20 = r02;
    c.l21 = (r12 - r01 * r02) / c.l11;
    const double d2 = 1.0 - c.l20 * c.l20 - c.l21 * c.l21;
    if (d2 <= 1e-10) return false;
    c.l22 = std::sqrt(d2);
  }
  return true;
}

// exact zero mean and unit (N-1) standard deviation
void standardize(std::vector<double>& u) {
  const double m = mean_of(u);
  for (double& t : u) t -= m;
  double ss = 0.0;
  for (double t : u) ss += t * t;
  const double s = std::sqrt(ss / static_cast<double>(u.size() - 1));
  for (double& t : u) t /= s;
}

// strip the components of v along the (already standardized) basis vectors,
// then standardize; the result is exactly uncorrelated with each of them
void orthogonalize(std::vector<double>& v,
                   const std::vector<const std::vector<double>*>& basis) {
  for (const auto* e : basis) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      num += v[i] * (*e)[i];
      den += (*e)[i] * (*e)[i];
    }
    const double a = num / den;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= a * (*e)[i];
  }
  standardize(v);
}

// mean/CV-matched marginal from a latent normal column. Lognormal above
// CV 1 keeps heavy tails; its shape is calibrated against the *sample* CV
// (a plug-in sigma would undershoot badly at these tail weights), then the
// scale is fixed exactly. Below CV 1 a standardized affine map is exact by
// construction.
std::vector<double> build_marginal(double mean, double cv,
                                   std::vector<double> u) {
  standardize(u);
  const std::size_t N = u.size();
  std::vector<double> out(N);
  if (cv > 1.0) {
    auto cv_gap = [&](double s) {
      double m = 0.0;
      for (double t : u) m += std::exp(s * t);
      m /= static_cast<double>(N);
      double ss = 0.0;
      for (double t : u) {
        const double d = std::exp(s * t) - m;
        ss += d * d;
      }
      return std::sqrt(ss / static_cast<double>(N - 1)) / m - cv;
    };
    double hi = std::sqrt(std::log1p(cv * cv));
    while (cv_gap(hi) < 0.0 && hi < 30.0) hi *= 1.5;
    const auto root = num::bisect(cv_gap, 1e-8, hi, 1e-10);
    const double s = root ? root->root : std::sqrt(std::log1p(cv * cv));
    for (std::size_t i = 0; i < N; ++i) out[i] = std::exp(s * u[i]);
    const double scale = mean / mean_of(out);
    for (double& t : out) t *= scale;
  } else {
    for (std::size_t i = 0; i < N; ++i) out[i] = mean * (1.0 + cv * u[i]);
  }
  return out;
}

double clamp_rho(double r) { return std::clamp(r, -0.985, 0.985); }

}  // namespace

SyntheticPopulation generate_population(const PopulationTargets& t,
                                        std::uint64_t seed) {
  auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
  if (t.N < 4) fail("population size must be at least 4");
  if (!(t.ybar > 0.0) || !(t.cy > 0.0))
    fail("y targets need a positive mean and CV");
  const bool attribute = t.P >= 0.0;
  const bool has_z = t.cz > 0.0;
  long k_attr = 0;
  if (attribute) {
    if (!(t.P > 0.0 && t.P < 1.0))
      fail("attribute prevalence must lie strictly in (0, 1)");
    k_attr = std::lround(t.P * static_cast<double>(t.N));
    if (k_attr < 1 || k_attr > static_cast<long>(t.N) - 1)
      fail("attribute prevalence leaves no variation at this N");
  } else {
    if (!(t.xbar > 0.0) || !(t.cx > 0.0))
      fail("x targets need a positive mean and CV");
  }
  if (has_z && !(t.zbar > 0.0)) fail("z target needs a positive mean");
  auto check_r = [&](double r) {
    if (std::abs(r) > 0.95)
      fail("target correlation magnitude must not exceed 0.95");
  };
  check_r(t.rho);
  if (has_z) {
    check_r(t.rho_yz);
    check_r(t.rho_xz);
  }
  {
    Chol probe;
    if (!factor(t.rho, has_z ? t.rho_yz : 0.0, has_z ? t.rho_xz : 0.0, has_z,
                probe))
      fail("correlation targets are not jointly consistent");
  }

  num::Rng rng(seed);
  const std::size_t N = t.N;
  SyntheticPopulation pop;
  pop.N = N;
  pop.seed = seed;

  // latent correlations start at the targets and are nudged by the achieved
  // error each round; monotone marginal maps shrink Pearson correlation, so
  // a couple of rounds are normal even without sampling noise
  double r01 = t.rho, r02 = has_z ? t.rho_yz : 0.0,
         r12 = has_z ? t.rho_xz : 0.0;
  double p01 = r01, p02 = r02, p12 = r12;

  std::vector<double> u0(N), u1(N), u2;
  if (has_z) u2.resize(N);

  for (int attempt = 1; attempt <= 50; ++attempt) {
    Chol c;
    bool ok = factor(r01, r02, r12, has_z, c);
    for (int half = 0; !ok && half < 8; ++half) {
      r01 = 0.5 * (r01 + p01);
      r02 = 0.5 * (r02 + p02);
      r12 = 0.5 * (r12 + p12);
      ok = factor(r01, r02, r12, has_z, c);
    }
    if (!ok) {
      r01 = p01;
      r02 = p02;
      r12 = p12;
      ok = factor(r01, r02, r12, has_z, c);
    }

    // exact-correlation latent columns: orthonormalized gaussian draws mixed
    // through the Cholesky factor, so the latent sample correlations equal
    // the factors' targets to rounding and only the nonlinear marginal maps
    // can push the achieved values off
    std::vector<double> e0(N), e1(N), e2;
    for (std::size_t i = 0; i < N; ++i) e0[i] = rng.normal();
    for (std::size_t i = 0; i < N; ++i) e1[i] = rng.normal();
    standardize(e0);
    orthogonalize(e1, {&e0});
    if (has_z) {
      e2.resize(N);
      for (std::size_t i = 0; i < N; ++i) e2[i] = rng.normal();
      orthogonalize(e2, {&e0, &e1});
    }
    for (std::size_t i = 0; i < N; ++i) {
      u0[i] = e0[i];
      u1[i] = c.l10 * e0[i] + c.l11 * e1[i];
      if (has_z) u2[i] = c.l20 * e0[i] + c.l21 * e1[i] + c.l22 * e2[i];
    }

    pop.y = build_marginal(t.ybar, t.cy, u0);

    std::vector<double> second(N);
    if (attribute) {
      // cut the latent at its empirical 1-P quantile: exact count, copula
      // dependence intact
      std::vector<double> sorted = u1;
      std::nth_element(sorted.begin(),
                       sorted.begin() + (static_cast<long>(N) - k_attr),
                       sorted.end());
      const double thr = sorted[static_cast<std::size_t>(
          static_cast<long>(N) - k_attr)];
      pop.phi.assign(N, 0);
      for (std::size_t i = 0; i < N; ++i) {
        pop.phi[i] = u1[i] >= thr ? 1 : 0;
        second[i] = pop.phi[i];
      }
      pop.x.clear();
    } else {
      pop.x = build_marginal(t.xbar, t.cx, u1);
      for (std::size_t i = 0; i < N; ++i) second[i] = pop.x[i];
      pop.phi.clear();
    }
    if (has_z) pop.z = build_marginal(t.zbar, t.cz, u2);

    pop.ybar = mean_of(pop.y);
    pop.cy = sd_of(pop.y, pop.ybar) / pop.ybar;
    pop.rho = pearson(pop.y, second);
    if (attribute) {
      pop.p = static_cast<double>(k_attr) / static_cast<double>(N);
    } else {
      pop.xbar = mean_of(pop.x);
      pop.cx = sd_of(pop.x, pop.xbar) / pop.xbar;
    }
    if (has_z) {
      pop.zbar = mean_of(pop.z);
      pop.cz = sd_of(pop.z, pop.zbar) / pop.zbar;
      pop.rho_yz = pearson(pop.y, pop.z);
      pop.rho_xz = pearson(second, pop.z);
    }
    pop.tries = attempt;

    bool close = std::abs(pop.rho - t.rho) <= 0.02;
    if (has_z)
      close = close && std::abs(pop.rho_yz - t.rho_yz) <= 0.02 &&
              std::abs(pop.rho_xz - t.rho_xz) <= 0.02;
    if (close) return pop;

    p01 = r01;
    p02 = r02;
    p12 = r12;
    r01 = clamp_rho(r01 + (t.rho - pop.rho));
    if (has_z) {
      r02 = clamp_rho(r02 + (t.rho_yz - pop.rho_yz));
      r12 = clamp_rho(r12 + (t.rho_xz - pop.rho_xz));
    }
  }
  throw std::runtime_error(
      "could not match the target correlations within 0.02 in 50 attempts");
}

namespace {

// C(N, n) when it does not exceed the cap, otherwise 0
long choose_capped(std::size_t N, std::size_t n, double cap) {
  double c = 1.0;
  for (std::size_t i = 1; i <= n; ++i) {
    c *= static_cast<double>(N - n + i);
    c /= static_cast<double>(i);
    if (c > cap) return 0;
  }
  return std::lround(c);
}

struct Accum {
  double se = 0.0, se2 = 0.0, se4 = 0.0;
  long used = 0, degen = 0;
};

}  // namespace

MseResult empirical_mse(const SyntheticPopulation& pop,
                        const MseOptions& opt) {
  const std::size_t N = pop.N;
  if (opt.n < 1 || opt.n >= N)
    throw std::invalid_argument("sample size must satisfy 1 <= n < N");
  if (opt.replicates < 10000)
    throw std::invalid_argument("replicates must be at least 10000");
  const bool needs_x = opt.estimator != Estimator::mean;
  if (needs_x && pop.x.empty())
    throw std::invalid_argument(
        "estimator needs a numeric auxiliary variable");

  const double Ybar = mean_of(pop.y);
  const double Xbar = needs_x ? mean_of(pop.x) : 0.0;
  if (needs_x && Xbar == 0.0)
    throw std::invalid_argument("auxiliary population mean is zero");

  const std::size_t n = opt.n;
  Accum acc;
  auto feed = [&](const std::size_t* idx) {
    double ys = 0.0, xs = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      ys += pop.y[idx[j]];
      if (needs_x) xs += pop.x[idx[j]];
    }
    ys /= static_cast<double>(n);
    xs /= static_cast<double>(n);
    double est = 0.0;
    switch (opt.estimator) {
      case Estimator::mean:
        est = ys;
        break;
      case Estimator::ratio:
        if (xs == 0.0) {
          ++acc.degen;
          return;
        }
        est = ys * Xbar / xs;
        break;
      case Estimator::product:
        est = ys * xs / Xbar;
        break;
    }
    const double e = est - Ybar;
    acc.se += e;
    acc.se2 += e * e;
    acc.se4 += e * e * e * e;
    ++acc.used;
  };

  MseResult out;
  const long total_combos = choose_capped(N, n, 1e6);
  if (total_combos > 0) {
    out.enumerated = true;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      feed(idx.data());
      // odometer step to the next combination
      std::size_t j = n;
      while (j > 0 && idx[j - 1] == N - n + (j - 1)) --j;
      if (j == 0) break;
      ++idx[j - 1];
      for (std::size_t l = j; l < n; ++l) idx[l] = idx[l - 1] + 1;
    }
  } else {
    num::Rng rng(opt.seed);
    std::vector<std::size_t> idx(N);
    for (long r = 0; r < opt.replicates; ++r) {
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(rng.below(N - i));
        std::swap(idx[i], idx[j]);
      }
      feed(idx.data());
    }
  }

  const long total = acc.used + acc.degen;
  if (acc.used == 0 || acc.degen * 1000 >= total)
    throw std::runtime_error(
        "degenerate draws reached 0.1% of the replicates");
  const double M = static_cast<double>(acc.used);
  out.mse = acc.se2 / M;
  out.bias = acc.se / M;
  out.reps_used = acc.used;
  out.degenerate = acc.degen;
  if (!out.enumerated) {
    const double var_e2 =
        std::max(0.0, (acc.se4 - M * out.mse * out.mse) / (M - 1.0));
    out.mc_stderr = std::sqrt(var_e2 / M);
  }
  return out;
}

}  // namespace survopt::sim
