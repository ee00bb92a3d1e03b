#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "survopt/eoq.hpp"
#include "survopt/numeric.hpp"
#include "survopt/rng.hpp"

using namespace survopt;

namespace {

eoq::EoqParams demo() {
  eoq::EoqParams p;
  p.D = 2000.0;
  p.A = 150.0;
  p.F = 8.5;
  p.H = 7.5;
  p.W = 100.0;
  p.Ct = 0.5;
  return p;
}

eoq::FuzzyEoqParams fuzzy_demo() {
  eoq::FuzzyEoqParams p;
  p.D = {1900.0, 2000.0, 2000.0, 1900.0};
  p.F = {8.075, 8.5, 8.5, 8.075};
  p.H = {7.125, 7.5, 7.5, 7.125};
  p.A = {142.5, 150.0, 150.0, 142.5};
  p.W = {95.0, 100.0, 100.0, 95.0};
  p.Ct = 0.5;
  return p;
}

eoq::FuzzyEoqParams degenerate(const eoq::EoqParams& c) {
  eoq::FuzzyEoqParams p;
  p.D = fuzzy::crisp(c.D);
  p.F = fuzzy::crisp(c.F);
  p.H = fuzzy::crisp(c.H);
  p.A = fuzzy::crisp(c.A);
  p.W = fuzzy::crisp(c.W);
  p.Ct = c.Ct;
  p.Ct_star = c.Ct_star;
  return p;
}

}  // namespace

TEST_CASE("crisp cost: capacity-edge cancellation, F=H limit, domain checks") {
  auto p = demo();

  // at Q = W the release-lot terms cancel; K drops out entirely
  double atW = eoq::crisp_cost(p.W, 10.0, p);
  CHECK(atW == doctest::Approx(eoq::crisp_cost(p.W, 77.0, p)).epsilon(1e-14));
  CHECK(atW == doctest::Approx(p.A * p.D / p.W + p.F * p.W / 2.0 -
                               p.W * (p.F - p.H) / 2.0));

  auto peq = p;
  peq.H = peq.F;
  double q = 234.0, k = 31.0;
  CHECK(eoq::crisp_cost(q, k, peq) ==
        doctest::Approx(peq.A * peq.D / q + peq.F * q / 2.0 +
                        peq.Ct * (q - peq.W) * peq.D / (q * k)));

  CHECK_THROWS_AS(eoq::crisp_cost(0.0, 10.0, p), std::domain_error);
  CHECK_THROWS_AS(eoq::crisp_cost(200.0, 0.0, p), std::domain_error);
  CHECK_THROWS_AS(eoq::crisp_cost(-5.0, 10.0, p), std::domain_error);
}

TEST_CASE("crisp solve: fixed point, stationarity, grid minimality") {
  auto p = demo();
  auto s = eoq::solve_crisp(p);

  CHECK(s.converged);
  CHECK(s.iterations <= 5);
  CHECK(s.Q == doctest::Approx(265.918105).epsilon(1e-6));
  CHECK(s.K == doctest::Approx(std::sqrt(2000.0)).epsilon(1e-12));
  CHECK(s.cost == doctest::Approx(2205.025253).epsilon(1e-6));

  double dQ = num::fd1([&](double x) { return eoq::crisp_cost(x, s.K, p); },
                       s.Q, 1e-3);
  double dK = num::fd1([&](double x) { return eoq::crisp_cost(s.Q, x, p); },
                       s.K, 1e-3);
  CHECK(std::abs(dQ) < 1e-5 * (1.0 + s.cost));
  CHECK(std::abs(dK) < 1e-5 * (1.0 + s.cost));

  double best = 1e300;
  for (double qq = p.W; qq <= 3.0 * p.W; qq += 0.05)
    for (double kk = 0.05; kk <= p.W; kk += 0.05)
      best = std::min(best, eoq::crisp_cost(qq, kk, p));
  CHECK(best >= s.cost - 1e-6);

  auto bad = p;
  bad.H = bad.F + 1.0;
  CHECK_THROWS_AS(eoq::solve_crisp(bad), std::invalid_argument);
}

TEST_CASE("fuzzy cost: quadruple assembly, degenerate value, linear A term") {
  auto fp = fuzzy_demo();
  auto fc = eoq::fuzzy_cost(250.0, 40.0, fp);
  CHECK(fc.value ==
        doctest::Approx((fc.quad.c + 2.0 * fc.quad.a + 2.0 * fc.quad.b +
                         fc.quad.d) /
                        6.0)
            .epsilon(1e-14));

  auto p = demo();
  auto dg = degenerate(p);
  for (double qq : {150.0, 222.0, 265.918105}) {
    CHECK(eoq::fuzzy_cost(qq, 44.0, dg).value ==
          doctest::Approx(eoq::crisp_cost(qq, 44.0, p)).epsilon(1e-12));
  }

  // ordering-cost mass gsum(A .* D) enters as S_AD / Q and nothing else
  auto doubled = fp;
  doubled.A = fuzzy::fuzzy_mul(fuzzy::crisp(2.0), fp.A);
  double s_ad = (142.5 * 1900.0 + 2.0 * 150.0 * 2000.0 + 2.0 * 150.0 * 2000.0 +
                 142.5 * 1900.0) /
                6.0;
  CHECK(s_ad == doctest::Approx(290250.0));
  double q = 250.0;
  CHECK(eoq::fuzzy_cost(q, 40.0, doubled).value -
            eoq::fuzzy_cost(q, 40.0, fp).value ==
        doctest::Approx(s_ad / q).epsilon(1e-12));
}

TEST_CASE("fuzzy solve: graded optimum, lot clamp, crisp-degenerate match") {
  auto fp = fuzzy_demo();
  auto s = eoq::solve_fuzzy(fp);

  CHECK(s.converged);
  CHECK(s.Q == doctest::Approx(263.734436).epsilon(1e-6));
  CHECK(s.K == doctest::Approx(44.721360).epsilon(1e-6));
  CHECK(s.cost == doctest::Approx(2151.606327).epsilon(1e-6));
  double wbar = fuzzy::graded_mean(fp.W);
  CHECK(s.K <= wbar + 1e-12);

  double best = 1e300;
  for (double qq = 100.0; qq <= 300.0; qq += 0.05)
    for (double kk = 0.05; kk <= wbar; kk += 0.05)
      best = std::min(best, eoq::fuzzy_cost(qq, kk, fp).value);
  CHECK(best >= s.cost - 1e-6);

  auto p = demo();
  auto sd = eoq::solve_fuzzy(degenerate(p));
  auto sc = eoq::solve_crisp(p);
  CHECK(sd.Q == doctest::Approx(sc.Q).epsilon(1e-9));
  CHECK(sd.K == doctest::Approx(sc.K).epsilon(1e-9));
  CHECK(sd.cost == doctest::Approx(sc.cost).epsilon(1e-9));

  auto bad = fuzzy_demo();
  bad.H = bad.F;
  CHECK_THROWS_AS(eoq::solve_fuzzy(bad), std::invalid_argument);
}

TEST_CASE("no-release variant: closed-form optimum and grid agreement") {
  auto p = demo();
  CHECK_THROWS_AS(eoq::no_release_cost(200.0, p), std::invalid_argument);
  CHECK_THROWS_AS(eoq::solve_no_release(p), std::invalid_argument);

  p.Ct_star = 0.6;
  auto s = eoq::solve_no_release(p);
  CHECK(s.converged);
  CHECK(s.K == 0.0);
  CHECK(s.Q == doctest::Approx(208.6370).epsilon(1e-5));
  CHECK(s.cost == doctest::Approx(2873.4148).epsilon(1e-5));

  auto g = num::grid_min(
      [&](double qq) { return eoq::no_release_cost(qq, p); }, std::max(p.W, 1.0),
      5.0 * std::sqrt(2.0 * p.A * p.D / p.F), 40000);
  REQUIRE(g.has_value());
  CHECK(g->value >= s.cost - 1e-6);

  // transfer cost that lands the optimum exactly on a target lot size
  auto pb = demo();
  pb.Ct_star = 0.527308;
  auto sb = eoq::solve_no_release(pb);
  CHECK(sb.Q == doctest::Approx(216.6800).epsilon(1e-4));
  CHECK(sb.cost == doctest::Approx(2796.3958).epsilon(1e-4));

  // W = 0 collapses to the classic lot-size rule
  auto p0 = demo();
  p0.W = 0.0;
  p0.Ct_star = 0.7;
  auto s0 = eoq::solve_no_release(p0);
  CHECK(s0.Q ==
        doctest::Approx(std::sqrt(2.0 * p0.A * p0.D / p0.F)).epsilon(1e-12));
  CHECK(s0.cost == doctest::Approx(p0.A * p0.D / s0.Q + p0.F * s0.Q / 2.0 +
                                   0.7 * p0.D));

  // fuzzy twin
  auto fp = fuzzy_demo();
  fp.Ct_star = 0.6;
  auto sf = eoq::solve_no_release(fp);
  CHECK(sf.Q == doctest::Approx(206.9070).epsilon(1e-5));
  CHECK(sf.cost == doctest::Approx(2812.6479).epsilon(1e-5));
  auto gf = num::grid_min(
      [&](double qq) { return eoq::no_release_cost(qq, fp).value; }, 1.0,
      1000.0, 40000);
  REQUIRE(gf.has_value());
  CHECK(gf->value >= sf.cost - 1e-6);
}

TEST_CASE("cost gap between the two policies follows the closed identity") {
  num::Rng rng(88021);
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    eoq::EoqParams p;
    p.D = rng.uniform(0.5, 3000.0);
    p.Ct = rng.uniform(0.5, 3000.0);
    double f = rng.uniform(0.5, 3000.0), h = rng.uniform(0.5, 3000.0);
    p.F = std::max(f, h) + 0.5;
    p.H = std::min(f, h);
    p.W = rng.uniform(0.5, 3000.0);
    p.A = rng.uniform(0.5, 3000.0);
    p.Ct_star = rng.uniform(0.5, 3000.0);
    double q = p.W + rng.uniform(0.1, 500.0);
    double k = rng.uniform(0.1, p.W);
    double lhs = eoq::no_release_cost(q, p) - eoq::crisp_cost(q, k, p);
    double rhs = (1.0 - p.W / q) *
                 (p.D * (*p.Ct_star - p.Ct / k) - k / 2.0 * (p.F - p.H));
    double den = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    worst = std::max(worst, std::abs(lhs - rhs) / den);
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("release-rule economy predicate and its boundary") {
  auto p = demo();
  double K = std::sqrt(2000.0);

  p.Ct_star = p.Ct / K;  // transfer savings exactly zero, F > H costs extra
  CHECK_FALSE(eoq::k_release_economical(p, K));

  auto pe = demo();
  pe.H = pe.F;
  pe.Ct_star = pe.Ct / K + 1e-9;
  CHECK(eoq::k_release_economical(pe, K));

  double boundary = p.Ct / K + K * (p.F - p.H) / (2.0 * p.D);
  p.Ct_star = boundary + 1e-9;
  CHECK(eoq::k_release_economical(p, K));
  p.Ct_star = boundary - 1e-9;
  CHECK_FALSE(eoq::k_release_economical(p, K));

  // predicate agrees with the sign of the cost gap whenever Q > W
  p.Ct_star = boundary + 0.05;
  double q = 260.0;
  CHECK(eoq::no_release_cost(q, p) > eoq::crisp_cost(q, K, p));
  CHECK(eoq::k_release_economical(p, K));

  CHECK_THROWS_AS(eoq::k_release_economical(demo(), K), std::invalid_argument);
  p.Ct_star = 0.6;
  CHECK_THROWS_AS(eoq::k_release_economical(p, 0.0), std::domain_error);
}

TEST_CASE("crisp cost is convex in Q past the capacity point") {
  num::Rng rng(430717);
  for (int i = 0; i < 200; ++i) {
    eoq::EoqParams p;
    p.A = rng.uniform(50.0, 500.0);
    p.D = rng.uniform(500.0, 5000.0);
    p.W = rng.uniform(10.0, 100.0);
    p.H = rng.uniform(0.5, 5.0);
    p.F = p.H + rng.uniform(0.5, 3.0);
    p.Ct = rng.uniform(0.1, 2.0);
    double K = std::min(std::sqrt(2.0 * p.Ct * p.D / (p.F - p.H)), p.W);
    double q = p.W + rng.uniform(1.0, 500.0);
    double d2 = num::fd2(
        [&](double x) { return eoq::crisp_cost(x, K, p); }, q, 1e-2);
    CHECK(d2 > 0.0);
  }
}
