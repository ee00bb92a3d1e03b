#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "survopt/numeric.hpp"
#include "survopt/strat.hpp"
#include "testdata.hpp"

using namespace survopt;
using strat::Estimator;

namespace {
const stats::StratifiedFrame& frame() {
  static auto fr = testdata::survey_frame();
  return fr;
}
}  // namespace

TEST_CASE("per-estimator MSE and PRE on the survey frame") {
  const auto& fr = frame();
  CHECK(strat::mse(fr, Estimator::mean) == doctest::Approx(2228.520129831075).epsilon(1e-10));
  CHECK(strat::pre(fr, Estimator::mean) == 100.0);

  CHECK(strat::pre(fr, Estimator::ratio) == doctest::Approx(1049.2610077119).epsilon(1e-9));
  CHECK(strat::pre(fr, Estimator::srd) == doctest::Approx(375.3672667517).epsilon(1e-9));
  CHECK(strat::pre(fr, Estimator::drd) == doctest::Approx(2041.0810918500).epsilon(1e-9));
  CHECK(strat::pre(fr, Estimator::dpd) == doctest::Approx(28.4341044115).epsilon(1e-9));
  CHECK(strat::pre(fr, Estimator::mixed_rp) == doctest::Approx(132.5006032847).epsilon(1e-9));
  CHECK(strat::pre(fr, Estimator::mixed_pr) == doctest::Approx(74.2849310341).epsilon(1e-9));
  CHECK(strat::pre(fr, Estimator::regsum) == doctest::Approx(109.2906495497).epsilon(1e-9));
  CHECK(strat::pre(fr, Estimator::pooled) == doctest::Approx(3119.7670424895).epsilon(1e-9));
}

TEST_CASE("sign-consistent convention restores the pairwise sum identity") {
  const auto& fr = frame();
  double lhs = strat::mse(fr, Estimator::drd) + strat::mse(fr, Estimator::dpd);

  double rhsB = strat::mse(fr, Estimator::mixed_rp, Convention::sign_consistent) +
                strat::mse(fr, Estimator::mixed_pr, Convention::sign_consistent);
  CHECK(std::fabs(lhs - rhsB) / lhs < 1e-12);

  double rhsA = strat::mse(fr, Estimator::mixed_rp) + strat::mse(fr, Estimator::mixed_pr);
  CHECK(std::fabs(lhs - rhsA) / lhs > 0.1);  // strict reading breaks it

  CHECK(strat::pre(fr, Estimator::mixed_rp, Convention::sign_consistent) ==
        doctest::Approx(67.2394887866).epsilon(1e-9));
  CHECK(strat::pre(fr, Estimator::mixed_pr, Convention::sign_consistent) ==
        doctest::Approx(48.1075500985).epsilon(1e-9));
}

TEST_CASE("pooled solution: closed form is the stationary minimum") {
  const auto& fr = frame();
  auto sol = strat::solve_pooled(fr);
  CHECK(sol.b1 == doctest::Approx(0.0344130420062227).epsilon(1e-12));
  CHECK(sol.b2 == doctest::Approx(1.65308873086172).epsilon(1e-12));
  CHECK(sol.m1 == doctest::Approx(0.632880922450228).epsilon(1e-10));
  CHECK(sol.m2 == doctest::Approx(1.80670527428177).epsilon(1e-10));
  CHECK(sol.mse == doctest::Approx(71.432260789983).epsilon(1e-10));

  // stationarity of the surface at the solution
  double h = 1e-5;
  double d1 = num::fd1([&](double x) { return strat::pooled_surface(fr, x, sol.m2); }, sol.m1, h);
  double d2 = num::fd1([&](double x) { return strat::pooled_surface(fr, sol.m1, x); }, sol.m2, h);
  CHECK(std::fabs(d1) < 1e-5);
  CHECK(std::fabs(d2) < 1e-5);

  // any perturbation raises the surface
  for (double dx : {-0.01, 0.01}) {
    CHECK(strat::pooled_surface(fr, sol.m1 + dx, sol.m2) > sol.mse);
    CHECK(strat::pooled_surface(fr, sol.m1, sol.m2 + dx) > sol.mse);
  }

  // the minimum equals the two-slope regression bound
  auto v = fr.vmoments();
  double bound = fr.ybar() * fr.ybar() *
                 (v.v200 - sol.u1 * v.v110 - sol.u2 * v.v101);
  CHECK(std::fabs(sol.mse - bound) / bound < 1e-9);
}

TEST_CASE("pre_table ordering and efficiency gaps") {
  const auto& fr = frame();
  auto rows = strat::pre_table(fr);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0].name == "mean");
  CHECK(rows[0].pre == 100.0);
  CHECK(rows[8].name == "pooled");

  auto gaps = strat::efficiency_gaps(fr);
  REQUIRE(gaps.size() == 8);
  for (const auto& g : gaps) {
    if (g.name == "ratio" || g.name == "drd" || g.name == "pooled")
      CHECK(g.preferred);
    if (g.name == "dpd") CHECK(!g.preferred);
  }
}
