#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "survopt/attr.hpp"
#include "testdata.hpp"

using namespace survopt;
using attr::Member;

namespace {
const attr::Population& P1() {
  static auto p = testdata::attr_pop1();
  return p;
}
const attr::Population& P2() {
  static auto p = testdata::attr_pop2();
  return p;
}
const attr::Population& D1() {
  static auto p = testdata::attr_dpop1();
  return p;
}
const attr::Population& D2() {
  static auto p = testdata::attr_dpop2();
  return p;
}
}  // namespace

TEST_CASE("derived quantities") {
  CHECK(P1().kp() == doctest::Approx(0.766 * 0.604 / 2.19012).epsilon(1e-14));
  CHECK(P1().f1() == doctest::Approx(1.0 / 20 - 1.0 / 89).epsilon(1e-14));
  CHECK(D1().f3() == doctest::Approx((1.0 / 23 - 1.0 / 89) - (1.0 / 45 - 1.0 / 89)).epsilon(1e-14));
  CHECK(attr::mse_mean(P1()) == doctest::Approx(0.159654631032809).epsilon(1e-12));
  CHECK(attr::mse_mean(P2()) == doctest::Approx(0.155032418473574).epsilon(1e-12));
}

TEST_CASE("ratio- and product-type members with unit shrinkage") {
  Member ngr;  // K3 = 0 collapses the shrinkage factor to 1
  ngr.K3 = 0.0;
  CHECK(attr::V1(P1(), ngr) == 1.0);
  CHECK(attr::pre(P1(), attr::mse_shift(P1(), ngr)) == doctest::Approx(11.6373853241).epsilon(1e-10));
  CHECK(attr::pre(P2(), attr::mse_shift(P2(), ngr)) == doctest::Approx(1.59133623336).epsilon(1e-10));
  CHECK(attr::bias_shift(P1(), ngr) == doctest::Approx(0.492768878149).epsilon(1e-10));

  Member ngp = ngr;
  ngp.alpha = -1.0;
  CHECK(attr::pre(P1(), attr::mse_shift(P1(), ngp)) == doctest::Approx(5.07533299265).epsilon(1e-10));
  CHECK(attr::pre(P2(), attr::mse_shift(P2(), ngp)) == doctest::Approx(1.95116766593).epsilon(1e-10));
  CHECK(attr::bias_shift(P1(), ngp) == doctest::Approx(0.131978134459).epsilon(1e-10));
}

TEST_CASE("mixed family bias and mse") {
  Member all1;
  CHECK(attr::mse_mixed(P1(), all1) == doctest::Approx(1.19612859784).epsilon(1e-10));
  CHECK(attr::bias_mixed(P1(), all1) == doctest::Approx(-0.0931918774651).epsilon(1e-9));
}

TEST_CASE("optimal weights reproduce and re-substitute to the bound") {
  Member all1;
  auto w1 = attr::solve_weights(P1(), all1);
  CHECK(w1.w1 == doctest::Approx(-3.9556216173697).epsilon(1e-10));
  CHECK(w1.w2 == doctest::Approx(5.35548704256791).epsilon(1e-10));
  CHECK(w1.w3 == doctest::Approx(-0.399865425198207).epsilon(1e-10));
  CHECK(w1.w1 + w1.w2 + w1.w3 == doctest::Approx(1.0).epsilon(1e-12));
  double m1 = attr::mse_weighted(P1(), all1, w1);
  CHECK(m1 == doctest::Approx(0.0659763183465221).epsilon(1e-12));
  CHECK(std::fabs(m1 - attr::min_mse(P1())) / attr::min_mse(P1()) < 1e-9);

  Member p2cfg;  // degenerate second shrinkage: K3 = K5 = 0
  p2cfg.K3 = 0.0;
  p2cfg.K5 = 0.0;
  auto w2 = attr::solve_weights(P2(), p2cfg);
  CHECK(w2.w1 == doctest::Approx(1.12418213208774).epsilon(1e-10));
  CHECK(w2.w2 == doctest::Approx(0.0207943161508765).epsilon(1e-9));
  CHECK(w2.w3 == doctest::Approx(-0.14497644823862).epsilon(1e-9));
  double m2 = attr::mse_weighted(P2(), p2cfg, w2);
  CHECK(m2 == doctest::Approx(0.131813368191206).epsilon(1e-12));
  CHECK(std::fabs(m2 - attr::min_mse(P2())) / attr::min_mse(P2()) < 1e-9);
}

TEST_CASE("optimum PRE of the weighted combination") {
  CHECK(100.0 * attr::mse_mean(P1()) / attr::min_mse(P1()) ==
        doctest::Approx(241.987784457).epsilon(1e-10));
  CHECK(100.0 * attr::mse_mean(P2()) / attr::min_mse(P2()) ==
        doctest::Approx(117.615095192).epsilon(1e-10));
}

TEST_CASE("member catalog instantiates the published 25 rows") {
  auto cat = attr::member_catalog(P1());
  REQUIRE(cat.size() == 25);
  CHECK(cat[0].id == "1");
  CHECK(cat[0].first == 1.0);
  CHECK(cat[0].second == doctest::Approx(2.19012));
  CHECK(cat[9].id == "10");
  CHECK(cat[9].first == 89.0);
  CHECK(cat[9].second == 1.0);

  // spot values against the reference evaluation
  Member a1;
  a1.K1 = cat[0].first;
  a1.K3 = cat[0].second;
  CHECK(attr::pre(P1(), attr::mse_shift(P1(), a1)) == doctest::Approx(134.995271959).epsilon(1e-10));
  Member a1m = a1;
  a1m.K2 = -1.0;
  CHECK(attr::pre(P1(), attr::mse_shift(P1(), a1m)) == doctest::Approx(72.5011956619).epsilon(1e-10));

  auto cat2 = attr::member_catalog(P2());
  Member b3;
  b3.K1 = cat2[2].first;  // beta2
  b3.K3 = cat2[2].second;  // cp
  b3.alpha = -1.0;
  CHECK(attr::pre(P2(), attr::mse_shift(P2(), b3)) == doctest::Approx(6.15361387097).epsilon(1e-10));

  Member c17;
  c17.K4 = cat[16].first;   // n
  c17.K5 = cat[16].second;  // rho
  CHECK(attr::pre(P1(), attr::mse_mixed(P1(), c17)) == doctest::Approx(38.5868754426).epsilon(1e-10));
}

TEST_CASE("two-phase members") {
  CHECK(100.0 * attr::mse_mean(D1()) / attr::min_mse_d(D1()) ==
        doctest::Approx(112.327106118).epsilon(1e-10));
  CHECK(100.0 * attr::mse_mean(D2()) / attr::min_mse_d(D2()) ==
        doctest::Approx(106.746662798).epsilon(1e-10));

  Member ngr;
  ngr.K3 = 0.0;
  CHECK(attr::pre(D1(), attr::mse_shift_d(D1(), ngr)) == doctest::Approx(11.1667078625).epsilon(1e-10));
  CHECK(attr::pre(D2(), attr::mse_shift_d(D2(), ngr)) == doctest::Approx(8.89203741687).epsilon(1e-10));
  Member ngp = ngr;
  ngp.alpha = -1.0;
  CHECK(attr::pre(D1(), attr::mse_shift_d(D1(), ngp)) == doctest::Approx(7.60035055297).epsilon(1e-10));
  CHECK(attr::pre(D2(), attr::mse_shift_d(D2(), ngp)) == doctest::Approx(12.0918492352).epsilon(1e-10));

  Member all1;
  CHECK(attr::mse_shift_d(D1(), all1) == doctest::Approx(24015.6911369911).epsilon(1e-10));
  CHECK(attr::mse_mixed_d(D1(), all1) == doctest::Approx(267504.57170346).epsilon(1e-10));
  CHECK(attr::mse_mixed_d(D1(), all1, Convention::sign_consistent) ==
        doctest::Approx(214167.018309911).epsilon(1e-10));
}

TEST_CASE("two-phase optimal weights and re-substitution") {
  Member all1;
  auto h1 = attr::solve_weights_d(D1(), all1);
  CHECK(h1.w1 == doctest::Approx(-0.0799138341780057).epsilon(1e-9));
  CHECK(h1.w2 == doctest::Approx(1.10423306495144).epsilon(1e-9));
  CHECK(h1.w3 == doctest::Approx(-0.0243192307734342).epsilon(1e-9));
  double m1 = attr::mse_weighted_d(D1(), all1, h1);
  CHECK(m1 == doctest::Approx(23983.5481159552).epsilon(1e-12));
  CHECK(std::fabs(m1 - attr::min_mse_d(D1())) / attr::min_mse_d(D1()) < 1e-9);

  auto h2 = attr::solve_weights_d(D2(), all1);
  CHECK(h2.w1 == doctest::Approx(1.40727872583597).epsilon(1e-9));
  CHECK(h2.w2 == doctest::Approx(-0.418784498925671).epsilon(1e-9));
  CHECK(h2.w3 == doctest::Approx(0.0115057730897013).epsilon(1e-9));
  double m2 = attr::mse_weighted_d(D2(), all1, h2);
  CHECK(m2 == doctest::Approx(0.652898780774543).epsilon(1e-12));
  CHECK(std::fabs(m2 - attr::min_mse_d(D2())) / attr::min_mse_d(D2()) < 1e-9);
}
