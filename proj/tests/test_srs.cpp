#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "survopt/srs.hpp"
#include "testdata.hpp"

using namespace survopt;
using srs::Shift;

namespace {
const srs::Population& p1() {
  static auto p = testdata::srs_pop1();
  return p;
}
const srs::Population& p2() {
  static auto p = testdata::srs_pop2();
  return p;
}
}  // namespace

TEST_CASE("population derived quantities") {
  CHECK(p1().lam() == doctest::Approx(0.0405660377358491).epsilon(1e-14));
  CHECK(p1().g() == doctest::Approx(0.232558139534884).epsilon(1e-14));
  CHECK(p2().lam() == doctest::Approx(0.1875).epsilon(1e-14));
  CHECK(p2().g() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(srs::shift_factor(p1(), Shift::cv) == doctest::Approx(0.999923424178998).epsilon(1e-12));
  CHECK(srs::shift_factor(p1(), Shift::corr) == doctest::Approx(0.999968638960039).epsilon(1e-12));
  CHECK(srs::shift_factor(p2(), Shift::cv) == doctest::Approx(0.998694556725217).epsilon(1e-12));
  CHECK(srs::shift_factor(p2(), Shift::corr) == doctest::Approx(1.00912788130945).epsilon(1e-12));
}

TEST_CASE("ratio family MSEs, strongly correlated population") {
  const auto& p = p1();
  CHECK(srs::mse_mean(p) == doctest::Approx(5411348.28369).epsilon(1e-10));
  CHECK(srs::mse_ratio(p, Shift::none) == doctest::Approx(2542740.29671).epsilon(1e-10));
  CHECK(srs::mse_ratio(p, Shift::cv) == doctest::Approx(2542892.90304).epsilon(1e-10));
  CHECK(srs::mse_ratio(p, Shift::corr) == doctest::Approx(2542802.79422).epsilon(1e-10));
  CHECK(srs::mse_dual_ratio(p, Shift::none) == doctest::Approx(137519.756447).epsilon(1e-10));
  CHECK(srs::mse_dual_ratio(p, Shift::cv) == doctest::Approx(137528.009899).epsilon(1e-10));
  CHECK(srs::mse_dual_ratio(p, Shift::corr) == doctest::Approx(137523.136518).epsilon(1e-10));
}

TEST_CASE("product family MSEs, negatively correlated population") {
  const auto& p = p2();
  CHECK(srs::mse_mean(p) == doctest::Approx(0.567559187157).epsilon(1e-10));
  CHECK(srs::mse_product(p, Shift::none) == doctest::Approx(0.3386620486).epsilon(1e-10));
  CHECK(srs::mse_product(p, Shift::cv) == doctest::Approx(0.338822233699).epsilon(1e-10));
  CHECK(srs::mse_product(p, Shift::corr) == doctest::Approx(0.337552133445).epsilon(1e-10));
  CHECK(srs::mse_dual_product(p, Shift::none) == doctest::Approx(0.0376291165111).epsilon(1e-10));
  CHECK(srs::mse_dual_product(p, Shift::cv) == doctest::Approx(0.0376469148554).epsilon(1e-10));
  CHECK(srs::mse_dual_product(p, Shift::corr) == doctest::Approx(0.037505792605).epsilon(1e-10));
}

TEST_CASE("optimally weighted dual ratios") {
  auto e1 = srs::opt_dual_ratio(p1(), Shift::none);
  CHECK(e1.k == doctest::Approx(0.983020138818).epsilon(1e-11));
  CHECK(e1.mse == doctest::Approx(136099.716223).epsilon(1e-10));
  auto e3 = srs::opt_dual_ratio(p1(), Shift::cv);
  CHECK(e3.k == doctest::Approx(0.983018393522).epsilon(1e-11));
  CHECK(e3.mse == doctest::Approx(136107.675071).epsilon(1e-10));
  auto e5 = srs::opt_dual_ratio(p1(), Shift::corr);
  CHECK(e5.k == doctest::Approx(0.983019424071).epsilon(1e-11));
  CHECK(e5.mse == doctest::Approx(136102.975649).epsilon(1e-10));

  // optimal k never loses to the unweighted dual
  CHECK(e1.mse <= srs::mse_dual_ratio(p1(), Shift::none));
  CHECK(e3.mse <= srs::mse_dual_ratio(p1(), Shift::cv));
  CHECK(e5.mse <= srs::mse_dual_ratio(p1(), Shift::corr));
}

TEST_CASE("optimally weighted dual products, both conventions") {
  auto e2 = srs::opt_dual_product(p2(), Shift::none);
  CHECK(e2.k == doctest::Approx(0.999674185145).epsilon(1e-11));
  CHECK(e2.mse == doctest::Approx(0.0376229242815).epsilon(1e-10));

  auto e4 = srs::opt_dual_product(p2(), Shift::cv);
  CHECK(e4.k == doctest::Approx(0.9995287026).epsilon(1e-11));
  CHECK(e4.mse == doctest::Approx(0.0376419175496).epsilon(1e-10));
  auto e4b = srs::opt_dual_product(p2(), Shift::cv, Convention::sign_consistent);
  CHECK(e4b.k == doctest::Approx(0.999269737012).epsilon(1e-11));
  CHECK(e4b.mse == doctest::Approx(0.0376502029719).epsilon(1e-10));

  auto e6 = srs::opt_dual_product(p2(), Shift::corr);
  CHECK(e6.k == doctest::Approx(0.999528673508).epsilon(1e-11));
  CHECK(e6.mse == doctest::Approx(0.0375011118669).epsilon(1e-10));
  auto e6b = srs::opt_dual_product(p2(), Shift::corr, Convention::sign_consistent);
  CHECK(e6b.k == doctest::Approx(0.999267002361).epsilon(1e-11));
  CHECK(e6b.mse == doctest::Approx(0.0375097014144).epsilon(1e-10));
}

TEST_CASE("two-parameter family optimum") {
  srs::TwoParamConfig c1;  // alpha = beta = 1
  auto r1 = srs::opt_two_param(p1(), c1);
  CHECK(r1.m1 == doctest::Approx(0.987898020875).epsilon(1e-10));
  CHECK(r1.m2 == doctest::Approx(0.0523019189336).epsilon(1e-9));
  CHECK(r1.mse == doctest::Approx(75502.233485).epsilon(1e-10));

  srs::TwoParamConfig c2;
  c2.alpha = -1.0;
  c2.beta = -1.0;
  auto r2 = srs::opt_two_param(p2(), c2);
  CHECK(r2.m1 == doctest::Approx(0.999791953226).epsilon(1e-10));
  CHECK(r2.m2 == doctest::Approx(-0.00974660676889).epsilon(1e-9));
  CHECK(r2.mse == doctest::Approx(0.0337020869101).epsilon(1e-10));

  // the optimised family beats every fixed-form member above
  CHECK(r1.mse < 136099.717);
  CHECK(r2.mse < 0.0375011119);
}
