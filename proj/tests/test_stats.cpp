#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "survopt/stats.hpp"
#include "testdata.hpp"

using namespace survopt::stats;

TEST_CASE("pair resolution derives the missing quantity") {
  double r, c;
  resolve_pair(0.8, std::nullopt, 2.0, 3.0, "p", r, c);
  CHECK(c == doctest::Approx(4.8).epsilon(1e-15));
  resolve_pair(std::nullopt, 4.8, 2.0, 3.0, "p", r, c);
  CHECK(r == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("pair resolution accepts consistent and rejects inconsistent pairs") {
  double r, c;
  CHECK_NOTHROW(resolve_pair(0.8, 4.8 * (1.0 + 5e-7), 2.0, 3.0, "p", r, c));
  CHECK_THROWS_AS(resolve_pair(0.8, 4.8 * (1.0 + 5e-6), 2.0, 3.0, "p", r, c),
                  InconsistentInput);
  CHECK_THROWS_AS(resolve_pair(std::nullopt, std::nullopt, 2.0, 3.0, "p", r, c),
                  InconsistentInput);
  // covariance implying |rho| > 1
  CHECK_THROWS_AS(resolve_pair(std::nullopt, 7.0, 2.0, 3.0, "p", r, c),
                  InconsistentInput);
}

TEST_CASE("frame rejects bad sizes") {
  Stratum s;
  s.N = 10;
  s.n = 11;
  s.sy = s.sx = s.sz = 1.0;
  s.rho_xy = s.rho_yz = s.rho_xz = 0.5;
  CHECK_THROWS_AS(StratifiedFrame({s}), InconsistentInput);
  CHECK_THROWS_AS(StratifiedFrame({}), InconsistentInput);
}

TEST_CASE("survey frame means and v-moments") {
  auto fr = survopt::testdata::survey_frame();
  CHECK(fr.N() == doctest::Approx(923).epsilon(1e-15));
  CHECK(fr.ybar() == doctest::Approx(436.433022752).epsilon(1e-10));
  CHECK(fr.xbar() == doctest::Approx(11440.4984832).epsilon(1e-10));
  CHECK(fr.zbar() == doctest::Approx(350.418483207).epsilon(1e-10));

  auto v = fr.vmoments();
  CHECK(v.v200 == doctest::Approx(0.0116998785379054).epsilon(1e-12));
  CHECK(v.v020 == doctest::Approx(0.0131622150419831).epsilon(1e-12));
  CHECK(v.v002 == doctest::Approx(0.00633889308618557).epsilon(1e-12));
  CHECK(v.v110 == doctest::Approx(0.0118735173262591).epsilon(1e-12));
  CHECK(v.v101 == doctest::Approx(0.00841354445021452).epsilon(1e-12));
  CHECK(v.v011 == doctest::Approx(0.00857025177644875).epsilon(1e-12));
}

TEST_CASE("derived correlations are recovered from covariances and back") {
  auto fr = survopt::testdata::survey_frame();
  for (std::size_t h = 0; h < fr.size(); ++h) {
    const auto& s = fr.strata()[h];
    const auto& d = fr.derived()[h];
    CHECK(d.cxy == doctest::Approx(d.rxy * s.sx * s.sy).epsilon(1e-12));
    CHECK(d.cxz == doctest::Approx(d.rxz * s.sx * s.sz).epsilon(1e-12));
    CHECK(std::fabs(d.rxz) <= 1.0);
  }
}
