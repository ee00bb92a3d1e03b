#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "survopt/fuzzy.hpp"
#include "survopt/rng.hpp"

using namespace survopt;
using fuzzy::TrapezoidalFuzzy;

TEST_CASE("membership: trapezoid shape, triangle degenerate, canonical gate") {
  TrapezoidalFuzzy t{0.0, 1.0, 2.0, 3.0};
  CHECK(fuzzy::canonical(t));

  CHECK(fuzzy::membership(-0.5, t) == 0.0);
  CHECK(fuzzy::membership(3.5, t) == 0.0);
  CHECK(fuzzy::membership(0.5, t) == doctest::Approx(0.5));
  CHECK(fuzzy::membership(1.0, t) == 1.0);
  CHECK(fuzzy::membership(1.7, t) == 1.0);
  CHECK(fuzzy::membership(2.0, t) == 1.0);
  CHECK(fuzzy::membership(2.25, t) == doctest::Approx(0.75));
  CHECK(fuzzy::membership(0.0, t) == 0.0);
  CHECK(fuzzy::membership(3.0, t) == 0.0);

  // triangle = a == b trapezoid
  TrapezoidalFuzzy tri{1.0, 2.0, 2.0, 4.0};
  CHECK(fuzzy::membership(2.0, tri) == 1.0);
  CHECK(fuzzy::membership(1.5, tri) == doctest::Approx(0.5));
  CHECK(fuzzy::membership(3.0, tri) == doctest::Approx(0.5));

  // crisp point: membership is the indicator
  TrapezoidalFuzzy pt = fuzzy::crisp(2.0);
  CHECK(fuzzy::membership(2.0, pt) == 1.0);
  CHECK(fuzzy::membership(2.0 + 1e-12, pt) == 0.0);

  TrapezoidalFuzzy rev{1900.0, 2000.0, 2000.0, 1900.0};
  CHECK_FALSE(fuzzy::canonical(rev));
  CHECK_THROWS_WITH_AS(fuzzy::membership(1950.0, rev),
                       "non-canonical fuzzy number", std::invalid_argument);
}

TEST_CASE("componentwise arithmetic and the end-swapping rules") {
  TrapezoidalFuzzy A{1.0, 2.0, 3.0, 4.0};
  TrapezoidalFuzzy Z = fuzzy::crisp(0.0);

  auto s = fuzzy::fuzzy_add(A, Z);
  CHECK(s.c == 1.0);
  CHECK(s.a == 2.0);
  CHECK(s.b == 3.0);
  CHECK(s.d == 4.0);

  auto diff = fuzzy::fuzzy_sub(A, A);
  CHECK(diff.c == -3.0);
  CHECK(diff.a == -1.0);
  CHECK(diff.b == 1.0);
  CHECK(diff.d == 3.0);

  auto q = fuzzy::fuzzy_div(A, A);
  CHECK(q.c == doctest::Approx(0.25));
  CHECK(q.a == doctest::Approx(2.0 / 3.0));
  CHECK(q.b == doctest::Approx(1.5));
  CHECK(q.d == doctest::Approx(4.0));

  auto m = fuzzy::fuzzy_mul(A, TrapezoidalFuzzy{2.0, 3.0, 4.0, 5.0});
  CHECK(m.c == 2.0);
  CHECK(m.a == 6.0);
  CHECK(m.b == 12.0);
  CHECK(m.d == 20.0);

  // subtraction is addition of the reflected operand
  TrapezoidalFuzzy B{0.5, 1.0, 1.5, 2.5};
  auto lhs = fuzzy::fuzzy_sub(A, B);
  auto rhs = fuzzy::fuzzy_add(A, fuzzy::neg(B));
  CHECK(lhs.c == rhs.c);
  CHECK(lhs.a == rhs.a);
  CHECK(lhs.b == rhs.b);
  CHECK(lhs.d == rhs.d);

  // divisor ranges touching zero are refused; all-negative is fine
  CHECK_THROWS_WITH_AS(fuzzy::fuzzy_div(A, TrapezoidalFuzzy{0.0, 1.0, 2.0, 3.0}),
                       "fuzzy division by zero-touching number",
                       std::invalid_argument);
  CHECK_THROWS_AS(fuzzy::fuzzy_div(A, TrapezoidalFuzzy{-1.0, -0.5, 0.5, 1.0}),
                  std::invalid_argument);
  auto qn = fuzzy::fuzzy_div(A, TrapezoidalFuzzy{-4.0, -3.0, -2.0, -1.0});
  CHECK(qn.c == doctest::Approx(-1.0));
  CHECK(qn.d == doctest::Approx(-1.0));
}

TEST_CASE("graded mean: closed form and quadrature agree") {
  CHECK(fuzzy::graded_mean(fuzzy::crisp(7.25)) == doctest::Approx(7.25));
  CHECK(fuzzy::graded_mean(TrapezoidalFuzzy{1.0, 2.0, 3.0, 4.0}) ==
        doctest::Approx(2.5));

  // symmetric spread about m defuzzifies to m
  double mm = 13.0, del = 0.75;
  CHECK(fuzzy::graded_mean(TrapezoidalFuzzy{mm - 2 * del, mm - del, mm + del,
                                            mm + 2 * del}) ==
        doctest::Approx(mm));

  // spread-notation quadruple, taken verbatim
  TrapezoidalFuzzy rev{1900.0, 2000.0, 2000.0, 1900.0};
  CHECK(fuzzy::graded_mean(rev) == doctest::Approx(11800.0 / 6.0).epsilon(1e-12));

  num::Rng rng(20113);
  for (int i = 0; i < 50; ++i) {
    double c = rng.uniform(-50.0, 50.0);
    TrapezoidalFuzzy t{c, c + rng.uniform(0.0, 10.0), 0.0, 0.0};
    t.b = t.a + rng.uniform(0.0, 10.0);
    t.d = t.b + rng.uniform(0.0, 10.0);
    REQUIRE(fuzzy::canonical(t));
    CHECK(fuzzy::graded_mean_quad(t) ==
          doctest::Approx(fuzzy::graded_mean(t)).epsilon(1e-9));
  }
  // the integral formula is order-agnostic too
  CHECK(fuzzy::graded_mean_quad(rev) ==
        doctest::Approx(fuzzy::graded_mean(rev)).epsilon(1e-9));
}

TEST_CASE("graded mean is linear over add, sub, and positive scaling") {
  num::Rng rng(550912);
  for (int i = 0; i < 2000; ++i) {
    TrapezoidalFuzzy A{rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0),
                       rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
    TrapezoidalFuzzy B{rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0),
                       rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
    double pa = fuzzy::graded_mean(A);
    double pb = fuzzy::graded_mean(B);
    CHECK(fuzzy::graded_mean(fuzzy::fuzzy_add(A, B)) ==
          doctest::Approx(pa + pb).epsilon(1e-12));
    CHECK(fuzzy::graded_mean(fuzzy::fuzzy_sub(A, B)) ==
          doctest::Approx(pa - pb).epsilon(1e-12));
    double k = rng.uniform(0.01, 20.0);
    CHECK(fuzzy::graded_mean(fuzzy::fuzzy_mul(fuzzy::crisp(k), A)) ==
          doctest::Approx(k * pa).epsilon(1e-12));
  }
}
