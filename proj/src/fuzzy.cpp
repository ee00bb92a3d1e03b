#include "survopt/fuzzy.hpp"

#include <algorithm>
#include <stdexcept>

#include "survopt/numeric.hpp"

namespace survopt::fuzzy {

bool canonical(const TrapezoidalFuzzy& t) {
  return t.c <= t.a && t.a <= t.b && t.b <= t.d;
}

double membership(double x, const TrapezoidalFuzzy& t) {
  if (!canonical(t)) throw std::invalid_argument("non-canonical fuzzy number");
  if (x < t.c || x > t.d) return 0.0;
  if (x < t.a) return (x - t.c) / (t.a - t.c);  // x >= c and x < a force a > c
  if (x <= t.b) return 1.0;
  return (t.d - x) / (t.d - t.b);  // x > b and x <= d force d > b
}

TrapezoidalFuzzy fuzzy_add(const TrapezoidalFuzzy& A, const TrapezoidalFuzzy& B) {
  return {A.c + B.c, A.a + B.a, A.b + B.b, A.d + B.d};
}

TrapezoidalFuzzy fuzzy_sub(const TrapezoidalFuzzy& A, const TrapezoidalFuzzy& B) {
  return {A.c - B.d, A.a - B.b, A.b - B.a, A.d - B.c};
}

TrapezoidalFuzzy fuzzy_mul(const TrapezoidalFuzzy& A, const TrapezoidalFuzzy& B) {
  return {A.c * B.c, A.a * B.a, A.b * B.b, A.d * B.d};
}

TrapezoidalFuzzy fuzzy_div(const TrapezoidalFuzzy& A, const TrapezoidalFuzzy& B) {
  double lo = std::min({B.c, B.a, B.b, B.d});
  double hi = std::max({B.c, B.a, B.b, B.d});
  if (lo <= 0.0 && hi >= 0.0)
    throw std::invalid_argument("fuzzy division by zero-touching number");
  return {A.c / B.d, A.a / B.b, A.b / B.a, A.d / B.c};
}

TrapezoidalFuzzy neg(const TrapezoidalFuzzy& A) {
  return {-A.d, -A.b, -A.a, -A.c};
}

double graded_mean(const TrapezoidalFuzzy& t) {
  return (t.c + 2.0 * t.a + 2.0 * t.b + t.d) / 6.0;
}

double graded_mean_quad(const TrapezoidalFuzzy& t) {
  double num = num::integrate(
      [&](double h) {
        double linv = t.c + (t.a - t.c) * h;
        double rinv = t.d - (t.d - t.b) * h;
        return 0.5 * h * (linv + rinv);
      },
      0.0, 1.0);
  double den = num::integrate([](double h) { return h; }, 0.0, 1.0);
  return num / den;
}

}  // namespace survopt::fuzzy
