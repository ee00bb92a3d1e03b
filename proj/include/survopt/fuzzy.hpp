#pragma once

namespace survopt::fuzzy {

// Trapezoidal fuzzy number stored as the raw quadruple (c, a, b, d).
// In canonical order c <= a <= b <= d the support is [c, d] and the core
// [a, b]; a == b gives the triangular case. Quadruples are kept verbatim:
// arithmetic and the graded mean are order-agnostic formulas, so inputs
// written in spread notation pass through unchanged. Only membership()
// insists on canonical order.
struct TrapezoidalFuzzy {
  double c = 0.0;
  double a = 0.0;
  double b = 0.0;
  double d = 0.0;
};

inline TrapezoidalFuzzy crisp(double x) { return {x, x, x, x}; }

bool canonical(const TrapezoidalFuzzy& t);

// Piecewise-linear membership grade in [0, 1]. Throws on a non-canonical
// quadruple.
double membership(double x, const TrapezoidalFuzzy& t);

// Componentwise arithmetic. Subtraction and division pair each component
// with the opposite-end component of the right operand; division refuses
// any divisor whose component range touches zero.
TrapezoidalFuzzy fuzzy_add(const TrapezoidalFuzzy& A, const TrapezoidalFuzzy& B);
TrapezoidalFuzzy fuzzy_sub(const TrapezoidalFuzzy& A, const TrapezoidalFuzzy& B);
TrapezoidalFuzzy fuzzy_mul(const TrapezoidalFuzzy& A, const TrapezoidalFuzzy& B);
TrapezoidalFuzzy fuzzy_div(const TrapezoidalFuzzy& A, const TrapezoidalFuzzy& B);
TrapezoidalFuzzy neg(const TrapezoidalFuzzy& A);

// Graded mean integration value (c + 2a + 2b + d) / 6.
double graded_mean(const TrapezoidalFuzzy& t);

// Same value through the h-level integral
//   P = [int_0^1 h (L^-1(h) + R^-1(h)) / 2 dh] / [int_0^1 h dh]
// evaluated by quadrature. Self-check for graded_mean; agrees to 1e-9.
double graded_mean_quad(const TrapezoidalFuzzy& t);

}  // namespace survopt::fuzzy
