#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isodbt/errors.hpp"
#include "isodbt/laguerre.hpp"

using namespace isodbt;

namespace {
const Rational kHalf(1, 2);
}

TEST_CASE("generalized binomials") {
  CHECK(binom(Rational(5), 2) == Rational(10));
  CHECK(binom(Rational(5), 0) == Rational(1));
  CHECK(binom(Rational(5), 7) == Rational(0));  // integer top shorter than k
  CHECK(binom(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(binom(Rational(7, 2), 1) == Rational(7, 2));
}

TEST_CASE("frozen laguerre values") {
  // L_2^{1/2}(z) = 15/8 - 5/2 z + z^2/2.
  Poly l = laguerre_poly(2, kHalf);
  CHECK(l.coeff(0) == Rational(15, 8));
  CHECK(l.coeff(1) == Rational(-5, 2));
  CHECK(l.coeff(2) == Rational(1, 2));
  // L_3^{3/2}(0) = binom(3+3/2, 3) = 105/16.
  CHECK(laguerre_at_zero(3, Rational(3, 2)) == Rational(105, 16));
  CHECK(laguerre_poly(3, Rational(3, 2)).coeff(0) == Rational(105, 16));
  // L_0 = 1, L_1^a(z) = 1 + a - z.
  CHECK(laguerre_poly(0, Rational(9, 7)) == Poly(Rational(1)));
  Poly l1 = laguerre_poly(1, Rational(9, 7));
  CHECK(l1.coeff(0) == Rational(16, 7));
  CHECK(l1.coeff(1) == Rational(-1));
  // Negative degree is the zero polynomial by convention.
  CHECK(laguerre_poly(-1, kHalf).is_zero());
  CHECK(laguerre_poly(-3, kHalf).is_zero());
}

TEST_CASE("argument reflection") {
  Poly plain = laguerre_poly(2, kHalf);
  Poly refl = laguerre_poly(2, kHalf, true);
  CHECK(refl == plain.negate_arg());
  CHECK(refl.coeff(1) == Rational(5, 2));
}

TEST_CASE("series and recurrence routes agree") {
  for (int n = 0; n <= 8; ++n) {
    for (const Rational& alpha :
         {Rational(1, 2), Rational(-7, 2), Rational(3), Rational(11, 3)}) {
      CHECK(laguerre_poly(n, alpha) == laguerre_poly_recurrence(n, alpha));
      CHECK(laguerre_poly(n, alpha, true) ==
            laguerre_poly_recurrence(n, alpha, true));
    }
  }
}

TEST_CASE("shift identities vanish identically") {
  for (int n = 1; n <= 6; ++n) {
    for (const Rational& alpha :
         {Rational(1, 2), Rational(5, 2), Rational(-3, 2), Rational(4),
          Rational(7, 3)}) {
      CHECK(laguerre_shift(LaguerreShift::kSum, n, alpha).is_zero());
      CHECK(laguerre_shift(LaguerreShift::kThreeTerm, n, alpha).is_zero());
      CHECK(laguerre_shift(LaguerreShift::kDerivative, n, alpha).is_zero());
      CHECK(laguerre_shift(LaguerreShift::kWeightedDerivative, n, alpha)
                .is_zero());
    }
  }
}

TEST_CASE("laguerre differential equation") {
  // z y'' + (alpha + 1 - z) y' + n y = 0.
  for (int n = 0; n <= 6; ++n) {
    for (const Rational& alpha : {Rational(1, 2), Rational(-5, 2), Rational(2)}) {
      Poly y = laguerre_poly(n, alpha);
      Poly z = Poly::variable();
      Poly res = z * y.derivative().derivative() +
                 (Poly(alpha + Rational(1)) - z) * y.derivative() +
                 y * Rational(n);
      CHECK(res.is_zero());
    }
  }
}
