#ifndef ISODBT_LAGUERRE_HPP
#define ISODBT_LAGUERRE_HPP

#include "isodbt/poly.hpp"

namespace isodbt {

// Generalized Laguerre polynomial L_n^alpha as an exact Poly, from the
// hypergeometric series: coefficient of z^k is (-1)^k / k! * C(n+alpha, n-k).
// The parameter alpha is an arbitrary rational (negative and fractional
// values included).  With negate_arg the argument is flipped, L_n^alpha(-z).
// Convention: L with negative degree is the zero polynomial.
Poly laguerre_poly(int n, const Rational& alpha, bool negate_arg = false);

// Same polynomial built from the three-term recurrence
//   (n+1) L_{n+1} = (2n + 1 + alpha - z) L_n - (n + alpha) L_{n-1}.
// Independent construction route, used to cross-check laguerre_poly.
Poly laguerre_poly_recurrence(int n, const Rational& alpha,
                              bool negate_arg = false);

// Binomial coefficient C(top, k) with rational top and integer k >= 0.
Rational binom(const Rational& top, int k);

// L_n^alpha(0) = C(n + alpha, n).
Rational laguerre_at_zero(int n, const Rational& alpha);

// Parameter-shift and derivative identities, returned as the residual
// polynomial of the identity written as (left side) - (right side).
// Contract: the residual is identically zero.
enum class LaguerreShift {
  // L_n^alpha + L_{n-1}^{alpha+1} - L_n^{alpha+1}
  kSum,
  // z L_{n-1}^{alpha+1} - alpha L_{n-1}^alpha + n L_n^{alpha-1}
  kThreeTerm,
  // (L_n^alpha)' + L_{n-1}^{alpha+1}
  kDerivative,
  // gauge-cleared residual of
  //   (z^alpha e^{-z} L_n^alpha)' = (n+1) z^{alpha-1} e^{-z} L_{n+1}^{alpha-1},
  // i.e. alpha L_n^alpha + z (L_n^alpha)' - z L_n^alpha - (n+1) L_{n+1}^{alpha-1}
  kWeightedDerivative,
};

Poly laguerre_shift(LaguerreShift kind, int n, const Rational& alpha);

}  // namespace isodbt

#endif
