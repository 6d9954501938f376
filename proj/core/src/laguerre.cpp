#include "isodbt/laguerre.hpp"

#include "isodbt/errors.hpp"

namespace isodbt {

Rational binom(const Rational& top, int k) {
  if (k < 0) throw InvalidArgument("binom: negative lower index");
  Rational acc(1);
  for (int j = 0; j < k; ++j) {
    acc *= (top - Rational(j)) / Rational(j + 1);
  }
  return acc;
}

Poly laguerre_poly(int n, const Rational& alpha, bool negate_arg) {
  if (n < 0) return Poly();
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  Rational kfact(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) kfact *= Rational(k);
    Rational term = binom(Rational(n) + alpha, n - k) / kfact;
    if (k % 2 == 1) term = -term;
    c[static_cast<size_t>(k)] = term;
  }
  Poly p{std::move(c)};
  return negate_arg ? p.negate_arg() : p;
}

Poly laguerre_poly_recurrence(int n, const Rational& alpha, bool negate_arg) {
  if (n < 0) return Poly();
  Poly prev;                                   // L_{-1} = 0
  Poly cur(Rational(1));                       // L_0 = 1
  const Poly z = Poly::variable();
  for (int m = 0; m < n; ++m) {
    // (m+1) L_{m+1} = (2m + 1 + alpha - z) L_m - (m + alpha) L_{m-1}
    Poly lin = Poly(Rational(2 * m + 1) + alpha) - z;
    Poly next =
        (lin * cur - prev * (Rational(m) + alpha)) / Rational(m + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return negate_arg ? cur.negate_arg() : cur;
}

Rational laguerre_at_zero(int n, const Rational& alpha) {
  if (n < 0) return Rational(0);
  return binom(Rational(n) + alpha, n);
}

Poly laguerre_shift(LaguerreShift kind, int n, const Rational& alpha) {
  if (n < 0) throw InvalidArgument("laguerre_shift: negative degree");
  const Poly z = Poly::variable();
  switch (kind) {
    case LaguerreShift::kSum: {
      if (n < 1) throw InvalidArgument("laguerre_shift: kSum needs n >= 1");
      return laguerre_poly(n, alpha) + laguerre_poly(n - 1, alpha + 1) -
             laguerre_poly(n, alpha + 1);
    }
    case LaguerreShift::kThreeTerm: {
      if (n < 1)
        throw InvalidArgument("laguerre_shift: kThreeTerm needs n >= 1");
      return z * laguerre_poly(n - 1, alpha + 1) -
             laguerre_poly(n - 1, alpha) * alpha +
             laguerre_poly(n, alpha - 1) * Rational(n);
    }
    case LaguerreShift::kDerivative: {
      if (n < 1)
        throw InvalidArgument("laguerre_shift: kDerivative needs n >= 1");
      return laguerre_poly(n, alpha).derivative() +
             laguerre_poly(n - 1, alpha + 1);
    }
    case LaguerreShift::kWeightedDerivative: {
      Poly l = laguerre_poly(n, alpha);
      return l * alpha + z * l.derivative() - z * l -
             laguerre_poly(n + 1, alpha - 1) * Rational(n + 1);
    }
  }
  throw InvalidArgument("laguerre_shift: unknown kind");
}

}  // namespace isodbt
