#ifndef ISODBT_POLY_HPP
#define ISODBT_POLY_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isodbt/rational.hpp"

namespace isodbt {

// Dense univariate polynomial with exact rational coefficients, ascending
// order.  Invariant: the coefficient vector carries no trailing zeros, so
// the zero polynomial is the empty vector and degree() is -1 for it.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational constant);
  explicit Poly(std::vector<Rational> coeffs);

  // c * z^k
  static Poly monomial(Rational c, int k);
  static Poly variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  // Coefficient of z^k; zero beyond the degree.
  Rational coeff(int k) const;
  Rational leading() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Rational& s) const;
  Poly operator/(const Rational& s) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;
  Rational eval(const Rational& z) const;
  double eval_double(double z) const;
  // p(-z)
  Poly negate_arg() const;
  // p(z + s)
  Poly shift_arg(const Rational& s) const;

  std::string str(const std::string& var = "z") const;
  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();
  std::vector<Rational> c_;
};

struct PolyDivmod {
  Poly quotient;
  Poly remainder;
};

// Euclidean division; errors on zero divisor.
PolyDivmod divmod(const Poly& a, const Poly& b);
// Division known to be exact; errors on a nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);
// Monic greatest common divisor; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// The positive rational c such that p / c has coprime integer coefficients;
// errors on the zero polynomial.
Rational content(const Poly& p);
// p divided by its content, with the leading coefficient made positive.
// Unique representative of the proportionality class of p.
Poly primitive_normalized(const Poly& p);

// Number of distinct real roots of p in the open interval (lo, hi), where
// hi = nullopt means +infinity.  Roots exactly at a finite endpoint are not
// counted.  Works for non-squarefree p; errors on the zero polynomial.
int sturm_count(const Poly& p, const Rational& lo,
                const std::optional<Rational>& hi);

}  // namespace isodbt

#endif
