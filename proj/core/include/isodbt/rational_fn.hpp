#ifndef ISODBT_RATIONAL_FN_HPP
#define ISODBT_RATIONAL_FN_HPP

#include <iosfwd>
#include <string>

#include "isodbt/poly.hpp"

namespace isodbt {

// Quotient of two polynomials, always reduced: gcd(num, den) = 1 and den
// monic.  With that normalization structural equality is semantic equality.
class RationalFn {
 public:
  RationalFn() = default;  // zero
  RationalFn(Poly num, Poly den);
  explicit RationalFn(Poly num) : RationalFn(std::move(num), Poly(Rational(1))) {}
  explicit RationalFn(Rational c) : RationalFn(Poly(std::move(c))) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.degree() == 0; }

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn operator*(const Rational& s) const;
  RationalFn operator/(const Rational& s) const;
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) {
    return !(a == b);
  }

  RationalFn derivative() const;
  // Errors at a pole.
  Rational eval(const Rational& z) const;
  double eval_double(double z) const;

  std::string str(const std::string& var = "z") const;
  friend std::ostream& operator<<(std::ostream& os, const RationalFn& f);

 private:
  // Requires gcd(num, den) = 1 already; only normalizes den to monic.
  static RationalFn from_reduced(Poly num, Poly den);

  Poly num_;                  // zero function: num_ empty
  Poly den_ = Poly(Rational(1));
};

}  // namespace isodbt

#endif
