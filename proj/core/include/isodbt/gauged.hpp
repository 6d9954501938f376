#ifndef ISODBT_GAUGED_HPP
#define ISODBT_GAUGED_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isodbt/rational_fn.hpp"

namespace isodbt {

// Exact determinant of a square matrix over Q[z] (fraction-free Bareiss,
// exact divisions checked).  Returns the zero polynomial for singular input.
Poly bareiss_det(std::vector<std::vector<Poly>> m);

// A function on the half line x > 0 of the form
//
//     x^{x_power} * exp(exp_coeff * z) * body(z),      z = omega x^2 / 2,
//
// with rational x_power and exp_coeff and a rational-function body in z.
// The class is closed under d/dx, products, quotients, and Wronskians, and
// every bound state, seed state and Wronskian in this project lives here.
//
// Canonical form (established by every constructor and operation): the body
// is reduced with monic denominator, and numerator and denominator are both
// nonzero at z = 0.  Stray z factors are exchanged for powers of x via
// z = (omega/2) x^2, which keeps the represented value exactly unchanged
// and makes x_power, exp_coeff, and the body unique.  The zero function is
// x_power = 0, exp_coeff = 0, zero body.
class GaugedFunction {
 public:
  GaugedFunction() = default;  // zero at unspecified params
  GaugedFunction(Rational omega, Rational a, Rational x_power,
                 Rational exp_coeff, RationalFn body);

  const Rational& omega() const { return omega_; }
  const Rational& a() const { return a_; }
  const Rational& x_power() const { return p_; }
  const Rational& exp_coeff() const { return c_; }
  const RationalFn& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }

  GaugedFunction operator-() const;
  friend GaugedFunction operator+(const GaugedFunction& f,
                                  const GaugedFunction& g);
  friend GaugedFunction operator-(const GaugedFunction& f,
                                  const GaugedFunction& g);
  friend GaugedFunction operator*(const GaugedFunction& f,
                                  const GaugedFunction& g);
  friend GaugedFunction operator/(const GaugedFunction& f,
                                  const GaugedFunction& g);
  GaugedFunction operator*(const Rational& s) const;

  // Semantic equality (canonical forms are unique).
  friend bool operator==(const GaugedFunction& f, const GaugedFunction& g);
  friend bool operator!=(const GaugedFunction& f, const GaugedFunction& g) {
    return !(f == g);
  }

  // x^{x_power + dp} * exp(exp_coeff z) * body * factor, canonicalized.
  // Covers multiplication by w(x) = r(z)/x and by V(x) = u(z)/x^2.
  GaugedFunction shifted_times(const Rational& dp,
                               const RationalFn& factor) const;

  GaugedFunction derivative() const;
  GaugedFunction derivative(int order) const;

  double eval_double(double x) const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const GaugedFunction& f);

 private:
  void canonicalize();

  Rational omega_ = 1;
  Rational a_ = 1;
  Rational p_ = 0;     // power of x
  Rational c_ = 0;     // coefficient of z in the exponent
  RationalFn body_;    // rational function of z
};

// The constant lambda with f = lambda * g, or nullopt when the two are not
// proportional (or either is zero).
std::optional<Rational> proportional(const GaugedFunction& f,
                                     const GaugedFunction& g);

// Wronskian with respect to x of one or more gauged functions sharing
// (omega, a).  The identically zero result (dependent functions) is the
// zero gauged function.
GaugedFunction wronskian(const std::vector<GaugedFunction>& fs);

}  // namespace isodbt

#endif
