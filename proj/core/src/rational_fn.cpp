#include "isodbt/rational_fn.hpp"

#include <ostream>
#include <sstream>

#include "isodbt/errors.hpp"

namespace isodbt {

RationalFn::RationalFn(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgument("RationalFn: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Rational lead = den_.leading();
  if (lead != Rational(1)) {
    num_ = num_ / lead;
    den_ = den_ / lead;
  }
}

RationalFn RationalFn::from_reduced(Poly num, Poly den) {
  RationalFn r;
  if (num.is_zero()) return r;
  Rational lead = den.leading();
  if (lead != Rational(1)) {
    num = num / lead;
    den = den / lead;
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly g0 = poly_gcd(a.den_, b.den_);
  if (g0.degree() == 0) {
    // Coprime denominators: the sum is already in lowest terms.
    Poly num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return RationalFn();
    return RationalFn::from_reduced(std::move(num), a.den_ * b.den_);
  }
  // Over the lcm; any common factor of num and lcm divides g0.
  Poly aq = exact_div(a.den_, g0);
  Poly bq = exact_div(b.den_, g0);
  Poly num = a.num_ * bq + b.num_ * aq;
  if (num.is_zero()) return RationalFn();
  Poly den = a.den_ * bq;
  Poly g1 = poly_gcd(num, g0);
  if (g1.degree() > 0) {
    num = exact_div(num, g1);
    den = exact_div(den, g1);
  }
  return RationalFn::from_reduced(std::move(num), std::move(den));
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return a + (-b);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return RationalFn();
  // Cross-cancel first; the remaining parts are pairwise coprime.
  Poly g1 = poly_gcd(a.num_, b.den_);
  Poly g2 = poly_gcd(b.num_, a.den_);
  const bool c1 = g1.degree() > 0, c2 = g2.degree() > 0;
  Poly num = (c1 ? exact_div(a.num_, g1) : a.num_) *
             (c2 ? exact_div(b.num_, g2) : b.num_);
  Poly den = (c2 ? exact_div(a.den_, g2) : a.den_) *
             (c1 ? exact_div(b.den_, g1) : b.den_);
  return RationalFn::from_reduced(std::move(num), std::move(den));
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw InvalidArgument("RationalFn: division by zero");
  return a * RationalFn::from_reduced(b.den_, b.num_);
}

RationalFn RationalFn::operator*(const Rational& s) const {
  if (s.is_zero() || is_zero()) return RationalFn();
  RationalFn r = *this;
  r.num_ = r.num_ * s;
  return r;
}

RationalFn RationalFn::operator/(const Rational& s) const {
  if (s.is_zero()) throw InvalidArgument("RationalFn: division by zero scalar");
  return *this * (Rational(1) / s);
}

RationalFn RationalFn::derivative() const {
  if (den_.degree() == 0) {
    Poly dn = num_.derivative();  // den is the constant 1
    if (dn.is_zero()) return RationalFn();
    return from_reduced(std::move(dn), den_);
  }
  Poly dd = den_.derivative();
  Poly num = num_.derivative() * den_ - num_ * dd;
  // gcd(num, den^2) equals gcd(den, den') exactly: at a k-fold root of den
  // the numerator vanishes to order k - 1.
  Poly g = poly_gcd(den_, dd);
  Poly den = den_ * den_;
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  return from_reduced(std::move(num), std::move(den));
}

Rational RationalFn::eval(const Rational& z) const {
  Rational d = den_.eval(z);
  if (d.is_zero())
    throw InvalidArgument("RationalFn::eval: pole at z = " + z.str());
  return num_.eval(z) / d;
}

double RationalFn::eval_double(double z) const {
  return num_.eval_double(z) / den_.eval_double(z);
}

std::string RationalFn::str(const std::string& var) const {
  if (is_poly()) return num_.str(var);
  std::ostringstream os;
  os << "(" << num_.str(var) << ") / (" << den_.str(var) << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalFn& f) {
  return os << f.str();
}

}  // namespace isodbt
