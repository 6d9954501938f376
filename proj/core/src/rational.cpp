#include "isodbt/rational.hpp"

#include <ostream>

#include "isodbt/errors.hpp"

namespace isodbt {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw InvalidArgument("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  if (text.empty()) throw InvalidArgument("Rational: empty string");
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw InvalidArgument("Rational: cannot parse '" + text + "'");
  if (v.get_den() == 0)
    throw InvalidArgument("Rational: zero denominator in '" + text + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::from_mpq(mpq_class v) {
  if (v.get_den() == 0) throw InvalidArgument("Rational: zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

long Rational::to_long() const {
  if (!is_integer())
    throw InvalidArgument("Rational: " + str() + " is not an integer");
  if (!v_.get_num().fits_slong_p())
    throw InvalidArgument("Rational: " + str() + " does not fit in long");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  return is_integer() ? num_str() : num_str() + "/" + den_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (base.is_zero()) throw InvalidArgument("pow: 0 to a negative power");
    return pow(Rational(1) / base, -e);
  }
  Rational acc(1), b = base;
  long k = e;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

}  // namespace isodbt
