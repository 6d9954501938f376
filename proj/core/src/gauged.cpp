#include "isodbt/gauged.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "isodbt/errors.hpp"

namespace isodbt {

Poly bareiss_det(std::vector<std::vector<Poly>> m) {
  const size_t n = m.size();
  if (n == 0) throw InvalidArgument("bareiss_det: empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("bareiss_det: not square");
  int sign = 1;
  Poly prev(Rational(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t l = k + 1;
      while (l < n && m[l][k].is_zero()) ++l;
      if (l == n) return Poly();  // singular
      std::swap(m[k], m[l]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

GaugedFunction::GaugedFunction(Rational omega, Rational a, Rational x_power,
                               Rational exp_coeff, RationalFn body)
    : omega_(std::move(omega)),
      a_(std::move(a)),
      p_(std::move(x_power)),
      c_(std::move(exp_coeff)),
      body_(std::move(body)) {
  if (omega_.is_zero()) throw InvalidArgument("GaugedFunction: omega = 0");
  canonicalize();
}

void GaugedFunction::canonicalize() {
  if (body_.is_zero()) {
    p_ = 0;
    c_ = 0;
    return;
  }
  // Exchange z factors for x powers: z = (omega/2) x^2 exactly.
  Poly num = body_.num(), den = body_.den();
  const Rational half_omega = omega_ / Rational(2);
  while (num.coeff(0).is_zero()) {
    num = exact_div(num, Poly::variable());
    num = num * half_omega;
    p_ += 2;
  }
  while (den.coeff(0).is_zero()) {
    den = exact_div(den, Poly::variable());
    num = num / half_omega;
    p_ -= 2;
  }
  body_ = RationalFn(std::move(num), std::move(den));
}

GaugedFunction GaugedFunction::operator-() const {
  GaugedFunction r = *this;
  r.body_ = -r.body_;
  return r;
}

GaugedFunction operator+(const GaugedFunction& f, const GaugedFunction& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.omega_ != g.omega_ || f.a_ != g.a_)
    throw InvalidArgument("GaugedFunction: adding different parameter sets");
  if (f.c_ != g.c_)
    throw InvalidArgument("GaugedFunction: adding different exponential gauges");
  Rational halfdiff = (f.p_ - g.p_) / Rational(2);
  if (!halfdiff.is_integer())
    throw InvalidArgument("GaugedFunction: x powers differ by an odd amount");
  long j = halfdiff.to_long();
  // Align on the smaller x power: x^{2j} = (2 z / omega)^j.
  const GaugedFunction& lo = (j >= 0) ? g : f;
  const GaugedFunction& hi = (j >= 0) ? f : g;
  long jj = j >= 0 ? j : -j;
  RationalFn zpow(Poly::monomial(pow(Rational(2) / f.omega_, jj),
                                 static_cast<int>(jj)));
  return GaugedFunction(f.omega_, f.a_, lo.p_, f.c_,
                        hi.body_ * zpow + lo.body_);
}

GaugedFunction operator-(const GaugedFunction& f, const GaugedFunction& g) {
  return f + (-g);
}

GaugedFunction operator*(const GaugedFunction& f, const GaugedFunction& g) {
  if (f.is_zero() || g.is_zero()) return GaugedFunction();
  if (f.omega_ != g.omega_ || f.a_ != g.a_)
    throw InvalidArgument("GaugedFunction: multiplying different parameter sets");
  return GaugedFunction(f.omega_, f.a_, f.p_ + g.p_, f.c_ + g.c_,
                        f.body_ * g.body_);
}

GaugedFunction operator/(const GaugedFunction& f, const GaugedFunction& g) {
  if (g.is_zero()) throw InvalidArgument("GaugedFunction: division by zero");
  if (f.is_zero()) return GaugedFunction();
  if (f.omega_ != g.omega_ || f.a_ != g.a_)
    throw InvalidArgument("GaugedFunction: dividing different parameter sets");
  return GaugedFunction(f.omega_, f.a_, f.p_ - g.p_, f.c_ - g.c_,
                        f.body_ / g.body_);
}

GaugedFunction GaugedFunction::operator*(const Rational& s) const {
  if (s.is_zero() || is_zero()) return GaugedFunction();
  GaugedFunction r = *this;
  r.body_ = r.body_ * RationalFn(s);
  return r;
}

bool operator==(const GaugedFunction& f, const GaugedFunction& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return f.omega_ == g.omega_ && f.a_ == g.a_ && f.p_ == g.p_ &&
         f.c_ == g.c_ && f.body_ == g.body_;
}

GaugedFunction GaugedFunction::shifted_times(const Rational& dp,
                                             const RationalFn& factor) const {
  if (is_zero() || factor.is_zero()) return GaugedFunction();
  return GaugedFunction(omega_, a_, p_ + dp, c_, body_ * factor);
}

GaugedFunction GaugedFunction::derivative() const {
  if (is_zero()) return GaugedFunction();
  // d/dx [x^p e^{cz} B(z)] = x^{p-1} e^{cz} [(p + 2cz) B + 2z B'].
  RationalFn z(Poly::variable());
  RationalFn pref = RationalFn(p_) + RationalFn(Rational(2) * c_) * z;
  RationalFn new_body =
      pref * body_ + RationalFn(Poly::monomial(Rational(2), 1)) * body_.derivative();
  if (new_body.is_zero()) return GaugedFunction();
  return GaugedFunction(omega_, a_, p_ - 1, c_, std::move(new_body));
}

GaugedFunction GaugedFunction::derivative(int order) const {
  GaugedFunction r = *this;
  for (int i = 0; i < order; ++i) r = r.derivative();
  return r;
}

double GaugedFunction::eval_double(double x) const {
  if (is_zero()) return 0.0;
  double z = omega_.to_double() / 2.0 * x * x;
  return std::pow(x, p_.to_double()) * std::exp(c_.to_double() * z) *
         body_.eval_double(z);
}

std::string GaugedFunction::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << "x^(" << p_ << ")";
  if (!c_.is_zero()) os << " exp(" << c_ << " z)";
  os << " * [" << body_ << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaugedFunction& f) {
  return os << f.str();
}

std::optional<Rational> proportional(const GaugedFunction& f,
                                     const GaugedFunction& g) {
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  if (f.omega() != g.omega() || f.x_power() != g.x_power() ||
      f.exp_coeff() != g.exp_coeff())
    return std::nullopt;
  const Poly &nf = f.body().num(), &ng = g.body().num();
  if (nf.degree() != ng.degree() || f.body().den() != g.body().den())
    return std::nullopt;
  Rational lambda = nf.leading() / ng.leading();
  if (nf != ng * lambda) return std::nullopt;
  return lambda;
}

GaugedFunction wronskian(const std::vector<GaugedFunction>& fs) {
  const size_t m = fs.size();
  if (m == 0) throw InvalidArgument("wronskian: no functions");
  for (const auto& f : fs) {
    if (f.is_zero()) return GaugedFunction();
    if (f.omega() != fs[0].omega() || f.a() != fs[0].a())
      throw InvalidArgument("wronskian: functions at different parameters");
  }
  if (m == 1) return fs[0];

  // Column j carries the gauge x^{p_j} e^{c_j z}; row i carries x^{-(i-1)}.
  // Remaining entries are P_{i,j} / D_j^i with the polynomial recurrence
  //   P_{1,j}   = N_j,
  //   P_{i+1,j} = ((p_j - i + 1) + 2 c_j z) P_{i,j} D_j
  //               + 2 z (P'_{i,j} D_j - i P_{i,j} D'_j).
  // Clearing column j by D_j^m leaves a polynomial determinant for Bareiss.
  Rational p_sum(0), c_sum(0);
  std::vector<std::vector<Poly>> q(m, std::vector<Poly>(m));
  Poly den_all(Rational(1));
  const Poly z = Poly::variable();
  for (size_t j = 0; j < m; ++j) {
    const Rational& pj = fs[j].x_power();
    const Rational& cj = fs[j].exp_coeff();
    const Poly& nj = fs[j].body().num();
    const Poly& dj = fs[j].body().den();
    p_sum += pj;
    c_sum += cj;

    std::vector<Poly> col(m);
    col[0] = nj;
    const Poly djp = dj.derivative();
    for (size_t i = 0; i + 1 < m; ++i) {
      Poly pref = Poly(pj - Rational(static_cast<long>(i))) +
                  z * Rational(2) * cj;
      col[i + 1] = pref * col[i] * dj +
                   z * Rational(2) *
                       (col[i].derivative() * dj -
                        col[i] * djp * Rational(static_cast<long>(i + 1)));
    }
    // col[i] currently holds P_{i+1,j}; scale to Q_{i+1,j} = P D^{m-i-1}.
    Poly dpow(Rational(1));
    for (size_t i = m; i-- > 0;) {
      q[i][j] = col[i] * dpow;
      dpow = dpow * dj;
    }
    den_all = den_all * dpow;  // dpow = D_j^m after the loop
  }

  Poly det = bareiss_det(std::move(q));
  if (det.is_zero()) return GaugedFunction();
  Rational shift = -Rational(static_cast<long>(m * (m - 1) / 2));
  return GaugedFunction(fs[0].omega(), fs[0].a(), p_sum + shift, c_sum,
                        RationalFn(std::move(det), std::move(den_all)));
}

}  // namespace isodbt
