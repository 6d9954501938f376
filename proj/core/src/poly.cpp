#include "isodbt/poly.hpp"

#include <ostream>
#include <sstream>

#include "isodbt/errors.hpp"

namespace isodbt {

Poly::Poly(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Rational c, int k) {
  if (k < 0) throw InvalidArgument("Poly::monomial: negative exponent");
  if (c.is_zero()) return Poly();
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v.back() = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

Rational Poly::leading() const {
  if (c_.empty()) return Rational(0);
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
  if (s.is_zero()) return Poly();
  Poly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Poly Poly::operator/(const Rational& s) const {
  if (s.is_zero()) throw InvalidArgument("Poly: division by zero scalar");
  Poly r = *this;
  for (auto& x : r.c_) x /= s;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> v(c_.size() - 1, Rational(0));
  for (size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(v));
}

Rational Poly::eval(const Rational& z) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

double Poly::eval_double(double z) const {
  double acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i].to_double();
  return acc;
}

Poly Poly::negate_arg() const {
  Poly r = *this;
  for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

Poly Poly::shift_arg(const Rational& s) const {
  // Horner in (z + s).
  Poly zs = Poly::variable() + Poly(s);
  Poly acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * zs + Poly(c_[i]);
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational ck = coeff(k);
    if (ck.is_zero()) continue;
    if (first) {
      if (ck.sign() < 0) os << "-";
      first = false;
    } else {
      os << (ck.sign() < 0 ? " - " : " + ");
    }
    Rational mag = ck.abs();
    if (k == 0 || mag != Rational(1)) {
      os << mag.str();
      if (k > 0) os << "*";
    }
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.str();
}

PolyDivmod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("divmod: zero divisor");
  Poly r = a;
  Poly q;
  const int db = b.degree();
  const Rational lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    Rational c = r.leading() / lb;
    int k = r.degree() - db;
    Poly t = Poly::monomial(c, k);
    q = q + t;
    r = r - t * b;
  }
  return {std::move(q), std::move(r)};
}

Poly exact_div(const Poly& a, const Poly& b) {
  PolyDivmod d = divmod(a, b);
  if (!d.remainder.is_zero())
    throw InternalCheckFailure("exact_div: nonzero remainder");
  return d.quotient;
}

namespace {

// Integer-primitive coefficient vector of p, low to high.
std::vector<mpz_class> primitive_z(const Poly& p) {
  mpz_class den_lcm(1);
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.raw().get_den().get_mpz_t());
  }
  std::vector<mpz_class> v;
  v.reserve(p.coeffs().size());
  mpz_class g(0);
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) {
      v.emplace_back(0);
      continue;
    }
    v.push_back(c.raw().get_num() * mpz_class(den_lcm / c.raw().get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

void strip_content_z(std::vector<mpz_class>& v) {
  mpz_class g(0);
  for (const auto& x : v)
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) x /= g;
}

// In-place pseudo-remainder of f by g: scales f by lc(g) per elimination
// step, so only the gcd up to content survives, which is all we need.
void pseudo_rem_z(std::vector<mpz_class>& f, const std::vector<mpz_class>& g) {
  const mpz_class& lg = g.back();
  while (f.size() >= g.size()) {
    mpz_class c = f.back();
    size_t off = f.size() - g.size();
    for (auto& x : f) x *= lg;
    for (size_t i = 0; i < g.size(); ++i) f[off + i] -= c * g[i];
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.empty()) return;
  }
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b / b.leading();
  if (b.is_zero()) return a / a.leading();
  // Primitive PRS over the integers; content never affects the monic result.
  std::vector<mpz_class> f = primitive_z(a);
  std::vector<mpz_class> g = primitive_z(b);
  if (f.size() < g.size()) std::swap(f, g);
  while (!g.empty()) {
    pseudo_rem_z(f, g);
    if (!f.empty()) strip_content_z(f);
    std::swap(f, g);
  }
  std::vector<Rational> coef;
  coef.reserve(f.size());
  for (auto& x : f) coef.push_back(Rational::from_mpq(mpq_class(x)));
  Poly r(std::move(coef));
  return r / r.leading();
}

Rational content(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("content: zero polynomial");
  mpz_class den_lcm(1), num_gcd(0);
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(),
            c.raw().get_den().get_mpz_t());
    den_lcm = l;
  }
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    // numerator of c * den_lcm, an integer by construction
    mpz_class scaled = c.raw().get_num() * (den_lcm / c.raw().get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    num_gcd = g;
  }
  return Rational::from_mpq(mpq_class(num_gcd, den_lcm));
}

Poly primitive_normalized(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("primitive_normalized: zero polynomial");
  Poly r = p / content(p);
  if (r.leading().sign() < 0) r = -r;
  return r;
}

namespace {

// Number of sign changes in the sequence, zeros skipped.
int variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_count(const Poly& p_in, const Rational& lo,
                const std::optional<Rational>& hi) {
  if (p_in.is_zero()) throw InvalidArgument("sturm_count: zero polynomial");
  if (hi && *hi <= lo) return 0;

  // Shed roots sitting exactly on a finite endpoint; they are not counted.
  Poly p = p_in;
  auto strip = [&p](const Rational& pt) {
    Poly lin = Poly::variable() - Poly(pt);
    while (!p.is_zero() && p.degree() >= 1 && p.eval(pt).is_zero())
      p = exact_div(p, lin);
  };
  strip(lo);
  if (hi) strip(*hi);
  if (p.degree() <= 0) return 0;

  std::vector<Poly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero()) {
    Poly r = -divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    r = r / content(r);  // positive scale, sign pattern preserved
    chain.push_back(std::move(r));
  }

  std::vector<int> at_lo, at_hi;
  for (const Poly& s : chain) {
    at_lo.push_back(s.eval(lo).sign());
    at_hi.push_back(hi ? s.eval(*hi).sign() : s.leading().sign());
  }
  return variations(at_lo) - variations(at_hi);
}

}  // namespace isodbt
