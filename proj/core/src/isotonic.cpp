#include "isodbt/isotonic.hpp"

#include "isodbt/errors.hpp"
#include "isodbt/laguerre.hpp"

namespace isodbt {

IsotonicParams::IsotonicParams(Rational omega_in, Rational a_in)
    : omega(std::move(omega_in)), a(std::move(a_in)) {
  if (omega.sign() <= 0) throw InvalidArgument("IsotonicParams: omega <= 0");
  if (a < Rational(1)) throw InvalidArgument("IsotonicParams: a < 1");
}

double PotentialFn::eval_double(double x) const {
  double z = omega.to_double() / 2.0 * x * x;
  return u.eval_double(z) / (x * x);
}

PotentialFn PotentialFn::plus_energy(const Rational& e) const {
  RationalFn zterm(Poly::monomial(Rational(2) * e / omega, 1));
  return {omega, u + zterm};
}

PotentialFn potential(const IsotonicParams& params) {
  const Rational& a = params.a;
  Poly u({a * (a - Rational(1)), -(Rational(2) * a + Rational(1)), Rational(1)});
  return {params.omega, RationalFn(std::move(u))};
}

Rational physical_energy(int k, const IsotonicParams& params) {
  return Rational(2 * k) * params.omega;
}

GaugedFunction bound_state(int k, const IsotonicParams& params) {
  if (k < 0) throw InvalidArgument("bound_state: negative level");
  return GaugedFunction(params.omega, params.a, params.a, Rational(-1, 2),
                        RationalFn(laguerre_poly(k, params.alpha())));
}

GaugedFunction schrodinger_residual(const GaugedFunction& psi,
                                    const PotentialFn& v, const Rational& e) {
  return psi.derivative(2) - psi.shifted_times(Rational(-2), v.u) + psi * e;
}

RSFunction rs_function(int k, const IsotonicParams& params) {
  return rs_of(bound_state(k, params), physical_energy(k, params));
}

RSFunction rs_of(const GaugedFunction& f, const Rational& energy) {
  if (f.is_zero()) throw InvalidArgument("rs_of: zero function");
  RationalFn z(Poly::variable());
  RationalFn r = RationalFn(-f.x_power()) -
                 RationalFn(Rational(2) * f.exp_coeff()) * z -
                 RationalFn(Poly::monomial(Rational(2), 1)) *
                     (f.body().derivative() / f.body());
  return {f.omega(), std::move(r), energy};
}

RationalFn rs_residual(const RSFunction& w, const PotentialFn& v,
                       const Rational& e) {
  const RationalFn& r = w.r;
  RationalFn two_z(Poly::monomial(Rational(2), 1));
  RationalFn ez(Poly::monomial(Rational(2) * e / w.omega, 1));
  return r - two_z * r.derivative() + r * r - v.u + ez;
}

GammaImage gamma_apply(GammaKind kind, const IsotonicParams& params, int n) {
  if (n < 0) throw InvalidArgument("gamma_apply: negative level");
  const Rational& w = params.omega;
  const Rational& a = params.a;
  Rational half(1, 2);
  switch (kind) {
    case GammaKind::kPlus:
      return {-w, a, Rational(-2) * w * (a + Rational(n) + half),
              w * (Rational(2) * a + Rational(1))};
    case GammaKind::kMinus:
      return {w, Rational(1) - a, Rational(-2) * w * (a - Rational(n) - half),
              w * (Rational(2) * a - Rational(1))};
    case GammaKind::kThree:
      return {-w, Rational(1) - a, Rational(-2) * w * Rational(n + 1),
              Rational(2) * w};
  }
  throw InvalidArgument("gamma_apply: unknown kind");
}

SeedState seed_state(int n, int sign, const IsotonicParams& params) {
  if (n < 0) throw InvalidArgument("seed_state: negative index");
  if (sign != 1 && sign != -1)
    throw InvalidArgument("seed_state: sign must be +1 or -1");
  const Rational& a = params.a;
  Rational alpha = params.alpha();
  Rational energy =
      Rational(-2) * params.omega *
      (a + Rational(sign) * (Rational(n) + Rational(1, 2)));
  if (sign == 1) {
    GaugedFunction fn(params.omega, a, a, Rational(1, 2),
                      RationalFn(laguerre_poly(n, alpha, true)));
    return {n, sign, std::move(energy), std::move(fn)};
  }
  if (alpha <= Rational(n))
    throw ConstraintViolation("seed_state: sign -1 needs alpha > n, got alpha = " +
                              alpha.str() + ", n = " + std::to_string(n));
  GaugedFunction fn(params.omega, a, Rational(1) - a, Rational(-1, 2),
                    RationalFn(laguerre_poly(n, -alpha, false)));
  return {n, sign, std::move(energy), std::move(fn)};
}

RSFunction seed_rs(int n, int sign, const IsotonicParams& params) {
  SeedState s = seed_state(n, sign, params);  // validates inputs
  Rational alpha = params.alpha();
  Rational salpha = Rational(sign) * alpha;
  bool neg = sign == 1;  // argument -sign z
  RationalFn z(Poly::variable());
  RationalFn head = RationalFn(-Rational(1, 2)) -
                    (z + RationalFn(alpha)) * Rational(sign);
  RationalFn r = head;
  if (n >= 1) {
    RationalFn ratio(laguerre_poly(n - 1, salpha + Rational(1), neg),
                     laguerre_poly(n, salpha, neg));
    r = r - z * ratio * Rational(2 * sign);
  }
  return {params.omega, std::move(r), std::move(s.energy)};
}

}  // namespace isodbt
