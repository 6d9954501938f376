#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isodbt/errors.hpp"
#include "isodbt/gauged.hpp"
#include "isodbt/poly.hpp"
#include "isodbt/rational.hpp"
#include "isodbt/rational_fn.hpp"

using namespace isodbt;

namespace {

Poly P(std::vector<long> cs) {
  std::vector<Rational> rs;
  for (long c : cs) rs.emplace_back(c);
  return Poly(std::move(rs));
}

}  // namespace

TEST_CASE("rational normalization and arithmetic") {
  Rational r(6, -4);
  CHECK(r == Rational(-3, 2));
  CHECK(r.str() == "-3/2");
  CHECK(r.num_str() == "-3");
  CHECK(r.den_str() == "2");
  CHECK(r.sign() == -1);
  CHECK(r.abs() == Rational(3, 2));
  CHECK_FALSE(r.is_integer());
  CHECK(Rational(10, 5).is_integer());
  CHECK(Rational(10, 5).to_long() == 2);
  CHECK(r + Rational(1, 2) == Rational(-1));
  CHECK(r * Rational(-2, 3) == Rational(1));
  CHECK(Rational(1, 3) / Rational(2, 9) == Rational(3, 2));
  CHECK(-r == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(0).is_zero());
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == Rational(1));
  CHECK(Rational::from_string("-22/7") == Rational(-22, 7));
  CHECK(Rational::from_string("13") == Rational(13));
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
}

TEST_CASE("rational error paths") {
  CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), InvalidArgument);
  CHECK_THROWS_AS(Rational::from_string("seven"), InvalidArgument);
  CHECK_THROWS_AS(Rational(1, 2).to_long(), InvalidArgument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgument);
  CHECK_THROWS_AS(pow(Rational(0), -1), InvalidArgument);
}

TEST_CASE("big rationals survive exact arithmetic") {
  // 100! / 99! = 100 without overflow.
  Rational f(1);
  for (long k = 1; k <= 100; ++k) f *= Rational(k);
  Rational g(1);
  for (long k = 1; k <= 99; ++k) g *= Rational(k);
  CHECK(f / g == Rational(100));
  CHECK(pow(Rational(10), 40) / pow(Rational(10), 39) == Rational(10));
}

TEST_CASE("poly basics, trim, and evaluation") {
  Poly z = Poly::variable();
  Poly p = z * z - z * Rational(5) + Poly(Rational(6));  // z^2 - 5z + 6
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Rational(6));
  CHECK(p.coeff(1) == Rational(-5));
  CHECK(p.coeff(5) == Rational(0));
  CHECK(p.leading() == Rational(1));
  CHECK(p.eval(Rational(2)).is_zero());
  CHECK(p.eval(Rational(3)).is_zero());
  CHECK(p.eval(Rational(0)) == Rational(6));
  CHECK(p.eval_double(10.0) == doctest::Approx(56.0));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p.derivative() == P({-5, 2}));
  CHECK(p.negate_arg() == P({6, 5, 1}));
  CHECK(p.shift_arg(Rational(2)) == P({0, -1, 1}));  // roots move to 0, 1
  CHECK(Poly::monomial(Rational(3), 4) == P({0, 0, 0, 0, 3}));
  CHECK(P({0, 0, 0}).is_zero());  // trailing zeros trimmed
}

TEST_CASE("poly division, gcd, content") {
  Poly a = P({6, -5, 1});      // (z-2)(z-3)
  Poly b = P({-2, 1});         // z-2
  auto dm = divmod(a, b);
  CHECK(dm.quotient == P({-3, 1}));
  CHECK(dm.remainder.is_zero());
  CHECK(exact_div(a, b) == P({-3, 1}));
  CHECK_THROWS_AS(exact_div(a, P({-1, 1})), InternalCheckFailure);
  auto dm2 = divmod(P({1, 0, 0, 1}), P({1, 1}));  // z^3+1 = (z+1)(z^2-z+1)
  CHECK(dm2.quotient == P({1, -1, 1}));
  CHECK(dm2.remainder.is_zero());

  Poly g = poly_gcd(P({6, -5, 1}) * P({7, 2}), P({-2, 1}) * P({1, 1}));
  CHECK(g == P({-2, 1}));  // monic gcd z-2
  CHECK(poly_gcd(P({2}), P({0})) == P({1}));

  CHECK(content(P({6, -4, 2})) == Rational(2));
  Poly frac({Rational(3, 4), Rational(-9, 8)});
  CHECK(content(frac) == Rational(3, 8));
  CHECK(primitive_normalized(P({-6, 4, -2})) == P({3, -2, 1}));
  CHECK(primitive_normalized(frac) == P({-2, 3}));
}

TEST_CASE("sturm counting on open intervals") {
  // (z-1)(z-2)(z-4): three positive roots.
  Poly p = P({-1, 1}) * P({-2, 1}) * P({-4, 1});
  CHECK(sturm_count(p, Rational(0), std::nullopt) == 3);
  CHECK(sturm_count(p, Rational(0), Rational(3)) == 2);
  CHECK(sturm_count(p, Rational(3), std::nullopt) == 1);
  // Endpoint roots are excluded: the interval is open.
  CHECK(sturm_count(p, Rational(1), Rational(4)) == 1);
  CHECK(sturm_count(p, Rational(1), Rational(2)) == 0);
  // Non-squarefree input.
  Poly sq = P({-1, 1}) * P({-1, 1}) * P({-3, 1});
  CHECK(sturm_count(sq, Rational(0), std::nullopt) == 2);
  // Negative roots are invisible from 0.
  CHECK(sturm_count(P({1, 1}) * P({2, 1}), Rational(0), std::nullopt) == 0);
  // No real roots at all.
  CHECK(sturm_count(P({1, 0, 1}), Rational(0), std::nullopt) == 0);
}

TEST_CASE("rational functions reduce to lowest terms with monic denominator") {
  Poly z = Poly::variable();
  RationalFn f(P({-4, 0, 1}), P({-2, 1}));  // (z^2-4)/(z-2) = z+2
  CHECK(f.is_poly());
  CHECK(f.num() == P({2, 1}));
  CHECK(f.den() == P({1}));
  RationalFn g(P({2, 2}), P({4, 2}));  // 2(z+1)/(2(z+2)) -> (z+1)/(z+2)
  CHECK(g.num() == P({1, 1}));
  CHECK(g.den() == P({2, 1}));
  CHECK(g.eval(Rational(0)) == Rational(1, 2));
  CHECK_THROWS_AS(g.eval(Rational(-2)), InvalidArgument);
  CHECK(f + RationalFn(Poly(Rational(1))) == RationalFn(P({3, 1})));
  CHECK((g - g).is_zero());
  CHECK(g * RationalFn(P({2, 1})) == RationalFn(P({1, 1})));

  // Quotient rule: d/dz[(z+1)/(z+2)] = 1/(z+2)^2.
  CHECK(g.derivative() == RationalFn(P({1}), P({4, 4, 1})));
}

TEST_CASE("bareiss determinant stays fraction free and survives pivoting") {
  Poly z = Poly::variable();
  std::vector<std::vector<Poly>> m = {
      {P({1}), z, z * z},
      {P({0}), P({1}), z},   // leading zero forces a swap-free elimination
      {z, P({0}), P({1})},
  };
  Poly det = bareiss_det(m);
  // Cross-check against scalar cofactor expansion at sample points.
  for (long v : {0L, 1L, 2L, 5L}) {
    Rational zz(v);
    Rational a = Rational(1), b = zz, c = zz * zz;
    Rational d = Rational(0), e = Rational(1), f = zz;
    Rational g = zz, h = Rational(0), i = Rational(1);
    Rational byhand = a * (e * i - f * h) - b * (d * i - f * g) +
                      c * (d * h - e * g);
    CHECK(det.eval(zz) == byhand);
  }
  // Singular matrix: zero polynomial, not an error.
  std::vector<std::vector<Poly>> sing = {{z, z}, {z, z}};
  CHECK(bareiss_det(sing).is_zero());
}

TEST_CASE("gauged functions canonicalize the x-z split") {
  // At omega = 2, z = x^2: a body factor z^2 moves into x_power.
  const Rational om(2), aa(2);
  GaugedFunction f(om, aa, Rational(1), Rational(0),
                   RationalFn(Poly::variable() * Poly::variable()));
  CHECK(f.x_power() == Rational(5));
  CHECK(f.body().num().coeff(0) != Rational(0));
  // Value preserved: x * z^2 at x = 3, z = 9 is 243.
  CHECK(f.eval_double(3.0) == doctest::Approx(243.0));

  // Denominator z factors move the other way.
  GaugedFunction g(om, aa, Rational(0), Rational(0),
                   RationalFn(Poly(Rational(1)), Poly::variable()));
  CHECK(g.x_power() == Rational(-2));
  CHECK(g.eval_double(2.0) == doctest::Approx(1.0 / 4.0));
}

TEST_CASE("gauged arithmetic aligns powers and checks gauges") {
  const Rational om(1), aa(2);
  auto mono = [&](Rational p, Rational c, Poly body) {
    return GaugedFunction(om, aa, p, c, RationalFn(body));
  };
  GaugedFunction x1 = mono(Rational(1), Rational(0), Poly(Rational(1)));
  GaugedFunction x3 = mono(Rational(3), Rational(0), Poly(Rational(1)));
  GaugedFunction s = x1 + x3;  // x + x^3 = x (1 + 2z) at omega 1
  CHECK(s.x_power() == Rational(1));
  CHECK(s.eval_double(2.0) == doctest::Approx(10.0));
  CHECK_THROWS_AS(x1 + mono(Rational(2), Rational(0), Poly(Rational(1))),
                  InvalidArgument);  // odd power gap has no z form
  GaugedFunction e1 = mono(Rational(0), Rational(1, 2), Poly(Rational(1)));
  CHECK_THROWS_AS(x1 + e1, InvalidArgument);  // different exponential gauge
  CHECK((x1 * x3).x_power() == Rational(4));
  CHECK((x3 / x1).x_power() == Rational(2));
  CHECK((x1 - x1).is_zero());

  // d/dx of x^2 e^{z} (z = x^2/2): (2x + x^3) e^z = x^2 e^z (2/x + x).
  GaugedFunction h = mono(Rational(2), Rational(1), Poly(Rational(1)));
  GaugedFunction hd = h.derivative();
  CHECK(hd.eval_double(1.5) ==
        doctest::Approx((2 * 1.5 + std::pow(1.5, 3)) *
                        std::exp(1.5 * 1.5 / 2)));
  // h'' = (2 + 5 x^2 + x^4) e^z for h = x^2 e^z, z = x^2/2.
  CHECK(h.derivative(2).eval_double(0.7) ==
        doctest::Approx((2 + 5 * 0.49 + 0.49 * 0.49) * std::exp(0.49 / 2))
            .epsilon(1e-9));
}

TEST_CASE("proportional detects exact scalar multiples only") {
  const Rational om(1), aa(2);
  GaugedFunction f(om, aa, Rational(1), Rational(1, 2),
                   RationalFn(P({1, 2})));
  GaugedFunction g = f * Rational(-7, 3);
  auto lam = proportional(g, f);
  REQUIRE(lam.has_value());
  CHECK(*lam == Rational(-7, 3));
  GaugedFunction h(om, aa, Rational(1), Rational(1, 2),
                   RationalFn(P({1, 3})));
  CHECK_FALSE(proportional(f, h).has_value());
  CHECK_FALSE(proportional(f, f - f).has_value());
}

TEST_CASE("wronskians of elementary gauged functions") {
  const Rational om(1), aa(2);
  auto mono = [&](Rational p, Rational c) {
    return GaugedFunction(om, aa, p, c, RationalFn(Poly(Rational(1))));
  };
  // W(x, x^2) = x^2.
  GaugedFunction w1 = wronskian(std::vector<GaugedFunction>{mono(Rational(1), Rational(0)),
                                 mono(Rational(2), Rational(0))});
  CHECK(w1.x_power() == Rational(2));
  CHECK(w1.exp_coeff() == Rational(0));
  CHECK(w1.eval_double(1.7) == doctest::Approx(1.7 * 1.7));

  // W(e^{z/2}, e^{-z/2}) = -x e^0 at omega 1 (z' = x).
  GaugedFunction w2 = wronskian(std::vector<GaugedFunction>{mono(Rational(0), Rational(1, 2)),
                                 mono(Rational(0), Rational(-1, 2))});
  CHECK(w2.exp_coeff() == Rational(0));
  CHECK(w2.eval_double(2.5) == doctest::Approx(-2.5));

  // Dependent set: zero Wronskian, flagged not thrown.
  GaugedFunction z = wronskian(std::vector<GaugedFunction>{mono(Rational(1), Rational(0)),
                                mono(Rational(1), Rational(0)) * Rational(2)});
  CHECK(z.is_zero());

  // Order 3: W(1, x, x^2) = 2.
  GaugedFunction w3 = wronskian(std::vector<GaugedFunction>{mono(Rational(0), Rational(0)),
                                 mono(Rational(1), Rational(0)),
                                 mono(Rational(2), Rational(0))});
  CHECK(w3.eval_double(3.3) == doctest::Approx(2.0));
}
