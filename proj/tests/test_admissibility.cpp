#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isodbt/admissibility.hpp"
#include "isodbt/errors.hpp"

using namespace isodbt;

namespace {

ChainSpec make(const std::string& text, long omega, const Rational& a) {
  return parse_chain(text, IsotonicParams(Rational(omega), a));
}

ChainSpec make(const std::string& text, long omega, long a) {
  return make(text, omega, Rational(a));
}

}  // namespace

TEST_CASE("charge bookkeeping on the sign-sorted order") {
  ChargeRecord ch = charge({{1, +1}, {2, -1}, {3, +1}});
  CHECK(ch.q == 1);
  CHECK(ch.q_plus == 2);
  REQUIRE(ch.reordered.size() == 3);
  CHECK(ch.reordered[0] == ChainStep{1, +1});
  CHECK(ch.reordered[1] == ChainStep{3, +1});  // '+' block keeps its order
  CHECK(ch.reordered[2] == ChainStep{2, -1});
  REQUIRE(ch.prefix_q.size() == 3);
  CHECK(ch.prefix_q[0] == 1);
  CHECK(ch.prefix_q[1] == 2);
  CHECK(ch.prefix_q[2] == 1);

  ChargeRecord m = charge({{1, -1}, {2, -1}});
  CHECK(m.q == -2);
  CHECK(m.q_plus == 0);
  CHECK(m.prefix_q[0] == -1);
  CHECK(m.prefix_q[1] == -2);
}

TEST_CASE("admissible chains carry a zero root-count certificate") {
  for (const std::string& text : {"1+", "2+", "1+,2-", "2-,1+", "1+,2+",
                                  "1+,2-,3+"}) {
    AdmissibilityReport rep = admissible(make(text, 1, 4));
    CHECK(rep.conditions_ok);
    CHECK(rep.failing_prefix == -1);
    REQUIRE(rep.certificate_roots.has_value());
    CHECK(*rep.certificate_roots == 0);
    CHECK(rep.admissible);
  }
}

TEST_CASE("seed existence conditions gate the '-' family") {
  // alpha = 3/2 at a = 2: n = 2 fails.
  AdmissibilityReport rep = admissible(make("2-", 1, 2));
  REQUIRE(rep.seed_conditions.size() == 1);
  CHECK_FALSE(rep.seed_conditions[0].ok);
  CHECK_FALSE(rep.conditions_ok);
  CHECK_FALSE(rep.admissible);
  CHECK_FALSE(rep.certificate_roots.has_value());  // seed does not exist

  AdmissibilityReport ok = admissible(make("1-", 1, 2));
  CHECK(ok.seed_conditions[0].ok);
  CHECK(ok.admissible);
}

TEST_CASE("ambiguous window between the two threshold readings is flagged") {
  // n < a <= n + 1/2 separates a > n from alpha > n; the alpha reading
  // rejects and the flag records the disagreement.
  ChainSpec c = make("2-", 1, Rational(23, 10));
  AdmissibilityReport rep = admissible(c);
  REQUIRE(rep.seed_conditions.size() == 1);
  CHECK_FALSE(rep.seed_conditions[0].ok);
  CHECK(rep.seed_conditions[0].ambiguous_window);
  // Outside the window the flag stays down.
  AdmissibilityReport out = admissible(make("2-", 1, 4));
  CHECK(out.seed_conditions[0].ok);
  CHECK_FALSE(out.seed_conditions[0].ambiguous_window);
  AdmissibilityReport deep = admissible(make("3-", 1, 2));
  CHECK_FALSE(deep.seed_conditions[0].ok);
  CHECK_FALSE(deep.seed_conditions[0].ambiguous_window);
}

TEST_CASE("prefix charge thresholds with the exclusive reading") {
  // "1-" at a = 2: the first reordered step is '-', needs a + 0 > 1; a = 2
  // passes strictly.
  AdmissibilityReport rep = admissible(make("1-", 1, 2));
  REQUIRE(rep.prefix_conditions.size() == 1);
  CHECK(rep.prefix_conditions[0].ok);
  CHECK(rep.admissible);

  // Two '-' steps at a = 2 fail at the second prefix: a - 1 > 1 is false.
  AdmissibilityReport two = admissible(make("1-,2-", 1, 2));
  CHECK_FALSE(two.conditions_ok);
  CHECK(two.failing_prefix == 2);
  CHECK_FALSE(two.admissible);

  // Same steps at a = 3 pass every prefix.
  AdmissibilityReport three = admissible(make("1-,2-", 1, 3));
  CHECK(three.conditions_ok);
  CHECK(three.admissible);
}

TEST_CASE("origin exponent closed form equals the transported reading") {
  for (const std::string& text : {"1+", "1-", "1+,2-", "2-,1+", "1+,2+",
                                  "1-,2-", "1+,2-,3+"}) {
    for (long a : {3, 4}) {
      ChainSpec c = make(text, 1, a);
      AdmissibilityReport rep = admissible(c);
      if (!rep.admissible) continue;
      Extension ext = extended_potential(c);
      CHECK(origin_exponent(c) == origin_exponent_transported(ext));
    }
  }
  // Closed form: sign_m (alpha + q) - 1/2 with the original-order last sign.
  ChainSpec c = make("1+,2-", 1, 4);  // q = 0, last sign '-', alpha = 7/2
  CHECK(origin_exponent(c) == Rational(-4));
  ChainSpec cp = make("2-,1+", 1, 4);  // last sign '+'
  CHECK(origin_exponent(cp) == Rational(3));
}

TEST_CASE("two-step leading behavior against the expanded table") {
  // Fixed frame omega = 1, a = 4, alpha = 7/2; the four sign patterns.
  auto lead = [&](const std::string& text) {
    return two_step_leading(make(text, 1, 4));
  };

  // Both '+': exponent alpha + 3/2 = 5, origin sign follows n2 - n1,
  // divergence at infinity with the same sign.
  TwoStepLeading pp12 = lead("1+,2+");
  CHECK(pp12.exponent == Rational(5));
  CHECK(pp12.origin_sign == +1);
  CHECK(pp12.diverges_at_infinity);
  CHECK(pp12.infinity_sign == +1);
  TwoStepLeading pp21 = lead("2+,1+");
  CHECK(pp21.exponent == Rational(5));
  CHECK(pp21.origin_sign == -1);
  CHECK(pp21.diverges_at_infinity);
  CHECK(pp21.infinity_sign == -1);

  // Both '-': exponent 3/2 - alpha = -2, origin sign (-1)^{n2} sign(n2-n1),
  // decay at infinity with the same sign.
  TwoStepLeading mm12 = lead("1-,2-");
  CHECK(mm12.exponent == Rational(-2));
  CHECK(mm12.origin_sign == +1);  // (-1)^2 * (+1)
  CHECK_FALSE(mm12.diverges_at_infinity);
  CHECK(mm12.infinity_sign == +1);
  TwoStepLeading mm21 = lead("2-,1-");
  CHECK(mm21.exponent == Rational(-2));
  CHECK(mm21.origin_sign == +1);  // (-1)^1 * sign(1-2)
  CHECK_FALSE(mm21.diverges_at_infinity);
  CHECK(mm21.infinity_sign == +1);
  TwoStepLeading mm13 = lead("1-,3-");
  CHECK(mm13.origin_sign == -1);  // (-1)^3 * (+1)
  CHECK(mm13.infinity_sign == -1);

  // '-' then '+': exponent alpha - 1/2 = 3, positive on both ends.
  for (const std::string& text : {"1-,2+", "2-,1+", "3-,2+"}) {
    TwoStepLeading mp = lead(text);
    CHECK(mp.exponent == Rational(3));
    CHECK(mp.origin_sign == +1);
    CHECK(mp.diverges_at_infinity);
    CHECK(mp.infinity_sign == +1);
  }

  // '+' then '-': exponent -alpha - 1/2 = -4, origin sign (-1)^{n2+1},
  // decay at infinity with the same sign.
  TwoStepLeading pm12 = lead("1+,2-");
  CHECK(pm12.exponent == Rational(-4));
  CHECK(pm12.origin_sign == -1);  // (-1)^3
  CHECK_FALSE(pm12.diverges_at_infinity);
  CHECK(pm12.infinity_sign == -1);
  TwoStepLeading pm21 = lead("2+,1-");
  CHECK(pm21.exponent == Rational(-4));
  CHECK(pm21.origin_sign == +1);  // (-1)^2
  CHECK_FALSE(pm21.diverges_at_infinity);
  CHECK(pm21.infinity_sign == +1);
  TwoStepLeading pm13 = lead("1+,3-");
  CHECK(pm13.origin_sign == +1);  // (-1)^4
  CHECK(pm13.infinity_sign == +1);

  CHECK_THROWS_AS(two_step_leading(make("1+", 1, 4)), InvalidArgument);
  CHECK_THROWS_AS(two_step_leading(make("1+,2-,3+", 1, 4)), InvalidArgument);
}

TEST_CASE("reciprocal of the transported seed is never square integrable") {
  for (const std::string& text : {"1+", "1-", "1+,2-", "1+,2+", "1-,2-",
                                  "1+,2-,3+"}) {
    ChainSpec c = make(text, 1, 4);
    if (!admissible(c).admissible) continue;
    Extension ext = extended_potential(c);
    IsospectralityCertificate cert = inverse_state_check(ext);
    CHECK(cert.strict);
    CHECK((!cert.normalizable_at_origin || !cert.normalizable_at_infinity));
  }
  // The failing end follows the gauge: a growing transported seed leaves
  // its reciprocal integrable at infinity but too singular at the origin.
  Extension plus = extended_potential(make("1+,2+", 1, 4));
  IsospectralityCertificate cp = inverse_state_check(plus);
  CHECK(cp.inverse_origin_exponent == Rational(-5));
  CHECK_FALSE(cp.normalizable_at_origin);
  CHECK(cp.normalizable_at_infinity);
}
