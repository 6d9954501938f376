#include "isodbt/admissibility.hpp"

#include "isodbt/errors.hpp"

namespace isodbt {

ChargeRecord charge(const std::vector<ChainStep>& steps) {
  ChargeRecord rec;
  rec.q = 0;
  rec.q_plus = 0;
  for (const auto& s : steps)
    if (s.sign > 0) {
      rec.reordered.push_back(s);
      ++rec.q_plus;
    }
  for (const auto& s : steps)
    if (s.sign < 0) rec.reordered.push_back(s);
  int running = 0;
  for (const auto& s : rec.reordered) {
    running += s.sign;
    rec.prefix_q.push_back(running);
  }
  rec.q = running;
  return rec;
}

namespace {

// Conditions half of the report; sets seeds_exist for the caller.
AdmissibilityReport condition_report(const ChainSpec& chain,
                                     bool& seeds_exist) {
  const Rational& a = chain.params.a;
  const Rational alpha = chain.params.alpha();

  AdmissibilityReport rep;
  rep.conditions_ok = true;
  rep.failing_prefix = -1;

  seeds_exist = true;
  for (const auto& s : chain.steps) {
    SeedCondition c{s, true, false};
    if (s.sign < 0) {
      c.ok = alpha > Rational(s.n);
      c.ambiguous_window = (a > Rational(s.n)) != c.ok;
      if (!c.ok) seeds_exist = false;
    }
    rep.conditions_ok = rep.conditions_ok && c.ok;
    rep.seed_conditions.push_back(c);
  }

  ChargeRecord ch = charge(chain.steps);
  int before = 0;
  for (size_t j = 0; j < ch.reordered.size(); ++j) {
    const ChainStep& s = ch.reordered[j];
    Rational intermediate = a + Rational(before);
    bool ok = s.sign > 0 ? intermediate > Rational(0)
                         : intermediate > Rational(1);
    PrefixCondition pc{static_cast<int>(j + 1), s, ok};
    if (!ok && rep.failing_prefix < 0)
      rep.failing_prefix = pc.length;
    rep.conditions_ok = rep.conditions_ok && ok;
    rep.prefix_conditions.push_back(pc);
    before += s.sign;
  }
  return rep;
}

}  // namespace

AdmissibilityReport admissible(const ChainSpec& chain) {
  bool seeds_exist = false;
  AdmissibilityReport rep = condition_report(chain, seeds_exist);
  if (seeds_exist) {
    Extension ext = extended_potential(chain);
    rep.certificate_roots =
        sturm_count(ext.d, Rational(0), std::nullopt);
  }
  rep.admissible = rep.conditions_ok && rep.certificate_roots &&
                   *rep.certificate_roots == 0;
  return rep;
}

AdmissibilityReport admissible(const ChainSpec& chain, const Extension& ext) {
  bool seeds_exist = false;
  AdmissibilityReport rep = condition_report(chain, seeds_exist);
  if (seeds_exist)
    rep.certificate_roots = sturm_count(ext.d, Rational(0), std::nullopt);
  rep.admissible = rep.conditions_ok && rep.certificate_roots &&
                   *rep.certificate_roots == 0;
  return rep;
}

Rational origin_exponent(const ChainSpec& chain) {
  int q = chain.total_charge();
  int last = chain.steps.back().sign;
  return Rational(last) * (chain.params.alpha() + Rational(q)) -
         Rational(1, 2);
}

Rational origin_exponent_transported(const Extension& ext) {
  return transported_seed(ext).x_power();
}

TwoStepLeading two_step_leading(const ChainSpec& chain) {
  if (chain.size() != 2)
    throw InvalidArgument("two_step_leading: chain must have two steps");
  Extension ext = extended_potential(chain);
  GaugedFunction mu = transported_seed(ext);
  // Canonical form: body numerator and denominator are nonzero at z = 0,
  // so the origin behavior is x^{x_power} times a nonzero constant and the
  // large-z behavior follows the exponential gauge and leading terms.
  Rational at0 =
      mu.body().num().coeff(0) / mu.body().den().coeff(0);
  Rational lead = mu.body().num().leading() / mu.body().den().leading();
  return {mu.x_power(), at0.sign(), mu.exp_coeff().sign() > 0, lead.sign()};
}

IsospectralityCertificate inverse_state_check(const Extension& ext) {
  GaugedFunction mu = transported_seed(ext);
  Rational inv_p = -mu.x_power();
  // x^{inv_p} is square integrable near 0 iff 2 inv_p > -1; the inverse
  // gauge e^{-c z} decides the infinity end (any power beaten by it).
  bool norm0 = Rational(2) * inv_p > Rational(-1);
  bool norm_inf = mu.exp_coeff().sign() > 0;
  return {inv_p, norm0, norm_inf, !(norm0 && norm_inf)};
}

}  // namespace isodbt
