#include "isodbt/shape_invariance.hpp"

#include "isodbt/admissibility.hpp"
#include "isodbt/errors.hpp"

namespace isodbt {

namespace {

// 2 z r' - r; adding twice this to u realizes V -> V + 2 (r/x)'.
RationalFn scaled_derivative(const RationalFn& r) {
  RationalFn two_z(Poly::monomial(Rational(2), 1));
  return two_z * r.derivative() - r;
}

PotentialFn superpartner_of(const Extension& ext) {
  RSFunction w0 = rs_of(eigenstate_wronskian(ext, 0).fn, Rational(0));
  return {ext.chain.params.omega,
          ext.u + scaled_derivative(w0.r) * Rational(2)};
}

// RS function of the ground state of the chain shortened by its last step;
// for a one-step chain that is the base oscillator's ground state.
RSFunction prefix_ground_rs(const ChainSpec& chain) {
  if (chain.size() == 1) return rs_function(0, chain.params);
  Extension pre = extended_potential(chain.prefix());
  return rs_of(eigenstate_wronskian(pre, 0).fn, Rational(0));
}

}  // namespace

PotentialFn superpartner(const ChainSpec& chain) {
  AdmissibilityReport rep = admissible(chain);
  if (!rep.admissible)
    throw ConstraintViolation("superpartner: chain " + chain.str() +
                              " is not admissible");
  return superpartner_of(extended_potential(chain));
}

namespace {

RationalFn delta_of(const ChainSpec& chain, const Extension& ext,
                    const Extension& ext_up) {
  RSFunction v_a = rs_of(transported_seed(ext), ext.seeds.back().energy);
  RSFunction v_up = rs_of(transported_seed(ext_up),
                          ext_up.seeds.back().energy);
  RSFunction w0 = prefix_ground_rs(chain);

  RationalFn diff = v_a.r - w0.r;
  if (diff.is_zero())
    throw InternalCheckFailure("delta_chain: degenerate RS difference");
  Rational em = ext.seeds.back().energy;
  RationalFn znum(
      Poly::monomial(Rational(2) * em / chain.params.omega, 1));
  return znum / diff + w0.r + v_up.r;
}

}  // namespace

RationalFn delta_chain(const ChainSpec& chain) {
  Extension ext = extended_potential(chain);
  Extension ext_up = extended_potential(chain.shifted_params());
  return delta_of(chain, ext, ext_up);
}

SIReport si_check(const ChainSpec& chain, const Extension& ext,
                  const Extension& ext_up) {
  SIReport rep;
  rep.delta_residual = delta_of(chain, ext, ext_up);
  PotentialFn partner = superpartner_of(ext);
  RationalFn four_z(Poly::monomial(Rational(4), 1));
  rep.partner_residual = partner.u - ext_up.u - four_z;
  rep.delta_zero = rep.delta_residual.is_zero();
  rep.partner_matches_shifted = rep.partner_residual.is_zero();

  // Seed energy differences must not feel the shift a -> a+1.
  rep.energy_shifts_param_free = true;
  for (size_t i = 0; i < ext.seeds.size(); ++i)
    for (size_t j = i + 1; j < ext.seeds.size(); ++j) {
      Rational d_a = ext.seeds[i].energy - ext.seeds[j].energy;
      Rational d_up = ext_up.seeds[i].energy - ext_up.seeds[j].energy;
      if (d_a != d_up) rep.energy_shifts_param_free = false;
    }

  rep.holds = rep.delta_zero && rep.partner_matches_shifted &&
              rep.energy_shifts_param_free;
  return rep;
}

SIReport si_check(const ChainSpec& chain) {
  Extension ext = extended_potential(chain);
  Extension ext_up = extended_potential(chain.shifted_params());
  return si_check(chain, ext, ext_up);
}

}  // namespace isodbt
