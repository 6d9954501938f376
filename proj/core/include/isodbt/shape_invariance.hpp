#ifndef ISODBT_SHAPE_INVARIANCE_HPP
#define ISODBT_SHAPE_INVARIANCE_HPP

#include "isodbt/chain.hpp"

namespace isodbt {

// SUSY partner of the extension: V~ = V^(chain) + 2 w0', with w0 the RS
// function of the extension's ground state.  Errors on a non-admissible
// chain (the ground state must be nodeless for the partner to be regular).
PotentialFn superpartner(const ChainSpec& chain);

// Compatibility determinant of the two factorization routes (the partner
// route and the parameter-shifted chain route), reduced to one scalar
// function: with v the RS function of the transported last seed, w0 the RS
// function of the prefix chain's ground state, and Em the last seed energy,
//
//   x Delta = (2 Em / omega) z / (r_v - r_w0) + r_w0 + r_v(a+1).
//
// Contract: identically zero; returned as the residual in z.
RationalFn delta_chain(const ChainSpec& chain);

// Full hereditary shape-invariance check at the chain's parameters.
struct SIReport {
  RationalFn delta_residual;     // x Delta, must vanish
  RationalFn partner_residual;   // u~(a) - u_chain(a+1) - 4z, must vanish
  bool delta_zero;
  bool partner_matches_shifted;
  bool energy_shifts_param_free;  // seed energy differences unchanged a -> a+1
  bool holds;
};

SIReport si_check(const ChainSpec& chain);

// Same check with the extensions at a and at a+1 supplied by the caller;
// ext_up must be the extension of chain.shifted_params().
SIReport si_check(const ChainSpec& chain, const Extension& ext,
                  const Extension& ext_up);

}  // namespace isodbt

#endif
