#ifndef ISODBT_CHAIN_HPP
#define ISODBT_CHAIN_HPP

#include <string>
#include <vector>

#include "isodbt/isotonic.hpp"

namespace isodbt {

// One transformation step: seed index n >= 0 and sign +1 or -1.
struct ChainStep {
  int n;
  int sign;

  friend bool operator==(const ChainStep& a, const ChainStep& b) {
    return a.n == b.n && a.sign == b.sign;
  }
};

// An ordered multistep specification at fixed base parameters.  Validity
// checked on construction: at least one step, n >= 0, signs +-1, and no
// repeated (n, sign) pair (a repeated seed forces a zero Wronskian).
struct ChainSpec {
  ChainSpec(std::vector<ChainStep> steps_in, IsotonicParams params_in);

  int size() const { return static_cast<int>(steps.size()); }
  // Net charge, the sum of the step signs.
  int total_charge() const;
  // "1+,2-" form.
  std::string str() const;
  // The first size()-1 steps at the same parameters; errors on size() == 1.
  ChainSpec prefix() const;
  // Same steps at (omega, a+1).
  ChainSpec shifted_params() const;

  std::vector<ChainStep> steps;
  IsotonicParams params;
};

// Parses "1+,2-" (spaces allowed around steps and commas) into a validated
// ChainSpec.  Malformed text raises InvalidArgument with the offending
// position; duplicate steps raise ConstraintViolation via ChainSpec.
ChainSpec parse_chain(const std::string& text, const IsotonicParams& params);

// One Darboux step on RS functions: transforms the function of a state at
// energy target.energy past the seed at seed.energy,
//   r_new = -r_seed + (2 (E_t - E_s)/omega) z / (r_seed - r_target).
// Coincident energies are a hard error (the step degenerates).
RSFunction dbt_step(const RSFunction& target, const RSFunction& seed);

// The fully built m-step extension at the chain's parameters.  The
// potential closed form is computed along two independent routes and the
// constructor insists they agree exactly:
//   iterated:  u_0 = u_base, u_j = u_{j-1} + 2 (2 z r_j' - r_j) with r_j
//              the RS function of the j-th seed transported past the
//              previous steps,
//   wronskian: u_base - 2 (2 z s' - s) with s(z)/x = (log W)'.
struct Extension {
  ChainSpec chain;
  std::vector<SeedState> seeds;        // at the base parameters
  std::vector<RSFunction> prefix_rs;   // transported RS function per step
  GaugedFunction w;                    // Wronskian of the seeds
  Poly d;                              // primitive part of the body of w
  RationalFn u_iterated;
  RationalFn u_wronskian;
  RationalFn u;                        // the agreed closed form
  RationalFn correction;               // u - u_base

  PotentialFn v() const { return {chain.params.omega, u}; }
};

// Errors: ConstraintViolation when a seed does not exist or the seed set is
// dependent (zero Wronskian); InternalCheckFailure if the routes disagree.
Extension extended_potential(const ChainSpec& chain);

// The last seed transported past the other m-1 steps, W(all)/W(prefix);
// for m = 1 this is the seed itself.  Its reciprocal is the candidate
// extra eigenfunction at the last seed energy.
GaugedFunction transported_seed(const Extension& ext);

// Eigenstate of the extended potential at level k, with the generalized
// exceptional polynomial split off: fn = const * x^{a+q} e^{-z/2}
// numerator(z)/d(z) with d the shared Wronskian denominator.
struct ExtendedEigenstate {
  int k;
  Rational energy;
  GaugedFunction fn;
  Poly numerator;  // primitive-normalized
};

// Route 1 (the oracle): W(seeds, psi_k) / W(seeds).
ExtendedEigenstate eigenstate_wronskian(const Extension& ext, int k);
// Route 2: iterated application of the first-order ladder operators
// psi -> psi' + v_j psi; agrees with route 1 exactly.
ExtendedEigenstate eigenstate_operator(const Extension& ext, int k);
// Route 3: the prefactored determinant representation (chain reordered
// with the '+' steps first).  Agrees with route 1 up to a rational
// constant; route 1 wins any discrepancy.
ExtendedEigenstate eigenstate_determinant(const Extension& ext, int k);

// One-step exceptional Laguerre polynomials in expanded form, degree n + k.
// kL1 is the sign +1 series
//   L_n^a(-z) L_k^{a+1}(z) + L_{n-1}^{a+1}(-z) L_k^a(z);
// kL2 the sign -1 series (alpha > n required)
//   (k-n+a) L_k^a L_n^{-a} - (a-n) L_k^a L_{n-1}^{-a} - (k+a) L_{k-1}^a L_n^{-a}.
// Both match the Wronskian-built numerators up to a rational constant.
enum class ElpSeries { kL1, kL2 };
Poly elp_one_step(ElpSeries series, int n, int k, const Rational& alpha);

// Weight of the extension's orthogonality measure,
// z^{exponent} e^{-z} / denominator(z)^2 with exponent = alpha + q.
struct WeightFunction {
  Rational exponent;
  Poly denominator;

  double eval_double(double z) const;
};

WeightFunction weight_function(const Extension& ext);

// Determinant closed form of the ratio W(f_1..f_m) / prod_j f_j, built
// from the energies and RS functions alone: rows alternate E^t and E^t w
// (plus a final E^l row for odd m), columns run over the states, and the
// whole carries x^{-floor(m/2)} and a sign (-1)^{floor(m/2)} for even m.
GaugedFunction ck_delta(const std::vector<GaugedFunction>& states,
                        const std::vector<Rational>& energies);

}  // namespace isodbt

#endif
