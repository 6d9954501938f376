#ifndef ISODBT_ADMISSIBILITY_HPP
#define ISODBT_ADMISSIBILITY_HPP

#include <optional>

#include "isodbt/chain.hpp"

namespace isodbt {

// Net and per-prefix charges of a chain, computed on the reordering that
// places the '+' steps first (original order inside each group).
struct ChargeRecord {
  int q;                            // net charge
  int q_plus;                       // number of '+' steps
  std::vector<ChainStep> reordered;
  std::vector<int> prefix_q;        // prefix_q[j] = charge of first j+1 steps
};

ChargeRecord charge(const std::vector<ChainStep>& steps);

// One necessary condition per seed: '+' seeds always exist, '-' seeds need
// alpha > n.  The window flag marks n < a <= n + 1/2, where the a-based and
// alpha-based readings of the constraint disagree (alpha-based is used).
struct SeedCondition {
  ChainStep step;
  bool ok;
  bool ambiguous_window;
};

// One necessary condition per reordered prefix: with q' the charge before
// the step, a '+' step needs a + q' > 0 and a '-' step needs a + q' > 1
// (the intermediate barrier parameter stays in the regular range).
struct PrefixCondition {
  int length;  // prefix length, 1-based
  ChainStep step;
  bool ok;
};

// Full admissibility decision.  The two condition families are necessary;
// the authoritative certificate is the exact root count of the Wronskian
// polynomial part on (0, inf), which must be zero.  The certificate is
// only computable when every seed exists.
struct AdmissibilityReport {
  std::vector<SeedCondition> seed_conditions;
  std::vector<PrefixCondition> prefix_conditions;
  bool conditions_ok;
  int failing_prefix;                    // first failing length, -1 if none
  std::optional<int> certificate_roots;  // Sturm count of d on (0, inf)
  bool admissible;
};

AdmissibilityReport admissible(const ChainSpec& chain);

// Same decision with the chain's extension supplied by the caller; the
// certificate is the root count of ext.d.
AdmissibilityReport admissible(const ChainSpec& chain, const Extension& ext);

// Closed form of the power of x carried by the transported last seed at the
// origin: sign_m (alpha + q) - 1/2 with sign_m the last step's sign and q
// the net charge.
Rational origin_exponent(const ChainSpec& chain);

// The same exponent read off the canonical Wronskian ratio W(all)/W(prefix);
// equals origin_exponent exactly.
Rational origin_exponent_transported(const Extension& ext);

// Leading behavior of the transported second seed of a two-step chain at
// both ends of the half line, by exact symbolic expansion of the canonical
// ratio: the origin power of x and the sign there, and the gauge direction
// and sign at infinity.
struct TwoStepLeading {
  Rational exponent;        // power of x at the origin
  int origin_sign;          // sign of the coefficient of x^exponent
  bool diverges_at_infinity;
  int infinity_sign;
};

TwoStepLeading two_step_leading(const ChainSpec& chain);

// Non-normalizability certificate for the reciprocal of the transported
// last seed, the candidate extra eigenfunction at the deepest new energy.
// Strict isospectrality of the extension requires it to fail square
// integrability at one end at least.
struct IsospectralityCertificate {
  Rational inverse_origin_exponent;
  bool normalizable_at_origin;
  bool normalizable_at_infinity;
  bool strict;
};

IsospectralityCertificate inverse_state_check(const Extension& ext);

}  // namespace isodbt

#endif
