#ifndef ISODBT_ISOTONIC_HPP
#define ISODBT_ISOTONIC_HPP

#include "isodbt/gauged.hpp"

namespace isodbt {

// Parameters of the half-line oscillator with a centrifugal barrier,
//
//   V(x) = omega^2 x^2 / 4 + a(a-1)/x^2 + V0,   V0 = -omega (a + 1/2),
//
// on x > 0 with omega > 0 and a >= 1 (infinite barrier at the origin).
// The zero of energy is chosen so the ground state sits at E = 0 and the
// spectrum is E_k = 2 k omega.
struct IsotonicParams {
  IsotonicParams(Rational omega_in, Rational a_in);

  Rational alpha() const { return a - Rational(1, 2); }
  Rational v0() const { return -omega * (a + Rational(1, 2)); }

  Rational omega;
  Rational a;
};

// A potential on the half line in the closed form V(x) = u(z)/x^2 with z =
// omega x^2 / 2.  Polynomial u of degree 2 covers the oscillator itself;
// rational u covers every extension built here.
struct PotentialFn {
  Rational omega;
  RationalFn u;

  double eval_double(double x) const;
  // V + e as a PotentialFn (adds e x^2 = (2 e / omega) z to u).
  PotentialFn plus_energy(const Rational& e) const;

  friend bool operator==(const PotentialFn& a, const PotentialFn& b) {
    return a.omega == b.omega && a.u == b.u;
  }
  friend bool operator!=(const PotentialFn& a, const PotentialFn& b) {
    return !(a == b);
  }
};

// u = z^2 - (2a+1) z + a(a-1), i.e. the oscillator with its V0 included.
PotentialFn potential(const IsotonicParams& params);

// E_k = 2 k omega.
Rational physical_energy(int k, const IsotonicParams& params);

// Bound state psi_k = x^a e^{-z/2} L_k^alpha(z) (unnormalized).
GaugedFunction bound_state(int k, const IsotonicParams& params);

// psi'' + (e - V) psi as a GaugedFunction; identically zero exactly when
// psi solves the Schroedinger equation at energy e.
GaugedFunction schrodinger_residual(const GaugedFunction& psi,
                                    const PotentialFn& v, const Rational& e);

// Riccati-Schroedinger function w = -psi'/psi of a gauged function,
// represented as w(x) = r(z)/x.  The record keeps the energy label of the
// state it came from.
struct RSFunction {
  Rational omega;
  RationalFn r;
  Rational energy;
};

// RS function of the k-th bound state: r = (z - a) + 2 z L_{k-1}^{alpha+1}(z)
// / L_k^alpha(z); the rational tail vanishes for k = 0.
RSFunction rs_function(int k, const IsotonicParams& params);

// RS function of an arbitrary nonzero gauged function:
// r = -x_power - 2 c z - 2 z B'/B.
RSFunction rs_of(const GaugedFunction& f, const Rational& energy);

// x^2 (-w' + w^2 - V + e) = r - 2 z r' + r^2 - u + (2 e / omega) z.
// Identically zero exactly when w solves the Riccati equation at e.
RationalFn rs_residual(const RSFunction& w, const PotentialFn& v,
                       const Rational& e);

// The three parameter maps sending bound states to formal eigenfunctions at
// negative energies.  kPlus flips omega, kMinus reflects a, kThree is their
// composition; the record carries the mapped parameters, the resulting
// energy, and the constant potential shift picked up by the map.
enum class GammaKind { kPlus, kMinus, kThree };

struct GammaImage {
  Rational omega;
  Rational a;
  Rational energy;
  Rational potential_shift;
};

GammaImage gamma_apply(GammaKind kind, const IsotonicParams& params, int n);

// Seed eigenfunction for a transformation step.  sign = +1:
// phi = x^a e^{z/2} L_n^alpha(-z), always defined.  sign = -1:
// phi = x^{1-a} e^{-z/2} L_n^{-alpha}(z), defined only for alpha > n
// (otherwise the Laguerre factor has roots on the half line); violating
// that is a hard error.  Energies: E = -2 omega (a + sign (n + 1/2)).
struct SeedState {
  int n;
  int sign;
  Rational energy;
  GaugedFunction fn;
};

SeedState seed_state(int n, int sign, const IsotonicParams& params);

// Closed form of the seed's RS function,
//   r = -(sign (z + alpha) + 1/2)
//       - 2 sign z L_{n-1}^{sign alpha + 1}(-sign z) / L_n^{sign alpha}(-sign z),
// used as the independent cross-check against rs_of(seed_state(...).fn).
RSFunction seed_rs(int n, int sign, const IsotonicParams& params);

}  // namespace isodbt

#endif
