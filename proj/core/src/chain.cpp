#include "isodbt/chain.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "isodbt/errors.hpp"
#include "isodbt/laguerre.hpp"

namespace isodbt {

ChainSpec::ChainSpec(std::vector<ChainStep> steps_in, IsotonicParams params_in)
    : steps(std::move(steps_in)), params(std::move(params_in)) {
  if (steps.empty()) throw InvalidArgument("ChainSpec: empty chain");
  for (size_t j = 0; j < steps.size(); ++j) {
    if (steps[j].n < 0)
      throw InvalidArgument("ChainSpec: negative seed index");
    if (steps[j].sign != 1 && steps[j].sign != -1)
      throw InvalidArgument("ChainSpec: step sign must be +1 or -1");
    for (size_t l = 0; l < j; ++l)
      if (steps[l] == steps[j])
        throw ConstraintViolation("ChainSpec: repeated step " +
                                  std::to_string(steps[j].n) +
                                  (steps[j].sign > 0 ? "+" : "-"));
  }
}

int ChainSpec::total_charge() const {
  int q = 0;
  for (const auto& s : steps) q += s.sign;
  return q;
}

std::string ChainSpec::str() const {
  std::ostringstream os;
  for (size_t j = 0; j < steps.size(); ++j) {
    if (j) os << ",";
    os << steps[j].n << (steps[j].sign > 0 ? "+" : "-");
  }
  return os.str();
}

ChainSpec ChainSpec::prefix() const {
  if (size() < 2) throw InvalidArgument("ChainSpec::prefix: chain too short");
  return ChainSpec(std::vector<ChainStep>(steps.begin(), steps.end() - 1),
                   params);
}

ChainSpec ChainSpec::shifted_params() const {
  return ChainSpec(steps,
                   IsotonicParams(params.omega, params.a + Rational(1)));
}

ChainSpec parse_chain(const std::string& text, const IsotonicParams& params) {
  std::vector<ChainStep> steps;
  size_t pos = 0;
  const size_t n = text.size();
  auto fail = [&](size_t at, const std::string& what) {
    throw InvalidArgument("chain text, position " + std::to_string(at) + ": " +
                          what);
  };
  while (true) {
    while (pos < n && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == n) fail(pos, "expected a step");
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(pos, "expected a seed index");
    size_t start = pos;
    long value = 0;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000) fail(start, "seed index out of range");
      ++pos;
    }
    if (pos == n || (text[pos] != '+' && text[pos] != '-'))
      fail(pos, "expected '+' or '-'");
    steps.push_back({static_cast<int>(value), text[pos] == '+' ? 1 : -1});
    ++pos;
    while (pos < n && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == n) break;
    if (text[pos] != ',') fail(pos, "expected ','");
    ++pos;
  }
  return ChainSpec(std::move(steps), params);
}

RSFunction dbt_step(const RSFunction& target, const RSFunction& seed) {
  if (target.energy == seed.energy)
    throw ConstraintViolation("dbt_step: coincident energies " +
                              seed.energy.str());
  RationalFn diff = seed.r - target.r;
  if (diff.is_zero())
    throw ConstraintViolation("dbt_step: identical RS functions");
  Rational coeff = Rational(2) * (target.energy - seed.energy) / seed.omega;
  RationalFn znum(Poly::monomial(coeff, 1));
  return {seed.omega, -seed.r + znum / diff, target.energy};
}

namespace {

// 2 z r' - r, the x^2-scaled derivative of r(z)/x.
RationalFn scaled_log_derivative(const RationalFn& r) {
  RationalFn two_z(Poly::monomial(Rational(2), 1));
  return two_z * r.derivative() - r;
}

}  // namespace

Extension extended_potential(const ChainSpec& chain) {
  const IsotonicParams& params = chain.params;
  const int m = chain.size();

  std::vector<SeedState> seeds;
  std::vector<GaugedFunction> fns;
  seeds.reserve(m);
  for (const auto& step : chain.steps) {
    seeds.push_back(seed_state(step.n, step.sign, params));
    fns.push_back(seeds.back().fn);
  }

  GaugedFunction w = wronskian(fns);
  if (w.is_zero())
    throw ConstraintViolation("extended_potential: dependent seed set, chain " +
                              chain.str());
  if (!w.body().is_poly())
    throw InternalCheckFailure("extended_potential: non-polynomial Wronskian body");
  Poly d = primitive_normalized(w.body().num());

  const RationalFn u_base = potential(params).u;

  // Route 1: iterated steps, transporting the pending seeds as we go.
  RationalFn u_iter = u_base;
  std::vector<RSFunction> pending;
  pending.reserve(m);
  for (const auto& step : chain.steps)
    pending.push_back(seed_rs(step.n, step.sign, params));
  std::vector<RSFunction> prefix_rs;
  prefix_rs.reserve(m);
  for (int j = 0; j < m; ++j) {
    const RSFunction vj = pending[static_cast<size_t>(j)];
    u_iter = u_iter + scaled_log_derivative(vj.r) * Rational(2);
    for (int l = j + 1; l < m; ++l)
      pending[static_cast<size_t>(l)] =
          dbt_step(pending[static_cast<size_t>(l)], vj);
    prefix_rs.push_back(vj);
  }

  // Route 2: closed form off the Wronskian, (log W)' = s(z)/x.
  RationalFn s = -rs_of(w, Rational(0)).r;
  RationalFn u_wron = u_base - scaled_log_derivative(s) * Rational(2);

  if (u_iter != u_wron)
    throw InternalCheckFailure(
        "extended_potential: iterated and Wronskian routes disagree, chain " +
        chain.str());

  RationalFn correction = u_iter - u_base;
  return Extension{chain,
                   std::move(seeds),
                   std::move(prefix_rs),
                   std::move(w),
                   std::move(d),
                   u_iter,
                   std::move(u_wron),
                   u_iter,
                   std::move(correction)};
}

GaugedFunction transported_seed(const Extension& ext) {
  if (ext.chain.size() == 1) return ext.seeds.back().fn;
  std::vector<GaugedFunction> fns;
  for (size_t j = 0; j + 1 < ext.seeds.size(); ++j)
    fns.push_back(ext.seeds[j].fn);
  GaugedFunction w_prefix = wronskian(fns);
  if (w_prefix.is_zero())
    throw ConstraintViolation("transported_seed: dependent prefix seed set");
  return ext.w / w_prefix;
}

namespace {

// Splits off the generalized exceptional polynomial: the body denominator
// of a canonical eigenstate divides the shared Wronskian polynomial d, so
// numerator * (d / den) is the polynomial P with fn proportional to
// x^{a+q} e^{-z/2} P/d.
Poly extract_numerator(const GaugedFunction& fn, const Poly& d) {
  PolyDivmod dm = divmod(d, fn.body().den());
  if (!dm.remainder.is_zero())
    throw InternalCheckFailure(
        "eigenstate: body denominator does not divide the shared d");
  return primitive_normalized(fn.body().num() * dm.quotient);
}

Rational rising_factorial(const Rational& base, int len) {
  Rational acc(1);
  for (int t = 0; t < len; ++t) acc *= base + Rational(t);
  return acc;
}

}  // namespace

ExtendedEigenstate eigenstate_wronskian(const Extension& ext, int k) {
  if (k < 0) throw InvalidArgument("eigenstate_wronskian: negative level");
  std::vector<GaugedFunction> fns;
  for (const auto& s : ext.seeds) fns.push_back(s.fn);
  fns.push_back(bound_state(k, ext.chain.params));
  GaugedFunction top = wronskian(fns);
  if (top.is_zero())
    throw InternalCheckFailure("eigenstate_wronskian: degenerate numerator");
  GaugedFunction fn = top / ext.w;
  Poly num = extract_numerator(fn, ext.d);
  return {k, physical_energy(k, ext.chain.params), std::move(fn),
          std::move(num)};
}

ExtendedEigenstate eigenstate_operator(const Extension& ext, int k) {
  if (k < 0) throw InvalidArgument("eigenstate_operator: negative level");
  GaugedFunction psi = bound_state(k, ext.chain.params);
  for (const auto& v : ext.prefix_rs)
    psi = psi.derivative() + psi.shifted_times(Rational(-1), v.r);
  if (psi.is_zero())
    throw InternalCheckFailure("eigenstate_operator: collapsed state");
  Poly num = extract_numerator(psi, ext.d);
  return {k, physical_energy(k, ext.chain.params), std::move(psi),
          std::move(num)};
}

ExtendedEigenstate eigenstate_determinant(const Extension& ext, int k) {
  if (k < 0) throw InvalidArgument("eigenstate_determinant: negative level");
  const IsotonicParams& params = ext.chain.params;
  const Rational alpha = params.alpha();
  const int m = ext.chain.size();

  // '+' steps first, original order inside each group.
  std::vector<ChainStep> ordered;
  for (const auto& s : ext.chain.steps)
    if (s.sign > 0) ordered.push_back(s);
  const int q_plus = static_cast<int>(ordered.size());
  for (const auto& s : ext.chain.steps)
    if (s.sign < 0) ordered.push_back(s);

  auto psi_entry = [&](int i, int j) -> Poly {  // 1-based row i, column j
    if (j <= q_plus) {
      return laguerre_poly(ordered[static_cast<size_t>(j - 1)].n,
                           alpha + Rational(i - 1), true);
    }
    if (j <= m) {
      int nj = ordered[static_cast<size_t>(j - 1)].n;
      Rational pref =
          rising_factorial(Rational(nj) - alpha - Rational(i - 2), i - 1);
      return laguerre_poly(nj, -alpha - Rational(i - 1), false) *
             Poly::monomial(pref, m - i + 1);
    }
    Poly l = laguerre_poly(k - i + 1, alpha + Rational(i - 1), false);
    return (i % 2 == 0) ? -l : l;
  };
  auto phi_entry = [&](int i, int j) -> Poly {
    if (j <= q_plus) {
      return laguerre_poly(ordered[static_cast<size_t>(j - 1)].n - i + 1,
                           alpha + Rational(i - 1), true);
    }
    int nj = ordered[static_cast<size_t>(j - 1)].n;
    Rational pref = rising_factorial(Rational(nj + 1), i - 1);
    return laguerre_poly(nj + i - 1, -alpha - Rational(i - 1), false) *
           Poly::monomial(pref, m - i + 1);
  };

  std::vector<std::vector<Poly>> psi(
      static_cast<size_t>(m + 1), std::vector<Poly>(static_cast<size_t>(m + 1)));
  for (int i = 1; i <= m + 1; ++i)
    for (int j = 1; j <= m + 1; ++j)
      psi[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          psi_entry(i, j);
  std::vector<std::vector<Poly>> phi(static_cast<size_t>(m),
                                     std::vector<Poly>(static_cast<size_t>(m)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      phi[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          phi_entry(i, j);

  Poly det_psi = bareiss_det(std::move(psi));
  Poly det_phi = bareiss_det(std::move(phi));
  if (det_phi.is_zero())
    throw InternalCheckFailure("eigenstate_determinant: singular denominator");
  if (det_psi.is_zero())
    throw InternalCheckFailure("eigenstate_determinant: vanishing numerator");

  GaugedFunction fn(params.omega, params.a, params.a + Rational(m),
                    Rational(-1, 2), RationalFn(det_psi, det_phi));
  Poly num = extract_numerator(fn, ext.d);
  return {k, physical_energy(k, params), std::move(fn), std::move(num)};
}

Poly elp_one_step(ElpSeries series, int n, int k, const Rational& alpha) {
  if (n < 0 || k < 0) throw InvalidArgument("elp_one_step: negative index");
  switch (series) {
    case ElpSeries::kL1:
      return laguerre_poly(n, alpha, true) *
                 laguerre_poly(k, alpha + Rational(1), false) +
             laguerre_poly(n - 1, alpha + Rational(1), true) *
                 laguerre_poly(k, alpha, false);
    case ElpSeries::kL2: {
      if (alpha <= Rational(n))
        throw ConstraintViolation("elp_one_step: kL2 needs alpha > n");
      Poly lk = laguerre_poly(k, alpha, false);
      Poly ln = laguerre_poly(n, -alpha, false);
      return lk * ln * (Rational(k - n) + alpha) -
             lk * laguerre_poly(n - 1, -alpha, false) * (alpha - Rational(n)) -
             laguerre_poly(k - 1, alpha, false) * ln * (Rational(k) + alpha);
    }
  }
  throw InvalidArgument("elp_one_step: unknown series");
}

double WeightFunction::eval_double(double z) const {
  double d = denominator.eval_double(z);
  return std::pow(z, exponent.to_double()) * std::exp(-z) / (d * d);
}

WeightFunction weight_function(const Extension& ext) {
  Rational expo =
      ext.chain.params.alpha() + Rational(ext.chain.total_charge());
  return {std::move(expo), ext.d};
}

namespace {

RationalFn det_rational(const std::vector<std::vector<RationalFn>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  RationalFn acc;
  int sign = 1;
  for (size_t i = 0; i < n; ++i) {
    if (!m[i][0].is_zero()) {
      std::vector<std::vector<RationalFn>> minor;
      minor.reserve(n - 1);
      for (size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        minor.emplace_back(m[r].begin() + 1, m[r].end());
      }
      RationalFn term = m[i][0] * det_rational(minor);
      acc = (sign > 0) ? acc + term : acc - term;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

GaugedFunction ck_delta(const std::vector<GaugedFunction>& states,
                        const std::vector<Rational>& energies) {
  const size_t m = states.size();
  if (m == 0 || energies.size() != m)
    throw InvalidArgument("ck_delta: need matching states and energies");
  const int l = static_cast<int>(m) / 2;

  std::vector<RationalFn> rs;
  rs.reserve(m);
  for (const auto& f : states) rs.push_back(rs_of(f, Rational(0)).r);

  // Rows E^t and E^t w for t < floor(m/2); odd m appends the E^l row.  The
  // w rows each contribute one factor 1/x, pulled out in front.
  std::vector<std::vector<RationalFn>> mat;
  for (int t = 0; t < l; ++t) {
    std::vector<RationalFn> row_e, row_ew;
    for (size_t j = 0; j < m; ++j) {
      Rational et = pow(energies[j], t);
      row_e.emplace_back(et);
      row_ew.push_back(rs[j] * et);
    }
    mat.push_back(std::move(row_e));
    mat.push_back(std::move(row_ew));
  }
  if (m % 2 == 1) {
    std::vector<RationalFn> row;
    for (size_t j = 0; j < m; ++j) row.emplace_back(pow(energies[j], l));
    mat.push_back(std::move(row));
  }

  RationalFn det = det_rational(mat);
  if (m % 2 == 0 && l % 2 == 1) det = -det;
  if (det.is_zero()) return GaugedFunction();
  return GaugedFunction(states[0].omega(), states[0].a(), Rational(-l),
                        Rational(0), std::move(det));
}

}  // namespace isodbt
