// Command line front end: builds rational extensions of the half-line
// oscillator, certifies them, and exports closed forms and plot data.
//
// Exit codes: 0 success, 2 chain rejected (invalid or inadmissible),
// 3 verification failure, 4 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include "isodbt/admissibility.hpp"
#include "isodbt/chain.hpp"
#include "isodbt/errors.hpp"
#include "isodbt/numeric.hpp"
#include "isodbt/shape_invariance.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace isodbt;

constexpr int kOk = 0;
constexpr int kRejected = 2;
constexpr int kVerifyFailed = 3;
constexpr int kBadInput = 4;

struct Options {
  std::string chain_text;
  std::string omega = "1";
  std::string a = "2";
  int levels = 5;
  std::string grid;  // "N:xmin:xmax"
  double tol = 1e-6;
  std::string out = ".";
  std::string format = "json";
  std::string batch;
};

json rational_json(const Rational& r) {
  return json{{"num", r.num_str()}, {"den", r.den_str()}};
}

json poly_json(const Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rational_json(c));
  return json{{"degree", p.degree()}, {"coeffs", coeffs}};
}

json rational_fn_json(const RationalFn& f) {
  return json{{"num", poly_json(f.num())},
              {"den", poly_json(f.den())},
              {"text", f.str()}};
}

json gauged_json(const GaugedFunction& f) {
  return json{{"x_power", rational_json(f.x_power())},
              {"exp_coeff", rational_json(f.exp_coeff())},
              {"body", rational_fn_json(f.body())}};
}

json params_json(const IsotonicParams& p) {
  return json{{"omega", rational_json(p.omega)},
              {"a", rational_json(p.a)},
              {"alpha", rational_json(p.alpha())},
              {"v0", rational_json(p.v0())}};
}

json admissibility_json(const AdmissibilityReport& rep) {
  json seeds = json::array();
  for (const auto& c : rep.seed_conditions)
    seeds.push_back(json{{"n", c.step.n},
                         {"sign", c.step.sign},
                         {"ok", c.ok},
                         {"ambiguous_window", c.ambiguous_window}});
  json prefixes = json::array();
  for (const auto& c : rep.prefix_conditions)
    prefixes.push_back(json{{"length", c.length},
                            {"n", c.step.n},
                            {"sign", c.step.sign},
                            {"ok", c.ok}});
  json j{{"seed_conditions", seeds},
         {"prefix_conditions", prefixes},
         {"conditions_ok", rep.conditions_ok},
         {"failing_prefix", rep.failing_prefix}};
  if (rep.certificate_roots)
    j["certificate_roots"] = *rep.certificate_roots;
  else
    j["certificate_roots"] = nullptr;
  j["admissible"] = rep.admissible;
  return j;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string chain_slug(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c == '+') s += 'p';
    else if (c == '-') s += 'm';
    else if (c == ',') s += '_';
    else if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  return s.empty() ? "chain" : s;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InvalidArgument("cannot write " + path.string());
  os << text;
}

void write_json(const std::filesystem::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

GridSpec parse_grid(const std::string& text, const IsotonicParams& params,
                    int levels) {
  if (text.empty()) return default_grid(params, levels);
  std::istringstream is(text);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(is, part, ':')) parts.push_back(part);
  if (parts.size() != 3)
    throw InvalidArgument("grid: expected N:xmin:xmax, got '" + text + "'");
  try {
    GridSpec g{std::stod(parts[1]), std::stod(parts[2]), std::stoi(parts[0])};
    if (g.n < 16 || g.x_min <= 0.0 || g.x_max <= g.x_min)
      throw InvalidArgument("grid: need n >= 16 and 0 < xmin < xmax");
    return g;
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("grid: cannot parse '" + text + "'");
  } catch (const std::out_of_range&) {
    throw InvalidArgument("grid: value out of range in '" + text + "'");
  }
}

json spectrum_json(const SpectrumReport& rep) {
  json evs = json::array(), targets = json::array(), errs = json::array();
  for (double e : rep.eigenvalues) evs.push_back(e);
  for (double t : rep.targets) targets.push_back(t);
  for (double d : rep.abs_error) errs.push_back(d);
  return json{{"grid", json{{"x_min", rep.grid.x_min},
                            {"x_max", rep.grid.x_max},
                            {"n", rep.grid.n}}},
              {"eigenvalues", evs},
              {"targets", targets},
              {"abs_error", errs},
              {"max_abs_error", rep.max_abs_error}};
}

// Plot grid: log-spaced up to x = 1 to resolve the barrier wall, linear
// beyond.
std::vector<double> plot_grid(double x_min, double x_max) {
  std::vector<double> xs;
  if (x_min < 1.0 && x_max > 1.0) {
    const int n_log = 120, n_lin = 280;
    for (int i = 0; i < n_log; ++i)
      xs.push_back(x_min * std::pow(1.0 / x_min, i / double(n_log)));
    for (int i = 0; i <= n_lin; ++i)
      xs.push_back(1.0 + (x_max - 1.0) * i / double(n_lin));
  } else {
    const int n = 400;
    for (int i = 0; i <= n; ++i)
      xs.push_back(x_min + (x_max - x_min) * i / double(n));
  }
  return xs;
}

struct BuiltChain {
  ChainSpec chain;
  AdmissibilityReport report;
};

// Parses and gates a chain; on inadmissibility writes the report and
// signals rejection through the return code.
int gate_chain(const std::string& sub, const Options& opt,
               const std::string& chain_text, const IsotonicParams& params,
               const std::filesystem::path& outdir,
               std::optional<BuiltChain>& out) {
  ChainSpec chain = parse_chain(chain_text, params);
  AdmissibilityReport rep = admissible(chain);
  if (!rep.admissible) {
    json j{{"chain", chain.str()},
           {"params", params_json(params)},
           {"admissibility", admissibility_json(rep)},
           {"rejected", true}};
    write_json(outdir / (chain_slug(chain_text) + "." + sub + ".json"), j);
    return kRejected;
  }
  out.emplace(BuiltChain{std::move(chain), std::move(rep)});
  return kOk;
}

int cmd_build(const Options& opt, const std::string& chain_text,
              const std::filesystem::path& outdir) {
  IsotonicParams params(Rational::from_string(opt.omega),
                        Rational::from_string(opt.a));
  std::optional<BuiltChain> gated;
  int code = gate_chain("build", opt, chain_text, params, outdir, gated);
  if (code != kOk) return code;
  const ChainSpec& chain = gated->chain;

  Extension ext = extended_potential(chain);
  ChargeRecord ch = charge(chain.steps);
  WeightFunction wf = weight_function(ext);

  json seeds = json::array();
  for (const auto& s : ext.seeds)
    seeds.push_back(json{{"n", s.n},
                         {"sign", s.sign},
                         {"energy", rational_json(s.energy)},
                         {"fn", gauged_json(s.fn)}});

  json states = json::array();
  for (int k = 0; k < opt.levels; ++k) {
    ExtendedEigenstate st = eigenstate_wronskian(ext, k);
    states.push_back(json{{"k", st.k},
                          {"energy", rational_json(st.energy)},
                          {"numerator", poly_json(st.numerator)},
                          {"fn", gauged_json(st.fn)}});
  }

  json j{{"chain", chain.str()},
         {"params", params_json(params)},
         {"charge", json{{"q", ch.q}, {"q_plus", ch.q_plus}}},
         {"admissibility", admissibility_json(gated->report)},
         {"potential",
          json{{"u", rational_fn_json(ext.u)},
               {"correction", rational_fn_json(ext.correction)},
               {"wronskian", gauged_json(ext.w)},
               {"denominator", poly_json(ext.d)}}},
         {"weight",
          json{{"exponent", rational_json(wf.exponent)},
               {"denominator", poly_json(wf.denominator)}}},
         {"seeds", seeds},
         {"eigenstates", states}};
  std::string slug = chain_slug(chain_text);
  write_json(outdir / (slug + ".build.json"), j);

  if (opt.format == "csv" || opt.format == "both") {
    GridSpec g = parse_grid(opt.grid, params, opt.levels);
    std::vector<ExtendedEigenstate> sts;
    for (int k = 0; k < opt.levels; ++k)
      sts.push_back(eigenstate_wronskian(ext, k));
    PotentialFn v = ext.v();
    std::ostringstream os;
    os << "x,V";
    for (int k = 0; k < opt.levels; ++k) os << ",psi" << k;
    os << "\n";
    os.precision(17);
    for (double x : plot_grid(g.x_min, g.x_max)) {
      os << x << "," << v.eval_double(x);
      for (const auto& st : sts) os << "," << st.fn.eval_double(x);
      os << "\n";
    }
    write_text(outdir / (slug + ".build.csv"), os.str());
  }
  return kOk;
}

int cmd_verify(const Options& opt, const std::string& chain_text,
               const std::filesystem::path& outdir) {
  IsotonicParams params(Rational::from_string(opt.omega),
                        Rational::from_string(opt.a));
  std::optional<BuiltChain> gated;
  int code = gate_chain("verify", opt, chain_text, params, outdir, gated);
  if (code != kOk) return code;
  const ChainSpec& chain = gated->chain;

  json checks = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok,
                    const std::string& detail) {
    checks.push_back(json{{"name", name}, {"ok", ok}, {"detail", detail}});
    all_ok = all_ok && ok;
  };

  Extension ext = extended_potential(chain);
  record("potential_routes_agree", ext.u_iterated == ext.u_wronskian,
         "iterated steps vs Wronskian closed form, exact");

  bool schro = true, op_route = true, det_route = true;
  std::vector<ExtendedEigenstate> sts;
  for (int k = 0; k < opt.levels; ++k) {
    ExtendedEigenstate st = eigenstate_wronskian(ext, k);
    schro = schro &&
            schrodinger_residual(st.fn, ext.v(), st.energy).is_zero();
    op_route = op_route && (eigenstate_operator(ext, k).fn == st.fn);
    det_route = det_route &&
                proportional(eigenstate_determinant(ext, k).fn, st.fn)
                    .has_value();
    sts.push_back(std::move(st));
  }
  // Degree ladder: each level adds exactly one to the numerator degree.
  bool degrees = true;
  for (size_t k = 1; k < sts.size(); ++k)
    degrees = degrees && (sts[k].numerator.degree() ==
                          sts[0].numerator.degree() + static_cast<int>(k));
  record("eigenstate_schrodinger_exact", schro,
         "residual of each level, exact");
  record("eigenstate_operator_route", op_route,
         "iterated first-order operators equal the Wronskian ratio");
  record("eigenstate_determinant_route", det_route,
         "prefactored determinant proportional to the Wronskian ratio");
  record("eigenstate_degrees", degrees, "numerator degree steps by one");

  record("sturm_certificate",
         gated->report.certificate_roots &&
             *gated->report.certificate_roots == 0,
         "Wronskian polynomial part has no root on (0, inf)");

  GridSpec sg = parse_grid(opt.grid, params, opt.levels);
  bool nodes_ok = true;
  for (int k = 0; k < std::min(opt.levels, 4); ++k) {
    const GaugedFunction& fn = sts[static_cast<size_t>(k)].fn;
    int nodes = node_scan([&](double x) { return fn.eval_double(x); }, sg);
    nodes_ok = nodes_ok && nodes == k;
  }
  record("node_counts", nodes_ok,
         "level k shows exactly k sign changes on the grid");

  if (chain.size() <= 3) {
    std::vector<GaugedFunction> fns;
    std::vector<Rational> energies;
    for (const auto& s : ext.seeds) {
      fns.push_back(s.fn);
      energies.push_back(s.energy);
    }
    GaugedFunction delta = ck_delta(fns, energies);
    GaugedFunction prod = fns[0];
    for (size_t i = 1; i < fns.size(); ++i) prod = prod * fns[i];
    record("crum_krein_delta", wronskian(fns) == delta * prod,
           "W = Delta * product of seeds, exact");
  }

  SIReport si =
      si_check(chain, ext, extended_potential(chain.shifted_params()));
  record("shape_invariance", si.holds,
         "partner equals the a+1 chain plus 2 omega; Delta residual zero");

  IsospectralityCertificate iso = inverse_state_check(ext);
  record("inverse_state_excluded", iso.strict,
         "reciprocal transported seed fails square integrability");

  int olevels = std::min(opt.levels, 6);
  double offdiag =
      max_offdiag_relative(orthogonality_matrix(ext, olevels, QuadSpec{}));
  record("orthogonality", offdiag < 1e-10,
         "max relative Gram off-diagonal " + sci(offdiag));

  SpectrumReport sp = grid_spectrum(ext.v(), sg, std::min(opt.levels, 4));
  record("spectrum", sp.max_abs_error < opt.tol,
         "max abs deviation " + sci(sp.max_abs_error) +
             " against 2 k omega");

  json j{{"chain", chain.str()},
         {"params", params_json(params)},
         {"admissibility", admissibility_json(gated->report)},
         {"checks", checks},
         {"all_ok", all_ok}};
  write_json(outdir / (chain_slug(chain_text) + ".verify.json"), j);
  return all_ok ? kOk : kVerifyFailed;
}

int cmd_spectrum(const Options& opt, const std::string& chain_text,
                 const std::filesystem::path& outdir) {
  IsotonicParams params(Rational::from_string(opt.omega),
                        Rational::from_string(opt.a));
  PotentialFn v = potential(params);
  std::string slug = "base";
  json head{{"chain", "base"}, {"params", params_json(params)}};
  if (chain_text != "base") {
    std::optional<BuiltChain> gated;
    int code = gate_chain("spectrum", opt, chain_text, params, outdir, gated);
    if (code != kOk) return code;
    v = extended_potential(gated->chain).v();
    slug = chain_slug(chain_text);
    head["chain"] = gated->chain.str();
  }
  GridSpec g = parse_grid(opt.grid, params, opt.levels);
  SpectrumReport rep = grid_spectrum(v, g, opt.levels);
  json j = head;
  j["spectrum"] = spectrum_json(rep);
  j["within_tol"] = rep.max_abs_error < opt.tol;
  write_json(outdir / (slug + ".spectrum.json"), j);
  if (opt.format == "csv" || opt.format == "both") {
    std::ostringstream os;
    os << "k,eigenvalue,target,abs_error\n";
    os.precision(17);
    for (size_t k = 0; k < rep.eigenvalues.size(); ++k)
      os << k << "," << rep.eigenvalues[k] << "," << rep.targets[k] << ","
         << rep.abs_error[k] << "\n";
    write_text(outdir / (slug + ".spectrum.csv"), os.str());
  }
  return rep.max_abs_error < opt.tol ? kOk : kVerifyFailed;
}

int cmd_table(const Options& opt, const std::string& chain_text,
              const std::filesystem::path& outdir) {
  IsotonicParams params(Rational::from_string(opt.omega),
                        Rational::from_string(opt.a));
  std::optional<BuiltChain> gated;
  int code = gate_chain("table", opt, chain_text, params, outdir, gated);
  if (code != kOk) return code;
  const ChainSpec& chain = gated->chain;

  Extension ext = extended_potential(chain);
  WeightFunction wf = weight_function(ext);
  json rows = json::array();
  for (int k = 0; k < opt.levels; ++k) {
    ExtendedEigenstate st = eigenstate_wronskian(ext, k);
    rows.push_back(json{{"k", k},
                        {"degree", st.numerator.degree()},
                        {"energy", rational_json(st.energy)},
                        {"coeffs", poly_json(st.numerator)["coeffs"]}});
  }
  json j{{"chain", chain.str()},
         {"params", params_json(params)},
         {"weight",
          json{{"exponent", rational_json(wf.exponent)},
               {"denominator", poly_json(wf.denominator)}}},
         {"polynomials", rows}};
  std::string slug = chain_slug(chain_text);
  write_json(outdir / (slug + ".table.json"), j);
  if (opt.format == "csv" || opt.format == "both") {
    std::ostringstream os;
    os << "k,degree,coeffs...\n";
    for (int k = 0; k < opt.levels; ++k) {
      ExtendedEigenstate st = eigenstate_wronskian(ext, k);
      os << k << "," << st.numerator.degree();
      for (const auto& c : st.numerator.coeffs()) os << "," << c.str();
      os << "\n";
    }
    write_text(outdir / (slug + ".table.csv"), os.str());
  }
  return kOk;
}

int run_one(const std::string& sub, const Options& opt,
            const std::string& chain_text) {
  try {
    std::filesystem::path outdir(opt.out);
    std::filesystem::create_directories(outdir);
    if (sub == "build") return cmd_build(opt, chain_text, outdir);
    if (sub == "verify") return cmd_verify(opt, chain_text, outdir);
    if (sub == "spectrum") return cmd_spectrum(opt, chain_text, outdir);
    if (sub == "table") return cmd_table(opt, chain_text, outdir);
    std::fprintf(stderr, "unknown subcommand %s\n", sub.c_str());
    return kBadInput;
  } catch (const ConstraintViolation& e) {
    std::fprintf(stderr, "rejected: %s\n", e.what());
    return kRejected;
  } catch (const InvalidArgument& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "verification failure: %s\n", e.what());
    return kVerifyFailed;
  }
}

int thread_budget() {
  if (const char* env = std::getenv("ISODBT_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 2;
}

int run_batch(const std::string& sub, const Options& opt) {
  std::ifstream is(opt.batch);
  if (!is) {
    std::fprintf(stderr, "input error: cannot read %s\n", opt.batch.c_str());
    return kBadInput;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    size_t e = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(b, e - b + 1));
  }
  if (lines.empty()) {
    std::fprintf(stderr, "input error: %s has no chains\n", opt.batch.c_str());
    return kBadInput;
  }

  std::vector<int> codes(lines.size(), 0);
  std::atomic<size_t> next{0};
  int workers = std::min<int>(thread_budget(), static_cast<int>(lines.size()));
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < lines.size();
           i = next.fetch_add(1))
        codes[i] = run_one(sub, opt, lines[i]);
    });
  for (auto& th : pool) th.join();

  json entries = json::array();
  int worst = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    entries.push_back(json{{"chain", lines[i]}, {"exit_code", codes[i]}});
    worst = std::max(worst, codes[i]);
  }
  write_json(std::filesystem::path(opt.out) / "batch_summary.json",
             json{{"subcommand", sub}, {"entries", entries},
                  {"exit_code", worst}});
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact multistep rational extensions of the half-line oscillator"};
  app.require_subcommand(1);

  Options opt;
  std::string sub_selected;
  for (const char* name : {"build", "verify", "spectrum", "table"}) {
    CLI::App* sub = app.add_subcommand(
        name, std::string(name) + " a chain at given parameters");
    sub->add_option("--chain", opt.chain_text,
                    "chain text, e.g. \"1+,2-\" (spectrum also accepts "
                    "\"base\")");
    sub->add_option("--omega", opt.omega, "oscillator frequency, rational");
    sub->add_option("--a", opt.a, "barrier parameter, rational >= 1");
    sub->add_option("--levels", opt.levels, "number of levels to process")
        ->check(CLI::Range(1, 64));
    sub->add_option("--grid", opt.grid, "spectral grid as N:xmin:xmax");
    sub->add_option("--tol", opt.tol, "numeric tolerance for spectra");
    sub->add_option("--out", opt.out, "output directory");
    sub->add_option("--format", opt.format, "json, csv, or both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    sub->add_option("--batch", opt.batch,
                    "file with one chain per line; parallel, "
                    "ISODBT_THREADS caps the workers");
    sub->callback([&sub_selected, name] { sub_selected = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  if (!opt.batch.empty()) return run_batch(sub_selected, opt);
  if (opt.chain_text.empty()) {
    std::fprintf(stderr, "input error: --chain (or --batch) is required\n");
    return kBadInput;
  }
  return run_one(sub_selected, opt, opt.chain_text);
}
