#include "isodbt/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "isodbt/errors.hpp"

namespace isodbt {

GridSpec default_grid(const IsotonicParams& params, int levels, int n) {
  double a = params.a.to_double();
  double omega = params.omega.to_double();
  double e_max = 2.0 * std::max(levels - 1, 1) * omega;
  double v0 = std::abs(params.v0().to_double());
  double x_min = std::min(1e-3, 1.0 / (10.0 * a));
  double x_max = 3.0 * std::sqrt(2.0 * (e_max + v0)) / omega;
  return {x_min, x_max, n};
}

namespace {

// Inertia count: number of eigenvalues of the tridiagonal matrix strictly
// below lambda, via the LDL^T pivot signs.
int count_below(const std::vector<double>& diag, double off2, double lambda) {
  int count = 0;
  double d = diag[0] - lambda;
  if (d < 0.0) ++count;
  for (size_t i = 1; i < diag.size(); ++i) {
    if (d == 0.0) d = -1e-300;
    d = diag[i] - lambda - off2 / d;
    if (d < 0.0) ++count;
  }
  return count;
}

}  // namespace

SpectrumReport grid_spectrum(const PotentialFn& v, const GridSpec& grid,
                             int levels) {
  if (levels < 1) throw InvalidArgument("grid_spectrum: levels < 1");
  if (grid.n < levels + 2 || grid.x_min <= 0.0 || grid.x_max <= grid.x_min)
    throw InvalidArgument("grid_spectrum: bad grid");

  const int interior = grid.n - 1;
  const double h = (grid.x_max - grid.x_min) / grid.n;
  const double off = -1.0 / (h * h);
  const double off2 = off * off;
  std::vector<double> diag(interior);
  for (int i = 0; i < interior; ++i) {
    double x = grid.x_min + h * (i + 1);
    diag[i] = 2.0 / (h * h) + v.eval_double(x);
  }

  double lo = diag[0], hi = diag[0];
  for (double di : diag) {
    lo = std::min(lo, di);
    hi = std::max(hi, di);
  }
  lo += 2.0 * off;  // Gershgorin
  hi -= 2.0 * off;

  SpectrumReport rep;
  rep.grid = grid;
  rep.max_abs_error = 0.0;
  for (int k = 0; k < levels; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-12 * std::max(1.0, std::abs(b));
         ++it) {
      double mid = 0.5 * (a + b);
      if (count_below(diag, off2, mid) >= k + 1)
        b = mid;
      else
        a = mid;
    }
    double ev = 0.5 * (a + b);
    double target = 2.0 * k * v.omega.to_double();
    rep.eigenvalues.push_back(ev);
    rep.targets.push_back(target);
    rep.abs_error.push_back(std::abs(ev - target));
    rep.max_abs_error = std::max(rep.max_abs_error, rep.abs_error.back());
  }
  return rep;
}

namespace {

// Nodes and weights of n-point Gauss-Legendre on [-1, 1], by Newton on the
// Legendre recurrence.  n is small; recomputed per call.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

}  // namespace

std::vector<std::vector<double>> orthogonality_matrix(const Extension& ext,
                                                      int levels,
                                                      const QuadSpec& quad) {
  if (levels < 1) throw InvalidArgument("orthogonality_matrix: levels < 1");
  std::vector<Poly> nums;
  for (int k = 0; k < levels; ++k)
    nums.push_back(eigenstate_wronskian(ext, k).numerator);
  WeightFunction wf = weight_function(ext);

  int max_deg = 0;
  for (const auto& p : nums) max_deg = std::max(max_deg, p.degree());
  double expo = wf.exponent.to_double();
  double z_max = quad.z_max > 0.0
                     ? quad.z_max
                     : std::max(160.0, 6.0 * (2.0 * max_deg + expo + 2.0));

  std::vector<double> gl_x, gl_w;
  gauss_legendre(quad.points, gl_x, gl_w);

  auto integrand = [&](double z, const Poly& pj, const Poly& pk) {
    return pj.eval_double(z) * pk.eval_double(z) * wf.eval_double(z);
  };

  std::vector<std::vector<double>> gram(
      static_cast<size_t>(levels), std::vector<double>(levels, 0.0));
  for (int j = 0; j < levels; ++j) {
    for (int k = j; k < levels; ++k) {
      double acc = 0.0;
      // [0, 1] with z = t^2: dz = 2 t dt keeps half-integer exponents
      // polynomial and the integrand analytic through the origin.
      for (int i = 0; i < quad.points; ++i) {
        double t = 0.5 * (gl_x[i] + 1.0);
        double z = t * t;
        acc += 0.5 * gl_w[i] * 2.0 * t * integrand(z, nums[j], nums[k]);
      }
      // Geometric panels [1, 2], [2, 4], ... up to z_max.
      double left = 1.0;
      while (left < z_max) {
        double right = std::min(2.0 * left, z_max);
        double mid = 0.5 * (left + right), half = 0.5 * (right - left);
        for (int i = 0; i < quad.points; ++i)
          acc += half * gl_w[i] *
                 integrand(mid + half * gl_x[i], nums[j], nums[k]);
        left = right;
      }
      gram[static_cast<size_t>(j)][static_cast<size_t>(k)] = acc;
      gram[static_cast<size_t>(k)][static_cast<size_t>(j)] = acc;
    }
  }
  return gram;
}

double max_offdiag_relative(const std::vector<std::vector<double>>& gram) {
  double worst = 0.0;
  for (size_t j = 0; j < gram.size(); ++j)
    for (size_t k = 0; k < gram.size(); ++k) {
      if (j == k) continue;
      double scale = std::sqrt(gram[j][j] * gram[k][k]);
      worst = std::max(worst, std::abs(gram[j][k]) / scale);
    }
  return worst;
}

int node_scan(const std::function<double(double)>& fn, const GridSpec& grid) {
  int changes = 0;
  int prev = 0;
  for (int i = 0; i <= grid.n; ++i) {
    double x = grid.x_min +
               (grid.x_max - grid.x_min) * static_cast<double>(i) / grid.n;
    double y = fn(x);
    int s = (y > 0.0) - (y < 0.0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace isodbt
