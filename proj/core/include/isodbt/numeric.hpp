#ifndef ISODBT_NUMERIC_HPP
#define ISODBT_NUMERIC_HPP

#include <functional>
#include <vector>

#include "isodbt/chain.hpp"

namespace isodbt {

// Uniform Dirichlet grid for the finite-difference eigensolver.
struct GridSpec {
  double x_min;
  double x_max;
  int n;  // number of subintervals; n-1 interior nodes
};

// Heuristic defaults: x_min = min(1e-3, 1/(10a)) keeps the barrier wall
// resolved, x_max = 3 sqrt(2 (E_max + |V0|)) / omega clears the classical
// turning point of the highest requested level by a factor of three.
GridSpec default_grid(const IsotonicParams& params, int levels,
                      int n = 30000);

// Lowest eigenvalues of -d^2/dx^2 + V on (x_min, x_max) with Dirichlet
// ends, by symmetric second-order finite differences and bisection on the
// tridiagonal inertia count.  Deterministic.
struct SpectrumReport {
  GridSpec grid;
  std::vector<double> eigenvalues;
  std::vector<double> targets;    // 2 k omega
  std::vector<double> abs_error;  // |eigenvalue - target|
  double max_abs_error;
};

SpectrumReport grid_spectrum(const PotentialFn& v, const GridSpec& grid,
                             int levels);

// Gauss-Legendre data for the orthogonality quadrature.
struct QuadSpec {
  int points = 64;       // nodes per panel
  double z_max = 0.0;    // 0 = choose from the integrand degree
};

// Gram matrix of the first `levels` eigenstate numerators against the
// extension's weight z^{alpha+q} e^{-z} / d(z)^2 on (0, inf).  The measure
// is integrated on [0,1] after z = t^2 (eliminating the fractional power
// for half-integer exponents) and on geometric panels [1, z_max] beyond.
std::vector<std::vector<double>> orthogonality_matrix(const Extension& ext,
                                                      int levels,
                                                      const QuadSpec& quad);

// max_{j != k} |G_jk| / sqrt(G_jj G_kk)
double max_offdiag_relative(const std::vector<std::vector<double>>& gram);

// Number of strict sign changes of fn over the grid nodes (exact zeros on
// nodes are skipped).  Cross-checks nodelessness certificates.
int node_scan(const std::function<double(double)>& fn, const GridSpec& grid);

}  // namespace isodbt

#endif
