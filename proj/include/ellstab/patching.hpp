#pragma once

#include <vector>

#include "ellstab/series.hpp"

namespace ellstab {

// The two B-field parametrizations agree along l = e/2 + q.
Rat lq_relation_l(const Rat& e, const Rat& q);
Rat lq_relation_q(const Rat& e, const Rat& l);

// Exact solution (p, q, zeta, epsilon) of the four matching equations for
// given (k, l, gamma, delta). gamma and delta must be positive; the solver is
// otherwise purely algebraic in its inputs.
struct GeneralPatch {
  Rat p, q, zeta, epsilon;
};
GeneralPatch solve_general(const Rat& k, const Rat& l, const Rat& gamma,
                           const Rat& delta, const Rat& e);

// Floating-point solution of the quadratic matching Bc u^2 + v u = A with
// A = m + alpha - e, Bc = m - e/2, and the induced beta. Requires m > e and
// alpha > 0.
struct UVNumeric {
  double u = 0, beta = 0;
};
UVNumeric solve_uv_numeric(double m, double alpha, double e, double v);

// u(v) as an exact truncated series in w = 1/v (positive root branch,
// u ~ A/v at infinity), known precisely through `order`.
LaurentSeries solve_u_series(const Rat& m, const Rat& alpha, const Rat& e, int order);

// beta(v)^2 = alpha^2 (m + v/u - e) / (m + alpha - e/2); rational
// coefficients.
LaurentSeries solve_beta_sq_series(const Rat& m, const Rat& alpha, const Rat& e,
                                   int order);

// beta(v) itself. Coefficients are rational multiples of one square root, so
// they stay inside a single quadratic extension.
LaurentSeries solve_beta_series(const Rat& m, const Rat& alpha, const Rat& e, int order);

// The self-matching point where the two families share their polarization:
// u = sqrt((m + alpha - e) / (m + alpha - e/2)), beta = alpha u, v = beta.
struct GepnerPoint {
  QuadExt u, beta, v;
};
GepnerPoint gepner_params(const Rat& m, const Rat& alpha, const Rat& e);

// Smallest grid point from which u is strictly decreasing and beta strictly
// increasing across every later grid point (truncated series evaluated in
// floating point). The grid must be strictly increasing with at least two
// points; grid_exhausted when even the final pair violates monotonicity.
Rat monotone_from(const LaurentSeries& u, const LaurentSeries& beta,
                  const std::vector<Rat>& grid);

}  // namespace ellstab
