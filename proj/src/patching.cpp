#include "ellstab/patching.hpp"

#include <cmath>
#include <utility>

#include "ellstab/errors.hpp"

namespace ellstab {

namespace {

void require_regime(const Rat& m, const Rat& alpha, const Rat& e) {
  if (sgn(alpha) <= 0) fail(errc::invalid_parameter, "alpha must be positive");
  if (!(m > e)) fail(errc::invalid_parameter, "the matching needs m > e");
}

// Keeps an exact polynomial exact while discarding degrees above the cutoff;
// the iteration below never feeds dropped degrees back into lower ones.
LaurentSeries drop_above(const LaurentSeries& f, int cutoff) {
  if (f.is_zero_rep() || cutoff < f.lowest_degree) return LaurentSeries::zero();
  std::vector<QuadExt> cs;
  for (int k = f.lowest_degree; k <= cutoff; ++k) cs.push_back(f.coeff(k));
  return make_series(f.lowest_degree, std::move(cs), cutoff, true);
}

bool identical(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries d = a - b;
  return d.is_zero_rep() && d.exact;
}

}  // namespace

Rat lq_relation_l(const Rat& e, const Rat& q) { return e / 2 + q; }
Rat lq_relation_q(const Rat& e, const Rat& l) { return l - e / 2; }

GeneralPatch solve_general(const Rat& k, const Rat& l, const Rat& gamma,
                           const Rat& delta, const Rat& e) {
  if (sgn(gamma) <= 0 || sgn(delta) <= 0)
    fail(errc::invalid_parameter, "gamma and delta must be positive");
  Rat zeta = gamma + (delta - e / 2) * k * k + e;
  Rat denom = 2 * zeta - e;
  Rat num = k * (e - 2 * delta);
  if (denom == 0) {
    if (num == 0)
      fail(errc::underdetermined, "2 zeta = e with k (e - 2 delta) = 0: p is free");
    fail(errc::no_solution, "2 zeta = e but k (e - 2 delta) != 0");
  }
  Rat p = num / denom;
  Rat epsilon = delta - e - p * p * (zeta - e / 2);
  Rat q = l - e * k + delta * k - e / 2 + p * zeta;
  return {p, q, zeta, epsilon};
}

UVNumeric solve_uv_numeric(double m, double alpha, double e, double v) {
  if (!(m > e)) fail(errc::invalid_parameter, "the matching needs m > e");
  if (!(alpha > 0)) fail(errc::invalid_parameter, "alpha must be positive");
  double A = m + alpha - e;
  double Bc = m - e / 2;
  double disc = std::sqrt(v * v + 4 * Bc * A);
  // conjugate form for v >= 0: avoids the cancellation in -v + disc
  double u = v >= 0 ? 2 * A / (v + disc) : (disc - v) / (2 * Bc);
  double radicand = (m + v / u - e) / (m + alpha - e / 2);
  if (!(radicand > 0))
    fail(errc::invalid_parameter, "beta is not real at this v");
  return {u, alpha * std::sqrt(radicand)};
}

LaurentSeries solve_u_series(const Rat& m, const Rat& alpha, const Rat& e, int order) {
  require_regime(m, alpha, e);
  if (order < 1) fail(errc::invalid_parameter, "order must be at least 1");
  Rat A = m + alpha - e;
  Rat Bc = m - e / 2;
  LaurentSeries w = LaurentSeries::w();
  LaurentSeries a_const = LaurentSeries::constant(QuadExt(A));
  LaurentSeries u = drop_above(scale(w, QuadExt(A)), order);
  for (int it = 0; it <= order + 2; ++it) {
    LaurentSeries next = drop_above((a_const - scale(u * u, QuadExt(Bc))) * w, order);
    if (identical(next, u)) break;
    u = std::move(next);
  }
  return truncate_to(u, order);
}

LaurentSeries solve_beta_sq_series(const Rat& m, const Rat& alpha, const Rat& e,
                                   int order) {
  LaurentSeries u = solve_u_series(m, alpha, e, order + 4);
  Rat C = alpha * alpha / (m + alpha - e / 2);
  LaurentSeries v_over_u = inverse_series(u * LaurentSeries::w());
  LaurentSeries shifted = v_over_u + LaurentSeries::constant(QuadExt(Rat(m - e)));
  return truncate_to(scale(shifted, QuadExt(C)), order);
}

LaurentSeries solve_beta_series(const Rat& m, const Rat& alpha, const Rat& e, int order) {
  LaurentSeries bs = solve_beta_sq_series(m, alpha, e, order + 1);
  return truncate_to(sqrt_series(bs), order);
}

GepnerPoint gepner_params(const Rat& m, const Rat& alpha, const Rat& e) {
  require_regime(m, alpha, e);
  Rat ratio = (m + alpha - e) / (m + alpha - e / 2);
  QuadExt u = sqrt_rational(ratio);
  QuadExt beta = QuadExt(alpha) * u;
  return {u, beta, beta};
}

Rat monotone_from(const LaurentSeries& u, const LaurentSeries& beta,
                  const std::vector<Rat>& grid) {
  if (grid.size() < 2)
    fail(errc::invalid_parameter, "the grid needs at least two points");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] < grid[i + 1]))
      fail(errc::invalid_parameter, "the grid must be strictly increasing");
  std::vector<double> uu(grid.size()), bb(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    uu[i] = eval_at(u, grid[i]).value;
    bb[i] = eval_at(beta, grid[i]).value;
  }
  std::size_t n = grid.size();
  std::size_t good = n - 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    if (uu[i + 1] < uu[i] && bb[i + 1] > bb[i])
      good = i;
    else
      break;
  }
  if (good == n - 1)
    fail(errc::grid_exhausted, "no grid point starts a monotone tail");
  return grid[good];
}

}  // namespace ellstab
