#include "ellstab/glaction.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <utility>

#include "ellstab/errors.hpp"
#include "ellstab/patching.hpp"

namespace ellstab {

namespace {

struct Mod2 {
  int even = 0;
  Rat principal;  // in (-1, 1]
};

Mod2 split_mod2(const Rat& t) {
  Rat k = -rat_floor(Rat((1 - t) / 2));
  long long ki = numerator(k).convert_to<long long>();
  Rat principal = Rat(t - 2 * k);
  return {static_cast<int>(2 * ki), principal};
}

// Direction (x, y) on the unit square for a quarter-integer phase in (-1, 1].
std::pair<QuadExt, QuadExt> quarter_direction(const Rat& principal) {
  Rat q4 = Rat(principal * 4);
  if (denominator(q4) != 1)
    fail(errc::branch_not_quarter, "anchor phase must be a quarter-integer");
  long long n = numerator(q4).convert_to<long long>();
  auto dir = [](int x, int y) {
    return std::pair<QuadExt, QuadExt>{QuadExt(Rat(x)), QuadExt(Rat(y))};
  };
  switch (n) {
    case -3: return dir(-1, -1);
    case -2: return dir(0, -1);
    case -1: return dir(1, -1);
    case 0: return dir(1, 0);
    case 1: return dir(1, 1);
    case 2: return dir(0, 1);
    case 3: return dir(-1, 1);
    case 4: return dir(-1, 0);
    default:
      fail(errc::branch_not_quarter, "anchor phase must be a quarter-integer");
  }
}

// Exact value of the limit when its direction lies on the quarter grid.
std::optional<Rat> quarter_value(const PhaseLimit& lim) {
  int sx = sgn(lim.x);
  int sy = sgn(lim.y);
  std::optional<Rat> principal;
  if (sy == 0) {
    if (sx > 0) principal = Rat(0);
    if (sx < 0) principal = Rat(1);
  } else if (sx == 0) {
    principal = Rat(sy > 0 ? 1 : -1, 2);
  } else if ((lim.x - lim.y).is_zero()) {
    principal = sx > 0 ? Rat(1, 4) : Rat(-3, 4);
  } else if ((lim.x + lim.y).is_zero()) {
    principal = sx > 0 ? Rat(-1, 4) : Rat(3, 4);
  }
  if (!principal) return std::nullopt;
  return Rat(*principal + lim.even);
}

// The germ of the constant direction with phase exactly t (quarter-integer).
PhaseFunction quarter_germ(const Rat& t) {
  Mod2 parts = split_mod2(t);
  auto [cx, cy] = quarter_direction(parts.principal);
  PhaseFunction phi;
  phi.witness = ComplexLaurentSeries::constant(cx, cy);
  phi.limit = PhaseLimit{parts.even, cx, cy};
  return phi;
}

}  // namespace

bool is_glplus(const std::array<LaurentSeries, 4>& t) {
  LaurentSeries det = t[0] * t[3] - t[1] * t[2];
  return theta_of(det).sign > 0;
}

GLLift make_lift(std::array<LaurentSeries, 4> t, const Rat& anchor,
                 const Rat& anchor_image) {
  if (!is_glplus(t))
    fail(errc::invalid_parameter, "matrix determinant not positive at large parameter");
  auto [ax, ay] = quarter_direction(split_mod2(anchor).principal);
  auto [ix, iy] = quarter_direction(split_mod2(anchor_image).principal);
  LaurentSeries X = scale(t[0], ax) + scale(t[1], ay);
  LaurentSeries Y = scale(t[2], ax) + scale(t[3], ay);
  // Image of the anchor direction must be a positive multiple of the
  // anchor_image direction at v >> 0; a truncated matrix only gets to pass
  // when the mismatch vanishes as far as the truncation can see.
  LaurentSeries cross = scale(X, iy) - scale(Y, ix);
  LaurentSeries dot = scale(X, ix) + scale(Y, iy);
  if (!cross.is_zero_rep() || theta_of(dot).sign <= 0)
    fail(errc::invalid_parameter, "anchor image does not match the matrix");
  return GLLift{std::move(t), anchor, anchor_image};
}

GLLift inverse_lift(const GLLift& lift) {
  const auto& t = lift.t;
  LaurentSeries det = t[0] * t[3] - t[1] * t[2];
  std::array<LaurentSeries, 4> inv{
      div_series(t[3], det), div_series(-t[1], det),
      div_series(-t[2], det), div_series(t[0], det)};
  return make_lift(std::move(inv), lift.anchor_image, lift.anchor);
}

PhaseFunction gamma_T_apply(const PhaseFunction& phi, const GLLift& lift) {
  long long anchor_floor =
      numerator(rat_floor(lift.anchor)).convert_to<long long>();
  bool found = false;
  long long j = 0;
  for (long long cand = phi.limit.even - anchor_floor - 3;
       cand <= phi.limit.even - anchor_floor + 3; ++cand) {
    Rat lo = Rat(lift.anchor + cand);
    Rat hi = Rat(lo + 1);
    if (compare(phi.limit, lo) > 0 && compare(phi.limit, hi) <= 0) {
      found = true;
      j = cand;
      break;
    }
  }
  if (!found)
    fail(errc::invalid_parameter, "germ limit out of range of the anchor grid");
  ComplexLaurentSeries tw{
      lift.t[0] * phi.witness.re + lift.t[1] * phi.witness.im,
      lift.t[2] * phi.witness.re + lift.t[3] * phi.witness.im};
  Rat hint = Rat(lift.anchor_image + j);
  PhaseFunction out = phase_of(tw, hint);
  if (compare(out.limit, Rat(hint + 1)) > 0)
    fail(errc::invalid_parameter, "lift anchor inconsistent with this germ");
  return out;
}

GLLift compose(const GLLift& a, const GLLift& b) {
  std::array<LaurentSeries, 4> t{
      a.t[0] * b.t[0] + a.t[1] * b.t[2], a.t[0] * b.t[1] + a.t[1] * b.t[3],
      a.t[2] * b.t[0] + a.t[3] * b.t[2], a.t[2] * b.t[1] + a.t[3] * b.t[3]};
  PhaseFunction germ = quarter_germ(b.anchor_image);
  PhaseFunction out = gamma_T_apply(germ, a);
  std::optional<Rat> image = quarter_value(out.limit);
  if (!image)
    fail(errc::invalid_parameter, "composite anchor leaves the quarter grid");
  return make_lift(std::move(t), b.anchor, *image);
}

GLLift quarter_turn_lift(int k, const Rat& d0, const Rat& d1, const Rat& shear) {
  if (sgn(QuadExt(d0)) <= 0 || sgn(QuadExt(d1)) <= 0)
    fail(errc::invalid_parameter, "diagonal entries must be positive");
  std::array<Rat, 4> m{d0, shear, Rat(0), d1};
  int kk = ((k % 4) + 4) % 4;
  for (int i = 0; i < kk; ++i)
    m = {m[2], m[3], Rat(-m[0]), Rat(-m[1])};
  std::array<LaurentSeries, 4> t;
  for (int i = 0; i < 4; ++i)
    t[i] = LaurentSeries::constant(QuadExt(m[i]));
  return make_lift(std::move(t), Rat(0), Rat(-k, 2));
}

ActedCharge act_on_charge(const ComplexLaurentSeries& z,
                          const PhaseFunction& phi, const GLLift& lift) {
  GLLift inv = inverse_lift(lift);
  ComplexLaurentSeries zt{inv.t[0] * z.re + inv.t[1] * z.im,
                          inv.t[2] * z.re + inv.t[3] * z.im};
  return {zt, gamma_T_apply(phi, inv)};
}

namespace {

std::vector<ChernClass> commutation_sample(int random_classes, unsigned seed) {
  std::vector<ChernClass> out;
  for (int i = 0; i < 5; ++i) {
    ChernClass g;
    (i == 0 ? g.n : i == 1 ? g.x : i == 2 ? g.y : i == 3 ? g.xi2 : g.s) = 1;
    out.push_back(g);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-6, 6);
  std::uniform_int_distribution<int> half(-12, 12);
  for (int i = 0; i < random_classes; ++i) {
    ChernClass g;
    g.n = coord(rng);
    g.x = coord(rng);
    g.y = coord(rng);
    g.xi2 = coord(rng);
    g.s = Rat(half(rng), 2);
    out.push_back(g);
  }
  return out;
}

}  // namespace

CommutationReport verify_commutation(const SurfaceGeometry& geom,
                                     const Rat& alpha, const Rat& q,
                                     const CommutationCheck& check) {
  CommutationReport report;
  report.mode = check.mode;
  std::vector<ChernClass> classes =
      commutation_sample(check.random_classes, check.seed);

  if (check.mode == CommutationMode::numeric) {
    if (!(check.v > 0))
      fail(errc::invalid_parameter, "numeric check needs a positive parameter");
    double md = rat_double(geom.m);
    double ed = rat_double(geom.e);
    double ad = rat_double(alpha);
    double qd = rat_double(q);
    UVNumeric uv = solve_uv_numeric(md, ad, ed, check.v);
    DivisorOf<double> omega{uv.u, uv.u * md + check.v};
    DivisorOf<double> B{0.0, qd};
    DivisorOf<double> omegabar{uv.beta / ad, uv.beta * (md / ad + 1)};
    DivisorOf<double> Bbar{0.0, ed / 2 + qd};
    for (const ChernClass& g : classes) {
      Cx<double> zh = z_omega_B<double>(phi(g, geom), omega, B, geom);
      Cx<double> zr = z_omega_B<double>(g, omegabar, Bbar, geom);
      double r1 = zh.re - (ad / uv.beta) * zr.im;
      double r2 = zh.im + uv.u * zr.re;
      double size = std::max({1.0, std::fabs(zh.re), std::fabs(zh.im),
                              std::fabs(zr.re), std::fabs(zr.im)});
      double res = std::max(std::fabs(r1), std::fabs(r2)) / size;
      report.entries.push_back({g, res, false});
      report.max_residual = std::max(report.max_residual, res);
    }
    report.pass = report.max_residual <= commutation_tolerance;
    return report;
  }

  if (check.mode == CommutationMode::series) {
    int order = std::max(check.order, 1);
    report.order = order;
    LaurentSeries u = solve_u_series(geom.m, alpha, geom.e, order + 4);
    LaurentSeries beta_sq = solve_beta_sq_series(geom.m, alpha, geom.e, order + 2);
    Rat l = lq_relation_l(geom.e, q);
    Rat m_scaled = Rat(geom.m);
    DivisorS omega{u, scale(u, QuadExt(m_scaled)) + LaurentSeries::v()};
    DivisorS B{LaurentSeries::zero(), LaurentSeries::constant(QuadExt(q))};
    Rat inv_alpha = Rat(1) / alpha;
    Rat fiber_part = geom.m / alpha + 1;
    DivisorRF omt{inv_alpha, fiber_part};
    DivisorRF bbar{Rat(0), l};
    Rat h2 = Rat(pair_div(omt, omt, geom) / 2);
    bool all_zero = true;
    for (const ChernClass& g : classes) {
      Cx<LaurentSeries> zh = z_omega_B<LaurentSeries>(phi(g, geom), omega, B, geom);
      DivisorRF ch1{g.x, g.y};
      Rat g1 = Rat(pair_div(omt, ch1, geom) - g.n * pair_div(omt, bbar, geom));
      Rat s_bbar = twist(g, bbar, geom).s;
      Rat im_scaled = Rat(alpha * g1);
      LaurentSeries r1 = zh.re - LaurentSeries::constant(QuadExt(im_scaled));
      LaurentSeries ray_re = LaurentSeries::constant(QuadExt(Rat(-s_bbar))) +
                             scale(beta_sq, QuadExt(Rat(h2 * g.n)));
      LaurentSeries r2 = zh.im + u * ray_re;
      bool ok = is_zero_through(r1, order) && is_zero_through(r2, order);
      report.entries.push_back({g, ok ? 0.0 : 1.0, ok});
      if (!ok) all_zero = false;
    }
    report.exact = all_zero;
    report.pass = all_zero;
    report.max_residual = all_zero ? 0.0 : 1.0;
    return report;
  }

  GepnerPoint gp = gepner_params(geom.m, alpha, geom.e);
  Rat l = lq_relation_l(geom.e, q);
  Rat m_rat = Rat(geom.m);
  DivisorQ omega{gp.u, gp.u * QuadExt(m_rat) + gp.v};
  DivisorQ B{QuadExt(Rat(0)), QuadExt(q)};
  Rat fiber_part = geom.m / alpha + 1;
  DivisorQ omegabar{gp.beta / QuadExt(alpha), gp.beta * QuadExt(fiber_part)};
  DivisorQ Bbar{QuadExt(Rat(0)), QuadExt(l)};
  report.omega_fixed = omega.p == omegabar.p && omega.q == omegabar.q &&
                       B.p == Bbar.p && B.q == Bbar.q;
  QuadExt scale_back = QuadExt(alpha) / gp.beta;
  QuadExt inv_u = inverse(gp.u);
  DivisorRF half_fiber{Rat(0), Rat(-geom.e / 2)};
  bool all_zero = true;
  for (const ChernClass& g : classes) {
    Cx<QuadExt> zh = z_omega_B<QuadExt>(phi(g, geom), omega, B, geom);
    Cx<QuadExt> zr = z_omega_B<QuadExt>(g, omegabar, Bbar, geom);
    QuadExt r1 = zh.re - scale_back * zr.im;
    QuadExt r2 = zh.im + gp.u * zr.re;
    ChernClass gprime = twist(shift(phi(g, geom)), half_fiber, geom);
    Cx<QuadExt> zg = z_omega_B<QuadExt>(gprime, omega, B, geom);
    Cx<QuadExt> z0 = z_omega_B<QuadExt>(g, omega, B, geom);
    QuadExt r3 = zg.re + z0.im * inv_u;
    QuadExt r4 = zg.im - gp.u * z0.re;
    bool ok = r1.is_zero() && r2.is_zero() && r3.is_zero() && r4.is_zero();
    report.entries.push_back({g, ok ? 0.0 : 1.0, ok});
    if (!ok) all_zero = false;
  }
  report.exact = all_zero;
  report.pass = all_zero;
  report.max_residual = all_zero ? 0.0 : 1.0;
  return report;
}

CurveRotationReport verify_curve_rotation(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-100, 100);
  CurveRotationReport report;
  report.pass = true;
  for (int i = 0; i < count; ++i) {
    CurveClass k{Int(dist(rng)), Int(dist(rng))};
    Cx<Rat> z = curve_charge(k);
    CurveClass kr = curve_phi(k);
    Cx<Rat> zr = curve_charge(kr);
    bool rotated = zr.re == z.im && zr.im == Rat(-z.re);
    CurveClass four = curve_phi(curve_phi(curve_phi(curve_phi(k))));
    if (!rotated || !(four == k)) {
      report.pass = false;
      break;
    }
    ++report.checked;
  }
  return report;
}

}  // namespace ellstab
