#include "ellstab/charges.hpp"

#include <utility>

namespace ellstab {

namespace {

Rat ch2_twisted(const ChernClass& g, const DivisorRF& B, const SurfaceGeometry& geom) {
  DivisorRF ch1{g.x, g.y};
  return g.s - pair_div(B, ch1, geom) + Rat(g.n) * pair_div(B, B, geom) / 2;
}

}  // namespace

Slope mu_omega_B(const ChernClass& g, const DivisorRF& omega, const DivisorRF& B,
                 const SurfaceGeometry& geom) {
  if (sgn(omega.p) <= 0 || sgn(omega.q - geom.m * omega.p) < 0)
    fail(errc::invalid_parameter, "omega is not ample (need p > 0 and q/p >= m)");
  if (g.n == 0) return {true, Rat(0)};
  DivisorRF ch1{g.x, g.y};
  Rat num = pair_div(omega, ch1, geom) - Rat(g.n) * pair_div(omega, B, geom);
  return {false, num / g.n};
}

Slope mu_f(const ChernClass& g) {
  if (g.n == 0) return {true, Rat(0)};
  return {false, g.x / g.n};
}

Slope mu_star_B(const ChernClass& g, const DivisorRF& Bbar, const SurfaceGeometry& geom) {
  if (g.n != 0)
    fail(errc::invalid_parameter, "mu* is defined on classes with ch0 = 0");
  if (g.x == 0) return {true, Rat(0)};
  return {false, ch2_twisted(g, Bbar, geom) / g.x};
}

Rat chi_L_onedim(const ChernClass& g, const DivisorRF& L_c1, const SurfaceGeometry& geom) {
  if (g.n != 0)
    fail(errc::invalid_parameter, "chi_L reduction requires ch0 = 0");
  if (L_c1.p != 0)
    fail(errc::invalid_parameter, "c1(L) must be a multiple of the fiber class");
  DivisorRF Bbar{Rat(0), -L_c1.q + geom.kx_f / 2};
  return ch2_twisted(g, Bbar, geom);
}

ChargeSpec spec_omega_b(DivisorS omega, DivisorS B, const SurfaceGeometry& geom,
                        const Rat& branch_lo) {
  ChargeSpec spec;
  spec.family = ChargeFamily::omega_b;
  spec.geom = geom;
  spec.omega = std::move(omega);
  spec.B = std::move(B);
  spec.branch_lo = branch_lo;
  return spec;
}

ChargeSpec spec_ab_b(LaurentSeries a, LaurentSeries b, DivisorS B,
                     const SurfaceGeometry& geom, const Rat& branch_lo) {
  ChargeSpec spec;
  spec.family = ChargeFamily::ab_b;
  spec.geom = geom;
  spec.a = std::move(a);
  spec.b = std::move(b);
  spec.B = std::move(B);
  spec.branch_lo = branch_lo;
  return spec;
}

ChargeSpec spec_ab_b_prime(LaurentSeries a, LaurentSeries b, DivisorS B,
                           const SurfaceGeometry& geom, const Rat& branch_lo) {
  ChargeSpec spec = spec_ab_b(std::move(a), std::move(b), std::move(B), geom, branch_lo);
  spec.family = ChargeFamily::ab_b_prime;
  return spec;
}

ChargeSpec spec_ray(const SurfaceGeometry& geom, const Rat& alpha, const Rat& l,
                    LaurentSeries beta) {
  if (sgn(alpha) <= 0) fail(errc::invalid_parameter, "alpha must be positive");
  ChargeSpec spec;
  spec.family = ChargeFamily::large_volume_ray;
  spec.geom = geom;
  Rat inv_alpha = Rat(1) / alpha;
  Rat fiber_part = geom.m / alpha + 1;
  spec.omega.p = scale(beta, inv_alpha);
  spec.omega.q = scale(beta, fiber_part);
  spec.B = {LaurentSeries::zero(), LaurentSeries::constant(QuadExt(l))};
  spec.branch_lo = Rat(1, 4);
  return spec;
}

ChargeSpec spec_hyperbola(const SurfaceGeometry& geom, const Rat& q, LaurentSeries u,
                          LaurentSeries v) {
  ChargeSpec spec;
  spec.family = ChargeFamily::hyperbola_zl;
  spec.geom = geom;
  spec.omega.q = scale(u, geom.m) + v;
  spec.omega.p = std::move(u);
  spec.B = {LaurentSeries::zero(), LaurentSeries::constant(QuadExt(q))};
  spec.branch_lo = Rat(0);
  return spec;
}

Cx<LaurentSeries> z_of(const ChargeSpec& spec, const ChernClass& g) {
  switch (spec.family) {
    case ChargeFamily::ab_b:
      return z_abB(g, spec.a, spec.b, spec.B, spec.geom, false);
    case ChargeFamily::ab_b_prime:
      return z_abB(g, spec.a, spec.b, spec.B, spec.geom, true);
    case ChargeFamily::omega_b:
    case ChargeFamily::large_volume_ray:
    case ChargeFamily::hyperbola_zl:
      return z_omega_B(g, spec.omega, spec.B, spec.geom);
  }
  fail(errc::invalid_parameter, "unknown charge family");
}

LaurentSeries weight_S(const ChernClass& E, const ChargeSpec& spec, const ChernClass& M) {
  Cx<LaurentSeries> zM = z_of(spec, M);
  if (zM.re.is_zero_rep() && zM.im.is_zero_rep()) {
    if (zM.re.exact && zM.im.exact)
      fail(errc::kernel_class, "Z(M) = 0: the weight against M is undefined");
    fail(errc::indeterminate, "Z(M) vanishes to the working order");
  }
  Cx<LaurentSeries> zE = z_of(spec, E);
  return weight_of(zM, zE);
}

PhaseFunction phase(const ChernClass& g, const ChargeSpec& spec, const Rat& branch_lo) {
  Cx<LaurentSeries> z = z_of(spec, g);
  if (z.re.is_zero_rep() && z.im.is_zero_rep()) {
    if (z.re.exact && z.im.exact)
      fail(errc::kernel_class, "Z(g) = 0: g has no phase");
    fail(errc::indeterminate, "Z(g) vanishes to the working order");
  }
  PhaseFunction ph = phase_of(ComplexLaurentSeries{z.re, z.im}, branch_lo);
  Rat branch_hi = branch_lo + 1;
  if (compare(ph.limit, branch_hi) > 0)
    fail(errc::phase_outside_branch, "Z(g) points outside the branch half-plane");
  return ph;
}

PhaseFunction phase(const ChernClass& g, const ChargeSpec& spec) {
  return phase(g, spec, spec.branch_lo);
}

Cx<Rat> curve_charge(const CurveClass& k) {
  return {Rat(-k.d), Rat(k.r)};
}

}  // namespace ellstab
