#pragma once

#include "ellstab/errors.hpp"
#include "ellstab/lattice.hpp"
#include "ellstab/series.hpp"
#include "ellstab/transform.hpp"

namespace ellstab {

// Complex value over a coefficient ring K: QuadExt for closed-form numerics,
// LaurentSeries for the polynomial charge families. The same formulas serve
// both, so the charge kernels below are templates.
template <class K>
struct Cx {
  K re, im;
};

template <class K>
struct DivisorOf {
  K p, q;
};

using DivisorQ = DivisorOf<QuadExt>;
using DivisorS = DivisorOf<LaurentSeries>;

template <class K>
K lift_rat(const Rat& r);
template <>
inline QuadExt lift_rat<QuadExt>(const Rat& r) {
  return QuadExt(r);
}
template <>
inline LaurentSeries lift_rat<LaurentSeries>(const Rat& r) {
  return LaurentSeries::constant(QuadExt(r));
}
template <>
inline double lift_rat<double>(const Rat& r) {
  return rat_double(r);
}

template <class K>
DivisorOf<K> lift_divisor(const DivisorRF& d) {
  return {lift_rat<K>(d.p), lift_rat<K>(d.q)};
}

// Sign of the value for v >> 0; 0 for zero or for a truncated series that is
// zero as far as it is known.
template <class K>
int leading_sign(const K& value);
template <>
inline int leading_sign<QuadExt>(const QuadExt& q) {
  return sgn(q);
}
template <>
inline int leading_sign<LaurentSeries>(const LaurentSeries& f) {
  return theta_of(f).sign;
}
template <>
inline int leading_sign<double>(const double& x) {
  return x > 0 ? 1 : x < 0 ? -1 : 0;
}

template <class K>
K pair_of(const DivisorOf<K>& a, const DivisorOf<K>& b, const SurfaceGeometry& geom) {
  return a.p * b.q + b.p * a.q - lift_rat<K>(geom.e) * (a.p * b.p);
}

// Z_{omega,B} = -ch2^B + (omega^2/2) ch0^B + i omega.ch1^B. omega must be
// ample: Theta-coefficient positive and f/Theta ratio at least m.
template <class K>
Cx<K> z_omega_B(const ChernClass& g, const DivisorOf<K>& omega, const DivisorOf<K>& B,
                const SurfaceGeometry& geom) {
  if (leading_sign(omega.p) <= 0 ||
      leading_sign<K>(omega.q - lift_rat<K>(geom.m) * omega.p) < 0)
    fail(errc::invalid_parameter, "omega is not ample (need p > 0 and q/p >= m)");
  DivisorOf<K> ch1{lift_rat<K>(g.x), lift_rat<K>(g.y)};
  K n = lift_rat<K>(g.n);
  K half = lift_rat<K>(Rat(1, 2));
  K s_B = lift_rat<K>(g.s) - pair_of(B, ch1, geom) + n * pair_of(B, B, geom) * half;
  K re = -s_B + n * pair_of(omega, omega, geom) * half;
  K im = pair_of(omega, ch1, geom) - n * pair_of(omega, B, geom);
  return {re, im};
}

// Z_{a,b,B} = -ch2^B + a ch0^B + i (Theta.ch1^B + b f.ch1^B); the primed
// variant applies the shear (1, -f.B; 0, 1) on (Re, Im).
template <class K>
Cx<K> z_abB(const ChernClass& g, const K& a, const K& b, const DivisorOf<K>& B,
            const SurfaceGeometry& geom, bool primed) {
  if (leading_sign(a) <= 0 || leading_sign(b) <= 0)
    fail(errc::invalid_parameter, "the (a, b) charge parameters must be positive");
  DivisorOf<K> ch1{lift_rat<K>(g.x), lift_rat<K>(g.y)};
  K n = lift_rat<K>(g.n);
  K half = lift_rat<K>(Rat(1, 2));
  K s_B = lift_rat<K>(g.s) - pair_of(B, ch1, geom) + n * pair_of(B, B, geom) * half;
  K theta_dot_B = B.q - lift_rat<K>(geom.e) * B.p;
  K im = (lift_rat<K>(theta_ch1(g, geom)) - n * theta_dot_B) +
         b * (lift_rat<K>(g.x) - n * B.p);
  K re = -s_B + a * n;
  if (primed) re = re - B.p * im;
  return {re, im};
}

template <class K>
Cx<K> z_abB_prime(const ChernClass& g, const K& a, const K& b, const DivisorOf<K>& B,
                  const SurfaceGeometry& geom) {
  return z_abB(g, a, b, B, geom, true);
}

// Determinant weight S_{Z,M}(E) = -Im Z(M) Re Z(E) + Re Z(M) Im Z(E).
template <class K>
K weight_of(const Cx<K>& zM, const Cx<K>& zE) {
  return zM.re * zE.im - zM.im * zE.re;
}

// Slope values; infinite encodes the rank-zero (or torsion) convention.
struct Slope {
  bool infinite = false;
  Rat value{0};
};

Slope mu_omega_B(const ChernClass& g, const DivisorRF& omega, const DivisorRF& B,
                 const SurfaceGeometry& geom);
Slope mu_f(const ChernClass& g);
// ch2^{Bbar} / f.ch1 for 1-dimensional classes (n = 0 required).
Slope mu_star_B(const ChernClass& g, const DivisorRF& Bbar, const SurfaceGeometry& geom);

// L-twisted Euler characteristic of a 1-dimensional class, reduced to
// ch2^{Bbar} with Bbar = -c1(L) + (K_X/2), both in R f. geom.kx_f supplies
// the f-coefficient of K_X.
Rat chi_L_onedim(const ChernClass& g, const DivisorRF& L_c1, const SurfaceGeometry& geom);

enum class ChargeFamily { omega_b, ab_b, ab_b_prime, large_volume_ray, hyperbola_zl };

// A charge family member with everything needed to evaluate it on classes.
// All parameters are stored as series; exact numeric parameters are constant
// exact series, so one evaluation path serves both regimes. branch_lo fixes
// the default phase branch (branch_lo, branch_lo + 1].
struct ChargeSpec {
  ChargeFamily family = ChargeFamily::omega_b;
  SurfaceGeometry geom;
  DivisorS omega;
  LaurentSeries a, b;
  DivisorS B;
  Rat branch_lo{0};
};

ChargeSpec spec_omega_b(DivisorS omega, DivisorS B, const SurfaceGeometry& geom,
                        const Rat& branch_lo = Rat(0));
ChargeSpec spec_ab_b(LaurentSeries a, LaurentSeries b, DivisorS B,
                     const SurfaceGeometry& geom, const Rat& branch_lo = Rat(0));
ChargeSpec spec_ab_b_prime(LaurentSeries a, LaurentSeries b, DivisorS B,
                           const SurfaceGeometry& geom, const Rat& branch_lo = Rat(0));
// Large-volume ray: omega = beta omega_tilde with
// omega_tilde = (1/alpha)(Theta + m f) + f and B-field l f; branch (1/4, 5/4].
ChargeSpec spec_ray(const SurfaceGeometry& geom, const Rat& alpha, const Rat& l,
                    LaurentSeries beta);
// Hyperbola family: omega = u (Theta + m f) + v f, B-field q f; branch (0, 1].
ChargeSpec spec_hyperbola(const SurfaceGeometry& geom, const Rat& q, LaurentSeries u,
                          LaurentSeries v);

Cx<LaurentSeries> z_of(const ChargeSpec& spec, const ChernClass& g);

// S_{Z,M}(E); errors when Z(M) vanishes (exactly: kernel class; only through
// truncation: indeterminate).
LaurentSeries weight_S(const ChernClass& E, const ChargeSpec& spec, const ChernClass& M);

// Phase of Z(g) pinned to the branch (branch_lo, branch_lo + 1]. A value
// whose phase lands in the other half of the mod-2 window is reported as
// phase_outside_branch; Z(g) = 0 is a kernel class, not a phase.
PhaseFunction phase(const ChernClass& g, const ChargeSpec& spec, const Rat& branch_lo);
PhaseFunction phase(const ChernClass& g, const ChargeSpec& spec);

// Elliptic-curve toy charge Z = -d + i r.
Cx<Rat> curve_charge(const CurveClass& k);

}  // namespace ellstab
