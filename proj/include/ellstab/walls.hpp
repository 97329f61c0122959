#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellstab/charges.hpp"
#include "ellstab/lattice.hpp"

namespace ellstab {

enum class FamilyKind { ray, hyperbola };

// One-parameter family of charges used for wall scanning. The ray keeps the
// direction omega-tilde = (1/alpha)(Theta + m f) + f and scales it,
// omega-bar = beta omega-tilde with B-bar = l f, beta running over [lo, hi].
// The hyperbola keeps B = q f and moves omega = u Theta + (u m + v) f along
// the matching curve (m - e/2) u^2 + v u = m + alpha - e, v running over
// [lo, hi]. The two are linked by l = e/2 + q.
struct StabilityFamily {
  FamilyKind kind = FamilyKind::ray;
  SurfaceGeometry geom;
  Rat alpha{1};
  // l for the ray, q for the hyperbola.
  Rat bfield{0};
  Rat lo{0};
  Rat hi{1};
};

StabilityFamily ray_family(const SurfaceGeometry& geom, const Rat& alpha,
                           const Rat& l, const Rat& lo, const Rat& hi);
StabilityFamily hyperbola_family(const SurfaceGeometry& geom, const Rat& alpha,
                                 const Rat& q, const Rat& lo, const Rat& hi);

// Weight of cand against gamma along the ray: S(beta) = beta (p + q beta^2).
struct RayPencil {
  Rat p;
  Rat q;
};
RayPencil ray_pencil(const ChernClass& cand, const ChernClass& gamma,
                     const StabilityFamily& family);

// Exact weight of cand against gamma on the hyperbola at rational v >= 0;
// the value lives in the quadratic extension generated by u(v).
QuadExt hyperbola_weight(const ChernClass& cand, const ChernClass& gamma,
                         const StabilityFamily& family, const Rat& v);

// A parameter value where the candidate's charge aligns with the target's:
// the weight vanishes and changes sign across it. This is a numerical wall;
// whether an actual destabilizing subobject realizes it is beyond the
// lattice.
struct Wall {
  double param = 0;
  // Closed-form root when the family admits one (the ray always does:
  // beta* is the square root of a rational).
  std::optional<QuadExt> exact;
  ChernClass destabilizer;
  ChernClass target;
};

// Integral classes gamma' (xi2 = 0, coordinates in [-box, box], ch2 on the
// half-integer grid) that could mark a wall for gamma somewhere on the
// family:
//   - charge window 0 <= Im Z(gamma') <= Im Z(gamma), non-strict. On the ray
//     this is parameter-free; on the hyperbola it is evaluated exactly at the
//     interval midpoint (classes can drift in and out of the upper half
//     plane along the family, so one sample parameter pins the list).
//   - Bogomolov-type bound on both gamma' and gamma - gamma': Delta >= 0 on
//     the ray, Delta >= e (ch0^2 - (f.ch1)^2) on the hyperbola (the same
//     condition seen through the fiberwise transform).
//   - candidates whose weight against gamma vanishes identically are pruned
//     (checked via the transform preimage, whose ray weight is a polynomial
//     pencil in beta).
// Partner pairs gamma' and gamma - gamma' are both listed when both qualify;
// they mark the same walls from the two sides of the defining sequence.
std::vector<ChernClass> candidate_classes(const ChernClass& gamma,
                                          const StabilityFamily& family,
                                          int box);

// All walls for gamma on the family, one entry per (parameter, candidate)
// pair, sorted by parameter then destabilizer. Ray roots are closed-form
// (S/beta is linear in beta^2) and filtered to [lo, hi] exactly; hyperbola
// roots come from a sign scan over grid_size cells refined by bisection to
// relative width 1e-10 (grid_size is ignored for the ray).
std::vector<Wall> find_walls(const ChernClass& gamma,
                             const StabilityFamily& family, int box,
                             int grid_size);

struct CorrespondenceReport {
  bool pass = false;
  // Exact agreement of sign(weight) on the two sides at every sampled v.
  bool signs_agree = false;
  int candidates = 0;
  // (sample, candidate) sign comparisons performed.
  int samples_checked = 0;
  // Ray walls whose transported parameter v(beta) lands in [v_lo, v_hi].
  int transported = 0;
  int hyperbola_walls = 0;
  int matched = 0;
  double max_root_gap = 0;
};

// Checks the ray <-> hyperbola wall correspondence induced by the fiberwise
// transform for the ray family's data (the hyperbola side uses q = l - e/2).
// At `samples` rational v values, the sign of the exact hyperbola weight of
// (phi(gamma'), phi(gamma)) must equal the sign of p + q beta^2(v) from the
// ray pencil, for every ray candidate; the linear map between the two charges
// has positive determinant, so the signs must agree outright. Ray walls are
// then transported through beta(v) and matched against the scanned hyperbola
// walls (relative tolerance 1e-8), destabilizers related by the transform up
// to shift (the scan lists whichever of +-phi(gamma') sits in the upper half
// plane). Hyperbola walls whose transform preimage leaves the integral
// lattice have no ray-side counterpart in the box and are exempt from the
// reverse match; they are still counted in hyperbola_walls.
CorrespondenceReport correspondence_check(const ChernClass& gamma,
                                          const StabilityFamily& ray,
                                          const Rat& v_lo, const Rat& v_hi,
                                          int box, int samples);

struct BoundednessReport {
  bool any = false;
  double largest = 0;
  ChernClass destabilizer;
  // Scanning is evidence, not proof: the note says so explicitly.
  std::string note;
};

// Scans [lo, hi] (overriding the family's own interval) for walls and
// reports the largest parameter found, if any. Absence of walls in the
// scanned window does not certify that none exist beyond it or between grid
// cells.
BoundednessReport boundedness_probe(const ChernClass& gamma,
                                    const StabilityFamily& family,
                                    const Rat& lo, const Rat& hi, int box,
                                    int grid_size);

}  // namespace ellstab
