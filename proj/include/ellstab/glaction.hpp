#pragma once

#include <array>
#include <vector>

#include "ellstab/charges.hpp"
#include "ellstab/lattice.hpp"
#include "ellstab/series.hpp"
#include "ellstab/transform.hpp"

namespace ellstab {

// A lift to the universal cover of GL+(2, R), with entries that may vary with
// the family parameter. The matrix t = [t00 t01; t10 t11] acts on a charge
// Z = Re + i Im through the column (Re, Im); the lift part records how phase
// germs move. Rather than carry a continuous path, the lift is pinned by one
// anchor ray: `anchor` is a quarter-integer phase and `anchor_image` is the
// phase its image direction lands on, so the induced map on germs sends the
// branch (anchor + 2k, anchor + 2k + 1] onto (anchor_image + 2k,
// anchor_image + 2k + 1]. Only matrices that carry some quarter ray to a
// quarter ray admit this anchoring; that family is closed under composition
// and inverse and covers what the charge layer needs: diagonal scalings,
// shears fixing a quarter axis, and quarter rotations.
struct GLLift {
  std::array<LaurentSeries, 4> t;
  Rat anchor{0};
  Rat anchor_image{0};
};

// True when det t is positive for v >> 0.
bool is_glplus(const std::array<LaurentSeries, 4>& t);

// Validates the matrix (det > 0) and the anchor data: both anchors must be
// quarter-integers and t must carry the anchor direction onto the
// anchor_image direction. Anchors are only meaningful mod 2, so lifts
// differing by even translations validate identically.
GLLift make_lift(std::array<LaurentSeries, 4> t, const Rat& anchor,
                 const Rat& anchor_image);

GLLift inverse_lift(const GLLift& lift);

// Matrix product a.t * b.t with the anchor of b and the image of b's anchor
// pushed through a; the germ action composes as Gamma_{ab} = Gamma_a Gamma_b.
// Fails when a moves b's image ray off the quarter grid.
GLLift compose(const GLLift& a, const GLLift& b);

// Lift of R^k * [d0 shear; 0 d1] where R is the clockwise quarter turn
// (multiplication by -i on Re + i Im) and d0, d1 > 0. The anchor is 0 and its
// image is -k/2: the full winding of k quarter turns survives in the lift
// even though the matrix only sees k mod 4.
GLLift quarter_turn_lift(int k, const Rat& d0, const Rat& d1, const Rat& shear);

// Image of a phase germ under the lift: the witness is pushed through the
// matrix and the result is re-pinned to the branch the anchor data selects.
PhaseFunction gamma_T_apply(const PhaseFunction& phi, const GLLift& lift);

struct ActedCharge {
  ComplexLaurentSeries z;
  PhaseFunction phase;
};

// Right action on a charge-with-phase pair: (Z, phi) . T =
// (T^{-1} Z, Gamma_{T^{-1}} phi), so acting by T then by S equals acting by
// T * S.
ActedCharge act_on_charge(const ComplexLaurentSeries& z,
                          const PhaseFunction& phi, const GLLift& lift);

enum class CommutationMode { numeric, series, gepner };

inline constexpr double commutation_tolerance = 1e-9;

struct CommutationEntry {
  ChernClass source;
  double residual = 0;
  bool exact_zero = false;
};

struct CommutationCheck {
  CommutationMode mode = CommutationMode::numeric;
  // numeric mode: family parameter at which to evaluate.
  double v = 10;
  // series mode: residuals must vanish through this order.
  int order = 8;
  int random_classes = 100;
  unsigned seed = 20240817u;
};

struct CommutationReport {
  bool pass = false;
  CommutationMode mode = CommutationMode::numeric;
  double max_residual = 0;
  bool exact = false;
  // gepner mode: whether the transformed polarization data came back equal to
  // the input polarization data.
  bool omega_fixed = false;
  int order = 0;
  std::vector<CommutationEntry> entries;
};

// Checks that the fiberwise transform intertwines the two charge families up
// to the expected GL+ matrix: with u, beta solved from the geometry,
//   Re Z_{omega,B}(Phi gamma) = (alpha / beta) Im Z_{omegabar,Bbar}(gamma)
//   Im Z_{omega,B}(Phi gamma) = -u Re Z_{omegabar,Bbar}(gamma)
// where omega = u Theta + (u m + v) f with B = q f on one side, and
// omegabar = (beta/alpha)(Theta + m f) + beta f with Bbar = (e/2 + q) f on
// the other. Modes: `numeric` evaluates in doubles at one parameter value,
// `series` proves the identity coefficientwise through `order`, `gepner`
// works in exact closed form at the self-dual parameter and additionally
// checks the fixed-point identity there (the transform composed with the
// compensating twist acts on charges as the exact matrix [0 -1/u; u 0]).
CommutationReport verify_commutation(const SurfaceGeometry& geom,
                                     const Rat& alpha, const Rat& q,
                                     const CommutationCheck& check);

struct CurveRotationReport {
  bool pass = false;
  int checked = 0;
};

// Checks that the induced map on curve classes rotates the curve charge by
// a quarter turn: Z(curve_phi k) = -i Z(k), and that four applications are
// the identity.
CurveRotationReport verify_curve_rotation(int count, unsigned seed);

}  // namespace ellstab
