#pragma once

#include "ellstab/rational.hpp"

namespace ellstab {

// Geometry of the fibration: e = -Theta^2, and m is a threshold such that
// Theta + k f is ample for every k >= m. kx_f is the f-coefficient of the
// canonical class (defaults to e; overridable for product-like surfaces).
struct SurfaceGeometry {
  Rat e, m, kx_f;
};

SurfaceGeometry make_geometry(const Rat& e, const Rat& m);
SurfaceGeometry make_geometry(const Rat& e, const Rat& m, const Rat& kx_f);

// Divisor p*Theta + q*f in the rational span of the section and the fiber.
struct DivisorRF {
  Rat p{0}, q{0};
};

inline DivisorRF operator+(const DivisorRF& a, const DivisorRF& b) {
  return {a.p + b.p, a.q + b.q};
}
inline DivisorRF operator-(const DivisorRF& a) { return {-a.p, -a.q}; }

// Intersection pairing on span{Theta, f}: Theta^2 = -e, Theta.f = 1, f^2 = 0.
Rat pair_div(const DivisorRF& a, const DivisorRF& b, const SurfaceGeometry& geom);

// Numerical Chern character: n = ch0; ch1 = x*Theta + y*f + xi with xi
// orthogonal to Theta and f and xi^2 = xi2; s = ch2. Only these five numbers
// are ever consumed by the slope, charge and discriminant formulas.
struct ChernClass {
  Rat n{0}, x{0}, y{0}, xi2{0}, s{0};
};

inline bool operator==(const ChernClass& a, const ChernClass& b) {
  return a.n == b.n && a.x == b.x && a.y == b.y && a.xi2 == b.xi2 && a.s == b.s;
}
inline bool operator!=(const ChernClass& a, const ChernClass& b) { return !(a == b); }

inline Rat f_ch1(const ChernClass& g) { return g.x; }
Rat theta_ch1(const ChernClass& g, const SurfaceGeometry& geom);
Rat ch1_sq(const ChernClass& g, const SurfaceGeometry& geom);

// e^{-B} ch: the B-field twist. xi2 is untouched (B has no residual part).
ChernClass twist(const ChernClass& g, const DivisorRF& B, const SurfaceGeometry& geom);

// Delta = ch1^2 - 2 ch0 ch2; invariant under twist and shift.
Rat discriminant(const ChernClass& g, const SurfaceGeometry& geom);

// Class of g[1]: every field negates except xi2 (the residual negates, its
// self-intersection does not). The serializer documents this convention.
ChernClass shift(const ChernClass& g);

// Addition is only defined when no residual data can interfere: both xi2
// must be 0 (cross terms of residuals are not recorded in this model).
ChernClass add_classes(const ChernClass& a, const ChernClass& b);

// a - b for b with xi2 = 0; the residual of a passes through unchanged.
ChernClass sub_residual_free(const ChernClass& a, const ChernClass& b);

// Validator for classes of honest complexes: n, x, y integers, s a
// half-integer. xi2 is not constrained (it is a self-intersection datum).
bool is_integral_class(const ChernClass& g);

}  // namespace ellstab
