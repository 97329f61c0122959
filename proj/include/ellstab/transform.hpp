#pragma once

#include "ellstab/lattice.hpp"

namespace ellstab {

// Rank and degree on the elliptic-curve toy model.
struct CurveClass {
  Int r{0}, d{0};
};

inline bool operator==(const CurveClass& a, const CurveClass& b) {
  return a.r == b.r && a.d == b.d;
}

// Action of the relative Fourier-Mukai transform on the numerical lattice.
// Derived accessors transform as f.ch1 -> -ch0 and
// Theta.ch1 -> (ch2 - e*f.ch1/2) + e*ch0; xi2 passes through (the residual
// component negates, its square does not change).
ChernClass phi(const ChernClass& g, const SurfaceGeometry& geom);

// Quasi-inverse on the lattice: phi_hat = (-1) o phi^{-1}, so that
// phi_hat(phi(g)) = phi(phi_hat(g)) = -g (the [-1] shift at class level).
ChernClass phi_hat(const ChernClass& g, const SurfaceGeometry& geom);

// Curve-level transform: (r, d) -> (d, -r), i.e. multiplication by -i on the
// charge -d + i r. Order four.
CurveClass curve_phi(const CurveClass& k);

}  // namespace ellstab
