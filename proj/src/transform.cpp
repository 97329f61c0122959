#include "ellstab/transform.hpp"

namespace ellstab {

ChernClass phi(const ChernClass& g, const SurfaceGeometry& geom) {
  const Rat& e = geom.e;
  Rat c = theta_ch1(g, geom), d = f_ch1(g);
  ChernClass t;
  t.n = d;
  t.x = -g.x + (d - g.n);  // = -ch0(g)
  t.y = -g.y + d * e + (c - e * d / 2 + g.s);
  t.xi2 = g.xi2;
  t.s = -c - d * e + g.n * e / 2;
  return t;
}

namespace {

// phi is affine-linear and invertible; solving its formulas for the input:
// n = -x', x = n', y = -s' - e*x'/2, s = y' + e*n'/2.
ChernClass phi_inverse(const ChernClass& g, const SurfaceGeometry& geom) {
  const Rat& e = geom.e;
  ChernClass t;
  t.n = -g.x;
  t.x = g.n;
  t.y = -g.s - e * g.x / 2;
  t.xi2 = g.xi2;
  t.s = g.y + e * g.n / 2;
  return t;
}

}  // namespace

ChernClass phi_hat(const ChernClass& g, const SurfaceGeometry& geom) {
  return shift(phi_inverse(g, geom));
}

CurveClass curve_phi(const CurveClass& k) { return {k.d, -k.r}; }

}  // namespace ellstab
