#include "ellstab/lattice.hpp"

#include "ellstab/errors.hpp"

namespace ellstab {

SurfaceGeometry make_geometry(const Rat& e, const Rat& m) { return make_geometry(e, m, e); }

SurfaceGeometry make_geometry(const Rat& e, const Rat& m, const Rat& kx_f) {
  if (e < 0) fail(errc::invalid_parameter, "e must be nonnegative, got " + rat_str(e));
  if (m <= e)
    fail(errc::invalid_parameter,
         "ample threshold m must exceed e: m = " + rat_str(m) + ", e = " + rat_str(e));
  return {e, m, kx_f};
}

Rat pair_div(const DivisorRF& a, const DivisorRF& b, const SurfaceGeometry& geom) {
  return -geom.e * a.p * b.p + a.p * b.q + b.p * a.q;
}

Rat theta_ch1(const ChernClass& g, const SurfaceGeometry& geom) {
  return -geom.e * g.x + g.y;
}

Rat ch1_sq(const ChernClass& g, const SurfaceGeometry& geom) {
  return -geom.e * g.x * g.x + 2 * g.x * g.y + g.xi2;
}

ChernClass twist(const ChernClass& g, const DivisorRF& B, const SurfaceGeometry& geom) {
  Rat b_ch1 = B.p * theta_ch1(g, geom) + B.q * f_ch1(g);
  ChernClass t = g;
  t.x = g.x - g.n * B.p;
  t.y = g.y - g.n * B.q;
  t.s = g.s - b_ch1 + g.n * pair_div(B, B, geom) / 2;
  return t;
}

Rat discriminant(const ChernClass& g, const SurfaceGeometry& geom) {
  return ch1_sq(g, geom) - 2 * g.n * g.s;
}

ChernClass shift(const ChernClass& g) { return {-g.n, -g.x, -g.y, g.xi2, -g.s}; }

ChernClass add_classes(const ChernClass& a, const ChernClass& b) {
  if (a.xi2 != 0 || b.xi2 != 0)
    fail(errc::invalid_parameter,
         "class addition needs xi2 = 0 on both summands (residual cross terms unknown)");
  return {a.n + b.n, a.x + b.x, a.y + b.y, Rat(0), a.s + b.s};
}

ChernClass sub_residual_free(const ChernClass& a, const ChernClass& b) {
  if (b.xi2 != 0)
    fail(errc::invalid_parameter, "subtrahend must have xi2 = 0, got " + rat_str(b.xi2));
  return {a.n - b.n, a.x - b.x, a.y - b.y, a.xi2, a.s - b.s};
}

bool is_integral_class(const ChernClass& g) {
  return denominator(g.n) == 1 && denominator(g.x) == 1 && denominator(g.y) == 1 &&
         denominator(Rat(2 * g.s)) == 1;
}

}  // namespace ellstab
