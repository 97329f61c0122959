#include "ellstab/quadext.hpp"

#include "ellstab/errors.hpp"

#include <cmath>
#include <utility>

namespace ellstab {

namespace {

// Radicands are kept without square factors below 10^6 so that equal values
// almost always share a representation; equality itself never relies on this.
Int strip_square_factors(Int D, Rat& scale) {
  Int root = sqrt(D);
  if (root * root == D) {
    scale *= Rat(root);
    return Int(0);
  }
  for (Int p = 2; p <= 1000; ++p) {
    Int p2 = p * p;
    while (D % p2 == 0) {
      D /= p2;
      scale *= Rat(p);
    }
  }
  return D;
}

// Operands already satisfy the class invariant; only the b == 0 folding can
// be needed after ring operations.
QuadExt canon_fast(Rat a, Rat b, Int D) {
  QuadExt q;
  q.a = std::move(a);
  if (b == 0) {
    q.b = 0;
    q.D = 0;
  } else {
    q.b = std::move(b);
    q.D = std::move(D);
  }
  return q;
}

Int unify_radicand(const QuadExt& l, const QuadExt& r) {
  if (l.b == 0) return r.D;
  if (r.b == 0) return l.D;
  if (l.D == r.D) return l.D;
  fail(errc::incompatible_radicand,
       "values live in different quadratic extensions: sqrt(" + l.D.str() +
           ") vs sqrt(" + r.D.str() + ")");
}

}  // namespace

QuadExt::QuadExt(const Rat& a_, const Rat& b_, const Int& D_) : a(a_), b(b_), D(D_) {
  if (D < 0) fail(errc::invalid_parameter, "negative radicand " + D.str());
  if (b == 0 || D == 0) {
    b = 0;
    D = 0;
    return;
  }
  Rat scale(1);
  D = strip_square_factors(D, scale);
  b *= scale;
  if (D == 0) {  // the radicand was a perfect square
    a += b;
    b = 0;
  }
}

const Rat& QuadExt::as_rat() const {
  if (b != 0)
    fail(errc::invalid_parameter, "irrational value where a rational is required: " + quad_str(*this));
  return a;
}

QuadExt QuadExt::operator-() const { return canon_fast(-a, -b, D); }

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  Int d = unify_radicand(*this, o);
  *this = canon_fast(a + o.a, b + o.b, d);
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  Int d = unify_radicand(*this, o);
  *this = canon_fast(a - o.a, b - o.b, d);
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Int d = unify_radicand(*this, o);
  Rat rd(d);
  *this = canon_fast(a * o.a + b * o.b * rd, a * o.b + b * o.a, d);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) fail(errc::division_by_zero, "division by zero value");
  if (o.b == 0) {
    *this = canon_fast(a / o.a, b / o.a, D);
    return *this;
  }
  Int d = unify_radicand(*this, o);
  Rat rd(d);
  // Multiply by the conjugate; the norm is nonzero since D is not a square.
  Rat norm = o.a * o.a - o.b * o.b * rd;
  Rat na = (a * o.a - b * o.b * rd) / norm;
  Rat nb = (b * o.a - a * o.b) / norm;
  *this = canon_fast(std::move(na), std::move(nb), d);
  return *this;
}

bool operator==(const QuadExt& l, const QuadExt& r) {
  return l.a == r.a && sgn(l.b) == sgn(r.b) && l.b * l.b * Rat(l.D) == r.b * r.b * Rat(r.D);
}

int sgn(const QuadExt& q) {
  if (q.b == 0) return sgn(q.a);
  if (q.a == 0) return sgn(q.b);
  int c = sgn(q.a * q.a - q.b * q.b * Rat(q.D));
  if (c == 0) return 0;  // unreachable for canonical D, kept for safety
  return c > 0 ? sgn(q.a) : sgn(q.b);
}

double quad_double(const QuadExt& q) {
  double val = rat_double(q.a);
  if (q.b != 0) val += rat_double(q.b) * std::sqrt(q.D.convert_to<double>());
  return val;
}

std::string quad_str(const QuadExt& q) {
  if (q.b == 0) return rat_str(q.a);
  std::string rad = "sqrt(" + q.D.str() + ")";
  std::string irr;
  if (q.b == 1)
    irr = rad;
  else if (q.b == -1)
    irr = "-" + rad;
  else
    irr = rat_str(q.b) + "*" + rad;
  if (q.a == 0) return irr;
  return rat_str(q.a) + (sgn(q.b) > 0 ? "+" : "") + irr;
}

QuadExt sqrt_rational(const Rat& r) {
  if (r < 0) fail(errc::nonpositive_leading, "square root of negative value " + rat_str(r));
  Rat root;
  if (rat_sqrt(r, root)) return QuadExt(root);
  // sqrt(p/q) = sqrt(p*q)/q keeps the radicand integral.
  return QuadExt(Rat(0), Rat(1, denominator(r)), numerator(r) * denominator(r));
}

QuadExt sqrt_quad(const QuadExt& q) {
  int s = sgn(q);
  if (s < 0) fail(errc::nonpositive_leading, "square root of negative value " + quad_str(q));
  if (s == 0) return QuadExt();
  if (q.b == 0) return sqrt_rational(q.a);
  // Look for x + y*sqrt(D) squaring to a + b*sqrt(D): x^2 + y^2 D = a and
  // 2xy = b force (x^2 - y^2 D)^2 = a^2 - b^2 D.
  Rat n = q.a * q.a - q.b * q.b * Rat(q.D);
  Rat t;
  if (n >= 0 && rat_sqrt(n, t)) {
    for (const Rat& tt : {t, Rat(-t)}) {
      Rat x2 = (q.a + tt) / 2;
      Rat x;
      if (x2 > 0 && rat_sqrt(x2, x)) {
        Rat y = q.b / (2 * x);
        QuadExt cand(x, y, q.D);
        if (cand * cand == q) return sgn(cand) > 0 ? cand : -cand;
      }
    }
  }
  fail(errc::nonrational_sqrt,
       "square root of " + quad_str(q) + " leaves the quadratic extension");
}

}  // namespace ellstab
