#pragma once

#include "ellstab/rational.hpp"

#include <string>

namespace ellstab {

// Value a + b*sqrt(D) with a, b rational and D a nonnegative integer.
// Exactly one quadratic extension is supported: arithmetic between two values
// whose radicands differ (and are both in play, b != 0) is rejected rather
// than approximated. Canonical form: b == 0 implies D == 0; D carries no
// square factor below 10^6, and is never a perfect square.
struct QuadExt {
  Rat a{0}, b{0};
  Int D{0};

  QuadExt() = default;
  QuadExt(const Rat& value) : a(value) {}          // NOLINT: implicit by design
  QuadExt(int value) : a(value) {}                 // NOLINT
  QuadExt(const Rat& a_, const Rat& b_, const Int& D_);

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  // Throws when the value is genuinely irrational.
  const Rat& as_rat() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
  friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
  friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
  friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }

  // Equality is representation-independent (compares the real numbers).
  friend bool operator==(const QuadExt& l, const QuadExt& r);
  friend bool operator!=(const QuadExt& l, const QuadExt& r) { return !(l == r); }
};

// Sign of the real number a + b*sqrt(D).
int sgn(const QuadExt& q);

double quad_double(const QuadExt& q);

// "p/q" for rational values, "a+b*sqrt(D)" otherwise (used in messages; JSON
// emission has its own structured form).
std::string quad_str(const QuadExt& q);

// Exact square root of a nonnegative rational; irrational roots land in the
// extension. Negative input reports nonpositive_leading.
QuadExt sqrt_rational(const Rat& r);

// Square root within the extension; succeeds for rationals and for perfect
// squares of the field Q(sqrt(D)), otherwise reports nonrational_sqrt.
QuadExt sqrt_quad(const QuadExt& q);

inline QuadExt inverse(const QuadExt& q) { return QuadExt(Rat(1)) / q; }

}  // namespace ellstab
