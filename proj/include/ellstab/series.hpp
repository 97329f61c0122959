#pragma once

#include "ellstab/quadext.hpp"

#include <optional>
#include <vector>

namespace ellstab {

enum class Cmp { LT, EQ, GT, INDETERMINATE };

// Default number of retained orders when an operation on exact inputs has an
// unbounded provable order (inverses, square roots).
inline constexpr int default_order = 16;

// Truncated convergent Laurent series in w = 1/v, viewed near v = infinity
// (w = 0+). Negative degrees are positive powers of v. A series is either
// `exact` (all unlisted coefficients are genuinely zero; a finite Laurent
// polynomial) or truncated: coefficients are known precisely through
// truncation_order and unknown beyond it.
//
// Canonical form: the stored leading coefficient is nonzero; the zero series
// stores no coefficients at all. For truncated series the coefficient vector
// covers [lowest_degree, truncation_order] completely; for exact series it
// ends at the last nonzero coefficient.
struct LaurentSeries {
  int lowest_degree = 0;
  std::vector<QuadExt> coeffs;
  int truncation_order = 0;
  bool exact = true;

  static LaurentSeries zero() { return {}; }
  static LaurentSeries zero_through(int order);
  static LaurentSeries constant(const QuadExt& c) { return monomial(c, 0); }
  static LaurentSeries monomial(const QuadExt& c, int degree);
  // 1/v = w as a series.
  static LaurentSeries w() { return monomial(QuadExt(Rat(1)), 1); }
  static LaurentSeries v() { return monomial(QuadExt(Rat(1)), -1); }

  bool is_zero_rep() const { return coeffs.empty(); }
  // Degrees with known coefficients reach through this (large sentinel when
  // exact).
  int known_through() const;
  // Coefficient of w^k; k must not exceed known_through().
  QuadExt coeff(int k) const;
};

// Normalizes a raw coefficient window [lowest, lowest + cs.size()) known
// through `order` into canonical form.
LaurentSeries make_series(int lowest, std::vector<QuadExt> cs, int order, bool exact);

LaurentSeries operator-(const LaurentSeries& f);
LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g);
// Division defers to inverse_series; `target` only matters when every input
// is exact (otherwise provable truncation wins).
LaurentSeries div_series(const LaurentSeries& f, const LaurentSeries& g,
                         int target = default_order);
LaurentSeries operator/(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries inverse_series(const LaurentSeries& g, int target = default_order);
LaurentSeries scale(const LaurentSeries& f, const QuadExt& c);
// f with knowledge cut back to min(order, known_through()); always inexact.
LaurentSeries truncate_to(const LaurentSeries& f, int order);

// g with g*g == f through the result's truncation order; the leading
// coefficient must sit at an even degree and be positive. The root's leading
// coefficient may land in the quadratic extension.
LaurentSeries sqrt_series(const LaurentSeries& f, int target = default_order);

// Total order by the sign of the leading coefficient of f - g. EQ requires
// both inputs exact; when the difference is zero only as far as truncation
// reaches, the answer is INDETERMINATE.
Cmp compare_order(const LaurentSeries& f, const LaurentSeries& g);

struct Theta {
  int sign = 0;                  // sign of the leading coefficient
  std::optional<int> exponent;   // leading degree in w; empty for the zero series
};
Theta theta_of(const LaurentSeries& f);

struct Eval {
  double value = 0;
  double tail_bound = 0;  // crude honesty flag: magnitude of the last retained term
};
Eval eval_at(const LaurentSeries& f, const Rat& v);

// True when every coefficient through degree `order` is known and zero.
bool is_zero_through(const LaurentSeries& f, int order);

struct ComplexLaurentSeries {
  LaurentSeries re, im;

  static ComplexLaurentSeries from_real(LaurentSeries r);
  static ComplexLaurentSeries constant(const QuadExt& re, const QuadExt& im);

  bool is_zero_rep() const { return re.is_zero_rep() && im.is_zero_rep(); }
  bool exact() const { return re.exact && im.exact; }
};

ComplexLaurentSeries operator-(const ComplexLaurentSeries& z);
ComplexLaurentSeries conj(const ComplexLaurentSeries& z);
ComplexLaurentSeries operator+(const ComplexLaurentSeries& a, const ComplexLaurentSeries& b);
ComplexLaurentSeries operator-(const ComplexLaurentSeries& a, const ComplexLaurentSeries& b);
ComplexLaurentSeries operator*(const ComplexLaurentSeries& a, const ComplexLaurentSeries& b);
ComplexLaurentSeries div_series(const ComplexLaurentSeries& a, const ComplexLaurentSeries& b,
                                int target = default_order);
ComplexLaurentSeries operator/(const ComplexLaurentSeries& a, const ComplexLaurentSeries& b);

// Exact representation of a phase-germ limit: r = even + principal where
// `even` is an even integer and principal in (-1, 1] is the normalized
// argument of the direction x + iy (the witness's leading coefficient).
// Keeping the direction instead of a printed number lets every comparison be
// an exact sign computation; the numeric value of r is transcendental for
// generic directions.
struct PhaseLimit {
  int even = 0;
  QuadExt x, y;

  PhaseLimit add_int(int j) const;
  double to_double() const;
};

// -1/0/+1 ordering of the underlying real limits.
int compare(const PhaseLimit& a, const PhaseLimit& b);
// Compares the limit against a rational number; the rational must be a
// quarter-integer (the only branch endpoints the exact classifier supports).
int compare(const PhaseLimit& a, const Rat& t);

// Phase germ of a nonzero complex series: phi(v) with
// z(v) in R_{>0} e^{i pi phi(v)} for v >> 0, pinned to a branch by the limit.
struct PhaseFunction {
  ComplexLaurentSeries witness;
  PhaseLimit limit;
};

// Branch hint is the half-open interval (hint_a, hint_a + 2], which contains
// exactly one admissible limit; hint_a must be a quarter-integer.
PhaseFunction phase_of(const ComplexLaurentSeries& z, const Rat& hint_a);

// The germ phi + j (witness picks up a sign (-1)^j, the limit translates).
PhaseFunction phase_add_int(const PhaseFunction& phi, int j);

// Comparison of germs at v -> infinity. Equal limits are refined through the
// coefficients of witness_1 * conj(witness_2): its argument agrees with that
// of the quotient, and the sign of the first nonvanishing imaginary
// coefficient decides. Returns LT/EQ/GT; when truncation runs out on inexact
// input before a decision, reports errc::indeterminate instead of guessing.
Cmp compare_phase(const PhaseFunction& a, const PhaseFunction& b);

}  // namespace ellstab
