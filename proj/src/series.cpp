#include "ellstab/series.hpp"

#include "ellstab/errors.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace ellstab {

namespace {

// Sentinel for "known to every order"; small enough that degree arithmetic
// never overflows int.
constexpr int kInf = INT_MAX / 4;

// First degree at which the series could be nonzero for all we know.
int effective_low(const LaurentSeries& f) {
  if (!f.is_zero_rep()) return f.lowest_degree;
  return f.exact ? kInf : f.truncation_order + 1;
}

int stored_high(const LaurentSeries& f) {
  return f.lowest_degree + static_cast<int>(f.coeffs.size()) - 1;
}

}  // namespace

LaurentSeries LaurentSeries::zero_through(int order) {
  LaurentSeries z;
  z.truncation_order = order;
  z.exact = false;
  return z;
}

LaurentSeries LaurentSeries::monomial(const QuadExt& c, int degree) {
  if (c.is_zero()) return zero();
  LaurentSeries f;
  f.lowest_degree = degree;
  f.coeffs = {c};
  f.truncation_order = degree;
  f.exact = true;
  return f;
}

int LaurentSeries::known_through() const { return exact ? kInf : truncation_order; }

QuadExt LaurentSeries::coeff(int k) const {
  if (k > known_through())
    fail(errc::invalid_parameter, "coefficient requested beyond the provable truncation order");
  if (coeffs.empty() || k < lowest_degree || k > stored_high(*this)) return QuadExt();
  return coeffs[static_cast<std::size_t>(k - lowest_degree)];
}

LaurentSeries make_series(int lowest, std::vector<QuadExt> cs, int order, bool exact) {
  std::size_t lead = 0;
  while (lead < cs.size() && cs[lead].is_zero()) {
    ++lead;
    ++lowest;
  }
  if (lead > 0) cs.erase(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(lead));
  if (exact) {
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    if (cs.empty()) return LaurentSeries::zero();
    LaurentSeries f;
    f.lowest_degree = lowest;
    f.truncation_order = lowest + static_cast<int>(cs.size()) - 1;
    f.coeffs = std::move(cs);
    f.exact = true;
    return f;
  }
  if (cs.empty() || order < lowest) return LaurentSeries::zero_through(order);
  cs.resize(static_cast<std::size_t>(order - lowest) + 1);
  LaurentSeries f;
  f.lowest_degree = lowest;
  f.truncation_order = order;
  f.coeffs = std::move(cs);
  f.exact = false;
  return f;
}

LaurentSeries operator-(const LaurentSeries& f) {
  LaurentSeries g = f;
  for (auto& c : g.coeffs) c = -c;
  return g;
}

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
  bool ex = f.exact && g.exact;
  int lo = std::min(effective_low(f), effective_low(g));
  if (ex) {
    if (lo >= kInf) return LaurentSeries::zero();
    int hi = std::max(f.is_zero_rep() ? lo - 1 : stored_high(f),
                      g.is_zero_rep() ? lo - 1 : stored_high(g));
    std::vector<QuadExt> cs;
    cs.reserve(static_cast<std::size_t>(hi - lo) + 1);
    for (int k = lo; k <= hi; ++k) cs.push_back(f.coeff(k) + g.coeff(k));
    return make_series(lo, std::move(cs), 0, true);
  }
  int K = std::min(f.known_through(), g.known_through());
  if (lo > K) return LaurentSeries::zero_through(K);
  std::vector<QuadExt> cs;
  cs.reserve(static_cast<std::size_t>(K - lo) + 1);
  for (int k = lo; k <= K; ++k) cs.push_back(f.coeff(k) + g.coeff(k));
  return make_series(lo, std::move(cs), K, false);
}

LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return f + (-g); }

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
  if ((f.is_zero_rep() && f.exact) || (g.is_zero_rep() && g.exact)) return LaurentSeries::zero();
  int K = std::min(f.known_through() + effective_low(g), g.known_through() + effective_low(f));
  if (f.is_zero_rep() || g.is_zero_rep()) return LaurentSeries::zero_through(K);
  bool ex = f.exact && g.exact;
  int lo = f.lowest_degree + g.lowest_degree;
  int hi = ex ? stored_high(f) + stored_high(g) : K;
  std::vector<QuadExt> cs(static_cast<std::size_t>(hi - lo) + 1);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i].is_zero()) continue;
    int df = f.lowest_degree + static_cast<int>(i);
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      int k = df + g.lowest_degree + static_cast<int>(j);
      if (k > hi) break;
      if (g.coeffs[j].is_zero()) continue;
      cs[static_cast<std::size_t>(k - lo)] += f.coeffs[i] * g.coeffs[j];
    }
  }
  return make_series(lo, std::move(cs), hi, ex);
}

LaurentSeries scale(const LaurentSeries& f, const QuadExt& c) {
  if (c.is_zero()) return LaurentSeries::zero();
  LaurentSeries g = f;
  for (auto& x : g.coeffs) x = x * c;
  return g;
}

LaurentSeries truncate_to(const LaurentSeries& f, int order) {
  int target = std::min(order, f.known_through());
  if (f.is_zero_rep()) return LaurentSeries::zero_through(target);
  std::vector<QuadExt> cs;
  for (int k = f.lowest_degree; k <= target; ++k) cs.push_back(f.coeff(k));
  return make_series(f.lowest_degree, std::move(cs), target, false);
}

LaurentSeries inverse_series(const LaurentSeries& g, int target) {
  if (g.is_zero_rep())
    fail(errc::division_by_zero, g.exact ? "division by the zero series"
                                         : "divisor is zero through its truncation order");
  int b = g.lowest_degree;
  const QuadExt& c = g.coeffs[0];
  if (g.exact && g.coeffs.size() == 1)
    return LaurentSeries::monomial(inverse(c), -b);
  // g = c w^b (1 + h); invert the unit factor term by term.
  int K = g.exact ? std::max(target, -b) : g.truncation_order - 2 * b;
  int jmax = K + b;
  std::vector<QuadExt> h(static_cast<std::size_t>(jmax) + 1), t(h.size());
  for (int i = 1; i <= jmax; ++i) h[static_cast<std::size_t>(i)] = g.coeff(b + i) / c;
  t[0] = QuadExt(Rat(1));
  for (int j = 1; j <= jmax; ++j) {
    QuadExt acc;
    for (int i = 1; i <= j; ++i)
      acc += h[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(j - i)];
    t[static_cast<std::size_t>(j)] = -acc;
  }
  std::vector<QuadExt> cs(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) cs[j] = t[j] / c;
  return make_series(-b, std::move(cs), K, false);
}

LaurentSeries div_series(const LaurentSeries& f, const LaurentSeries& g, int target) {
  if (g.is_zero_rep())
    fail(errc::division_by_zero, g.exact ? "division by the zero series"
                                         : "divisor is zero through its truncation order");
  int inv_target = target;
  if (!f.is_zero_rep()) inv_target = std::max(target - f.lowest_degree, -g.lowest_degree);
  return f * inverse_series(g, inv_target);
}

LaurentSeries operator/(const LaurentSeries& f, const LaurentSeries& g) {
  return div_series(f, g);
}

LaurentSeries sqrt_series(const LaurentSeries& f, int target) {
  if (f.is_zero_rep()) {
    if (f.exact) return f;
    fail(errc::nonpositive_leading, "series is zero through truncation; square root undecided");
  }
  if (f.lowest_degree % 2 != 0)
    fail(errc::odd_leading_degree, "square root needs an even leading degree");
  const QuadExt& c = f.coeffs[0];
  if (sgn(c) <= 0)
    fail(errc::nonpositive_leading, "square root needs a positive leading coefficient");
  QuadExt c0 = sqrt_quad(c);
  int lo2 = f.lowest_degree / 2;
  if (f.exact && f.coeffs.size() == 1) return LaurentSeries::monomial(c0, lo2);
  int K = f.exact ? std::max(target, lo2) : f.truncation_order - (f.lowest_degree - lo2);
  int jmax = K - lo2;
  // f = c w^{2 lo2} (1 + h); s = (1+h)^{1/2} from s_j = (h_j - sum s_i s_{j-i}) / 2.
  std::vector<QuadExt> h(static_cast<std::size_t>(jmax) + 1), s(h.size());
  for (int i = 1; i <= jmax; ++i) h[static_cast<std::size_t>(i)] = f.coeff(f.lowest_degree + i) / c;
  s[0] = QuadExt(Rat(1));
  for (int j = 1; j <= jmax; ++j) {
    QuadExt acc;
    for (int i = 1; i < j; ++i)
      acc += s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j - i)];
    s[static_cast<std::size_t>(j)] = (h[static_cast<std::size_t>(j)] - acc) / QuadExt(Rat(2));
  }
  std::vector<QuadExt> cs(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) cs[j] = c0 * s[j];
  return make_series(lo2, std::move(cs), K, false);
}

Cmp compare_order(const LaurentSeries& f, const LaurentSeries& g) {
  LaurentSeries d = f - g;
  if (!d.is_zero_rep()) return sgn(d.coeffs[0]) > 0 ? Cmp::GT : Cmp::LT;
  return d.exact ? Cmp::EQ : Cmp::INDETERMINATE;
}

Theta theta_of(const LaurentSeries& f) {
  if (f.is_zero_rep()) return {};
  return {sgn(f.coeffs[0]), f.lowest_degree};
}

Eval eval_at(const LaurentSeries& f, const Rat& v) {
  if (v <= 0) fail(errc::invalid_parameter, "evaluation point must be positive");
  double w = 1.0 / rat_double(v);
  Eval out;
  if (f.is_zero_rep()) {
    if (!f.exact) out.tail_bound = std::pow(std::abs(w), f.truncation_order + 1);
    return out;
  }
  double acc = 0;
  for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = acc * w + quad_double(f.coeffs[i]);
  out.value = acc * std::pow(w, f.lowest_degree);
  if (!f.exact) {
    double last = std::abs(quad_double(f.coeffs.back())) *
                  std::pow(std::abs(w), f.truncation_order);
    out.tail_bound = std::max(last, std::pow(std::abs(w), f.truncation_order + 1));
  }
  return out;
}

bool is_zero_through(const LaurentSeries& f, int order) {
  return f.is_zero_rep() && f.known_through() >= order;
}

ComplexLaurentSeries ComplexLaurentSeries::from_real(LaurentSeries r) {
  return {std::move(r), LaurentSeries::zero()};
}

ComplexLaurentSeries ComplexLaurentSeries::constant(const QuadExt& re, const QuadExt& im) {
  return {LaurentSeries::constant(re), LaurentSeries::constant(im)};
}

ComplexLaurentSeries operator-(const ComplexLaurentSeries& z) { return {-z.re, -z.im}; }

ComplexLaurentSeries conj(const ComplexLaurentSeries& z) { return {z.re, -z.im}; }

ComplexLaurentSeries operator+(const ComplexLaurentSeries& a, const ComplexLaurentSeries& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexLaurentSeries operator-(const ComplexLaurentSeries& a, const ComplexLaurentSeries& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexLaurentSeries operator*(const ComplexLaurentSeries& a, const ComplexLaurentSeries& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexLaurentSeries div_series(const ComplexLaurentSeries& a, const ComplexLaurentSeries& b,
                                int target) {
  ComplexLaurentSeries num = a * conj(b);
  LaurentSeries den = b.re * b.re + b.im * b.im;
  return {div_series(num.re, den, target), div_series(num.im, den, target)};
}

ComplexLaurentSeries operator/(const ComplexLaurentSeries& a, const ComplexLaurentSeries& b) {
  return div_series(a, b);
}

namespace {

// Principal arguments in (-1, 1] are ordered by classifying the direction
// into sixteen buckets: eight quarter-boundary rays (odd indices) and the
// eight open octants between them (even indices). Only the four sign tests
// sgn(x), sgn(y), sgn(x - y), sgn(x + y) are needed, which keeps every
// classification exact even for extension-valued directions.
int bucket_of(const QuadExt& x, const QuadExt& y) {
  int sx = sgn(x), sy = sgn(y);
  if (sx == 0 && sy == 0) fail(errc::invalid_parameter, "zero direction has no phase");
  if (sy < 0) {
    if (sx < 0) {
      int c = sgn(x - y);
      return c < 0 ? 0 : (c == 0 ? 1 : 2);
    }
    if (sx == 0) return 3;
    int c = sgn(x + y);
    return c < 0 ? 4 : (c == 0 ? 5 : 6);
  }
  if (sy == 0) return sx > 0 ? 7 : 15;
  if (sx > 0) {
    int c = sgn(x - y);
    return c > 0 ? 8 : (c == 0 ? 9 : 10);
  }
  if (sx == 0) return 11;
  int c = sgn(x + y);
  return c > 0 ? 12 : (c == 0 ? 13 : 14);
}

int compare_principal(const QuadExt& x1, const QuadExt& y1, const QuadExt& x2,
                      const QuadExt& y2) {
  int b1 = bucket_of(x1, y1), b2 = bucket_of(x2, y2);
  if (b1 != b2) return b1 < b2 ? -1 : 1;
  if (b1 % 2 == 1) return 0;  // same boundary ray
  // Same open octant: within it the argument is strictly decreasing in the
  // cross-ratio, so the cross product decides (same formula in every octant).
  int cross = sgn(x1 * y2 - x2 * y1);
  return -cross;
}

// t = even + p with even in 2Z and p in (-1, 1].
void decompose_rational(const Rat& t, int& even, Rat& p) {
  Rat k = -rat_floor(-(t - 1) / 2);  // ceil((t-1)/2)
  Int twice = 2 * numerator(k);
  if (twice < INT_MIN / 2 || twice > INT_MAX / 2)
    fail(errc::invalid_parameter, "phase translate out of range");
  even = static_cast<int>(twice.convert_to<long long>());
  p = t - even;
}

int bucket_of_quarter(const Rat& p) {
  Rat q4 = p * 4;
  if (denominator(q4) != 1)
    fail(errc::branch_not_quarter,
         "exact branch endpoints must be quarter-integers, got " + rat_str(p));
  int n = static_cast<int>(numerator(q4).convert_to<long long>());
  // p in (-1, 1] in quarter steps: -3/4 .. 1 map onto the boundary buckets.
  static constexpr int map[8] = {1, 3, 5, 7, 9, 11, 13, 15};
  if (n < -3 || n > 4) fail(errc::invalid_parameter, "principal part out of range");
  return map[n + 3];
}

}  // namespace

PhaseLimit PhaseLimit::add_int(int j) const {
  PhaseLimit r = *this;
  for (; j > 0; --j) {
    bool positive = bucket_of(r.x, r.y) >= 8;  // principal in (0, 1]
    r.x = -r.x;
    r.y = -r.y;
    if (positive) r.even += 2;
  }
  for (; j < 0; ++j) {
    bool positive = bucket_of(r.x, r.y) >= 8;
    r.x = -r.x;
    r.y = -r.y;
    if (!positive) r.even -= 2;
  }
  return r;
}

double PhaseLimit::to_double() const {
  return even + std::atan2(quad_double(y), quad_double(x)) / 3.14159265358979323846;
}

int compare(const PhaseLimit& a, const PhaseLimit& b) {
  if (a.even != b.even) return a.even < b.even ? -1 : 1;
  return compare_principal(a.x, a.y, b.x, b.y);
}

int compare(const PhaseLimit& a, const Rat& t) {
  int et = 0;
  Rat pt;
  decompose_rational(t, et, pt);
  if (a.even != et) return a.even < et ? -1 : 1;
  int ba = bucket_of(a.x, a.y), bt = bucket_of_quarter(pt);
  if (ba != bt) return ba < bt ? -1 : 1;
  return 0;
}

PhaseFunction phase_of(const ComplexLaurentSeries& z, const Rat& hint_a) {
  if (z.is_zero_rep()) fail(errc::invalid_parameter, "phase of the zero series");
  int lo = std::min(effective_low(z.re), effective_low(z.im));
  if (z.re.known_through() < lo || z.im.known_through() < lo)
    fail(errc::indeterminate, "leading coefficient not determined at this truncation");
  QuadExt x = z.re.coeff(lo), y = z.im.coeff(lo);
  int ea = 0;
  Rat pa;
  decompose_rational(hint_a, ea, pa);
  int even = ea + (bucket_of(x, y) > bucket_of_quarter(pa) ? 0 : 2);
  return {z, {even, std::move(x), std::move(y)}};
}

PhaseFunction phase_add_int(const PhaseFunction& phi, int j) {
  PhaseFunction out;
  out.witness = (j % 2 == 0) ? phi.witness : -phi.witness;
  out.limit = phi.limit.add_int(j);
  return out;
}

Cmp compare_phase(const PhaseFunction& a, const PhaseFunction& b) {
  int c = compare(a.limit, b.limit);
  if (c != 0) return c < 0 ? Cmp::LT : Cmp::GT;
  // Equal limits: arg(w_a / w_b) = arg(w_a conj(w_b)), whose sign for
  // v >> 0 is the sign of the first nonvanishing imaginary coefficient
  // (the product's leading coefficient is real and positive here).
  ComplexLaurentSeries h = a.witness * conj(b.witness);
  if (!h.im.is_zero_rep()) return sgn(h.im.coeffs[0]) < 0 ? Cmp::LT : Cmp::GT;
  if (h.im.exact) return Cmp::EQ;
  fail(errc::indeterminate, "phases agree through truncation; inputs are inexact");
}

}  // namespace ellstab
