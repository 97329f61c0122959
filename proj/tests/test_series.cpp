#include <doctest.h>

#include "ellstab/errors.hpp"
#include "ellstab/series.hpp"

using namespace ellstab;

namespace {

LaurentSeries poly(int lowest, std::vector<QuadExt> cs) {
  return make_series(lowest, std::move(cs), 0, true);
}

bool exactly_equal(const LaurentSeries& f, const LaurentSeries& g) {
  return compare_order(f, g) == Cmp::EQ;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("canonical form") {
  LaurentSeries f = poly(-1, {QuadExt(), QuadExt(Rat(2)), QuadExt()});
  CHECK(f.lowest_degree == 0);
  CHECK(f.coeffs.size() == 1);
  CHECK(f.exact);

  LaurentSeries g = make_series(2, {QuadExt(), QuadExt()}, 5, false);
  CHECK(g.is_zero_rep());
  CHECK_FALSE(g.exact);
  CHECK(g.known_through() == 5);

  LaurentSeries h = make_series(0, {QuadExt(Rat(1))}, 3, false);
  CHECK(h.coeffs.size() == 4);  // padded with unknown-to-be-zero slots
  CHECK(h.coeff(2).is_zero());
}

TEST_CASE("arithmetic on polynomials is exact") {
  LaurentSeries v = LaurentSeries::v();
  LaurentSeries w = LaurentSeries::w();
  CHECK(exactly_equal(v * w, LaurentSeries::constant(QuadExt(Rat(1)))));
  LaurentSeries f = poly(0, {QuadExt(Rat(1)), QuadExt(Rat(2))});   // 1 + 2w
  LaurentSeries g = poly(-1, {QuadExt(Rat(3)), QuadExt(Rat(-1))});  // 3v - 1
  CHECK(exactly_equal((f + g) * f, f * f + g * f));
  CHECK(exactly_equal(f - f, LaurentSeries::zero()));
  LaurentSeries p = f * g;  // (1+2w)(3v-1) = 3v + 5 - 2w
  CHECK(p.coeff(-1) == QuadExt(Rat(3)));
  CHECK(p.coeff(0) == QuadExt(Rat(5)));
  CHECK(p.coeff(1) == QuadExt(Rat(-2)));
}

TEST_CASE("order comparison") {
  CHECK(compare_order(LaurentSeries::v(), LaurentSeries::constant(QuadExt(Rat(1)))) == Cmp::GT);
  CHECK(compare_order(LaurentSeries::w(), LaurentSeries::zero()) == Cmp::GT);
  CHECK(compare_order(-LaurentSeries::v(), LaurentSeries::w()) == Cmp::LT);
  LaurentSeries a = make_series(0, {QuadExt(Rat(1))}, 5, false);
  CHECK(compare_order(a, LaurentSeries::constant(QuadExt(Rat(1)))) == Cmp::INDETERMINATE);
  CHECK(compare_order(a, a) == Cmp::INDETERMINATE);
  CHECK(compare_order(LaurentSeries::w(), LaurentSeries::w()) == Cmp::EQ);
}

TEST_CASE("leading data") {
  LaurentSeries f = poly(1, {QuadExt(Rat(3)), QuadExt(), QuadExt(Rat(-18))});
  Theta t = theta_of(f);
  CHECK(t.sign == 1);
  REQUIRE(t.exponent.has_value());
  CHECK(*t.exponent == 1);
  CHECK(theta_of(LaurentSeries::zero()).sign == 0);
  CHECK_FALSE(theta_of(LaurentSeries::zero()).exponent.has_value());
}

TEST_CASE("inverse and division") {
  LaurentSeries one_minus_w = poly(0, {QuadExt(Rat(1)), QuadExt(Rat(-1))});
  LaurentSeries inv = inverse_series(one_minus_w, 16);
  CHECK(inv.coeff(0) == QuadExt(Rat(1)));
  CHECK(inv.coeff(7) == QuadExt(Rat(1)));
  CHECK(inv.known_through() == 16);
  CHECK(is_zero_through(one_minus_w * inv - LaurentSeries::constant(QuadExt(Rat(1))), 16));

  // Monomial inverses stay exact.
  LaurentSeries m = LaurentSeries::monomial(QuadExt(Rat(2)), -3);
  LaurentSeries mi = inverse_series(m);
  CHECK(mi.exact);
  CHECK(exactly_equal(m * mi, LaurentSeries::constant(QuadExt(Rat(1)))));

  LaurentSeries q = div_series(LaurentSeries::constant(QuadExt(Rat(1))), one_minus_w, 8);
  CHECK(q.coeff(8) == QuadExt(Rat(1)));

  try {
    (void)inverse_series(LaurentSeries::zero());
    FAIL("inverted zero");
  } catch (const error& e) {
    CHECK(e.code == errc::division_by_zero);
  }
  try {
    (void)div_series(LaurentSeries::w(), LaurentSeries::zero_through(4));
    FAIL("divided by unknown-zero");
  } catch (const error& e) {
    CHECK(e.code == errc::division_by_zero);
  }
}

TEST_CASE("square roots") {
  // sqrt(9 w^-2) is an exact monomial.
  LaurentSeries r = sqrt_series(LaurentSeries::monomial(QuadExt(Rat(9)), -2));
  CHECK(r.exact);
  CHECK(exactly_equal(r, LaurentSeries::monomial(QuadExt(Rat(3)), -1)));

  // sqrt(w^-2 (1 + w)) = w^-1 (1 + w/2 - w^2/8 + ...)
  LaurentSeries f = poly(-2, {QuadExt(Rat(1)), QuadExt(Rat(1))});
  LaurentSeries s = sqrt_series(f, 16);
  CHECK(s.coeff(-1) == QuadExt(Rat(1)));
  CHECK(s.coeff(0) == QuadExt(Rat(1, 2)));
  CHECK(s.coeff(1) == QuadExt(Rat(-1, 8)));
  CHECK(s.coeff(2) == QuadExt(Rat(1, 16)));
  CHECK(is_zero_through(s * s - f, 15));

  // Roots of perfect squares reproduce the polynomial as far as they can see.
  LaurentSeries sq = poly(0, {QuadExt(Rat(1)), QuadExt(Rat(2)), QuadExt(Rat(1))});
  LaurentSeries root = sqrt_series(sq, 12);
  CHECK(is_zero_through(root - poly(0, {QuadExt(Rat(1)), QuadExt(Rat(1))}), 12));

  // Irrational leading coefficients land in the extension.
  LaurentSeries c2 = sqrt_series(LaurentSeries::constant(QuadExt(Rat(2))));
  CHECK(c2.exact);
  CHECK(exactly_equal(c2 * c2, LaurentSeries::constant(QuadExt(Rat(2)))));

  try {
    (void)sqrt_series(LaurentSeries::w());
    FAIL("odd degree accepted");
  } catch (const error& e) {
    CHECK(e.code == errc::odd_leading_degree);
  }
  try {
    (void)sqrt_series(LaurentSeries::constant(QuadExt(Rat(-1))));
    FAIL("negative leading accepted");
  } catch (const error& e) {
    CHECK(e.code == errc::nonpositive_leading);
  }
}

TEST_CASE("truncation bookkeeping through products") {
  LaurentSeries trunc = make_series(0, {QuadExt(Rat(1)), QuadExt(Rat(1))}, 1, false);
  LaurentSeries exact_v = LaurentSeries::v();
  LaurentSeries p = trunc * exact_v;
  CHECK_FALSE(p.exact);
  CHECK(p.known_through() == 0);  // 1 known through order 1, shifted down by v
  CHECK(p.coeff(-1) == QuadExt(Rat(1)));

  LaurentSeries z = LaurentSeries::zero_through(3) * exact_v;
  CHECK(z.is_zero_rep());
  CHECK(z.known_through() == 2);

  CHECK((LaurentSeries::zero() * trunc).exact);
}

TEST_CASE("evaluation") {
  LaurentSeries f = poly(1, {QuadExt(Rat(3)), QuadExt(), QuadExt(Rat(-18))});
  Eval e = eval_at(f, Rat(2));
  CHECK(e.value == doctest::Approx(3.0 / 2 - 18.0 / 8));
  CHECK(e.tail_bound == 0.0);

  Eval t = eval_at(make_series(0, {QuadExt(Rat(1))}, 3, false), Rat(10));
  CHECK(t.value == doctest::Approx(1.0));
  CHECK(t.tail_bound > 0.0);
  CHECK(t.tail_bound <= 1e-3);

  try {
    (void)eval_at(f, Rat(0));
    FAIL("evaluated at zero");
  } catch (const error& e2) {
    CHECK(e2.code == errc::invalid_parameter);
  }
}

TEST_CASE("complex arithmetic") {
  ComplexLaurentSeries i = ComplexLaurentSeries::constant(QuadExt(), QuadExt(Rat(1)));
  ComplexLaurentSeries z{LaurentSeries::w(), LaurentSeries::constant(QuadExt(Rat(1)))};
  ComplexLaurentSeries q = z / i;  // (w + i)/i = 1 - i w
  CHECK(exactly_equal(q.re, LaurentSeries::constant(QuadExt(Rat(1)))));
  CHECK(exactly_equal(q.im, -LaurentSeries::w()));
  CHECK(exactly_equal((q * i).re, z.re));
  CHECK(exactly_equal((q * i).im, z.im));

  ComplexLaurentSeries d = div_series(
      ComplexLaurentSeries::constant(QuadExt(Rat(1)), QuadExt()),
      ComplexLaurentSeries{LaurentSeries::constant(QuadExt(Rat(1))), LaurentSeries::w()}, 6);
  CHECK(d.re.coeff(2) == QuadExt(Rat(-1)));
  CHECK(d.im.coeff(1) == QuadExt(Rat(-1)));
  CHECK(d.im.coeff(3) == QuadExt(Rat(1)));
}

TEST_CASE("phase limits and branches") {
  ComplexLaurentSeries iu = ComplexLaurentSeries::constant(QuadExt(), QuadExt(Rat(1)));
  PhaseFunction phi_i = phase_of(iu, Rat(0));
  CHECK(compare(phi_i.limit, Rat(1, 2)) == 0);

  PhaseFunction phi_neg1 =
      phase_of(ComplexLaurentSeries::constant(QuadExt(Rat(-1)), QuadExt()), Rat(0));
  CHECK(compare(phi_neg1.limit, Rat(1)) == 0);
  CHECK(compare(phi_i.limit, phi_neg1.limit) < 0);

  // Same ray, shifted branch hint: the limit lands two higher.
  PhaseFunction shifted =
      phase_of(ComplexLaurentSeries::constant(QuadExt(Rat(-1)), QuadExt()), Rat(1));
  CHECK(compare(shifted.limit, Rat(3)) == 0);

  PhaseFunction up = phase_add_int(phi_i, 1);
  CHECK(compare(up.limit, Rat(3, 2)) == 0);
  CHECK(compare_phase(up, phi_i) == Cmp::GT);
  PhaseFunction down = phase_add_int(up, -1);
  CHECK(compare(down.limit, phi_i.limit) == 0);
  CHECK(compare_phase(down, phi_i) == Cmp::EQ);

  try {
    (void)phase_of(iu, Rat(1, 3));
    FAIL("non-quarter hint accepted");
  } catch (const error& e) {
    CHECK(e.code == errc::branch_not_quarter);
  }
}

TEST_CASE("phase comparison refines equal limits") {
  ComplexLaurentSeries iu = ComplexLaurentSeries::constant(QuadExt(), QuadExt(Rat(1)));
  ComplexLaurentSeries z{LaurentSeries::w(), LaurentSeries::constant(QuadExt(Rat(1)))};
  PhaseFunction phi_z = phase_of(z, Rat(0));
  PhaseFunction phi_i = phase_of(iu, Rat(0));
  CHECK(compare(phi_z.limit, phi_i.limit) == 0);
  CHECK(compare_phase(phi_z, phi_i) == Cmp::LT);  // arg(w + i) < pi/2 for v >> 0
  CHECK(compare_phase(phi_i, phi_z) == Cmp::GT);
  CHECK(compare_phase(phi_z, phi_z) == Cmp::EQ);

  // Positive rescaling does not move the germ.
  ComplexLaurentSeries z2{scale(z.re, QuadExt(Rat(5))), scale(z.im, QuadExt(Rat(5)))};
  CHECK(compare_phase(phase_of(z2, Rat(0)), phi_z) == Cmp::EQ);

  // Truncated agreement is reported, not guessed.
  ComplexLaurentSeries fuzzy{LaurentSeries::zero_through(5),
                             LaurentSeries::constant(QuadExt(Rat(1)))};
  try {
    (void)compare_phase(phase_of(fuzzy, Rat(0)), phi_i);
    FAIL("guessed a phase comparison");
  } catch (const error& e) {
    CHECK(e.code == errc::indeterminate);
  }
}

TEST_CASE("indeterminate leading direction is refused") {
  ComplexLaurentSeries z{LaurentSeries::zero_through(2),
                         LaurentSeries::monomial(QuadExt(Rat(1)), 5)};
  try {
    (void)phase_of(z, Rat(0));
    FAIL("phase with unknown leading direction");
  } catch (const error& e) {
    CHECK(e.code == errc::indeterminate);
  }
}

}  // TEST_SUITE
