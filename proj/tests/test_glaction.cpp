#include <doctest.h>

#include <array>
#include <random>

#include "ellstab/glaction.hpp"
#include "util.hpp"

using namespace ellstab;

namespace {

template <class F>
errc code_of(F&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code;
  }
  REQUIRE(false);
  return errc::invalid_parameter;
}

std::array<LaurentSeries, 4> cmat(const Rat& a, const Rat& b, const Rat& c,
                                  const Rat& d) {
  return {LaurentSeries::constant(QuadExt(a)), LaurentSeries::constant(QuadExt(b)),
          LaurentSeries::constant(QuadExt(c)), LaurentSeries::constant(QuadExt(d))};
}

PhaseFunction germ(int x, int y, const Rat& hint) {
  return phase_of(
      ComplexLaurentSeries::constant(QuadExt(Rat(x)), QuadExt(Rat(y))), hint);
}

LaurentSeries cs(const Rat& c) { return LaurentSeries::constant(QuadExt(c)); }

}  // namespace

TEST_SUITE("glaction") {

TEST_CASE("lift validation") {
  auto rot = cmat(0, 1, -1, 0);
  CHECK(is_glplus(rot));
  CHECK_FALSE(is_glplus(cmat(1, 0, 0, -1)));

  GLLift L = make_lift(rot, Rat(0), Rat(-1, 2));
  CHECK(L.anchor == Rat(0));
  CHECK(L.anchor_image == Rat(-1, 2));

  CHECK(code_of([&] { make_lift(cmat(1, 0, 0, -1), Rat(0), Rat(0)); }) ==
        errc::invalid_parameter);
  // The rotation sends the positive real ray to the negative imaginary one.
  CHECK(code_of([&] { make_lift(rot, Rat(0), Rat(1, 2)); }) ==
        errc::invalid_parameter);
  CHECK(code_of([&] { make_lift(cmat(1, 1, 0, 1), Rat(1, 3), Rat(0)); }) ==
        errc::branch_not_quarter);

  auto shear = cmat(1, 1, 0, 1);
  make_lift(shear, Rat(0), Rat(0));
  make_lift(shear, Rat(1, 2), Rat(1, 4));
  CHECK(code_of([&] { make_lift(shear, Rat(1, 2), Rat(1, 2)); }) ==
        errc::invalid_parameter);

  // Anchors only matter mod 2.
  make_lift(rot, Rat(2), Rat(3, 2));

  // Entries may vary with the parameter as long as the anchor ray maps by a
  // positive (for v >> 0) multiple.
  LaurentSeries v = LaurentSeries::v();
  make_lift({v, LaurentSeries::zero(), LaurentSeries::zero(), v}, Rat(1, 4),
            Rat(1, 4));
}

TEST_CASE("germ transport") {
  GLLift L1 = quarter_turn_lift(1, Rat(1), Rat(1), Rat(0));
  PhaseFunction phi = germ(0, 1, Rat(-1, 2));
  CHECK(compare(phi.limit, Rat(1, 2)) == 0);

  PhaseFunction out = gamma_T_apply(phi, L1);
  CHECK(compare(out.limit, Rat(0)) == 0);

  PhaseFunction iter = phi;
  for (int i = 0; i < 4; ++i) iter = gamma_T_apply(iter, L1);
  CHECK(compare(iter.limit, Rat(-3, 2)) == 0);

  // A full-turn lift has the identity matrix but still winds the germ.
  GLLift L4 = quarter_turn_lift(4, Rat(1), Rat(1), Rat(0));
  CHECK(compare(gamma_T_apply(phi, L4).limit, Rat(-3, 2)) == 0);

  GLLift Lm2 = quarter_turn_lift(-2, Rat(1), Rat(1), Rat(0));
  CHECK(compare(gamma_T_apply(phi, Lm2).limit, Rat(3, 2)) == 0);

  // Translating the germ commutes with the lift.
  PhaseFunction shifted = gamma_T_apply(phase_add_int(phi, 2), L1);
  CHECK(compare(shifted.limit, Rat(2)) == 0);

  // A shear moves non-axis germs monotonically toward the fixed ray.
  GLLift sh = make_lift(cmat(1, 1, 0, 1), Rat(0), Rat(0));
  PhaseFunction generic = germ(3, 4, Rat(0));
  PhaseFunction pushed = gamma_T_apply(generic, sh);
  CHECK(compare(pushed.limit, generic.limit) < 0);
  CHECK(compare(pushed.limit, Rat(0)) > 0);
}

TEST_CASE("charge action") {
  GLLift L1 = quarter_turn_lift(1, Rat(1), Rat(1), Rat(0));
  ComplexLaurentSeries z = ComplexLaurentSeries::constant(QuadExt(Rat(0)), QuadExt(Rat(1)));
  PhaseFunction phi = phase_of(z, Rat(-1, 2));

  // The action applies the inverse matrix, here multiplication by i.
  ActedCharge acted = act_on_charge(z, phi, L1);
  CHECK(is_zero_through(acted.z.re + cs(1), 8));
  CHECK(is_zero_through(acted.z.im, 8));
  CHECK(compare(acted.phase.limit, Rat(1)) == 0);

  // Acting twice agrees with acting by the composite.
  ActedCharge once = act_on_charge(z, phi, L1);
  ActedCharge twice = act_on_charge(once.z, once.phase, L1);
  ActedCharge combined = act_on_charge(z, phi, compose(L1, L1));
  CHECK(is_zero_through(twice.z.re - combined.z.re, 8));
  CHECK(is_zero_through(twice.z.im - combined.z.im, 8));
  CHECK(compare(twice.phase.limit, combined.phase.limit) == 0);
}

TEST_CASE("inverse and composition") {
  GLLift A = quarter_turn_lift(1, Rat(2), Rat(3), Rat(1));
  GLLift Ainv = inverse_lift(A);
  CHECK(Ainv.anchor == Rat(-1, 2));
  CHECK(Ainv.anchor_image == Rat(0));

  GLLift I = compose(A, Ainv);
  CHECK(I.anchor == Rat(-1, 2));
  CHECK(I.anchor_image == Rat(-1, 2));
  CHECK(is_zero_through(I.t[0] - cs(1), 8));
  CHECK(is_zero_through(I.t[1], 8));
  CHECK(is_zero_through(I.t[2], 8));
  CHECK(is_zero_through(I.t[3] - cs(1), 8));
  PhaseFunction diag = germ(1, 1, Rat(0));
  CHECK(compare(gamma_T_apply(diag, I).limit, Rat(1, 4)) == 0);

  // Winding adds under composition.
  GLLift L2 = quarter_turn_lift(2, Rat(1), Rat(1), Rat(0));
  GLLift L3 = quarter_turn_lift(3, Rat(1), Rat(1), Rat(0));
  CHECK(compose(L2, L3).anchor_image == Rat(-5, 2));

  // Gamma of a product is the composite of the Gammas. The outer factor's
  // shear is kept at 0 or +-d1 so it maps every quarter ray to a quarter ray
  // and the composite stays anchorable.
  std::mt19937_64 rng = testutil::make_rng(7);
  std::uniform_int_distribution<int> turn(-3, 3);
  std::uniform_int_distribution<int> diag_entry(1, 4);
  std::uniform_int_distribution<int> shear_entry(-2, 2);
  std::uniform_int_distribution<int> sign3(-1, 1);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int i = 0; i < 60; ++i) {
    Rat d1a(diag_entry(rng));
    Rat shear_a = Rat(sign3(rng)) * d1a;
    GLLift a = quarter_turn_lift(turn(rng), Rat(diag_entry(rng)), d1a, shear_a);
    GLLift b = quarter_turn_lift(turn(rng), Rat(diag_entry(rng)),
                                 Rat(diag_entry(rng)), Rat(shear_entry(rng)));
    int x = 0, y = 0;
    while (x == 0 && y == 0) {
      x = coord(rng);
      y = coord(rng);
    }
    PhaseFunction phi = germ(x, y, Rat(-1, 2));
    PhaseFunction via = gamma_T_apply(gamma_T_apply(phi, b), a);
    PhaseFunction direct = gamma_T_apply(phi, compose(a, b));
    CHECK(compare(via.limit, direct.limit) == 0);
    CHECK(compare_phase(via, direct) == Cmp::EQ);
  }
}

TEST_CASE("phase order preserved") {
  std::mt19937_64 rng = testutil::make_rng(11);
  std::uniform_int_distribution<int> turn(-3, 3);
  std::uniform_int_distribution<int> diag_entry(1, 4);
  std::uniform_int_distribution<int> shear_entry(-2, 2);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int i = 0; i < 100; ++i) {
    GLLift L = quarter_turn_lift(turn(rng), Rat(diag_entry(rng)),
                                 Rat(diag_entry(rng)), Rat(shear_entry(rng)));
    int x1 = 0, y1 = 0, x2 = 0, y2 = 0;
    while (x1 == 0 && y1 == 0) {
      x1 = coord(rng);
      y1 = coord(rng);
    }
    while (x2 == 0 && y2 == 0) {
      x2 = coord(rng);
      y2 = coord(rng);
    }
    PhaseFunction p1 = germ(x1, y1, Rat(-1, 2));
    PhaseFunction p2 = germ(x2, y2, Rat(-1, 2));
    Cmp before = compare_phase(p1, p2);
    Cmp after = compare_phase(gamma_T_apply(p1, L), gamma_T_apply(p2, L));
    CHECK(after == before);
  }
}

TEST_CASE("numeric commutation") {
  SurfaceGeometry geom = make_geometry(Rat(0), Rat(2));
  for (double v : {5.0, 10.0, 100.0}) {
    CommutationCheck check;
    check.mode = CommutationMode::numeric;
    check.v = v;
    check.random_classes = 50;
    CommutationReport rep = verify_commutation(geom, Rat(1), Rat(0), check);
    CHECK(rep.pass);
    CHECK(rep.max_residual <= commutation_tolerance);
    CHECK(rep.entries.size() == 55);
  }

  SurfaceGeometry bumpy = make_geometry(Rat(1), Rat(2));
  CommutationCheck check;
  check.mode = CommutationMode::numeric;
  check.v = 20;
  check.random_classes = 50;
  CHECK(verify_commutation(bumpy, Rat(1, 2), Rat(1, 3), check).pass);

  check.v = -1;
  CHECK(code_of([&] { verify_commutation(bumpy, Rat(1, 2), Rat(1, 3), check); }) ==
        errc::invalid_parameter);
}

TEST_CASE("series commutation") {
  SurfaceGeometry geom = make_geometry(Rat(0), Rat(2));
  CommutationCheck check;
  check.mode = CommutationMode::series;
  check.order = 8;
  check.random_classes = 40;
  CommutationReport rep = verify_commutation(geom, Rat(1), Rat(0), check);
  CHECK(rep.pass);
  CHECK(rep.exact);
  CHECK(rep.order == 8);
  for (const CommutationEntry& entry : rep.entries) CHECK(entry.exact_zero);

  SurfaceGeometry bumpy = make_geometry(Rat(1), Rat(2));
  check.order = 12;
  check.random_classes = 25;
  CommutationReport rep2 = verify_commutation(bumpy, Rat(1), Rat(1, 2), check);
  CHECK(rep2.pass);
  CHECK(rep2.exact);
}

TEST_CASE("gepner commutation") {
  SurfaceGeometry geom = make_geometry(Rat(0), Rat(2));
  CommutationCheck check;
  check.mode = CommutationMode::gepner;
  check.random_classes = 40;
  CommutationReport rep = verify_commutation(geom, Rat(1), Rat(0), check);
  CHECK(rep.pass);
  CHECK(rep.exact);
  CHECK(rep.omega_fixed);

  SurfaceGeometry other = make_geometry(Rat(2), Rat(3));
  CommutationReport rep2 = verify_commutation(other, Rat(1), Rat(1, 2), check);
  CHECK(rep2.pass);
  CHECK(rep2.exact);
  CHECK_FALSE(rep2.omega_fixed);
}

TEST_CASE("curve rotation") {
  CurveRotationReport rep = verify_curve_rotation(200, 20240817u);
  CHECK(rep.pass);
  CHECK(rep.checked == 200);
}

}
