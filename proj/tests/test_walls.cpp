#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ellstab/errors.hpp"
#include "ellstab/transform.hpp"
#include "ellstab/walls.hpp"

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

ChernClass cc(const Rat& n, const Rat& x, const Rat& y, const Rat& xi2, const Rat& s) {
  ChernClass g;
  g.n = n;
  g.x = x;
  g.y = y;
  g.xi2 = xi2;
  g.s = s;
  return g;
}

bool contains(const std::vector<ChernClass>& v, const ChernClass& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

int rat_sign(const Rat& r) { return r > 0 ? 1 : r < 0 ? -1 : 0; }

}  // namespace

TEST_SUITE("walls") {
  TEST_CASE("family factories validate their parameters") {
    SurfaceGeometry geom = make_geometry(0, 2);
    CHECK(code_of([&] { ray_family(geom, 0, 0, 0, 1); }) == errc::invalid_parameter);
    CHECK(code_of([&] { ray_family(geom, 1, 0, Rat(-1), 1); }) == errc::invalid_parameter);
    CHECK(code_of([&] { ray_family(geom, 1, 0, 2, 2); }) == errc::invalid_parameter);
    CHECK(code_of([&] { hyperbola_family(geom, Rat(-1), 0, 0, 1); }) ==
          errc::invalid_parameter);

    StabilityFamily ray = ray_family(geom, 1, 0, 0, 3);
    StabilityFamily hyp = hyperbola_family(geom, 1, 0, Rat(1, 2), 2);
    CHECK(code_of([&] { ray_pencil(cc(0, 0, 1, 0, 0), cc(0, 0, 2, 0, 1), hyp); }) ==
          errc::invalid_parameter);
    CHECK(code_of([&] {
            hyperbola_weight(cc(0, 0, 1, 0, 0), cc(0, 0, 2, 0, 1), ray, 1);
          }) == errc::invalid_parameter);
    CHECK(code_of([&] {
            hyperbola_weight(cc(0, 0, 1, 0, 0), cc(0, 0, 2, 0, 1), hyp, Rat(-1));
          }) == errc::invalid_parameter);
    CHECK(code_of([&] { candidate_classes(cc(0, 0, 2, 0, 1), ray, 0); }) ==
          errc::invalid_parameter);
    CHECK(code_of([&] { candidate_classes(cc(0, 0, 0, 0, 0), ray, 3); }) ==
          errc::invalid_parameter);
    CHECK(code_of([&] { find_walls(cc(0, 0, 2, 0, 1), hyp, 3, 0); }) ==
          errc::invalid_parameter);
  }

  TEST_CASE("ray candidates obey the window, the discriminant bound and the pruning") {
    SurfaceGeometry geom = make_geometry(0, 2);
    StabilityFamily ray = ray_family(geom, 1, 0, 0, 3);
    ChernClass gamma = cc(0, 0, 2, 0, 1);

    std::vector<ChernClass> cands = candidate_classes(gamma, ray, 3);
    CHECK(!cands.empty());
    // Both halves of the fiber-class pair are listed.
    CHECK(contains(cands, cc(0, 0, 1, 0, 0)));
    CHECK(contains(cands, cc(0, 0, 1, 0, 1)));
    // Fails its own discriminant bound.
    CHECK(!contains(cands, cc(1, 0, 1, 0, 1)));
    // Identically-zero weight against gamma (a kernel direction) is pruned
    // even though window and discriminant would pass.
    CHECK(!contains(cands, cc(0, 0, 1, 0, Rat(1, 2))));
    CHECK(!contains(cands, gamma));
    CHECK(!contains(cands, cc(0, 0, 0, 0, 0)));

    for (const ChernClass& c : cands) {
      Rat gp = Rat(c.y + 3 * c.x);  // omega-tilde . ch1 for alpha=1, m=2, e=0
      CHECK(gp >= 0);
      CHECK(gp <= 2);
      CHECK(discriminant(c, geom) >= 0);
      CHECK(discriminant(sub_residual_free(gamma, c), geom) >= 0);
      RayPencil pen = ray_pencil(c, gamma, ray);
      CHECK((pen.p != 0 || pen.q != 0));
    }

    // Enlarging the box only adds classes.
    std::vector<ChernClass> wide = candidate_classes(gamma, ray, 6);
    for (const ChernClass& c : cands) CHECK(contains(wide, c));

    // A skyscraper's window collapses to Im = 0 and everything left is pruned.
    CHECK(candidate_classes(cc(0, 0, 0, 0, 1), ray, 4).empty());
    StabilityFamily hyp = hyperbola_family(geom, 1, 0, Rat(1, 2), 50);
    CHECK(candidate_classes(cc(0, 0, 0, 0, 1), hyp, 4).empty());
  }

  TEST_CASE("ray pencil is bilinear and antisymmetric across the partner split") {
    SurfaceGeometry geom = make_geometry(0, 2);
    StabilityFamily ray = ray_family(geom, 1, 0, 0, 3);
    ChernClass gamma = cc(1, 0, 2, 0, -3);

    RayPencil pen = ray_pencil(cc(1, 0, 1, 0, 0), gamma, ray);
    CHECK(pen.p == 3);
    CHECK(pen.q == -3);
    RayPencil pen2 = ray_pencil(cc(0, 0, 1, 0, -2), gamma, ray);
    CHECK(pen2.p == -1);
    CHECK(pen2.q == 3);

    // Scaling the candidate scales the pencil; the root is unchanged.
    RayPencil scaled = ray_pencil(cc(3, 0, 3, 0, 0), gamma, ray);
    CHECK(scaled.p == Rat(3) * pen.p);
    CHECK(scaled.q == Rat(3) * pen.q);
    CHECK(Rat(-scaled.p / scaled.q) == Rat(-pen.p / pen.q));

    // gamma - gamma' carries the same wall seen from the other side.
    RayPencil partner = ray_pencil(sub_residual_free(gamma, cc(1, 0, 1, 0, 0)), gamma, ray);
    CHECK(partner.p == -pen.p);
    CHECK(partner.q == -pen.q);
  }

  TEST_CASE("ray walls come in partner pairs with exact square-root parameters") {
    SurfaceGeometry geom = make_geometry(0, 2);
    StabilityFamily ray = ray_family(geom, 1, 0, 0, 3);
    ChernClass gamma = cc(1, 0, 2, 0, -3);

    std::vector<Wall> walls = find_walls(gamma, ray, 5, 0);
    REQUIRE(walls.size() == 6);
    // beta^2 = 1/3, 2/3, 1, each marked by a fiber-type class and its partner.
    Rat expected_sq[6] = {Rat(1, 3), Rat(1, 3), Rat(2, 3), Rat(2, 3), Rat(1), Rat(1)};
    ChernClass expected_dest[6] = {
        cc(0, 0, 1, 0, -2),        cc(1, 0, 1, 0, -1),
        cc(0, 0, 1, 0, Rat(-5, 2)), cc(1, 0, 1, 0, Rat(-1, 2)),
        cc(0, 0, 1, 0, -3),        cc(1, 0, 1, 0, 0)};
    for (int i = 0; i < 6; ++i) {
      REQUIRE(walls[i].exact.has_value());
      CHECK(*walls[i].exact * *walls[i].exact == QuadExt(expected_sq[i]));
      CHECK(walls[i].destabilizer == expected_dest[i]);
      CHECK(walls[i].target == gamma);
    }
    CHECK(walls[4].exact->is_rational());
    CHECK(walls[4].exact->as_rat() == 1);
    CHECK(std::is_sorted(walls.begin(), walls.end(),
                         [](const Wall& a, const Wall& b) { return a.param < b.param; }));

    // Strict sign change of the weight across each wall.
    for (const Wall& w : walls) {
      Rat r2 = (*w.exact * *w.exact).as_rat();
      RayPencil pen = ray_pencil(w.destabilizer, gamma, ray);
      int below = rat_sign(Rat(pen.p + pen.q * r2 * Rat(99, 100)));
      int above = rat_sign(Rat(pen.p + pen.q * r2 * Rat(101, 100)));
      CHECK(below * above == -1);
    }

    // The box is saturated for this interval: enlarging it changes nothing.
    std::vector<Wall> wide = find_walls(gamma, ray, 7, 0);
    REQUIRE(wide.size() == walls.size());
    for (size_t i = 0; i < walls.size(); ++i) {
      CHECK(wide[i].destabilizer == walls[i].destabilizer);
      CHECK(*wide[i].exact == *walls[i].exact);
    }

    // The fiber-type target has no ray walls at all in this window.
    CHECK(find_walls(cc(0, 0, 2, 0, 1), ray, 5, 0).empty());
  }

  TEST_CASE("hyperbola walls sit at the transported parameter") {
    SurfaceGeometry geom = make_geometry(0, 2);
    StabilityFamily hyp = hyperbola_family(geom, 1, 0, Rat(1, 2), 2);
    // Image of (1,0,2,0,-3), shifted into the upper half plane.
    ChernClass gamma = cc(1, 0, 2, 0, -3);
    ChernClass target = shift(phi(gamma, geom));
    CHECK(target == cc(0, 1, 3, 0, 2));

    // The ray wall at beta = 1 transports to the rational point u = v = 1.
    ChernClass dest_a = cc(0, 1, 0, 0, 1);   // shift of phi((1,0,1,0,0))
    ChernClass dest_b = cc(0, 0, 3, 0, 1);   // shift of phi((0,0,1,0,-3))
    CHECK(hyperbola_weight(dest_a, target, hyp, 1).is_zero());
    CHECK(hyperbola_weight(dest_b, target, hyp, 1).is_zero());
    CHECK(sgn(hyperbola_weight(dest_a, target, hyp, Rat(1, 2))) *
              sgn(hyperbola_weight(dest_a, target, hyp, 2)) ==
          -1);

    std::vector<Wall> walls = find_walls(target, hyp, 5, 512);
    bool found_a = false, found_b = false;
    for (const Wall& w : walls) {
      if (std::abs(w.param - 1.0) < 1e-8 && w.destabilizer == dest_a) found_a = true;
      if (std::abs(w.param - 1.0) < 1e-8 && w.destabilizer == dest_b) found_b = true;
    }
    CHECK(found_a);
    CHECK(found_b);

    // Refining the scan does not change the wall count.
    CHECK(find_walls(target, hyp, 5, 1024).size() == walls.size());
  }

  TEST_CASE("transform correspondence matches signs and transported roots") {
    SurfaceGeometry geom = make_geometry(0, 2);
    StabilityFamily ray = ray_family(geom, 1, 0, 0, 3);

    ChernClass gamma = cc(1, 0, 2, 0, -3);
    CorrespondenceReport rep = correspondence_check(gamma, ray, Rat(1, 2), 2, 5, 7);
    CHECK(rep.pass);
    CHECK(rep.signs_agree);
    CHECK(rep.candidates > 0);
    CHECK(rep.samples_checked == 7 * rep.candidates);
    // Only the beta = 1 pair lands inside [1/2, 2]; beta^2 = 1/3 and 2/3 sit
    // below the hyperbola's reach.
    CHECK(rep.transported == 2);
    CHECK(rep.matched == 2);
    CHECK(rep.max_root_gap <= 1e-8);

    // Fiber-type class: both wall sets are empty and the signs still agree.
    ChernClass fiber_like = cc(0, 0, 2, 0, 1);
    CorrespondenceReport rep2 = correspondence_check(fiber_like, ray, Rat(1, 2), 50, 5, 9);
    CHECK(rep2.pass);
    CHECK(rep2.signs_agree);
    CHECK(rep2.transported == 0);
    CHECK(rep2.hyperbola_walls == 0);

    CHECK(code_of([&] {
            correspondence_check(gamma, hyperbola_family(geom, 1, 0, 1, 2), 1, 2, 5, 7);
          }) == errc::invalid_parameter);
    CHECK(code_of([&] { correspondence_check(gamma, ray, 2, 1, 5, 7); }) ==
          errc::invalid_parameter);
    CHECK(code_of([&] { correspondence_check(gamma, ray, 1, 2, 5, 1); }) ==
          errc::invalid_parameter);
  }

  TEST_CASE("boundedness probe reports scan evidence only") {
    SurfaceGeometry geom = make_geometry(0, 2);
    StabilityFamily ray = ray_family(geom, 1, 0, 0, 3);
    ChernClass gamma = cc(1, 0, 2, 0, -3);

    BoundednessReport narrow = boundedness_probe(gamma, ray, 0, Rat(7, 10), 5, 16);
    CHECK(narrow.any);
    CHECK(narrow.largest == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-12));
    BoundednessReport full = boundedness_probe(gamma, ray, 0, 3, 5, 16);
    CHECK(full.any);
    CHECK(full.largest == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(full.largest >= narrow.largest);
    CHECK(full.destabilizer == cc(1, 0, 1, 0, 0));
    CHECK(full.note.find("not") != std::string::npos);

    // Fiber-type class on the hyperbola: nothing anywhere in a long scan.
    StabilityFamily hyp = hyperbola_family(geom, 1, 0, 1, 2);
    BoundednessReport far = boundedness_probe(cc(0, 0, 2, 0, 1), hyp, 50, 1000, 5, 400);
    CHECK(!far.any);
    CHECK(far.note.find("evidence") != std::string::npos);

    BoundednessReport sky = boundedness_probe(cc(0, 0, 0, 0, 1), ray, 0, 3, 4, 16);
    CHECK(!sky.any);
  }
}
