#include "ellstab/walls.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "ellstab/errors.hpp"
#include "ellstab/patching.hpp"
#include "ellstab/transform.hpp"

namespace ellstab {

namespace {

bool zero_class(const ChernClass& g) {
  return g.n == 0 && g.x == 0 && g.y == 0 && g.xi2 == 0 && g.s == 0;
}

bool class_less(const ChernClass& a, const ChernClass& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  if (a.xi2 != b.xi2) return a.xi2 < b.xi2;
  return a.s < b.s;
}

bool wall_less(const Wall& a, const Wall& b) {
  if (a.param != b.param) return a.param < b.param;
  return class_less(a.destabilizer, b.destabilizer);
}

void check_interval(const Rat& alpha, const Rat& lo, const Rat& hi) {
  if (!(alpha > 0)) fail(errc::invalid_parameter, "alpha must be positive");
  if (lo < 0 || !(hi > lo))
    fail(errc::invalid_parameter, "family interval must satisfy 0 <= lo < hi");
}

// Along the ray the charge of delta is
//   Z(delta) = -t(delta) + h(delta) beta^2 + i beta g(delta)
// with, for omega-tilde = (1/alpha)(Theta + m f) + f and B-bar = l f,
//   g = omega-tilde . ch1 - n (omega-tilde . B-bar) = (y + A x - n l) / alpha
//   t = ch2 twisted by B-bar = s - l x          (B-bar^2 = 0)
//   h = (omega-tilde^2 / 2) n = n A' / alpha^2
// where A = m + alpha - e and A' = m + alpha - e/2.
struct RaySetup {
  SurfaceGeometry geom;
  Rat alpha, l;
  Rat A, Ap;
};

RaySetup make_ray_setup(const SurfaceGeometry& geom, const Rat& alpha, const Rat& l) {
  RaySetup rs;
  rs.geom = geom;
  rs.alpha = alpha;
  rs.l = l;
  rs.A = Rat(geom.m + alpha - geom.e);
  rs.Ap = Rat(geom.m + alpha - geom.e / 2);
  return rs;
}

struct RayCoeffs {
  Rat g, t, h;
};

RayCoeffs ray_coeffs(const RaySetup& rs, const ChernClass& c) {
  RayCoeffs out;
  out.g = Rat((c.y + rs.A * c.x - c.n * rs.l) / rs.alpha);
  out.t = Rat(c.s - rs.l * c.x);
  out.h = Rat(c.n * rs.Ap / (rs.alpha * rs.alpha));
  return out;
}

RayPencil pencil_of(const RaySetup& rs, const ChernClass& cand, const ChernClass& gamma) {
  RayCoeffs G = ray_coeffs(rs, gamma);
  RayCoeffs C = ray_coeffs(rs, cand);
  return {Rat(G.g * C.t - C.g * G.t), Rat(G.h * C.g - G.g * C.h)};
}

ChernClass transform_preimage(const ChernClass& c, const SurfaceGeometry& geom) {
  return shift(phi_hat(c, geom));
}

// u(v) as an element of Q(sqrt(v^2 + 4 Bc A)), positive root of
// Bc u^2 + v u = A.
QuadExt exact_u(const SurfaceGeometry& geom, const Rat& alpha, const Rat& v) {
  Rat A = Rat(geom.m + alpha - geom.e);
  Rat Bc = Rat(geom.m - geom.e / 2);
  QuadExt root = sqrt_rational(Rat(v * v + 4 * Bc * A));
  return (root - QuadExt(v)) / QuadExt(Rat(2 * Bc));
}

Cx<QuadExt> exact_hyper_charge(const ChernClass& c, const QuadExt& u, const Rat& v,
                               const Rat& q, const SurfaceGeometry& geom) {
  DivisorQ omega{u, u * QuadExt(geom.m) + QuadExt(v)};
  DivisorQ B{QuadExt(0), QuadExt(q)};
  return z_omega_B<QuadExt>(c, omega, B, geom);
}

// Im Z_v(c) = u K1 + v K2 with K1 = y + (m - e) x - n q and K2 = x.
QuadExt exact_hyper_im(const ChernClass& c, const QuadExt& u, const Rat& v,
                       const Rat& q, const SurfaceGeometry& geom) {
  Rat K1 = Rat(c.y + (geom.m - geom.e) * c.x - c.n * q);
  Rat K2 = c.x;
  return u * QuadExt(K1) + QuadExt(Rat(v * K2));
}

bool meets_delta_bound(const ChernClass& c, const StabilityFamily& fam) {
  Rat delta = discriminant(c, fam.geom);
  if (fam.kind == FamilyKind::ray) return delta >= 0;
  return Rat(delta - fam.geom.e * (c.n * c.n - c.x * c.x)) >= 0;
}

double hyper_weight_numeric(const ChernClass& cand, const ChernClass& gamma,
                            const StabilityFamily& fam, double v) {
  double m = rat_double(fam.geom.m);
  double e = rat_double(fam.geom.e);
  UVNumeric uv = solve_uv_numeric(m, rat_double(fam.alpha), e, v);
  DivisorOf<double> omega{uv.u, uv.u * m + v};
  DivisorOf<double> B{0.0, rat_double(fam.bfield)};
  Cx<double> zg = z_omega_B<double>(gamma, omega, B, fam.geom);
  Cx<double> zc = z_omega_B<double>(cand, omega, B, fam.geom);
  return weight_of(zg, zc);
}

}  // namespace

StabilityFamily ray_family(const SurfaceGeometry& geom, const Rat& alpha,
                           const Rat& l, const Rat& lo, const Rat& hi) {
  check_interval(alpha, lo, hi);
  return {FamilyKind::ray, geom, alpha, l, lo, hi};
}

StabilityFamily hyperbola_family(const SurfaceGeometry& geom, const Rat& alpha,
                                 const Rat& q, const Rat& lo, const Rat& hi) {
  check_interval(alpha, lo, hi);
  if (!(geom.m > geom.e))
    fail(errc::invalid_parameter, "hyperbola family needs m > e");
  return {FamilyKind::hyperbola, geom, alpha, q, lo, hi};
}

RayPencil ray_pencil(const ChernClass& cand, const ChernClass& gamma,
                     const StabilityFamily& family) {
  if (family.kind != FamilyKind::ray)
    fail(errc::invalid_parameter, "ray_pencil needs a ray family");
  RaySetup rs = make_ray_setup(family.geom, family.alpha, family.bfield);
  return pencil_of(rs, cand, gamma);
}

QuadExt hyperbola_weight(const ChernClass& cand, const ChernClass& gamma,
                         const StabilityFamily& family, const Rat& v) {
  if (family.kind != FamilyKind::hyperbola)
    fail(errc::invalid_parameter, "hyperbola_weight needs a hyperbola family");
  if (v < 0) fail(errc::invalid_parameter, "hyperbola parameter must be nonnegative");
  QuadExt u = exact_u(family.geom, family.alpha, v);
  Cx<QuadExt> zg = exact_hyper_charge(gamma, u, v, family.bfield, family.geom);
  Cx<QuadExt> zc = exact_hyper_charge(cand, u, v, family.bfield, family.geom);
  return weight_of(zg, zc);
}

std::vector<ChernClass> candidate_classes(const ChernClass& gamma,
                                          const StabilityFamily& family,
                                          int box) {
  if (box <= 0) fail(errc::invalid_parameter, "coordinate box must be positive");
  if (zero_class(gamma)) fail(errc::invalid_parameter, "target class is zero");

  std::vector<ChernClass> out;
  if (family.kind == FamilyKind::ray) {
    RaySetup rs = make_ray_setup(family.geom, family.alpha, family.bfield);
    RayCoeffs G = ray_coeffs(rs, gamma);
    for (int n = -box; n <= box; ++n) {
      for (int x = -box; x <= box; ++x) {
        for (int y = -box; y <= box; ++y) {
          // The window only sees (n, x, y), so decide it before the s loop.
          Rat gp = Rat((Rat(y) + rs.A * x - Rat(n) * rs.l) / rs.alpha);
          if (gp < 0 || gp > G.g) continue;
          for (int s2 = -2 * box; s2 <= 2 * box; ++s2) {
            ChernClass c{Rat(n), Rat(x), Rat(y), Rat(0), Rat(s2, 2)};
            if (zero_class(c) || c == gamma) continue;
            RayCoeffs C = ray_coeffs(rs, c);
            Rat P = Rat(G.g * C.t - C.g * G.t);
            Rat Q = Rat(G.h * C.g - G.g * C.h);
            if (P == 0 && Q == 0) continue;
            if (!meets_delta_bound(c, family)) continue;
            if (!meets_delta_bound(sub_residual_free(gamma, c), family)) continue;
            out.push_back(c);
          }
        }
      }
    }
  } else {
    Rat v_mid = Rat((family.lo + family.hi) / 2);
    QuadExt u_mid = exact_u(family.geom, family.alpha, v_mid);
    QuadExt im_target =
        exact_hyper_im(gamma, u_mid, v_mid, family.bfield, family.geom);
    if (sgn(im_target) < 0) return out;
    RaySetup mirror = make_ray_setup(
        family.geom, family.alpha, lq_relation_l(family.geom.e, family.bfield));
    ChernClass pre_target = transform_preimage(gamma, family.geom);
    for (int n = -box; n <= box; ++n) {
      for (int x = -box; x <= box; ++x) {
        for (int y = -box; y <= box; ++y) {
          ChernClass probe{Rat(n), Rat(x), Rat(y), Rat(0), Rat(0)};
          QuadExt im = exact_hyper_im(probe, u_mid, v_mid, family.bfield, family.geom);
          if (sgn(im) < 0 || sgn(im_target - im) < 0) continue;
          for (int s2 = -2 * box; s2 <= 2 * box; ++s2) {
            ChernClass c{Rat(n), Rat(x), Rat(y), Rat(0), Rat(s2, 2)};
            if (zero_class(c) || c == gamma) continue;
            if (!meets_delta_bound(c, family)) continue;
            if (!meets_delta_bound(sub_residual_free(gamma, c), family)) continue;
            RayPencil pen =
                pencil_of(mirror, transform_preimage(c, family.geom), pre_target);
            if (pen.p == 0 && pen.q == 0) continue;
            out.push_back(c);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), class_less);
  return out;
}

std::vector<Wall> find_walls(const ChernClass& gamma,
                             const StabilityFamily& family, int box,
                             int grid_size) {
  std::vector<ChernClass> cands = candidate_classes(gamma, family, box);
  std::vector<Wall> walls;

  if (family.kind == FamilyKind::ray) {
    RaySetup rs = make_ray_setup(family.geom, family.alpha, family.bfield);
    Rat lo2 = Rat(family.lo * family.lo);
    Rat hi2 = Rat(family.hi * family.hi);
    for (const ChernClass& c : cands) {
      RayPencil pen = pencil_of(rs, c, gamma);
      if (pen.q == 0) continue;  // S/beta is constant: no sign change at beta > 0
      Rat r2 = Rat(-pen.p / pen.q);
      if (!(r2 > 0) || r2 < lo2 || r2 > hi2) continue;
      Wall w;
      w.exact = sqrt_rational(r2);
      w.param = quad_double(*w.exact);
      w.destabilizer = c;
      w.target = gamma;
      walls.push_back(w);
    }
  } else {
    if (grid_size < 1) fail(errc::invalid_parameter, "grid size must be positive");
    double lo = rat_double(family.lo);
    double hi = rat_double(family.hi);
    for (const ChernClass& c : cands) {
      auto S = [&](double v) { return hyper_weight_numeric(c, gamma, family, v); };
      double prev_v = lo;
      double prev_s = S(lo);
      for (int i = 1; i <= grid_size; ++i) {
        double v = lo + (hi - lo) * i / grid_size;
        double s = S(v);
        if (prev_s == 0) {
          walls.push_back({prev_v, std::nullopt, c, gamma});
        } else if (s != 0 && (s > 0) != (prev_s > 0)) {
          double a = prev_v, b = v, sa = prev_s;
          while (b - a > 1e-10 * std::max(1.0, std::abs(b))) {
            double mid = 0.5 * (a + b);
            double sm = S(mid);
            if (sm == 0) {
              a = b = mid;
            } else if ((sm > 0) == (sa > 0)) {
              a = mid;
              sa = sm;
            } else {
              b = mid;
            }
          }
          walls.push_back({0.5 * (a + b), std::nullopt, c, gamma});
        }
        prev_v = v;
        prev_s = s;
      }
      if (prev_s == 0) walls.push_back({prev_v, std::nullopt, c, gamma});
    }
  }
  std::sort(walls.begin(), walls.end(), wall_less);
  return walls;
}

CorrespondenceReport correspondence_check(const ChernClass& gamma,
                                          const StabilityFamily& ray,
                                          const Rat& v_lo, const Rat& v_hi,
                                          int box, int samples) {
  if (ray.kind != FamilyKind::ray)
    fail(errc::invalid_parameter, "correspondence_check starts from a ray family");
  if (v_lo < 0 || !(v_hi > v_lo))
    fail(errc::invalid_parameter, "need 0 <= v_lo < v_hi");
  if (samples < 2) fail(errc::invalid_parameter, "need at least two samples");

  const SurfaceGeometry& geom = ray.geom;
  Rat q = lq_relation_q(geom.e, ray.bfield);
  Rat A = Rat(geom.m + ray.alpha - geom.e);
  Rat Bc = Rat(geom.m - geom.e / 2);
  Rat Ap = Rat(geom.m + ray.alpha - geom.e / 2);
  Rat alpha_sq = Rat(ray.alpha * ray.alpha);

  CorrespondenceReport rep;
  std::vector<ChernClass> cands = candidate_classes(gamma, ray, box);
  rep.candidates = static_cast<int>(cands.size());
  rep.signs_agree = true;

  ChernClass ph_gamma = phi(gamma, geom);
  std::vector<ChernClass> ph_cands;
  std::vector<RayPencil> pencils;
  ph_cands.reserve(cands.size());
  pencils.reserve(cands.size());
  for (const ChernClass& c : cands) {
    ph_cands.push_back(phi(c, geom));
    pencils.push_back(ray_pencil(c, gamma, ray));
  }

  // Exact sign sweep: the transform acts on (Re, Im) by a positive-
  // determinant matrix, so the weights on the two sides must have the same
  // sign, sample by sample.
  for (int j = 0; j < samples; ++j) {
    Rat v = Rat(v_lo + (v_hi - v_lo) * j / (samples - 1));
    QuadExt u = exact_u(geom, ray.alpha, v);
    QuadExt beta_sq =
        QuadExt(alpha_sq) * (QuadExt(Rat(geom.m - geom.e)) + QuadExt(v) * inverse(u)) /
        QuadExt(Ap);
    Cx<QuadExt> zg = exact_hyper_charge(ph_gamma, u, v, q, geom);
    for (size_t i = 0; i < cands.size(); ++i) {
      Cx<QuadExt> zc = exact_hyper_charge(ph_cands[i], u, v, q, geom);
      int s_hyp = sgn(weight_of(zg, zc));
      int s_ray = sgn(QuadExt(pencils[i].p) + QuadExt(pencils[i].q) * beta_sq);
      if (s_hyp != s_ray) rep.signs_agree = false;
      ++rep.samples_checked;
    }
  }

  // Wall transport: beta^2(v) = alpha^2 (m + v/u - e) / A' is increasing in
  // v, so a ray root r2 lands in the window iff beta^2(v_lo) <= r2 <=
  // beta^2(v_hi); inverting gives v* = w1 sqrt(A / (Bc + w1)) with
  // w1 = r2 A' / alpha^2 - (m - e).
  QuadExt beta_sq_lo =
      QuadExt(alpha_sq) *
      (QuadExt(Rat(geom.m - geom.e)) + QuadExt(v_lo) * inverse(exact_u(geom, ray.alpha, v_lo))) /
      QuadExt(Ap);
  QuadExt beta_sq_hi =
      QuadExt(alpha_sq) *
      (QuadExt(Rat(geom.m - geom.e)) + QuadExt(v_hi) * inverse(exact_u(geom, ray.alpha, v_hi))) /
      QuadExt(Ap);

  StabilityFamily hyp = hyperbola_family(geom, ray.alpha, q, v_lo, v_hi);
  ChernClass target_h = ph_gamma;
  {
    Rat v_mid = Rat((v_lo + v_hi) / 2);
    QuadExt u_mid = exact_u(geom, ray.alpha, v_mid);
    if (sgn(exact_hyper_im(ph_gamma, u_mid, v_mid, q, geom)) < 0)
      target_h = shift(ph_gamma);
  }
  std::vector<Wall> hyp_walls = find_walls(target_h, hyp, box, 2048);
  rep.hyperbola_walls = static_cast<int>(hyp_walls.size());

  std::vector<bool> hyp_used(hyp_walls.size(), false);
  double A_d = rat_double(A);
  double Bc_d = rat_double(Bc);
  for (size_t i = 0; i < cands.size(); ++i) {
    const RayPencil& pen = pencils[i];
    if (pen.q == 0) continue;
    Rat r2 = Rat(-pen.p / pen.q);
    if (!(r2 > 0)) continue;
    if (sgn(QuadExt(r2) - beta_sq_lo) < 0 || sgn(beta_sq_hi - QuadExt(r2)) < 0) continue;
    ++rep.transported;
    double w1 = rat_double(Rat(r2 * Ap / alpha_sq - (geom.m - geom.e)));
    double v_star = w1 * std::sqrt(A_d / (Bc_d + w1));
    ChernClass image = ph_cands[i];
    ChernClass image_shifted = shift(image);
    bool found = false;
    for (size_t k = 0; k < hyp_walls.size(); ++k) {
      double gap = std::abs(hyp_walls[k].param - v_star) / std::max(1.0, std::abs(v_star));
      if (gap > 1e-8) continue;
      if (!(hyp_walls[k].destabilizer == image) &&
          !(hyp_walls[k].destabilizer == image_shifted))
        continue;
      hyp_used[k] = true;
      rep.max_root_gap = std::max(rep.max_root_gap, gap);
      found = true;
    }
    if (found) ++rep.matched;
  }

  // Hyperbola walls whose preimage is integral must have been claimed by a
  // transported ray root; half-lattice preimages fall outside the ray box
  // model and are exempt.
  bool reverse_ok = true;
  for (size_t k = 0; k < hyp_walls.size(); ++k) {
    if (hyp_used[k]) continue;
    ChernClass pre = transform_preimage(hyp_walls[k].destabilizer, geom);
    if (is_integral_class(pre)) reverse_ok = false;
  }

  rep.pass = rep.signs_agree && rep.matched == rep.transported && reverse_ok;
  return rep;
}

BoundednessReport boundedness_probe(const ChernClass& gamma,
                                    const StabilityFamily& family,
                                    const Rat& lo, const Rat& hi, int box,
                                    int grid_size) {
  StabilityFamily scan = family;
  scan.lo = lo;
  scan.hi = hi;
  check_interval(scan.alpha, lo, hi);
  std::vector<Wall> walls = find_walls(gamma, scan, box, grid_size);
  BoundednessReport rep;
  rep.any = !walls.empty();
  if (rep.any) {
    rep.largest = walls.back().param;
    rep.destabilizer = walls.back().destabilizer;
    rep.note = "largest wall found by grid scan; absence of further walls in "
               "or beyond the window is evidence, not proof";
  } else {
    rep.note = "no walls found in the scanned window; scan evidence only, not "
               "a proof of absence";
  }
  return rep;
}

}  // namespace ellstab
