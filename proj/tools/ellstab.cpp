// Command-line front end: exposes the transform, charge, patching, glaction
// and walls layers with deterministic JSON/CSV output.
//
// Exit codes: 0 success, 1 validation error (bad flags, malformed rationals,
// violated parameter relations), 2 verification failure (a suite or residual
// check that demands zero came back nonzero).

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ellstab/charges.hpp"
#include "ellstab/errors.hpp"
#include "ellstab/glaction.hpp"
#include "ellstab/jsonio.hpp"
#include "ellstab/lattice.hpp"
#include "ellstab/patching.hpp"
#include "ellstab/series.hpp"
#include "ellstab/transform.hpp"
#include "ellstab/walls.hpp"

namespace {

using namespace ellstab;

// Configuration file (JSON object). Recognized keys: "e", "m", "kx_f",
// "alpha", "q", "series_order", "out". Rationals are strings ("p/q") or
// integers; flags always win over the file.
struct Ctx {
  Json config = nullptr;

  bool has(const char* key) const {
    return config.is_object() && config.contains(key);
  }
};

Ctx load_config(const std::string& path) {
  Ctx ctx;
  if (path.empty()) return ctx;
  std::ifstream in(path);
  if (!in) fail(errc::invalid_parameter, "cannot open config file " + path);
  ctx.config = Json::parse(in, nullptr, false);
  if (ctx.config.is_discarded() || !ctx.config.is_object())
    fail(errc::invalid_parameter, "config file is not a JSON object: " + path);
  return ctx;
}

Rat cfg_rat(const Ctx& ctx, const char* key) {
  const Json& v = ctx.config.at(key);
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long long>());
  fail(errc::invalid_parameter,
       std::string("config key \"") + key + "\" must be a rational string or integer");
}

// Flag > config > fallback.
Rat resolve_rat(const Ctx& ctx, const CLI::Option* opt, const std::string& raw,
                const char* key, const Rat& fallback) {
  if (opt->count()) return parse_rat(raw);
  if (ctx.has(key)) return cfg_rat(ctx, key);
  return fallback;
}

Rat require_rat(const Ctx& ctx, const CLI::Option* opt, const std::string& raw,
                const char* key) {
  if (opt->count()) return parse_rat(raw);
  if (ctx.has(key)) return cfg_rat(ctx, key);
  fail(errc::invalid_parameter, std::string("missing --") + key +
                                    " (flag or config value required)");
}

// Series order precedence: --series-order > ELLSTAB_SERIES_ORDER > config >
// library default.
int resolve_order(const Ctx& ctx, const CLI::Option* opt, int flag_value) {
  int order = default_order;
  if (opt->count()) {
    order = flag_value;
  } else if (const char* env = std::getenv("ELLSTAB_SERIES_ORDER")) {
    try {
      size_t used = 0;
      order = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      fail(errc::invalid_parameter,
           std::string("ELLSTAB_SERIES_ORDER is not an integer: ") + env);
    }
  } else if (ctx.has("series_order")) {
    const Json& v = ctx.config.at("series_order");
    if (!v.is_number_integer())
      fail(errc::invalid_parameter, "config key \"series_order\" must be an integer");
    order = v.get<int>();
  }
  if (order < 1) fail(errc::invalid_parameter, "series order must be positive");
  return order;
}

SurfaceGeometry resolve_geometry(const Ctx& ctx, const Rat& e, const Rat& m) {
  if (ctx.has("kx_f")) return make_geometry(e, m, cfg_rat(ctx, "kx_f"));
  return make_geometry(e, m);
}

void emit(const Json& j, const std::string& out_path) {
  std::string text = j.dump(2);
  text += "\n";
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(errc::invalid_parameter, "cannot open output file " + out_path);
  out << text;
}

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Weight curves S(param) = weight_of(Z(target), Z(candidate)) sampled on the
// family grid, optionally with the target charge itself. The ray family is
// sampled from beta > 0 (beta = 0 is not ample).
void write_curves(std::ostream& os, const StabilityFamily& fam,
                  const ChernClass& target, const std::vector<ChernClass>& cands,
                  int grid, bool with_charge) {
  os << "param";
  if (with_charge) os << ",re_Z,im_Z";
  for (const ChernClass& c : cands) os << "," << csv_quote("S_" + chern_literal(c));
  os << "\n";

  bool ray = fam.kind == FamilyKind::ray;
  double lo = rat_double(fam.lo);
  double hi = rat_double(fam.hi);
  double m = rat_double(fam.geom.m);
  double e = rat_double(fam.geom.e);
  double alpha = rat_double(fam.alpha);
  double bf = rat_double(fam.bfield);
  int start = (ray && lo == 0.0) ? 1 : 0;
  for (int i = start; i <= grid; ++i) {
    double t = lo + (hi - lo) * i / grid;
    DivisorOf<double> omega;
    if (ray) {
      omega = {t / alpha, t * (m + alpha) / alpha};
    } else {
      UVNumeric uv = solve_uv_numeric(m, alpha, e, t);
      omega = {uv.u, uv.u * m + t};
    }
    DivisorOf<double> B{0.0, bf};
    Cx<double> zt = z_omega_B<double>(target, omega, B, fam.geom);
    os << fmt12(t);
    if (with_charge) os << "," << fmt12(zt.re) << "," << fmt12(zt.im);
    for (const ChernClass& c : cands) {
      Cx<double> zc = z_omega_B<double>(c, omega, B, fam.geom);
      os << "," << fmt12(weight_of(zt, zc));
    }
    os << "\n";
  }
}

int run_transform(const Ctx& ctx, const std::string& chern, const CLI::Option* oe,
                  const std::string& e_raw, const CLI::Option* om,
                  const std::string& m_raw, bool inverse) {
  Rat e = resolve_rat(ctx, oe, e_raw, "e", 0);
  Rat m = resolve_rat(ctx, om, m_raw, "m", Rat(e + 1));
  SurfaceGeometry geom = resolve_geometry(ctx, e, m);
  ChernClass g = parse_chern_literal(chern);
  emit(chern_to_json(inverse ? phi_hat(g, geom) : phi(g, geom)), "");
  return 0;
}

int run_charge(const Ctx& ctx, const std::string& family, const std::string& omega_s,
               const std::string& b_s, const std::string& chern,
               const CLI::Option* oe, const std::string& e_raw,
               const CLI::Option* om, const std::string& m_raw, bool as_series) {
  if (family != "omegaB")
    fail(errc::invalid_parameter, "charge family must be omegaB");
  Rat e = resolve_rat(ctx, oe, e_raw, "e", 0);
  Rat m = resolve_rat(ctx, om, m_raw, "m", Rat(e + 1));
  SurfaceGeometry geom = resolve_geometry(ctx, e, m);
  DivisorRF omega = parse_divisor_literal(omega_s);
  DivisorRF B = parse_divisor_literal(b_s);
  ChernClass g = parse_chern_literal(chern);

  Json j;
  j["mode"] = "exact";
  if (as_series) {
    DivisorS omS{LaurentSeries::constant(QuadExt(omega.p)),
                 LaurentSeries::constant(QuadExt(omega.q))};
    DivisorS BS{LaurentSeries::constant(QuadExt(B.p)),
                LaurentSeries::constant(QuadExt(B.q))};
    Cx<LaurentSeries> z = z_omega_B<LaurentSeries>(g, omS, BS, geom);
    j["re"] = series_to_json(z.re);
    j["im"] = series_to_json(z.im);
  } else {
    DivisorQ omQ{QuadExt(omega.p), QuadExt(omega.q)};
    DivisorQ BQ{QuadExt(B.p), QuadExt(B.q)};
    Cx<QuadExt> z = z_omega_B<QuadExt>(g, omQ, BQ, geom);
    j["re"] = quad_to_json(z.re);
    j["im"] = quad_to_json(z.im);
  }
  try {
    DivisorS omS{LaurentSeries::constant(QuadExt(omega.p)),
                 LaurentSeries::constant(QuadExt(omega.q))};
    DivisorS BS{LaurentSeries::constant(QuadExt(B.p)),
                LaurentSeries::constant(QuadExt(B.q))};
    ChargeSpec spec = spec_omega_b(omS, BS, geom);
    j["phase_limit"] = phase_limit_to_json(phase(g, spec).limit);
  } catch (const error& err) {
    j["phase_limit"] = Json{{"error", err.what()}};
  }
  emit(j, "");
  return 0;
}

int run_solve(const Ctx& ctx, const CLI::Option* omf, const std::string& m_raw,
              const CLI::Option* oa, const std::string& a_raw,
              const CLI::Option* oe, const std::string& e_raw,
              const CLI::Option* ov, double v, const CLI::Option* oord,
              int order_flag, bool gepner) {
  Rat m = require_rat(ctx, omf, m_raw, "m");
  Rat alpha = resolve_rat(ctx, oa, a_raw, "alpha", 1);
  Rat e = resolve_rat(ctx, oe, e_raw, "e", 0);
  if (ov->count() && oord->count())
    fail(errc::invalid_parameter, "choose one of --v and --series-order");

  Json j;
  if (gepner) {
    GepnerPoint gp = gepner_params(m, alpha, e);
    QuadExt quad_res = QuadExt(Rat(m - e / 2)) * gp.u * gp.u + gp.v * gp.u -
                       QuadExt(Rat(m + alpha - e));
    QuadExt beta_res = gp.beta * gp.beta * QuadExt(Rat(m + alpha - e / 2)) /
                           QuadExt(Rat(alpha * alpha)) -
                       (QuadExt(Rat(m - e)) + gp.v / gp.u);
    j["mode"] = "exact";
    j["u"] = quad_to_json(gp.u);
    j["beta"] = quad_to_json(gp.beta);
    j["v"] = quad_to_json(gp.v);
    j["residuals"] = Json{{"quadratic", quad_to_json(quad_res)},
                          {"beta_relation", quad_to_json(beta_res)}};
    emit(j, "");
    return (quad_res.is_zero() && beta_res.is_zero()) ? 0 : 2;
  }

  if (ov->count()) {
    double md = rat_double(m), ad = rat_double(alpha), ed = rat_double(e);
    UVNumeric uv = solve_uv_numeric(md, ad, ed, v);
    double A = md + ad - ed;
    double r_quad = (md - ed / 2) * uv.u * uv.u + v * uv.u - A;
    double r_beta =
        uv.beta * uv.beta * (md + ad - ed / 2) / (ad * ad) - (md - ed + v / uv.u);
    double scale = std::max(1.0, std::abs(A));
    bool pass = std::abs(r_quad) <= 1e-12 * scale && std::abs(r_beta) <= 1e-12 * scale;
    j["mode"] = "float";
    j["tolerance"] = 1e-12;
    j["u"] = uv.u;
    j["beta"] = uv.beta;
    j["v"] = v;
    j["residuals"] = Json{{"quadratic", r_quad}, {"beta_relation", r_beta}};
    emit(j, "");
    return pass ? 0 : 2;
  }

  int order = resolve_order(ctx, oord, order_flag);
  LaurentSeries u = solve_u_series(m, alpha, e, order);
  LaurentSeries bsq = solve_beta_sq_series(m, alpha, e, order);
  LaurentSeries resid = scale(u * u, QuadExt(Rat(m - e / 2))) +
                        u * LaurentSeries::v() -
                        LaurentSeries::constant(QuadExt(Rat(m + alpha - e)));
  bool zero = is_zero_through(resid, order - 1);
  j["mode"] = "exact";
  j["order"] = order;
  j["series"] = Json{{"u", series_to_json(u)}, {"beta_sq", series_to_json(bsq)}};
  j["residuals"] =
      Json{{"quadratic", zero ? "0" : "nonzero"}, {"zero_through", order - 1}};
  emit(j, "");
  return zero ? 0 : 2;
}

int run_verify(const Ctx& ctx, const std::string& suite, const CLI::Option* omf,
               const std::string& m_raw, const CLI::Option* oa,
               const std::string& a_raw, const CLI::Option* oe,
               const std::string& e_raw, const CLI::Option* oq,
               const std::string& q_raw, const CLI::Option* ov, double v,
               const CLI::Option* oord, int order_flag) {
  Json j;
  j["suite"] = suite;
  if (suite == "curve") {
    CurveRotationReport rep = verify_curve_rotation(1000, 20240817u);
    j["mode"] = "exact";
    j["pass"] = rep.pass;
    j["checked"] = rep.checked;
    emit(j, "");
    return rep.pass ? 0 : 2;
  }
  if (suite != "commutation" && suite != "gepner")
    fail(errc::invalid_parameter, "suite must be commutation, gepner or curve");

  Rat m = require_rat(ctx, omf, m_raw, "m");
  Rat alpha = resolve_rat(ctx, oa, a_raw, "alpha", 1);
  Rat e = resolve_rat(ctx, oe, e_raw, "e", 0);
  Rat q = resolve_rat(ctx, oq, q_raw, "q", 0);
  SurfaceGeometry geom = resolve_geometry(ctx, e, m);

  CommutationCheck check;
  if (suite == "gepner") {
    check.mode = CommutationMode::gepner;
  } else if (ov->count()) {
    if (oord->count())
      fail(errc::invalid_parameter, "choose one of --v and --series-order");
    check.mode = CommutationMode::numeric;
    check.v = v;
  } else {
    check.mode = CommutationMode::series;
    check.order = resolve_order(ctx, oord, order_flag);
  }

  CommutationReport rep = verify_commutation(geom, alpha, q, check);
  j["mode"] = rep.exact ? "exact" : "float";
  if (!rep.exact) j["tolerance"] = commutation_tolerance;
  j["pass"] = rep.pass;
  j["max_residual"] = rep.max_residual;
  if (suite == "gepner") j["omega_fixed"] = rep.omega_fixed;
  Json gens = Json::array();
  for (size_t i = 0; i < rep.entries.size() && i < 5; ++i) {
    const CommutationEntry& entry = rep.entries[i];
    gens.push_back(Json{{"source", chern_to_json(entry.source)},
                        {"residual", entry.residual},
                        {"exact_zero", entry.exact_zero}});
  }
  j["per_generator"] = gens;
  j["classes_checked"] = rep.entries.size();
  emit(j, "");
  return rep.pass ? 0 : 2;
}

struct FamilyArgs {
  std::string chern, family, interval;
  std::string m_raw, a_raw, e_raw, q_raw, l_raw;
  const CLI::Option *omf = nullptr, *oa = nullptr, *oe = nullptr, *oq = nullptr,
                    *ol = nullptr;
  int grid = 512;
  int box = 5;
};

struct ResolvedFamily {
  StabilityFamily fam;
  ChernClass target;
  Rat q, l;
};

ResolvedFamily resolve_family(const Ctx& ctx, const FamilyArgs& args) {
  if (args.family != "ray" && args.family != "hyperbola")
    fail(errc::invalid_parameter, "family must be ray or hyperbola");
  Rat m = require_rat(ctx, args.omf, args.m_raw, "m");
  Rat alpha = resolve_rat(ctx, args.oa, args.a_raw, "alpha", 1);
  Rat e = resolve_rat(ctx, args.oe, args.e_raw, "e", 0);
  SurfaceGeometry geom = resolve_geometry(ctx, e, m);

  Rat q, l;
  if (args.ol->count() && (args.oq->count() || ctx.has("q"))) {
    l = parse_rat(args.l_raw);
    q = resolve_rat(ctx, args.oq, args.q_raw, "q", 0);
    if (l != lq_relation_l(e, q))
      fail(errc::invalid_parameter, "l = e/2 + q violated");
  } else if (args.ol->count()) {
    l = parse_rat(args.l_raw);
    q = lq_relation_q(e, l);
  } else {
    q = resolve_rat(ctx, args.oq, args.q_raw, "q", 0);
    l = lq_relation_l(e, q);
  }

  std::vector<std::string> ends;
  {
    std::stringstream ss(args.interval);
    std::string piece;
    while (std::getline(ss, piece, ',')) ends.push_back(piece);
  }
  if (ends.size() != 2)
    fail(errc::invalid_parameter, "interval must be \"a,b\"");
  Rat lo = parse_rat(ends[0]);
  Rat hi = parse_rat(ends[1]);

  ResolvedFamily out;
  out.q = q;
  out.l = l;
  out.fam = args.family == "ray" ? ray_family(geom, alpha, l, lo, hi)
                                 : hyperbola_family(geom, alpha, q, lo, hi);
  out.target = parse_chern_literal(args.chern);
  return out;
}

Json family_params_json(const ResolvedFamily& rf, int grid, int box) {
  return Json{{"m", rat_str(rf.fam.geom.m)},
              {"e", rat_str(rf.fam.geom.e)},
              {"alpha", rat_str(rf.fam.alpha)},
              {"q", rat_str(rf.q)},
              {"l", rat_str(rf.l)},
              {"interval", Json::array({rat_str(rf.fam.lo), rat_str(rf.fam.hi)})},
              {"grid", grid},
              {"box", box}};
}

int run_walls(const Ctx& ctx, const FamilyArgs& args, const CLI::Option* oout,
              const std::string& out_raw, const std::string& csv_path) {
  ResolvedFamily rf = resolve_family(ctx, args);
  std::vector<ChernClass> cands = candidate_classes(rf.target, rf.fam, args.box);
  std::vector<Wall> walls = find_walls(rf.target, rf.fam, args.box, args.grid);

  bool ray = rf.fam.kind == FamilyKind::ray;
  Json j;
  j["family"] = args.family;
  j["params"] = family_params_json(rf, args.grid, args.box);
  j["target"] = chern_to_json(rf.target);
  Json arr = Json::array();
  for (const Wall& w : walls) {
    arr.push_back(Json{{"param", w.param},
                       {"param_exact",
                        w.exact ? Json(quad_str(*w.exact)) : Json(nullptr)},
                       {"destabilizer", chern_to_json(w.destabilizer)},
                       {"target", chern_to_json(w.target)}});
  }
  j["walls"] = arr;
  Json meta{{"candidates", cands.size()},
            {"wall_count", walls.size()},
            {"mode", ray ? "exact" : "float"}};
  if (!ray) meta["bisection_tolerance"] = 1e-10;
  j["scan_metadata"] = meta;

  std::string out_path = oout->count() ? out_raw
                         : ctx.has("out") ? ctx.config.at("out").get<std::string>()
                                          : std::string();
  emit(j, out_path);

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) fail(errc::invalid_parameter, "cannot open output file " + csv_path);
    write_curves(csv, rf.fam, rf.target, cands, args.grid, false);
  }
  return 0;
}

int run_plot_data(const Ctx& ctx, const FamilyArgs& args, const std::string& out_path) {
  ResolvedFamily rf = resolve_family(ctx, args);
  std::vector<ChernClass> cands = candidate_classes(rf.target, rf.fam, args.box);
  if (out_path.empty()) {
    std::ostringstream buf;
    write_curves(buf, rf.fam, rf.target, cands, args.grid, true);
    std::fputs(buf.str().c_str(), stdout);
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(errc::invalid_parameter, "cannot open output file " + out_path);
  write_curves(out, rf.fam, rf.target, cands, args.grid, true);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stability-family toolkit for elliptic-surface Chern data"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags override it)");

  // transform
  auto* t_cmd = app.add_subcommand("transform", "apply the lattice transform");
  std::string t_chern, t_e = "0", t_m;
  bool t_inverse = false;
  t_cmd->add_option("--chern", t_chern, "class literal n,x,y,xi2,s")->required();
  auto* t_oe = t_cmd->add_option("--e", t_e, "e = -Theta^2");
  auto* t_om = t_cmd->add_option("--m", t_m, "ampleness threshold (default e+1)");
  t_cmd->add_flag("--inverse", t_inverse, "apply the quasi-inverse instead");

  // charge
  auto* c_cmd = app.add_subcommand("charge", "evaluate a central charge");
  std::string c_family = "omegaB", c_omega, c_b = "0,0", c_chern, c_e = "0", c_m;
  bool c_series = false;
  c_cmd->add_option("--family", c_family, "charge family (omegaB)");
  c_cmd->add_option("--omega", c_omega, "polarization literal p,q")->required();
  c_cmd->add_option("--B", c_b, "B-field literal p,q");
  c_cmd->add_option("--chern", c_chern, "class literal n,x,y,xi2,s")->required();
  auto* c_oe = c_cmd->add_option("--e", c_e, "e = -Theta^2");
  auto* c_om = c_cmd->add_option("--m", c_m, "ampleness threshold (default e+1)");
  c_cmd->add_flag("--series", c_series, "emit re/im as series objects");

  // solve
  auto* s_cmd = app.add_subcommand("solve", "solve the family-matching equations");
  std::string s_m, s_a = "1", s_e = "0";
  double s_v = 0;
  int s_order = default_order;
  bool s_gepner = false;
  auto* s_om = s_cmd->add_option("--m", s_m, "ampleness threshold");
  auto* s_oa = s_cmd->add_option("--alpha", s_a, "ray-family alpha");
  auto* s_oe = s_cmd->add_option("--e", s_e, "e = -Theta^2");
  auto* s_ov = s_cmd->add_option("--v", s_v, "numeric parameter value");
  auto* s_oord = s_cmd->add_option("--series-order", s_order, "series truncation order");
  s_cmd->add_flag("--gepner", s_gepner, "solve at the self-matching point");

  // verify
  auto* v_cmd = app.add_subcommand("verify", "run an identity suite");
  std::string v_suite, v_m, v_a = "1", v_e = "0", v_q = "0";
  double v_v = 0;
  int v_order = default_order;
  v_cmd->add_option("--suite", v_suite, "commutation|gepner|curve")->required();
  auto* v_om = v_cmd->add_option("--m", v_m, "ampleness threshold");
  auto* v_oa = v_cmd->add_option("--alpha", v_a, "ray-family alpha");
  auto* v_oe = v_cmd->add_option("--e", v_e, "e = -Theta^2");
  auto* v_oq = v_cmd->add_option("--q", v_q, "hyperbola-side B-field coefficient");
  auto* v_ov = v_cmd->add_option("--v", v_v, "numeric parameter value");
  auto* v_oord = v_cmd->add_option("--series-order", v_order, "series truncation order");

  // walls
  auto* w_cmd = app.add_subcommand("walls", "find mini-walls in a family window");
  FamilyArgs w_args;
  std::string w_out, w_csv;
  w_cmd->add_option("--chern", w_args.chern, "target class literal")->required();
  w_cmd->add_option("--family", w_args.family, "ray|hyperbola")->required();
  w_args.omf = w_cmd->add_option("--m", w_args.m_raw, "ampleness threshold");
  w_args.oa = w_cmd->add_option("--alpha", w_args.a_raw, "ray-family alpha");
  w_args.oe = w_cmd->add_option("--e", w_args.e_raw, "e = -Theta^2");
  w_args.oq = w_cmd->add_option("--q", w_args.q_raw, "hyperbola-side B-field");
  w_args.ol = w_cmd->add_option("--l", w_args.l_raw, "ray-side B-field (l = e/2 + q)");
  w_cmd->add_option("--interval", w_args.interval, "scan window a,b")->required();
  w_cmd->add_option("--grid", w_args.grid, "scan grid size");
  w_cmd->add_option("--bounds", w_args.box, "candidate coordinate box");
  auto* w_oout = w_cmd->add_option("--out", w_out, "write JSON here instead of stdout");
  w_cmd->add_option("--csv", w_csv, "also write weight curves as CSV");

  // plot-data
  auto* p_cmd = app.add_subcommand("plot-data", "emit charge and weight curves as CSV");
  FamilyArgs p_args;
  std::string p_out;
  p_cmd->add_option("--chern", p_args.chern, "target class literal")->required();
  p_cmd->add_option("--family", p_args.family, "ray|hyperbola")->required();
  p_args.omf = p_cmd->add_option("--m", p_args.m_raw, "ampleness threshold");
  p_args.oa = p_cmd->add_option("--alpha", p_args.a_raw, "ray-family alpha");
  p_args.oe = p_cmd->add_option("--e", p_args.e_raw, "e = -Theta^2");
  p_args.oq = p_cmd->add_option("--q", p_args.q_raw, "hyperbola-side B-field");
  p_args.ol = p_cmd->add_option("--l", p_args.l_raw, "ray-side B-field (l = e/2 + q)");
  p_cmd->add_option("--interval", p_args.interval, "scan window a,b")->required();
  p_cmd->add_option("--grid", p_args.grid, "sample count");
  p_cmd->add_option("--bounds", p_args.box, "candidate coordinate box");
  p_cmd->add_option("--out", p_out, "write CSV here instead of stdout");

  // gepner
  auto* g_cmd = app.add_subcommand("gepner", "closed-form self-matching parameters");
  std::string g_m, g_a = "1", g_e = "0";
  auto* g_om = g_cmd->add_option("--m", g_m, "ampleness threshold");
  auto* g_oa = g_cmd->add_option("--alpha", g_a, "ray-family alpha");
  auto* g_oe = g_cmd->add_option("--e", g_e, "e = -Theta^2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Ctx ctx = load_config(config_path);
    if (t_cmd->parsed())
      return run_transform(ctx, t_chern, t_oe, t_e, t_om, t_m, t_inverse);
    if (c_cmd->parsed())
      return run_charge(ctx, c_family, c_omega, c_b, c_chern, c_oe, c_e, c_om, c_m,
                        c_series);
    if (s_cmd->parsed())
      return run_solve(ctx, s_om, s_m, s_oa, s_a, s_oe, s_e, s_ov, s_v, s_oord,
                       s_order, s_gepner);
    if (v_cmd->parsed())
      return run_verify(ctx, v_suite, v_om, v_m, v_oa, v_a, v_oe, v_e, v_oq, v_q,
                        v_ov, v_v, v_oord, v_order);
    if (w_cmd->parsed()) return run_walls(ctx, w_args, w_oout, w_out, w_csv);
    if (p_cmd->parsed()) return run_plot_data(ctx, p_args, p_out);
    if (g_cmd->parsed()) {
      Rat m = require_rat(ctx, g_om, g_m, "m");
      Rat alpha = resolve_rat(ctx, g_oa, g_a, "alpha", 1);
      Rat e = resolve_rat(ctx, g_oe, g_e, "e", 0);
      GepnerPoint gp = gepner_params(m, alpha, e);
      emit(Json{{"mode", "exact"},
                {"u", quad_to_json(gp.u)},
                {"beta", quad_to_json(gp.beta)},
                {"v", quad_to_json(gp.v)}},
           "");
      return 0;
    }
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
