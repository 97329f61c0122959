#include "ellstab/jsonio.hpp"

#include <vector>

#include "ellstab/errors.hpp"

namespace ellstab {

namespace {

std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    std::string field = s.substr(start, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - start);
    size_t a = field.find_first_not_of(" \t");
    size_t b = field.find_last_not_of(" \t");
    out.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Rat rat_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string())
    fail(errc::invalid_parameter,
         std::string("chern json needs a string field \"") + key + "\"");
  return parse_rat(j.at(key).get<std::string>());
}

}  // namespace

Json chern_to_json(const ChernClass& g) {
  return Json{{"n", rat_str(g.n)},
              {"x", rat_str(g.x)},
              {"y", rat_str(g.y)},
              {"xi2", rat_str(g.xi2)},
              {"s", rat_str(g.s)}};
}

ChernClass chern_from_json(const Json& j) {
  ChernClass g;
  g.n = rat_field(j, "n");
  g.x = rat_field(j, "x");
  g.y = rat_field(j, "y");
  g.xi2 = rat_field(j, "xi2");
  g.s = rat_field(j, "s");
  return g;
}

ChernClass parse_chern_literal(const std::string& s) {
  std::vector<std::string> f = split_fields(s);
  if (f.size() != 5)
    fail(errc::invalid_parameter,
         "chern literal must be \"n,x,y,xi2,s\": got \"" + s + "\"");
  ChernClass g;
  g.n = parse_rat(f[0]);
  g.x = parse_rat(f[1]);
  g.y = parse_rat(f[2]);
  g.xi2 = parse_rat(f[3]);
  g.s = parse_rat(f[4]);
  return g;
}

std::string chern_literal(const ChernClass& g) {
  return rat_str(g.n) + "," + rat_str(g.x) + "," + rat_str(g.y) + "," +
         rat_str(g.xi2) + "," + rat_str(g.s);
}

DivisorRF parse_divisor_literal(const std::string& s) {
  std::vector<std::string> f = split_fields(s);
  if (f.size() != 2)
    fail(errc::invalid_parameter,
         "divisor literal must be \"p,q\": got \"" + s + "\"");
  return {parse_rat(f[0]), parse_rat(f[1])};
}

Json quad_to_json(const QuadExt& q) { return quad_str(q); }

Json series_to_json(const LaurentSeries& f) {
  Json coeffs = Json::array();
  for (const QuadExt& c : f.coeffs) coeffs.push_back(quad_str(c));
  return Json{{"lowest_degree", f.lowest_degree},
              {"coefficients", coeffs},
              {"truncation_order", f.truncation_order},
              {"exact", f.exact}};
}

Json phase_limit_to_json(const PhaseLimit& p) {
  return Json{{"even", p.even},
              {"dir_x", quad_str(p.x)},
              {"dir_y", quad_str(p.y)},
              {"approx", p.to_double()}};
}

}  // namespace ellstab
