#include "ellstab/rational.hpp"

#include "ellstab/errors.hpp"

namespace ellstab {

std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rat parse_rat(const std::string& s) {
  auto bad = [&] { fail(errc::invalid_parameter, "malformed rational: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  auto check_int = [&](std::string t) {
    if (t.empty()) bad();
    if (t[0] == '+') t.erase(0, 1);
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') bad();
    return t;
  };
  if (slash == std::string::npos) return Rat(Int(check_int(s)));
  std::string num = check_int(s.substr(0, slash));
  std::string den = check_int(s.substr(slash + 1));
  Int d(den);
  if (d == 0) fail(errc::invalid_parameter, "zero denominator: '" + s + "'");
  return Rat(Int(num), d);
}

double rat_double(const Rat& r) { return r.convert_to<double>(); }

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Rat rat_floor(const Rat& r) { return Rat(floor_div(numerator(r), denominator(r))); }

bool rat_sqrt(const Rat& r, Rat& root) {
  if (r < 0) return false;
  Int pn = sqrt(numerator(r));
  if (pn * pn != numerator(r)) return false;
  Int pd = sqrt(denominator(r));
  if (pd * pd != denominator(r)) return false;
  root = Rat(pn, pd);
  return true;
}

}  // namespace ellstab
