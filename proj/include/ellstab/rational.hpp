#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ellstab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Rat& r) { return r.sign(); }
inline int sgn(const Int& n) { return n.sign(); }

// Canonical string form: "p/q" in lowest terms with q > 0, plain "p" when
// q == 1. parse_rat accepts both forms.
std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

double rat_double(const Rat& r);

Int floor_div(const Int& a, const Int& b);
Rat rat_floor(const Rat& r);

// True when r is the square of a rational; writes the nonnegative root.
bool rat_sqrt(const Rat& r, Rat& root);

}  // namespace ellstab
