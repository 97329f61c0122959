#pragma once

#include <json.hpp>

#include <string>

#include "ellstab/lattice.hpp"
#include "ellstab/quadext.hpp"
#include "ellstab/series.hpp"

namespace ellstab {

using Json = nlohmann::json;

// {"n":"p/q","x":"p/q","y":"p/q","xi2":"p/q","s":"p/q"}; canonical rational
// strings, so emitted classes re-parse bit-exactly.
Json chern_to_json(const ChernClass& g);
ChernClass chern_from_json(const Json& j);

// Command-line literal "n,x,y,xi2,s".
ChernClass parse_chern_literal(const std::string& s);
std::string chern_literal(const ChernClass& g);

// Command-line literal "p,q" for a divisor p*Theta + q*f.
DivisorRF parse_divisor_literal(const std::string& s);

// Canonical string form of an extension value ("p/q" or "a+b*sqrt(D)").
Json quad_to_json(const QuadExt& q);

Json series_to_json(const LaurentSeries& f);

Json phase_limit_to_json(const PhaseLimit& p);

}  // namespace ellstab
