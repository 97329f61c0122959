#pragma once

#include <random>

#include "ellstab/lattice.hpp"

namespace testutil {

inline std::mt19937_64 make_rng(unsigned seed = 20240817u) { return std::mt19937_64(seed); }

inline ellstab::Rat random_rat(std::mt19937_64& rng, int num_range = 9, int den_max = 3) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  return ellstab::Rat(num(rng), den(rng));
}

inline ellstab::ChernClass random_class(std::mt19937_64& rng, bool with_xi2 = true) {
  ellstab::ChernClass g;
  g.n = random_rat(rng);
  g.x = random_rat(rng);
  g.y = random_rat(rng);
  g.xi2 = with_xi2 ? random_rat(rng) : ellstab::Rat(0);
  g.s = random_rat(rng);
  return g;
}

inline ellstab::ChernClass random_integral_class(std::mt19937_64& rng, int range = 6) {
  std::uniform_int_distribution<int> coord(-range, range);
  std::uniform_int_distribution<int> half(-2 * range, 2 * range);
  ellstab::ChernClass g;
  g.n = coord(rng);
  g.x = coord(rng);
  g.y = coord(rng);
  g.xi2 = 0;
  g.s = ellstab::Rat(half(rng), 2);
  return g;
}

}  // namespace testutil
