#pragma once

#include <stdexcept>
#include <string>

namespace ellstab {

// Every recoverable failure in the library carries one of these tags so
// callers (and the CLI exit-code logic) can react without string matching.
enum class errc {
  division_by_zero,
  odd_leading_degree,
  nonpositive_leading,
  nonrational_sqrt,
  indeterminate,
  incompatible_radicand,
  kernel_class,
  phase_outside_branch,
  branch_not_quarter,
  no_solution,
  underdetermined,
  invalid_parameter,
  grid_exhausted,
};

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) {
  throw error(c, what);
}

}  // namespace ellstab
