#pragma once

#include "hlgf/continuum.hpp"

namespace hlgf::testing {

inline CutoffOptions at_resolution(int r) {
  CutoffOptions options;
  options.resolution = r;
  return options;
}

}  // namespace hlgf::testing
