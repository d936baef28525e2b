#pragma once

#include <array>
#include <stdexcept>

namespace su3 {

/// The SU(2)_ij subgroups acting on index pairs (1,2), (1,3), (2,3).
enum class Subgroup { s12, s13, s23 };

/// One-based index pair (i, j) of SU(2)_ij.
constexpr std::array<int, 2> subgroup_indices(Subgroup s) {
  switch (s) {
    case Subgroup::s12: return {1, 2};
    case Subgroup::s13: return {1, 3};
    case Subgroup::s23: return {2, 3};
  }
  throw std::logic_error("unreachable Subgroup");
}

/// z-y-z Euler angles in radians.
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

}  // namespace su3
