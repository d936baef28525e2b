#pragma once

#include <stdexcept>

namespace su3 {

/// Input data failed a numerical precondition (e.g. a matrix is not in SU(3)).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed form produced an impossible intermediate (e.g. a half-integral sign exponent).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace su3
