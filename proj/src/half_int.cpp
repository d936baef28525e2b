#include "su3/half_int.hpp"

#include <ostream>
#include <stdexcept>

namespace su3 {

int HalfInt::as_integer() const {
  if (!is_integer()) throw std::domain_error("HalfInt " + to_string() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

int sign_power(HalfInt x) {
  const int k = x.as_integer();
  return (k % 2 == 0) ? 1 : -1;
}

}  // namespace su3
