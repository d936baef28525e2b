#pragma once

#include <compare>
#include <iosfwd>
#include <string>

namespace su3 {

/// Exact half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int value) : twice_(2 * value) {}

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }

  /// Integer value; throws std::domain_error for odd twice().
  int as_integer() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string to_string() const;

 private:
  int twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

/// Triangle condition |a-b| <= c <= a+b with a+b+c integral.
constexpr bool triangle(HalfInt a, HalfInt b, HalfInt c) {
  const int s = a.twice() + b.twice() + c.twice();
  if (s % 2 != 0) return false;
  const int d = a.twice() - b.twice();
  return c.twice() >= (d < 0 ? -d : d) && c.twice() <= a.twice() + b.twice();
}

/// (-1)^x for integral x; throws std::domain_error otherwise.
int sign_power(HalfInt x);

}  // namespace su3
