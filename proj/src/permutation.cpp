#include "su3/permutation.hpp"

#include <stdexcept>

namespace su3 {

std::array<int, 3> image(WeylElement w) {
  switch (w) {
    case WeylElement::identity: return {0, 1, 2};
    case WeylElement::p12: return {1, 0, 2};
    case WeylElement::p13: return {2, 1, 0};
    case WeylElement::p23: return {0, 2, 1};
    case WeylElement::p123: return {1, 2, 0};
    case WeylElement::p132: return {2, 0, 1};
  }
  throw std::logic_error("unreachable WeylElement");
}

namespace {

WeylElement from_image(const std::array<int, 3>& img) {
  for (WeylElement w : kWeylElements)
    if (image(w) == img) return w;
  throw std::logic_error("not a permutation of {0,1,2}");
}

}  // namespace

WeylElement compose(WeylElement a, WeylElement b) {
  const auto ia = image(a), ib = image(b);
  std::array<int, 3> out{};
  for (int k = 0; k < 3; ++k) out[k] = ia[ib[k]];
  return from_image(out);
}

WeylElement inverse(WeylElement w) {
  const auto iw = image(w);
  std::array<int, 3> out{};
  for (int k = 0; k < 3; ++k) out[iw[k]] = k;
  return from_image(out);
}

std::array<int, 3> permute_weight(WeylElement w, const std::array<int, 3>& nu) {
  const auto iw = image(w);
  std::array<int, 3> out{};
  for (int k = 0; k < 3; ++k) out[iw[k]] = nu[k];
  return out;
}

std::string to_string(WeylElement w) {
  switch (w) {
    case WeylElement::identity: return "e";
    case WeylElement::p12: return "12";
    case WeylElement::p13: return "13";
    case WeylElement::p23: return "23";
    case WeylElement::p123: return "123";
    case WeylElement::p132: return "132";
  }
  throw std::logic_error("unreachable WeylElement");
}

WeylElement parse_weyl_element(std::string_view name) {
  for (WeylElement w : kWeylElements)
    if (to_string(w) == name) return w;
  throw std::invalid_argument("unknown Weyl element '" + std::string(name) +
                              "' (expected e, 12, 13, 23, 123 or 132)");
}

}  // namespace su3
