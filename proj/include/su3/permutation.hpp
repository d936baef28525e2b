#pragma once

// The Weyl group of SU(3), realized as S3 acting on particle labels 1, 2, 3.
//
// An element pi acts on three-particle functions by
//   (P_pi Psi)(x1, x2, x3) = Psi(x_pi(1), x_pi(2), x_pi(3)),
// so P_a P_b = P_{a o b}, and the particle that carried weight component k
// afterwards sits at position pi(k): nu'_{pi(k)} = nu_k.

#include <array>
#include <string>
#include <string_view>

namespace su3 {

enum class WeylElement { identity, p12, p13, p23, p123, p132 };

inline constexpr std::array<WeylElement, 6> kWeylElements = {
    WeylElement::identity, WeylElement::p12,  WeylElement::p13,
    WeylElement::p23,      WeylElement::p123, WeylElement::p132};

/// Zero-based image table: image(w)[k] = pi(k).
std::array<int, 3> image(WeylElement w);

/// Group law a o b (b applied first).
WeylElement compose(WeylElement a, WeylElement b);
WeylElement inverse(WeylElement w);

/// Weight after the permutation: result[pi(k)] = nu[k].
std::array<int, 3> permute_weight(WeylElement w, const std::array<int, 3>& nu);

/// "e", "12", "13", "23", "123", "132"
std::string to_string(WeylElement w);
/// Throws std::invalid_argument on unknown names.
WeylElement parse_weyl_element(std::string_view name);

}  // namespace su3
