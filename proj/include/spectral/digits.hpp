#pragma once

#include <array>
#include <utility>

#include "spectral/linear.hpp"

namespace spectral {

// Four-element digit set {0, (a1,a2), (b1,b2), -(a1+b1, a2+b2)} encoded by
// its two generators.  Non-collinear means a1*b2 - a2*b1 != 0, which also
// forces the four digits to be pairwise distinct.
struct digit_set4 {
    Int alpha1{0}, alpha2{0}, beta1{0}, beta2{0};

    bool operator==(const digit_set4&) const = default;

    Int cross() const { return alpha1 * beta2 - alpha2 * beta1; }

    ivec2 alpha_vec() const { return {alpha1, alpha2}; }
    ivec2 beta_vec() const { return {beta1, beta2}; }
};

inline void validate(const digit_set4& d) {
    if (d.cross() == 0) fail(errc::collinear_digits, "digit generators are collinear");
}

/// The four digits in fixed order: zero, alpha vector, beta vector, negated sum.
inline std::array<ivec2, 4> digits_of(const digit_set4& d) {
    validate(d);
    return {ivec2{0, 0}, d.alpha_vec(), d.beta_vec(),
            ivec2{-d.alpha1 - d.beta1, -d.alpha2 - d.beta2}};
}

/// Divides out the overall gcd g; spectrality is unchanged by the scaling.
inline std::pair<digit_set4, Int> normalize(const digit_set4& d) {
    validate(d);
    Int g = gcd4(d.alpha1, d.alpha2, d.beta1, d.beta2);
    return {digit_set4{d.alpha1 / g, d.alpha2 / g, d.beta1 / g, d.beta2 / g}, g};
}

inline bool is_primitive(const digit_set4& d) {
    return gcd4(d.alpha1, d.alpha2, d.beta1, d.beta2) == 1;
}

/// alpha1*beta2 - alpha2*beta1 = 2^eta * gamma with gamma odd.
inline std::pair<int, Int> eta_of(const digit_set4& d) {
    validate(d);
    return split_pow2(d.cross());
}

inline digit_set4 scale(const digit_set4& d, const Int& k) {
    return {d.alpha1 * k, d.alpha2 * k, d.beta1 * k, d.beta2 * k};
}

inline digit_set4 apply(const imat2& u, const digit_set4& d) {
    ivec2 va = u * d.alpha_vec();
    ivec2 vb = u * d.beta_vec();
    return {va.x, va.y, vb.x, vb.y};
}

} // namespace spectral
