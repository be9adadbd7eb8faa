#pragma once

#include <complex>
#include <vector>

#include "spectral/mask.hpp"

namespace spectral {

// Resource caps; overridable through the unsafe flag (CLI --unsafe).
inline constexpr int measure_level_cap = 8; // 4^8 = 65536 atoms
inline constexpr int verify_level_cap = 5;  // ~5*10^5 all-pairs checks

inline void check_level(int n, int cap, bool unsafe) {
    if (n < 1) fail(errc::invalid_input, "level must be >= 1");
    if (!unsafe && n > cap)
        fail(errc::level_too_large,
             "level " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// Level-n convolution approximant: 4^n equally weighted rational atoms
// sum_{k=1..n} M^-k d_k, ordered by digit word (d_1, ..., d_n).
struct finite_measure_t {
    int level{0};
    std::vector<qvec2> atoms;
    Rat weight{1};
};

inline finite_measure_t finite_measure(const imat2& m, const digit_set4& d, int n,
                                       bool unsafe = false) {
    check_level(n, measure_level_cap, unsafe);
    if (!is_expansive(m)) fail(errc::not_expansive, "matrix is not expansive");
    qmat2 minv = inverse(m);
    auto digs = digits_of(d);

    std::vector<qvec2> atoms{qvec2{0, 0}};
    for (int k = 0; k < n; ++k) {
        std::vector<qvec2> next;
        next.reserve(atoms.size() * 4);
        for (const auto& dig : digs)
            for (const auto& a : atoms) next.push_back(minv * (a + to_qvec(dig)));
        atoms = std::move(next);
    }

    finite_measure_t out;
    out.level = n;
    out.atoms = std::move(atoms);
    out.weight = Rat(1) / Rat(pow2(2 * n));
    return out;
}

/// Level-n Moran approximant: atoms A^-1 sum_{k=0..n-1} M^-k d_k.
inline finite_measure_t moran_finite(const imat2& a, const imat2& m, const digit_set4& d, int n,
                                     bool unsafe = false) {
    check_level(n, measure_level_cap, unsafe);
    if (a.det() == 0) fail(errc::singular_matrix, "Moran prefactor is singular");
    qmat2 ainv = inverse(a);
    qmat2 minv = inverse(m);
    auto digs = digits_of(d);

    // Inner values sum_{k=0..n-1} M^-k d_k via V = d_0 + M^-1 V_rest,
    // ordered by digit word (d_0, ..., d_{n-1}).
    std::vector<qvec2> vals{qvec2{0, 0}};
    for (int k = 0; k < n; ++k) {
        std::vector<qvec2> next;
        next.reserve(vals.size() * 4);
        for (const auto& dig : digs)
            for (const auto& v : vals) next.push_back(to_qvec(dig) + minv * v);
        vals = std::move(next);
    }
    finite_measure_t out;
    out.level = n;
    out.atoms.reserve(vals.size());
    for (const auto& v : vals) out.atoms.push_back(ainv * v);
    out.weight = Rat(1) / Rat(pow2(2 * n));
    return out;
}

namespace detail {

struct dmat2 {
    double a, b, c, d;
    void apply(double& x, double& y) const {
        double nx = a * x + b * y, ny = c * x + d * y;
        x = nx;
        y = ny;
    }
};

inline dmat2 star_inverse_d(const imat2& m) {
    double det = to_double(m.det());
    // (M*)^-1 = adj(M*)/det
    return {to_double(m.d) / det, -to_double(m.c) / det, -to_double(m.b) / det,
            to_double(m.a) / det};
}

} // namespace detail

/// Truncated transform prod_{j=1..n} m_D(M*^-j xi); double precision.
inline std::complex<double> muhat_truncated(const imat2& m, const digit_set4& d, double xi1,
                                            double xi2, int n) {
    if (!is_expansive(m)) fail(errc::not_expansive, "matrix is not expansive");
    auto inv = detail::star_inverse_d(m);
    std::complex<double> prod{1.0, 0.0};
    for (int j = 0; j < n; ++j) {
        inv.apply(xi1, xi2);
        prod *= mask_eval(d, xi1, xi2);
    }
    return prod;
}

/// Truncated Moran transform m_D(A*^-1 xi) prod_{j=1..n-1} m_D(M*^-j A*^-1 xi).
inline std::complex<double> moran_muhat_truncated(const imat2& a, const imat2& m,
                                                  const digit_set4& d, double xi1, double xi2,
                                                  int n) {
    if (a.det() == 0) fail(errc::singular_matrix, "Moran prefactor is singular");
    auto ainv = detail::star_inverse_d(a);
    auto minv = detail::star_inverse_d(m);
    ainv.apply(xi1, xi2);
    std::complex<double> prod = mask_eval(d, xi1, xi2);
    for (int j = 1; j < n; ++j) {
        minv.apply(xi1, xi2);
        prod *= mask_eval(d, xi1, xi2);
    }
    return prod;
}

/// Jorgensen-Pedersen sum Q(xi) = sum_lambda |muhat_n(xi + lambda)|^2 for
/// the level-n measure; identically 1 exactly on level-n spectra.
inline double q_function(const imat2& m, const digit_set4& d, const std::vector<qvec2>& lambda,
                         double xi1, double xi2, int n) {
    double acc = 0.0;
    for (const auto& l : lambda) {
        auto v = muhat_truncated(m, d, xi1 + to_double(l.x), xi2 + to_double(l.y), n);
        acc += std::norm(v);
    }
    return acc;
}

} // namespace spectral
