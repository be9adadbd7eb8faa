#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "spectral/canonical.hpp"

namespace spectral {

// Zero-set classification of the canonical mask
//
//     m_Dtil(x) = (1/4)(1 + e(u) + e(v) + e(-u-v)),
//     u = alpha x1,  v = omega x1 + 2^eta beta x2,  e(t) = exp(2 pi i t).
//
// m vanishes exactly when (u, v) lands on (half, int), (int, half) or
// (half, half) mod 1; these are the families theta1, theta2, theta3.  The
// reference lattice theta0 is (int, int), where m = 1.
enum class theta_kind { theta0, theta1, theta2, theta3, not_zero };

inline const char* theta_label(theta_kind k) {
    switch (k) {
        case theta_kind::theta0: return "Theta0";
        case theta_kind::theta1: return "Theta1";
        case theta_kind::theta2: return "Theta2";
        case theta_kind::theta3: return "Theta3";
        case theta_kind::not_zero: return "NotZero";
    }
    return "?";
}

struct theta_result {
    theta_kind kind{theta_kind::not_zero};
    Int k{0}, kp{0}; // witnesses of the congruence system (theta0..theta3)

    bool is_zero() const {
        return kind == theta_kind::theta1 || kind == theta_kind::theta2 ||
               kind == theta_kind::theta3;
    }
};

namespace detail {

// Congruence test on x = (n1, n2)/den, den > 0; the fraction need not be
// reduced.  Only the kind, no witnesses.
inline theta_kind theta_kind_frac(const canonical_form& cf, const Int& n1, const Int& n2,
                                  const Int& den) {
    Int two_den = 2 * den;
    Int ru = mod_floor(2 * cf.alpha * n1, two_den);
    bool u_int = ru == 0, u_half = ru == den;
    if (!u_int && !u_half) return theta_kind::not_zero;
    Int rv = mod_floor(2 * (cf.omega * n1 + pow2(cf.eta) * cf.beta * n2), two_den);
    bool v_int = rv == 0, v_half = rv == den;
    if (!v_int && !v_half) return theta_kind::not_zero;
    if (u_half) return v_int ? theta_kind::theta1 : theta_kind::theta3;
    return v_int ? theta_kind::theta0 : theta_kind::theta2;
}

} // namespace detail

/// Exact classification of x against the zero set of m_Dtil.
inline theta_result theta_classify(const canonical_form& cf, const qvec2& x) {
    Int den = lcm(denominator(x.x), denominator(x.y));
    Int n1 = numerator(x.x) * (den / denominator(x.x));
    Int n2 = numerator(x.y) * (den / denominator(x.y));

    theta_result res;
    res.kind = detail::theta_kind_frac(cf, n1, n2, den);
    if (res.kind == theta_kind::not_zero) return res;

    Int two_den = 2 * den;
    Int au = 2 * cf.alpha * n1;
    Int av = 2 * (cf.omega * n1 + pow2(cf.eta) * cf.beta * n2);
    bool u_half = res.kind == theta_kind::theta1 || res.kind == theta_kind::theta3;
    bool v_half = res.kind == theta_kind::theta2 || res.kind == theta_kind::theta3;
    res.k = (u_half ? au - den : au) / two_den;
    res.kp = (v_half ? av - den : av) / two_den;
    return res;
}

/// Certified lower bound for |z|_inf over the zero set of m_Dtil.
///
/// theta1/theta3 points have |x1| >= 1/(2 alpha); theta2 points with x1 = 0
/// have |x2| >= 1/(2^(eta+1) beta), and with x1 != 0, |x1| >= 1/alpha.
struct zero_bound {
    Rat r_min;
};

inline zero_bound min_zero_norm(const canonical_form& cf) {
    Rat a = make_rat(1, 2 * cf.alpha);
    Rat b = make_rat(1, pow2(cf.eta + 1) * cf.beta);
    return {a < b ? a : b};
}

/// Numeric mask value (1/#D) sum exp(2 pi i <d, xi>); oracle/plot use only.
inline std::complex<double> mask_eval(const digit_set4& d, double xi1, double xi2) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc{0.0, 0.0};
    for (const auto& dig : digits_of(d)) {
        double phase = two_pi * (to_double(dig.x) * xi1 + to_double(dig.y) * xi2);
        acc += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc / 4.0;
}

// Zero tests for the mask of a general primitive digit set: with Dtil = Q D,
// m_D(x) = m_Dtil((Q*)^-1 x), so membership in Z(m_D) reduces to the theta
// classification of (Q*)^-1 x.  Q* is unimodular, so its inverse is integral.
class mask_tester {
  public:
    mask_tester(const imat2& m, const digit_set4& d, const Int& bezout_shift = 0)
        : cf_(canonicalize(m, d, bezout_shift)) {
        imat2 qs = cf_.Q.transpose();
        Int dq = qs.det(); // +-1
        imat2 adj = qs.adjugate();
        qstar_inv_ = {adj.a * dq, adj.b * dq, adj.c * dq, adj.d * dq};
    }

    const canonical_form& cf() const { return cf_; }
    const imat2& qstar_inv() const { return qstar_inv_; }

    theta_result classify(const qvec2& x) const { return theta_classify(cf_, qstar_inv_ * x); }
    bool is_zero(const qvec2& x) const { return classify(x).is_zero(); }

  private:
    canonical_form cf_;
    imat2 qstar_inv_;
};

/// x in Z(m_D)?  (D primitive.)
inline bool mask_zero_general(const imat2& m, const digit_set4& d, const qvec2& x) {
    return mask_tester(m, d).is_zero(x);
}

// Membership in Z(muhat_{M,D}) = union over j >= 1 of M*^j Z(m_D), decided
// by scanning z_j = (Q*)^-1 M*^-j x = (Mtil*)^-j (Q*)^-1 x.  Termination:
// once w consecutive iterates have |z_j|_inf < r_min, where w satisfies
// |(Mtil*)^-w|_inf < 1/2, every later iterate is a contraction of one of
// them and stays below r_min, so no further zeros can occur.
class muhat_scanner {
  public:
    muhat_scanner(const imat2& m, const digit_set4& d)
        : tester_(m, d), r_min_(min_zero_norm(tester_.cf()).r_min) {
        const imat2 mt = tester_.cf().Mtil.transpose();
        Int det = mt.det();
        imat2 adj = mt.adjugate();
        mtil_star_inv_ = qmat2{make_rat(adj.a, det), make_rat(adj.b, det),
                               make_rat(adj.c, det), make_rat(adj.d, det)};
        window_ = 1;
        qmat2 p = mtil_star_inv_;
        while (inf_norm(p) >= Rat(1, 2)) {
            p = p * p;
            window_ *= 2;
            if (window_ > (1 << 24)) fail(errc::invalid_input, "decay window overflow");
        }
    }

    const mask_tester& tester() const { return tester_; }

    bool is_zero(const qvec2& x) const {
        if (x == qvec2{}) fail(errc::zero_frequency, "muhat(0) = 1 by normalization");
        qvec2 z = tester_.qstar_inv() * x;
        long below = 0;
        for (long j = 1;; ++j) {
            z = mtil_star_inv_ * z;
            if (theta_classify(tester_.cf(), z).is_zero()) return true;
            if (inf_norm(z) < r_min_) {
                if (++below >= window_) return false;
            } else {
                below = 0;
            }
            if (j > 1000000) throw std::logic_error("muhat scan failed to terminate");
        }
    }

  private:
    mask_tester tester_;
    Rat r_min_;
    qmat2 mtil_star_inv_;
    long window_;
};

/// x in Z(muhat_{M,D})?  Errors on x = 0.
inline bool muhat_zero(const imat2& m, const digit_set4& d, const qvec2& x) {
    return muhat_scanner(m, d).is_zero(x);
}

/// All zeros of m_Dtil in the closed inf-ball of the given radius whose
/// canonical denominators divide 2^(eta+1) alpha beta * denom_bound,
/// sorted lexicographically.
inline std::vector<qvec2> zero_enumerate(const canonical_form& cf, const Rat& box_radius,
                                         const Int& denom_bound = 1) {
    if (box_radius < 0 || denom_bound <= 0)
        fail(errc::invalid_input, "zero_enumerate bounds must be positive");

    const Int s = cf.scale();
    const Int den_cap = s * denom_bound;
    std::vector<qvec2> out;

    // family 1/3: x1 = (2k+1)/(2 alpha); family 2: x1 = k/alpha.
    auto emit_column = [&](const Rat& x1, const Int& numer_shift) {
        // x2 = (2 k' alpha + numer_shift)/s with |x2| <= R.
        Rat lo = (-box_radius * Rat(s) - Rat(numer_shift)) / Rat(2 * cf.alpha);
        Rat hi = (box_radius * Rat(s) - Rat(numer_shift)) / Rat(2 * cf.alpha);
        for (Int kp = rat_ceil(lo); kp <= rat_floor(hi); ++kp) {
            qvec2 pt{x1, make_rat(2 * kp * cf.alpha + numer_shift, s)};
            Int den = lcm(denominator(pt.x), denominator(pt.y));
            if (den_cap % den == 0) out.push_back(pt);
        }
    };

    Rat two_alpha_r = box_radius * Rat(2 * cf.alpha);
    for (Int k = rat_ceil((-two_alpha_r - 1) / 2); 2 * k + 1 <= rat_floor(two_alpha_r); ++k) {
        Rat x1 = make_rat(2 * k + 1, 2 * cf.alpha);
        emit_column(x1, -(2 * k + 1) * cf.omega);            // theta1
        emit_column(x1, -(2 * k + 1) * cf.omega + cf.alpha); // theta3
    }
    Rat alpha_r = box_radius * Rat(cf.alpha);
    for (Int k = rat_ceil(-alpha_r); k <= rat_floor(alpha_r); ++k) {
        emit_column(make_rat(k, cf.alpha), -2 * k * cf.omega + cf.alpha); // theta2
    }

    std::sort(out.begin(), out.end());
    return out;
}

} // namespace spectral
