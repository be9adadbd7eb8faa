#pragma once

#include "spectral/digits.hpp"

namespace spectral {

// Unimodular conjugation (Mtil, Dtil) = (Q M Q^-1, Q D) putting the digit
// set into the shape {0, (alpha,0), (omega, 2^eta beta), -(...)} with
// alpha, beta odd and >= 1.
//
// Construction: let alpha be the odd gcd of one generator pair (the alpha
// pair when its gcd is odd, otherwise the beta pair with roles swapped;
// one of the two is odd whenever the overall gcd is 1).  With
// (t1, t2) = pair/alpha and p t1 + q t2 = 1,
//
//     Q = [[p, q], [-t2, t1]],
//
// then Q maps the first generator to (alpha, 0) and the second to
// (omega, 2^eta beta) where omega = p b1 + q b2 and the cross-determinant
// factors as 2^eta gamma, gamma odd, beta = gamma / alpha.  A final
// diag(1, -1) fixes the sign of beta when needed.
struct canonical_form {
    Int g{1};    // gcd divided out by normalize() before canonicalization
    imat2 Q;     // det(Q) = +-1
    imat2 Mtil;  // Q M Q^-1
    Int alpha{1};
    Int beta{1};
    Int omega{0};
    int eta{0};
    Int gamma{1}; // as produced by the chosen pair order (sign included)
    bool swapped_pair{false};

    Int scale() const { return pow2(eta + 1) * alpha * beta; } // 2^(eta+1) alpha beta

    digit_set4 dtil() const { return {alpha, 0, omega, pow2(eta) * beta}; }
};

/// Canonical conjugated pair for an expansive M and a primitive digit set.
///
/// bezout_shift replaces the canonical Bezout pair (p, q) by
/// (p + k t2, q - k t1); every choice is valid and downstream decisions
/// must not depend on it (k != 0 is for invariance tests only).
inline canonical_form canonicalize(const imat2& m, const digit_set4& d,
                                   const Int& bezout_shift = 0) {
    validate(d);
    if (!is_expansive(m)) fail(errc::not_expansive, "matrix is not expansive");
    if (!is_primitive(d)) fail(errc::digits_not_primitive, "digit gcd != 1");

    canonical_form cf;

    ivec2 v1 = d.alpha_vec(), v2 = d.beta_vec();
    Int pair_gcd = gcd(v1.x, v1.y);
    if (is_even(pair_gcd)) {
        std::swap(v1, v2);
        pair_gcd = gcd(v1.x, v1.y);
        cf.swapped_pair = true;
    }

    cf.alpha = pair_gcd; // odd, >= 1
    Int t1 = v1.x / cf.alpha, t2 = v1.y / cf.alpha;
    auto bz = bezout(t1, t2);
    Int p = bz.p + bezout_shift * t2;
    Int q = bz.q - bezout_shift * t1;

    Int cross = v1.x * v2.y - v1.y * v2.x; // = +-(alpha1 beta2 - alpha2 beta1)
    auto [eta, gamma] = split_pow2(cross);
    cf.eta = eta;
    cf.gamma = gamma;
    cf.beta = gamma / cf.alpha;
    cf.omega = p * v2.x + q * v2.y;

    cf.Q = imat2{p, q, -t2, t1};
    if (cf.beta < 0) {
        cf.Q = imat2{1, 0, 0, -1} * cf.Q;
        cf.beta = -cf.beta;
    }

    // Q is unimodular, so Q M Q^-1 = Q M adj(Q) / det(Q) stays integral.
    Int dq = cf.Q.det();
    imat2 qmq = cf.Q * m * cf.Q.adjugate();
    cf.Mtil = {qmq.a * dq, qmq.b * dq, qmq.c * dq, qmq.d * dq};
    return cf;
}

} // namespace spectral
