#pragma once

#include <set>
#include <vector>

#include "spectral/decision.hpp"
#include "spectral/measure.hpp"

namespace spectral {

struct frequency_set {
    int level{0};
    std::vector<qvec2> elements; // pairwise distinct
};

/// Level-n tower spectrum Lambda_n = { sum_{k=0..n-1} Mbar*^k c_k } for the
/// certificate's Hadamard set; exactly 4^n distinct integer vectors,
/// pairwise orthogonal for the level-n measure of (Mbar, Dbar).
inline frequency_set tower_spectrum(const certificate& cert, int n, bool unsafe = false) {
    check_level(n, measure_level_cap, unsafe);
    if (!is_admissible(cert.mbar, cert.dbar, cert.cbar))
        fail(errc::not_admissible, "certificate failed the Hadamard test");

    imat2 mstar = cert.mbar.transpose();
    // Lambda_j = C + Mbar* Lambda_{j-1}, word-lexicographic order.
    std::vector<ivec2> freqs{ivec2{0, 0}};
    for (int k = 0; k < n; ++k) {
        std::vector<ivec2> next;
        next.reserve(freqs.size() * 4);
        for (const auto& c : cert.cbar)
            for (const auto& f : freqs) next.push_back(c + mstar * f);
        freqs = std::move(next);
    }

    std::set<ivec2> uniq(freqs.begin(), freqs.end());
    if (uniq.size() != freqs.size())
        fail(errc::not_admissible, "tower frequencies collided"); // unreachable for a Hadamard set

    frequency_set out;
    out.level = n;
    out.elements.reserve(freqs.size());
    for (const auto& f : freqs) out.elements.push_back(to_qvec(f));
    return out;
}

struct tower_check {
    bool certified{false};
    size_t pairs{0};
    int max_factor_depth{0}; // largest j that was needed
};

/// Certifies that every pairwise difference of the tower has an exactly
/// zero mask factor: some j <= n with Mbar*^-j (l - l') in Z(m_Dbar),
/// classified over the rationals.  Runs the full all-pairs scan.
inline tower_check verify_tower_orthogonality(const certificate& cert, const frequency_set& fs,
                                              bool unsafe = false) {
    check_level(fs.level, verify_level_cap, unsafe);
    canonical_form cf = canonicalize(cert.mbar, cert.dbar);

    // Dbar's canonical conjugation is trivial (its alpha vector is
    // (alpha, 0)), so the theta test applies to Mbar*^-j delta directly.
    if (!(cf.Q == imat2::identity()))
        fail(errc::not_admissible, "certificate digits not in canonical shape");

    const imat2 mstar = cert.mbar.transpose();
    const imat2 adj = mstar.adjugate();
    const Int det = mstar.det();

    std::vector<ivec2> pts;
    pts.reserve(fs.elements.size());
    for (const auto& e : fs.elements) pts.push_back(to_ivec(e));

    tower_check res;
    const size_t count = pts.size();
    for (size_t i = 0; i < count; ++i) {
        for (size_t j = i + 1; j < count; ++j) {
            ivec2 delta = pts[i] - pts[j];
            // delta/den with den = det^depth, multiplied by adj each step.
            // The congruence tests only see den's magnitude: n/den and
            // -n/-den classify identically since den == -den mod 2den.
            Int n1 = delta.x, n2 = delta.y, den = 1;
            bool found = false;
            for (int depth = 1; depth <= fs.level; ++depth) {
                Int m1 = adj.a * n1 + adj.b * n2;
                Int m2 = adj.c * n1 + adj.d * n2;
                n1 = m1;
                n2 = m2;
                den *= det;
                theta_kind k = detail::theta_kind_frac(cf, n1, n2, iabs(den));
                if (k == theta_kind::theta1 || k == theta_kind::theta2 ||
                    k == theta_kind::theta3) {
                    found = true;
                    if (depth > res.max_factor_depth) res.max_factor_depth = depth;
                    break;
                }
            }
            if (!found) return res; // certified stays false
            ++res.pairs;
        }
    }
    res.certified = true;
    return res;
}

/// Level-n spectrum of the Moran measure mu_{A,Mtil,Dtil} with
/// A = scale * I, obtained from the plain tower through the exact transfer
/// A* Mtil*^-1 Lambda; all entries are integers.
inline frequency_set moran_tower_spectrum(const decision& dec, int n, bool unsafe = false) {
    if (!dec.spectral() || !dec.cert) fail(errc::not_spectral, "Moran tower needs a certificate");
    const certificate& cert = *dec.cert;
    frequency_set base = tower_spectrum(cert, n, unsafe);

    const canonical_form& cf = dec.canonical;
    // In Mtil coordinates the spectrum is Qt* Lambda with Qt = diag(1, 2^-eta);
    // then A* Mtil*^-1 maps it into Z^2.
    qmat2 qt_star = qmat2::diagonal(Rat(1), make_rat(1, pow2(cf.eta)));
    qmat2 mtil_star_inv = inverse(cf.Mtil.transpose());
    Rat s = Rat(cf.scale());

    frequency_set out;
    out.level = n;
    out.elements.reserve(base.elements.size());
    for (const auto& l : base.elements) {
        qvec2 v = mtil_star_inv * (qt_star * l) * s;
        to_ivec(v); // integrality postcondition
        out.elements.push_back(v);
    }
    return out;
}

} // namespace spectral
