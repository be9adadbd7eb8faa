#pragma once

#include <map>
#include <set>
#include <vector>

#include "spectral/spectra.hpp"

namespace spectral {

// The box S_q = h_{2^q beta} x h_alpha together with the four parametrized
// families T_{q,0..3} (k in h_alpha, k' in h_{2^q beta}, both denominators
// scale = 2^(q+1) alpha beta).  S_q + scale*T_q is a complete residue
// system mod scale Z^2, and T_{eta,i} sits inside Theta_i.
struct residue_system {
    Int alpha{1}, beta{1}, omega{0};
    int q{0};
    Int scale{2};
    std::vector<ivec2> s_set;
    std::array<std::vector<qvec2>, 4> t;

    size_t t_size() const { return t[0].size(); }
};

inline residue_system residue_systems(const canonical_form& cf, int q) {
    if (q < 0) fail(errc::invalid_input, "residue system level q must be >= 0");
    residue_system rs;
    rs.alpha = cf.alpha;
    rs.beta = cf.beta;
    rs.omega = cf.omega;
    rs.q = q;
    rs.scale = pow2(q + 1) * cf.alpha * cf.beta;

    Int col = pow2(q) * cf.beta; // 2^q beta
    for (Int s1 = 0; s1 < col; ++s1)
        for (Int s2 = 0; s2 < cf.alpha; ++s2) rs.s_set.push_back({s1, s2});

    for (Int k = 0; k < cf.alpha; ++k) {
        for (Int kp = 0; kp < col; ++kp) {
            Int even_x = pow2(q + 1) * k * cf.beta;
            Int odd_x = pow2(q) * (2 * k + 1) * cf.beta;
            Int base_y = 2 * kp * cf.alpha - 2 * k * cf.omega;
            rs.t[0].push_back({make_rat(even_x, rs.scale), make_rat(base_y, rs.scale)});
            rs.t[1].push_back(
                {make_rat(odd_x, rs.scale), make_rat(base_y - cf.omega, rs.scale)});
            rs.t[2].push_back(
                {make_rat(even_x, rs.scale), make_rat(base_y + cf.alpha, rs.scale)});
            rs.t[3].push_back(
                {make_rat(odd_x, rs.scale), make_rat(base_y + cf.alpha - cf.omega, rs.scale)});
        }
    }
    return rs;
}

inline ivec2 scaled_t(const residue_system& rs, const qvec2& ell) {
    return to_ivec(ell * Rat(rs.scale));
}

/// Exhaustive check that S_q + scale*T_q hits every class mod scale Z^2
/// exactly once.
inline bool verify_complete_residues(const residue_system& rs) {
    std::set<std::pair<Int, Int>> seen;
    for (const auto& s : rs.s_set)
        for (const auto& family : rs.t)
            for (const auto& ell : family) {
                ivec2 v = s + scaled_t(rs, ell);
                auto key = std::make_pair(mod_floor(v.x, rs.scale), mod_floor(v.y, rs.scale));
                if (!seen.insert(key).second) return false;
            }
    return seen.size() == size_t(rs.scale * rs.scale);
}

namespace detail {

// A pick for slot i must be a T_{eta,i} element: theta class i with
// witnesses k in h_alpha, k' in h_{2^eta beta}.
inline void check_pick(const canonical_form& cf, const qvec2& pick, int slot) {
    theta_result r = theta_classify(cf, pick);
    theta_kind want[] = {theta_kind::theta0, theta_kind::theta1, theta_kind::theta2,
                         theta_kind::theta3};
    if (r.kind != want[slot] || r.k < 0 || r.k >= cf.alpha || r.kp < 0 ||
        r.kp >= pow2(cf.eta) * cf.beta)
        fail(errc::invalid_pick, "pick " + std::to_string(slot) + " is not a T_eta element");
}

} // namespace detail

/// Scaled picks C = scale * {l_0, l_1, l_2, l_3}; a Hadamard set for
/// (scale*I, Dtil) since cross differences fall in Theta_i - Theta_j.
inline std::array<ivec2, 4> base_hadamard(const canonical_form& cf,
                                          const std::array<qvec2, 4>& picks) {
    residue_system rs = residue_systems(cf, cf.eta);
    std::array<ivec2, 4> out;
    for (int i = 0; i < 4; ++i) {
        detail::check_pick(cf, picks[i], i);
        out[i] = scaled_t(rs, picks[i]);
    }
    return out;
}

// Decomposition classes Lambda_{s,l} = { gamma : s + scale*l + scale*gamma
// in Lambda }; every integer vector belongs to exactly one (s, l) class.
struct lambda_split_t {
    int source_level{0};
    // classes[s_index][family i][t_index] -> gammas in input order
    std::vector<std::array<std::vector<std::vector<ivec2>>, 4>> classes;

    bool empty_class(size_t s, int i, size_t t) const { return classes[s][i][t].empty(); }
};

inline lambda_split_t lambda_split(const frequency_set& lambda, const residue_system& rs) {
    // residue -> (s index, family, t index)
    std::map<std::pair<Int, Int>, std::tuple<size_t, int, size_t>> lookup;
    for (size_t si = 0; si < rs.s_set.size(); ++si)
        for (int i = 0; i < 4; ++i)
            for (size_t ti = 0; ti < rs.t[i].size(); ++ti) {
                ivec2 v = rs.s_set[si] + scaled_t(rs, rs.t[i][ti]);
                auto key = std::make_pair(mod_floor(v.x, rs.scale), mod_floor(v.y, rs.scale));
                if (!lookup.emplace(key, std::make_tuple(si, i, ti)).second)
                    throw std::logic_error("residue classes collided");
            }

    lambda_split_t split;
    split.source_level = lambda.level;
    split.classes.resize(rs.s_set.size());
    for (auto& per_s : split.classes)
        for (int i = 0; i < 4; ++i) per_s[i].resize(rs.t[i].size());

    for (const auto& el : lambda.elements) {
        ivec2 lam = to_ivec(el);
        auto key = std::make_pair(mod_floor(lam.x, rs.scale), mod_floor(lam.y, rs.scale));
        auto [si, i, ti] = lookup.at(key);
        ivec2 base = rs.s_set[si] + scaled_t(rs, rs.t[i][ti]);
        ivec2 diff = lam - base;
        split.classes[si][i][ti].push_back({diff.x / rs.scale, diff.y / rs.scale});
    }
    return split;
}

/// Union-form reassembly; equals exactly the set the split was built from.
inline std::vector<ivec2> reassemble(const lambda_split_t& split, const residue_system& rs) {
    std::vector<ivec2> out;
    for (size_t si = 0; si < rs.s_set.size(); ++si)
        for (int i = 0; i < 4; ++i)
            for (size_t ti = 0; ti < rs.t[i].size(); ++ti)
                for (const auto& g : split.classes[si][i][ti])
                    out.push_back(rs.s_set[si] + scaled_t(rs, rs.t[i][ti]) + g * rs.scale);
    return out;
}

/// Candidate spectrum Gamma = union over s, l in T_{eta,i_s} of
/// (s + scale*l)/scale + Lambda_{s,l}.  Orthogonality and completeness at
/// the matching level are checked by verify_gamma, not assumed here.
inline frequency_set gamma_build(const lambda_split_t& split, const residue_system& rs,
                                 const std::vector<int>& choice) {
    if (choice.size() != rs.s_set.size())
        fail(errc::choice_out_of_range, "one family index per s is required");
    for (int c : choice)
        if (c < 0 || c > 3) fail(errc::choice_out_of_range, "family index must be in 0..3");

    frequency_set out;
    out.level = split.source_level > 0 ? split.source_level - 1 : 0;
    for (size_t si = 0; si < rs.s_set.size(); ++si) {
        int i = choice[si];
        for (size_t ti = 0; ti < rs.t[i].size(); ++ti) {
            qvec2 base = to_qvec(rs.s_set[si]) * make_rat(1, rs.scale) + rs.t[i][ti];
            for (const auto& g : split.classes[si][i][ti]) out.elements.push_back(base + to_qvec(g));
        }
    }
    return out;
}

struct gamma_check {
    bool orthogonal{false};
    size_t size{0};
    bool complete{false}; // |Gamma| == 4^level
};

/// Exact pairwise orthogonality of Gamma for the level-n measure of
/// (Mtil, Dtil): every difference has a mask factor classified as a zero.
inline gamma_check verify_gamma(const canonical_form& cf, const frequency_set& gamma,
                                bool unsafe = false) {
    gamma_check res;
    res.size = gamma.elements.size();
    res.complete = Int(res.size) == pow2(2 * gamma.level);
    int n = gamma.level;
    if (n < 1) {
        res.orthogonal = true;
        return res;
    }
    check_level(n, verify_level_cap, unsafe);

    qmat2 mstar_inv = inverse(cf.Mtil.transpose());
    for (size_t i = 0; i < gamma.elements.size(); ++i)
        for (size_t j = i + 1; j < gamma.elements.size(); ++j) {
            qvec2 z = gamma.elements[i] - gamma.elements[j];
            bool found = false;
            for (int depth = 1; depth <= n && !found; ++depth) {
                z = mstar_inv * z;
                found = theta_classify(cf, z).is_zero();
            }
            if (!found) return res;
        }
    res.orthogonal = true;
    return res;
}

enum class split_status { all_four_nonempty, all_empty, mixed };

/// Per-s dichotomy of the split (all four families hit vs none) —
/// reported, not enforced, at finite level.
inline std::vector<split_status> dichotomy(const lambda_split_t& split) {
    std::vector<split_status> out;
    for (const auto& per_s : split.classes) {
        int families_hit = 0;
        for (int i = 0; i < 4; ++i) {
            bool hit = false;
            for (const auto& cls : per_s[i]) hit = hit || !cls.empty();
            families_hit += hit ? 1 : 0;
        }
        out.push_back(families_hit == 4   ? split_status::all_four_nonempty
                      : families_hit == 0 ? split_status::all_empty
                                          : split_status::mixed);
    }
    return out;
}

/// Partial Parseval sum
/// sum_{i=0..3} |m_Dtil((s + scale*l_i + xi)/scale)|^2; identically 1.
inline double parseval_check(const canonical_form& cf, const ivec2& s,
                             const std::array<qvec2, 4>& picks, double xi1, double xi2) {
    if (s.x < 0 || s.x >= pow2(cf.eta) * cf.beta || s.y < 0 || s.y >= cf.alpha)
        fail(errc::invalid_input, "s outside the S_eta box");
    residue_system rs = residue_systems(cf, cf.eta);
    digit_set4 dtil = cf.dtil();
    double acc = 0.0;
    double sc = to_double(rs.scale);
    for (int i = 0; i < 4; ++i) {
        detail::check_pick(cf, picks[i], i);
        ivec2 sl = scaled_t(rs, picks[i]);
        double a1 = (to_double(s.x) + to_double(sl.x) + xi1) / sc;
        double a2 = (to_double(s.y) + to_double(sl.y) + xi2) / sc;
        acc += std::norm(mask_eval(dtil, a1, a2));
    }
    return acc;
}

} // namespace spectral
