#pragma once

#include <functional>
#include <map>
#include <vector>

#include "spectral/mask.hpp"

namespace spectral {

inline constexpr int clique_radius_cap = 30;
inline constexpr int clique_kmax_cap = 64;

// Maximum orthogonal set in the integer box [-radius, radius]^2 containing
// the origin: pairwise differences must lie in Z(muhat_{M,D}), each tested
// exactly.  Branch-and-bound with a greedy coloring bound; vertices are
// ordered by degree (descending) with lexicographic tie-break, so the
// result is deterministic.  The search stops growing past kmax elements.
inline std::vector<ivec2> orthogonal_clique_search(const imat2& m, const digit_set4& d,
                                                   int radius, int kmax) {
    if (radius < 0 || kmax < 1) fail(errc::invalid_input, "bad clique search bounds");
    if (radius > clique_radius_cap || kmax > clique_kmax_cap)
        fail(errc::resource_cap, "clique search bounds exceed caps");

    muhat_scanner scanner(m, d);

    // The edge relation depends only on the difference vector.
    std::map<std::pair<Int, Int>, bool> zero_memo;
    auto difference_is_zero = [&](const ivec2& u, const ivec2& v) {
        ivec2 diff = u - v;
        if (diff.x < 0 || (diff.x == 0 && diff.y < 0)) diff = -diff;
        auto key = std::make_pair(diff.x, diff.y);
        auto it = zero_memo.find(key);
        if (it != zero_memo.end()) return it->second;
        bool z = scanner.is_zero(to_qvec(diff));
        zero_memo.emplace(key, z);
        return z;
    };

    // Vertices: box points orthogonal to the origin.
    std::vector<ivec2> verts;
    for (long x = -radius; x <= radius; ++x)
        for (long y = -radius; y <= radius; ++y) {
            ivec2 v{x, y};
            if (v == ivec2{0, 0}) continue;
            if (difference_is_zero(v, ivec2{0, 0})) verts.push_back(v);
        }

    const size_t n = verts.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<size_t> degree(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (difference_is_zero(verts[i], verts[j])) {
                adj[i][j] = adj[j][i] = 1;
                ++degree[i];
                ++degree[j];
            }

    std::vector<size_t> roots(n);
    for (size_t i = 0; i < n; ++i) roots[i] = i;
    std::sort(roots.begin(), roots.end(), [&](size_t a, size_t b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return verts[a] < verts[b];
    });

    const size_t budget = size_t(kmax) - 1; // slots besides the origin
    std::vector<size_t> best, current;

    std::function<void(const std::vector<size_t>&)> expand = [&](const std::vector<size_t>& p) {
        if (current.size() > best.size()) best = current;
        if (best.size() >= budget || p.empty()) return;

        // Greedy coloring in the incoming order; color count bounds any
        // clique inside p.
        std::vector<std::vector<size_t>> classes;
        for (size_t v : p) {
            size_t ci = 0;
            for (; ci < classes.size(); ++ci) {
                bool conflict = false;
                for (size_t u : classes[ci]) conflict = conflict || adj[v][u];
                if (!conflict) break;
            }
            if (ci == classes.size()) classes.emplace_back();
            classes[ci].push_back(v);
        }
        std::vector<size_t> ordered;
        std::vector<size_t> color;
        for (size_t ci = 0; ci < classes.size(); ++ci)
            for (size_t v : classes[ci]) {
                ordered.push_back(v);
                color.push_back(ci + 1);
            }

        for (size_t pos = ordered.size(); pos-- > 0;) {
            if (current.size() + color[pos] <= best.size()) return;
            size_t v = ordered[pos];
            std::vector<size_t> next;
            next.reserve(pos);
            for (size_t q = 0; q < pos; ++q)
                if (adj[v][ordered[q]]) next.push_back(ordered[q]);
            current.push_back(v);
            expand(next);
            current.pop_back();
            if (best.size() >= budget) return;
        }
    };
    expand(roots);

    std::vector<ivec2> result{ivec2{0, 0}};
    for (size_t i : best) result.push_back(verts[i]);
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace spectral
