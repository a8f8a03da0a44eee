#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond Digraph::has_arc / order / arcs.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include <smcv/digraph.hpp>

namespace oracle {

using smcv::Digraph;

/// Every simple directed path from u to v.
inline std::vector<std::vector<int>> all_paths(const Digraph& d, int u, int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{u};
    std::vector<bool> used(static_cast<std::size_t>(d.order()), false);
    used[u] = true;
    std::function<void(int)> dfs = [&](int x) {
        if (x == v) {
            out.push_back(cur);
            return;
        }
        for (int y = 0; y < d.order(); ++y) {
            if (used[y] || !d.has_arc(x, y)) continue;
            used[y] = true;
            cur.push_back(y);
            dfs(y);
            cur.pop_back();
            used[y] = false;
        }
    };
    dfs(u);
    return out;
}

inline bool internals_one_color(const std::vector<int>& path, const std::vector<int>& color) {
    for (std::size_t i = 2; i + 1 < path.size(); ++i)
        if (color[path[i]] != color[path[1]]) return false;
    return true;
}

/// First ordered pair (lexicographic) with no vertex-monochromatic path, or {-1,-1}.
inline std::pair<int, int> first_svmc_violation(const Digraph& d, const std::vector<int>& color) {
    for (int u = 0; u < d.order(); ++u)
        for (int v = 0; v < d.order(); ++v) {
            if (u == v) continue;
            bool ok = false;
            for (const auto& p : all_paths(d, u, v)) ok = ok || internals_one_color(p, color);
            if (!ok) return {u, v};
        }
    return {-1, -1};
}

inline bool is_svmc(const Digraph& d, const std::vector<int>& color) {
    return first_svmc_violation(d, color).first < 0;
}

/// color indexed by the digraph's arc order.
inline bool is_smc(const Digraph& d, const std::vector<int>& arc_color) {
    std::map<std::pair<int, int>, int> c;
    for (std::size_t e = 0; e < d.arcs().size(); ++e) c[{d.arcs()[e].tail, d.arcs()[e].head}] = arc_color[e];
    for (int u = 0; u < d.order(); ++u)
        for (int v = 0; v < d.order(); ++v) {
            if (u == v) continue;
            bool ok = false;
            for (const auto& p : all_paths(d, u, v)) {
                bool mono = true;
                for (std::size_t i = 1; i < p.size(); ++i) mono = mono && c[{p[i - 1], p[i]}] == c[{p[0], p[1]}];
                ok = ok || mono;
            }
            if (!ok) return false;
        }
    return true;
}

/// All set partitions of {0..n-1} as block labels, built by placing each
/// element into an existing block or a new one.
inline void partitions(int n, const std::function<void(const std::vector<int>&, int)>& f) {
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            f(label, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
}

inline int smcv(const Digraph& d) {
    int best = 0;
    partitions(d.order(), [&](const std::vector<int>& label, int blocks) {
        if (blocks > best && is_svmc(d, label)) best = blocks;
    });
    return best;
}

inline int smc(const Digraph& d) {
    int best = 0;
    partitions(d.size(), [&](const std::vector<int>& label, int blocks) {
        if (blocks > best && is_smc(d, label)) best = blocks;
    });
    return best;
}

/// Floyd-Warshall reachability restricted to `keep`.
inline std::vector<std::vector<bool>> closure(const Digraph& d, const std::vector<bool>& keep,
                                              const std::vector<std::vector<bool>>* arcs = nullptr) {
    const int n = d.order();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            r[u][v] = keep[u] && keep[v] && (u == v || (arcs ? (*arcs)[u][v] : d.has_arc(u, v)));
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (r[u][k] && r[k][v]) r[u][v] = true;
    return r;
}

inline bool strong_on(const Digraph& d, const std::vector<bool>& keep,
                      const std::vector<std::vector<bool>>* arcs = nullptr) {
    const auto r = closure(d, keep, arcs);
    for (int u = 0; u < d.order(); ++u)
        for (int v = 0; v < d.order(); ++v)
            if (keep[u] && keep[v] && !r[u][v]) return false;
    return true;
}

inline bool strong(const Digraph& d) { return strong_on(d, std::vector<bool>(d.order(), true)); }

/// BFS-free distances via Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const Digraph& d) {
    const int n = d.order();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u == v) dist[u][v] = 0;
            else if (d.has_arc(u, v)) dist[u][v] = 1;
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) dist[u][v] = std::min(dist[u][v], dist[u][k] + dist[k][v]);
    for (auto& row : dist)
        for (int& x : row)
            if (x == inf) x = -1;
    return dist;
}

inline int omega_v(const Digraph& d) {
    const int n = d.order();
    int best = n;
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
        std::vector<bool> keep(n);
        int size = 0;
        for (int v = 0; v < n; ++v) {
            keep[v] = (mask >> v) & 1U;
            size += keep[v] ? 1 : 0;
        }
        if (size >= best) continue;
        bool dom = true;
        bool abs = true;
        for (int v = 0; v < n; ++v) {
            if (keep[v]) continue;
            bool has_in = false;
            bool has_out = false;
            for (int w = 0; w < n; ++w) {
                has_in = has_in || (keep[w] && d.has_arc(w, v));
                has_out = has_out || (keep[w] && d.has_arc(v, w));
            }
            dom = dom && has_in;
            abs = abs && has_out;
        }
        if (dom && abs && strong_on(d, keep)) best = size;
    }
    return best;
}

inline int omega(const Digraph& d) {
    const int n = d.order();
    const int m = d.size();
    int best = m;
    for (unsigned mask = 0; mask < (1U << m); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size >= best) continue;
        std::vector<std::vector<bool>> arcs(n, std::vector<bool>(n, false));
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1U) arcs[d.arcs()[e].tail][d.arcs()[e].head] = true;
        if (strong_on(d, std::vector<bool>(n, true), &arcs)) best = size;
    }
    return best;
}

inline int stirling2(int n, int k) {
    std::vector<std::vector<long long>> s(n + 1, std::vector<long long>(n + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return static_cast<int>(s[n][k]);
}

/// Strong digraphs on n vertices from raw arc bitmasks, counted with the Floyd-Warshall test.
inline int count_strong_digraphs(int n) {
    std::vector<smcv::Arc> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pairs.push_back({u, v});
    int count = 0;
    for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
        std::vector<smcv::Arc> arcs;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1U) arcs.push_back(pairs[i]);
        if (strong(Digraph::build(n, arcs))) ++count;
    }
    return count;
}

inline Digraph relabel(const Digraph& d, const std::vector<int>& perm) {
    std::vector<smcv::Arc> arcs;
    for (const auto& a : d.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
    return Digraph::build(d.order(), arcs);
}

}  // namespace oracle
