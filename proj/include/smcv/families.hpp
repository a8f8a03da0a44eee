#pragma once

// Named constructions, seeded random generators and exhaustive enumerators.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "metrics.hpp"
#include "random.hpp"

namespace smcv {

struct LineDigraphResult {
    Digraph graph;
    std::vector<Arc> arc_of_vertex;  // vertex e of the line digraph is arc e of the source
};

/// Vertices are the arcs of d in lexicographic order; e -> f iff head(e) = tail(f).
inline LineDigraphResult line_digraph(const Digraph& d) {
    const auto& arcs = d.arcs();
    if (arcs.empty()) throw GraphError(GraphError::Reason::empty_set, "line digraph of an arcless digraph");
    const int m = static_cast<int>(arcs.size());
    if (m > max_order)
        throw GraphError(GraphError::Reason::bad_order,
                         "line digraph would have " + std::to_string(m) + " vertices (limit 64)");
    std::vector<VertexSet> out(arcs.size(), 0);
    for (int e = 0; e < m; ++e)
        for (int f = 0; f < m; ++f)
            if (e != f && arcs[e].head == arcs[f].tail) out[e] |= bit(f);
    return {Digraph::from_out_masks(std::move(out)), arcs};
}

inline Digraph cycle(int n) {
    if (n < 2) throw std::invalid_argument("cycle needs n >= 2");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
    return Digraph::build(n, arcs);
}

inline Digraph complete_digraph(int n) {
    if (n < 1) throw std::invalid_argument("complete digraph needs n >= 1");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.push_back({u, v});
    return Digraph::build(n, arcs);
}

/// v1 -> v2, v2 -> vi and vi -> v1 for i >= 3 (vertex i-1 here is v_i).
/// Diameter 3 and the smallest strong dominating absorbing set has 3 vertices.
inline Digraph figure1_family(int n) {
    if (n < 4) throw std::invalid_argument("figure1 family needs n >= 4");
    std::vector<Arc> arcs{{0, 1}};
    for (int i = 2; i < n; ++i) {
        arcs.push_back({1, i});
        arcs.push_back({i, 0});
    }
    return Digraph::build(n, arcs);
}

/// Tournament with i -> i+1 and j -> i whenever j >= i+2; diameter n-1.
inline Digraph long_path_tournament(int n) {
    if (n < 3) throw std::invalid_argument("long path tournament needs n >= 3");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j == i + 1 || j + 2 <= i) arcs.push_back({i, j});
    return Digraph::build(n, arcs);
}

/// Uniformly chosen m-arc digraph, resampled until strong.
inline Digraph random_strong_digraph(int n, int m, Rng& rng) {
    const int all = n * (n - 1);
    if (n < 1 || n > max_order) throw std::invalid_argument("random strong digraph: n outside [1, 64]");
    if (n == 1 ? m != 0 : (m < n || m > all))
        throw std::invalid_argument("random strong digraph: m=" + std::to_string(m) + " infeasible for n=" +
                                    std::to_string(n));
    std::vector<Arc> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) candidates.push_back({u, v});
    while (true) {
        for (int i = 0; i < m; ++i) {
            const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(all - i)));
            std::swap(candidates[i], candidates[j]);
        }
        Digraph d = Digraph::build(n, std::span<const Arc>(candidates.data(), static_cast<std::size_t>(m)));
        if (is_strong(d)) return d;
    }
}

inline Digraph random_strong_digraph(int n, int m, std::uint64_t seed) {
    Rng rng(seed);
    return random_strong_digraph(n, m, rng);
}

/// m unordered pairs chosen uniformly, each oriented by a fair bit; resampled until strong.
inline Digraph random_strong_oriented(int n, int m, Rng& rng) {
    const int all = n * (n - 1) / 2;
    if (n < 3 || n > max_order || m < n || m > all)
        throw std::invalid_argument("random strong oriented graph: m=" + std::to_string(m) + " infeasible for n=" +
                                    std::to_string(n));
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    while (true) {
        for (int i = 0; i < m; ++i) {
            const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(all - i)));
            std::swap(pairs[i], pairs[j]);
        }
        std::vector<Arc> arcs;
        for (int i = 0; i < m; ++i) {
            const Arc p = pairs[i];
            arcs.push_back(rng.below(2) == 0 ? p : Arc{p.head, p.tail});
        }
        Digraph d = Digraph::build(n, arcs);
        if (is_strong(d)) return d;
    }
}

inline Digraph random_strong_oriented(int n, int m, std::uint64_t seed) {
    Rng rng(seed);
    return random_strong_oriented(n, m, rng);
}

/// Each pair u < v oriented u -> v on a 0 draw; resampled until strong.
inline Digraph random_strong_tournament(int n, Rng& rng) {
    if (n == 2 || n < 1 || n > max_order)
        throw std::invalid_argument("random strong tournament: no strong tournament on " + std::to_string(n) +
                                    " vertices");
    while (true) {
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) arcs.push_back(rng.below(2) == 0 ? Arc{u, v} : Arc{v, u});
        Digraph d = Digraph::build(n, arcs);
        if (is_strong(d)) return d;
    }
}

inline Digraph random_strong_tournament(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_strong_tournament(n, rng);
}

inline constexpr int max_enumerated_digraph_order = 5;
inline constexpr int max_enumerated_tournament_order = 6;

/// Every labeled strong digraph on n vertices, in increasing order of the
/// arc-set bitmask (bit i = i-th ordered pair in lexicographic order).
template <typename F>
void enumerate_strong_digraphs(int n, F&& f) {
    if (n < 1 || n > max_enumerated_digraph_order)
        throw std::invalid_argument("enumerate_strong_digraphs: n must be in [1, 5]");
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pairs.push_back({u, v});
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<VertexSet> out(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(out.begin(), out.end(), 0);
        VertexSet has_in = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1U) {
                out[pairs[i].tail] |= bit(pairs[i].head);
                has_in |= bit(pairs[i].head);
            }
        }
        if (n > 1) {
            if (has_in != first_n(n)) continue;
            bool sources = true;
            for (VertexSet o : out) sources = sources && o != 0;
            if (!sources) continue;
        }
        Digraph d = Digraph::from_out_masks(out);
        if (is_strong(d)) f(d);
    }
}

/// Every labeled strong tournament on n vertices; bit i of the orientation
/// mask reverses the i-th pair u < v.
template <typename F>
void enumerate_strong_tournaments(int n, F&& f) {
    if (n < 1 || n > max_enumerated_tournament_order)
        throw std::invalid_argument("enumerate_strong_tournaments: n must be in [1, 6]");
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<VertexSet> out(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const Arc p = pairs[i];
            if ((mask >> i) & 1U)
                out[p.head] |= bit(p.tail);
            else
                out[p.tail] |= bit(p.head);
        }
        Digraph d = Digraph::from_out_masks(std::move(out));
        if (is_strong(d)) f(d);
    }
}

}  // namespace smcv
