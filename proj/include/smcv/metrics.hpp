#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "digraph.hpp"

namespace smcv {

class NotStrongError : public std::domain_error {
public:
    explicit NotStrongError(const std::string& what) : std::domain_error(what) {}
};

/// Vertices reachable from v (v included).
inline VertexSet reach_from(const Digraph& d, int v) {
    VertexSet seen = bit(v);
    VertexSet frontier = seen;
    while (frontier != 0) {
        const VertexSet next = d.out(frontier) & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// Vertices that reach v (v included).
inline VertexSet reach_to(const Digraph& d, int v) {
    VertexSet seen = bit(v);
    VertexSet frontier = seen;
    while (frontier != 0) {
        const VertexSet next = d.in(frontier) & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline bool is_strong(const Digraph& d) {
    const VertexSet all = d.vertices();
    return reach_from(d, 0) == all && reach_to(d, 0) == all;
}

inline void require_strong(const Digraph& d, const char* what) {
    if (!is_strong(d)) throw NotStrongError(std::string(what) + ": digraph is not strong");
}

inline bool is_unilateral(const Digraph& d) {
    const int n = d.order();
    std::vector<VertexSet> reach(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) reach[v] = reach_from(d, v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!contains(reach[u], v) && !contains(reach[v], u)) return false;
    return true;
}

/// No digons.
inline bool is_oriented(const Digraph& d) {
    for (int v = 0; v < d.order(); ++v)
        if ((d.out(v) & d.in(v)) != 0) return false;
    return true;
}

/// Every pair of distinct vertices joined by exactly one arc.
inline bool is_tournament(const Digraph& d) {
    for (int v = 0; v < d.order(); ++v) {
        if ((d.out(v) & d.in(v)) != 0) return false;
        if ((d.out(v) | d.in(v) | bit(v)) != d.vertices()) return false;
    }
    return true;
}

inline bool is_directed_triangle(const Digraph& d) {
    return d.order() == 3 && d.size() == 3 && is_strong(d);
}

class DistanceTable {
public:
    static constexpr int infinity = std::numeric_limits<int>::max();

    explicit DistanceTable(const Digraph& d) : n_(d.order()), dist_(static_cast<std::size_t>(n_ * n_), infinity) {
        for (int s = 0; s < n_; ++s) {
            VertexSet seen = bit(s);
            VertexSet frontier = seen;
            for (int level = 0; frontier != 0; ++level) {
                for_each_vertex(frontier, [&](int v) { dist_[index(s, v)] = level; });
                const VertexSet next = d.out(frontier) & ~seen;
                seen |= next;
                frontier = next;
            }
        }
    }

    int order() const noexcept { return n_; }
    int at(int u, int v) const { return dist_[index(u, v)]; }
    bool finite(int u, int v) const { return at(u, v) != infinity; }

    bool all_finite() const {
        for (int x : dist_)
            if (x == infinity) return false;
        return true;
    }

    /// Largest distance from u; infinity if something is unreachable.
    int out_eccentricity(int u) const {
        int e = 0;
        for (int v = 0; v < n_; ++v) e = std::max(e, at(u, v));
        return e;
    }

    int in_eccentricity(int v) const {
        int e = 0;
        for (int u = 0; u < n_; ++u) e = std::max(e, at(u, v));
        return e;
    }

    int diameter() const {
        if (!all_finite()) throw NotStrongError("diameter undefined: digraph is not strong");
        int e = 0;
        for (int x : dist_) e = std::max(e, x);
        return e;
    }

private:
    std::size_t index(int u, int v) const { return static_cast<std::size_t>(u * n_ + v); }

    int n_;
    std::vector<int> dist_;
};

inline DistanceTable distances(const Digraph& d) { return DistanceTable(d); }

/// Length of a shortest directed cycle; nullopt when acyclic.
inline std::optional<int> girth(const Digraph& d) {
    std::optional<int> best;
    for (int s = 0; s < d.order(); ++s) {
        VertexSet seen = bit(s);
        VertexSet frontier = seen;
        for (int level = 1; frontier != 0; ++level) {
            if (best && level >= *best) break;
            const VertexSet next = d.out(frontier);
            if (contains(next, s)) {
                best = level;
                break;
            }
            frontier = next & ~seen;
            seen |= frontier;
        }
    }
    return best;
}

/// Every vertex outside s has an in-neighbour in s.
inline bool is_dominating(const Digraph& d, VertexSet s) {
    const VertexSet outside = d.vertices() & ~s;
    bool ok = true;
    for_each_vertex(outside, [&](int v) { ok = ok && (d.in(v) & s) != 0; });
    return ok;
}

/// Every vertex outside s has an out-neighbour in s.
inline bool is_absorbing(const Digraph& d, VertexSet s) {
    const VertexSet outside = d.vertices() & ~s;
    bool ok = true;
    for_each_vertex(outside, [&](int v) { ok = ok && (d.out(v) & s) != 0; });
    return ok;
}

// Total variants: members of s need a neighbour in s as well.
inline bool is_total_dominating(const Digraph& d, VertexSet s) {
    for (int v = 0; v < d.order(); ++v)
        if ((d.in(v) & s) == 0) return false;
    return true;
}

inline bool is_total_absorbing(const Digraph& d, VertexSet s) {
    for (int v = 0; v < d.order(); ++v)
        if ((d.out(v) & s) == 0) return false;
    return true;
}

inline bool is_bad_pair(const Digraph& d, int u, int v) {
    return d.out(u) == bit(v) && d.in(v) == bit(u);
}

enum class PairKind {
    not_bad,
    bad_with_good_successor,    // some arc vw with (v,w) not bad
    bad_with_good_predecessor,  // some arc wu with (w,u) not bad
    bad_other,
};

inline const char* to_string(PairKind k) {
    switch (k) {
        case PairKind::not_bad: return "not_bad";
        case PairKind::bad_with_good_successor: return "bad_with_good_successor";
        case PairKind::bad_with_good_predecessor: return "bad_with_good_predecessor";
        case PairKind::bad_other: return "bad_other";
    }
    return "?";
}

struct PairClass {
    int u = 0;
    int v = 0;
    PairKind kind = PairKind::not_bad;
};

struct BadPairReport {
    std::vector<PairClass> pairs;  // every ordered pair u != v, lexicographic
    bool directed_triangle = false;  // the exceptional digraph

    int count(PairKind k) const {
        int c = 0;
        for (const auto& p : pairs) c += p.kind == k ? 1 : 0;
        return c;
    }
};

/// Classifies every ordered pair, first matching case wins.
inline BadPairReport bad_pairs(const Digraph& d) {
    require_strong(d, "bad_pairs");
    BadPairReport report;
    report.directed_triangle = is_directed_triangle(d);
    const int n = d.order();
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            PairKind kind = PairKind::not_bad;
            if (is_bad_pair(d, u, v)) {
                bool good_succ = false;
                for_each_vertex(d.out(v), [&](int w) { good_succ = good_succ || !is_bad_pair(d, v, w); });
                bool good_pred = false;
                for_each_vertex(d.in(u), [&](int w) { good_pred = good_pred || !is_bad_pair(d, w, u); });
                kind = good_succ   ? PairKind::bad_with_good_successor
                       : good_pred ? PairKind::bad_with_good_predecessor
                                   : PairKind::bad_other;
            }
            report.pairs.push_back({u, v, kind});
        }
    }
    return report;
}

}  // namespace smcv
