#pragma once

// Vertex and arc colorings, monochromatic reachability and the SVMC / SMC
// verifiers with path witnesses.

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "metrics.hpp"

namespace smcv {

/// Relabels so colors are 1..p in order of first occurrence.
inline std::vector<int> canonical_labels(std::span<const int> labels) {
    std::map<int, int> rename;
    std::vector<int> out;
    out.reserve(labels.size());
    for (int c : labels) {
        auto [it, inserted] = rename.try_emplace(c, static_cast<int>(rename.size()) + 1);
        out.push_back(it->second);
    }
    return out;
}

/// Surjective vertex coloring with colors 1..p, canonicalized by first
/// occurrence so equal partitions compare equal.
class VertexColoring {
public:
    VertexColoring() = default;

    static VertexColoring from_labels(std::span<const int> labels) {
        if (labels.empty() || labels.size() > static_cast<std::size_t>(max_order))
            throw std::invalid_argument("coloring must cover between 1 and 64 vertices");
        VertexColoring c;
        c.color_ = canonical_labels(labels);
        for (std::size_t v = 0; v < c.color_.size(); ++v) {
            const auto k = static_cast<std::size_t>(c.color_[v]);
            if (c.classes_.size() < k) c.classes_.resize(k, 0);
            c.classes_[k - 1] |= bit(static_cast<int>(v));
        }
        return c;
    }

    static VertexColoring uniform(int n) { return from_labels(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    static VertexColoring distinct(int n) {
        std::vector<int> labels(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) labels[v] = v;
        return from_labels(labels);
    }

    int order() const noexcept { return static_cast<int>(color_.size()); }
    int colors() const noexcept { return static_cast<int>(classes_.size()); }
    int color(int v) const { return color_[v]; }
    const std::vector<int>& labels() const noexcept { return color_; }

    /// Members of color c, c in 1..p.
    VertexSet members(int c) const { return classes_[c - 1]; }
    const std::vector<VertexSet>& classes() const noexcept { return classes_; }

    VertexSet singular_vertices() const {
        VertexSet s = 0;
        for (VertexSet cls : classes_)
            if (cardinality(cls) == 1) s |= cls;
        return s;
    }

    /// a[i] = number of classes with exactly i vertices (a[0] unused).
    std::vector<int> class_size_counts() const {
        std::vector<int> a(static_cast<std::size_t>(order()) + 1, 0);
        for (VertexSet cls : classes_) ++a[cardinality(cls)];
        return a;
    }

    /// Smallest non-singular class size; absent when every class is singular.
    std::optional<int> min_nonsingular_size() const {
        std::optional<int> best;
        for (VertexSet cls : classes_) {
            const int k = cardinality(cls);
            if (k >= 2 && (!best || k < *best)) best = k;
        }
        return best;
    }

    int max_class_size() const {
        int r = 0;
        for (VertexSet cls : classes_) r = std::max(r, cardinality(cls));
        return r;
    }

    bool operator==(const VertexColoring& other) const { return color_ == other.color_; }

private:
    std::vector<int> color_;
    std::vector<VertexSet> classes_;
};

/// Surjective arc coloring indexed by the digraph's arc order.
class ArcColoring {
public:
    ArcColoring() = default;

    static ArcColoring from_labels(std::span<const int> labels) {
        ArcColoring c;
        c.color_ = canonical_labels(labels);
        for (std::size_t e = 0; e < c.color_.size(); ++e) {
            const auto k = static_cast<std::size_t>(c.color_[e]);
            if (c.classes_.size() < k) c.classes_.resize(k);
            c.classes_[k - 1].push_back(static_cast<int>(e));
        }
        return c;
    }

    int size() const noexcept { return static_cast<int>(color_.size()); }
    int colors() const noexcept { return static_cast<int>(classes_.size()); }
    int color(int arc_index) const { return color_[arc_index]; }
    const std::vector<int>& labels() const noexcept { return color_; }
    const std::vector<int>& members(int c) const { return classes_[c - 1]; }

    bool operator==(const ArcColoring& other) const { return color_ == other.color_; }

private:
    std::vector<int> color_;
    std::vector<std::vector<int>> classes_;
};

/// Optional witness path per ordered pair.
class WitnessTable {
public:
    WitnessTable() = default;
    explicit WitnessTable(int n) : n_(n), paths_(static_cast<std::size_t>(n * n)) {}

    int order() const noexcept { return n_; }
    const std::optional<Path>& at(int u, int v) const { return paths_[index(u, v)]; }
    void set(int u, int v, Path p) { paths_[index(u, v)] = std::move(p); }

private:
    std::size_t index(int u, int v) const { return static_cast<std::size_t>(u * n_ + v); }

    int n_ = 0;
    std::vector<std::optional<Path>> paths_;
};

struct Verdict {
    bool ok = false;
    std::optional<std::pair<int, int>> violation;  // lexicographically first failing pair
    WitnessTable witnesses;
};

namespace detail {

// Lexicographically smallest shortest u->v path whose internal vertices lie
// in `allowed` (u, v excluded by the caller). Empty when none exists.
template <typename OutFn, typename InFn>
std::vector<int> smallest_shortest_path(int u, int v, VertexSet allowed, OutFn&& out_of, InFn&& in_of) {
    // layers[k] = allowed vertices at distance k+1 from v (backwards).
    std::vector<VertexSet> layers;
    VertexSet seen = 0;
    VertexSet layer = in_of(bit(v)) & allowed;
    const VertexSet start = out_of(bit(u));
    while (layer != 0) {
        layers.push_back(layer);
        seen |= layer;
        if ((start & layer) != 0) break;
        layer = in_of(layer) & allowed & ~seen;
    }
    if (layers.empty() || (start & layers.back()) == 0) return {};
    std::vector<int> path{u};
    VertexSet candidates = start;
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        const int next = std::countr_zero(candidates & *it);
        path.push_back(next);
        candidates = out_of(bit(next));
    }
    path.push_back(v);
    return path;
}

inline bool vm_path_exists(const Digraph& d, std::span<const VertexSet> classes, int u, int v) {
    if (d.has_arc(u, v)) return true;
    const VertexSet target = d.in(v);
    const VertexSet forbidden = bit(u) | bit(v);
    for (VertexSet cls : classes) {
        const VertexSet allowed = cls & ~forbidden;
        VertexSet seen = d.out(u) & allowed;
        VertexSet frontier = seen;
        while (frontier != 0) {
            if ((frontier & target) != 0) return true;
            frontier = d.out(frontier) & allowed & ~seen;
            seen |= frontier;
        }
    }
    return false;
}

}  // namespace detail

/// Fast SVMC test over raw class masks; no witnesses.
inline bool is_svmc(const Digraph& d, std::span<const VertexSet> classes) {
    const int n = d.order();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !detail::vm_path_exists(d, classes, u, v)) return false;
    return true;
}

inline bool is_svmc(const Digraph& d, const VertexColoring& coloring) { return is_svmc(d, coloring.classes()); }

/// Shortest (u,v) path whose internal vertices share one color. Ties go to
/// the smaller color, then the lexicographically smaller vertex sequence.
inline std::optional<Path> vm_reachable(const Digraph& d, const VertexColoring& coloring, int u, int v) {
    if (u == v) throw std::invalid_argument("vm_reachable: endpoints must differ");
    if (coloring.order() != d.order()) throw std::invalid_argument("vm_reachable: coloring order mismatch");
    if (d.has_arc(u, v)) return Path{{u, v}};
    const VertexSet forbidden = bit(u) | bit(v);
    auto out_of = [&](VertexSet s) { return d.out(s); };
    auto in_of = [&](VertexSet s) { return d.in(s); };
    std::optional<Path> best;
    for (int c = 1; c <= coloring.colors(); ++c) {
        auto p = detail::smallest_shortest_path(u, v, coloring.members(c) & ~forbidden, out_of, in_of);
        if (!p.empty() && (!best || p.size() < best->vertices.size())) best = Path{std::move(p)};
    }
    return best;
}

inline Verdict verify_svmc(const Digraph& d, const VertexColoring& coloring) {
    require_strong(d, "verify_svmc");
    if (coloring.order() != d.order()) throw std::invalid_argument("verify_svmc: coloring order mismatch");
    const int n = d.order();
    Verdict verdict{true, std::nullopt, WitnessTable(n)};
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            auto p = vm_reachable(d, coloring, u, v);
            if (!p) {
                verdict.ok = false;
                verdict.violation = {u, v};
                return verdict;
            }
            verdict.witnesses.set(u, v, std::move(*p));
        }
    }
    return verdict;
}

namespace detail {

// Out-neighbour masks per color: masks[(c-1)*n + u].
inline std::vector<VertexSet> color_out_masks(const Digraph& d, std::span<const int> arc_colors, int colors) {
    const int n = d.order();
    std::vector<VertexSet> masks(static_cast<std::size_t>(colors * n), 0);
    const auto& arcs = d.arcs();
    for (std::size_t e = 0; e < arcs.size(); ++e)
        masks[static_cast<std::size_t>((arc_colors[e] - 1) * n + arcs[e].tail)] |= bit(arcs[e].head);
    return masks;
}

}  // namespace detail

/// Fast SMC test from 1-based arc labels (exactly `colors` distinct); no witnesses.
inline bool is_smc(const Digraph& d, std::span<const int> arc_colors, int colors) {
    const int n = d.order();
    const auto masks = detail::color_out_masks(d, arc_colors, colors);
    const VertexSet all = d.vertices();
    for (int u = 0; u < n; ++u) {
        VertexSet covered = bit(u);
        for (int c = 0; c < colors && covered != all; ++c) {
            const VertexSet* out = &masks[static_cast<std::size_t>(c * n)];
            VertexSet seen = bit(u);
            VertexSet frontier = seen;
            while (frontier != 0) {
                VertexSet next = 0;
                for_each_vertex(frontier, [&](int w) { next |= out[w]; });
                frontier = next & ~seen;
                seen |= frontier;
            }
            covered |= seen;
        }
        if (covered != all) return false;
    }
    return true;
}

inline bool is_smc(const Digraph& d, const ArcColoring& coloring) {
    return is_smc(d, coloring.labels(), coloring.colors());
}

/// Shortest (u,v) path using arcs of a single color; ties as in vm_reachable.
inline std::optional<Path> arc_mono_reachable(const Digraph& d, const ArcColoring& coloring, int u, int v) {
    if (u == v) throw std::invalid_argument("arc_mono_reachable: endpoints must differ");
    if (coloring.size() != d.size()) throw std::invalid_argument("arc_mono_reachable: coloring size mismatch");
    const int n = d.order();
    const auto out_masks = detail::color_out_masks(d, coloring.labels(), coloring.colors());
    std::optional<Path> best;
    for (int c = 0; c < coloring.colors(); ++c) {
        const VertexSet* out = &out_masks[static_cast<std::size_t>(c * n)];
        std::vector<VertexSet> in(static_cast<std::size_t>(n), 0);
        for (int w = 0; w < n; ++w) for_each_vertex(out[w], [&](int x) { in[x] |= bit(w); });
        auto out_of = [&](VertexSet s) {
            VertexSet r = 0;
            for_each_vertex(s, [&](int w) { r |= out[w]; });
            return r;
        };
        auto in_of = [&](VertexSet s) {
            VertexSet r = 0;
            for_each_vertex(s, [&](int w) { r |= in[w]; });
            return r;
        };
        std::vector<int> p;
        if (contains(out[u], v)) {
            p = {u, v};
        } else {
            p = detail::smallest_shortest_path(u, v, d.vertices() & ~(bit(u) | bit(v)), out_of, in_of);
        }
        if (!p.empty() && (!best || p.size() < best->vertices.size())) best = Path{std::move(p)};
    }
    return best;
}

inline Verdict verify_smc(const Digraph& d, const ArcColoring& coloring) {
    require_strong(d, "verify_smc");
    if (coloring.size() != d.size()) throw std::invalid_argument("verify_smc: coloring size mismatch");
    const int n = d.order();
    Verdict verdict{true, std::nullopt, WitnessTable(n)};
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            auto p = arc_mono_reachable(d, coloring, u, v);
            if (!p) {
                verdict.ok = false;
                verdict.violation = {u, v};
                return verdict;
            }
            verdict.witnesses.set(u, v, std::move(*p));
        }
    }
    return verdict;
}

/// Subdigraph induced by the vertices of non-singular classes.
inline InducedSubdigraph derive_dstar(const Digraph& d, const VertexColoring& coloring) {
    if (coloring.order() != d.order()) throw std::invalid_argument("derive_dstar: coloring order mismatch");
    const VertexSet rest = d.vertices() & ~coloring.singular_vertices();
    if (rest == 0) throw std::domain_error("derive_dstar: every chromatic class is singular");
    return induced_subdigraph(d, rest);
}

/// Arc e of d takes the color of vertex e of its line digraph.
inline ArcColoring induce_arc_coloring(const VertexColoring& line_coloring, const Digraph& d) {
    if (line_coloring.order() != d.size())
        throw std::invalid_argument("induce_arc_coloring: line digraph coloring has " +
                                    std::to_string(line_coloring.order()) + " vertices but the digraph has " +
                                    std::to_string(d.size()) + " arcs");
    return ArcColoring::from_labels(line_coloring.labels());
}

}  // namespace smcv
