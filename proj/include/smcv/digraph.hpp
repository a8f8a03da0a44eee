#pragma once

// Immutable simple digraphs on at most 64 vertices, stored as per-vertex
// bitmasks of out- and in-neighbours.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace smcv {

/// Set of vertices of a digraph, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr int max_order = 64;

constexpr VertexSet bit(int v) noexcept { return VertexSet{1} << v; }

constexpr VertexSet first_n(int n) noexcept {
    return n >= 64 ? ~VertexSet{0} : bit(n) - 1;
}

constexpr bool contains(VertexSet s, int v) noexcept { return ((s >> v) & 1U) != 0; }

inline int cardinality(VertexSet s) noexcept { return std::popcount(s); }

template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
    while (s != 0) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

inline std::vector<int> to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(cardinality(s));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

struct Arc {
    int tail = 0;
    int head = 0;
    auto operator<=>(const Arc&) const = default;
};

inline std::string to_string(Arc a) {
    return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

class GraphError : public std::invalid_argument {
public:
    enum class Reason { loop, duplicate_arc, out_of_range, missing_arc, empty_set, bad_order };

    GraphError(Reason reason, const std::string& what)
        : std::invalid_argument(what), reason_(reason) {}

    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

class Digraph {
public:
    Digraph() = default;

    /// Validates and builds. Vertices are 0..n-1; arc order in the input is irrelevant.
    static Digraph build(int n, std::span<const Arc> arcs) {
        check_order(n);
        std::vector<VertexSet> out(static_cast<std::size_t>(n), 0);
        for (const Arc& a : arcs) {
            if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
                throw GraphError(GraphError::Reason::out_of_range,
                                 "arc " + to_string(a) + " out of range for n=" + std::to_string(n));
            if (a.tail == a.head)
                throw GraphError(GraphError::Reason::loop, "loop " + to_string(a));
            if (contains(out[a.tail], a.head))
                throw GraphError(GraphError::Reason::duplicate_arc, "duplicate arc " + to_string(a));
            out[a.tail] |= bit(a.head);
        }
        return Digraph(std::move(out));
    }

    static Digraph build(int n, std::initializer_list<Arc> arcs) {
        return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
    }

    /// Builds from out-neighbour masks. Loops and bits beyond n are rejected.
    static Digraph from_out_masks(std::vector<VertexSet> out) {
        const int n = static_cast<int>(out.size());
        check_order(n);
        for (int v = 0; v < n; ++v) {
            if (contains(out[v], v))
                throw GraphError(GraphError::Reason::loop, "loop " + to_string({v, v}));
            if ((out[v] & ~first_n(n)) != 0)
                throw GraphError(GraphError::Reason::out_of_range,
                                 "out-neighbour mask of " + std::to_string(v) + " exceeds n=" + std::to_string(n));
        }
        return Digraph(std::move(out));
    }

    int order() const noexcept { return static_cast<int>(out_.size()); }
    int size() const noexcept { return static_cast<int>(arcs_.size()); }
    VertexSet vertices() const noexcept { return first_n(order()); }

    VertexSet out(int v) const { return out_[v]; }
    VertexSet in(int v) const { return in_[v]; }
    int out_degree(int v) const { return cardinality(out_[v]); }
    int in_degree(int v) const { return cardinality(in_[v]); }
    bool has_arc(int u, int v) const { return contains(out_[u], v); }

    /// Union of out-neighbourhoods of the vertices in s.
    VertexSet out(VertexSet s) const {
        VertexSet r = 0;
        for_each_vertex(s, [&](int v) { r |= out_[v]; });
        return r;
    }

    VertexSet in(VertexSet s) const {
        VertexSet r = 0;
        for_each_vertex(s, [&](int v) { r |= in_[v]; });
        return r;
    }

    /// Arcs in lexicographic order; an arc's position is its index.
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    /// Index of arc a in arcs(), or -1 when absent.
    int arc_index(Arc a) const {
        auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
        if (it == arcs_.end() || *it != a) return -1;
        return static_cast<int>(it - arcs_.begin());
    }

    bool operator==(const Digraph& other) const { return out_ == other.out_; }

private:
    explicit Digraph(std::vector<VertexSet> out) : out_(std::move(out)) {
        const int n = order();
        in_.assign(out_.size(), 0);
        for (int u = 0; u < n; ++u) {
            for_each_vertex(out_[u], [&](int v) {
                in_[v] |= bit(u);
                arcs_.push_back({u, v});
            });
        }
    }

    static void check_order(int n) {
        if (n < 1 || n > max_order)
            throw GraphError(GraphError::Reason::bad_order,
                             "vertex count " + std::to_string(n) + " outside [1, 64]");
    }

    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::vector<Arc> arcs_;
};

/// Directed path given as its vertex sequence; internal vertices exclude both ends.
struct Path {
    std::vector<int> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Path&) const = default;
};

/// Consecutive arcs present and vertices pairwise distinct.
inline bool is_path_in(const Digraph& d, const Path& p) {
    if (p.vertices.empty()) return false;
    VertexSet seen = 0;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const int v = p.vertices[i];
        if (v < 0 || v >= d.order() || contains(seen, v)) return false;
        seen |= bit(v);
        if (i > 0 && !d.has_arc(p.vertices[i - 1], v)) return false;
    }
    return true;
}

struct InducedSubdigraph {
    Digraph graph;
    std::vector<int> original;  // new label -> original label
};

inline InducedSubdigraph induced_subdigraph(const Digraph& d, VertexSet s) {
    if (s == 0) throw GraphError(GraphError::Reason::empty_set, "induced subdigraph of an empty vertex set");
    if ((s & ~d.vertices()) != 0)
        throw GraphError(GraphError::Reason::out_of_range, "vertex set exceeds n=" + std::to_string(d.order()));
    std::vector<int> original = to_vector(s);
    std::vector<int> relabel(static_cast<std::size_t>(d.order()), -1);
    for (std::size_t i = 0; i < original.size(); ++i) relabel[original[i]] = static_cast<int>(i);
    std::vector<VertexSet> out(original.size(), 0);
    for (std::size_t i = 0; i < original.size(); ++i) {
        for_each_vertex(d.out(original[i]) & s, [&](int w) { out[i] |= bit(relabel[w]); });
    }
    return {Digraph::from_out_masks(std::move(out)), std::move(original)};
}

inline InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const int> s) {
    VertexSet mask = 0;
    for (int v : s) {
        if (v < 0 || v >= d.order())
            throw GraphError(GraphError::Reason::out_of_range, "vertex " + std::to_string(v) + " out of range");
        mask |= bit(v);
    }
    return induced_subdigraph(d, mask);
}

/// Same vertex set, exactly the given arcs (each must belong to d).
inline Digraph spanning_subdigraph(const Digraph& d, std::span<const Arc> arc_subset) {
    for (const Arc& a : arc_subset) {
        if (a.tail < 0 || a.tail >= d.order() || a.head < 0 || a.head >= d.order() || !d.has_arc(a.tail, a.head))
            throw GraphError(GraphError::Reason::missing_arc, "arc " + to_string(a) + " is not in the digraph");
    }
    return Digraph::build(d.order(), arc_subset);
}

inline Digraph reverse(const Digraph& d) {
    std::vector<VertexSet> out(static_cast<std::size_t>(d.order()));
    for (int v = 0; v < d.order(); ++v) out[v] = d.in(v);
    return Digraph::from_out_masks(std::move(out));
}

}  // namespace smcv
