#pragma once

// Exact solvers for smc_v, Omega_v, Omega and smc. Each answer carries a
// certificate that recheck() validates with the independent checkers.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "coloring.hpp"
#include "digraph.hpp"
#include "metrics.hpp"
#include "partitions.hpp"

namespace smcv {

/// Instance-size guards; exceeding one raises GuardExceeded instead of
/// starting a search that would not finish.
struct SolverLimits {
    int smcv_max_order = 9;
    int smc_max_size = 10;
    int omega_v_max_order = 16;
    int omega_max_size = 20;

    static SolverLimits unlimited() { return {max_order, max_order, max_order, max_order * (max_order - 1)}; }
};

class GuardExceeded : public std::length_error {
public:
    GuardExceeded(std::string guard, int limit, int actual)
        : std::length_error("instance exceeds solver guard " + guard + "=" + std::to_string(limit) + " (got " +
                            std::to_string(actual) + "); pass --guard-override to lift it"),
          guard_(std::move(guard)) {}

    const std::string& guard() const noexcept { return guard_; }

private:
    std::string guard_;
};

/// How far smcv_exact searches. `bounded` starts at the diameter upper bound
/// and stops at n - Omega_v + 1; `full` walks every color count from n to 1
/// and so does not depend on either bound.
enum class SearchRange { bounded, full };

struct Cycle {
    std::vector<int> vertices;  // closed: last vertex returns to the first
    bool operator==(const Cycle&) const = default;
};

enum class CertificateKind {
    optimal_vertex_coloring,
    optimal_arc_coloring,
    minimal_h_subdigraph,
    minimal_spanning_arcset,
    hamiltonian_cycle,
};

inline const char* to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::optimal_vertex_coloring: return "optimal-vertex-coloring";
        case CertificateKind::optimal_arc_coloring: return "optimal-arc-coloring";
        case CertificateKind::minimal_h_subdigraph: return "minimal-H-subdigraph";
        case CertificateKind::minimal_spanning_arcset: return "minimal-spanning-arcset";
        case CertificateKind::hamiltonian_cycle: return "hamiltonian-cycle";
    }
    return "?";
}

struct Certificate {
    CertificateKind kind;
    int value;
    std::variant<VertexColoring, ArcColoring, VertexSet, std::vector<Arc>, Cycle> payload;

    const VertexColoring& vertex_coloring() const { return std::get<VertexColoring>(payload); }
    const ArcColoring& arc_coloring() const { return std::get<ArcColoring>(payload); }
    VertexSet vertex_set() const { return std::get<VertexSet>(payload); }
    const std::vector<Arc>& arc_set() const { return std::get<std::vector<Arc>>(payload); }
    const Cycle& cycle() const { return std::get<Cycle>(payload); }
};

inline bool is_cycle_in(const Digraph& d, const Cycle& c) {
    if (c.vertices.size() < 2) return false;
    Path p{c.vertices};
    return is_path_in(d, p) && d.has_arc(c.vertices.back(), c.vertices.front());
}

inline bool is_hamiltonian_cycle(const Digraph& d, const Cycle& c) {
    return static_cast<int>(c.vertices.size()) == d.order() && is_cycle_in(d, c);
}

/// Hamiltonian cycle of a strong tournament, grown from the first 3-cycle by
/// inserting vertices between a dominating predecessor and a dominated
/// successor. When no outside vertex can be inserted, every outside vertex
/// either beats the whole cycle or loses to it, and an arc from a loser b to
/// a winner a lets the pair be spliced in as ... -> last -> b -> a -> first.
/// The result is rotated to start at vertex 0.
inline Cycle hamiltonian_cycle(const Digraph& t) {
    if (!is_tournament(t)) throw std::invalid_argument("hamiltonian_cycle: not a tournament");
    if (!is_strong(t)) throw NotStrongError("hamiltonian_cycle: tournament is not strong");
    const int n = t.order();
    if (n == 1) return Cycle{{0}};

    std::vector<int> cyc;
    for (int a = 0; a < n && cyc.empty(); ++a)
        for (int b = a + 1; b < n && cyc.empty(); ++b)
            for (int c = b + 1; c < n && cyc.empty(); ++c) {
                if (t.has_arc(a, b) && t.has_arc(b, c) && t.has_arc(c, a)) cyc = {a, b, c};
                else if (t.has_arc(a, c) && t.has_arc(c, b) && t.has_arc(b, a)) cyc = {a, c, b};
            }

    VertexSet inside = 0;
    for (int v : cyc) inside |= bit(v);
    while (inside != t.vertices()) {
        bool grown = false;
        for_each_vertex(t.vertices() & ~inside, [&](int x) {
            if (grown) return;
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const int pred = cyc[i];
                const int succ = cyc[(i + 1) % cyc.size()];
                if (t.has_arc(pred, x) && t.has_arc(x, succ)) {
                    cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(i) + 1, x);
                    inside |= bit(x);
                    grown = true;
                    return;
                }
            }
        });
        if (grown) continue;
        const VertexSet outside = t.vertices() & ~inside;
        VertexSet winners = 0;  // beat every cycle vertex
        for_each_vertex(outside, [&](int x) {
            if ((t.out(x) & inside) == inside) winners |= bit(x);
        });
        const VertexSet losers = outside & ~winners;
        std::optional<Arc> bridge;
        for_each_vertex(losers, [&](int b) {
            if (!bridge && (t.out(b) & winners) != 0) bridge = Arc{b, std::countr_zero(t.out(b) & winners)};
        });
        if (!bridge) throw std::logic_error("hamiltonian_cycle: no splice arc in a strong tournament");
        cyc.push_back(bridge->tail);
        cyc.push_back(bridge->head);
        inside |= bit(bridge->tail) | bit(bridge->head);
    }
    auto zero = std::find(cyc.begin(), cyc.end(), 0);
    std::rotate(cyc.begin(), zero, cyc.end());
    return Cycle{std::move(cyc)};
}

/// Smallest vertex set S with D[S] strong, dominating and absorbing; sets are
/// tried by size, then lexicographically.
inline Certificate omega_v_exact(const Digraph& d, const SolverLimits& limits = {}) {
    require_strong(d, "omega_v_exact");
    const int n = d.order();
    if (n > limits.omega_v_max_order) throw GuardExceeded("omega_v_max_order", limits.omega_v_max_order, n);
    for (int k = 1; k <= n; ++k) {
        std::optional<VertexSet> found;
        for_each_combination(n, k, [&](const std::vector<int>& idx) {
            VertexSet s = 0;
            for (int v : idx) s |= bit(v);
            if (!is_dominating(d, s) || !is_absorbing(d, s)) return false;
            if (!is_strong(induced_subdigraph(d, s).graph)) return false;
            found = s;
            return true;
        });
        if (found) return {CertificateKind::minimal_h_subdigraph, k, *found};
    }
    throw std::logic_error("omega_v_exact: the full vertex set should always qualify");
}

/// Fewest arcs of a strong spanning subdigraph. Strong tournaments use their
/// Hamiltonian cycle; otherwise arc subsets are tried by size from n upward.
inline Certificate omega_exact(const Digraph& d, const SolverLimits& limits = {}) {
    require_strong(d, "omega_exact");
    const int n = d.order();
    if (n == 1) return {CertificateKind::minimal_spanning_arcset, 0, std::vector<Arc>{}};
    if (is_tournament(d)) {
        Cycle c = hamiltonian_cycle(d);
        return {CertificateKind::hamiltonian_cycle, n, std::move(c)};
    }
    const int m = d.size();
    if (m > limits.omega_max_size) throw GuardExceeded("omega_max_size", limits.omega_max_size, m);
    const auto& arcs = d.arcs();
    const VertexSet all = d.vertices();
    for (int k = n; k <= m; ++k) {
        std::optional<std::vector<Arc>> found;
        for_each_combination(m, k, [&](const std::vector<int>& idx) {
            VertexSet tails = 0;
            VertexSet heads = 0;
            for (int e : idx) {
                tails |= bit(arcs[e].tail);
                heads |= bit(arcs[e].head);
            }
            if (tails != all || heads != all) return false;
            std::vector<Arc> chosen;
            chosen.reserve(idx.size());
            for (int e : idx) chosen.push_back(arcs[e]);
            if (!is_strong(Digraph::build(n, chosen))) return false;
            found = std::move(chosen);
            return true;
        });
        if (found) return {CertificateKind::minimal_spanning_arcset, k, std::move(*found)};
    }
    throw std::logic_error("omega_exact: the full arc set should always qualify");
}

/// Largest color count of an SVMC-coloring. Partitions with p classes are
/// visited as restricted-growth strings for p = upper, upper-1, ...; the
/// first verified one is the certificate.
inline Certificate smcv_exact(const Digraph& d, const SolverLimits& limits = {},
                              SearchRange range = SearchRange::bounded) {
    require_strong(d, "smcv_exact");
    const int n = d.order();
    if (n > limits.smcv_max_order) throw GuardExceeded("smcv_max_order", limits.smcv_max_order, n);
    int upper = n;
    int lower = 1;
    if (range == SearchRange::bounded) {
        const int diameter = distances(d).diameter();
        if (diameter >= 3) upper = n - diameter + 2;
        lower = n - omega_v_exact(d, limits).value + 1;
    }
    std::vector<VertexSet> classes;
    for (int p = upper; p >= lower; --p) {
        std::optional<std::vector<int>> found;
        for_each_partition(n, p, [&](const std::vector<int>& rgs) {
            classes.assign(static_cast<std::size_t>(p), 0);
            for (int v = 0; v < n; ++v) classes[rgs[v]] |= bit(v);
            if (!is_svmc(d, classes)) return false;
            found = rgs;
            return true;
        });
        if (found) return {CertificateKind::optimal_vertex_coloring, p, VertexColoring::from_labels(*found)};
    }
    throw std::logic_error("smcv_exact: no SVMC-coloring at or above the lower bound");
}

/// Largest color count of an SMC-coloring, same downward scheme over arc
/// partitions, from m colors to 1.
inline Certificate smc_exact(const Digraph& d, const SolverLimits& limits = {}) {
    require_strong(d, "smc_exact");
    const int m = d.size();
    if (m > limits.smc_max_size) throw GuardExceeded("smc_max_size", limits.smc_max_size, m);
    if (m == 0) throw std::domain_error("smc_exact: a single vertex has no arcs to color");
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int k = m; k >= 1; --k) {
        std::optional<std::vector<int>> found;
        for_each_partition(m, k, [&](const std::vector<int>& rgs) {
            for (int e = 0; e < m; ++e) labels[e] = rgs[e] + 1;
            if (!is_smc(d, labels, k)) return false;
            found = labels;
            return true;
        });
        if (found) return {CertificateKind::optimal_arc_coloring, k, ArcColoring::from_labels(*found)};
    }
    throw std::logic_error("smc_exact: a single color should always connect a strong digraph");
}

class HypothesisError : public std::domain_error {
public:
    explicit HypothesisError(const std::string& what) : std::domain_error(what) {}
};

/// m - Omega + 1, valid for strong oriented graphs only.
inline int smc_by_formula(const Digraph& d, const SolverLimits& limits = {}) {
    require_strong(d, "smc_by_formula");
    if (!is_oriented(d)) throw HypothesisError("smc_by_formula: digon present");
    return d.size() - omega_exact(d, limits).value + 1;
}

/// Re-validates a certificate against d with the independent checkers.
inline bool recheck(const Digraph& d, const Certificate& cert) {
    switch (cert.kind) {
        case CertificateKind::optimal_vertex_coloring: {
            const auto& c = cert.vertex_coloring();
            if (c.order() != d.order() || c.colors() != cert.value) return false;
            const Verdict v = verify_svmc(d, c);
            if (!v.ok) return false;
            for (int a = 0; a < d.order(); ++a)
                for (int b = 0; b < d.order(); ++b) {
                    if (a == b) continue;
                    const auto& p = v.witnesses.at(a, b);
                    if (!p || !is_path_in(d, *p) || p->vertices.front() != a || p->vertices.back() != b) return false;
                    for (std::size_t i = 2; i + 1 < p->vertices.size(); ++i)
                        if (c.color(p->vertices[i]) != c.color(p->vertices[1])) return false;
                }
            return true;
        }
        case CertificateKind::optimal_arc_coloring: {
            const auto& c = cert.arc_coloring();
            if (c.size() != d.size() || c.colors() != cert.value) return false;
            const Verdict v = verify_smc(d, c);
            if (!v.ok) return false;
            for (int a = 0; a < d.order(); ++a)
                for (int b = 0; b < d.order(); ++b) {
                    if (a == b) continue;
                    const auto& p = v.witnesses.at(a, b);
                    if (!p || !is_path_in(d, *p)) return false;
                    const int first = c.color(d.arc_index({p->vertices[0], p->vertices[1]}));
                    for (std::size_t i = 1; i < p->vertices.size(); ++i)
                        if (c.color(d.arc_index({p->vertices[i - 1], p->vertices[i]})) != first) return false;
                }
            return true;
        }
        case CertificateKind::minimal_h_subdigraph: {
            const VertexSet s = cert.vertex_set();
            if (s == 0 || (s & ~d.vertices()) != 0 || cardinality(s) != cert.value) return false;
            return is_strong(induced_subdigraph(d, s).graph) && is_dominating(d, s) && is_absorbing(d, s);
        }
        case CertificateKind::minimal_spanning_arcset: {
            const auto& arcs = cert.arc_set();
            if (static_cast<int>(arcs.size()) != cert.value) return false;
            try {
                return is_strong(spanning_subdigraph(d, arcs));
            } catch (const GraphError&) {
                return false;
            }
        }
        case CertificateKind::hamiltonian_cycle:
            return cert.value == d.order() && is_hamiltonian_cycle(d, cert.cycle());
    }
    return false;
}

}  // namespace smcv
