#pragma once

// Text formats. Digraph files: optional '#' comment lines, a header "n m",
// then m lines "u v" (0-based). Vertex coloring files: one "v c" line per
// vertex. Arc coloring files: one "u v c" line per arc. Reports: sorted
// "key=value" lines, then "[section]" blocks.

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "digraph.hpp"
#include "solvers.hpp"

namespace smcv {

class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

struct DataLine {
    int number;
    std::vector<long long> fields;
};

// Non-blank, non-comment lines split into integers.
inline std::vector<DataLine> data_lines(const std::string& text) {
    std::vector<DataLine> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream tokens(line);
        std::string token;
        DataLine dl{number, {}};
        while (tokens >> token) {
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size())
                throw ParseError("bad token '" + token + "' at line " + std::to_string(number));
            dl.fields.push_back(value);
        }
        out.push_back(std::move(dl));
    }
    return out;
}

inline void expect_fields(const DataLine& dl, std::size_t count, const char* what) {
    if (dl.fields.size() != count)
        throw ParseError(std::string("expected ") + what + " at line " + std::to_string(dl.number));
}

}  // namespace detail

inline Digraph parse_digraph(const std::string& text) {
    const auto lines = detail::data_lines(text);
    if (lines.empty()) throw ParseError("missing header \"n m\"");
    detail::expect_fields(lines[0], 2, "header \"n m\"");
    const long long n = lines[0].fields[0];
    const long long m = lines[0].fields[1];
    if (n < 1 || n > max_order) throw ParseError("vertex count " + std::to_string(n) + " outside [1, 64] at line " +
                                                 std::to_string(lines[0].number));
    if (m < 0 || static_cast<std::size_t>(m) != lines.size() - 1)
        throw ParseError("header announces " + std::to_string(m) + " arcs but " + std::to_string(lines.size() - 1) +
                         " arc lines follow");
    std::vector<Arc> arcs;
    VertexSet seen_out[max_order] = {};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& dl = lines[i];
        detail::expect_fields(dl, 2, "arc \"u v\"");
        const Arc a{static_cast<int>(dl.fields[0]), static_cast<int>(dl.fields[1])};
        const std::string where = " at line " + std::to_string(dl.number);
        if (dl.fields[0] < 0 || dl.fields[0] >= n || dl.fields[1] < 0 || dl.fields[1] >= n)
            throw ParseError("arc " + to_string(a) + " out of range" + where);
        if (a.tail == a.head) throw ParseError("loop " + to_string(a) + where);
        if (contains(seen_out[a.tail], a.head)) throw ParseError("duplicate arc " + to_string(a) + where);
        seen_out[a.tail] |= bit(a.head);
        arcs.push_back(a);
    }
    return Digraph::build(static_cast<int>(n), arcs);
}

/// Canonical text: header then arcs in lexicographic order.
inline std::string serialize_digraph(const Digraph& d) {
    std::ostringstream os;
    os << d.order() << ' ' << d.size() << '\n';
    for (const Arc& a : d.arcs()) os << a.tail << ' ' << a.head << '\n';
    return os.str();
}

inline VertexColoring parse_coloring(const std::string& text, const Digraph& d) {
    const int n = d.order();
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& dl : detail::data_lines(text)) {
        detail::expect_fields(dl, 2, "\"v c\"");
        const long long v = dl.fields[0];
        const long long c = dl.fields[1];
        const std::string where = " at line " + std::to_string(dl.number);
        if (v < 0 || v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range" + where);
        if (c < 1) throw ParseError("color " + std::to_string(c) + " is not a positive integer" + where);
        if (seen[v]) throw ParseError("duplicate vertex " + std::to_string(v) + where);
        seen[v] = true;
        labels[v] = static_cast<int>(c);
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw ParseError("missing vertex " + std::to_string(v));
    return VertexColoring::from_labels(labels);
}

inline ArcColoring parse_arc_coloring(const std::string& text, const Digraph& d) {
    const int m = d.size();
    std::vector<int> labels(static_cast<std::size_t>(m), 0);
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (const auto& dl : detail::data_lines(text)) {
        detail::expect_fields(dl, 3, "\"u v c\"");
        const std::string where = " at line " + std::to_string(dl.number);
        const Arc a{static_cast<int>(dl.fields[0]), static_cast<int>(dl.fields[1])};
        const bool in_range = dl.fields[0] >= 0 && dl.fields[0] < d.order() && dl.fields[1] >= 0 &&
                              dl.fields[1] < d.order();
        const int e = in_range ? d.arc_index(a) : -1;
        if (e < 0) throw ParseError("arc " + to_string(a) + " is not in the digraph" + where);
        if (dl.fields[2] < 1) throw ParseError("color " + std::to_string(dl.fields[2]) + " is not a positive integer" + where);
        if (seen[e]) throw ParseError("duplicate arc " + to_string(a) + where);
        seen[e] = true;
        labels[e] = static_cast<int>(dl.fields[2]);
    }
    for (int e = 0; e < m; ++e)
        if (!seen[e]) throw ParseError("missing arc " + to_string(d.arcs()[e]));
    return ArcColoring::from_labels(labels);
}

/// Plain-text result: top-level key=value pairs and named sections, each
/// with sorted key=value pairs followed by raw lines in insertion order.
class Report {
public:
    struct Section {
        std::string name;
        std::map<std::string, std::string> values;
        std::vector<std::string> lines;
    };

    void set(const std::string& key, const std::string& value) { top_.values[key] = value; }
    void set(const std::string& key, long long value) { set(key, std::to_string(value)); }

    Section& section(const std::string& name) {
        for (auto& s : sections_)
            if (s.name == name) return s;
        sections_.push_back({name, {}, {}});
        return sections_.back();
    }

    std::string render() const {
        std::ostringstream os;
        for (const auto& [k, v] : top_.values) os << k << '=' << v << '\n';
        for (const auto& s : sections_) {
            os << '[' << s.name << "]\n";
            for (const auto& [k, v] : s.values) os << k << '=' << v << '\n';
            for (const auto& line : s.lines) os << line << '\n';
        }
        return os.str();
    }

private:
    Section top_;
    std::vector<Section> sections_;
};

inline std::string join(const std::vector<int>& xs, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
    return os.str();
}

/// "[certificate:NAME]" block: colorings as "v c" / "u v c" lines, vertex
/// sets as the induced arcs, arc sets as arc lines, cycles as one line.
inline void add_certificate(Report& report, const std::string& name, const Digraph& d, const Certificate& cert) {
    auto& s = report.section("certificate:" + name);
    s.values["kind"] = to_string(cert.kind);
    s.values["value"] = std::to_string(cert.value);
    switch (cert.kind) {
        case CertificateKind::optimal_vertex_coloring: {
            const auto& c = cert.vertex_coloring();
            for (int v = 0; v < c.order(); ++v) s.lines.push_back(std::to_string(v) + " " + std::to_string(c.color(v)));
            break;
        }
        case CertificateKind::optimal_arc_coloring: {
            const auto& c = cert.arc_coloring();
            for (int e = 0; e < c.size(); ++e)
                s.lines.push_back(std::to_string(d.arcs()[e].tail) + " " + std::to_string(d.arcs()[e].head) + " " +
                                  std::to_string(c.color(e)));
            break;
        }
        case CertificateKind::minimal_h_subdigraph: {
            const VertexSet h = cert.vertex_set();
            s.values["vertices"] = join(to_vector(h));
            for (const Arc& a : d.arcs())
                if (contains(h, a.tail) && contains(h, a.head))
                    s.lines.push_back(std::to_string(a.tail) + " " + std::to_string(a.head));
            break;
        }
        case CertificateKind::minimal_spanning_arcset:
            for (const Arc& a : cert.arc_set()) s.lines.push_back(std::to_string(a.tail) + " " + std::to_string(a.head));
            break;
        case CertificateKind::hamiltonian_cycle: {
            auto closed = cert.cycle().vertices;
            closed.push_back(closed.front());
            s.lines.push_back(join(closed));
            break;
        }
    }
}

}  // namespace smcv
