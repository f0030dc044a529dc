#pragma once

// Undirected simple graphs with stable 1-based vertex identities, plus
// generators for the graph families the rest of the toolkit works on.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tatforge/errors.hpp"

namespace tatforge {

enum class VertexClass : std::uint8_t { U = 0, V = 1, Plain = 2 };

// Identity of a vertex: class + 1-based index. U/V are the two "ranks" of the
// product-style families (ladder, prism, generalized Petersen); Plain is used
// for paths, cycles, chains and ingested graphs. Ordering is (class, index).
struct VertexId {
    VertexClass cls{VertexClass::Plain};
    int index{0};

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline VertexId u_vertex(int i) { return {VertexClass::U, i}; }
inline VertexId v_vertex(int i) { return {VertexClass::V, i}; }
inline VertexId plain_vertex(int i) { return {VertexClass::Plain, i}; }

inline std::string to_string(VertexId v) {
    switch (v.cls) {
        case VertexClass::U: return "u" + std::to_string(v.index);
        case VertexClass::V: return "v" + std::to_string(v.index);
        default: return std::to_string(v.index);
    }
}

// "u3" / "v12" / "7"
inline VertexId parse_vertex_name(const std::string& s) {
    if (s.empty()) throw parse_error(0, "", "empty vertex name");
    VertexClass cls = VertexClass::Plain;
    std::size_t pos = 0;
    if (s[0] == 'u') { cls = VertexClass::U; pos = 1; }
    else if (s[0] == 'v') { cls = VertexClass::V; pos = 1; }
    if (pos >= s.size()) throw parse_error(0, "", "bad vertex name '" + s + "'");
    int idx = 0;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9')
            throw parse_error(0, "", "bad vertex name '" + s + "'");
        idx = idx * 10 + (s[pos] - '0');
        if (idx > 1'000'000'000) throw parse_error(0, "", "vertex index overflow in '" + s + "'");
    }
    if (idx < 1) throw parse_error(0, "", "vertex index must be >= 1 in '" + s + "'");
    return {cls, idx};
}

// Unordered pair of endpoints, stored with the smaller endpoint first.
struct Edge {
    VertexId a, b;

    Edge(VertexId x, VertexId y) : a(x), b(y) {
        if (x == y)
            throw invalid_parameter_error("loop edge at vertex " + tatforge::to_string(x));
        if (b < a) std::swap(a, b);
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) { return to_string(e.a) + "-" + to_string(e.b); }

struct FamilyTag {
    enum class Kind { Ladder, Prism, Petersen, Path, Cycle, Chain, Custom };
    Kind kind{Kind::Custom};
    int n{0};
    int m{0}; // Petersen step; 0 otherwise
};

inline std::string to_string(FamilyTag::Kind k) {
    switch (k) {
        case FamilyTag::Kind::Ladder: return "ladder";
        case FamilyTag::Kind::Prism: return "prism";
        case FamilyTag::Kind::Petersen: return "petersen";
        case FamilyTag::Kind::Path: return "path";
        case FamilyTag::Kind::Cycle: return "cycle";
        case FamilyTag::Kind::Chain: return "chain";
        default: return "custom";
    }
}

// Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph(std::vector<VertexId> vertices, std::vector<Edge> edges, FamilyTag tag = {})
        : verts_(std::move(vertices)), edges_(std::move(edges)), tag_(tag) {
        for (int i = 0; i < static_cast<int>(verts_.size()); ++i) {
            if (!vindex_.emplace(verts_[i], i).second)
                throw invalid_parameter_error("duplicate vertex " + tatforge::to_string(verts_[i]));
        }
        incident_.resize(verts_.size());
        ends_.reserve(edges_.size());
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
            const Edge& e = edges_[i];
            auto ia = vindex_.find(e.a), ib = vindex_.find(e.b);
            if (ia == vindex_.end() || ib == vindex_.end())
                throw invalid_parameter_error("edge " + tatforge::to_string(e) +
                                              " references an undeclared vertex");
            if (!eindex_.emplace(e, i).second)
                throw invalid_parameter_error("duplicate edge " + tatforge::to_string(e));
            incident_[ia->second].push_back(i);
            incident_[ib->second].push_back(i);
            ends_.emplace_back(ia->second, ib->second);
        }
    }

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int element_count() const { return vertex_count() + edge_count(); }

    const std::vector<VertexId>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const FamilyTag& family() const { return tag_; }

    bool contains(VertexId v) const { return vindex_.count(v) != 0; }
    bool contains(const Edge& e) const { return eindex_.count(e) != 0; }

    int vertex_index(VertexId v) const {
        auto it = vindex_.find(v);
        if (it == vindex_.end())
            throw not_found_error("unknown vertex " + tatforge::to_string(v));
        return it->second;
    }

    int edge_index(const Edge& e) const {
        auto it = eindex_.find(e);
        if (it == eindex_.end())
            throw not_found_error("unknown edge " + tatforge::to_string(e));
        return it->second;
    }

    // Edge indices incident to the vertex at canonical index i.
    const std::vector<int>& incident_edges(int i) const { return incident_[i]; }

    // Canonical vertex indices of the endpoints of edge i.
    std::pair<int, int> endpoints(int i) const { return ends_[i]; }

    int degree_at(int i) const { return static_cast<int>(incident_[i].size()); }
    int degree(VertexId v) const { return degree_at(vertex_index(v)); }

    bool operator==(const Graph& other) const {
        return verts_ == other.verts_ && edges_ == other.edges_;
    }

private:
    std::vector<VertexId> verts_;
    std::vector<Edge> edges_;
    FamilyTag tag_;
    std::map<VertexId, int> vindex_;
    std::map<Edge, int> eindex_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::pair<int, int>> ends_;
};

namespace detail {
// 1-based wraparound: maps x into [1, n].
inline int mod_index(int x, int n) { return (x - 1) % n + 1; }
} // namespace detail

// Ladder: two rails of n vertices joined by n rungs. p = 2n, q = 3n-2.
// Edge order: u-rail, v-rail, rungs.
inline Graph build_ladder(int n) {
    if (n < 2) throw invalid_parameter_error("ladder requires n >= 2");
    std::vector<VertexId> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(u_vertex(i));
    for (int i = 1; i <= n; ++i) verts.push_back(v_vertex(i));
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(u_vertex(i), u_vertex(i + 1));
    for (int i = 1; i < n; ++i) edges.emplace_back(v_vertex(i), v_vertex(i + 1));
    for (int i = 1; i <= n; ++i) edges.emplace_back(u_vertex(i), v_vertex(i));
    return Graph(std::move(verts), std::move(edges), {FamilyTag::Kind::Ladder, n, 0});
}

// Prism: two n-cycles joined by n rungs. p = 2n, q = 3n. Cubic.
// Edge order: u-cycle, v-cycle, rungs.
inline Graph build_prism(int n) {
    if (n < 3) throw invalid_parameter_error("prism requires n >= 3");
    std::vector<VertexId> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(u_vertex(i));
    for (int i = 1; i <= n; ++i) verts.push_back(v_vertex(i));
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(u_vertex(i), u_vertex(detail::mod_index(i + 1, n)));
    for (int i = 1; i <= n; ++i) edges.emplace_back(v_vertex(i), v_vertex(detail::mod_index(i + 1, n)));
    for (int i = 1; i <= n; ++i) edges.emplace_back(u_vertex(i), v_vertex(i));
    return Graph(std::move(verts), std::move(edges), {FamilyTag::Kind::Prism, n, 0});
}

// Generalized Petersen P(n,m): outer n-cycle, n spokes, inner edges v_i v_{i+m}
// (indices mod n). p = 2n, q = 3n. Edge order: outer, spokes, inner.
inline Graph build_petersen(int n, int m) {
    if (n < 3) throw invalid_parameter_error("petersen requires n >= 3");
    if (m < 1 || m > (n - 1) / 2)
        throw invalid_parameter_error("petersen requires 1 <= m <= floor((n-1)/2)");
    std::vector<VertexId> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(u_vertex(i));
    for (int i = 1; i <= n; ++i) verts.push_back(v_vertex(i));
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(u_vertex(i), u_vertex(detail::mod_index(i + 1, n)));
    for (int i = 1; i <= n; ++i) edges.emplace_back(u_vertex(i), v_vertex(i));
    for (int i = 1; i <= n; ++i) edges.emplace_back(v_vertex(i), v_vertex(detail::mod_index(i + m, n)));
    return Graph(std::move(verts), std::move(edges), {FamilyTag::Kind::Petersen, n, m});
}

inline Graph build_path(int n) {
    if (n < 2) throw invalid_parameter_error("path requires n >= 2");
    std::vector<VertexId> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(plain_vertex(i));
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(plain_vertex(i), plain_vertex(i + 1));
    return Graph(std::move(verts), std::move(edges), {FamilyTag::Kind::Path, n, 0});
}

inline Graph build_cycle(int n) {
    if (n < 3) throw invalid_parameter_error("cycle requires n >= 3");
    std::vector<VertexId> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(plain_vertex(i));
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(plain_vertex(i), plain_vertex(detail::mod_index(i + 1, n)));
    return Graph(std::move(verts), std::move(edges), {FamilyTag::Kind::Cycle, n, 0});
}

// Edge-list text: one edge per line, "a b" with positive integer vertex names.
// Blank lines are skipped; '#' starts a comment (whole line or trailing).
inline Graph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::vector<VertexId> verts;
    std::map<VertexId, bool> seen_vertex;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long a = 0, b = 0;
        if (!(ls >> a)) continue; // blank or comment-only
        if (!(ls >> b))
            throw parse_error(lineno, "", "expected two vertex names");
        std::string extra;
        if (ls >> extra)
            throw parse_error(lineno, "", "trailing token '" + extra + "'");
        if (a < 1 || b < 1)
            throw parse_error(lineno, "", "vertex names must be positive integers");
        if (a == b)
            throw parse_error(lineno, "", "loop edge " + std::to_string(a) + " " + std::to_string(b));
        Edge e(plain_vertex(static_cast<int>(a)), plain_vertex(static_cast<int>(b)));
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw parse_error(lineno, "", "duplicate edge " + tatforge::to_string(e));
        edges.push_back(e);
        for (VertexId v : {e.a, e.b}) {
            if (!seen_vertex[v]) {
                seen_vertex[v] = true;
                verts.push_back(v);
            }
        }
    }
    if (edges.empty()) throw parse_error(lineno, "", "no edges in input");
    std::sort(verts.begin(), verts.end());
    return Graph(std::move(verts), std::move(edges), {FamilyTag::Kind::Custom, 0, 0});
}

} // namespace tatforge
