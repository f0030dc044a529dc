#pragma once

// File formats:
//   - labeling files: one JSON document per (graph, labeling) pair; family
//     graphs carry their parameters, chain/custom graphs carry an explicit
//     edge list. Writing then reading is the identity, byte for byte.
//   - verification reports as JSON mirroring VerificationReport
//   - DOT export with labels as node/edge annotations
//   - chain manifests: one labeling-file path per line
// Parse failures throw parse_error with line/field diagnostics.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tatforge/errors.hpp"
#include "tatforge/graph.hpp"
#include "tatforge/labeling.hpp"
#include "tatforge/verifier.hpp"

namespace tatforge {

struct LoadedLabeling {
    Graph graph;
    TotalLabeling labeling;
};

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline int line_of_byte(const std::string& text, std::size_t byte) {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

inline bool family_needs_params(FamilyTag::Kind k) {
    return k == FamilyTag::Kind::Ladder || k == FamilyTag::Kind::Prism ||
           k == FamilyTag::Kind::Petersen || k == FamilyTag::Kind::Path ||
           k == FamilyTag::Kind::Cycle;
}

inline FamilyTag::Kind family_from_string(const std::string& s) {
    if (s == "ladder") return FamilyTag::Kind::Ladder;
    if (s == "prism") return FamilyTag::Kind::Prism;
    if (s == "petersen") return FamilyTag::Kind::Petersen;
    if (s == "path") return FamilyTag::Kind::Path;
    if (s == "cycle") return FamilyTag::Kind::Cycle;
    if (s == "chain") return FamilyTag::Kind::Chain;
    if (s == "custom") return FamilyTag::Kind::Custom;
    throw parse_error(0, "family", "unknown family '" + s + "'");
}

inline Graph build_family(FamilyTag::Kind kind, int n, int m) {
    try {
        switch (kind) {
            case FamilyTag::Kind::Ladder: return build_ladder(n);
            case FamilyTag::Kind::Prism: return build_prism(n);
            case FamilyTag::Kind::Petersen: return build_petersen(n, m);
            case FamilyTag::Kind::Path: return build_path(n);
            default: return build_cycle(n);
        }
    } catch (const invalid_parameter_error& e) {
        throw parse_error(0, "n", e.what());
    }
}

inline std::int64_t label_value(const ordered_json& j, const std::string& field) {
    if (!j.is_number_integer())
        throw parse_error(0, field, "label must be an integer");
    std::int64_t v = j.get<std::int64_t>();
    if (v < 1) throw parse_error(0, field, "label must be >= 1");
    return v;
}

} // namespace detail

// Hand-formatted so edge entries stay one per line; the reader accepts any
// JSON layout, this is just the canonical one.
inline void write_labeling(std::ostream& os, const Graph& g, const TotalLabeling& L) {
    const FamilyTag& tag = g.family();
    os << "{\n";
    os << "  \"family\": \"" << to_string(tag.kind) << "\",\n";
    if (detail::family_needs_params(tag.kind)) {
        os << "  \"n\": " << tag.n << ",\n";
        if (tag.kind == FamilyTag::Kind::Petersen) os << "  \"m\": " << tag.m << ",\n";
        os << "  \"vertex_labels\": [";
        for (int i = 0; i < g.vertex_count(); ++i)
            os << (i ? ", " : "") << L.vertex_label_at(i);
        os << "],\n";
    } else {
        os << "  \"edges\": [";
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edges()[i];
            os << (i ? ", " : "") << "[\"" << to_string(e.a) << "\", \"" << to_string(e.b)
               << "\"]";
        }
        os << "],\n";
        os << "  \"vertex_labels\": [";
        for (int i = 0; i < g.vertex_count(); ++i)
            os << (i ? ", " : "") << "[\"" << to_string(g.vertices()[i]) << "\", "
               << L.vertex_label_at(i) << "]";
        os << "],\n";
    }
    os << "  \"edge_labels\": [\n";
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        os << "    [\"" << to_string(e.a) << "\", \"" << to_string(e.b) << "\", "
           << L.edge_label_at(i) << "]" << (i + 1 < g.edge_count() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
}

inline LoadedLabeling read_labeling(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    detail::ordered_json j;
    try {
        j = detail::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(detail::line_of_byte(text, e.byte), "", e.what());
    }
    if (!j.is_object()) throw parse_error(1, "", "labeling file must be a JSON object");
    if (!j.contains("family") || !j["family"].is_string())
        throw parse_error(0, "family", "missing or non-string");
    FamilyTag::Kind kind = detail::family_from_string(j["family"].get<std::string>());

    Graph g = [&]() -> Graph {
        if (detail::family_needs_params(kind)) {
            if (!j.contains("n") || !j["n"].is_number_integer())
                throw parse_error(0, "n", "missing or non-integer");
            int n = j["n"].get<int>();
            int m = 0;
            if (kind == FamilyTag::Kind::Petersen) {
                if (!j.contains("m") || !j["m"].is_number_integer())
                    throw parse_error(0, "m", "missing or non-integer");
                m = j["m"].get<int>();
            }
            return detail::build_family(kind, n, m);
        }
        if (!j.contains("edges") || !j["edges"].is_array())
            throw parse_error(0, "edges", "missing or non-array");
        std::vector<Edge> edges;
        std::vector<VertexId> verts;
        for (const auto& je : j["edges"]) {
            if (!je.is_array() || je.size() != 2 || !je[0].is_string() || !je[1].is_string())
                throw parse_error(0, "edges", "each entry must be [\"a\",\"b\"]");
            VertexId a = parse_vertex_name(je[0].get<std::string>());
            VertexId b = parse_vertex_name(je[1].get<std::string>());
            if (a == b) throw parse_error(0, "edges", "loop edge " + to_string(a));
            edges.emplace_back(a, b);
        }
        if (!j.contains("vertex_labels") || !j["vertex_labels"].is_array())
            throw parse_error(0, "vertex_labels", "missing or non-array");
        for (const auto& jv : j["vertex_labels"]) {
            if (!jv.is_array() || jv.size() != 2 || !jv[0].is_string())
                throw parse_error(0, "vertex_labels", "each entry must be [\"name\", label]");
            verts.push_back(parse_vertex_name(jv[0].get<std::string>()));
        }
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
            throw parse_error(0, "vertex_labels", "duplicate vertex entry");
        try {
            return Graph(std::move(verts), std::move(edges), {kind, 0, 0});
        } catch (const invalid_parameter_error& e) {
            throw parse_error(0, "edges", e.what());
        }
    }();

    TotalLabeling L(g);
    if (!j.contains("vertex_labels") || !j["vertex_labels"].is_array())
        throw parse_error(0, "vertex_labels", "missing or non-array");
    const auto& vl = j["vertex_labels"];
    if (detail::family_needs_params(kind)) {
        if (static_cast<int>(vl.size()) != g.vertex_count())
            throw parse_error(0, "vertex_labels",
                              "expected " + std::to_string(g.vertex_count()) + " entries, got " +
                                  std::to_string(vl.size()));
        for (int i = 0; i < g.vertex_count(); ++i)
            L.set_vertex_label_at(i, detail::label_value(vl[i], "vertex_labels"));
    } else {
        if (static_cast<int>(vl.size()) != g.vertex_count())
            throw parse_error(0, "vertex_labels", "entry count does not match vertex set");
        for (const auto& jv : vl) {
            VertexId v = parse_vertex_name(jv[0].get<std::string>());
            L.set_vertex_label(g, v, detail::label_value(jv[1], "vertex_labels"));
        }
    }

    if (!j.contains("edge_labels") || !j["edge_labels"].is_array())
        throw parse_error(0, "edge_labels", "missing or non-array");
    const auto& el = j["edge_labels"];
    if (static_cast<int>(el.size()) != g.edge_count())
        throw parse_error(0, "edge_labels",
                          "expected " + std::to_string(g.edge_count()) + " entries, got " +
                              std::to_string(el.size()));
    std::vector<bool> seen(g.edge_count(), false);
    for (const auto& je : el) {
        if (!je.is_array() || je.size() != 3 || !je[0].is_string() || !je[1].is_string())
            throw parse_error(0, "edge_labels", "each entry must be [\"a\",\"b\", label]");
        VertexId a = parse_vertex_name(je[0].get<std::string>());
        VertexId b = parse_vertex_name(je[1].get<std::string>());
        Edge e(a, b);
        if (!g.contains(e))
            throw parse_error(0, "edge_labels", "edge " + to_string(e) + " is not in the graph");
        int idx = g.edge_index(e);
        if (seen[idx])
            throw parse_error(0, "edge_labels", "duplicate entry for edge " + to_string(e));
        seen[idx] = true;
        L.set_edge_label_at(idx, detail::label_value(je[2], "edge_labels"));
    }
    return {std::move(g), std::move(L)};
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["is_complete"] = r.is_complete;
    j["is_bijective_total"] = r.is_bijective_total;
    j["is_super"] = r.is_super;
    j["is_eat"] = r.is_eat;
    j["is_vat"] = r.is_vat;
    j["is_tat"] = r.is_tat;
    j["sharp_ordered"] = r.sharp_ordered;
    if (r.weak_ordered) j["weak_ordered"] = *r.weak_ordered;
    else j["weak_ordered"] = nullptr;
    if (r.weak_ordered_partition) {
        auto parts = nlohmann::ordered_json::array();
        for (const auto& part : *r.weak_ordered_partition) {
            auto names = nlohmann::ordered_json::array();
            for (VertexId v : part) names.push_back(to_string(v));
            parts.push_back(names);
        }
        j["weak_ordered_partition"] = parts;
    } else {
        j["weak_ordered_partition"] = nullptr;
    }
    auto ws = nlohmann::ordered_json::array();
    for (const Witness& w : r.witnesses) {
        nlohmann::ordered_json jw;
        jw["property"] = to_string(w.property);
        jw["a"] = w.element_a;
        jw["b"] = w.element_b;
        jw["weight"] = w.weight;
        ws.push_back(jw);
    }
    j["witnesses"] = ws;
    return j;
}

inline void write_report(std::ostream& os, const VerificationReport& r) {
    os << report_to_json(r).dump(2) << '\n';
}

// DOT text with stable ordering: vertices in canonical order, edges in graph
// order. Labels become annotations when a labeling is supplied.
inline void write_dot(std::ostream& os, const Graph& g, const TotalLabeling* L = nullptr) {
    os << "graph tatforge {\n";
    for (int i = 0; i < g.vertex_count(); ++i) {
        std::string name = to_string(g.vertices()[i]);
        os << "  \"" << name << "\"";
        if (L) os << " [label=\"" << name << ": " << L->vertex_label_at(i) << "\"]";
        os << ";\n";
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        os << "  \"" << to_string(e.a) << "\" -- \"" << to_string(e.b) << "\"";
        if (L) os << " [label=\"" << L->edge_label_at(i) << "\"]";
        os << ";\n";
    }
    os << "}\n";
}

// One labeling-file path per line; blank lines and '#' comments ignored.
inline std::vector<std::string> read_manifest(std::istream& in) {
    std::vector<std::string> paths;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        paths.push_back(line.substr(begin, end - begin + 1));
    }
    if (paths.empty()) throw parse_error(lineno, "", "manifest lists no labeling files");
    return paths;
}

} // namespace tatforge
