#pragma once

// Decides, from the labels alone, every property a labeling can be claimed
// to have: bijectivity onto {1,...,p+q}, super-ness, edge-/vertex-antimagic
// (all weights in the class pairwise distinct), and sharp/weak ordering.
// Every false verdict carries explicit counterexample witnesses.
//
// Antimagic-ness is decided for the labeling as-is, with no bijectivity
// prerequisite: chain compositions repeat labels, and the weight conditions
// are still well-defined there.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tatforge/graph.hpp"
#include "tatforge/labeling.hpp"

namespace tatforge {

enum class Property {
    Complete,
    BijectiveTotal,
    Super,
    Eat,
    Vat,
    SharpOrdered,
    WeakOrdered,
};

inline std::string to_string(Property p) {
    switch (p) {
        case Property::Complete: return "complete";
        case Property::BijectiveTotal: return "bijective_total";
        case Property::Super: return "super";
        case Property::Eat: return "eat";
        case Property::Vat: return "vat";
        case Property::SharpOrdered: return "sharp_ordered";
        default: return "weak_ordered";
    }
}

// One conflict: the pair of elements it involves and the number that exposes
// it (the shared weight for collisions, the shared/duplicated label for
// bijectivity failures, the first element's weight for order violations).
struct Witness {
    Property property;
    std::string element_a;
    std::string element_b;
    std::int64_t weight;

    bool operator==(const Witness&) const = default;
};

struct CheckResult {
    bool ok = true;
    std::vector<Witness> witnesses;
};

using Partition = std::vector<std::vector<VertexId>>;

struct VerificationReport {
    bool is_complete = false;
    bool is_bijective_total = false;
    bool is_super = false;
    bool is_eat = false;
    bool is_vat = false;
    bool is_tat = false;
    bool sharp_ordered = false;
    std::optional<bool> weak_ordered;          // set iff a partition was checked
    std::optional<Partition> weak_ordered_partition;
    std::vector<Witness> witnesses;            // never capped here; display may cap
};

namespace detail {

// All collision pairs within one weight class, in canonical element order.
// names[i] must already follow that order for equal-weight runs to come out
// sorted; callers pass elements in identity order.
template <typename Name>
inline void collect_collisions(Property prop, const std::vector<std::int64_t>& weights,
                               const std::vector<Name>& elems, std::vector<Witness>& out) {
    std::map<std::int64_t, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(weights.size()); ++i)
        groups[weights[i]].push_back(i);
    std::vector<Witness> found;
    for (const auto& [w, idxs] : groups) {
        for (std::size_t a = 0; a + 1 < idxs.size(); ++a)
            for (std::size_t b = a + 1; b < idxs.size(); ++b)
                found.push_back({prop, to_string(elems[idxs[a]]), to_string(elems[idxs[b]]), w});
    }
    // identity order, not weight order
    std::sort(found.begin(), found.end(), [](const Witness& x, const Witness& y) {
        return std::tie(x.element_a, x.element_b) < std::tie(y.element_a, y.element_b);
    });
    out.insert(out.end(), found.begin(), found.end());
}

inline void require_complete(const Graph& g, const TotalLabeling& L) {
    if (L.vertex_slots() != g.vertex_count() || L.edge_slots() != g.edge_count())
        throw invalid_parameter_error("labeling does not belong to this graph");
    if (!L.complete())
        throw incomplete_labeling_error("element " + L.first_missing(g) + " has no label");
}

} // namespace detail

// True iff the labels are exactly {1,...,p+q} with no repeats. Witnesses:
// duplicated labels as element pairs, out-of-range labels as (e, e, label).
inline CheckResult check_bijective_total(const Graph& g, const TotalLabeling& L) {
    detail::require_complete(g, L);
    const std::int64_t total = g.element_count();
    std::map<std::int64_t, std::vector<std::string>> by_label;
    for (int i = 0; i < g.vertex_count(); ++i)
        by_label[L.vertex_label_at(i)].push_back(to_string(g.vertices()[i]));
    for (int i = 0; i < g.edge_count(); ++i)
        by_label[L.edge_label_at(i)].push_back(to_string(g.edges()[i]));

    CheckResult r;
    for (const auto& [label, elems] : by_label) {
        if (label > total)
            for (const auto& e : elems) r.witnesses.push_back({Property::BijectiveTotal, e, e, label});
        for (std::size_t a = 0; a + 1 < elems.size(); ++a)
            for (std::size_t b = a + 1; b < elems.size(); ++b)
                r.witnesses.push_back({Property::BijectiveTotal, elems[a], elems[b], label});
    }
    // complete + in range + duplicate-free covers exactly {1,...,p+q}
    r.ok = r.witnesses.empty();
    return r;
}

// True iff bijective and the vertex labels are exactly {1,...,p}.
inline bool check_super(const Graph& g, const TotalLabeling& L) {
    if (!check_bijective_total(g, L).ok) return false;
    for (int i = 0; i < g.vertex_count(); ++i)
        if (L.vertex_label_at(i) > g.vertex_count()) return false;
    return true;
}

inline CheckResult check_eat(const Graph& g, const TotalLabeling& L) {
    detail::require_complete(g, L);
    WeightProfile p = weight_profile(g, L);
    std::vector<Edge> elems = g.edges();
    std::sort(elems.begin(), elems.end());
    std::vector<std::int64_t> w;
    w.reserve(elems.size());
    for (const Edge& e : elems) w.push_back(p.edge_weight(g, e));
    CheckResult r;
    detail::collect_collisions(Property::Eat, w, elems, r.witnesses);
    r.ok = r.witnesses.empty();
    return r;
}

inline CheckResult check_vat(const Graph& g, const TotalLabeling& L) {
    detail::require_complete(g, L);
    WeightProfile p = weight_profile(g, L);
    CheckResult r;
    detail::collect_collisions(Property::Vat, p.vertex_weights, g.vertices(), r.witnesses);
    r.ok = r.witnesses.empty();
    return r;
}

// True iff within the subset, label order implies strict weight order.
inline CheckResult check_sharp_ordered(const Graph& g, const TotalLabeling& L,
                                       const std::vector<VertexId>& subset) {
    detail::require_complete(g, L);
    std::vector<VertexId> vs = subset;
    std::sort(vs.begin(), vs.end());
    for (VertexId v : vs) g.vertex_index(v); // throws for vertices outside the graph
    CheckResult r;
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            VertexId x = vs[a], y = vs[b];
            // orient by label
            if (L.vertex_label(g, y) < L.vertex_label(g, x)) std::swap(x, y);
            if (L.vertex_label(g, x) == L.vertex_label(g, y)) continue;
            if (vertex_weight(g, L, x) >= vertex_weight(g, L, y))
                r.witnesses.push_back({Property::SharpOrdered, to_string(x), to_string(y),
                                       vertex_weight(g, L, x)});
        }
    std::sort(r.witnesses.begin(), r.witnesses.end(), [](const Witness& x, const Witness& y) {
        return std::tie(x.element_a, x.element_b) < std::tie(y.element_a, y.element_b);
    });
    r.ok = r.witnesses.empty();
    return r;
}

// True iff every part of the partition is sharp ordered. The partition must
// cover V exactly, each vertex in exactly one part.
inline bool check_weak_ordered(const Graph& g, const TotalLabeling& L, const Partition& parts) {
    std::vector<VertexId> all;
    for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw invalid_parameter_error("partition repeats a vertex");
    std::vector<VertexId> verts = g.vertices();
    std::sort(verts.begin(), verts.end());
    if (all != verts)
        throw invalid_parameter_error("partition does not cover the vertex set exactly");
    for (const auto& part : parts)
        if (!check_sharp_ordered(g, L, part).ok) return false;
    return true;
}

// The ({u_i}, {v_i}) split, available for the two-rank families.
inline std::optional<Partition> canonical_partition(const Graph& g) {
    Partition parts(2);
    for (VertexId v : g.vertices()) {
        if (v.cls == VertexClass::U) parts[0].push_back(v);
        else if (v.cls == VertexClass::V) parts[1].push_back(v);
        else return std::nullopt;
    }
    if (parts[0].empty() || parts[1].empty()) return std::nullopt;
    return parts;
}

// Runs every check. When no partition is supplied and the graph has the
// canonical u/v split, that split is tried for weak-orderedness (pass
// try_canonical = false to skip the weak check entirely).
inline VerificationReport full_report(const Graph& g, const TotalLabeling& L,
                                      std::optional<Partition> partition = std::nullopt,
                                      bool try_canonical = true) {
    detail::require_complete(g, L);
    VerificationReport rep;
    rep.is_complete = true;

    CheckResult bij = check_bijective_total(g, L);
    rep.is_bijective_total = bij.ok;
    rep.witnesses.insert(rep.witnesses.end(), bij.witnesses.begin(), bij.witnesses.end());

    rep.is_super = check_super(g, L);
    if (!rep.is_super) {
        // witness: smallest vertex whose label falls outside {1,...,p}, or the
        // bijectivity conflict that already poisons super-ness
        bool emitted = false;
        for (int i = 0; i < g.vertex_count() && !emitted; ++i) {
            if (L.vertex_label_at(i) > g.vertex_count()) {
                std::vector<VertexId> vs = g.vertices();
                std::sort(vs.begin(), vs.end());
                for (VertexId v : vs) {
                    if (L.vertex_label(g, v) > g.vertex_count()) {
                        rep.witnesses.push_back({Property::Super, to_string(v), to_string(v),
                                                 L.vertex_label(g, v)});
                        emitted = true;
                        break;
                    }
                }
            }
        }
        if (!emitted && !bij.witnesses.empty()) {
            Witness w = bij.witnesses.front();
            w.property = Property::Super;
            rep.witnesses.push_back(w);
        }
    }

    CheckResult eat = check_eat(g, L);
    CheckResult vat = check_vat(g, L);
    rep.is_eat = eat.ok;
    rep.is_vat = vat.ok;
    rep.is_tat = eat.ok && vat.ok;
    rep.witnesses.insert(rep.witnesses.end(), eat.witnesses.begin(), eat.witnesses.end());
    rep.witnesses.insert(rep.witnesses.end(), vat.witnesses.begin(), vat.witnesses.end());

    CheckResult sharp = check_sharp_ordered(g, L, g.vertices());
    rep.sharp_ordered = sharp.ok;
    rep.witnesses.insert(rep.witnesses.end(), sharp.witnesses.begin(), sharp.witnesses.end());

    std::optional<Partition> parts = partition;
    if (!parts && try_canonical) parts = canonical_partition(g);
    if (parts) {
        rep.weak_ordered = check_weak_ordered(g, L, *parts);
        rep.weak_ordered_partition = std::move(parts);
    }
    return rep;
}

} // namespace tatforge
