#pragma once

// Total labelings (every vertex and every edge carries a positive integer)
// and the weight computations everything else is judged by:
//   weight of edge uv   = label(u) + label(v) + label(uv)
//   weight of vertex v  = label(v) + sum of labels of incident edges
// All weight arithmetic is 64-bit and overflow-checked; overflow throws.

#include <cstdint>
#include <vector>

#include "tatforge/errors.hpp"
#include "tatforge/graph.hpp"

namespace tatforge {

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("weight arithmetic overflow");
    return r;
}
} // namespace detail

// Labels stored per canonical vertex/edge index of the companion graph;
// 0 marks an unset slot. Completeness is checked, not assumed: partially
// built labelings are representable, weight queries on unset slots throw.
class TotalLabeling {
public:
    explicit TotalLabeling(const Graph& g)
        : vlabels_(g.vertex_count(), 0), elabels_(g.edge_count(), 0) {}

    int vertex_slots() const { return static_cast<int>(vlabels_.size()); }
    int edge_slots() const { return static_cast<int>(elabels_.size()); }

    void set_vertex_label_at(int i, std::int64_t label) {
        check_label(label);
        vlabels_.at(i) = label;
    }
    void set_edge_label_at(int i, std::int64_t label) {
        check_label(label);
        elabels_.at(i) = label;
    }
    void set_vertex_label(const Graph& g, VertexId v, std::int64_t label) {
        set_vertex_label_at(g.vertex_index(v), label);
    }
    void set_edge_label(const Graph& g, const Edge& e, std::int64_t label) {
        set_edge_label_at(g.edge_index(e), label);
    }

    bool has_vertex_label_at(int i) const { return vlabels_.at(i) != 0; }
    bool has_edge_label_at(int i) const { return elabels_.at(i) != 0; }

    std::int64_t vertex_label_at(int i) const {
        std::int64_t l = vlabels_.at(i);
        if (l == 0)
            throw incomplete_labeling_error("vertex slot " + std::to_string(i) + " has no label");
        return l;
    }
    std::int64_t edge_label_at(int i) const {
        std::int64_t l = elabels_.at(i);
        if (l == 0)
            throw incomplete_labeling_error("edge slot " + std::to_string(i) + " has no label");
        return l;
    }
    std::int64_t vertex_label(const Graph& g, VertexId v) const {
        std::int64_t l = vlabels_.at(g.vertex_index(v));
        if (l == 0)
            throw incomplete_labeling_error("vertex " + to_string(v) + " has no label");
        return l;
    }
    std::int64_t edge_label(const Graph& g, const Edge& e) const {
        std::int64_t l = elabels_.at(g.edge_index(e));
        if (l == 0)
            throw incomplete_labeling_error("edge " + to_string(e) + " has no label");
        return l;
    }

    bool complete() const {
        for (auto l : vlabels_)
            if (l == 0) return false;
        for (auto l : elabels_)
            if (l == 0) return false;
        return true;
    }

    // First unset element name, for diagnostics. Empty when complete.
    std::string first_missing(const Graph& g) const {
        for (int i = 0; i < static_cast<int>(vlabels_.size()); ++i)
            if (vlabels_[i] == 0) return to_string(g.vertices()[i]);
        for (int i = 0; i < static_cast<int>(elabels_.size()); ++i)
            if (elabels_[i] == 0) return to_string(g.edges()[i]);
        return {};
    }

    bool operator==(const TotalLabeling& other) const {
        return vlabels_ == other.vlabels_ && elabels_ == other.elabels_;
    }

private:
    static void check_label(std::int64_t label) {
        if (label < 1)
            throw invalid_parameter_error("labels must be positive integers");
    }
    std::vector<std::int64_t> vlabels_, elabels_;
};

inline std::int64_t edge_weight(const Graph& g, const TotalLabeling& L, const Edge& e) {
    int i = g.edge_index(e);
    auto [ia, ib] = g.endpoints(i);
    std::int64_t w = detail::checked_add(L.vertex_label_at(ia), L.vertex_label_at(ib));
    return detail::checked_add(w, L.edge_label_at(i));
}

inline std::int64_t vertex_weight(const Graph& g, const TotalLabeling& L, VertexId v) {
    int i = g.vertex_index(v);
    std::int64_t w = L.vertex_label_at(i);
    for (int e : g.incident_edges(i)) w = detail::checked_add(w, L.edge_label_at(e));
    return w;
}

struct WeightProfile {
    std::vector<std::int64_t> vertex_weights; // by canonical vertex index
    std::vector<std::int64_t> edge_weights;   // by canonical edge index

    std::int64_t vertex_weight(const Graph& g, VertexId v) const {
        return vertex_weights.at(g.vertex_index(v));
    }
    std::int64_t edge_weight(const Graph& g, const Edge& e) const {
        return edge_weights.at(g.edge_index(e));
    }
};

// Always recomputed from scratch; incremental bookkeeping is the search
// module's own business.
inline WeightProfile weight_profile(const Graph& g, const TotalLabeling& L) {
    WeightProfile p;
    p.vertex_weights.reserve(g.vertex_count());
    p.edge_weights.reserve(g.edge_count());
    for (int i = 0; i < g.vertex_count(); ++i) {
        std::int64_t w = L.vertex_label_at(i);
        for (int e : g.incident_edges(i)) w = detail::checked_add(w, L.edge_label_at(e));
        p.vertex_weights.push_back(w);
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [ia, ib] = g.endpoints(i);
        std::int64_t w = detail::checked_add(L.vertex_label_at(ia), L.vertex_label_at(ib));
        p.edge_weights.push_back(detail::checked_add(w, L.edge_label_at(i)));
    }
    return p;
}

} // namespace tatforge
