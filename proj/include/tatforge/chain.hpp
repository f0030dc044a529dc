#pragma once

// Concatenation of labeled blocks into a chain graph. Consecutive blocks are
// merged at one cut vertex: the vertex labeled 1 in block i is identified
// with the vertex labeled p in block i+1 (p = that block's own vertex count;
// blocks of unequal order are accepted). Label shifts for block i >= 2:
//   vertex labels += sum of (|V_j|+|E_j|) over j < i, minus (i-2)
//   edge labels   += the same sum, minus (i-1)
// The merged vertex keeps the shifted label of the earlier block's 1-vertex;
// the later block's p-vertex contributes no label of its own. The output is
// complete but makes no bijectivity promise; judging it is the verifier's
// job, never this module's.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tatforge/graph.hpp"
#include "tatforge/labeling.hpp"
#include "tatforge/verifier.hpp"

namespace tatforge {

struct ChainBlock {
    Graph graph;
    TotalLabeling labeling;
};

struct ChainResult {
    Graph graph;         // Plain vertices 1..N in block order, family tag Chain
    TotalLabeling labeling;
    std::vector<VertexId> cut_vertices;              // one per adjacent block pair
    std::vector<std::vector<VertexId>> vertex_map;   // block -> (vertex index -> output id)
    std::vector<std::int64_t> vertex_offsets, edge_offsets; // per block
};

namespace detail {

// Canonical index of the vertex carrying the given label; blocks are
// validated super bijective first, so this is total and unique.
inline int vertex_with_label(const Graph& g, const TotalLabeling& L, std::int64_t label) {
    for (int i = 0; i < g.vertex_count(); ++i)
        if (L.vertex_label_at(i) == label) return i;
    throw invalid_parameter_error("no vertex labeled " + std::to_string(label));
}

} // namespace detail

inline ChainResult chain_compose(const std::vector<ChainBlock>& blocks) {
    if (blocks.empty()) throw invalid_parameter_error("chain requires at least one block");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (!check_super(blocks[i].graph, blocks[i].labeling))
            throw invalid_parameter_error("chain block " + std::to_string(i + 1) +
                                          " is not labeled super bijectively");
    }

    const int m = static_cast<int>(blocks.size());

    // offsets from cumulative element counts
    std::vector<std::int64_t> vertex_offsets, edge_offsets;
    std::int64_t running = 0;
    for (int i = 1; i <= m; ++i) {
        vertex_offsets.push_back(i == 1 ? 0 : running - (i - 2));
        edge_offsets.push_back(i == 1 ? 0 : running - (i - 1));
        running += blocks[i - 1].graph.element_count();
    }

    std::vector<VertexId> out_verts;
    std::vector<Edge> out_edges;
    std::vector<std::int64_t> out_vlabels, out_elabels;
    std::vector<std::vector<VertexId>> vertex_map(m);
    std::vector<VertexId> cut_vertices;

    int next_id = 1;
    int anchor_out = -1; // output index of the previous block's 1-vertex
    for (int bi = 0; bi < m; ++bi) {
        const Graph& bg = blocks[bi].graph;
        const TotalLabeling& bl = blocks[bi].labeling;
        const std::int64_t voff = vertex_offsets[bi], eoff = edge_offsets[bi];

        int merge_src = -1; // block vertex merging into the previous anchor
        if (bi > 0) merge_src = detail::vertex_with_label(bg, bl, bg.vertex_count());

        std::vector<int> to_out(bg.vertex_count(), -1);
        auto& ids = vertex_map[bi];
        ids.resize(bg.vertex_count());
        for (int v = 0; v < bg.vertex_count(); ++v) {
            if (v == merge_src) {
                to_out[v] = anchor_out; // keeps the earlier block's label
            } else {
                to_out[v] = static_cast<int>(out_verts.size());
                out_verts.push_back(plain_vertex(next_id++));
                out_vlabels.push_back(bl.vertex_label_at(v) + voff);
            }
            ids[v] = out_verts[to_out[v]];
        }
        for (int e = 0; e < bg.edge_count(); ++e) {
            auto [a, b] = bg.endpoints(e);
            out_edges.emplace_back(out_verts[to_out[a]], out_verts[to_out[b]]);
            out_elabels.push_back(bl.edge_label_at(e) + eoff);
        }
        if (bi + 1 < m) {
            int one = detail::vertex_with_label(bg, bl, 1);
            anchor_out = to_out[one];
            cut_vertices.push_back(out_verts[anchor_out]);
        }
    }

    Graph out(std::move(out_verts), std::move(out_edges), {FamilyTag::Kind::Chain, 0, 0});
    TotalLabeling L(out);
    for (int i = 0; i < out.vertex_count(); ++i) L.set_vertex_label_at(i, out_vlabels[i]);
    for (int i = 0; i < out.edge_count(); ++i) L.set_edge_label_at(i, out_elabels[i]);
    return {std::move(out), std::move(L), std::move(cut_vertices), std::move(vertex_map),
            std::move(vertex_offsets), std::move(edge_offsets)};
}

// A fixed labeling of the path on n vertices that is super bijective and
// totally antimagic for every n >= 2, with label 1 and label n on the two
// endpoints (so path chains stay paths): vertex i gets i, edge (i, i+1) gets
// 2n - i. Edge weights 2n+i+1 rise; vertex weights 2n, 2n+1, then 4n+1-i.
inline ChainBlock path_block(int n) {
    Graph g = build_path(n); // validates n >= 2
    TotalLabeling L(g);
    for (int i = 1; i <= n; ++i) L.set_vertex_label(g, plain_vertex(i), i);
    for (int i = 1; i < n; ++i)
        L.set_edge_label(g, Edge(plain_vertex(i), plain_vertex(i + 1)), 2 * n - i);
    return {std::move(g), std::move(L)};
}

inline ChainResult chain_paths(const std::vector<int>& lengths) {
    if (lengths.empty()) throw invalid_parameter_error("chain requires at least one block");
    std::vector<ChainBlock> blocks;
    blocks.reserve(lengths.size());
    for (int len : lengths) blocks.push_back(path_block(len));
    return chain_compose(blocks);
}

} // namespace tatforge
