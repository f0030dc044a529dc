#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: weights are recomputed by scanning the raw edge list, distinctness
// by quadratic pairwise comparison, existence questions by a plain
// permutation scan. Nothing here touches weight_profile, the verifier's
// bookkeeping, or the search pruning.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tatforge/graph.hpp"
#include "tatforge/labeling.hpp"

namespace oracle {

using tatforge::Edge;
using tatforge::Graph;
using tatforge::TotalLabeling;
using tatforge::VertexId;

inline std::vector<long long> naive_vertex_weights(const Graph& g, const TotalLabeling& L) {
    std::vector<long long> w;
    for (VertexId v : g.vertices()) {
        long long s = L.vertex_label(g, v);
        for (const Edge& e : g.edges())
            if (e.a == v || e.b == v) s += L.edge_label(g, e);
        w.push_back(s);
    }
    return w;
}

inline std::vector<long long> naive_edge_weights(const Graph& g, const TotalLabeling& L) {
    std::vector<long long> w;
    for (const Edge& e : g.edges())
        w.push_back(L.vertex_label(g, e.a) + L.vertex_label(g, e.b) + L.edge_label(g, e));
    return w;
}

inline bool all_distinct(const std::vector<long long>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j]) return false;
    return true;
}

// number of unordered colliding pairs in a multiset of weights
inline int collision_pair_count(const std::vector<long long>& w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j]) ++count;
    return count;
}

struct NaiveFlags {
    bool bijective, super, eat, vat, sharp;
};

inline NaiveFlags naive_flags(const Graph& g, const TotalLabeling& L) {
    NaiveFlags f{};
    std::vector<long long> labels;
    for (VertexId v : g.vertices()) labels.push_back(L.vertex_label(g, v));
    for (const Edge& e : g.edges()) labels.push_back(L.edge_label(g, e));
    std::vector<long long> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    f.bijective = true;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<long long>(i) + 1) f.bijective = false;
    f.super = f.bijective;
    for (VertexId v : g.vertices())
        if (L.vertex_label(g, v) > g.vertex_count()) f.super = false;
    f.eat = all_distinct(naive_edge_weights(g, L));
    f.vat = all_distinct(naive_vertex_weights(g, L));
    f.sharp = true;
    std::vector<long long> vw = naive_vertex_weights(g, L);
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = 0; j < g.vertex_count(); ++j) {
            if (i == j) continue;
            VertexId a = g.vertices()[i], b = g.vertices()[j];
            if (L.vertex_label(g, a) < L.vertex_label(g, b) && vw[i] >= vw[j]) f.sharp = false;
        }
    return f;
}

// Scans every assignment of {1,...,p+q} to (vertices, then edges); returns
// true when some assignment has all edge weights distinct and all vertex
// weights distinct (and, when asked, vertex labels within {1..p}).
// Only sensible for p+q <= 8 or so.
inline bool brute_force_tat_exists(const Graph& g, bool require_super) {
    const int p = g.vertex_count(), q = g.edge_count(), total = p + q;
    std::vector<int> perm(total);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        if (require_super)
            for (int i = 0; i < p && ok; ++i)
                if (perm[i] > p) ok = false;
        if (!ok) continue;
        TotalLabeling L(g);
        for (int i = 0; i < p; ++i) L.set_vertex_label_at(i, perm[i]);
        for (int i = 0; i < q; ++i) L.set_edge_label_at(i, perm[p + i]);
        if (all_distinct(naive_edge_weights(g, L)) && all_distinct(naive_vertex_weights(g, L)))
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Unlabeled-graph isomorphism by backtracking over degree-compatible maps.
inline bool isomorphic(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<std::vector<bool>> adj_a(n, std::vector<bool>(n, false)),
        adj_b(n, std::vector<bool>(n, false));
    for (const Edge& e : a.edges())
        adj_a[a.vertex_index(e.a)][a.vertex_index(e.b)] =
            adj_a[a.vertex_index(e.b)][a.vertex_index(e.a)] = true;
    for (const Edge& e : b.edges())
        adj_b[b.vertex_index(e.a)][b.vertex_index(e.b)] =
            adj_b[b.vertex_index(e.b)][b.vertex_index(e.a)] = true;
    std::vector<int> deg_a(n, 0), deg_b(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (adj_a[i][j]) ++deg_a[i];
            if (adj_b[i][j]) ++deg_b[i];
        }
    {
        std::vector<int> sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> taken(n, false);
    auto backtrack = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int t = 0; t < n; ++t) {
            if (taken[t] || deg_a[i] != deg_b[t]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (adj_a[i][j] != adj_b[t][map[j]]) ok = false;
            if (!ok) continue;
            map[i] = t;
            taken[t] = true;
            if (self(self, i + 1)) return true;
            taken[t] = false;
            map[i] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

// Generic cartesian product of a path/cycle with P_2, built from the product
// definition itself; cross-checks the family generators.
inline Graph product_with_p2(int n, bool cyclic) {
    using tatforge::plain_vertex;
    std::vector<VertexId> verts;
    for (int i = 1; i <= 2 * n; ++i) verts.push_back(plain_vertex(i));
    auto id = [n](int i, int j) { return plain_vertex((j - 1) * n + i); };
    std::vector<Edge> edges;
    for (int j = 1; j <= 2; ++j) {
        for (int i = 1; i < n; ++i) edges.emplace_back(id(i, j), id(i + 1, j));
        if (cyclic) edges.emplace_back(id(n, j), id(1, j));
    }
    for (int i = 1; i <= n; ++i) edges.emplace_back(id(i, 1), id(i, 2));
    return Graph(std::move(verts), std::move(edges));
}

} // namespace oracle
