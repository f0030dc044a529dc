#pragma once

// Exhaustive tree corpus at desk scale: all labeled trees on n vertices via
// Pruefer sequences, reduced to non-isomorphic representatives by AHU
// canonical form (rooted at the tree center). Feeds the search harness.

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "tatforge/graph.hpp"
#include "tatforge/search.hpp"

namespace tatforge {

namespace detail {

// Decodes a Pruefer sequence over {1..n} into the n-1 edges of its tree.
inline std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n + 1, 1);
    for (int x : seq) ++degree[x];
    std::vector<bool> done(n + 1, false);
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
        for (int leaf = 1; leaf <= n; ++leaf) {
            if (!done[leaf] && degree[leaf] == 1) {
                edges.emplace_back(leaf, x);
                done[leaf] = true;
                --degree[x];
                break;
            }
        }
    }
    int u = 0, v = 0;
    for (int i = 1; i <= n; ++i) {
        if (!done[i]) {
            if (u == 0) u = i;
            else v = i;
        }
    }
    edges.emplace_back(u, v);
    return edges;
}

inline std::string ahu_encode(int root, int parent,
                              const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> subs;
    for (int c : adj[root])
        if (c != parent) subs.push_back(ahu_encode(c, root, adj));
    std::sort(subs.begin(), subs.end());
    std::string s = "(";
    for (const auto& t : subs) s += t;
    s += ")";
    return s;
}

// Canonical form: AHU string rooted at the center; bicentral trees take the
// lexicographically smaller of the two rooted encodings.
inline std::string tree_canonical_form(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> degree(n + 1, 0);
    for (int i = 1; i <= n; ++i) degree[i] = static_cast<int>(adj[i].size());
    std::vector<int> layer;
    std::vector<bool> removed(n + 1, false);
    for (int i = 1; i <= n; ++i)
        if (degree[i] <= 1) layer.push_back(i);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int x : layer) {
            removed[x] = true;
            --remaining;
            for (int y : adj[x]) {
                if (!removed[y] && --degree[y] == 1) next.push_back(y);
            }
        }
        layer = std::move(next);
    }
    std::string best;
    for (int i = 1; i <= n; ++i) {
        if (removed[i]) continue;
        std::string s = ahu_encode(i, 0, adj);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

inline Graph tree_to_graph(int n, const std::vector<std::pair<int, int>>& edge_pairs) {
    std::vector<VertexId> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(plain_vertex(i));
    std::vector<Edge> edges;
    for (auto [a, b] : edge_pairs) edges.emplace_back(plain_vertex(a), plain_vertex(b));
    std::sort(edges.begin(), edges.end());
    return Graph(std::move(verts), std::move(edges), {FamilyTag::Kind::Custom, 0, 0});
}

} // namespace detail

// All pairwise non-isomorphic trees on n vertices (2 <= n <= 8), ordered by
// canonical form so the list is stable across runs and generator details.
inline std::vector<Graph> enumerate_trees(int n) {
    if (n < 2 || n > 8) throw invalid_parameter_error("tree enumeration supports 2 <= n <= 8");
    std::map<std::string, Graph> reps;
    if (n == 2) {
        std::vector<std::pair<int, int>> edges{{1, 2}};
        reps.emplace(detail::tree_canonical_form(n, edges), detail::tree_to_graph(n, edges));
    } else {
        std::vector<int> seq(n - 2, 1);
        while (true) {
            auto edges = detail::pruefer_decode(seq, n);
            std::string canon = detail::tree_canonical_form(n, edges);
            if (!reps.count(canon)) reps.emplace(canon, detail::tree_to_graph(n, edges));
            int k = n - 3;
            while (k >= 0 && seq[k] == n) {
                seq[k] = 1;
                --k;
            }
            if (k < 0) break;
            ++seq[k];
        }
    }
    std::vector<Graph> out;
    for (auto& [canon, g] : reps) out.push_back(std::move(g));
    return out;
}

struct HarnessRow {
    int tree_id;  // 1-based within its n
    int n;
    SearchStatus status;
    std::int64_t nodes_visited;
};

// Runs the search on every tree with up to max_n vertices. Defaults ask for a
// bijective, not necessarily super, labeling.
inline std::vector<HarnessRow> conjecture_harness(int max_n, SearchOptions opts = {}) {
    if (max_n < 2 || max_n > 8) throw invalid_parameter_error("harness supports 2 <= max_n <= 8");
    std::vector<HarnessRow> rows;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Graph> trees = enumerate_trees(n);
        for (int i = 0; i < static_cast<int>(trees.size()); ++i) {
            SearchOutcome out = find_tat(trees[i], opts);
            rows.push_back({i + 1, n, out.status, out.nodes_visited});
        }
    }
    return rows;
}

inline void write_harness_csv(std::ostream& os, const std::vector<HarnessRow>& rows) {
    os << "tree_id,n,status,nodes_visited\n";
    for (const auto& r : rows)
        os << r.tree_id << ',' << r.n << ',' << to_string(r.status) << ',' << r.nodes_visited
           << '\n';
}

} // namespace tatforge
