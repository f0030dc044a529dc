#pragma once

// Closed-form total labelings for ladders, prisms and generalized Petersen
// graphs. Each constructor evaluates a fixed piecewise label table; where the
// base table is ill-defined it applies an enumerated repair and says so in
// the result. Constructors never judge antimagic-ness themselves — every
// output goes to the verifier, construction and verification stay separate.

#include <string>
#include <vector>

#include "tatforge/graph.hpp"
#include "tatforge/labeling.hpp"

namespace tatforge {

enum class SchemeKind { Ladder, Prism, Petersen };

inline std::string to_string(SchemeKind k) {
    switch (k) {
        case SchemeKind::Ladder: return "ladder";
        case SchemeKind::Prism: return "prism";
        default: return "petersen";
    }
}

// Fixed repair ledger. Every repair a scheme applies is listed in its result;
// the set per family never varies.
//   LAD-RUNG-RANGE  ladder rung upper branch extended from i <= n-1 to i <= n
//                   (the last rung otherwise has no label)
//   PRI-RUNG-INDEX  prism rung branch 2 <= i <= floor(n/2)+1 read as
//                   2(2n-i)+3; the constant reading 2(2n-1)+3 collides with
//                   the v-cycle labels
//   GP-VLABEL       petersen inner vertices set to g(v_i) = n+1+i for i < n
//                   and g(v_n) = n+1, the unique super assignment consistent
//                   with the scheme's spoke weights
inline constexpr const char* kRepairLadderRungRange = "LAD-RUNG-RANGE";
inline constexpr const char* kRepairPrismRungIndex = "PRI-RUNG-INDEX";
inline constexpr const char* kRepairPetersenVLabel = "GP-VLABEL";

struct SchemeResult {
    Graph graph;
    TotalLabeling labeling;
    SchemeKind source;
    std::vector<std::string> repairs_applied;
};

namespace detail {
inline int ceil_half(int n) { return (n + 1) / 2; }
inline int floor_half(int n) { return n / 2; }
} // namespace detail

// Ladder on 2n vertices. Label table (c = ceil(n/2), f = floor(n/2)):
//   u_i        : 2i-1            for i <= c,   2(n-i+1)   for i > c
//   v_i        : n+2i-1          for i <= c,   3n+2(1-i)  for i > c
//   rung u_iv_i: 2(n+i)-1        for i <= c,   2(2n-i+1)  for i > c   [LAD-RUNG-RANGE]
//   u_iu_{i+1} : 3n+2i-1         for i <= f,   5n-2i      for i > f
//   v_iv_{i+1} : 2(2n+i-1)       for i <= f,   2(3n-i)-1  for i > f
// Labels form a bijection onto {1,...,5n-2} with vertices on {1,...,2n}.
inline SchemeResult ladder_labeling(int n) {
    Graph g = build_ladder(n); // validates n >= 2
    TotalLabeling L(g);
    const int c = detail::ceil_half(n), f = detail::floor_half(n);
    for (int i = 1; i <= n; ++i) {
        L.set_vertex_label(g, u_vertex(i), i <= c ? 2 * i - 1 : 2 * (n - i + 1));
        L.set_vertex_label(g, v_vertex(i), i <= c ? n + 2 * i - 1 : 3 * n + 2 * (1 - i));
    }
    for (int i = 1; i <= n; ++i) {
        Edge rung(u_vertex(i), v_vertex(i));
        L.set_edge_label(g, rung, i <= c ? 2 * (n + i) - 1 : 2 * (2 * n - i + 1));
    }
    for (int i = 1; i < n; ++i) {
        L.set_edge_label(g, Edge(u_vertex(i), u_vertex(i + 1)),
                         i <= f ? 3 * n + 2 * i - 1 : 5 * n - 2 * i);
        L.set_edge_label(g, Edge(v_vertex(i), v_vertex(i + 1)),
                         i <= f ? 2 * (2 * n + i - 1) : 2 * (3 * n - i) - 1);
    }
    return {std::move(g), std::move(L), SchemeKind::Ladder, {kRepairLadderRungRange}};
}

// Prism on 2n vertices. Label table (c = ceil(n/2), f = floor(n/2)):
//   u_1 = 1, v_1 = n+1
//   u_i        : 2(i-1)     for 2 <= i <= f+1,  2(n-i)+3   for i > f+1
//   v_i        : n+2(i-1)   for 2 <= i <= f+1,  3(n+1)-2i  for i > f+1
//   u_iu_{i+1} : 2(n+i)-1   for i <= c,         2(2n+1-i)  for i > c
//   v_iv_{i+1} : 2(2n+i)-1  for i <= c,         2(3n-i+1)  for i > c
//   rung u_1v_1 = 4n
//   rung u_iv_i: 2(2n-i)+3  for 2 <= i <= f+1,  2(n-1+i)   for i > f+1   [PRI-RUNG-INDEX]
// Labels form a bijection onto {1,...,5n} with vertices on {1,...,2n}.
inline SchemeResult prism_labeling(int n) {
    Graph g = build_prism(n); // validates n >= 3
    TotalLabeling L(g);
    const int c = detail::ceil_half(n), f = detail::floor_half(n);
    L.set_vertex_label(g, u_vertex(1), 1);
    L.set_vertex_label(g, v_vertex(1), n + 1);
    for (int i = 2; i <= n; ++i) {
        L.set_vertex_label(g, u_vertex(i), i <= f + 1 ? 2 * (i - 1) : 2 * (n - i) + 3);
        L.set_vertex_label(g, v_vertex(i), i <= f + 1 ? n + 2 * (i - 1) : 3 * (n + 1) - 2 * i);
    }
    for (int i = 1; i <= n; ++i) {
        int j = detail::mod_index(i + 1, n);
        L.set_edge_label(g, Edge(u_vertex(i), u_vertex(j)),
                         i <= c ? 2 * (n + i) - 1 : 2 * (2 * n + 1 - i));
        L.set_edge_label(g, Edge(v_vertex(i), v_vertex(j)),
                         i <= c ? 2 * (2 * n + i) - 1 : 2 * (3 * n - i + 1));
    }
    L.set_edge_label(g, Edge(u_vertex(1), v_vertex(1)), 4 * n);
    for (int i = 2; i <= n; ++i) {
        L.set_edge_label(g, Edge(u_vertex(i), v_vertex(i)),
                         i <= f + 1 ? 2 * (2 * n - i) + 3 : 2 * (n - 1 + i));
    }
    return {std::move(g), std::move(L), SchemeKind::Prism, {kRepairPrismRungIndex}};
}

// Generalized Petersen P(n,m). Label table:
//   u_i              : i
//   v_i              : n+1+i for i <= n-1,  n+1 for i = n   [GP-VLABEL]
//   outer u_iu_{i+1} : 3n-(i-1)
//   spoke u_iv_i     : 3n+1 for i = 1,  4n-(i-2) for i >= 2
//   inner v_iv_{i+m} : 5n-(i-1)
// Labels form a bijection onto {1,...,5n} with vertices on {1,...,2n}.
inline SchemeResult petersen_labeling(int n, int m) {
    Graph g = build_petersen(n, m); // validates n, m ranges
    TotalLabeling L(g);
    for (int i = 1; i <= n; ++i) {
        L.set_vertex_label(g, u_vertex(i), i);
        L.set_vertex_label(g, v_vertex(i), i <= n - 1 ? n + 1 + i : n + 1);
    }
    for (int i = 1; i <= n; ++i) {
        L.set_edge_label(g, Edge(u_vertex(i), u_vertex(detail::mod_index(i + 1, n))),
                         3 * n - (i - 1));
        L.set_edge_label(g, Edge(u_vertex(i), v_vertex(i)),
                         i == 1 ? 3 * n + 1 : 4 * n - (i - 2));
        L.set_edge_label(g, Edge(v_vertex(i), v_vertex(detail::mod_index(i + m, n))),
                         5 * n - (i - 1));
    }
    return {std::move(g), std::move(L), SchemeKind::Petersen, {kRepairPetersenVLabel}};
}

} // namespace tatforge
