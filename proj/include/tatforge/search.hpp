#pragma once

// Exact depth-first search for totally antimagic total labelings of small
// graphs. Labels {1,...,p+q} are assigned to elements in a fixed order;
// partial assignments are pruned the moment any weight closes on a value
// already taken in its class:
//   - an edge weight closes once the edge and both endpoints are labeled
//   - a vertex weight closes once the vertex and all incident edges are
//     labeled
// Everything is deterministic: no randomness, ties broken by the canonical
// element order of the graph.

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "tatforge/graph.hpp"
#include "tatforge/labeling.hpp"
#include "tatforge/verifier.hpp"

namespace tatforge {

enum class ElementOrder { DegreeDescending, InputOrder };

struct SearchOptions {
    bool require_super = false;
    bool require_bijective = true;
    std::int64_t node_budget = 50'000'000;
    ElementOrder element_order = ElementOrder::DegreeDescending;
    int workers = 1;
};

enum class SearchStatus { Found, ExhaustedNoSolution, BudgetExceeded };

inline std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "Found";
        case SearchStatus::ExhaustedNoSolution: return "ExhaustedNoSolution";
        default: return "BudgetExceeded";
    }
}

struct SearchOutcome {
    SearchStatus status;
    std::optional<TotalLabeling> labeling; // present iff Found, verifier-certified
    std::int64_t nodes_visited = 0;
};

namespace detail {

struct SearchPlan {
    // order[k] = element placed at depth k: vertex index, or ~edge index
    std::vector<int> order;
    // weights that close after placing depth k
    std::vector<std::vector<int>> close_edges, close_verts;
    std::vector<int> vertex_lo, vertex_hi, edge_lo, edge_hi; // label ranges by depth
    int total = 0;
};

inline bool plan_is_vertex(int slot) { return slot >= 0; }
inline int plan_edge(int slot) { return ~slot; }

inline SearchPlan make_plan(const Graph& g, const SearchOptions& opt) {
    const int p = g.vertex_count(), q = g.edge_count();
    SearchPlan plan;
    plan.total = p + q;
    std::vector<int> vpos(p, -1), epos(q, -1);

    auto place_vertex = [&](int v) {
        vpos[v] = static_cast<int>(plan.order.size());
        plan.order.push_back(v);
    };
    auto place_edge = [&](int e) {
        epos[e] = static_cast<int>(plan.order.size());
        plan.order.push_back(~e);
    };

    if (opt.element_order == ElementOrder::InputOrder) {
        for (int v = 0; v < p; ++v) place_vertex(v);
        for (int e = 0; e < q; ++e) place_edge(e);
    } else {
        // High-degree vertices first; an edge goes in as soon as both its
        // endpoints are placed, so edge weights close as early as possible.
        std::vector<int> verts(p);
        for (int v = 0; v < p; ++v) verts[v] = v;
        std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
            return g.degree_at(a) > g.degree_at(b);
        });
        for (int v : verts) {
            place_vertex(v);
            for (int e = 0; e < q; ++e) {
                if (epos[e] >= 0) continue;
                auto [a, b] = g.endpoints(e);
                if (vpos[a] >= 0 && vpos[b] >= 0) place_edge(e);
            }
        }
    }

    // closure depth = when the last participant is placed
    plan.close_edges.resize(plan.total);
    plan.close_verts.resize(plan.total);
    for (int e = 0; e < q; ++e) {
        auto [a, b] = g.endpoints(e);
        int k = std::max({epos[e], vpos[a], vpos[b]});
        plan.close_edges[k].push_back(e);
    }
    for (int v = 0; v < p; ++v) {
        int k = vpos[v];
        for (int e : g.incident_edges(v)) k = std::max(k, epos[e]);
        plan.close_verts[k].push_back(v);
    }

    plan.vertex_lo.assign(1, 1); // shared ranges, per element kind
    plan.vertex_hi.assign(1, opt.require_super ? p : plan.total);
    plan.edge_lo.assign(1, opt.require_super && opt.require_bijective ? p + 1 : 1);
    plan.edge_hi.assign(1, plan.total);
    return plan;
}

class Searcher {
public:
    Searcher(const Graph& g, const SearchOptions& opt, const SearchPlan& plan,
             std::atomic<std::int64_t>* shared_nodes, std::atomic<int>* best_first_label)
        : g_(g), opt_(opt), plan_(plan), shared_nodes_(shared_nodes),
          best_first_label_(best_first_label) {
        const int p = g.vertex_count(), q = g.edge_count();
        vlabel_.assign(p, 0);
        elabel_.assign(q, 0);
        used_.assign(plan.total + 1, false);
        edge_w_seen_.assign(3 * plan.total + 1, 0);
        int maxdeg = 0;
        for (int v = 0; v < p; ++v) maxdeg = std::max(maxdeg, g.degree_at(v));
        vert_w_seen_.assign((maxdeg + 1) * plan.total + 1, 0);
    }

    // Explore with the given labels allowed at depth 0 (ascending); empty
    // means the full range. Returns true when a solution was committed.
    bool run(const std::vector<int>& first_labels) {
        first_labels_ = &first_labels;
        found_ = exceeded_ = aborted_ = false;
        descend(0);
        return found_;
    }

    bool exceeded() const { return exceeded_; }
    bool aborted() const { return aborted_; }
    const std::vector<int>& vertex_labels() const { return vlabel_; }
    const std::vector<int>& edge_labels() const { return elabel_; }
    int first_label_of_solution() const { return solution_first_label_; }

private:
    bool charge_node() {
        std::int64_t n = shared_nodes_->fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > opt_.node_budget) {
            exceeded_ = true;
            return false;
        }
        if (best_first_label_ && (n & 1023) == 0 &&
            best_first_label_->load(std::memory_order_relaxed) < current_first_label_) {
            aborted_ = true;
            return false;
        }
        return true;
    }

    void descend(int depth) {
        if (depth == plan_.total) {
            found_ = true;
            solution_first_label_ = current_first_label_;
            return;
        }
        const int slot = plan_.order[depth];
        const bool isv = plan_is_vertex(slot);
        const int lo = isv ? plan_.vertex_lo[0] : plan_.edge_lo[0];
        const int hi = isv ? plan_.vertex_hi[0] : plan_.edge_hi[0];

        int fl_cursor = 0;
        for (int label = lo; label <= hi; ++label) {
            if (depth == 0 && !first_labels_->empty()) {
                // restricted root: advance through the allowed set
                while (fl_cursor < static_cast<int>(first_labels_->size()) &&
                       (*first_labels_)[fl_cursor] < label)
                    ++fl_cursor;
                if (fl_cursor >= static_cast<int>(first_labels_->size())) return;
                if ((*first_labels_)[fl_cursor] != label) continue;
            }
            if (opt_.require_bijective && used_[label]) continue;
            if (!charge_node()) return;
            if (depth == 0) current_first_label_ = label;

            if (isv) vlabel_[slot] = label;
            else elabel_[plan_edge(slot)] = label;
            if (opt_.require_bijective) used_[label] = true;

            if (apply_closures(depth)) {
                descend(depth + 1);
                if (found_) return; // labels stay frozen along the solution path
                undo_closures(depth, static_cast<int>(plan_.close_edges[depth].size()),
                              static_cast<int>(plan_.close_verts[depth].size()));
            }
            if (opt_.require_bijective) used_[label] = false;
            if (isv) vlabel_[slot] = 0;
            else elabel_[plan_edge(slot)] = 0;

            if (exceeded_ || aborted_) return;
        }
    }

    // Marks closing weights; on the first duplicate rolls back what was
    // applied and reports failure.
    bool apply_closures(int depth) {
        const auto& ce = plan_.close_edges[depth];
        const auto& cv = plan_.close_verts[depth];
        for (int i = 0; i < static_cast<int>(ce.size()); ++i) {
            int w = edge_weight_of(ce[i]);
            if (edge_w_seen_[w]) {
                undo_closures(depth, i, 0);
                return false;
            }
            edge_w_seen_[w] = 1;
        }
        for (int i = 0; i < static_cast<int>(cv.size()); ++i) {
            int w = vertex_weight_of(cv[i]);
            if (vert_w_seen_[w]) {
                undo_closures(depth, static_cast<int>(ce.size()), i);
                return false;
            }
            vert_w_seen_[w] = 1;
        }
        return true;
    }

    void undo_closures(int depth, int n_edges, int n_verts) {
        const auto& ce = plan_.close_edges[depth];
        const auto& cv = plan_.close_verts[depth];
        for (int i = 0; i < n_edges; ++i) edge_w_seen_[edge_weight_of(ce[i])] = 0;
        for (int i = 0; i < n_verts; ++i) vert_w_seen_[vertex_weight_of(cv[i])] = 0;
    }

    int edge_weight_of(int e) const {
        auto [a, b] = g_.endpoints(e);
        return vlabel_[a] + vlabel_[b] + elabel_[e];
    }
    int vertex_weight_of(int v) const {
        int w = vlabel_[v];
        for (int e : g_.incident_edges(v)) w += elabel_[e];
        return w;
    }

    const Graph& g_;
    const SearchOptions& opt_;
    const SearchPlan& plan_;
    std::atomic<std::int64_t>* shared_nodes_;
    std::atomic<int>* best_first_label_;
    const std::vector<int>* first_labels_ = nullptr;
    std::vector<int> vlabel_, elabel_;
    std::vector<char> used_;
    std::vector<char> edge_w_seen_, vert_w_seen_;
    bool found_ = false, exceeded_ = false, aborted_ = false;
    int current_first_label_ = 0;
    int solution_first_label_ = 0;
};

inline TotalLabeling to_labeling(const Graph& g, const std::vector<int>& vl,
                                 const std::vector<int>& el) {
    TotalLabeling L(g);
    for (int i = 0; i < g.vertex_count(); ++i) L.set_vertex_label_at(i, vl[i]);
    for (int i = 0; i < g.edge_count(); ++i) L.set_edge_label_at(i, el[i]);
    return L;
}

inline void certify_found(const Graph& g, const TotalLabeling& L, const SearchOptions& opt) {
    VerificationReport rep = full_report(g, L);
    bool ok = rep.is_tat && (!opt.require_super || rep.is_super) &&
              (!opt.require_bijective || rep.is_bijective_total);
    if (!ok) throw std::logic_error("search produced a labeling the verifier rejects");
}

} // namespace detail

inline SearchOutcome find_tat(const Graph& g, const SearchOptions& opt = {}) {
    if (g.vertex_count() == 0) throw invalid_parameter_error("search requires a nonempty graph");
    if (opt.node_budget <= 0) throw invalid_parameter_error("node budget must be positive");
    if (opt.workers < 1) throw invalid_parameter_error("workers must be >= 1");

    detail::SearchPlan plan = detail::make_plan(g, opt);
    std::atomic<std::int64_t> nodes{0};

    if (opt.workers == 1) {
        detail::Searcher s(g, opt, plan, &nodes, nullptr);
        std::vector<int> all; // unrestricted root
        bool found = s.run(all);
        SearchOutcome out;
        out.nodes_visited = std::min<std::int64_t>(nodes.load(), opt.node_budget);
        if (found) {
            out.status = SearchStatus::Found;
            out.labeling = detail::to_labeling(g, s.vertex_labels(), s.edge_labels());
            detail::certify_found(g, *out.labeling, opt);
        } else {
            out.status = s.exceeded() ? SearchStatus::BudgetExceeded
                                      : SearchStatus::ExhaustedNoSolution;
        }
        return out;
    }

    // Root-level split: worker w takes every workers-th label of the root
    // element, ascending. First Found in the lowest root subtree wins, so the
    // result matches the single-worker outcome; nodes_visited may not.
    const int slot = plan.order[0];
    const int lo = detail::plan_is_vertex(slot) ? plan.vertex_lo[0] : plan.edge_lo[0];
    const int hi = detail::plan_is_vertex(slot) ? plan.vertex_hi[0] : plan.edge_hi[0];
    std::vector<std::vector<int>> assignment(opt.workers);
    for (int label = lo, k = 0; label <= hi; ++label, ++k)
        assignment[k % opt.workers].push_back(label);

    std::atomic<int> best_first{INT32_MAX};
    struct WorkerResult {
        bool found = false, exceeded = false;
        int first_label = INT32_MAX;
        std::vector<int> vl, el;
    };
    std::vector<WorkerResult> results(opt.workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < opt.workers; ++w) {
        threads.emplace_back([&, w] {
            detail::Searcher s(g, opt, plan, &nodes, &best_first);
            if (s.run(assignment[w])) {
                WorkerResult& r = results[w];
                r.found = true;
                r.first_label = s.first_label_of_solution();
                r.vl = s.vertex_labels();
                r.el = s.edge_labels();
                int cur = best_first.load();
                while (r.first_label < cur &&
                       !best_first.compare_exchange_weak(cur, r.first_label)) {
                }
            } else {
                results[w].exceeded = s.exceeded();
            }
        });
    }
    for (auto& t : threads) t.join();

    SearchOutcome out;
    out.nodes_visited = std::min<std::int64_t>(nodes.load(), opt.node_budget);
    const WorkerResult* winner = nullptr;
    for (const auto& r : results)
        if (r.found && (!winner || r.first_label < winner->first_label)) winner = &r;
    if (winner) {
        out.status = SearchStatus::Found;
        out.labeling = detail::to_labeling(g, winner->vl, winner->el);
        detail::certify_found(g, *out.labeling, opt);
    } else {
        bool exceeded = false;
        for (const auto& r : results) exceeded = exceeded || r.exceeded;
        out.status = exceeded ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedNoSolution;
    }
    return out;
}

} // namespace tatforge
