#include <catch_amalgamated.hpp>

#include <random>

#include "support/oracle.hpp"
#include "tatforge/schemes.hpp"
#include "tatforge/verifier.hpp"

using namespace tatforge;

namespace {

TotalLabeling sequential_labeling(const Graph& g) {
    TotalLabeling L(g);
    int next = 1;
    for (int i = 0; i < g.vertex_count(); ++i) L.set_vertex_label_at(i, next++);
    for (int i = 0; i < g.edge_count(); ++i) L.set_edge_label_at(i, next++);
    return L;
}

} // namespace

TEST_CASE("bijectivity check") {
    SchemeResult lad = ladder_labeling(3);
    REQUIRE(check_bijective_total(lad.graph, lad.labeling).ok); // labels are {1..13}

    Graph g = build_path(3);
    TotalLabeling dup(g);
    dup.set_vertex_label(g, plain_vertex(1), 7);
    dup.set_vertex_label(g, plain_vertex(2), 1);
    dup.set_vertex_label(g, plain_vertex(3), 2);
    dup.set_edge_label(g, Edge(plain_vertex(1), plain_vertex(2)), 7);
    dup.set_edge_label(g, Edge(plain_vertex(2), plain_vertex(3)), 3);
    CheckResult r = check_bijective_total(g, dup);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.witnesses.size() >= 1);
    bool saw_pair = false;
    for (const Witness& w : r.witnesses)
        if (w.element_a == "1" && w.element_b == "1-2" && w.weight == 7) saw_pair = true;
    REQUIRE(saw_pair);

    // shifted range {2..p+q+1}: complete, distinct, but not a bijection
    TotalLabeling shifted(g);
    int next = 2;
    for (int i = 0; i < g.vertex_count(); ++i) shifted.set_vertex_label_at(i, next++);
    for (int i = 0; i < g.edge_count(); ++i) shifted.set_edge_label_at(i, next++);
    REQUIRE_FALSE(check_bijective_total(g, shifted).ok);
}

TEST_CASE("super check") {
    SchemeResult pri = prism_labeling(4);
    REQUIRE(check_super(pri.graph, pri.labeling)); // vertices {1..8}

    SchemeResult pet = petersen_labeling(5, 2);
    REQUIRE(check_super(pet.graph, pet.labeling));

    // swap a vertex label p with an edge label p+1: still bijective, not super
    Graph g = build_path(3);
    TotalLabeling L(g);
    L.set_vertex_label(g, plain_vertex(1), 1);
    L.set_vertex_label(g, plain_vertex(2), 2);
    L.set_vertex_label(g, plain_vertex(3), 4);
    L.set_edge_label(g, Edge(plain_vertex(1), plain_vertex(2)), 3);
    L.set_edge_label(g, Edge(plain_vertex(2), plain_vertex(3)), 5);
    REQUIRE(check_bijective_total(g, L).ok);
    REQUIRE_FALSE(check_super(g, L));
}

TEST_CASE("edge antimagic check") {
    SchemeResult lad = ladder_labeling(3);
    CheckResult r = check_eat(lad.graph, lad.labeling);
    REQUIRE(r.ok);
    WeightProfile p = weight_profile(lad.graph, lad.labeling);
    std::vector<std::int64_t> expect{14, 16, 22, 24, 12, 18, 15}; // graph edge order
    REQUIRE(p.edge_weights == expect);

    // single edge: vacuously distinct
    Graph e1 = build_path(2);
    TotalLabeling L(e1);
    L.set_vertex_label_at(0, 5);
    L.set_vertex_label_at(1, 5);
    L.set_edge_label_at(0, 9);
    REQUIRE(check_eat(e1, L).ok);

    SchemeResult pet = petersen_labeling(6, 2);
    REQUIRE(check_eat(pet.graph, pet.labeling).ok);
}

TEST_CASE("vertex antimagic check") {
    SchemeResult pri = prism_labeling(3);
    REQUIRE(check_vat(pri.graph, pri.labeling).ok);

    SchemeResult pet = petersen_labeling(6, 2);
    CheckResult r = check_vat(pet.graph, pet.labeling);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.witnesses.size() == 1);
    REQUIRE(r.witnesses[0].element_a == "v2");
    REQUIRE(r.witnesses[0].element_b == "v5");
    REQUIRE(r.witnesses[0].weight == 87);
}

TEST_CASE("witness lists are complete and deterministic") {
    // three vertices sharing one weight yield all three unordered pairs
    Graph g({plain_vertex(1), plain_vertex(2), plain_vertex(3)}, {});
    TotalLabeling L(g);
    L.set_vertex_label_at(0, 4);
    L.set_vertex_label_at(1, 4);
    L.set_vertex_label_at(2, 4);
    CheckResult r = check_vat(g, L);
    REQUIRE_FALSE(r.ok);
    REQUIRE(static_cast<int>(r.witnesses.size()) ==
            oracle::collision_pair_count(oracle::naive_vertex_weights(g, L)));
    REQUIRE(r.witnesses.size() == 3);
    REQUIRE(r.witnesses[0].element_a == "1");
    REQUIRE(r.witnesses[0].element_b == "2");
    REQUIRE(r.witnesses[1].element_a == "1");
    REQUIRE(r.witnesses[1].element_b == "3");
    REQUIRE(r.witnesses[2].element_a == "2");
    REQUIRE(r.witnesses[2].element_b == "3");
}

TEST_CASE("sharp order over the ladder parts") {
    SchemeResult lad = ladder_labeling(3);
    std::vector<VertexId> us{u_vertex(1), u_vertex(2), u_vertex(3)};
    std::vector<VertexId> vs{v_vertex(1), v_vertex(2), v_vertex(3)};
    REQUIRE(check_sharp_ordered(lad.graph, lad.labeling, us).ok);
    REQUIRE(check_sharp_ordered(lad.graph, lad.labeling, vs).ok);

    // two vertices with label order against weight order
    Graph g = build_path(3);
    TotalLabeling L(g);
    L.set_vertex_label(g, plain_vertex(1), 1);
    L.set_vertex_label(g, plain_vertex(2), 5);
    L.set_vertex_label(g, plain_vertex(3), 2);
    L.set_edge_label(g, Edge(plain_vertex(1), plain_vertex(2)), 9);
    L.set_edge_label(g, Edge(plain_vertex(2), plain_vertex(3)), 3);
    // labels: 1 -> 1, 3 -> 2; weights: wt(1) = 10, wt(3) = 5
    CheckResult r = check_sharp_ordered(g, L, {plain_vertex(1), plain_vertex(3)});
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.witnesses.size() == 1);
    REQUIRE(r.witnesses[0].element_a == "1");
    REQUIRE(r.witnesses[0].element_b == "3");

    REQUIRE_THROWS_AS(check_sharp_ordered(g, L, {plain_vertex(9)}), not_found_error);
}

TEST_CASE("weak order") {
    for (int n = 2; n <= 12; ++n) {
        SchemeResult lad = ladder_labeling(n);
        auto parts = canonical_partition(lad.graph);
        REQUIRE(parts.has_value());
        REQUIRE(check_weak_ordered(lad.graph, lad.labeling, *parts));
    }

    // singletons are vacuously sharp ordered
    SchemeResult pet = petersen_labeling(6, 2);
    Partition singles;
    for (VertexId v : pet.graph.vertices()) singles.push_back({v});
    REQUIRE(check_weak_ordered(pet.graph, pet.labeling, singles));

    // the whole vertex set as one part fails when sharp order fails
    Graph g = build_path(3);
    TotalLabeling L(g);
    L.set_vertex_label(g, plain_vertex(1), 1);
    L.set_vertex_label(g, plain_vertex(2), 5);
    L.set_vertex_label(g, plain_vertex(3), 2);
    L.set_edge_label(g, Edge(plain_vertex(1), plain_vertex(2)), 9);
    L.set_edge_label(g, Edge(plain_vertex(2), plain_vertex(3)), 3);
    REQUIRE_FALSE(check_weak_ordered(g, L, {g.vertices()}));

    // non-partitions are rejected
    REQUIRE_THROWS_AS(check_weak_ordered(g, L, {{plain_vertex(1)}}), invalid_parameter_error);
    REQUIRE_THROWS_AS(
        check_weak_ordered(g, L, {{plain_vertex(1), plain_vertex(2)},
                                  {plain_vertex(2), plain_vertex(3)}}),
        invalid_parameter_error);
}

TEST_CASE("full report aggregates and stays deterministic") {
    SchemeResult lad = ladder_labeling(5);
    VerificationReport rep = full_report(lad.graph, lad.labeling);
    REQUIRE(rep.is_complete);
    REQUIRE(rep.is_bijective_total);
    REQUIRE(rep.is_super);
    REQUIRE(rep.is_eat);
    REQUIRE(rep.is_vat);
    REQUIRE(rep.is_tat);
    REQUIRE(rep.weak_ordered.has_value());
    REQUIRE(*rep.weak_ordered);

    SchemeResult pet = petersen_labeling(6, 2);
    VerificationReport rp = full_report(pet.graph, pet.labeling);
    REQUIRE(rp.is_eat);
    REQUIRE_FALSE(rp.is_vat);
    REQUIRE_FALSE(rp.is_tat);

    Graph p3 = build_path(3);
    TotalLabeling L = sequential_labeling(p3);
    VerificationReport r1 = full_report(p3, L);
    VerificationReport r2 = full_report(p3, L);
    REQUIRE(r1.is_tat == r2.is_tat);
    REQUIRE(r1.witnesses == r2.witnesses);

    // tat <=> eat and vat, on a case where vat fails
    REQUIRE(rp.is_tat == (rp.is_eat && rp.is_vat));

    REQUIRE_THROWS_AS(full_report(p3, TotalLabeling(p3)), incomplete_labeling_error);
}

TEST_CASE("full report tries the canonical partition only for u/v graphs") {
    Graph p3 = build_path(3);
    VerificationReport rep = full_report(p3, sequential_labeling(p3));
    REQUIRE_FALSE(rep.weak_ordered.has_value());
    REQUIRE_FALSE(rep.weak_ordered_partition.has_value());

    SchemeResult pri = prism_labeling(3);
    VerificationReport rp = full_report(pri.graph, pri.labeling);
    REQUIRE(rp.weak_ordered.has_value());
    REQUIRE(rp.weak_ordered_partition.has_value());
    REQUIRE(rp.weak_ordered_partition->size() == 2);

    VerificationReport suppressed = full_report(pri.graph, pri.labeling, std::nullopt, false);
    REQUIRE_FALSE(suppressed.weak_ordered.has_value());
}

TEST_CASE("verifier agrees with the naive oracle on random labelings") {
    std::mt19937 rng(7);
    std::vector<Graph> corpus{build_path(2), build_path(3), build_path(4),  build_cycle(3),
                              build_cycle(4), build_ladder(2), build_path(5)};
    for (const Graph& g : corpus) {
        for (int round = 0; round < 60; ++round) {
            std::uniform_int_distribution<std::int64_t> dist(1, g.element_count());
            TotalLabeling L(g);
            for (int i = 0; i < g.vertex_count(); ++i) L.set_vertex_label_at(i, dist(rng));
            for (int i = 0; i < g.edge_count(); ++i) L.set_edge_label_at(i, dist(rng));
            oracle::NaiveFlags nf = oracle::naive_flags(g, L);
            VerificationReport rep = full_report(g, L);
            REQUIRE(rep.is_bijective_total == nf.bijective);
            REQUIRE(rep.is_super == nf.super);
            REQUIRE(rep.is_eat == nf.eat);
            REQUIRE(rep.is_vat == nf.vat);
            REQUIRE(rep.sharp_ordered == nf.sharp);
        }
    }
}
