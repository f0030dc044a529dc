#include <catch_amalgamated.hpp>

#include <sstream>

#include "tatforge/chain.hpp"
#include "tatforge/io.hpp"
#include "tatforge/schemes.hpp"

using namespace tatforge;

namespace {

std::string dump(const Graph& g, const TotalLabeling& L) {
    std::ostringstream os;
    write_labeling(os, g, L);
    return os.str();
}

} // namespace

TEST_CASE("family labeling files round-trip byte for byte") {
    for (const SchemeResult& sr :
         {ladder_labeling(3), prism_labeling(4), petersen_labeling(5, 2)}) {
        std::string text = dump(sr.graph, sr.labeling);
        std::istringstream in(text);
        LoadedLabeling ll = read_labeling(in);
        REQUIRE(ll.graph == sr.graph);
        REQUIRE(ll.labeling == sr.labeling);
        REQUIRE(dump(ll.graph, ll.labeling) == text);
    }
}

TEST_CASE("chain labeling files carry their edges and round-trip") {
    ChainResult res = chain_paths({3, 3});
    std::string text = dump(res.graph, res.labeling);
    std::istringstream in(text);
    LoadedLabeling ll = read_labeling(in);
    REQUIRE(ll.graph == res.graph);
    REQUIRE(ll.graph.family().kind == FamilyTag::Kind::Chain);
    REQUIRE(ll.labeling == res.labeling);
    REQUIRE(dump(ll.graph, ll.labeling) == text);
}

TEST_CASE("custom labeling files") {
    std::string text = R"({
  "family": "custom",
  "edges": [["1", "2"], ["2", "3"], ["3", "1"]],
  "vertex_labels": [["1", 1], ["2", 2], ["3", 3]],
  "edge_labels": [["1", "2", 4], ["2", "3", 6], ["3", "1", 5]]
})";
    std::istringstream in(text);
    LoadedLabeling ll = read_labeling(in);
    REQUIRE(ll.graph.vertex_count() == 3);
    REQUIRE(ll.graph.edge_count() == 3);
    REQUIRE(ll.labeling.vertex_label(ll.graph, plain_vertex(2)) == 2);
    REQUIRE(ll.labeling.edge_label(ll.graph, Edge(plain_vertex(3), plain_vertex(1))) == 5);

    std::string again = dump(ll.graph, ll.labeling);
    std::istringstream in2(again);
    LoadedLabeling ll2 = read_labeling(in2);
    REQUIRE(ll2.graph == ll.graph);
    REQUIRE(ll2.labeling == ll.labeling);
    REQUIRE(dump(ll2.graph, ll2.labeling) == again);
}

TEST_CASE("parse diagnostics carry line and field information") {
    std::istringstream truncated("{\n  \"family\": \"ladder\",\n  \"n\": 3");
    try {
        read_labeling(truncated);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(e.line() >= 1);
    }

    std::istringstream bad_family("{\"family\": \"moebius\", \"n\": 3}");
    try {
        read_labeling(bad_family);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(e.field() == "family");
    }

    std::istringstream bad_n("{\"family\": \"ladder\", \"n\": 1, \"vertex_labels\": [], "
                             "\"edge_labels\": []}");
    try {
        read_labeling(bad_n);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(e.field() == "n");
    }

    std::istringstream short_labels(
        "{\"family\": \"ladder\", \"n\": 3, \"vertex_labels\": [1, 2], \"edge_labels\": []}");
    try {
        read_labeling(short_labels);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(e.field() == "vertex_labels");
    }

    std::istringstream zero_label(
        "{\"family\": \"path\", \"n\": 2, \"vertex_labels\": [1, 0], "
        "\"edge_labels\": [[\"1\", \"2\", 3]]}");
    REQUIRE_THROWS_AS(read_labeling(zero_label), parse_error);

    std::istringstream alien_edge(
        "{\"family\": \"path\", \"n\": 2, \"vertex_labels\": [1, 2], "
        "\"edge_labels\": [[\"1\", \"3\", 3]]}");
    try {
        read_labeling(alien_edge);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(e.field() == "edge_labels");
    }
}

TEST_CASE("files with duplicate label values load fine; the verifier judges them") {
    std::istringstream in(
        "{\"family\": \"path\", \"n\": 2, \"vertex_labels\": [1, 1], "
        "\"edge_labels\": [[\"1\", \"2\", 2]]}");
    LoadedLabeling ll = read_labeling(in);
    VerificationReport rep = full_report(ll.graph, ll.labeling);
    REQUIRE_FALSE(rep.is_bijective_total);
    REQUIRE(rep.is_eat); // antimagic flags still computed
}

TEST_CASE("report serialization mirrors the report") {
    SchemeResult pet = petersen_labeling(6, 2);
    VerificationReport rep = full_report(pet.graph, pet.labeling);
    nlohmann::ordered_json j = report_to_json(rep);
    REQUIRE(j["is_tat"] == false);
    REQUIRE(j["is_eat"] == true);
    REQUIRE(j["is_super"] == true);
    REQUIRE(j["weak_ordered_partition"].is_array());
    bool saw = false;
    for (const auto& w : j["witnesses"])
        if (w["property"] == "vat" && w["a"] == "v2" && w["b"] == "v5" && w["weight"] == 87)
            saw = true;
    REQUIRE(saw);
}

TEST_CASE("dot export") {
    SchemeResult sr = ladder_labeling(2);
    std::ostringstream os;
    write_dot(os, sr.graph, &sr.labeling);
    std::string dot = os.str();
    REQUIRE(dot.find("graph tatforge {") == 0);
    REQUIRE(dot.find("\"u1\" [label=\"u1: 1\"];") != std::string::npos);
    REQUIRE(dot.find("\"u1\" -- \"v1\"") != std::string::npos);

    SchemeResult pri = prism_labeling(3);
    std::ostringstream os2;
    write_dot(os2, pri.graph, &pri.labeling);
    REQUIRE(os2.str().find("\"u1\" -- \"v1\" [label=\"12\"];") != std::string::npos);

    // bare graph: no annotations
    std::ostringstream os3;
    write_dot(os3, build_path(2));
    REQUIRE(os3.str().find("label") == std::string::npos);

    // deterministic
    std::ostringstream os4;
    write_dot(os4, sr.graph, &sr.labeling);
    REQUIRE(os4.str() == dot);
}

TEST_CASE("manifest parsing") {
    std::istringstream in(
        "# blocks in order\n"
        "a.json\n"
        "\n"
        "  b.json   # trailing\n");
    std::vector<std::string> paths = read_manifest(in);
    REQUIRE(paths == std::vector<std::string>{"a.json", "b.json"});

    std::istringstream empty("# nothing\n");
    REQUIRE_THROWS_AS(read_manifest(empty), parse_error);
}
