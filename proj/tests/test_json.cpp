#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsrg/constructions.hpp"
#include "qsrg/errors.hpp"
#include "qsrg/json_io.hpp"

using namespace qsrg;
using nlohmann::json;

TEST_CASE("field json round trip") {
    FieldSpec f2 = FieldSpec::make(2);
    json j2 = field_to_json(f2);
    CHECK(!j2.contains("modulus"));
    CHECK(field_from_json(j2) == f2);

    FieldSpec f9 = FieldSpec::make(3, 2);
    json j9 = field_to_json(f9);
    CHECK(j9["modulus"] == json::array({1, 0, 1}));
    CHECK(field_from_json(j9) == f9);

    CHECK_THROWS_AS(field_from_json(json{{"p", 2}, {"e", 2}}), Error);
    CHECK_THROWS_AS(field_from_json(json{{"p", 2}, {"e", 1}, {"modulus", {1, 1, 1}}}), Error);
    CHECK_THROWS_AS(field_from_json(json{{"p", 6}, {"e", 1}}), Error);
}

TEST_CASE("graph json round trip and byte stability") {
    FieldSpec f2 = FieldSpec::make(2);
    for (const QaryGraph& g :
         {symplectic_graph(f2, 4), complete_graph(f2, 3),
          spread_graph(f2, desarguesian_spread(f2, 4, 2)), QaryGraph{f2, 4, {}}}) {
        json j = graph_to_json(g);
        QaryGraph back = graph_from_json(j);
        CHECK(back.v == g.v);
        CHECK(back.field == g.field);
        CHECK(back.edges == g.edges);
        CHECK(dump_canonical(graph_to_json(back)) == dump_canonical(j));
    }
}

TEST_CASE("graph json canonicalizes shuffled input") {
    FieldSpec f2 = FieldSpec::make(2);
    QaryGraph g = spread_graph(f2, desarguesian_spread(f2, 4, 2));
    json j = graph_to_json(g);
    // scramble edge order and inner point order
    json scrambled = j;
    std::reverse(scrambled["edges"].begin(), scrambled["edges"].end());
    std::reverse(scrambled["edges"][0].begin(), scrambled["edges"][0].end());
    QaryGraph back = graph_from_json(scrambled);
    CHECK(back.edges == g.edges);
}

TEST_CASE("graph json rejects bad edges") {
    FieldSpec f2 = FieldSpec::make(2);
    json base = graph_to_json(QaryGraph{f2, 4, {}});

    json not_plane = base;
    not_plane["edges"].push_back(std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(graph_from_json(not_plane), Error);

    json dup = graph_to_json(complete_graph(f2, 4));
    dup["edges"].push_back(dup["edges"][0]);
    CHECK_THROWS_AS(graph_from_json(dup), Error);

    json out_of_range = base;
    out_of_range["edges"].push_back(std::vector<int>{0, 1, 99});
    CHECK_THROWS_AS(graph_from_json(out_of_range), Error);
}

TEST_CASE("report json carries the tuple table") {
    ClassificationReport r{4, 2, {TupleReport{1, 1, 0, 56, 56, 0, 0, 1234, true}}};
    json j = report_to_json(r);
    CHECK(j["v"] == 4);
    CHECK(j["tuples"][0]["count"] == 56);
    CHECK(j["tuples"][0]["families"]["spread_union"] == 56);
    CHECK(j["tuples"][0]["complete"] == true);
}

TEST_CASE("verification report shapes") {
    FieldSpec f2 = FieldSpec::make(2);

    json symp = verification_report(symplectic_graph(f2, 4));
    CHECK(symp["srg"] == true);
    CHECK(symp["k"] == 2);
    CHECK(symp["lambda"] == 1);
    CHECK(symp["mu"] == 3);
    CHECK(symp["identity"]["lhs"] == 24);
    CHECK(symp["identity"]["holds"] == true);

    json empty = verification_report(QaryGraph{f2, 4, {}});
    CHECK(empty["srg"] == true);
    CHECK(empty["k"] == 0);
    CHECK(empty["lambda"].is_null());
    CHECK(empty["mu"] == 0);

    QaryGraph one_edge{f2, 4, {complete_graph(f2, 4).edges[0]}};
    json irregular = verification_report(one_edge);
    CHECK(irregular["regular"] == false);
    CHECK(irregular["srg"] == false);
    CHECK(irregular["k"].is_null());
}

TEST_CASE("params report") {
    json j = params_report(4, 2, 1, 3, 2);
    CHECK(j["identity"]["holds"] == true);
    CHECK(j["decomposition"]["l"] == 2);
    CHECK(j["decomposition"]["m"] == 2);

    json q1 = params_report(5, 2, 0, 1, 1);
    CHECK(q1["identity"]["lhs"] == 2);
    CHECK(q1["decomposition"].is_null());

    json bad = params_report(4, 2, 2, 1, 2);
    CHECK(bad["identity"]["holds"] == false);
    CHECK(bad["decomposition"]["projective"] == false);
}

TEST_CASE("collapse and design reports") {
    FieldSpec f2 = FieldSpec::make(2);
    QaryGraph spread = spread_graph(f2, desarguesian_spread(f2, 4, 2));
    json cj = collapse_report(collapse(spread));
    CHECK(cj["components"] == 5);
    CHECK(cj["srg"]["k"] == 2);

    json classical = classical_to_json(collapse(spread));
    CHECK(classical["n"] == 15);
    CHECK(classical["edges"].size() == 15); // 5 triangles

    SubspaceDesign d = neighborhood_design(symplectic_graph(f2, 4));
    json dj = design_report(d);
    CHECK(dj["verified"] == true);
    CHECK(dj["block_count"] == 15);
    json djson = design_to_json(d);
    CHECK(djson["blocks"].size() == 15);
    CHECK(djson["t"] == 2);
    CHECK(djson["lambda"] == 3);
}
