#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsrg.h"

#include "json.hpp"

#include <memory>
#include <string>

using nlohmann::json;

namespace {

using CStr = std::unique_ptr<char, void (*)(char*)>;
CStr own(char* s) { return CStr(s, qsrg_string_free); }
using GraphHandle = std::unique_ptr<qsrg_graph, void (*)(qsrg_graph*)>;
GraphHandle own(qsrg_graph* g) { return GraphHandle(g, qsrg_graph_free); }

GraphHandle construct(const char* type, int v, int q, int t = 0) {
    qsrg_graph* g = nullptr;
    REQUIRE(qsrg_construct(type, v, q, t, &g) == QSRG_OK);
    return own(g);
}

json verify_json(const GraphHandle& g) {
    char* raw = nullptr;
    REQUIRE(qsrg_verify(g.get(), &raw) == QSRG_OK);
    CStr s = own(raw);
    return json::parse(s.get());
}

} // namespace

TEST_CASE("version and error strings") {
    CHECK(std::string(qsrg_version()) == "0.1.0");
    qsrg_graph* g = nullptr;
    CHECK(qsrg_construct("nonsense", 4, 2, 0, &g) == QSRG_ERR_INVALID_ARGUMENT);
    CHECK(std::string(qsrg_last_error()).find("nonsense") != std::string::npos);
}

TEST_CASE("construct and verify through the C surface") {
    GraphHandle symp = construct("symplectic", 4, 2);
    json r = verify_json(symp);
    CHECK(r["srg"] == true);
    CHECK(r["k"] == 2);
    CHECK(r["lambda"] == 1);
    CHECK(r["mu"] == 3);
    CHECK(r["identity"]["holds"] == true);

    GraphHandle spread = construct("spread", 6, 2, 3);
    json rs = verify_json(spread);
    CHECK(rs["lambda"] == 5);
    CHECK(rs["mu"] == 0);

    GraphHandle complete = construct("complete", 4, 2);
    json rc = verify_json(complete);
    CHECK(rc["lambda"] == 13);
    CHECK(rc["mu"].is_null());
}

TEST_CASE("construction errors map to statuses") {
    qsrg_graph* g = nullptr;
    CHECK(qsrg_construct("spread", 5, 2, 2, &g) == QSRG_ERR_NOT_DIVISIBLE);
    CHECK(qsrg_construct("symplectic", 5, 2, 0, &g) == QSRG_ERR_ODD_DIMENSION);
    CHECK(qsrg_construct("complete", 4, 6, 0, &g) == QSRG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("graph json round trip across the boundary") {
    GraphHandle symp = construct("symplectic", 4, 3);
    char* raw = nullptr;
    REQUIRE(qsrg_graph_to_json(symp.get(), &raw) == QSRG_OK);
    CStr text = own(raw);

    qsrg_graph* back = nullptr;
    REQUIRE(qsrg_graph_from_json(text.get(), &back) == QSRG_OK);
    GraphHandle h = own(back);
    char* raw2 = nullptr;
    REQUIRE(qsrg_graph_to_json(h.get(), &raw2) == QSRG_OK);
    CStr text2 = own(raw2);
    CHECK(std::string(text.get()) == std::string(text2.get()));

    qsrg_graph* bad = nullptr;
    CHECK(qsrg_graph_from_json("{not json", &bad) == QSRG_ERR_INVALID_ARGUMENT);
    CHECK(qsrg_graph_from_json(
              R"({"field":{"e":1,"p":2},"v":4,"edges":[[0,1,2]]})", &bad) ==
          QSRG_ERR_INVALID_EDGE);
}

TEST_CASE("design and collapse") {
    GraphHandle symp = construct("symplectic", 4, 2);
    char *design_raw = nullptr, *verdict_raw = nullptr;
    REQUIRE(qsrg_design(symp.get(), &design_raw, &verdict_raw) == QSRG_OK);
    CStr design = own(design_raw), verdict = own(verdict_raw);
    json dj = json::parse(design.get());
    CHECK(dj["blocks"].size() == 15);
    CHECK(json::parse(verdict.get())["verified"] == true);

    GraphHandle spread = construct("spread", 4, 2, 2);
    CHECK(qsrg_design(spread.get(), &design_raw, &verdict_raw) ==
          QSRG_ERR_WRONG_PARAMETER_SHAPE);

    char *collapsed_raw = nullptr, *cv_raw = nullptr;
    REQUIRE(qsrg_collapse(spread.get(), &collapsed_raw, &cv_raw) == QSRG_OK);
    CStr collapsed = own(collapsed_raw), cverdict = own(cv_raw);
    json cj = json::parse(cverdict.get());
    CHECK(cj["components"] == 5);
    CHECK(cj["srg"]["n"] == 15);
    CHECK(cj["srg"]["k"] == 2);
    CHECK(json::parse(collapsed.get())["n"] == 15);
}

TEST_CASE("params") {
    char* raw = nullptr;
    REQUIRE(qsrg_params(4, 2, 1, 3, 2, &raw) == QSRG_OK);
    CStr s = own(raw);
    json r = json::parse(s.get());
    CHECK(r["identity"]["lhs"] == 24);
    CHECK(r["decomposition"]["l"] == 2);

    CHECK(qsrg_params(4, 2, -1, 3, 2, &raw) == QSRG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("classify full report and single tuple") {
    qsrg_classify_options opt{};
    char* report_raw = nullptr;
    REQUIRE(qsrg_classify(4, 2, &opt, &report_raw, nullptr) == QSRG_OK);
    CStr report = own(report_raw);
    json r = json::parse(report.get());
    CHECK(r["tuples"].size() == 4);
    CHECK(r["tuples"][0]["count"] == 56);
    CHECK(r["tuples"][2]["count"] == 28);

    opt.has_k = 1;
    opt.k = 1;
    opt.has_lambda = 1;
    opt.lambda = 1;
    opt.has_mu = 1;
    opt.mu = 0;
    char* graphs_raw = nullptr;
    REQUIRE(qsrg_classify(4, 2, &opt, &report_raw, &graphs_raw) == QSRG_OK);
    CStr single = own(report_raw), graphs = own(graphs_raw);
    CHECK(json::parse(single.get())["tuples"][0]["count"] == 56);
    // 56 graphs, one JSON document per line
    std::string lines(graphs.get());
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 56);
    json first = json::parse(lines.substr(0, lines.find('\n')));
    CHECK(first["edges"].size() == 5);

    // lambda without mu is rejected
    opt.has_mu = 0;
    CHECK(qsrg_classify(4, 2, &opt, &report_raw, nullptr) == QSRG_ERR_INVALID_ARGUMENT);
}
