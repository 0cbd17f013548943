#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsrg/constructions.hpp"
#include "qsrg/errors.hpp"
#include "qsrg/graph.hpp"
#include "qsrg/qnum.hpp"

#include <random>

using namespace qsrg;

namespace {

void check_edge_count_formula(const QaryGraph& g, int k) {
    uint64_t expected =
        bracket(g.v, g.field.q()) * bracket(k, g.field.q()) / (g.field.q() + 1);
    CHECK(g.edges.size() == expected);
}

} // namespace

TEST_CASE("validate accepts the complete graph and the empty graph") {
    FieldSpec f2 = FieldSpec::make(2);
    QaryGraph complete = complete_graph(f2, 4);
    CHECK(complete.edges.size() == 35);
    CHECK_NOTHROW(validate_graph(complete));

    QaryGraph empty{f2, 4, {}};
    CHECK_NOTHROW(validate_graph(empty));
}

TEST_CASE("validate rejects point lists that are not planes") {
    FieldSpec f2 = FieldSpec::make(2);
    // points 0,1,2 of F_2^4: <e1>, <e1+tail...>; not closed under addition
    QaryGraph bad{f2, 4, {{0, 1, 2}}};
    CHECK_THROWS_AS(validate_graph(bad), Error);

    QaryGraph complete = complete_graph(f2, 4);
    QaryGraph dup = complete;
    dup.edges.push_back(dup.edges.back());
    std::sort(dup.edges.begin(), dup.edges.end());
    CHECK_THROWS_AS(validate_graph(dup), Error);
}

TEST_CASE("neighborhoods") {
    FieldSpec f2 = FieldSpec::make(2);
    QaryGraph complete = complete_graph(f2, 4);
    for (int32_t x = 0; x < 15; ++x)
        CHECK(neighborhood(complete, x).dim() == 4);

    QaryGraph empty{f2, 4, {}};
    for (int32_t x = 0; x < 15; ++x) {
        Subspace nb = neighborhood(empty, x);
        CHECK(nb.dim() == 1);
        CHECK(nb == point_subspace(f2, 4, x));
    }

    QaryGraph symp = symplectic_graph(f2, 4);
    for (int32_t x = 0; x < 15; ++x)
        CHECK(neighborhood(symp, x).dim() == 3);
}

TEST_CASE("regularity degrees") {
    FieldSpec f2 = FieldSpec::make(2);
    FieldSpec f3 = FieldSpec::make(3);

    CHECK(is_regular(complete_graph(f2, 4)) == 3);
    CHECK(is_regular(complete_graph(f3, 3)) == 2);
    CHECK(is_regular(QaryGraph{f2, 4, {}}) == 0);

    QaryGraph spread = spread_graph(f2, desarguesian_spread(f2, 4, 2));
    CHECK(is_regular(spread) == 1);

    // a single edge in F_2^4 leaves most vertices isolated
    QaryGraph one_edge{f2, 4, {complete_graph(f2, 4).edges[0]}};
    CHECK(!is_regular(one_edge).has_value());
}

TEST_CASE("srg parameters of the three families") {
    FieldSpec f2 = FieldSpec::make(2);

    auto symp = srg_parameters(symplectic_graph(f2, 4));
    REQUIRE(symp.has_value());
    CHECK(*symp == SrgParams{4, 2, 1, 3, 2});

    auto spread = srg_parameters(spread_graph(f2, desarguesian_spread(f2, 4, 2)));
    REQUIRE(spread.has_value());
    CHECK(*spread == SrgParams{4, 1, 1, 0, 2});

    auto complete3 = srg_parameters(complete_graph(f2, 3));
    REQUIRE(complete3.has_value());
    CHECK(complete3->k == 2);
    CHECK(complete3->lambda == 5); // [3]_2 - 2
    CHECK(!complete3->mu.has_value());

    auto empty = srg_parameters(QaryGraph{f2, 4, {}});
    REQUIRE(empty.has_value());
    CHECK(empty->k == 0);
    CHECK(!empty->lambda.has_value());
    CHECK(empty->mu == 0);
}

TEST_CASE("graph invariants on constructed graphs") {
    FieldSpec f2 = FieldSpec::make(2);
    FieldSpec f3 = FieldSpec::make(3);

    std::vector<std::pair<QaryGraph, int>> cases;
    cases.emplace_back(complete_graph(f2, 4), 3);
    cases.emplace_back(complete_graph(f3, 3), 2);
    cases.emplace_back(symplectic_graph(f2, 4), 2);
    cases.emplace_back(symplectic_graph(f2, 6), 4);
    cases.emplace_back(spread_graph(f2, desarguesian_spread(f2, 4, 2)), 1);
    cases.emplace_back(spread_graph(f2, desarguesian_spread(f2, 6, 3)), 2);

    for (const auto& [g, k] : cases) {
        CHECK(is_regular(g) == k);
        check_edge_count_formula(g, k);

        auto nb = neighborhood_point_sets(g);
        const int n = static_cast<int>(g.vertex_count());
        for (int x = 0; x < n; ++x) {
            CHECK(nb[x].test(x)); // closed neighborhood
            for (int y = x + 1; y < n; ++y) {
                CHECK(nb[x].test(y) == nb[y].test(x)); // adjacency symmetry
                // the {X,Y} subtraction removes exactly 2 points for
                // adjacent pairs and 0 for non-adjacent pairs
                int removed = (nb[x].test(x) && nb[y].test(x) ? 1 : 0) +
                              (nb[x].test(y) && nb[y].test(y) ? 1 : 0);
                CHECK(removed == (nb[x].test(y) ? 2 : 0));
            }
        }
    }
}

TEST_CASE("coordinate change preserves srg parameters") {
    FieldSpec f2 = FieldSpec::make(2);
    QaryGraph symp = symplectic_graph(f2, 4);
    std::mt19937 rng(99);
    for (int it = 0; it < 5; ++it) {
        Matrix a;
        do {
            a.assign(4, Row(4, 0));
            for (auto& row : a)
                for (auto& x : row)
                    x = static_cast<Fe>(rng() & 1);
        } while (mat_rank(f2, a) != 4);
        QaryGraph image = apply_coordinate_change(symp, a);
        CHECK_NOTHROW(validate_graph(image));
        auto params = srg_parameters(image);
        REQUIRE(params.has_value());
        CHECK(*params == SrgParams{4, 2, 1, 3, 2});
    }
}
