#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsrg/analysis.hpp"
#include "qsrg/classify.hpp"
#include "qsrg/constructions.hpp"
#include "qsrg/errors.hpp"

#include <algorithm>
#include <set>

using namespace qsrg;

namespace {

// Independent oracle: partitions of the 15 nonzero 4-bit vectors into five
// xor-closed triples {x, y, x^y}, counted by backtracking on raw integers.
int count_line_spreads_pg32() {
    std::vector<std::array<int, 3>> lines;
    for (int x = 1; x < 16; ++x)
        for (int y = x + 1; y < 16; ++y) {
            int z = x ^ y;
            if (z > y)
                lines.push_back({x, y, z});
        }
    int count = 0;
    std::vector<bool> used(16, false);
    auto rec = [&](auto&& self, int covered) -> void {
        if (covered == 15) {
            ++count;
            return;
        }
        int first = 1;
        while (used[first])
            ++first;
        for (const auto& ln : lines) {
            if (ln[0] != first || used[ln[1]] || used[ln[2]])
                continue;
            for (int p : ln)
                used[p] = true;
            self(self, covered + 3);
            for (int p : ln)
                used[p] = false;
        }
    };
    rec(rec, 0);
    return count;
}

// Independent oracle: invertible zero-diagonal symmetric 4x4 matrices over
// GF(2), enumerated over the 2^6 upper triangles with a raw bit-level rank.
std::vector<std::array<uint8_t, 4>> invertible_alternating_forms_gf2() {
    std::vector<std::array<uint8_t, 4>> forms;
    for (int bits = 0; bits < 64; ++bits) {
        std::array<uint8_t, 4> rows{};
        int b = bits;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                if (b & 1) {
                    rows[i] |= uint8_t(1) << j;
                    rows[j] |= uint8_t(1) << i;
                }
                b >>= 1;
            }
        auto m = rows;
        int rank = 0;
        for (int col = 0; col < 4; ++col) {
            int pivot = -1;
            for (int r = rank; r < 4; ++r)
                if ((m[r] >> col) & 1) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                continue;
            std::swap(m[rank], m[pivot]);
            for (int r = 0; r < 4; ++r)
                if (r != rank && ((m[r] >> col) & 1))
                    m[r] ^= m[rank];
            ++rank;
        }
        if (rank == 4)
            forms.push_back(rows);
    }
    return forms;
}

QaryGraph graph_of_form(const FieldSpec& f, int v, const Matrix& form) {
    std::vector<Subspace> edges;
    for (const Subspace& plane : enumerate_subspaces(f, v, 2))
        if (bilinear_value(f, form, plane.basis[0], plane.basis[1]) == 0)
            edges.push_back(plane);
    return make_graph(f, v, edges);
}

std::set<std::vector<Edge>> edge_sets(const std::vector<QaryGraph>& graphs) {
    std::set<std::vector<Edge>> out;
    for (const QaryGraph& g : graphs)
        out.insert(g.edges);
    return out;
}

} // namespace

TEST_CASE("tiny regular enumerations") {
    FieldSpec f2 = FieldSpec::make(2);

    SearchConfig cfg;
    cfg.v = 2;
    cfg.k = 1;
    auto one_plane = enumerate_regular(f2, cfg);
    CHECK(one_plane.size() == 1);
    CHECK(one_plane[0].edges.size() == 1);

    cfg.v = 3;
    cfg.k = 2;
    auto complete3 = enumerate_regular(f2, cfg);
    CHECK(complete3.size() == 1);
    CHECK(complete3[0].edges == complete_graph(f2, 3).edges);

    cfg.v = 3;
    cfg.k = 1;
    CHECK(enumerate_regular(f2, cfg).empty()); // no line spread when 2 does not divide 3
}

TEST_CASE("backtracking equals the filter-everything oracle at v=3, q=2") {
    FieldSpec f2 = FieldSpec::make(2);
    const int n = 7;
    auto lines = enumerate_subspaces(f2, 3, 2);
    std::vector<Bitset> line_points;
    for (const Subspace& l : lines) {
        Bitset bits(n);
        for (int32_t p : subspace_points(f2, l))
            bits.set(p);
        line_points.push_back(bits);
    }
    std::vector<std::vector<int>> through(n);
    for (int id = 0; id < static_cast<int>(lines.size()); ++id)
        for (int p = 0; p < n; ++p)
            if (line_points[id].test(p))
                through[p].push_back(id);
    for (int p = 0; p < n; ++p)
        REQUIRE(through[p].size() == 3);

    // all 3^7 neighborhood maps, filtered for membership symmetry
    std::set<std::vector<Edge>> oracle;
    std::vector<int> pick(n, 0);
    for (int it = 0; it < 2187; ++it) {
        int x = it;
        for (int p = 0; p < n; ++p) {
            pick[p] = through[p][x % 3];
            x /= 3;
        }
        bool symmetric = true;
        for (int i = 0; i < n && symmetric; ++i)
            for (int j = i + 1; j < n && symmetric; ++j)
                if (line_points[pick[i]].test(j) != line_points[pick[j]].test(i))
                    symmetric = false;
        if (!symmetric)
            continue;
        std::set<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (line_points[pick[i]].test(j))
                    edges.insert(subspace_points(
                        f2, span(f2, point_subspace(f2, 3, i), point_subspace(f2, 3, j))));
        oracle.insert(std::vector<Edge>(edges.begin(), edges.end()));
    }

    SearchConfig cfg;
    cfg.v = 3;
    cfg.k = 1;
    auto searched = enumerate_regular(f2, cfg);
    CHECK(oracle == edge_sets(searched));
}

TEST_CASE("line spreads of PG(3,2): 56 graphs against the partition oracle") {
    CHECK(count_line_spreads_pg32() == 56);

    FieldSpec f2 = FieldSpec::make(2);
    SearchConfig cfg;
    cfg.v = 4;
    cfg.k = 1;
    SearchStats stats;
    auto regular = enumerate_regular(f2, cfg, &stats);
    CHECK(regular.size() == 56);
    CHECK(stats.complete);

    cfg.lambda = 1;
    cfg.mu = 0;
    auto srg = enumerate_srg(f2, cfg);
    CHECK(srg.size() == 56);
    CHECK(edge_sets(regular) == edge_sets(srg));
    for (const QaryGraph& g : srg)
        CHECK(classify_family(g) == Family::spread_union);
}

TEST_CASE("symplectic graphs on F_2^4: 28 against the alternating-form oracle") {
    auto forms = invertible_alternating_forms_gf2();
    CHECK(forms.size() == 28);

    FieldSpec f2 = FieldSpec::make(2);
    std::set<std::vector<Edge>> from_forms;
    for (const auto& rows : forms) {
        Matrix m(4, Row(4, 0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                m[i][j] = static_cast<Fe>((rows[i] >> j) & 1);
        from_forms.insert(graph_of_form(f2, 4, m).edges);
    }
    CHECK(from_forms.size() == 28); // distinct forms give distinct graphs

    SearchConfig cfg;
    cfg.v = 4;
    cfg.k = 2;
    cfg.lambda = 1;
    cfg.mu = 3;
    auto searched = enumerate_srg(f2, cfg);
    CHECK(searched.size() == 28);
    CHECK(edge_sets(searched) == from_forms);
    for (const QaryGraph& g : searched)
        CHECK(classify_family(g) == Family::symplectic);
}

TEST_CASE("prefiltered tuples also die in the unfiltered control search") {
    FieldSpec f2 = FieldSpec::make(2);
    struct Tuple {
        int v, k;
        int64_t lambda, mu;
    };
    for (const Tuple& t : {Tuple{3, 1, 0, 0}, Tuple{4, 2, 2, 1}, Tuple{4, 1, 0, 1}}) {
        SearchConfig cfg;
        cfg.v = t.v;
        cfg.k = t.k;
        cfg.lambda = t.lambda;
        cfg.mu = t.mu;
        bool rejected = !parameter_identity(t.v, t.k, t.lambda, t.mu, 2).holds ||
                        !projective_count_decompose(t.lambda, t.mu, 2);
        REQUIRE(rejected);
        CHECK(enumerate_srg(f2, cfg).empty()); // prefilter path
        cfg.apply_prefilters = false;
        CHECK(enumerate_srg(f2, cfg).empty()); // control search
    }
}

TEST_CASE("admissible tuples match the three-family split") {
    using P = std::pair<int64_t, int64_t>;
    CHECK(admissible_tuples(4, 1, 2) == std::vector<P>{{1, 0}});
    CHECK(admissible_tuples(4, 2, 2) == std::vector<P>{{5, 0}, {1, 3}});
    CHECK(admissible_tuples(4, 3, 2) == std::vector<P>{{13, 0}});
    CHECK(admissible_tuples(5, 2, 2) == std::vector<P>{{5, 0}, {1, 1}});
    CHECK(admissible_tuples(3, 1, 2) == std::vector<P>{{1, 0}});
    CHECK(admissible_tuples(6, 4, 3) == std::vector<P>{{119, 0}, {38, 40}});
}

TEST_CASE("classification report at v=4, q=2") {
    FieldSpec f2 = FieldSpec::make(2);
    SearchConfig budgets;
    ClassificationReport report = classify_report(f2, 4, budgets);
    CHECK(report.v == 4);
    CHECK(report.q == 2);
    REQUIRE(report.tuples.size() == 4);

    // k=1 spread family
    CHECK(report.tuples[0].k == 1);
    CHECK(report.tuples[0].count == 56);
    CHECK(report.tuples[0].spread_union == 56);
    // k=2 spread tuple has no 3-spread of F_2^4
    CHECK(report.tuples[1].k == 2);
    CHECK(report.tuples[1].count == 0);
    // k=2 symplectic family
    CHECK(report.tuples[2].count == 28);
    CHECK(report.tuples[2].symplectic == 28);
    // k=3 complete graph
    CHECK(report.tuples[3].k == 3);
    CHECK(report.tuples[3].count == 1);
    CHECK(report.tuples[3].spread_union == 1);

    for (const TupleReport& t : report.tuples) {
        CHECK(t.other == 0);
        CHECK(t.complete);
    }
}

TEST_CASE("classification report at v=3, q=2") {
    FieldSpec f2 = FieldSpec::make(2);
    SearchConfig budgets;
    ClassificationReport report = classify_report(f2, 3, budgets);
    REQUIRE(report.tuples.size() == 2);
    CHECK(report.tuples[0].k == 1);
    CHECK(report.tuples[0].count == 0);
    CHECK(report.tuples[1].k == 2);
    CHECK(report.tuples[1].count == 1);
    CHECK(report.tuples[1].spread_union == 1);
}

TEST_CASE("worker count does not change results or node counts") {
    FieldSpec f2 = FieldSpec::make(2);
    SearchConfig cfg;
    cfg.v = 4;
    cfg.k = 2;
    cfg.lambda = 1;
    cfg.mu = 3;
    SearchStats s1, s8;
    auto r1 = enumerate_srg(f2, cfg, &s1);
    cfg.workers = 8;
    auto r8 = enumerate_srg(f2, cfg, &s8);
    REQUIRE(r1.size() == r8.size());
    for (size_t i = 0; i < r1.size(); ++i)
        CHECK(r1[i].edges == r8[i].edges);
    CHECK(s1.nodes == s8.nodes);
    CHECK(s1.prunes == s8.prunes);
}

TEST_CASE("node budget exhaustion is reported, not fatal") {
    FieldSpec f2 = FieldSpec::make(2);
    SearchConfig cfg;
    cfg.v = 4;
    cfg.k = 1;
    cfg.node_budget = 1; // batches flush late; force an early abort
    SearchStats stats;
    enumerate_regular(f2, cfg, &stats);
    CHECK(!stats.complete);
}

TEST_CASE("symmetry fixing scales counts by the spaces through a point") {
    FieldSpec f2 = FieldSpec::make(2);
    SearchConfig cfg;
    cfg.v = 4;
    cfg.k = 2;
    cfg.lambda = 1;
    cfg.mu = 3;
    cfg.symmetry_fixing = true;
    SearchStats stats;
    auto reps = enumerate_srg(f2, cfg, &stats);
    CHECK(stats.count_multiplier == 7); // 3-spaces through a point of F_2^4
    CHECK(reps.size() * stats.count_multiplier == 28);
}
