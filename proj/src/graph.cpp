#include "qsrg/graph.hpp"

#include "qsrg/errors.hpp"
#include "qsrg/qnum.hpp"

#include <algorithm>
#include <string>

namespace qsrg {

namespace {

std::vector<std::vector<int32_t>> edges_by_point(const QaryGraph& g) {
    std::vector<std::vector<int32_t>> through(g.vertex_count());
    for (size_t e = 0; e < g.edges.size(); ++e)
        for (int32_t p : g.edges[e])
            through[p].push_back(static_cast<int32_t>(e));
    return through;
}

} // namespace

QaryGraph make_graph(const FieldSpec& f, int v, const std::vector<Subspace>& edge_subspaces) {
    QaryGraph g{f, v, {}};
    g.edges.reserve(edge_subspaces.size());
    for (const Subspace& s : edge_subspaces) {
        if (s.ambient_dim != v || s.dim() != 2)
            throw Error(Errc::invalid_edge, "edges must be 2-subspaces of the ambient space");
        g.edges.push_back(subspace_points(f, s));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Subspace edge_subspace(const QaryGraph& g, const Edge& e) {
    if (e.size() < 2)
        throw Error(Errc::invalid_edge, "edge with fewer than two points");
    return span(g.field, point_subspace(g.field, g.v, e[0]),
                point_subspace(g.field, g.v, e[1]));
}

void validate_graph(const QaryGraph& g) {
    const int64_t n = g.vertex_count();
    const size_t plane_points = g.field.q() + 1;
    for (const Edge& e : g.edges) {
        if (e.size() != plane_points)
            throw Error(Errc::invalid_edge, "edge must list exactly q+1 points");
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n)
                throw Error(Errc::invalid_edge, "point index out of range");
            if (i > 0 && e[i - 1] >= e[i])
                throw Error(Errc::invalid_edge, "edge point list must be strictly increasing");
        }
        Subspace s = edge_subspace(g, e);
        if (s.dim() != 2 || subspace_points(g.field, s) != e)
            throw Error(Errc::invalid_edge, "edge point list is not closed under span");
    }
    for (size_t i = 1; i < g.edges.size(); ++i)
        if (g.edges[i - 1] == g.edges[i])
            throw Error(Errc::duplicate_edge, "duplicate edge");
    if (!std::is_sorted(g.edges.begin(), g.edges.end()))
        throw Error(Errc::invalid_edge, "edge list must be sorted");
}

Subspace neighborhood(const QaryGraph& g, int32_t x) {
    if (x < 0 || x >= g.vertex_count())
        throw Error(Errc::invalid_index, "vertex index out of range");
    Subspace acc = point_subspace(g.field, g.v, x);
    for (const Edge& e : g.edges)
        if (std::binary_search(e.begin(), e.end(), x))
            acc = span(g.field, acc, edge_subspace(g, e));
    return acc;
}

std::vector<Bitset> neighborhood_point_sets(const QaryGraph& g) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<Bitset> sets(n, Bitset(n));
    for (int x = 0; x < n; ++x)
        sets[x].set(x);
    for (const Edge& e : g.edges)
        for (int32_t a : e)
            for (int32_t b : e)
                sets[a].set(b);
    return sets;
}

std::optional<int> is_regular(const QaryGraph& g) {
    const int n = static_cast<int>(g.vertex_count());
    auto through = edges_by_point(g);
    std::vector<Subspace> edge_spaces;
    edge_spaces.reserve(g.edges.size());
    for (const Edge& e : g.edges)
        edge_spaces.push_back(edge_subspace(g, e));
    auto union_sets = neighborhood_point_sets(g);

    std::optional<int> k;
    for (int x = 0; x < n; ++x) {
        Subspace nb = point_subspace(g.field, g.v, x);
        for (int32_t e : through[x])
            nb = span(g.field, nb, edge_spaces[e]);
        // the union of the edges through x must fill the span point-for-point
        if (union_sets[x].count() != static_cast<int>(bracket(nb.dim(), g.field.q())))
            return std::nullopt;
        int kx = nb.dim() - 1;
        if (k && *k != kx)
            return std::nullopt;
        k = kx;
    }
    return k;
}

std::optional<SrgParams> srg_parameters(const QaryGraph& g) {
    auto k = is_regular(g);
    if (!k)
        throw Error(Errc::invalid_input, "srg_parameters requires a regular graph");
    const int n = static_cast<int>(g.vertex_count());
    auto nb = neighborhood_point_sets(g);

    std::optional<int64_t> lambda, mu;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            int common = nb[x].count_and(nb[y]);
            // for a regular graph, adjacency == membership in the
            // neighborhood subspace
            if (nb[x].test(y)) {
                int64_t c = common - 2;
                if (lambda && *lambda != c)
                    return std::nullopt;
                lambda = c;
            } else {
                if (mu && *mu != common)
                    return std::nullopt;
                mu = common;
            }
        }
    }
    return SrgParams{g.v, *k, lambda, mu, g.field.q()};
}

QaryGraph apply_coordinate_change(const QaryGraph& g, const Matrix& a) {
    if (static_cast<int>(a.size()) != g.v || mat_rank(g.field, a) != g.v)
        throw Error(Errc::invalid_input, "coordinate change must be an invertible v x v matrix");
    std::vector<Subspace> images;
    images.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        Subspace s = edge_subspace(g, e);
        images.push_back(rref_canonical(g.field, mat_mul(g.field, s.basis, a), g.v));
    }
    return make_graph(g.field, g.v, images);
}

} // namespace qsrg
