#include "qsrg/analysis.hpp"

#include "qsrg/errors.hpp"
#include "qsrg/qnum.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <string>

namespace qsrg {

IdentityCheck parameter_identity(int v, int k, int64_t lambda, int64_t mu, int64_t q) {
    if (v < 0 || k < 0 || lambda < 0 || mu < 0 || q < 1)
        throw Error(Errc::invalid_input, "identity takes nonnegative integers, q >= 1");
    const __int128 bk1 = bracket(k + 1, q);
    const __int128 bv = bracket(v, q);
    const __int128 lhs = (bk1 - 1) * (bk1 - 2 - lambda);
    const __int128 rhs = (bv - bk1) * mu;
    const __int128 cap = std::numeric_limits<int64_t>::max();
    if (lhs > cap || lhs < -cap || rhs > cap || rhs < -cap)
        throw Error(Errc::overflow, "identity sides exceed 64 bits");
    return IdentityCheck{static_cast<int64_t>(lhs), static_cast<int64_t>(rhs), lhs == rhs};
}

std::optional<std::pair<int, int>> projective_count_decompose(int64_t lambda, int64_t mu,
                                                              int64_t q) {
    if (q < 2)
        throw Error(Errc::invalid_input, "decomposition needs q >= 2");
    auto bracket_rank = [q](int64_t value) -> std::optional<int> {
        int64_t b = 0, pw = 1;
        for (int a = 0; b <= value; ++a) {
            if (b == value)
                return a;
            if (b > std::numeric_limits<int64_t>::max() / q)
                break;
            b += pw;
            pw *= q;
        }
        return std::nullopt;
    };
    auto l = bracket_rank(lambda + 2);
    auto m = bracket_rank(mu);
    if (!l || !m)
        return std::nullopt;
    return std::make_pair(*l, *m);
}

SubspaceDesign neighborhood_design(const QaryGraph& g) {
    auto params = srg_parameters(g);
    if (!params)
        throw Error(Errc::not_strongly_regular, "graph is not strongly regular");
    if (!params->mu || !params->lambda || *params->lambda != *params->mu - 2)
        throw Error(Errc::wrong_parameter_shape,
                    "neighborhood designs need lambda = mu - 2 with mu defined");
    const int n = static_cast<int>(g.vertex_count());
    std::set<Subspace> blocks;
    for (int32_t x = 0; x < n; ++x)
        blocks.insert(neighborhood(g, x));
    SubspaceDesign d{g.field, g.v, 2, *params->mu, {blocks.begin(), blocks.end()}};
    return d;
}

std::optional<DesignCounterexample> verify_design(const SubspaceDesign& d) {
    const int n = static_cast<int>(point_count(d.field, d.v));
    std::vector<Bitset> block_points;
    block_points.reserve(d.blocks.size());
    for (const Subspace& b : d.blocks) {
        Bitset bits(n);
        for (int32_t p : subspace_points(d.field, b))
            bits.set(p);
        block_points.push_back(std::move(bits));
    }
    for (const Subspace& t : enumerate_subspaces(d.field, d.v, d.t)) {
        Bitset bits(n);
        for (int32_t p : subspace_points(d.field, t))
            bits.set(p);
        int64_t count = 0;
        for (const Bitset& b : block_points)
            if (bits.subset_of(b))
                ++count;
        if (count != d.lambda)
            return DesignCounterexample{t, count};
    }
    return std::nullopt;
}

std::vector<std::pair<int32_t, int32_t>> ClassicalGraph::edge_list() const {
    std::vector<std::pair<int32_t, int32_t>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adj[i].test(j))
                out.emplace_back(i, j);
    return out;
}

ClassicalGraph collapse(const QaryGraph& g) {
    const int n = static_cast<int>(g.vertex_count());
    ClassicalGraph c{n, std::vector<Bitset>(n, Bitset(n))};
    // any two distinct points of a plane span it, so all pairs on an edge
    // are adjacent
    for (const Edge& e : g.edges)
        for (int32_t a : e)
            for (int32_t b : e)
                if (a != b)
                    c.adj[a].set(b);
    return c;
}

std::optional<ClassicalSrg> verify_classical_srg(const ClassicalGraph& c) {
    if (c.n == 0)
        return std::nullopt;
    int degree = c.adj[0].count();
    for (int i = 1; i < c.n; ++i)
        if (c.adj[i].count() != degree)
            return std::nullopt;
    std::optional<int64_t> lambda, mu;
    for (int i = 0; i < c.n; ++i)
        for (int j = i + 1; j < c.n; ++j) {
            int64_t common = c.adj[i].count_and(c.adj[j]);
            if (c.adj[i].test(j)) {
                if (lambda && *lambda != common)
                    return std::nullopt;
                lambda = common;
            } else {
                if (mu && *mu != common)
                    return std::nullopt;
                mu = common;
            }
        }
    if (lambda && mu) {
        // cross-check the classical standard equation
        int64_t lhs = int64_t(degree) * (degree - 1 - *lambda);
        int64_t rhs = int64_t(c.n - degree - 1) * *mu;
        if (lhs != rhs)
            return std::nullopt;
    }
    return ClassicalSrg{c.n, degree, lambda, mu};
}

int component_count(const ClassicalGraph& c) {
    std::vector<bool> seen(c.n, false);
    int comps = 0;
    for (int s = 0; s < c.n; ++s) {
        if (seen[s])
            continue;
        ++comps;
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y = 0; y < c.n; ++y)
                if (c.adj[x].test(y) && !seen[y]) {
                    seen[y] = true;
                    queue.push_back(y);
                }
        }
    }
    return comps;
}

namespace {

// Kernel functional of a hyperplane: the nonzero row vector orthogonal to
// every basis row, normalized so its leading entry is 1.
Row hyperplane_functional(const FieldSpec& f, const Subspace& h) {
    const int v = h.ambient_dim;
    // solve B f^T = 0 for the 1-dim null space of the basis matrix
    Matrix m = h.basis;
    Matrix sys = m; // (v-1) x v system
    // bring to RREF, read the free column
    Subspace reduced = rref_canonical(f, sys, v);
    std::vector<bool> is_pivot(v, false);
    std::vector<int> pivots;
    for (const Row& row : reduced.basis) {
        for (int c = 0; c < v; ++c)
            if (row[c] != 0) {
                pivots.push_back(c);
                is_pivot[c] = true;
                break;
            }
    }
    int free_col = -1;
    for (int c = 0; c < v; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    Row func(v, 0);
    func[free_col] = 1;
    for (size_t r = 0; r < reduced.basis.size(); ++r)
        func[pivots[r]] = f.neg(reduced.basis[r][free_col]);
    // normalize leading entry to 1
    int lead = 0;
    while (func[lead] == 0)
        ++lead;
    Fe s = f.inv(func[lead]);
    for (Fe& x : func)
        x = f.mul(x, s);
    return func;
}

} // namespace

Matrix recover_alternating_form(const QaryGraph& g) {
    const FieldSpec& f = g.field;
    const int v = g.v;
    const int n = static_cast<int>(g.vertex_count());

    // every neighborhood must be a hyperplane (through its own vertex)
    std::vector<Row> functionals(n);
    for (int32_t x = 0; x < n; ++x) {
        Subspace nb = neighborhood(g, x);
        if (nb.dim() != v - 1)
            throw Error(Errc::not_polarity,
                        "neighborhood of vertex " + std::to_string(x) + " is not a hyperplane");
        functionals[x] = hyperplane_functional(f, nb);
    }

    // Row i of M must be a scalar multiple of the functional of N(<e_i>).
    // Fix row 1's scale, then propagate to row i through the point e_1 + e_i:
    // its functional must be a combination of the two rows.
    Matrix m(v, Row(v, 0));
    std::vector<int32_t> basis_points(v);
    for (int i = 0; i < v; ++i) {
        Row e(v, 0);
        e[i] = 1;
        basis_points[i] = point_index_of_vector(f, e);
    }
    m[0] = functionals[basis_points[0]];
    for (int i = 1; i < v; ++i) {
        Row mixed(v, 0);
        mixed[0] = 1;
        mixed[i] = 1;
        const Row& f0 = functionals[basis_points[0]];
        const Row& fi = functionals[basis_points[i]];
        const Row& fp = functionals[point_index_of_vector(f, mixed)];
        // solve alpha*fi + beta*fp = f0
        Matrix sys(v, Row(3, 0));
        for (int r = 0; r < v; ++r) {
            sys[r][0] = fi[r];
            sys[r][1] = fp[r];
            sys[r][2] = f0[r];
        }
        Subspace reduced = rref_canonical(f, sys, 3);
        // consistent iff no pivot in the last column and rank 2
        Fe alpha = 0, beta = 0;
        bool ok = reduced.dim() == 2;
        for (const Row& row : reduced.basis)
            if (row[0] == 0 && row[1] == 0)
                ok = false;
        if (ok) {
            for (const Row& row : reduced.basis) {
                if (row[0] == 1 && row[1] == 0)
                    alpha = row[2];
                else if (row[0] == 0 && row[1] == 1)
                    beta = row[2];
            }
        }
        if (!ok || alpha == 0 || beta == 0)
            throw Error(Errc::not_symplectic, "neighborhood functionals admit no bilinear form");
        // f0 + c*fi proportional to fp requires c = -alpha
        Fe c = f.neg(alpha);
        for (int j = 0; j < v; ++j)
            m[i][j] = f.mul(c, fi[j]);
    }

    // consistency on every remaining vertex certifies bilinearity
    for (int32_t x = 0; x < n; ++x) {
        Row vec = point_vector(f, v, x);
        Row w(v, 0);
        for (int i = 0; i < v; ++i) {
            if (vec[i] == 0)
                continue;
            for (int j = 0; j < v; ++j)
                w[j] = f.add(w[j], f.mul(vec[i], m[i][j]));
        }
        bool zero = std::all_of(w.begin(), w.end(), [](Fe t) { return t == 0; });
        if (zero)
            throw Error(Errc::not_symplectic, "recovered form is degenerate at a vertex");
        // kernel of w must be exactly N(x): check w kills the neighborhood
        Subspace nb = neighborhood(g, x);
        for (const Row& row : nb.basis) {
            Fe dot = 0;
            for (int j = 0; j < v; ++j)
                dot = f.add(dot, f.mul(w[j], row[j]));
            if (dot != 0)
                throw Error(Errc::not_symplectic, "neighborhoods are not the kernels of one form");
        }
    }

    // alternating: zero diagonal and skew-symmetric
    for (int i = 0; i < v; ++i) {
        if (m[i][i] != 0)
            throw Error(Errc::not_symplectic, "form has a nonzero diagonal entry");
        for (int j = 0; j < v; ++j)
            if (m[i][j] != f.neg(m[j][i]))
                throw Error(Errc::not_symplectic, "form is not skew-symmetric");
    }
    if (mat_rank(f, m) != v)
        throw Error(Errc::not_symplectic, "form is singular");
    return m;
}

IncidenceMetrics incidence_metrics(const QaryGraph& g) {
    const int np = static_cast<int>(g.vertex_count());
    const int ne = static_cast<int>(g.edges.size());
    const int n = np + ne;
    std::vector<std::vector<int>> adj(n);
    for (int e = 0; e < ne; ++e)
        for (int32_t p : g.edges[e]) {
            adj[p].push_back(np + e);
            adj[np + e].push_back(p);
        }

    IncidenceMetrics out;
    out.edge_degree_is_q_plus_1 = true;
    for (int e = 0; e < ne; ++e)
        if (static_cast<int>(adj[np + e].size()) != g.field.q() + 1)
            out.edge_degree_is_q_plus_1 = false;
    std::optional<int64_t> pd;
    bool constant = true;
    for (int p = 0; p < np; ++p) {
        int64_t d = static_cast<int64_t>(adj[p].size());
        if (pd && *pd != d)
            constant = false;
        pd = d;
    }
    if (constant)
        out.point_degree = pd;

    // girth and diameter by BFS from every vertex
    int best_cycle = std::numeric_limits<int>::max();
    int diameter = 0;
    bool connected = true;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        int reached = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            ++reached;
            diameter = std::max(diameter, dist[x]);
            for (int y : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (y != parent[x]) {
                    best_cycle = std::min(best_cycle, dist[x] + dist[y] + 1);
                }
            }
        }
        if (reached != n)
            connected = false;
    }
    if (best_cycle != std::numeric_limits<int>::max())
        out.girth = best_cycle;
    if (connected && n > 0)
        out.diameter = diameter;
    return out;
}

} // namespace qsrg
