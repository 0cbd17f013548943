#pragma once

#include "qsrg/graph.hpp"

#include <optional>
#include <utility>

namespace qsrg {

/// Both sides of the parameter identity
///   ([k+1]_q - 1) ([k+1]_q - 2 - lambda) = ([v]_q - [k+1]_q) mu
/// evaluated in exact integer arithmetic. q = 1 is allowed and reproduces the
/// classical equation k(k-1-lambda) = (v-k-1) mu.
struct IdentityCheck {
    int64_t lhs = 0;
    int64_t rhs = 0;
    bool holds = false;
};
IdentityCheck parameter_identity(int v, int k, int64_t lambda, int64_t mu, int64_t q);

/// The unique (l, m) with lambda = [l]_q - 2 and mu = [m]_q, if both exist.
/// Failure certifies that (lambda, mu) cannot belong to a strongly regular
/// q-ary graph, whose common neighborhoods are subspaces.
std::optional<std::pair<int, int>> projective_count_decompose(int64_t lambda, int64_t mu,
                                                              int64_t q);

/// A t-(v, k, lambda; q) design candidate: k-dim blocks plus the claimed
/// (t, lambda).
struct SubspaceDesign {
    FieldSpec field;
    int v = 0;
    int t = 0;
    int64_t lambda = 0;
    std::vector<Subspace> blocks; // deduplicated, canonical order
};

/// Deduplicated neighborhoods of an SRG(v, k, mu-2, mu; q) graph as a
/// candidate 2-(v, k+1, mu; q) design. Throws Errc::not_strongly_regular or
/// Errc::wrong_parameter_shape.
SubspaceDesign neighborhood_design(const QaryGraph& g);

struct DesignCounterexample {
    Subspace t_subspace;
    int64_t count = 0;
};

/// Counts the blocks through every t-subspace in enumeration order; nullopt
/// when every count equals lambda, otherwise the first offender.
std::optional<DesignCounterexample> verify_design(const SubspaceDesign& d);

/// Classical graph on the [v]_q projective points.
struct ClassicalGraph {
    int n = 0;
    std::vector<Bitset> adj; // symmetric, zero diagonal

    std::vector<std::pair<int32_t, int32_t>> edge_list() const;
};

/// i ~ j iff the 2-subspace <i, j> is an edge of g.
ClassicalGraph collapse(const QaryGraph& g);

struct ClassicalSrg {
    int n = 0;
    int k = 0;
    std::optional<int64_t> lambda;
    std::optional<int64_t> mu;

    bool operator==(const ClassicalSrg&) const = default;
};

/// Classical strong regularity by direct pair counting (open neighborhoods);
/// nullopt when degree or a common-neighbor count is not constant.
std::optional<ClassicalSrg> verify_classical_srg(const ClassicalGraph& c);

/// Number of connected components.
int component_count(const ClassicalGraph& c);

/// Recovers the invertible alternating matrix M with N(<x>) = {y : x M y^T = 0}
/// from a graph whose neighborhoods form a symplectic polarity. Throws
/// Errc::not_polarity when some neighborhood is not a hyperplane, and
/// Errc::not_symplectic when no consistent alternating form exists.
Matrix recover_alternating_form(const QaryGraph& g);

/// Metrics of the bipartite point/edge incidence graph.
struct IncidenceMetrics {
    std::optional<int64_t> point_degree; // constant edges-per-point, if constant
    bool edge_degree_is_q_plus_1 = false;
    std::optional<int> girth;    // nullopt = infinite (acyclic)
    std::optional<int> diameter; // nullopt = infinite (disconnected)
};
IncidenceMetrics incidence_metrics(const QaryGraph& g);

} // namespace qsrg
