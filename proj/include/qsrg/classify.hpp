#pragma once

#include "qsrg/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qsrg {

constexpr uint64_t kDefaultNodeBudget = uint64_t(1) << 32;

/// Search parameters for the exhaustive enumeration. The search variable is
/// the neighborhood map: each vertex, in point-index order, is assigned a
/// (k+1)-subspace through it, with membership symmetry and (in SRG mode) the
/// pairwise intersection counts propagated to every undecided vertex.
struct SearchConfig {
    int v = 4;
    int k = 1;
    std::optional<int64_t> lambda; // both set = SRG search
    std::optional<int64_t> mu;
    /// Fix the first vertex's neighborhood to the first candidate and scale
    /// counts by the number of (k+1)-subspaces through a point. Exact because
    /// the general linear group is transitive on incident
    /// (point, (k+1)-subspace) pairs.
    bool symmetry_fixing = false;
    /// In SRG mode, reject (lambda, mu) failing the parameter identity or the
    /// projective count decomposition without searching. Tests disable this
    /// to cross-check that rejected tuples really yield nothing.
    bool apply_prefilters = true;
    uint64_t node_budget = kDefaultNodeBudget;
    int workers = 1;
    /// Depth at which the tree is split into independent subtree tasks.
    int split_depth = 2;
};

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t prunes = 0;
    bool complete = true;
    uint64_t count_multiplier = 1; // > 1 under symmetry fixing
    double wall_seconds = 0.0;
};

/// Every k-regular q-ary graph on F_q^v, sorted by edge-list lexicographic
/// order. Every yielded graph is re-verified with the independent qgraph
/// verifiers. An exhausted node budget sets stats->complete = false and the
/// partial results are returned.
std::vector<QaryGraph> enumerate_regular(const FieldSpec& f, const SearchConfig& cfg,
                                         SearchStats* stats = nullptr);

/// The members of enumerate_regular whose srg parameters equal the targets
/// (an undefined actual parameter matches any target, as for the complete
/// graph's mu).
std::vector<QaryGraph> enumerate_srg(const FieldSpec& f, const SearchConfig& cfg,
                                     SearchStats* stats = nullptr);

enum class Family { spread_union, symplectic, other };

/// Structural family test: SPREAD_UNION when the distinct neighborhoods
/// partition the point set, else SYMPLECTIC when an alternating form is
/// recovered, else OTHER.
Family classify_family(const QaryGraph& g);

struct TupleReport {
    int k = 0;
    int64_t lambda = 0;
    int64_t mu = 0;
    uint64_t count = 0;
    uint64_t spread_union = 0;
    uint64_t symplectic = 0;
    uint64_t other = 0;
    uint64_t nodes = 0;
    bool complete = true;
};

struct ClassificationReport {
    int v = 0;
    int q = 0;
    std::vector<TupleReport> tuples;
};

/// The (lambda, mu) tuples surviving the three-family parameter split for a
/// k-regular graph on F_q^v: spread-union parameters, the k = v-2 symplectic
/// parameters, and the sporadic (5, 2, q-1, 1).
std::vector<std::pair<int64_t, int64_t>> admissible_tuples(int v, int k, int64_t q);

/// Runs enumerate_srg over every admissible tuple for k = 1..v-1 and tags
/// each resulting graph by family.
ClassificationReport classify_report(const FieldSpec& f, int v, const SearchConfig& budgets);

} // namespace qsrg
