#pragma once

#include "qsrg/field.hpp"
#include "qsrg/subspace.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qsrg {

/// An edge is the sorted list of the q+1 point indices of a 2-subspace.
using Edge = std::vector<int32_t>;

/// q-ary graph: vertex set is all 1-subspaces of F_q^v (implicit), edge set
/// a set of 2-subspaces stored as sorted point-index lists, lexicographically
/// ordered.
struct QaryGraph {
    FieldSpec field;
    int v = 0;
    std::vector<Edge> edges;

    int64_t vertex_count() const { return point_count(field, v); }
};

/// Strong-regularity parameters. lambda is undefined iff no two vertices are
/// adjacent; mu is undefined iff all are (complete graph).
struct SrgParams {
    int v = 0;
    int k = 0;
    std::optional<int64_t> lambda;
    std::optional<int64_t> mu;
    int q = 0;

    bool operator==(const SrgParams&) const = default;
};

/// Graph with edges given as subspaces; converts and sorts.
QaryGraph make_graph(const FieldSpec& f, int v, const std::vector<Subspace>& edge_subspaces);

/// The 2-subspace of an edge (span of its first two points).
Subspace edge_subspace(const QaryGraph& g, const Edge& e);

/// Checks that every edge is a genuine 2-subspace (point list closed under
/// span) and that edges are pairwise distinct. Throws Errc::invalid_edge /
/// Errc::duplicate_edge.
void validate_graph(const QaryGraph& g);

/// Closed neighborhood of x as a subspace: the span of x and all edges
/// through x. For an isolated vertex this is the 1-subspace x itself.
Subspace neighborhood(const QaryGraph& g, int32_t x);

/// Regularity degree k if every vertex's closed neighborhood, as a point
/// set, is exactly a (k+1)-subspace with one k for all vertices; nullopt
/// otherwise. k = 0 iff the edge set is empty.
std::optional<int> is_regular(const QaryGraph& g);

/// SRG parameters if the common-neighbor count |(N(X) ∩ N(Y)) \ {X,Y}| is a
/// constant lambda over adjacent pairs and a constant mu over non-adjacent
/// pairs; nullopt when the graph is regular but not strongly regular.
/// Requires is_regular to succeed (throws Errc::invalid_input otherwise).
std::optional<SrgParams> srg_parameters(const QaryGraph& g);

/// Image of g under an invertible coordinate change (basis rows mapped by a).
QaryGraph apply_coordinate_change(const QaryGraph& g, const Matrix& a);

/// Closed-neighborhood point sets of every vertex, as bitsets over the point
/// universe. Shared by the verifiers and by analysis.
std::vector<Bitset> neighborhood_point_sets(const QaryGraph& g);

} // namespace qsrg
