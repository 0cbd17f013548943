#pragma once

#include "qsrg/graph.hpp"

namespace qsrg {

/// A t-spread: t-dim subspaces partitioning the points of F_q^v.
struct SpreadSpec {
    int v = 0;
    int t = 0;
    std::vector<Subspace> members;
};

/// Complete q-ary graph: every 2-subspace is an edge.
QaryGraph complete_graph(const FieldSpec& f, int v, uint64_t budget = kDefaultEnumBudget);

/// Field-reduction (Desarguesian) spread: identify F_q^v with F_{q^t}^{v/t};
/// the members are the GF(q)-subspaces underlying the big-field 1-subspaces.
/// Throws Errc::not_divisible when t does not divide v.
SpreadSpec desarguesian_spread(const FieldSpec& f, int v, int t);

/// Edges are all 2-subspaces contained in a spread member; the result lies in
/// SRG(v, t-1, [t]_q - 2, 0; q).
QaryGraph spread_graph(const FieldSpec& f, const SpreadSpec& s);

/// Matrix of the standard alternating form: v/2 diagonal blocks [[0,1],[-1,0]].
Matrix standard_alternating_form(const FieldSpec& f, int v);

/// Edges are the totally isotropic 2-subspaces of the standard alternating
/// form; the result lies in SRG(v, v-2, mu-2, mu; q) with mu = [v-2]_q.
/// Throws Errc::odd_dimension for odd v.
QaryGraph symplectic_graph(const FieldSpec& f, int v);

/// Bilinear form value x^T M y.
Fe bilinear_value(const FieldSpec& f, const Matrix& m, const Row& x, const Row& y);

} // namespace qsrg
