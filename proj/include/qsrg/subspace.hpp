#pragma once

#include "qsrg/field.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace qsrg {

using Row = std::vector<Fe>;
using Matrix = std::vector<Row>;

constexpr int kMaxAmbientDim = 12;
constexpr uint64_t kDefaultEnumBudget = uint64_t(1) << 24;

/// Subspace of F_q^v in canonical reduced-echelon form: leading entries 1,
/// pivot columns strictly increasing, zeros above and below pivots.
/// Two values are equal iff their basis matrices are identical.
struct Subspace {
    int ambient_dim = 0;
    Matrix basis; // RREF, full row rank

    int dim() const { return static_cast<int>(basis.size()); }
    bool operator==(const Subspace&) const = default;
    // Order: ambient, then dim, then row-major lexicographic on entries.
    std::strong_ordering operator<=>(const Subspace& o) const;
};

/// Canonical subspace spanned by the given rows (each of length v).
/// Idempotent and independent of row order.
Subspace rref_canonical(const FieldSpec& f, const Matrix& rows, int ambient_dim);

/// Canonical sum a + b. Throws Errc::ambient_mismatch.
Subspace span(const FieldSpec& f, const Subspace& a, const Subspace& b);

/// Canonical intersection, by the Zassenhaus stacked-basis method.
Subspace intersect(const FieldSpec& f, const Subspace& a, const Subspace& b);

/// True iff inner is contained in outer.
bool contains(const FieldSpec& f, const Subspace& outer, const Subspace& inner);

/// All k-subspaces of F_q^v, sorted by row-major lexicographic comparison of
/// the canonical basis matrices. Throws Errc::budget_exceeded when the count
/// exceeds the budget.
std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, int v, int k,
                                          uint64_t budget = kDefaultEnumBudget);

/// Point labels: a 1-subspace is represented by its normalized vector
/// (leftmost nonzero coordinate 1). Points are ordered by the position of
/// the leading coordinate, then lexicographically by the coordinate tuple,
/// so <(1,0,...,0)> is point 0.
int64_t point_count(const FieldSpec& f, int v);
int32_t point_index(const FieldSpec& f, const Subspace& s); // dim-1 only
int32_t point_index_of_vector(const FieldSpec& f, const Row& nonzero);
Row point_vector(const FieldSpec& f, int v, int32_t index);
Subspace point_subspace(const FieldSpec& f, int v, int32_t index);

/// Sorted point indices of all 1-subspaces contained in s.
std::vector<int32_t> subspace_points(const FieldSpec& f, const Subspace& s);

// Small dense matrix helpers over GF(q).
Matrix mat_identity(int n);
Matrix mat_mul(const FieldSpec& f, const Matrix& a, const Matrix& b);
Matrix mat_transpose(const Matrix& a);
int mat_rank(const FieldSpec& f, Matrix a);
/// Inverse of a square matrix; throws Errc::invalid_input when singular.
Matrix mat_inverse(const FieldSpec& f, const Matrix& a);

/// Fixed-universe bitset used for point sets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    int count() const;
    int count_and(const Bitset& o) const;
    bool operator==(const Bitset&) const = default;
    /// True iff every set bit of this is set in o.
    bool subset_of(const Bitset& o) const;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace qsrg
