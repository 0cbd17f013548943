#include "qsrg/subspace.hpp"

#include "qsrg/errors.hpp"
#include "qsrg/qnum.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace qsrg {

namespace {

void check_ambient(int v) {
    if (v < 0 || v > kMaxAmbientDim)
        throw Error(Errc::invalid_input,
                    "ambient dimension must be in [0, " + std::to_string(kMaxAmbientDim) + "]");
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref_in_place(const FieldSpec& f, Matrix& m, int v) {
    std::vector<int> pivots;
    size_t row = 0;
    for (int col = 0; col < v && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        Fe piv_inv = f.inv(m[row][col]);
        for (int j = col; j < v; ++j)
            m[row][j] = f.mul(m[row][j], piv_inv);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            Fe c = m[i][col];
            for (int j = col; j < v; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(c, m[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row); // drop zero rows
    return pivots;
}

} // namespace

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
    if (auto c = ambient_dim <=> o.ambient_dim; c != 0)
        return c;
    if (auto c = dim() <=> o.dim(); c != 0)
        return c;
    for (int i = 0; i < dim(); ++i)
        if (auto c = basis[i] <=> o.basis[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

Subspace rref_canonical(const FieldSpec& f, const Matrix& rows, int ambient_dim) {
    check_ambient(ambient_dim);
    for (const Row& r : rows)
        if (static_cast<int>(r.size()) != ambient_dim)
            throw Error(Errc::invalid_input, "ragged input rows");
    Matrix m = rows;
    rref_in_place(f, m, ambient_dim);
    return Subspace{ambient_dim, std::move(m)};
}

Subspace span(const FieldSpec& f, const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw Error(Errc::ambient_mismatch, "span of subspaces of different ambient spaces");
    Matrix m = a.basis;
    m.insert(m.end(), b.basis.begin(), b.basis.end());
    return rref_canonical(f, m, a.ambient_dim);
}

Subspace intersect(const FieldSpec& f, const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw Error(Errc::ambient_mismatch, "intersection of subspaces of different ambient spaces");
    const int v = a.ambient_dim;
    // Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry an
    // intersection basis in the right half.
    Matrix m;
    for (const Row& r : a.basis) {
        Row w(2 * v, 0);
        std::copy(r.begin(), r.end(), w.begin());
        std::copy(r.begin(), r.end(), w.begin() + v);
        m.push_back(std::move(w));
    }
    for (const Row& r : b.basis) {
        Row w(2 * v, 0);
        std::copy(r.begin(), r.end(), w.begin());
        m.push_back(std::move(w));
    }
    rref_in_place(f, m, 2 * v);
    Matrix inter;
    for (const Row& w : m) {
        bool left_zero = std::all_of(w.begin(), w.begin() + v, [](Fe x) { return x == 0; });
        if (left_zero)
            inter.emplace_back(w.begin() + v, w.end());
    }
    return rref_canonical(f, inter, v);
}

bool contains(const FieldSpec& f, const Subspace& outer, const Subspace& inner) {
    if (outer.ambient_dim != inner.ambient_dim)
        throw Error(Errc::ambient_mismatch, "containment across ambient spaces");
    return span(f, outer, inner).dim() == outer.dim();
}

std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, int v, int k, uint64_t budget) {
    check_ambient(v);
    if (k < 0 || k > v)
        throw Error(Errc::invalid_input, "need 0 <= k <= v");
    uint64_t total;
    try {
        total = (k == 0) ? 1 : gaussian(v, k, f.q());
    } catch (const Error& e) {
        if (e.code() == Errc::overflow)
            throw Error(Errc::budget_exceeded, "subspace count exceeds budget");
        throw;
    }
    if (total > budget)
        throw Error(Errc::budget_exceeded, "subspace count " + std::to_string(total) +
                                               " exceeds budget " + std::to_string(budget));
    std::vector<Subspace> out;
    out.reserve(total);
    if (k == 0) {
        out.push_back(Subspace{v, {}});
        return out;
    }

    // Walk pivot-column combinations; free entries sit right of each pivot in
    // non-pivot columns. Every RREF matrix arises exactly once.
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i)
        pivots[i] = i;
    const int q = f.q();
    while (true) {
        std::vector<std::pair<int, int>> free_pos; // (row, col)
        std::vector<bool> is_pivot(v, false);
        for (int c : pivots)
            is_pivot[c] = true;
        for (int r = 0; r < k; ++r)
            for (int c = pivots[r] + 1; c < v; ++c)
                if (!is_pivot[c])
                    free_pos.emplace_back(r, c);

        Matrix m(k, Row(v, 0));
        for (int r = 0; r < k; ++r)
            m[r][pivots[r]] = 1;
        // Mixed-radix counter over the free positions.
        std::vector<Fe> vals(free_pos.size(), 0);
        while (true) {
            for (size_t i = 0; i < free_pos.size(); ++i)
                m[free_pos[i].first][free_pos[i].second] = vals[i];
            out.push_back(Subspace{v, m});
            size_t i = 0;
            while (i < vals.size() && vals[i] == q - 1)
                vals[i++] = 0;
            if (i == vals.size())
                break;
            ++vals[i];
        }

        // next pivot combination
        int i = k - 1;
        while (i >= 0 && pivots[i] == v - k + i)
            --i;
        if (i < 0)
            break;
        ++pivots[i];
        for (int j = i + 1; j < k; ++j)
            pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int64_t point_count(const FieldSpec& f, int v) {
    check_ambient(v);
    return static_cast<int64_t>(bracket(v, f.q()));
}

int32_t point_index_of_vector(const FieldSpec& f, const Row& vec) {
    const int v = static_cast<int>(vec.size());
    check_ambient(v);
    int lead = -1;
    for (int i = 0; i < v; ++i)
        if (vec[i] != 0) {
            lead = i;
            break;
        }
    if (lead < 0)
        throw Error(Errc::not_a_point, "zero vector does not label a point");
    // Normalize so the leading coordinate is 1.
    Fe s = f.inv(vec[lead]);
    const uint64_t q = f.q();
    // Points with an earlier leading coordinate come first; within a leading
    // position the tail is read as a big-endian base-q number.
    uint64_t base = 0;
    for (int j = 0; j < lead; ++j) {
        uint64_t group = 1;
        for (int t = j + 1; t < v; ++t)
            group *= q;
        base += group;
    }
    uint64_t tail = 0;
    for (int j = lead + 1; j < v; ++j)
        tail = tail * q + f.mul(vec[j], s);
    return static_cast<int32_t>(base + tail);
}

int32_t point_index(const FieldSpec& f, const Subspace& s) {
    if (s.dim() != 1)
        throw Error(Errc::not_a_point, "subspace of dimension " + std::to_string(s.dim()));
    return point_index_of_vector(f, s.basis[0]);
}

Row point_vector(const FieldSpec& f, int v, int32_t index) {
    check_ambient(v);
    if (index < 0 || index >= point_count(f, v))
        throw Error(Errc::invalid_index, "point index out of range");
    const uint64_t q = f.q();
    uint64_t rest = index;
    int lead = 0;
    for (;; ++lead) {
        uint64_t group = 1;
        for (int t = lead + 1; t < v; ++t)
            group *= q;
        if (rest < group)
            break;
        rest -= group;
    }
    Row vec(v, 0);
    vec[lead] = 1;
    for (int j = v - 1; j > lead; --j) {
        vec[j] = static_cast<Fe>(rest % q);
        rest /= q;
    }
    return vec;
}

Subspace point_subspace(const FieldSpec& f, int v, int32_t index) {
    return Subspace{v, {point_vector(f, v, index)}};
}

std::vector<int32_t> subspace_points(const FieldSpec& f, const Subspace& s) {
    const int d = s.dim();
    const int v = s.ambient_dim;
    std::vector<int32_t> pts;
    if (d == 0)
        return pts;
    pts.reserve(bracket(d, f.q()));
    // Normalized coefficient tuples over F_q^d enumerate the points of s
    // exactly once.
    const int64_t n = point_count(f, d);
    for (int32_t c = 0; c < n; ++c) {
        Row coef = point_vector(f, d, c);
        Row vec(v, 0);
        for (int i = 0; i < d; ++i) {
            if (coef[i] == 0)
                continue;
            for (int j = 0; j < v; ++j)
                vec[j] = f.add(vec[j], f.mul(coef[i], s.basis[i][j]));
        }
        pts.push_back(point_index_of_vector(f, vec));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

Matrix mat_identity(int n) {
    Matrix m(n, Row(n, 0));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

Matrix mat_mul(const FieldSpec& f, const Matrix& a, const Matrix& b) {
    const int n = static_cast<int>(a.size());
    const int k = static_cast<int>(b.size());
    const int m = k > 0 ? static_cast<int>(b[0].size()) : 0;
    Matrix r(n, Row(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0)
                continue;
            for (int j = 0; j < m; ++j)
                r[i][j] = f.add(r[i][j], f.mul(a[i][t], b[t][j]));
        }
    return r;
}

Matrix mat_transpose(const Matrix& a) {
    if (a.empty())
        return {};
    Matrix r(a[0].size(), Row(a.size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j)
            r[j][i] = a[i][j];
    return r;
}

int mat_rank(const FieldSpec& f, Matrix a) {
    if (a.empty())
        return 0;
    return static_cast<int>(rref_in_place(f, a, static_cast<int>(a[0].size())).size());
}

Matrix mat_inverse(const FieldSpec& f, const Matrix& a) {
    const int n = static_cast<int>(a.size());
    Matrix aug(n, Row(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][n + i] = 1;
    }
    auto pivots = rref_in_place(f, aug, 2 * n);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw Error(Errc::invalid_input, "matrix is singular");
    Matrix inv(n, Row(n, 0));
    for (int i = 0; i < n; ++i)
        std::copy(aug[i].begin() + n, aug[i].end(), inv[i].begin());
    return inv;
}

int Bitset::count() const {
    int c = 0;
    for (uint64_t w : w_)
        c += std::popcount(w);
    return c;
}

int Bitset::count_and(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i)
        c += std::popcount(w_[i] & o.w_[i]);
    return c;
}

bool Bitset::subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i])
            return false;
    return true;
}

} // namespace qsrg
