#include "qsrg/constructions.hpp"

#include "qsrg/errors.hpp"
#include "qsrg/qnum.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace qsrg {

namespace {

// Arithmetic of GF(q^t) over the table-backed GF(q): elements are coefficient
// rows of length t (ascending degree), reduced modulo a monic irreducible.
struct TowerField {
    const FieldSpec& base;
    int t;
    Row modulus; // length t+1, monic

    Row zero() const { return Row(t, 0); }
    Row one() const {
        Row r(t, 0);
        r[0] = 1;
        return r;
    }
    Row from_index(uint64_t idx) const {
        Row r(t, 0);
        for (int i = 0; i < t; ++i) {
            r[i] = static_cast<Fe>(idx % base.q());
            idx /= base.q();
        }
        return r;
    }
    Row mul(const Row& a, const Row& b) const {
        std::vector<Fe> prod(2 * t - 1, 0);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                prod[i + j] = base.add(prod[i + j], base.mul(a[i], b[j]));
        // reduce modulo the monic modulus
        for (int d = 2 * t - 2; d >= t; --d) {
            Fe c = prod[d];
            if (c == 0)
                continue;
            for (int i = 0; i <= t; ++i)
                prod[d - t + i] = base.sub(prod[d - t + i], base.mul(c, modulus[i]));
        }
        return Row(prod.begin(), prod.begin() + t);
    }
};

bool tower_poly_irreducible(const FieldSpec& f, const Row& m) {
    const int deg = static_cast<int>(m.size()) - 1;
    const int q = f.q();
    // trial division by every monic polynomial of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        uint64_t n = 1;
        for (int i = 0; i < d; ++i)
            n *= q;
        for (uint64_t tail = 0; tail < n; ++tail) {
            Row div(d + 1, 0);
            div[d] = 1;
            uint64_t t = tail;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<Fe>(t % q);
                t /= q;
            }
            // remainder of m mod div
            Row rem = m;
            for (int dd = deg; dd >= d; --dd) {
                Fe c = rem[dd];
                if (c == 0)
                    continue;
                for (int i = 0; i <= d; ++i)
                    rem[dd - d + i] = f.sub(rem[dd - d + i], f.mul(c, div[i]));
            }
            if (std::all_of(rem.begin(), rem.begin() + d, [](Fe x) { return x == 0; }))
                return false;
        }
    }
    return true;
}

Row spread_modulus(const FieldSpec& f, int t) {
    // Prefer the built-in modulus of GF(p^t) when the base field is prime and
    // the order is table-supported; its coefficients are GF(p) residues and
    // so valid GF(q) indices.
    if (f.e() == 1 && t >= 2 && t <= 4) {
        int pt = 1;
        for (int i = 0; i < t; ++i)
            pt *= f.p();
        if (pt <= 16) {
            FieldSpec big = FieldSpec::make(f.p(), t);
            Row m(big.modulus().size());
            for (size_t i = 0; i < m.size(); ++i)
                m[i] = static_cast<Fe>(big.modulus()[i]);
            return m;
        }
    }
    // Otherwise the lexicographically smallest monic irreducible of degree t
    // over GF(q), scanning low-order coefficients fastest.
    uint64_t n = 1;
    for (int i = 0; i < t; ++i)
        n *= f.q();
    for (uint64_t tail = 0; tail < n; ++tail) {
        Row m(t + 1, 0);
        m[t] = 1;
        uint64_t x = tail;
        for (int i = 0; i < t; ++i) {
            m[i] = static_cast<Fe>(x % f.q());
            x /= f.q();
        }
        if (tower_poly_irreducible(f, m))
            return m;
    }
    throw Error(Errc::invalid_input, "no irreducible modulus found"); // unreachable
}

} // namespace

QaryGraph complete_graph(const FieldSpec& f, int v, uint64_t budget) {
    if (v < 2)
        throw Error(Errc::invalid_input, "complete graph needs v >= 2");
    return make_graph(f, v, enumerate_subspaces(f, v, 2, budget));
}

SpreadSpec desarguesian_spread(const FieldSpec& f, int v, int t) {
    if (t < 2)
        throw Error(Errc::invalid_input, "spread members need t >= 2");
    if (v < t || v > kMaxAmbientDim)
        throw Error(Errc::invalid_input, "need t <= v <= 12");
    if (v % t != 0)
        throw Error(Errc::not_divisible,
                    std::to_string(t) + " does not divide " + std::to_string(v));
    const int m = v / t;
    TowerField big{f, t, spread_modulus(f, t)};

    // Powers of the generator x give a GF(q)-basis of GF(q^t).
    std::vector<Row> omega(t);
    for (int j = 0; j < t; ++j) {
        omega[j] = big.zero();
        omega[j][j] = 1;
    }

    SpreadSpec s{v, t, {}};
    uint64_t bigq = 1;
    for (int i = 0; i < t; ++i)
        bigq *= f.q();

    // Normalized big-field vectors (pivot component 1, earlier pivots first,
    // tail a big-endian base-Q counter) enumerate the members exactly once.
    for (int pivot = 0; pivot < m; ++pivot) {
        uint64_t tails = 1;
        for (int i = pivot + 1; i < m; ++i)
            tails *= bigq;
        for (uint64_t tail = 0; tail < tails; ++tail) {
            std::vector<Row> u(m, big.zero());
            u[pivot] = big.one();
            uint64_t x = tail;
            for (int i = m - 1; i > pivot; --i) {
                u[i] = big.from_index(x % bigq);
                x /= bigq;
            }
            Matrix basis;
            for (int j = 0; j < t; ++j) {
                Row row(v, 0);
                for (int i = 0; i < m; ++i) {
                    Row prod = big.mul(omega[j], u[i]);
                    for (int c = 0; c < t; ++c)
                        row[i * t + c] = prod[c];
                }
                basis.push_back(std::move(row));
            }
            s.members.push_back(rref_canonical(f, basis, v));
        }
    }
    return s;
}

QaryGraph spread_graph(const FieldSpec& f, const SpreadSpec& s) {
    // re-check the partition invariant
    std::set<int32_t> covered;
    for (const Subspace& member : s.members) {
        if (member.ambient_dim != s.v || member.dim() != s.t)
            throw Error(Errc::invalid_input, "spread member of wrong dimension");
        for (int32_t p : subspace_points(f, member))
            if (!covered.insert(p).second)
                throw Error(Errc::invalid_input, "spread members overlap");
    }
    if (static_cast<int64_t>(covered.size()) != point_count(f, s.v))
        throw Error(Errc::invalid_input, "spread does not cover the point set");

    std::vector<Subspace> edges;
    std::set<Subspace> seen;
    for (const Subspace& member : s.members) {
        auto pts = subspace_points(f, member);
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                Subspace plane = span(f, point_subspace(f, s.v, pts[i]),
                                      point_subspace(f, s.v, pts[j]));
                if (seen.insert(plane).second)
                    edges.push_back(plane);
            }
    }
    return make_graph(f, s.v, edges);
}

Matrix standard_alternating_form(const FieldSpec& f, int v) {
    Matrix m(v, Row(v, 0));
    for (int i = 0; i + 1 < v; i += 2) {
        m[i][i + 1] = 1;
        m[i + 1][i] = f.neg(1);
    }
    return m;
}

Fe bilinear_value(const FieldSpec& f, const Matrix& m, const Row& x, const Row& y) {
    Fe acc = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        Fe dot = 0;
        for (size_t j = 0; j < y.size(); ++j)
            dot = f.add(dot, f.mul(m[i][j], y[j]));
        acc = f.add(acc, f.mul(x[i], dot));
    }
    return acc;
}

QaryGraph symplectic_graph(const FieldSpec& f, int v) {
    if (v % 2 != 0)
        throw Error(Errc::odd_dimension, "symplectic graphs need even v");
    if (v < 4)
        throw Error(Errc::invalid_input, "symplectic graphs need v >= 4");
    Matrix form = standard_alternating_form(f, v);
    std::vector<Subspace> edges;
    // For an alternating form, isotropy of the two basis rows makes the whole
    // plane totally isotropic.
    for (const Subspace& plane : enumerate_subspaces(f, v, 2))
        if (bilinear_value(f, form, plane.basis[0], plane.basis[1]) == 0)
            edges.push_back(plane);
    return make_graph(f, v, edges);
}

} // namespace qsrg
