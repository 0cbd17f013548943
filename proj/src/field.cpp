#include "qsrg/field.hpp"

#include "qsrg/errors.hpp"

#include <algorithm>
#include <string>

namespace qsrg {

namespace {

constexpr int kMaxOrder = 16;
constexpr int kMaxDegree = 4;

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

// Polynomials over GF(p) as coefficient vectors, ascending degree,
// no trailing zeros (zero polynomial = empty vector).
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

Poly poly_mul(int p, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(r);
}

// Remainder of a mod m, m monic.
Poly poly_mod(int p, Poly a, const Poly& m) {
    a = trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int da = static_cast<int>(a.size()) - 1;
        int c = a.back();
        for (int i = 0; i <= dm; ++i) {
            int idx = da - dm + i;
            a[idx] = ((a[idx] - c * m[i]) % p + p) % p;
        }
        a = trim(a);
        if (a.empty())
            break;
    }
    return a;
}

std::vector<int> default_modulus(int p, int e) {
    // x^2+x+1, x^3+x+1, x^2+1, x^4+x+1 for GF(4), GF(8), GF(9), GF(16).
    if (p == 2 && e == 2)
        return {1, 1, 1};
    if (p == 2 && e == 3)
        return {1, 1, 0, 1};
    if (p == 3 && e == 2)
        return {1, 0, 1};
    if (p == 2 && e == 4)
        return {1, 1, 0, 0, 1};
    throw Error(Errc::invalid_input,
                "no built-in modulus for GF(" + std::to_string(ipow(p, e)) + ")");
}

} // namespace

bool is_irreducible_monic(int p, const std::vector<int>& coeffs) {
    Poly m = coeffs;
    if (m.size() < 2 || m.back() != 1)
        return false;
    for (int c : m)
        if (c < 0 || c >= p)
            return false;
    const int deg = static_cast<int>(m.size()) - 1;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        for (int tail = 0; tail < ipow(p, d); ++tail) {
            Poly f(d + 1, 0);
            f[d] = 1;
            int t = tail;
            for (int i = 0; i < d; ++i) {
                f[i] = t % p;
                t /= p;
            }
            if (poly_mod(p, m, f).empty())
                return false;
        }
    }
    return true;
}

FieldSpec FieldSpec::make(int p) { return make(p, 1, {}); }

FieldSpec FieldSpec::make(int p, int e) {
    if (e == 1)
        return make(p, 1, {});
    return make(p, e, default_modulus(p, e));
}

FieldSpec FieldSpec::make(int p, int e, std::vector<int> modulus) {
    return FieldSpec(p, e, std::move(modulus));
}

FieldSpec FieldSpec::of_order(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p))
            continue;
        int e = 0, t = q;
        while (t % p == 0) {
            t /= p;
            ++e;
        }
        if (t == 1 && e >= 1)
            return make(p, e);
    }
    throw Error(Errc::invalid_input, std::to_string(q) + " is not a prime power");
}

FieldSpec::FieldSpec(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (!is_prime(p_))
        throw Error(Errc::invalid_input, "characteristic must be prime");
    if (e_ < 1 || e_ > kMaxDegree)
        throw Error(Errc::invalid_input, "extension degree must be in [1, 4]");
    q_ = ipow(p_, e_);
    if (q_ > kMaxOrder)
        throw Error(Errc::invalid_input, "field order must be <= 16");
    if (e_ == 1) {
        if (!modulus_.empty())
            throw Error(Errc::invalid_input, "prime field takes no modulus");
    } else {
        if (static_cast<int>(modulus_.size()) != e_ + 1)
            throw Error(Errc::invalid_input, "modulus must have length e+1");
        if (!is_irreducible_monic(p_, modulus_))
            throw Error(Errc::invalid_input, "modulus must be monic and irreducible");
    }
    build_tables();
}

void FieldSpec::build_tables() {
    const int q = q_;
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);

    auto digits = [&](int x) {
        Poly d;
        while (x > 0) {
            d.push_back(x % p_);
            x /= p_;
        }
        return d;
    };
    auto index_of = [&](const Poly& d) {
        int x = 0;
        for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
            x = x * p_ + d[i];
        return x;
    };

    for (int a = 0; a < q; ++a) {
        Poly da = digits(a);
        Poly na(da.size());
        for (size_t i = 0; i < da.size(); ++i)
            na[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<Fe>(index_of(trim(na)));
        for (int b = 0; b < q; ++b) {
            Poly db = digits(b);
            Poly s(std::max(da.size(), db.size()), 0);
            for (size_t i = 0; i < s.size(); ++i) {
                int x = (i < da.size() ? da[i] : 0) + (i < db.size() ? db[i] : 0);
                s[i] = x % p_;
            }
            add_[a * q + b] = static_cast<Fe>(index_of(trim(s)));
            Poly m = poly_mul(p_, da, db);
            if (e_ > 1)
                m = poly_mod(p_, m, modulus_);
            mul_[a * q + b] = static_cast<Fe>(index_of(m));
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) {
                inv_[a] = static_cast<Fe>(b);
                break;
            }
}

Fe FieldSpec::checked(Fe a) const {
    if (a >= q_)
        throw Error(Errc::invalid_element, "element index out of range");
    return a;
}

Fe FieldSpec::add(Fe a, Fe b) const { return add_[checked(a) * q_ + checked(b)]; }

Fe FieldSpec::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe FieldSpec::mul(Fe a, Fe b) const { return mul_[checked(a) * q_ + checked(b)]; }

Fe FieldSpec::neg(Fe a) const { return neg_[checked(a)]; }

Fe FieldSpec::inv(Fe a) const {
    if (checked(a) == 0)
        throw Error(Errc::division_by_zero, "zero has no inverse");
    return inv_[a];
}

} // namespace qsrg
