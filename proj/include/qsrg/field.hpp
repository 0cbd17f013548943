#pragma once

#include <cstdint>
#include <vector>

namespace qsrg {

/// Element of GF(q), stored as an index in [0, q).
/// For prime fields the index is the residue; for extension fields it is the
/// base-p integer whose little-endian digits are the polynomial coefficients.
using Fe = uint8_t;

/// Table-backed arithmetic of GF(q), q = p^e <= 16.
///
/// Immutable after construction; safe to share across threads. All operations
/// on elements are pure table lookups with range checks.
class FieldSpec {
public:
    /// Prime field GF(p).
    static FieldSpec make(int p);
    /// Extension field GF(p^e) with the built-in default modulus
    /// (x^2+x+1, x^3+x+1, x^2+1, x^4+x+1 for q = 4, 8, 9, 16).
    static FieldSpec make(int p, int e);
    /// Extension field with an explicit modulus: coefficient list over GF(p),
    /// ascending degree, length e+1, monic and irreducible.
    static FieldSpec make(int p, int e, std::vector<int> modulus);
    /// Convenience: GF(q) for a prime power q <= 16, default modulus.
    static FieldSpec of_order(int q);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    /// Empty iff e == 1.
    const std::vector<int>& modulus() const { return modulus_; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe mul(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    /// Throws Errc::division_by_zero for a == 0.
    Fe inv(Fe a) const;

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

private:
    FieldSpec(int p, int e, std::vector<int> modulus);
    void build_tables();
    Fe checked(Fe a) const;

    int p_ = 2;
    int e_ = 1;
    int q_ = 2;
    std::vector<int> modulus_;
    std::vector<Fe> add_, mul_, neg_, inv_;
};

/// Monic + irreducible test for a polynomial over GF(p), coefficients
/// ascending. Used to validate moduli; degree must be >= 1.
bool is_irreducible_monic(int p, const std::vector<int>& coeffs);

} // namespace qsrg
