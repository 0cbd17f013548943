#pragma once

#include <cstdint>

namespace qsrg {

/// q-integer [a]_q = 1 + q + ... + q^(a-1); [a]_1 = a.
/// Counts the 1-subspaces of a vector space of dimension a over a field
/// with q elements. Throws Errc::overflow when the result leaves uint64.
uint64_t bracket(unsigned a, uint64_t q);

/// Number of k-dimensional subspaces of a v-dimensional space over a field
/// with q elements (Gaussian binomial). Exact integer arithmetic, q >= 2.
/// Returns 0 for k > v. Throws Errc::overflow when the result leaves uint64.
uint64_t gaussian(unsigned v, unsigned k, uint64_t q);

} // namespace qsrg
