#include "qsrg/qnum.hpp"

#include "qsrg/errors.hpp"

#include <limits>

namespace qsrg {

namespace {

uint64_t checked_pow(uint64_t q, unsigned n) {
    uint64_t r = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (q != 0 && r > std::numeric_limits<uint64_t>::max() / q)
            throw Error(Errc::overflow, "q^n exceeds 64 bits");
        r *= q;
    }
    return r;
}

} // namespace

uint64_t bracket(unsigned a, uint64_t q) {
    if (q < 1)
        throw Error(Errc::invalid_input, "bracket requires q >= 1");
    uint64_t sum = 0;
    uint64_t pw = 1;
    for (unsigned i = 0; i < a; ++i) {
        if (sum > std::numeric_limits<uint64_t>::max() - pw)
            throw Error(Errc::overflow, "bracket exceeds 64 bits");
        sum += pw;
        if (i + 1 < a) {
            if (q != 0 && pw > std::numeric_limits<uint64_t>::max() / q)
                throw Error(Errc::overflow, "bracket exceeds 64 bits");
            pw *= q;
        }
    }
    return sum;
}

uint64_t gaussian(unsigned v, unsigned k, uint64_t q) {
    if (q < 2)
        throw Error(Errc::invalid_input, "gaussian requires q >= 2");
    if (k > v)
        return 0;
    if (k > v - k)
        k = v - k; // symmetry keeps intermediates small
    // Multiply-then-divide keeps every intermediate an integer:
    // after step i the value is gaussian(v, i+1, q) * (q^(i+1) - 1).
    unsigned __int128 g = 1;
    const unsigned __int128 cap = std::numeric_limits<uint64_t>::max();
    for (unsigned i = 0; i < k; ++i) {
        unsigned __int128 num = checked_pow(q, v - i) - 1;
        unsigned __int128 den = checked_pow(q, i + 1) - 1;
        if (g > (~(unsigned __int128)0) / num)
            throw Error(Errc::overflow, "gaussian exceeds range");
        g = g * num / den;
        if (i + 1 == k && g > cap)
            throw Error(Errc::overflow, "gaussian exceeds 64 bits");
    }
    if (g > cap)
        throw Error(Errc::overflow, "gaussian exceeds 64 bits");
    return static_cast<uint64_t>(g);
}

} // namespace qsrg
