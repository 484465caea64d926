#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ostro {

using Int = mpz_class;

// Scalar side-values (d, delta, indices) are plain `long` because gmpxx has
// no long long overloads; this code assumes an LP64 target.
static_assert(sizeof(long) == 8, "64-bit long required");

// Floor of the square root of n (n >= 0). The result s always satisfies
// s*s <= n < (s+1)*(s+1); we assert that instead of trusting the backend
// blindly, since several floor/ceil decisions ride on it.
inline Int isqrt(const Int& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt: negative argument");
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    assert(s * s <= n && n < (s + 1) * (s + 1));
    return s;
}

// Floor division a/b for b > 0 (rounds toward minus infinity).
inline Int fdiv(const Int& a, const Int& b) {
    assert(sgn(b) > 0);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool fits_long(const Int& v) { return v.fits_slong_p(); }

inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("to_long: value out of range");
    return v.get_si();
}

// Exact integer square root on uint64, used by the flat kernels where GMP
// would dominate the loop. sqrtl is only a first guess; the fixup makes the
// result exact for every representable input.
inline std::uint64_t isqrt_u64(std::uint64_t x) {
    if (x == 0) return 0;
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (s > 0 && s > x / s) --s;
    while ((s + 1) <= x / (s + 1)) ++s;
    return s;
}

}  // namespace ostro
