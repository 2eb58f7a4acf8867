#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace boolprod {

using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, k) as an arbitrary-precision integer; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// C(n, k) with saturation at UINT64_MAX, for capacity estimates.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

Integer factorial(long n);

Integer pow2(unsigned long e);

}  // namespace boolprod
