#include "boolprod/numeric.hpp"

#include <limits>

namespace boolprod {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return out;
}

Integer pow2(unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace boolprod
