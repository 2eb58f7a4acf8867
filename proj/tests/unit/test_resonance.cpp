#include "doctest.h"

#include <cstdlib>

#include "boolprod/resonance.hpp"
#include "oracles.hpp"

using namespace boolprod;

namespace {

// Points of F_p^n avoiding every hyperplane sum_{i in S} x_i = 0, by listing
// all p^n points and all 2^n - 1 subsets.
long brute_complement(int n, long p) {
  long total = 0;
  std::vector<long> x(n, 0);
  long points = 1;
  for (int i = 0; i < n; ++i) points *= p;
  for (long idx = 0; idx < points; ++idx) {
    long rest = idx;
    for (int i = 0; i < n; ++i) {
      x[i] = rest % p;
      rest /= p;
    }
    bool avoids = true;
    for (int s = 1; s < (1 << n) && avoids; ++s) {
      long sum = 0;
      for (int i = 0; i < n; ++i) {
        if (s >> i & 1) sum += x[i];
      }
      avoids = sum % p != 0;
    }
    total += avoids;
  }
  return total;
}

CharPoly poly(std::initializer_list<long> ascending) {
  CharPoly c;
  for (long v : ascending) c.coeffs.emplace_back(v);
  return c;
}

}  // namespace

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(4093));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4095));
  CHECK(prime_is_valid(1, 2));
  CHECK_FALSE(prime_is_valid(5, 5));  // 6^3 / 32 = 6.75
  CHECK(prime_is_valid(5, 7));
  for (int n = 1; n <= 6; ++n) {
    const auto primes = valid_primes(n, n + 2);
    CHECK(primes.size() == static_cast<std::size_t>(n + 2));
    for (auto p : primes) CHECK(prime_is_valid(n, p));
  }
}

TEST_CASE("complement counts") {
  CHECK(complement_count(1, 5) == 4);
  CHECK(complement_count(2, 5) == 12);
  CHECK(complement_count(3, 7) == 96);
  for (int n = 1; n <= 3; ++n) {
    for (auto p : valid_primes(n, 4)) {
      CHECK(complement_count(n, p) == brute_complement(n, static_cast<long>(p)));
    }
  }
  for (auto p : valid_primes(4, 3)) CHECK(complement_count(4, p) == complement_count_naive(4, p));
  for (int n = 1; n <= 5; ++n) {
    for (auto p : valid_primes(n, 3)) CHECK(complement_count(n, p) % (p - 1) == 0);
  }
  CHECK_THROWS_AS(complement_count(2, 9), UsageError);
  CHECK_THROWS_AS(complement_count(5, 5), UsageError);
  CHECK_THROWS_AS(complement_count(7, 11), CapacityError);
}

TEST_CASE("counts are independent of the worker count") {
  const char* saved = std::getenv("BOOLPROD_THREADS");
  const std::string restore = saved ? saved : "";
  setenv("BOOLPROD_THREADS", "1", 1);
  const Integer one = complement_count(5, 101);
  setenv("BOOLPROD_THREADS", "5", 1);
  const Integer five = complement_count(5, 101);
  CHECK(one == five);
  if (saved) setenv("BOOLPROD_THREADS", restore.c_str(), 1);
  else unsetenv("BOOLPROD_THREADS");
}

TEST_CASE("characteristic polynomials") {
  CHECK(charpoly_ff(1) == poly({-1, 1}));
  CHECK(charpoly_ff(2) == poly({2, -3, 1}));
  CHECK(charpoly_ff(3) == poly({-9, 15, -7, 1}));
  CHECK(charpoly_ff(3).to_string() == "t^3 - 7t^2 + 15t - 9");
  CHECK(charpoly_ff(4) == poly({104, -170, 80, -15, 1}));
  for (int n = 1; n <= kMaxMobiusN; ++n) CHECK(charpoly_ff(n) == charpoly_mobius(n));
  CHECK_THROWS_AS(charpoly_mobius(5), CapacityError);
  CHECK_THROWS_AS(charpoly_ff(6), CapacityError);
}

TEST_CASE("finite field polynomial reproduces the counts") {
  for (int n = 1; n <= 4; ++n) {
    const CharPoly chi = charpoly_ff(n);
    for (auto p : valid_primes(n, n + 4)) CHECK(chi.evaluate(Integer(static_cast<unsigned long>(p))) == complement_count(n, p));
  }
}

TEST_CASE("characteristic polynomial invariants") {
  for (int n = 1; n <= 5; ++n) {
    const CharPoly chi = charpoly_ff(n);
    CHECK(chi.degree() == n);
    CHECK(chi.coeffs.back() == 1);
    CHECK(chi.coeffs[n - 1] == -((1 << n) - 1));
    CHECK(chi.evaluate(1) == 0);  // central and essential
    for (int i = 0; i <= n; ++i) {
      const int sign = (n - i) % 2 ? -1 : 1;
      CHECK(sgn(chi.coeffs[i]) == sign);
    }
    CHECK(bounded_regions(chi) == 0);
    CHECK(regions(chi) % 2 == 0);
  }
}

TEST_CASE("region counts") {
  const std::vector<long> expected{2, 6, 32, 370, 11292};
  for (int n = 1; n <= 5; ++n) CHECK(regions(charpoly_ff(n)) == expected[n - 1]);
}
