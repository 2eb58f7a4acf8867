#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boolprod/numeric.hpp"

namespace boolprod {

/// Integer polynomial in t; coeffs[i] is the coefficient of t^i.
struct CharPoly {
  std::vector<Integer> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  Integer evaluate(const Integer& t) const;
  /// "t^3 - 7t^2 + 15t - 9".
  std::string to_string() const;
  bool operator==(const CharPoly&) const = default;
};

bool is_prime(std::uint64_t p);

/// p exceeds (n+1)^{(n+1)/2} / 2^n, the largest determinant of an n x n 0/1
/// matrix, so no nonzero minor of the arrangement vanishes mod p.
bool prime_is_valid(int n, std::uint64_t p);

/// Smallest `count` valid primes for dimension n, ascending.
std::vector<std::uint64_t> valid_primes(int n, std::size_t count);

inline constexpr int kMaxCountN = 6;

/// #{v in F_p^n : sum_{i in S} v_i != 0 mod p for every nonempty S}. Uses
/// worker_count() threads over contiguous shards of the second coordinate.
Integer complement_count(int n, std::uint64_t p);

/// Same count by direct enumeration over all p^n points; test oracle for the
/// kernel on tiny inputs. Skips the prime and validity checks.
Integer complement_count_naive(int n, std::uint64_t p);

inline constexpr int kMaxFiniteFieldN = 5;

/// chi_n interpolated through n+1 valid primes and confirmed at one holdout
/// prime. n = 6 requires allow_long.
CharPoly charpoly_ff(int n, bool allow_long = false);

inline constexpr int kMaxMobiusN = 4;

/// chi_n = sum over flats x of mu(0, x) t^{n - rank x}, from the lattice of
/// flats of the 2^n - 1 subset-sum normals.
CharPoly charpoly_mobius(int n);

/// (-1)^n chi(-1).
Integer regions(const CharPoly& chi);
/// (-1)^n chi(1).
Integer bounded_regions(const CharPoly& chi);

}  // namespace boolprod
