#include "boolprod/resonance.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "boolprod/errors.hpp"
#include "boolprod/parallel.hpp"

namespace boolprod {

Integer CharPoly::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string CharPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs[i];
    if (c == 0) continue;
    const Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1 || i == 0) out << magnitude.get_str();
    if (i >= 1) out << 't';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return first ? "0" : out.str();
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool prime_is_valid(int n, std::uint64_t p) {
  // p > (n+1)^{(n+1)/2} / 2^n  <=>  p^2 * 4^n > (n+1)^{n+1}.
  Integer lhs = Integer(p) * Integer(p);
  lhs <<= 2 * n;
  Integer rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n + 1));
  return lhs > rhs;
}

std::vector<std::uint64_t> valid_primes(int n, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; out.size() < count; ++p) {
    if (is_prime(p) && prime_is_valid(n, p)) out.push_back(p);
  }
  return out;
}

namespace {

constexpr std::uint64_t kMaxPrime = 4093;
constexpr double kMaxPoints = 5e10;

// Residue set over Z_p as a p-bit mask in W 64-bit words.
template <std::size_t W>
struct ResidueMask {
  std::array<std::uint64_t, W> words{};

  bool test(std::uint64_t r) const { return (words[r >> 6] >> (r & 63)) & 1u; }
  void set(std::uint64_t r) { words[r >> 6] |= std::uint64_t{1} << (r & 63); }
  int count() const {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }
};

// { s + shift mod p : s in mask } for 0 < shift < p.
template <std::size_t W>
ResidueMask<W> rotate(const ResidueMask<W>& mask, std::uint64_t shift, std::uint64_t p) {
  ResidueMask<W> out;
  if constexpr (W == 1) {
    const std::uint64_t full = p == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1;
    const std::uint64_t w = mask.words[0];
    out.words[0] = ((w << shift) | (w >> (p - shift))) & full;
  } else {
    // Bits r < p - shift move up by shift; bits r >= p - shift wrap down by
    // p - shift. The mask never holds bits at or above p.
    const std::uint64_t up = shift;
    const std::uint64_t down = p - shift;
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t v = 0;
      if (i >= (up >> 6)) {
        const std::size_t src_up = i - (up >> 6);
        v |= mask.words[src_up] << (up & 63);
        if ((up & 63) && src_up > 0) v |= mask.words[src_up - 1] >> (64 - (up & 63));
      }
      const std::size_t src_down = i + (down >> 6);
      if (src_down < W) {
        v |= mask.words[src_down] >> (down & 63);
        if ((down & 63) && src_down + 1 < W) v |= mask.words[src_down + 1] << (64 - (down & 63));
      }
      out.words[i] = v;
    }
    for (std::uint64_t r = p; r < W * 64; ++r) out.words[r >> 6] &= ~(std::uint64_t{1} << (r & 63));
  }
  return out;
}

// Counts extensions of a prefix whose nonempty subset sums are exactly `mask`
// (never containing 0) by coordinates depth..n-1, each in 1..p-1.
template <std::size_t W>
std::uint64_t extend(const ResidueMask<W>& mask, int depth, int n, std::uint64_t p) {
  // Last coordinate v is admissible iff p - v is not a subset sum; v -> p - v
  // permutes 1..p-1, so the admissible count is p - 1 - |mask|.
  if (depth == n - 1) return p - 1 - static_cast<std::uint64_t>(mask.count());
  std::uint64_t total = 0;
  for (std::uint64_t v = 1; v < p; ++v) {
    if (mask.test(p - v)) continue;
    ResidueMask<W> next = rotate(mask, v, p);
    for (std::size_t i = 0; i < W; ++i) next.words[i] |= mask.words[i];
    next.set(v);
    total += extend(next, depth + 1, n, p);
  }
  return total;
}

template <std::size_t W>
std::uint64_t count_normalized(int n, std::uint64_t p) {
  // v_1 = 1. Every point of the complement has all coordinates nonzero, so
  // scaling by v_1^{-1} is a bijection onto these (p - 1)-fold fewer points.
  ResidueMask<W> first;
  first.set(1);
  if (n == 1) return 1;
  if (n == 2) return extend(first, 1, n, p);

  const int workers = std::max(1, std::min<int>(worker_count(), static_cast<int>(p - 1)));
  std::vector<std::uint64_t> partial(workers, 0);
  auto shard = [&](int w) {
    // Contiguous range of the second coordinate.
    const std::uint64_t lo = 1 + (p - 1) * w / workers;
    const std::uint64_t hi = 1 + (p - 1) * (w + 1) / workers;
    std::uint64_t sum = 0;
    for (std::uint64_t v = lo; v < hi; ++v) {
      if (first.test(p - v)) continue;
      ResidueMask<W> next = rotate(first, v, p);
      for (std::size_t i = 0; i < W; ++i) next.words[i] |= first.words[i];
      next.set(v);
      sum += extend(next, 2, n, p);
    }
    partial[w] = sum;
  };
  if (workers == 1) {
    shard(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(shard, w);
    for (auto& t : threads) t.join();
  }
  std::uint64_t total = 0;
  for (std::uint64_t s : partial) total += s;
  return total;
}

std::uint64_t dispatch_count(int n, std::uint64_t p) {
  if (p <= 64) return count_normalized<1>(n, p);
  if (p <= 128) return count_normalized<2>(n, p);
  if (p <= 256) return count_normalized<4>(n, p);
  if (p <= 512) return count_normalized<8>(n, p);
  if (p <= 1024) return count_normalized<16>(n, p);
  if (p <= 2048) return count_normalized<32>(n, p);
  return count_normalized<64>(n, p);
}

}  // namespace

Integer complement_count(int n, std::uint64_t p) {
  if (n < 1) throw UsageError("n must be positive, got " + std::to_string(n));
  if (n > kMaxCountN) {
    throw CapacityError("complement_count supports n <= " + std::to_string(kMaxCountN) + ", got " +
                        std::to_string(n));
  }
  if (!is_prime(p)) throw UsageError("p = " + std::to_string(p) + " is not prime");
  if (!prime_is_valid(n, p)) {
    const double bound = std::pow(n + 1.0, (n + 1.0) / 2.0) / std::ldexp(1.0, n);
    std::ostringstream msg;
    msg << "p = " << p << " does not exceed the validity bound (n+1)^((n+1)/2)/2^n = " << bound
        << " for n = " << n;
    throw UsageError(msg.str());
  }
  if (p > kMaxPrime || std::pow(static_cast<double>(p), n - 1) > kMaxPoints) {
    throw CapacityError("complement_count(" + std::to_string(n) + ", " + std::to_string(p) +
                        ") exceeds the enumeration limit");
  }
  return Integer(p - 1) * Integer(dispatch_count(n, p));
}

Integer complement_count_naive(int n, std::uint64_t p) {
  std::vector<std::uint64_t> v(n, 0);
  Integer count = 0;
  while (true) {
    bool outside = true;
    for (std::uint32_t s = 1; s < (1u << n) && outside; ++s) {
      std::uint64_t sum = 0;
      for (int i = 0; i < n; ++i) {
        if (s & (1u << i)) sum += v[i];
      }
      outside = sum % p != 0;
    }
    if (outside) ++count;
    int i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
  }
  return count;
}

namespace {

// Coefficients of the unique degree <= xs.size()-1 polynomial through the
// points, by exact Lagrange interpolation.
std::vector<Rational> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t m = xs.size();
  std::vector<Rational> out(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, 0);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[j];
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    for (std::size_t d = 0; d < m; ++d) out[d] += basis[d] * ys[i] / denom;
  }
  return out;
}

}  // namespace

CharPoly charpoly_ff(int n, bool allow_long) {
  if (n < 1) throw UsageError("n must be positive, got " + std::to_string(n));
  if (n > kMaxCountN) {
    throw CapacityError("charpoly_ff supports n <= " + std::to_string(kMaxCountN) + ", got " +
                        std::to_string(n));
  }
  if (n > kMaxFiniteFieldN && !allow_long) {
    throw CapacityError("charpoly_ff for n = " + std::to_string(n) + " is long-running; pass --allow-long");
  }
  const std::vector<std::uint64_t> primes = valid_primes(n, static_cast<std::size_t>(n) + 2);
  std::vector<Integer> xs;
  std::vector<Integer> ys;
  for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
    xs.emplace_back(primes[i]);
    ys.push_back(complement_count(n, primes[i]));
  }
  CharPoly chi;
  for (Rational& c : interpolate(xs, ys)) {
    c.canonicalize();
    if (c.get_den() != 1) {
      throw ConsistencyError("interpolated coefficient " + c.get_str() + " is not an integer");
    }
    chi.coeffs.push_back(c.get_num());
  }
  const std::uint64_t holdout = primes.back();
  const Integer predicted = chi.evaluate(Integer(holdout));
  const Integer counted = complement_count(n, holdout);
  if (predicted != counted) {
    throw ConsistencyError("holdout prime " + std::to_string(holdout) + ": polynomial predicts " +
                           predicted.get_str() + " but the count is " + counted.get_str());
  }
  return chi;
}

namespace {

// Rank over Q of the 0/1 vectors indexed by the set bits of `subset`, each
// vector given as an n-bit mask. Fraction-free elimination on small integers.
int rank_of(std::uint32_t subset, const std::vector<std::uint32_t>& normals, int n) {
  std::vector<std::vector<long long>> rows;
  for (std::size_t h = 0; h < normals.size(); ++h) {
    if (!(subset & (1u << h))) continue;
    std::vector<long long> row(n);
    for (int i = 0; i < n; ++i) row[i] = (normals[h] >> i) & 1u;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const long long factor = rows[r][col];
      if (factor == 0) continue;
      const long long lead = rows[rank][col];
      long long g = 0;
      for (int c = 0; c < n; ++c) {
        rows[r][c] = rows[r][c] * lead - rows[rank][c] * factor;
        g = std::gcd(g, rows[r][c]);
      }
      if (g > 1) {
        for (int c = 0; c < n; ++c) rows[r][c] /= g;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

CharPoly charpoly_mobius(int n) {
  if (n < 1) throw UsageError("n must be positive, got " + std::to_string(n));
  if (n > kMaxMobiusN) {
    throw CapacityError("charpoly_mobius supports n <= " + std::to_string(kMaxMobiusN) + ", got " +
                        std::to_string(n));
  }
  // Hyperplane h has normal vector = indicator of the nonempty subset h + 1.
  std::vector<std::uint32_t> normals;
  for (std::uint32_t s = 1; s < (1u << n); ++s) normals.push_back(s);
  const int hyperplanes = static_cast<int>(normals.size());
  const std::uint32_t subsets = 1u << hyperplanes;

  std::vector<std::int8_t> rank(subsets);
  for (std::uint32_t s = 0; s < subsets; ++s) rank[s] = static_cast<std::int8_t>(rank_of(s, normals, n));

  // A subset is a flat (closed) when adding any further hyperplane raises the rank.
  std::vector<std::uint32_t> flats;
  for (std::uint32_t s = 0; s < subsets; ++s) {
    bool closed = true;
    for (int h = 0; h < hyperplanes && closed; ++h) {
      if (!(s & (1u << h)) && rank[s | (1u << h)] == rank[s]) closed = false;
    }
    if (closed) flats.push_back(s);
  }
  std::stable_sort(flats.begin(), flats.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return rank[a] < rank[b]; });

  // mu(0, 0) = 1; mu(0, G) = -sum_{F strictly below G} mu(0, F). Below means
  // fewer hyperplanes contain the flat's subspace.
  std::vector<Integer> mu(flats.size());
  CharPoly chi{std::vector<Integer>(n + 1, Integer(0))};
  for (std::size_t g = 0; g < flats.size(); ++g) {
    if (flats[g] == 0) {
      mu[g] = 1;
    } else {
      Integer sum = 0;
      for (std::size_t f = 0; f < g; ++f) {
        if (flats[f] != flats[g] && (flats[f] & flats[g]) == flats[f]) sum += mu[f];
      }
      mu[g] = -sum;
    }
    chi.coeffs[n - rank[flats[g]]] += mu[g];
  }
  return chi;
}

Integer regions(const CharPoly& chi) {
  const Integer value = chi.evaluate(-1);
  return chi.degree() % 2 == 0 ? value : Integer(-value);
}

Integer bounded_regions(const CharPoly& chi) {
  const Integer value = chi.evaluate(1);
  return chi.degree() % 2 == 0 ? value : Integer(-value);
}

}  // namespace boolprod
