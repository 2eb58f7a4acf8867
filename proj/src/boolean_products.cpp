#include "boolprod/boolean_products.hpp"

#include <string>

namespace boolprod {

namespace {

void check_nk(int n, int k) {
  if (n < 1) throw UsageError("n must be positive, got " + std::to_string(n));
  if (k < 1 || k > n) {
    throw UsageError("k must satisfy 1 <= k <= n, got k = " + std::to_string(k) +
                     ", n = " + std::to_string(n));
  }
  if (n > kMaxVars) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the " + std::to_string(kMaxVars) +
                        "-variable limit");
  }
}

}  // namespace

Alphabet subset_alphabet(int n, int k) {
  check_nk(n, k);
  Alphabet alphabet(n);
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    LinearForm form{std::vector<long>(n, 0)};
    for (int i : subset) form.coeffs[i] = 1;
    alphabet.push_back(std::move(form));
    int pos = k - 1;
    while (pos >= 0 && subset[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
  }
  return alphabet;
}

SchurVector ep_subset(int n, int k, int p) {
  check_nk(n, k);
  if (p < 0) throw UsageError("p must be nonnegative, got " + std::to_string(p));
  const Alphabet alphabet = subset_alphabet(n, k);
  if (static_cast<std::size_t>(p) > alphabet.size()) return SchurVector(n);
  return to_schur(elementary_of_alphabet(p, alphabet));
}

std::vector<SchurVector> ep_subset_all(int n, int k) {
  const Alphabet alphabet = subset_alphabet(n, k);
  std::vector<SchurVector> out;
  for (const MonomialPoly& e : elementary_series(alphabet, static_cast<int>(alphabet.size()))) {
    out.push_back(to_schur(e));
  }
  return out;
}

MonomialPoly boolean_product_poly(int n, int k) { return alphabet_product(subset_alphabet(n, k)); }

SchurVector boolean_product(int n, int k) { return to_schur(boolean_product_poly(n, k)); }

SchurVector total_boolean(int n) {
  if (n < 1) throw UsageError("n must be positive, got " + std::to_string(n));
  if (n > kMaxTotalBooleanN) {
    throw CapacityError("total Boolean product is supported up to n = " +
                        std::to_string(kMaxTotalBooleanN) + ", got " + std::to_string(n));
  }
  std::vector<MonomialPoly> factors;
  for (int k = 1; k <= n; ++k) factors.push_back(boolean_product_poly(n, k));
  return to_schur(product_tree(factors, n));
}

}  // namespace boolprod
