#include "doctest.h"

#include "boolprod/bialphabet.hpp"
#include "boolprod/boolean_products.hpp"
#include "oracles.hpp"

using namespace boolprod;

namespace {

// Dense product of (X_S + Y_T) over |S| = j, |T| = k, variables x then y.
oracle::Poly dense_pjk(int n, int m, int j, int k) {
  oracle::Poly acc{{std::vector<int>(n + m, 0), Integer(1)}};
  for (int s = 0; s < (1 << n); ++s) {
    if (__builtin_popcount(s) != j) continue;
    for (int t = 0; t < (1 << m); ++t) {
      if (__builtin_popcount(t) != k) continue;
      oracle::Poly factor;
      for (int i = 0; i < n; ++i) {
        if (s >> i & 1) {
          std::vector<int> e(n + m, 0);
          e[i] = 1;
          factor[e] += 1;
        }
      }
      for (int i = 0; i < m; ++i) {
        if (t >> i & 1) {
          std::vector<int> e(n + m, 0);
          e[n + i] = 1;
          factor[e] += 1;
        }
      }
      acc = oracle::multiply(acc, factor);
    }
  }
  return acc;
}

// Rebuilds sum c * s_lambda(x) s_mu(y) as a dense polynomial.
oracle::Poly expand(const BiSchurVector& v) {
  const int n = v.n();
  const int m = v.m();
  oracle::Poly out;
  for (const auto& [key, c] : v.terms()) {
    for (const auto& [ex, cx] : oracle::schur_poly(key.first, n)) {
      for (const auto& [ey, cy] : oracle::schur_poly(key.second, m)) {
        std::vector<int> e(ex);
        e.insert(e.end(), ey.begin(), ey.end());
        out[e] += c * cx * cy;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("small bialphabet expansions") {
  CHECK(pjk_expand(1, 1, 1, 1).to_text() == "s[-]*s[1] + s[1]*s[-]");
  const BiSchurVector v = pjk_expand(2, 1, 1, 1);
  CHECK(v.size() == 3);
  CHECK(v.coefficient(Partition{1, 1}, Partition{}) == 1);
  CHECK(v.coefficient(Partition{1}, Partition{1}) == 1);
  CHECK(v.coefficient(Partition{}, Partition{2}) == 1);
}

TEST_CASE("degenerate subsets reduce to the one-alphabet product") {
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      const BiSchurVector v = pjk_expand(n, 2, j, 0);
      const SchurVector b = boolean_product(n, j);
      CHECK(v.size() == b.size());
      for (const auto& [lambda, c] : b.terms()) CHECK(v.coefficient(lambda, Partition{}) == c);
    }
  }
}

TEST_CASE("expansions agree with the dense product") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (int j = 0; j <= n; ++j) {
        for (int k = 0; k <= m; ++k) {
          if (j == 0 && k == 0) continue;
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(j);
          CAPTURE(k);
          const BiSchurVector v = pjk_expand(n, m, j, k);
          CHECK(expand(v) == dense_pjk(n, m, j, k));
          CHECK(v.nonnegative());
          for (const auto& [key, c] : v.terms()) {
            CHECK(key.first.size() + key.second.size() ==
                  binomial(n, j) * binomial(m, k));
          }
          CHECK(v.transposed() == pjk_expand(m, n, k, j));
        }
      }
    }
  }
}

TEST_CASE("dual Cauchy") {
  const BiSchurVector box = dual_cauchy_reference(2, 2);
  CHECK(box.size() == 6);
  for (const auto& [key, c] : box.terms()) CHECK(c == 1);
  CHECK(dual_cauchy_reference(2, 1) == pjk_expand(2, 1, 1, 1));
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) CHECK(pjk_expand(n, m, 1, 1) == dual_cauchy_reference(n, m));
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(pjk_expand(2, 2, 3, 1), UsageError);
  CHECK_THROWS_AS(pjk_expand(0, 0, 0, 0), UsageError);
  CHECK_THROWS_AS(pjk_expand(5, 4, 2, 2), CapacityError);
}
