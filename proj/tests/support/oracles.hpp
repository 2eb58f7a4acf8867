#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the Partition value type.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "boolprod/numeric.hpp"
#include "boolprod/partition.hpp"
#include "boolprod/symengine.hpp"

namespace oracle {

using boolprod::Integer;
using boolprod::Partition;

/// Counts semistandard fillings of `lambda` with content `content` by
/// enumerating every assignment cell by cell.
inline long ssyt_count(const Partition& lambda, const std::vector<int>& content) {
  const int rows = lambda.length();
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(lambda[r], 0);
  std::vector<int> left = content;
  const int letters = static_cast<int>(content.size());
  long count = 0;
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == rows) {
      if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) ++count;
      return;
    }
    if (c == lambda[r]) {
      fill(r + 1, 0);
      return;
    }
    for (int v = 1; v <= letters; ++v) {
      if (left[v - 1] == 0) continue;
      if (c > 0 && t[r][c - 1] > v) continue;
      if (r > 0 && t[r - 1][c] >= v) continue;
      t[r][c] = v;
      --left[v - 1];
      fill(r, c + 1);
      ++left[v - 1];
    }
  };
  fill(0, 0);
  return count;
}

/// Dense multivariate polynomial keyed by exponent vector.
using Poly = std::map<std::vector<int>, Integer>;

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Product of (1 + form) over the given integer linear forms.
inline Poly product_of_one_plus(const std::vector<std::vector<long>>& forms, int vars) {
  Poly acc{{std::vector<int>(vars, 0), Integer(1)}};
  for (const auto& f : forms) {
    Poly factor{{std::vector<int>(vars, 0), Integer(1)}};
    for (int i = 0; i < vars; ++i) {
      if (f[i] == 0) continue;
      std::vector<int> e(vars, 0);
      e[i] = 1;
      factor[e] += f[i];
    }
    acc = multiply(acc, factor);
  }
  return acc;
}

inline Poly to_oracle(const boolprod::MonomialPoly& p) {
  Poly out;
  for (const auto& [e, c] : p.terms()) out[e] = c;
  return out;
}

/// Schur polynomial s_lambda(x_1..x_n) as a sum over all SSYT, enumerated
/// directly (bialternant-free).
inline Poly schur_poly(const Partition& lambda, int n) {
  Poly out;
  const int rows = lambda.length();
  if (rows > n) return out;
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(lambda[r], 0);
  std::vector<int> weight(n, 0);
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == rows) {
      out[weight] += 1;
      return;
    }
    if (c == lambda[r]) {
      fill(r + 1, 0);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (c > 0 && t[r][c - 1] > v) continue;
      if (r > 0 && t[r - 1][c] >= v) continue;
      t[r][c] = v;
      ++weight[v - 1];
      fill(r, c + 1);
      --weight[v - 1];
    }
  };
  fill(0, 0);
  return out;
}

/// Derangement number by inclusion-exclusion.
inline Integer derangements(int n) {
  Integer total = 0;
  for (int k = 0; k <= n; ++k) {
    Integer term = boolprod::factorial(n) / boolprod::factorial(k);
    if (k % 2) total -= term; else total += term;
  }
  return total;
}

/// Fraction-free rank of an integer matrix (rows are vectors).
inline int rank(std::vector<std::vector<Integer>> m) {
  int r = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i) {
      if (m[i][c] != 0) { pivot = i; break; }
    }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < static_cast<int>(m.size()); ++i) {
      const Integer f = m[i][c];
      const Integer p = m[r][c];
      for (int j = 0; j < cols; ++j) m[i][j] = m[i][j] * p - m[r][j] * f;
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
