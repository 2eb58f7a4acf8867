#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "boolprod/symengine.hpp"

namespace boolprod {

/// Start heights a_i = lambda_i + n - i and end abscissae b_j = mu_j + n - j
/// after zero-padding both partitions to length n.
struct GVConfig {
  int n = 0;
  std::vector<int> a;
  std::vector<int> b;
};

GVConfig make_gv_config(const Partition& lambda, const Partition& mu, int n);

/// det( C(lambda_i + n - i, mu_j + n - j) ) by fraction-free elimination.
Integer binomial_det(const Partition& lambda, const Partition& mu, int n);

inline constexpr int kMaxGVHeightSum = 30;

/// Number of vertex-disjoint path families where path i runs from (0, a_i) to
/// (b_i, b_i) with unit East and South steps. Requires mu inside lambda and
/// sum a_i <= kMaxGVHeightSum.
Integer gv_count(const Partition& lambda, const Partition& mu, int n);

enum class ChernKind { exterior, symmetric };

ChernKind parse_chern_kind(std::string_view text);
std::string_view to_string(ChernKind kind);

/// Pair-sum alphabet {x_i + x_j : i < j} (exterior) or {x_i + x_j : i <= j}
/// (symmetric), pairs in lexicographic order.
Alphabet pair_alphabet(int n, ChernKind kind);

struct LascouxReport {
  int n = 0;
  ChernKind kind = ChernKind::exterior;
  /// Graded Schur expansion of prod (1 + f) over the pair alphabet.
  SchurVector lhs;
  /// 2^{-C(n,2)} sum_{mu in delta} d_{delta,mu} 2^{|mu|} s_mu, exactly.
  RationalSchurVector rhs;
  bool rhs_integral = false;
  bool equal = false;
};

inline constexpr int kMaxLascouxN = 5;

LascouxReport lascoux_check(int n, ChernKind kind);

}  // namespace boolprod
