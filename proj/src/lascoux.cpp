#include "boolprod/lascoux.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <string>

namespace boolprod {

GVConfig make_gv_config(const Partition& lambda, const Partition& mu, int n) {
  if (n < 1) throw UsageError("dimension must be positive, got " + std::to_string(n));
  if (lambda.length() > n || mu.length() > n) {
    throw UsageError("partitions " + lambda.to_string() + " and " + mu.to_string() +
                     " must have at most " + std::to_string(n) + " parts");
  }
  GVConfig config{n, std::vector<int>(n), std::vector<int>(n)};
  for (int i = 0; i < n; ++i) {
    config.a[i] = lambda[i] + n - 1 - i;
    config.b[i] = mu[i] + n - 1 - i;
  }
  return config;
}

Integer binomial_det(const Partition& lambda, const Partition& mu, int n) {
  const GVConfig config = make_gv_config(lambda, mu, n);
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = binomial(config.a[i], config.b[j]);
  }
  // Bareiss fraction-free elimination: every division is exact.
  int sign = 1;
  Integer previous = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer gv_count(const Partition& lambda, const Partition& mu, int n) {
  const GVConfig config = make_gv_config(lambda, mu, n);
  if (!contained_in(mu, lambda)) {
    throw UsageError("gv_count requires " + mu.to_string() + " inside " + lambda.to_string());
  }
  const int height_sum = std::accumulate(config.a.begin(), config.a.end(), 0);
  if (height_sum > kMaxGVHeightSum) {
    throw CapacityError("gv_count supports sum of start heights <= " + std::to_string(kMaxGVHeightSum) +
                        ", got " + std::to_string(height_sum));
  }

  // Sweep columns left to right. The state is the column index and the entry
  // height of every path that has not yet finished (-1 for finished paths).
  // In column x a live path drops from its entry height to some exit height,
  // occupying that vertical segment, then steps East unless x == b_i, where
  // it must stop exactly at (b_i, b_i). Families are counted when the
  // segments within each column are pairwise disjoint.
  using State = std::vector<int>;
  std::map<std::pair<int, State>, Integer> memo;

  std::function<Integer(int, const State&)> sweep = [&](int x, const State& entry) -> Integer {
    bool any_live = false;
    for (int h : entry) any_live = any_live || h >= 0;
    if (!any_live) return 1;
    const auto key = std::make_pair(x, entry);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Integer total = 0;
    State exit(n, -1);
    State next(n, -1);
    std::function<void(int)> choose = [&](int i) {
      if (i == n) {
        total += sweep(x + 1, next);
        return;
      }
      if (entry[i] < 0) {
        choose(i + 1);
        return;
      }
      const int low = config.b[i];
      const int high = entry[i];
      const int last = x == config.b[i] ? low : high;
      for (int y = low; y <= last; ++y) {
        bool clash = false;
        for (int j = 0; j < i && !clash; ++j) {
          if (entry[j] < 0) continue;
          // Segments [exit_j, entry_j] and [y, entry_i] overlap?
          clash = !(exit[j] > high || entry[j] < y);
        }
        if (clash) continue;
        exit[i] = y;
        next[i] = x == config.b[i] ? -1 : y;
        choose(i + 1);
      }
      exit[i] = -1;
      next[i] = -1;
    };
    choose(0);
    memo.emplace(key, total);
    return total;
  };

  State start(n);
  for (int i = 0; i < n; ++i) start[i] = config.a[i];
  return sweep(0, start);
}

ChernKind parse_chern_kind(std::string_view text) {
  if (text == "exterior") return ChernKind::exterior;
  if (text == "symmetric") return ChernKind::symmetric;
  throw UsageError("unknown kind '" + std::string(text) + "', expected exterior or symmetric");
}

std::string_view to_string(ChernKind kind) {
  return kind == ChernKind::exterior ? "exterior" : "symmetric";
}

Alphabet pair_alphabet(int n, ChernKind kind) {
  Alphabet alphabet(n);
  for (int i = 0; i < n; ++i) {
    for (int j = kind == ChernKind::exterior ? i + 1 : i; j < n; ++j) {
      LinearForm form{std::vector<long>(n, 0)};
      form.coeffs[i] += 1;
      form.coeffs[j] += 1;
      alphabet.push_back(std::move(form));
    }
  }
  return alphabet;
}

LascouxReport lascoux_check(int n, ChernKind kind) {
  if (n < 2) throw UsageError("lascoux_check needs n >= 2, got " + std::to_string(n));
  if (n > kMaxLascouxN) {
    throw CapacityError("lascoux_check supports n <= " + std::to_string(kMaxLascouxN) + ", got " +
                        std::to_string(n));
  }
  LascouxReport report;
  report.n = n;
  report.kind = kind;

  const Alphabet alphabet = pair_alphabet(n, kind);
  MonomialPoly chern(n);
  for (const MonomialPoly& e : elementary_series(alphabet, static_cast<int>(alphabet.size()))) chern += e;
  report.lhs = to_schur(chern);

  const Partition delta = staircase(kind == ChernKind::exterior ? n - 1 : n);
  const Integer denominator = pow2(static_cast<unsigned long>(n * (n - 1) / 2));
  report.rhs = RationalSchurVector(n);
  for (const Partition& mu : subpartitions(delta)) {
    Rational c(binomial_det(delta, mu, n) * pow2(static_cast<unsigned long>(mu.size())), denominator);
    c.canonicalize();
    report.rhs.add(mu, c);
  }

  report.rhs_integral = true;
  for (const auto& [mu, c] : report.rhs.terms()) {
    if (c.get_den() != 1) report.rhs_integral = false;
  }
  RationalSchurVector lhs_rational(n);
  for (const auto& [mu, c] : report.lhs.terms()) lhs_rational.add(mu, Rational(c));
  report.equal = lhs_rational == report.rhs;
  return report;
}

}  // namespace boolprod
