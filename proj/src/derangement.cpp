#include "boolprod/derangement.hpp"

#include <string>

namespace boolprod {

namespace {

void check_n(int n) {
  if (n < 1) throw UsageError("n must be positive, got " + std::to_string(n));
  if (n > kMaxDerangementN) {
    throw CapacityError("supported up to n = " + std::to_string(kMaxDerangementN) + ", got " +
                        std::to_string(n));
  }
}

Alphabet variables(int n) {
  Alphabet x(n);
  for (int i = 0; i < n; ++i) {
    LinearForm f{std::vector<long>(n, 0)};
    f.coeffs[i] = 1;
    x.push_back(std::move(f));
  }
  return x;
}

// e_j(X) * e_1(X)^{n-j} for j = 0..n, in monomial space. h_1 = e_1, so the
// powers of e_1 stand in for h_{(1^{n-j})}.
std::vector<MonomialPoly> q_summands(int n) {
  const std::vector<MonomialPoly> e = elementary_series(variables(n), n);
  std::vector<MonomialPoly> e1_power{MonomialPoly::constant(n, 1)};
  for (int m = 1; m <= n; ++m) e1_power.push_back(e1_power.back() * e[1]);
  std::vector<MonomialPoly> out;
  for (int j = 0; j <= n; ++j) out.push_back(e[j] * e1_power[n - j]);
  return out;
}

}  // namespace

QSchurVector bnm1_q(int n) {
  check_n(n);
  QSchurVector out(n);
  const std::vector<MonomialPoly> summands = q_summands(n);
  for (int j = 0; j <= n; ++j) {
    const SchurVector piece = to_schur(summands[j]);
    for (const auto& [lambda, c] : piece.terms()) {
      out.add(lambda, QPoly::monomial(c, j));
    }
  }
  return out;
}

SchurVector evaluate_at(const QSchurVector& v, const Integer& q0) {
  SchurVector out(v.var_count());
  for (const auto& [lambda, c] : v.terms()) out.add(lambda, c.evaluate(q0));
  return out;
}

PartitionMap<Integer> a_coeffs_syt(int n) {
  if (n < 2) throw UsageError("a_coeffs_syt needs n >= 2, got " + std::to_string(n));
  if (n > kMaxSytN) {
    throw CapacityError("a_coeffs_syt supports n <= " + std::to_string(kMaxSytN) + ", got " +
                        std::to_string(n));
  }
  PartitionMap<Integer> out;
  for (const Partition& lambda : partitions_up_to(n, n)) {
    Integer count = 0;
    for (const Tableau& t : syt_list(lambda)) {
      if (smallest_ascent(t) % 2 == 0) ++count;
    }
    out.emplace(lambda, count);
  }
  return out;
}

SchurVector alternating_expansion(int n) {
  check_n(n);
  const std::vector<MonomialPoly> summands = q_summands(n);
  MonomialPoly total(n);
  for (int j = 0; j <= n; ++j) {
    if (j % 2 == 0) {
      total += summands[j];
    } else {
      total -= summands[j];
    }
  }
  return to_schur(total);
}

namespace {

template <class Vector>
void check_common_size(const Vector& v) {
  if (v.empty()) return;
  const int size = v.terms().begin()->first.size();
  for (const auto& [lambda, c] : v.terms()) {
    if (lambda.size() != size) {
      throw UsageError("frobenius_dimension: keys of different sizes (" + std::to_string(size) +
                       " and " + std::to_string(lambda.size()) + ")");
    }
  }
}

}  // namespace

Integer frobenius_dimension(const SchurVector& v) {
  check_common_size(v);
  Integer total = 0;
  for (const auto& [lambda, c] : v.terms()) total += c * num_syt(lambda);
  return total;
}

Integer frobenius_dimension(const QSchurVector& v, const Integer& q0) {
  check_common_size(v);
  return frobenius_dimension(evaluate_at(v, q0));
}

}  // namespace boolprod
