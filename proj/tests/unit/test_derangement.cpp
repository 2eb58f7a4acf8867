#include "doctest.h"

#include "boolprod/boolean_products.hpp"
#include "boolprod/derangement.hpp"
#include "oracles.hpp"

using namespace boolprod;

namespace {

SchurVector from_map(int n, const PartitionMap<Integer>& m) {
  SchurVector v(n);
  for (const auto& [lambda, c] : m) v.add(lambda, c);
  return v;
}

}  // namespace

TEST_CASE("q-polynomials") {
  const QPoly a(std::vector<Integer>{1, 1});
  const QPoly b = QPoly::monomial(2, 2) + QPoly(-1);
  CHECK((a * a).to_string() == "1+2q+q^2");
  CHECK(b.to_string() == "-1+2q^2");
  CHECK(b.evaluate(3) == 17);
  CHECK_FALSE(b.nonnegative_coefficients());
  CHECK(QPoly(std::vector<Integer>{4, 0, 0}).degree() == 0);
  CHECK(QPoly().to_string() == "0");
}

TEST_CASE("q-deformation at small n") {
  const QSchurVector v = bnm1_q(2);
  CHECK(v.coefficient(Partition{2}) == QPoly(std::vector<Integer>{1, 1}));
  CHECK(v.coefficient(Partition{1, 1}) == QPoly(std::vector<Integer>{1, 1, 1}));
  SchurVector h11(2);
  h11.add(Partition{2}, 1);
  h11.add(Partition{1, 1}, 1);
  CHECK(evaluate_at(v, 0) == h11);
  SchurVector s21(3);
  s21.add(Partition{2, 1}, 1);
  CHECK(evaluate_at(bnm1_q(3), -1) == s21);
  CHECK_THROWS_AS(bnm1_q(kMaxDerangementN + 1), CapacityError);
}

TEST_CASE("smallest even ascent coefficients") {
  const auto a2 = a_coeffs_syt(2);
  CHECK(a2.at(Partition{1, 1}) == 1);
  CHECK(a2.at(Partition{2}) == 0);
  const auto a4 = a_coeffs_syt(4);
  CHECK(a4.at(Partition{1, 1, 1, 1}) == 1);
  CHECK(a4.at(Partition{2, 1, 1}) == 1);
  CHECK(a4.at(Partition{2, 2}) == 1);
  CHECK(a4.at(Partition{3, 1}) == 1);
  CHECK(a4.at(Partition{4}) == 0);
}

TEST_CASE("four routes to the derangement representation agree") {
  for (int n = 2; n <= 7; ++n) {
    const SchurVector syt = from_map(n, a_coeffs_syt(n));
    CHECK(syt == boolean_product(n, n - 1));
    CHECK(syt == alternating_expansion(n));
    CHECK(syt == evaluate_at(bnm1_q(n), -1));
    CHECK(frobenius_dimension(syt) == oracle::derangements(n));
  }
  CHECK(frobenius_dimension(from_map(8, a_coeffs_syt(8))) == oracle::derangements(8));
}

TEST_CASE("dimensions at special values of q") {
  for (int n = 1; n <= kMaxDerangementN; ++n) {
    const QSchurVector v = bnm1_q(n);
    Integer arrangements = 0;
    for (int k = 0; k <= n; ++k) arrangements += factorial(n) / factorial(k);
    CHECK(frobenius_dimension(v, 1) == arrangements);
    CHECK(frobenius_dimension(v, 0) == factorial(n));
    CHECK(frobenius_dimension(v, -1) == oracle::derangements(n));
    for (const auto& [lambda, c] : v.terms()) CHECK(c.nonnegative_coefficients());
  }
  CHECK(frobenius_dimension(bnm1_q(4), 1) == 65);
  CHECK(frobenius_dimension(bnm1_q(4), -1) == 9);
}

TEST_CASE("dimension rejects mixed sizes") {
  SchurVector v(3);
  v.add(Partition{1}, 1);
  v.add(Partition{2}, 1);
  CHECK_THROWS_AS(frobenius_dimension(v), UsageError);
}
