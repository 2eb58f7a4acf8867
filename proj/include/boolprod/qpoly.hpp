#pragma once

#include <string>
#include <vector>

#include "boolprod/numeric.hpp"

namespace boolprod {

/// Univariate polynomial in q with integer coefficients; coeffs[i] is the
/// coefficient of q^i. Trailing zeros are trimmed, so the zero polynomial has
/// no coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long constant);  // NOLINT: implicit so integer literals read naturally
  explicit QPoly(std::vector<Integer> coeffs);

  static QPoly monomial(const Integer& coeff, int power);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Integer coefficient(int power) const;

  Integer evaluate(const Integer& q) const;
  bool nonnegative_coefficients() const;
  /// "1+q+q^2", "0" for zero.
  std::string to_string() const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  bool operator==(const QPoly& other) const = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace boolprod
