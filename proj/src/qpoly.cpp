#include "boolprod/qpoly.hpp"

#include <algorithm>

namespace boolprod {

QPoly::QPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Integer& coeff, int power) {
  std::vector<Integer> c(power + 1, Integer(0));
  c[power] = coeff;
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer QPoly::coefficient(int power) const {
  return power >= 0 && power < static_cast<int>(coeffs_.size()) ? coeffs_[power] : Integer(0);
}

Integer QPoly::evaluate(const Integer& q) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

bool QPoly::nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (i == 0 || magnitude != 1) out += magnitude.get_str();
    if (i >= 1) out += 'q';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(c));
}

}  // namespace boolprod
