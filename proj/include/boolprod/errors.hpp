#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace boolprod {

/// Malformed or out-of-domain input. The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but beyond a documented computation ceiling (exit 3).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed, e.g. a holdout prime disagreed with the
/// interpolated polynomial (exit 4).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial expected to be symmetric is not. Carries one witness pair of
/// exponent vectors alpha, sort(alpha) whose coefficients differ.
class SymmetryError : public ConsistencyError {
 public:
  SymmetryError(const std::string& what, std::vector<int> alpha,
                std::vector<int> sorted_alpha, std::string block = {})
      : ConsistencyError(what),
        alpha_(std::move(alpha)),
        sorted_alpha_(std::move(sorted_alpha)),
        block_(std::move(block)) {}

  const std::vector<int>& alpha() const noexcept { return alpha_; }
  const std::vector<int>& sorted_alpha() const noexcept { return sorted_alpha_; }
  /// "x" or "y" for two-alphabet extraction, empty otherwise.
  const std::string& block() const noexcept { return block_; }

 private:
  std::vector<int> alpha_;
  std::vector<int> sorted_alpha_;
  std::string block_;
};

}  // namespace boolprod
