#pragma once

#include <map>
#include <string>
#include <utility>

#include "boolprod/symengine.hpp"

namespace boolprod {

struct PartitionPairOrder {
  bool operator()(const std::pair<Partition, Partition>& a,
                  const std::pair<Partition, Partition>& b) const {
    GradedRevLex less;
    if (a.first != b.first) return less(a.first, b.first);
    return less(a.second, b.second);
  }
};

/// sum a_{lambda mu} s_lambda(X) s_mu(Y) with |X| = n, |Y| = m.
class BiSchurVector {
 public:
  using Key = std::pair<Partition, Partition>;
  using Map = std::map<Key, Integer, PartitionPairOrder>;

  BiSchurVector(int n, int m) : n_(n), m_(m) {}

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  const Map& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coefficient(const Partition& lambda, const Partition& mu) const;
  void add(const Partition& lambda, const Partition& mu, const Integer& coeff);
  bool nonnegative() const;
  /// Exchanges the roles of X and Y.
  BiSchurVector transposed() const;
  /// "s[1,1]*s[-] + s[1]*s[1]".
  std::string to_text() const;

  bool operator==(const BiSchurVector&) const = default;

 private:
  int n_;
  int m_;
  Map terms_;
};

inline constexpr int kMaxBialphabetForms = 30;

/// prod over |S| = j, |T| = k of (X_S + Y_T), on the concatenated variables
/// x_1..x_n, y_1..y_m, expanded in products of Schur polynomials.
BiSchurVector pjk_expand(int n, int m, int j, int k);

/// The dual Cauchy expansion of prod_{i,j} (x_i + y_j): one term
/// s_lambda(X) s_{hat lambda}(Y) for each lambda in the n x m box, hat lambda
/// the conjugate of the box complement.
BiSchurVector dual_cauchy_reference(int n, int m);

}  // namespace boolprod
