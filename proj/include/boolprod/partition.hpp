#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolprod/numeric.hpp"

namespace boolprod {

/// A weakly decreasing sequence of positive integers. The default-constructed
/// value is the empty partition, the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws UsageError otherwise.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts a composition into decreasing order and drops zero entries.
  static Partition from_composition(std::span<const int> composition);
  /// Parses "3,2,2,2,1"; "-" or "" is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// Part i (0-based), zero past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  /// Lexicographic on the parts.
  std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// The order used for every keyed container and every serialized term list:
/// ascending size, then reverse lexicographic within a size. Reverse lex
/// linearly extends dominance, so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
struct GradedRevLex {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  }
};

template <class Value>
using PartitionMap = std::map<Partition, Value, GradedRevLex>;

/// All partitions of d with at most max_parts parts, in reverse lexicographic
/// order (dominance-greater first).
std::vector<Partition> partitions_up_to(int d, int max_parts);

/// All partitions mu with mu subset of outer (componentwise), graded rev-lex.
std::vector<Partition> subpartitions(const Partition& outer);

Partition conjugate(const Partition& lambda);

/// (k, k-1, ..., 1).
Partition staircase(int k);

/// Partial sums of mu never exceed those of lambda. Throws UsageError if the
/// sizes differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// mu_i <= lambda_i for every i.
bool contained_in(const Partition& mu, const Partition& lambda);

/// Number of semistandard tableaux of shape lambda and content given by a
/// composition of |lambda|. Memoized per thread.
Integer kostka(const Partition& lambda, std::span<const int> content);
inline Integer kostka(const Partition& lambda, const Partition& content) {
  return kostka(lambda, std::span<const int>(content.parts()));
}

/// A filling of a Young diagram in French convention: rows[0] is the bottom
/// (longest) row.
struct Tableau {
  std::vector<std::vector<int>> rows;

  /// Throws UsageError when the row lengths are not a partition.
  Partition shape() const;
  /// Rows weakly increase, columns strictly increase upward.
  bool is_semistandard() const;
  /// Semistandard with entries exactly 1..|shape|.
  bool is_standard() const;

  bool operator==(const Tableau&) const = default;
};

/// Every standard tableau of shape lambda, ordered lexicographically by the
/// sequence of rows receiving 1, 2, ..., n.
std::vector<Tableau> syt_list(const Partition& lambda);

/// Least ascent of a standard tableau. i < n is a descent when i+1 sits in a
/// row strictly above i and an ascent otherwise; n itself always counts as an
/// ascent. Throws UsageError for a non-standard tableau.
int smallest_ascent(const Tableau& tableau);

/// f^lambda by the hook length formula.
Integer num_syt(const Partition& lambda);

}  // namespace boolprod
