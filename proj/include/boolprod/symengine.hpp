#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "boolprod/errors.hpp"
#include "boolprod/numeric.hpp"
#include "boolprod/partition.hpp"

namespace boolprod {

/// Upper bound on the number of variables of any MonomialPoly. Exponent
/// vectors are packed eight bits per variable into one 64-bit word.
inline constexpr int kMaxVars = 8;
inline constexpr int kMaxExponent = 255;

/// An integer linear form sum_i coeffs[i] * x_i.
struct LinearForm {
  std::vector<long> coeffs;

  int var_count() const noexcept { return static_cast<int>(coeffs.size()); }
  bool is_zero() const noexcept;
  bool operator==(const LinearForm&) const = default;
};

/// Ordered sequence of linear forms over a common variable count.
class Alphabet {
 public:
  explicit Alphabet(int var_count);
  Alphabet(int var_count, std::vector<LinearForm> forms);

  void push_back(LinearForm form);

  int var_count() const noexcept { return var_count_; }
  std::size_t size() const noexcept { return forms_.size(); }
  bool empty() const noexcept { return forms_.empty(); }
  const std::vector<LinearForm>& forms() const noexcept { return forms_; }

 private:
  int var_count_;
  std::vector<LinearForm> forms_;
};

/// Sparse polynomial in var_count variables with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class MonomialPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MonomialPoly(int var_count);
  static MonomialPoly constant(int var_count, const Integer& value);
  static MonomialPoly from_form(const LinearForm& form);

  int var_count() const noexcept { return var_count_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// Largest exponent sum, or -1 for the zero polynomial.
  int degree() const;

  Integer coefficient(std::span<const int> exponents) const;
  void add_term(std::span<const int> exponents, const Integer& coeff);

  /// All terms, sorted lexicographically descending by exponent vector.
  std::vector<std::pair<Exponents, Integer>> terms() const;
  MonomialPoly homogeneous_part(int degree) const;

  MonomialPoly& operator+=(const MonomialPoly& other);
  MonomialPoly& operator-=(const MonomialPoly& other);
  MonomialPoly& operator*=(const Integer& scalar);
  friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b);
  friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }
  friend MonomialPoly operator-(MonomialPoly a, const MonomialPoly& b) { return a -= b; }
  bool operator==(const MonomialPoly& other) const;

  // Packed-key access for the few hot loops that need it.
  using Key = std::uint64_t;
  const std::unordered_map<Key, Integer>& packed_terms() const noexcept { return terms_; }
  static Key pack(std::span<const int> exponents);
  static Exponents unpack(Key key, int var_count);

 private:
  void check_compatible(const MonomialPoly& other) const;

  int var_count_;
  std::unordered_map<Key, Integer> terms_;
};

/// Tag types distinguishing the monomial and Schur bases.
struct MonomialBasis {
  static constexpr char symbol = 'm';
};
struct SchurBasis {
  static constexpr char symbol = 's';
};

/// Finite linear combination of basis elements indexed by partitions with at
/// most var_count parts. Coeff must be default-constructible to zero and
/// support +=, -= and ==.
template <class Basis, class Coeff>
class PartitionVector {
 public:
  using Map = PartitionMap<Coeff>;

  PartitionVector() = default;
  explicit PartitionVector(int var_count) : var_count_(var_count) {}

  int var_count() const noexcept { return var_count_; }
  const Map& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coeff coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  void add(const Partition& lambda, const Coeff& coeff) {
    if (lambda.length() > var_count_) {
      throw UsageError("partition " + lambda.to_string() + " has more than " +
                       std::to_string(var_count_) + " parts");
    }
    if (coeff == Coeff{}) return;
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == Coeff{}) terms_.erase(it);
    }
  }

  PartitionVector& operator+=(const PartitionVector& other) {
    for (const auto& [lambda, c] : other.terms_) add(lambda, c);
    return *this;
  }

  /// Terms of size exactly d.
  PartitionVector homogeneous(int d) const {
    PartitionVector out(var_count_);
    for (const auto& [lambda, c] : terms_) {
      if (lambda.size() == d) out.terms_.emplace(lambda, c);
    }
    return out;
  }

  /// Every coefficient compares >= Coeff{} (meaningful for ordered rings).
  bool nonnegative() const {
    for (const auto& [lambda, c] : terms_) {
      if (c < Coeff{}) return false;
    }
    return true;
  }

  bool operator==(const PartitionVector& other) const {
    return var_count_ == other.var_count_ && terms_ == other.terms_;
  }

 private:
  int var_count_ = 0;
  Map terms_;
};

using MVector = PartitionVector<MonomialBasis, Integer>;
using SchurVector = PartitionVector<SchurBasis, Integer>;
using RationalSchurVector = PartitionVector<SchurBasis, Rational>;

/// Rendering used by the CLI text format: "2s[3] + 5s[2,1] - s[1,1,1]".
std::string to_text(const SchurVector& v);
std::string to_text(const MVector& v);

/// Exact product of every form of the alphabet, built as a balanced binary
/// tree. The empty alphabet gives the constant 1.
MonomialPoly alphabet_product(const Alphabet& alphabet);

/// Product of a list of polynomials over one variable count, balanced tree.
MonomialPoly product_tree(std::span<const MonomialPoly> factors, int var_count);

/// e_0(A), ..., e_max_p(A): the coefficients of t^0..t^max_p in
/// prod_{f in A} (1 + t f). Entries past |A| are zero.
std::vector<MonomialPoly> elementary_series(const Alphabet& alphabet, int max_p);

/// e_p(A). Zero when p > |A|.
MonomialPoly elementary_of_alphabet(int p, const Alphabet& alphabet);

/// Reads off the monomial-symmetric coefficients. Throws SymmetryError with a
/// witness (alpha, sort(alpha)) when the input is not symmetric.
MVector to_mvector(const MonomialPoly& poly);

/// Rebuilds the full polynomial from orbit sums.
MonomialPoly from_mvector(const MVector& v);

/// Kostka-matrix inversion by back-substitution down the reverse
/// lexicographic order.
SchurVector m_to_schur(const MVector& v);

/// sum c_lambda sum_mu K_{lambda mu} m_mu, keeping mu with at most var_count parts.
MVector schur_to_m(const SchurVector& v);


/// m_to_schur(to_mvector(poly)).
SchurVector to_schur(const MonomialPoly& poly);

/// s_lambda evaluated at the forms of the alphabet, expanded in the Schur
/// basis of the underlying variables. Uses the dual Jacobi-Trudi determinant
/// det(e_{lambda'_i - i + j}(A)).
SchurVector schur_at_alphabet(const Partition& lambda, const Alphabet& alphabet);

/// Rough bound on the number of coefficient multiplications alphabet_product
/// will perform; used for capacity checks.
std::uint64_t product_work_estimate(std::size_t form_count, int var_count);

}  // namespace boolprod
