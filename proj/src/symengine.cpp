#include "boolprod/symengine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace boolprod {

namespace {

// Multiplication work above which products are refused with CapacityError.
constexpr std::uint64_t kWorkLimit = 400'000'000;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(p);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a + b < a ? UINT64_MAX : a + b;
}

// Number of monomials of degree d in v variables.
std::uint64_t homogeneous_count(int d, int v) {
  if (v == 0) return d == 0 ? 1 : 0;
  return binomial_saturating(static_cast<std::uint64_t>(d + v - 1), static_cast<std::uint64_t>(v - 1));
}

std::vector<int> sorted_desc(std::vector<int> exps) {
  std::sort(exps.begin(), exps.end(), std::greater<>());
  return exps;
}

std::string exps_to_string(const std::vector<int>& exps) {
  std::string s = "(";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exps[i]);
  }
  return s + ")";
}

// Number of distinct rearrangements of an exponent vector.
Integer orbit_size(const std::vector<int>& exps) {
  std::map<int, long> mult;
  for (int e : exps) ++mult[e];
  Integer out = factorial(static_cast<long>(exps.size()));
  for (const auto& [e, m] : mult) out /= factorial(m);
  return out;
}

template <class Vector>
std::string vector_to_text(const Vector& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : v.terms()) {
    const bool negative = sgn(c) < 0;
    const Integer magnitude = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    if (magnitude != 1) out << magnitude.get_str();
    out << Vector::symbol_char() << '[' << lambda.to_string() << ']';
    first = false;
  }
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------

bool LinearForm::is_zero() const noexcept {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c == 0; });
}

Alphabet::Alphabet(int var_count) : var_count_(var_count) {
  if (var_count < 0 || var_count > kMaxVars) {
    throw CapacityError("alphabets support 0.." + std::to_string(kMaxVars) + " variables, got " +
                        std::to_string(var_count));
  }
}

Alphabet::Alphabet(int var_count, std::vector<LinearForm> forms) : Alphabet(var_count) {
  for (auto& f : forms) push_back(std::move(f));
}

void Alphabet::push_back(LinearForm form) {
  if (form.var_count() != var_count_) {
    throw UsageError("linear form has " + std::to_string(form.var_count()) +
                     " coefficients, alphabet has " + std::to_string(var_count_) + " variables");
  }
  forms_.push_back(std::move(form));
}

// ---------------------------------------------------------------------------

MonomialPoly::MonomialPoly(int var_count) : var_count_(var_count) {
  if (var_count < 0 || var_count > kMaxVars) {
    throw CapacityError("polynomials support 0.." + std::to_string(kMaxVars) +
                        " variables, got " + std::to_string(var_count));
  }
}

MonomialPoly MonomialPoly::constant(int var_count, const Integer& value) {
  MonomialPoly p(var_count);
  if (value != 0) p.terms_.emplace(Key{0}, value);
  return p;
}

MonomialPoly MonomialPoly::from_form(const LinearForm& form) {
  MonomialPoly p(form.var_count());
  for (int i = 0; i < form.var_count(); ++i) {
    if (form.coeffs[i] != 0) p.terms_.emplace(Key{1} << (8 * i), Integer(form.coeffs[i]));
  }
  return p;
}

MonomialPoly::Key MonomialPoly::pack(std::span<const int> exponents) {
  Key key = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    key |= static_cast<Key>(exponents[i]) << (8 * i);
  }
  return key;
}

MonomialPoly::Exponents MonomialPoly::unpack(Key key, int var_count) {
  Exponents out(var_count);
  for (int i = 0; i < var_count; ++i) out[i] = static_cast<int>((key >> (8 * i)) & 0xff);
  return out;
}

int MonomialPoly::degree() const {
  int best = -1;
  for (const auto& [key, c] : terms_) {
    int d = 0;
    for (int i = 0; i < var_count_; ++i) d += static_cast<int>((key >> (8 * i)) & 0xff);
    best = std::max(best, d);
  }
  return best;
}

Integer MonomialPoly::coefficient(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != var_count_) {
    throw UsageError("exponent vector length does not match variable count");
  }
  for (int e : exponents) {
    if (e < 0) throw UsageError("negative exponent");
    if (e > kMaxExponent) return 0;
  }
  auto it = terms_.find(pack(exponents));
  return it == terms_.end() ? Integer(0) : it->second;
}

void MonomialPoly::add_term(std::span<const int> exponents, const Integer& coeff) {
  if (static_cast<int>(exponents.size()) != var_count_) {
    throw UsageError("exponent vector length does not match variable count");
  }
  for (int e : exponents) {
    if (e < 0 || e > kMaxExponent) {
      throw CapacityError("exponent " + std::to_string(e) + " outside 0.." +
                          std::to_string(kMaxExponent));
    }
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(pack(exponents), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<MonomialPoly::Exponents, Integer>> MonomialPoly::terms() const {
  std::vector<std::pair<Exponents, Integer>> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.emplace_back(unpack(key, var_count_), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

MonomialPoly MonomialPoly::homogeneous_part(int degree) const {
  MonomialPoly out(var_count_);
  for (const auto& [key, c] : terms_) {
    int d = 0;
    for (int i = 0; i < var_count_; ++i) d += static_cast<int>((key >> (8 * i)) & 0xff);
    if (d == degree) out.terms_.emplace(key, c);
  }
  return out;
}

void MonomialPoly::check_compatible(const MonomialPoly& other) const {
  if (other.var_count_ != var_count_) {
    throw UsageError("polynomials over " + std::to_string(var_count_) + " and " +
                     std::to_string(other.var_count_) + " variables cannot be combined");
  }
}

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& other) {
  check_compatible(other);
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MonomialPoly& MonomialPoly::operator-=(const MonomialPoly& other) {
  check_compatible(other);
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MonomialPoly& MonomialPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
  a.check_compatible(b);
  MonomialPoly out(a.var_count_);
  if (a.is_zero() || b.is_zero()) return out;
  // Adding packed keys adds exponents; the total-degree bound keeps every
  // byte from carrying into its neighbour.
  if (a.degree() + b.degree() > kMaxExponent) {
    throw CapacityError("product degree exceeds " + std::to_string(kMaxExponent));
  }
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Integer& slot = out.terms_[ka + kb];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool MonomialPoly::operator==(const MonomialPoly& other) const {
  return var_count_ == other.var_count_ && terms_ == other.terms_;
}

// ---------------------------------------------------------------------------

std::string to_text(const SchurVector& v) {
  struct View {
    const SchurVector& v;
    bool empty() const { return v.empty(); }
    const auto& terms() const { return v.terms(); }
    static char symbol_char() { return SchurBasis::symbol; }
  };
  return vector_to_text(View{v});
}

std::string to_text(const MVector& v) {
  struct View {
    const MVector& v;
    bool empty() const { return v.empty(); }
    const auto& terms() const { return v.terms(); }
    static char symbol_char() { return MonomialBasis::symbol; }
  };
  return vector_to_text(View{v});
}

// ---------------------------------------------------------------------------

std::uint64_t product_work_estimate(std::size_t form_count, int var_count) {
  if (form_count <= 1) return 0;
  const std::size_t left = form_count / 2;
  const std::size_t right = form_count - left;
  std::uint64_t work = sat_add(product_work_estimate(left, var_count),
                               product_work_estimate(right, var_count));
  return sat_add(work, sat_mul(homogeneous_count(static_cast<int>(left), var_count),
                               homogeneous_count(static_cast<int>(right), var_count)));
}

MonomialPoly product_tree(std::span<const MonomialPoly> factors, int var_count) {
  if (factors.empty()) return MonomialPoly::constant(var_count, 1);
  if (factors.size() == 1) return factors.front();
  const std::size_t mid = factors.size() / 2;
  return product_tree(factors.first(mid), var_count) * product_tree(factors.subspan(mid), var_count);
}

MonomialPoly alphabet_product(const Alphabet& alphabet) {
  if (alphabet.size() > static_cast<std::size_t>(kMaxExponent)) {
    throw CapacityError("alphabet of " + std::to_string(alphabet.size()) + " forms exceeds degree limit");
  }
  if (product_work_estimate(alphabet.size(), alphabet.var_count()) > kWorkLimit) {
    throw CapacityError("product of " + std::to_string(alphabet.size()) + " forms in " +
                        std::to_string(alphabet.var_count()) + " variables exceeds the work limit");
  }
  std::vector<MonomialPoly> factors;
  factors.reserve(alphabet.size());
  for (const auto& f : alphabet.forms()) factors.push_back(MonomialPoly::from_form(f));
  return product_tree(factors, alphabet.var_count());
}

namespace {

// Truncated polynomial in t with MonomialPoly coefficients.
using TSeries = std::vector<MonomialPoly>;

std::uint64_t series_work_estimate(std::size_t forms, int max_p, int v) {
  if (forms <= 1) return 0;
  const std::size_t left = forms / 2;
  const std::size_t right = forms - left;
  std::uint64_t work = sat_add(series_work_estimate(left, max_p, v), series_work_estimate(right, max_p, v));
  for (int a = 0; a <= std::min<int>(left, max_p); ++a) {
    for (int b = 0; b <= std::min<int>(right, max_p - a); ++b) {
      work = sat_add(work, sat_mul(homogeneous_count(a, v), homogeneous_count(b, v)));
    }
  }
  return work;
}

TSeries series_tree(std::span<const LinearForm> forms, int max_p, int var_count) {
  if (forms.size() == 1) {
    TSeries leaf{MonomialPoly::constant(var_count, 1)};
    if (max_p >= 1) leaf.push_back(MonomialPoly::from_form(forms.front()));
    return leaf;
  }
  const std::size_t mid = forms.size() / 2;
  const TSeries left = series_tree(forms.first(mid), max_p, var_count);
  const TSeries right = series_tree(forms.subspan(mid), max_p, var_count);
  const std::size_t top = std::min<std::size_t>(left.size() + right.size() - 2, max_p);
  TSeries out(top + 1, MonomialPoly(var_count));
  for (std::size_t a = 0; a < left.size(); ++a) {
    for (std::size_t b = 0; b < right.size() && a + b <= top; ++b) {
      out[a + b] += left[a] * right[b];
    }
  }
  return out;
}

}  // namespace

std::vector<MonomialPoly> elementary_series(const Alphabet& alphabet, int max_p) {
  if (max_p < 0) throw UsageError("elementary_series: max_p must be nonnegative");
  const int v = alphabet.var_count();
  std::vector<MonomialPoly> out(max_p + 1, MonomialPoly(v));
  out[0] = MonomialPoly::constant(v, 1);
  if (alphabet.empty() || max_p == 0) return out;
  const int reach = std::min<int>(max_p, static_cast<int>(alphabet.size()));
  if (reach > kMaxExponent) throw CapacityError("elementary degree exceeds " + std::to_string(kMaxExponent));
  if (series_work_estimate(alphabet.size(), reach, v) > kWorkLimit) {
    throw CapacityError("elementary expansion of " + std::to_string(alphabet.size()) + " forms in " +
                        std::to_string(v) + " variables exceeds the work limit");
  }
  TSeries series = series_tree(alphabet.forms(), reach, v);
  for (std::size_t p = 0; p < series.size(); ++p) out[p] = std::move(series[p]);
  return out;
}

MonomialPoly elementary_of_alphabet(int p, const Alphabet& alphabet) {
  if (p < 0) throw UsageError("elementary_of_alphabet: p must be nonnegative");
  if (static_cast<std::size_t>(p) > alphabet.size()) return MonomialPoly(alphabet.var_count());
  return std::move(elementary_series(alphabet, p)[p]);
}

// ---------------------------------------------------------------------------

MVector to_mvector(const MonomialPoly& poly) {
  const int v = poly.var_count();
  MVector out(v);
  std::map<std::vector<int>, Integer> orbit_seen;
  for (const auto& [exps, c] : poly.terms()) {
    std::vector<int> sorted = sorted_desc(exps);
    if (exps != sorted) {
      if (poly.coefficient(sorted) != c) {
        throw SymmetryError("polynomial is not symmetric: coefficient of x^" + exps_to_string(exps) +
                                " differs from x^" + exps_to_string(sorted),
                            exps, sorted);
      }
    } else {
      out.add(Partition::from_composition(exps), c);
    }
    orbit_seen[sorted] += 1;
  }
  for (const auto& [sorted, seen] : orbit_seen) {
    if (seen == orbit_size(sorted)) continue;
    std::vector<int> perm = sorted;
    do {
      if (poly.coefficient(perm) == 0) {
        throw SymmetryError("polynomial is not symmetric: x^" + exps_to_string(perm) +
                                " is missing while x^" + exps_to_string(sorted) + " is present",
                            perm, sorted);
      }
    } while (std::prev_permutation(perm.begin(), perm.end()));
  }
  return out;
}

MonomialPoly from_mvector(const MVector& v) {
  MonomialPoly out(v.var_count());
  for (const auto& [lambda, c] : v.terms()) {
    std::vector<int> exps(v.var_count(), 0);
    for (int i = 0; i < lambda.length(); ++i) exps[i] = lambda[i];
    do {
      out.add_term(exps, c);
    } while (std::prev_permutation(exps.begin(), exps.end()));
  }
  return out;
}

SchurVector m_to_schur(const MVector& v) {
  const int vars = v.var_count();
  SchurVector out(vars);
  std::map<int, PartitionMap<Integer>> residual_by_grade;
  for (const auto& [lambda, c] : v.terms()) residual_by_grade[lambda.size()].emplace(lambda, c);

  for (auto& [d, residual] : residual_by_grade) {
    const std::vector<Partition> basis = partitions_up_to(d, vars);
    // basis is rev-lex, so the first residual key is always the next pivot.
    std::size_t pivot_index = 0;
    while (!residual.empty()) {
      const Partition lambda = residual.begin()->first;
      const Integer c = residual.begin()->second;
      out.add(lambda, c);
      while (basis[pivot_index] != lambda) ++pivot_index;
      for (std::size_t j = pivot_index; j < basis.size(); ++j) {
        const Partition& mu = basis[j];
        if (!dominance_leq(mu, lambda)) continue;
        const Integer k = kostka(lambda, mu);
        if (k == 0) continue;
        auto [it, inserted] = residual.try_emplace(mu, 0);
        it->second -= c * k;
        if (it->second == 0) residual.erase(it);
      }
    }
  }
  return out;
}

MVector schur_to_m(const SchurVector& v) {
  const int vars = v.var_count();
  MVector out(vars);
  std::map<int, std::vector<Partition>> basis_cache;
  for (const auto& [lambda, c] : v.terms()) {
    auto [it, inserted] = basis_cache.try_emplace(lambda.size());
    if (inserted) it->second = partitions_up_to(lambda.size(), vars);
    for (const Partition& mu : it->second) {
      if (!dominance_leq(mu, lambda)) continue;
      out.add(mu, c * kostka(lambda, mu));
    }
  }
  return out;
}

SchurVector to_schur(const MonomialPoly& poly) { return m_to_schur(to_mvector(poly)); }

SchurVector schur_at_alphabet(const Partition& lambda, const Alphabet& alphabet) {
  const int v = alphabet.var_count();
  if (lambda.length() > static_cast<int>(alphabet.size())) return SchurVector(v);
  if (lambda.empty()) {
    SchurVector one(v);
    one.add(Partition{}, 1);
    return one;
  }
  const Partition conj = conjugate(lambda);
  const int r = conj.length();
  if (r > 16) throw CapacityError("schur_at_alphabet supports lambda_1 <= 16");
  const int top = std::min<int>(conj[0] + r - 1, static_cast<int>(alphabet.size()));
  const std::vector<MonomialPoly> e = elementary_series(alphabet, top);

  auto entry = [&](int i, int j) -> const MonomialPoly* {
    const int index = conj[i] - i + j;
    if (index < 0 || index > top) return nullptr;
    return &e[index];
  };

  // Laplace expansion along successive rows, memoized on the set of columns
  // still available.
  std::unordered_map<unsigned, MonomialPoly> memo;
  std::function<MonomialPoly(int, unsigned)> det = [&](int row, unsigned cols) -> MonomialPoly {
    if (row == r) return MonomialPoly::constant(v, 1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    MonomialPoly acc(v);
    int position = 0;
    for (int j = 0; j < r; ++j) {
      if (!(cols & (1u << j))) continue;
      const MonomialPoly* a = entry(row, j);
      if (a != nullptr && !a->is_zero()) {
        MonomialPoly term = *a * det(row + 1, cols & ~(1u << j));
        if (position % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++position;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return to_schur(det(0, (1u << r) - 1));
}

}  // namespace boolprod
