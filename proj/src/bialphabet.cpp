#include "boolprod/bialphabet.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace boolprod {

Integer BiSchurVector::coefficient(const Partition& lambda, const Partition& mu) const {
  auto it = terms_.find({lambda, mu});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BiSchurVector::add(const Partition& lambda, const Partition& mu, const Integer& coeff) {
  if (lambda.length() > n_ || mu.length() > m_) {
    throw UsageError("pair (" + lambda.to_string() + ", " + mu.to_string() + ") exceeds " +
                     std::to_string(n_) + " x " + std::to_string(m_) + " variables");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({lambda, mu}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool BiSchurVector::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second >= 0; });
}

BiSchurVector BiSchurVector::transposed() const {
  BiSchurVector out(m_, n_);
  for (const auto& [key, c] : terms_) out.add(key.second, key.first, c);
  return out;
}

std::string BiSchurVector::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1) out << magnitude.get_str();
    out << "s[" << key.first.to_string() << "]*s[" << key.second.to_string() << ']';
    first = false;
  }
  return out.str();
}

namespace {

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int i = next; i < n; ++i) {
      current.push_back(i);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string exps_to_string(const std::vector<int>& exps) {
  std::string s = "(";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exps[i]);
  }
  return s + ")";
}

Integer distinct_permutations(const std::vector<int>& v) {
  std::vector<int> sorted = sorted_desc(v);
  Integer out = factorial(static_cast<long>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out /= factorial(static_cast<long>(j - i));
    i = j;
  }
  return out;
}

// Double monomial-symmetric coefficients keyed by (x-block, y-block)
// partitions, after checking symmetry within each block.
std::map<std::pair<Partition, Partition>, Integer> double_m_extract(const MonomialPoly& poly, int n) {
  std::map<std::pair<Partition, Partition>, Integer> out;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> orbit_seen;
  for (const auto& [exps, c] : poly.terms()) {
    const std::vector<int> alpha(exps.begin(), exps.begin() + n);
    const std::vector<int> beta(exps.begin() + n, exps.end());
    const std::vector<int> sa = sorted_desc(alpha);
    const std::vector<int> sb = sorted_desc(beta);
    if (alpha != sa && poly.coefficient(concat(sa, beta)) != c) {
      throw SymmetryError("not symmetric in the x block: x^" + exps_to_string(alpha) + " vs x^" +
                              exps_to_string(sa),
                          alpha, sa, "x");
    }
    if (beta != sb && poly.coefficient(concat(alpha, sb)) != c) {
      throw SymmetryError("not symmetric in the y block: y^" + exps_to_string(beta) + " vs y^" +
                              exps_to_string(sb),
                          beta, sb, "y");
    }
    if (alpha == sa && beta == sb) {
      out.emplace(std::make_pair(Partition::from_composition(sa), Partition::from_composition(sb)), c);
    }
    orbit_seen[{sa, sb}] += 1;
  }
  for (const auto& [key, seen] : orbit_seen) {
    const auto& [sa, sb] = key;
    if (seen == distinct_permutations(sa) * distinct_permutations(sb)) continue;
    std::vector<int> alpha = sa;
    do {
      if (poly.coefficient(concat(alpha, sb)) == 0) {
        throw SymmetryError("not symmetric in the x block: x^" + exps_to_string(alpha) + " missing",
                            alpha, sa, "x");
      }
    } while (std::prev_permutation(alpha.begin(), alpha.end()));
    std::vector<int> beta = sb;
    do {
      if (poly.coefficient(concat(sa, beta)) == 0) {
        throw SymmetryError("not symmetric in the y block: y^" + exps_to_string(beta) + " missing",
                            beta, sb, "y");
      }
    } while (std::prev_permutation(beta.begin(), beta.end()));
  }
  return out;
}

}  // namespace

BiSchurVector pjk_expand(int n, int m, int j, int k) {
  if (n < 0 || m < 0 || (n == 0 && m == 0)) {
    throw UsageError("need n, m >= 0, not both zero; got n = " + std::to_string(n) +
                     ", m = " + std::to_string(m));
  }
  if (j < 0 || j > n) throw UsageError("j must satisfy 0 <= j <= n, got " + std::to_string(j));
  if (k < 0 || k > m) throw UsageError("k must satisfy 0 <= k <= m, got " + std::to_string(k));
  if (n + m > kMaxVars) {
    throw CapacityError("n + m = " + std::to_string(n + m) + " exceeds the " +
                        std::to_string(kMaxVars) + "-variable limit");
  }
  const Integer forms = binomial(n, j) * binomial(m, k);
  if (forms > kMaxBialphabetForms) {
    throw CapacityError("product has " + forms.get_str() + " forms, limit is " +
                        std::to_string(kMaxBialphabetForms));
  }

  Alphabet alphabet(n + m);
  for (const auto& s : subsets_lex(n, j)) {
    for (const auto& t : subsets_lex(m, k)) {
      LinearForm form{std::vector<long>(n + m, 0)};
      for (int i : s) form.coeffs[i] = 1;
      for (int i : t) form.coeffs[n + i] = 1;
      alphabet.push_back(std::move(form));
    }
  }
  const MonomialPoly product = alphabet_product(alphabet);
  const auto double_m = double_m_extract(product, n);

  // Invert the Kostka matrix in the x block for each fixed y-partition, then
  // in the y block for each fixed x-partition.
  std::map<Partition, MVector, GradedRevLex> by_y;
  for (const auto& [key, c] : double_m) {
    by_y.try_emplace(key.second, MVector(n)).first->second.add(key.first, c);
  }
  std::map<Partition, MVector, GradedRevLex> by_x;
  for (const auto& [mu, xpart] : by_y) {
    const SchurVector xschur = m_to_schur(xpart);
    for (const auto& [lambda, c] : xschur.terms()) {
      by_x.try_emplace(lambda, MVector(m)).first->second.add(mu, c);
    }
  }
  BiSchurVector out(n, m);
  for (const auto& [lambda, ypart] : by_x) {
    const SchurVector yschur = m_to_schur(ypart);
    for (const auto& [nu, c] : yschur.terms()) out.add(lambda, nu, c);
  }
  return out;
}

BiSchurVector dual_cauchy_reference(int n, int m) {
  if (n < 1 || m < 1) throw UsageError("dual_cauchy_reference needs n, m >= 1");
  if (n * m > 16) throw CapacityError("dual_cauchy_reference supports n * m <= 16");
  const Partition box(std::vector<int>(n, m));
  BiSchurVector out(n, m);
  for (const Partition& lambda : subpartitions(box)) {
    std::vector<int> complement(n);
    for (int i = 0; i < n; ++i) complement[i] = m - lambda[n - 1 - i];
    out.add(lambda, conjugate(Partition::from_composition(complement)), 1);
  }
  return out;
}

}  // namespace boolprod
