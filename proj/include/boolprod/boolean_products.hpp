#pragma once

#include "boolprod/symengine.hpp"

namespace boolprod {

/// The subset-sum alphabet X^(k): one 0/1 form per k-subset of [n], subsets
/// in lexicographic order of their sorted elements.
Alphabet subset_alphabet(int n, int k);

/// Schur expansion of e_p(X^(k)). Zero vector when p > C(n,k).
SchurVector ep_subset(int n, int k, int p);

/// Schur expansions of e_0(X^(k)), ..., e_{C(n,k)}(X^(k)) from one shared
/// product tree.
std::vector<SchurVector> ep_subset_all(int n, int k);

/// B_{n,k} = product of X_S over k-subsets S.
SchurVector boolean_product(int n, int k);

/// The monomial expansion of B_{n,k}.
MonomialPoly boolean_product_poly(int n, int k);

inline constexpr int kMaxTotalBooleanN = 5;

/// B_n = product over k of B_{n,k}, multiplied in monomial space and then
/// converted. n above kMaxTotalBooleanN is a CapacityError.
SchurVector total_boolean(int n);

}  // namespace boolprod
