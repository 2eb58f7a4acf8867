#pragma once

#include "boolprod/qpoly.hpp"
#include "boolprod/symengine.hpp"

namespace boolprod {

using QSchurVector = PartitionVector<SchurBasis, QPoly>;

inline constexpr int kMaxDerangementN = 7;
inline constexpr int kMaxSytN = 8;

/// B_{n,n-1}(X;q) = sum_j q^j e_j(X) e_1(X)^{n-j}, expanded per j.
QSchurVector bnm1_q(int n);

/// Substitutes q = q0 into every coefficient.
SchurVector evaluate_at(const QSchurVector& v, const Integer& q0);

/// a_lambda = #{T in SYT(lambda) : smallest ascent of T is even}, for every
/// lambda of n (zero entries included).
PartitionMap<Integer> a_coeffs_syt(int n);

/// sum_j (-1)^j e_j(X) e_1(X)^{n-j}.
SchurVector alternating_expansion(int n);

/// sum_lambda c_lambda f^lambda. Keys must all have the same size.
Integer frobenius_dimension(const SchurVector& v);
Integer frobenius_dimension(const QSchurVector& v, const Integer& q0);

}  // namespace boolprod
