#pragma once

#include <vector>

#include "leaky/problem.hpp"
#include "leaky/rational.hpp"

namespace leaky {

/// Integral of psi_1^e_1 ... psi_n^e_n over M_{0,n}: (n-3)!/prod e_i! when
/// |e| = n-3 and n >= 3, zero otherwise (also for negative entries).
Rational psi_integral(int n, const std::vector<int>& e);

/// Integral of psi^e kappa_1^f over M_{0,n}, by adding a marking and trading
/// one kappa_1 for psi_{n+1}^2 until f = 0. Memoized; safe to call
/// concurrently.
Rational psi_kappa_integral(int n, const std::vector<int>& e, int f);

/// x_s (2g-2+n) * psi_kappa_integral(n, e, f) for a genus-0 problem.
Rational recursion_lhs(const Problem& p, int s, int f);

/// Right side of the genus-0 descendant recursion at marking s (1-based):
///   k * I(n, e - delta_s, f + 1)
///   + sum over two-vertex covers (I0 left, I1 right, delta > 0) of
///     rho * delta * binom(f; f0, f1) * I(|I0|+1, ...) * I(|I1|+1, ...)
/// with rho = |I1|-1 when s is in I0 and -(|I0|-1) otherwise.
/// Requires g = 0, e_s >= 1 and |e| + f = n - 3.
Rational recursion_rhs(const Problem& p, int s, int f);

}  // namespace leaky
