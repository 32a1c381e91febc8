#pragma once

#include <cstddef>
#include <vector>

#include "zetarecur/rational.hpp"

namespace zetarecur {

/**
 * Binomial coefficient with the zero conventions used throughout the
 * coefficient identities: binom(n,k) = 0 for k < 0 and for n < k
 * (the latter covers negative n with k >= 0).
 *
 * The conventions matter: these coefficients appear inside signed
 * alternating sums where a wrong zero/nonzero silently corrupts results.
 */
Int binom(long n, long k);

/// Exact n!; rejects negative input.
Int factorial(long n);

/**
 * Bernoulli numbers B_0 = 1, B_1 = -1/2, B_{2k+1} = 0 (k >= 1), computed by
 * the defining recurrence sum_{j=0}^{m} binom(m+1, j) B_j = 0. Values are
 * memoized; the table is guarded so concurrent callers only observe fully
 * computed entries.
 */
Rational bernoulli(long r);

/// Snapshot of the memoized Bernoulli prefix B_0..B_r.
std::vector<Rational> bernoulli_prefix(long r);

}  // namespace zetarecur
