#pragma once

#include <vector>

#include "zetarecur/rational.hpp"
#include "zetarecur/report.hpp"

namespace zetarecur {

/**
 * Triangular table c[n][k], n = 0..n_max. Rows n >= 1 hold k = 0..n with
 * c[n][0] = 0; row 0 is the seed row c_{0,k} = (-1)^{k+1} 4^{-k} binom(2k,k)
 * materialized for k = 0..n_max (it is not triangular and exists so the
 * k >= 2 vanishing of row 1 can be checked).
 */
using CTable = std::vector<std::vector<Rational>>;

/// h[k][n]: h_{1,n} = 1, h_{k,n} = sum_{j=k-1}^{n-1} h_{k-1,j}/j^2; zero for k > n.
using HTable = std::vector<std::vector<Rational>>;

/// Square matrices indexed 1..n_max (index 0 unused).
using RMatrix = std::vector<std::vector<Rational>>;

struct CoeffTables {
    long n_max = 0;
    CTable c;
    HTable h;   // h[k][n], k,n <= n_max
    RMatrix U;  // u_{n,k} = (-1)^n c_{n,k} / (2n)!
    RMatrix V;  // inverse of U
    RMatrix L;  // l_{n,k} = 2^{2k+1} binom(k, n-k) for k <= n <= min(2k, n_max)
    RMatrix D;  // d_{i,i} = 2^{2i+1}
};

/// Limit-identity coefficients r_k, k = 1..N (index 0 unused).
struct LimitCoeffs {
    long N = 0;
    std::vector<Rational> r;
};

/**
 * Builds c two ways — closed form
 *   c_{n,k} = (2/4^k) sum_{j=1}^{k} (-1)^{k-j} binom(2k, k-j) (2j)^{2n}
 * and the recurrence c_{n,1} = 4^n/2, c_{n,k} = 2k(2k-1)c_{n-1,k-1} +
 * 4k^2 c_{n-1,k} (2 <= k <= n-1), c_{n,n} = (2n)!.
 * Route disagreement throws: it can only mean an implementation bug.
 */
CTable build_c(long n_max);

HTable build_h(long n_max, long k_max);

/// U from c; verifies the row recurrence for u along the way (throws on mismatch).
RMatrix build_U(long n_max, const CTable& c);

/**
 * Builds V three ways — the v-recurrence, the closed form via h, and exact
 * triangular inversion of U — and requires exact three-way agreement
 * (throws on disagreement).
 */
RMatrix build_V(long n_max, const HTable& h, const RMatrix& U);

RMatrix build_L(long n_max);
RMatrix build_D(long n_max);

CoeffTables build_tables(long n_max);

/**
 * Checks on a built c table: the binomial recurrence
 * sum_{i=k}^{n} binom(k, i-k) c_{n,i} = 2^{2(n-k)} c_{n,k}, the closed value
 * a_{n,1} = 2^{4n-3}, and the a-recurrence
 * a_{n,k} = 2k(2k-1) a_{n-1,k-1} + 16k^2 a_{n-1,k}.
 */
IdentityReport check_binomial_recurrence(const CoeffTables& t);

/**
 * Exact matrix identities: UV = I, VU = I, UL = DU, LV = VD, plus the two
 * written-out row families of LV = VD for all admissible (M, j).
 */
IdentityReport check_matrix_identities(const CoeffTables& t);

/// r_k = (2k)! (2^{2N+1} - 2^{2(N-k)}) h_{k,N} / (N^2 binom(2N,N)), k = 1..N.
LimitCoeffs limit_coeffs(long N);
LimitCoeffs limit_coeffs(long N, const HTable& h);

}  // namespace zetarecur
