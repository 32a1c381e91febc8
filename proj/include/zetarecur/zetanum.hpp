#pragma once

#include <utility>

#include "zetarecur/bigfloat.hpp"

namespace zetarecur {

/// A truncated series value with a certified bound on the discarded tail.
struct SeriesResult {
    BigFloat value;
    long terms_used = 0;
    BigFloat tail_bound;
    bool converged = false;  // tail_bound <= requested tol within the term budget
};

/// Rounds x to precision p (to nearest).
BigFloat round_to(const BigFloat& x, mpfr_prec_t p);

/**
 * zeta(2n) = (-1)^{n-1} B_{2n} (2 pi)^{2n} / (2 (2n)!), exact Bernoulli
 * factor times a power of 2*pi evaluated at precision p.
 */
BigFloat zeta_even(long two_n, mpfr_prec_t p);

/**
 * zeta(s) for integer s >= 2 by direct summation to a power-of-two cutoff
 * plus Euler-Maclaurin corrections with exact Bernoulli coefficients. The
 * cutoff being a power of two makes every N^{-s-2j+1} exact in binary, so
 * only the direct partial sum and the final additions round. Accuracy is
 * within 2^{-p+g} for the documented guard g = 32.
 */
BigFloat zeta_int(long s, mpfr_prec_t p);

/**
 * sum_{n>=1} (1/n) sinh(alpha n)/cosh(alpha n)^{2N+1}, truncated once the
 * geometric tail bound
 *   2^{2N} e^{-2 N alpha (n0+1)} / (n0 (1 - e^{-2 N alpha}))
 * drops below tol (valid since sinh(y)/cosh(y)^{2N+1} <= 2^{2N} e^{-2Ny}).
 * This is the literal series: it tends to the limit combination only as
 * alpha -> 0+ (see identities for the limit estimator).
 */
SeriesResult s_sum(const BigFloat& alpha, long N, mpfr_prec_t p, const BigFloat& tol);

/**
 * sum_{n>=1} n^{-(K+1)} sinh(alpha n)^{1+K}/cosh(alpha n)^{2M+1+K} with the
 * analogous tail bound (2^{2M} e^{-2M y} bounds the hyperbolic factor).
 * K = 0 coincides with s_sum(alpha, M, ...).
 */
SeriesResult k_sum(const BigFloat& alpha, long K, long M, mpfr_prec_t p, const BigFloat& tol);

/**
 * sum_{n>=1} coth(beta pi n)/n^s = zeta(s) + 2 sum_{n>=1} 1/(n^s (e^{2 beta pi n}-1));
 * evaluates the correction series with its geometric tail bound and adds
 * zeta(s). terms_used / tail_bound describe the correction series.
 */
SeriesResult coth_sum(const BigFloat& beta, long s, mpfr_prec_t p, const BigFloat& tol);

/**
 * Both sides of Ramanujan's identity for zeta(2n+1) at alpha, with
 * beta = pi^2/alpha:
 *   lhs = (4a)^{-n} [ zeta(2n+1)/2 + sum 1/(m^{2n+1}(e^{2ma}-1)) ]
 *       - (-4b)^{-n} [ same at b ]
 *   rhs = sum_{k=0}^{n+1} (-1)^{k-1} B_{2k}B_{2n-2k+2} / ((2k)!(2n-2k+2)!) a^{n-k+1} b^k
 * Series tails are pushed below the rounding floor of precision p.
 */
std::pair<BigFloat, BigFloat> ramanujan_sides(const BigFloat& alpha, long n, mpfr_prec_t p);

enum class Cor32Family {
    even_zeta,  // the zeta(4M+2) display, M >= 1
    odd_zeta,   // the zeta(4M+4) display, M >= 0
};

/**
 * Both sides of the rewritten Ramanujan displays:
 * even family:
 *   pi a^{-2M} sum coth(a pi n)/n^{4M+1} - pi a^{2M} sum coth(pi n/a)/n^{4M+1}
 *     = -zeta(4M+2)(a^{2M+1} - a^{-(2M+1)})
 *       + 2 sum_{j=1}^{M} (-1)^j zeta(2j) zeta(4M+2-2j)(a^{2M+1-2j} - a^{-(2M+1-2j)})
 * odd family:
 *   pi a^{-(2M+1)} sum coth(a pi n)/n^{4M+3} + pi a^{2M+1} sum coth(pi n/a)/n^{4M+3}
 *     = zeta(4M+4)(a^{2M+2} + a^{-(2M+2)})
 *       - 2 sum_{j=1}^{M} (-1)^j zeta(2j) zeta(4M+4-2j)(a^{2(M+1-j)} + a^{-2(M+1-j)})
 *       + 2 (-1)^M zeta(2M+2)^2
 * The antisymmetric/symmetric grouping keeps both sides identically zero at
 * alpha = 1 in the even family.
 */
std::pair<BigFloat, BigFloat> cor32_sides(const BigFloat& alpha, long M, Cor32Family family,
                                          mpfr_prec_t p);

}  // namespace zetarecur
