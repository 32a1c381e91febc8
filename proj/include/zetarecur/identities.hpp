#pragma once

#include <map>
#include <vector>

#include "zetarecur/bigfloat.hpp"
#include "zetarecur/coeffs.hpp"
#include "zetarecur/report.hpp"
#include "zetarecur/zetanum.hpp"

namespace zetarecur {

/**
 * Certificate for an alpha -> 0+ limit: residuals of the limit estimator
 * against the target along a strictly decreasing alpha schedule. Passes iff
 * the final residual is below tol and the residuals are non-increasing
 * across the tail of the schedule.
 */
struct LimitCertificate {
    long N = 0;  // for K-limits this is M
    long K = 0;
    std::vector<BigFloat> schedule;
    std::vector<BigFloat> residuals;
    BigFloat target;
    BigFloat series_tail_bound;  // largest certified series tail on the schedule
    long terms_used = 0;         // total series terms across the schedule
    bool pass = false;
};

/// Exact reduction of a K-weighted limit onto K = 0 base limits.
struct KCombo {
    long K = 0;
    long M = 0;
    std::map<long, Rational> weights;      // base index M' -> weight, M' = M..M+K
    std::map<long, Rational> zeta_coeffs;  // j -> coefficient of zeta(2j+1)/pi^{2j}
};

struct Cor41Report {
    long J = 0;
    long n_budget = 0;
    BigFloat lhs;
    BigFloat rhs;
    BigFloat residual;
    BigFloat inner_tail_bound;  // truncation of the n-sums
    BigFloat outer_tail_bound;  // truncation of the j-sum
    // assembled coefficient of zeta(2j+1)/pi^{2j} with everything on one
    // side (j = 1 includes the -28); exact for the given budgets
    std::map<long, Rational> coeffs;
    bool pass = false;
};

/// One emitted linear relation among zeta(2j+1)/pi^{2j}.
struct TanhRelation {
    long N = 0;
    long k_max = 0;
    std::map<long, Rational> kappa;  // j -> exact coefficient of zeta(2j+1)/pi^{2j}
    BigFloat residual;               // |sum_j kappa_j zeta(2j+1)/pi^{2j}|
    BigFloat tail_bound;             // contribution bound of the dropped k > k_max terms
    bool pass = false;
};

/// Geometric halving schedule anchor, anchor/2, ..., anchor/2^{steps-1}.
std::vector<BigFloat> halving_schedule(const BigFloat& anchor, int steps = 5);

/// Target sum_k r_k(N) zeta(2k+1)/pi^{2k} with exact r_k.
BigFloat limit_target(long N, mpfr_prec_t p);

/**
 * Limit estimator for the hyperbolic sums: series value plus alpha/2. The
 * summand t -> sinh(t)^{1+K}/(t^{K+1} cosh(t)^{2M+1+K}) is an even analytic
 * function equal to 1 at t = 0, so the half-weight boundary term turns the
 * O(alpha) Riemann-sum error into one that vanishes faster than any power
 * of alpha; what remains decays like e^{-pi^2/alpha}.
 */
BigFloat limit_estimate(const BigFloat& alpha, long K, long M, mpfr_prec_t p, long* terms = nullptr,
                        BigFloat* series_tail = nullptr);

LimitCertificate verify_limit(long N, const std::vector<BigFloat>& schedule, mpfr_prec_t p,
                              const BigFloat& tol);

/**
 * Certifies the zeta(3) recurrence: the weighted zeta(3) series plus the
 * double sum with h_{j,n+1} weights against 28 zeta(3)/pi^2, with inner
 * (n > n_budget) and outer (j > J) truncation bounds reported.
 */
Cor41Report verify_recurrence_cor41(long J, long n_budget, mpfr_prec_t p, const BigFloat& tol);

/**
 * At each point x > 0 checks
 *   tanh(x) sum_{k>=0} (1/(2 cosh^2 x))^k = tanh(2x)
 *   sum_{k>=1} k(k+1) 2^{-k} sinh(x)/cosh(x)^{2k+3} = 4 sinh(2x)/cosh(2x)^3
 * to within 2^{-p+16}; the common ratio 1/(2 cosh^2 x) <= 1/2 gives the
 * geometric tails.
 */
IdentityReport verify_tanh_ids(const std::vector<BigFloat>& points, mpfr_prec_t p);

/**
 * l'Hopital reduction L(K,M) = -(2M/K) L(K-1,M) + ((K+2M+1)/K) L(K-1,M+1)
 * down to base limits L(0,M'), then exact zeta-combination coefficients via
 * limit_coeffs.
 */
KCombo klimit_combo(long K, long M);

BigFloat kcombo_value(const KCombo& combo, mpfr_prec_t p);

/**
 * Directly evaluates (1/alpha^K) sum_n n^{-(K+1)} sinh(alpha n)^{1+K} /
 * cosh(alpha n)^{2M+1+K} along the schedule (with the limit estimator's
 * boundary correction) against klimit_combo's value.
 */
LimitCertificate verify_klimit(long K, long M, const std::vector<BigFloat>& schedule,
                               mpfr_prec_t p, const BigFloat& tol);

/**
 * Emits the relation among zeta(2j+1)/pi^{2j} obtained by applying the
 * limit identity termwise to the 2(N-1)-fold derivative of the tanh-basis
 * identity behind the zeta(3) recurrence; N = 1 reproduces that recurrence.
 * kappa coefficients are exact for the k <= k_max truncation; the dropped
 * terms are bounded in tail_bound.
 */
TanhRelation generate_tanh_recurrence(long N, long k_max, mpfr_prec_t p, const BigFloat& tol);

}  // namespace zetarecur
