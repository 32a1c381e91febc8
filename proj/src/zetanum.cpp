#include "zetarecur/zetanum.hpp"

#include <stdexcept>

#include "zetarecur/exactcore.hpp"

namespace zetarecur {

namespace {

constexpr long kGuardBits = 32;
constexpr long kTermBudget = 2'000'000;

}  // namespace

BigFloat round_to(const BigFloat& x, mpfr_prec_t p) {
    BigFloat r(p);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat zeta_even(long two_n, mpfr_prec_t p) {
    if (two_n < 2 || two_n % 2 != 0) throw std::domain_error("zeta_even: argument must be even >= 2");
    const long n = two_n / 2;
    const mpfr_prec_t wp = p + kGuardBits;

    Rational factor = bernoulli(two_n) / rat(Int(2) * factorial(two_n));
    if (n % 2 == 0) factor = -factor;  // (-1)^{n-1}

    const BigFloat two_pi = ldexp2(BigFloat::pi(wp), 1);
    return round_to(BigFloat::of(factor, wp) * pow_ui(two_pi, static_cast<unsigned long>(two_n)), p);
}

BigFloat zeta_int(long s, mpfr_prec_t p) {
    if (s < 2) throw std::domain_error("zeta_int: s must be >= 2");
    const mpfr_prec_t wp = p + 2 * kGuardBits;

    // power-of-two cutoff, so N^{-s-2j+1} below is an exact ldexp
    long m = 4;
    while ((1L << m) < std::max(16L, static_cast<long>(p) / 4)) ++m;
    const long N = 1L << m;

    BigFloat acc = BigFloat::zero(wp);
    for (long n = 1; n < N; ++n)
        acc += BigFloat::of(1L, wp) / pow_ui(BigFloat::of(n, wp), static_cast<unsigned long>(s));

    // N^{1-s}/(s-1) + N^{-s}/2
    acc += ldexp2(BigFloat::of(rat(1, s - 1), wp), -m * (s - 1));
    acc += ldexp2(BigFloat::of(1L, wp), -m * s - 1);

    // Euler-Maclaurin corrections; the asymptotic terms shrink until
    // 2j ~ 2 pi N, far beyond the target threshold for our cutoffs.
    const BigFloat floor = BigFloat::pow2(-(static_cast<long>(wp) + 2), wp);
    Int rising(s);  // prod_{i=0}^{2j-2} (s+i), maintained incrementally
    BigFloat last_term(wp);
    for (long j = 1;; ++j) {
        // rising currently holds prod_{i=0}^{2j-2}(s+i)
        const Rational coef = bernoulli(2 * j) / rat(factorial(2 * j)) * rat(rising);
        BigFloat term = ldexp2(BigFloat::of(coef, wp), -m * (s + 2 * j - 1));
        acc += term;
        last_term = abs(term);
        if (last_term < floor) break;
        if (j > 4 * static_cast<long>(p)) throw std::logic_error("zeta_int: correction did not converge");
        rising *= Int(s + 2 * j - 1) * Int(s + 2 * j);
    }
    return round_to(acc, p);
}

SeriesResult k_sum(const BigFloat& alpha, long K, long M, mpfr_prec_t p, const BigFloat& tol) {
    if (!(alpha.sign() > 0)) throw std::domain_error("k_sum: alpha must be positive");
    if (K < 0 || M < 1) throw std::domain_error("k_sum: need K >= 0, M >= 1");
    if (!(tol.sign() > 0)) throw std::domain_error("k_sum: tol must be positive");
    const mpfr_prec_t wp = p + kGuardBits;

    const BigFloat a = round_to(alpha, wp);
    const BigFloat q = exp(-ldexp2(mul_long(a, M), 1));  // e^{-2 M alpha}
    const BigFloat one = BigFloat::of(1L, wp);
    const BigFloat pref = BigFloat::pow2(2 * M, wp) / (one - q);

    SeriesResult out;
    BigFloat acc = BigFloat::zero(wp);
    BigFloat qpow = q;  // q^{n+1} ... starts at q^2 after first bump below
    long n = 1;
    for (;; ++n) {
        const auto [sh, ch] = sinh_cosh(mul_long(a, n));
        BigFloat term = pow_ui(sh, static_cast<unsigned long>(1 + K)) /
                        pow_ui(ch, static_cast<unsigned long>(2 * M + 1 + K));
        term = term / pow_ui(BigFloat::of(n, wp), static_cast<unsigned long>(K + 1));
        acc += term;

        qpow *= q;  // q^{n+1}
        BigFloat bound = pref * qpow / pow_ui(BigFloat::of(n, wp), static_cast<unsigned long>(K + 1));
        if (bound <= tol) {
            out.tail_bound = round_to(bound, p);
            out.converged = true;
            break;
        }
        if (n >= kTermBudget) {
            out.tail_bound = round_to(bound, p);
            out.converged = false;
            break;
        }
    }
    out.value = round_to(acc, p);
    out.terms_used = n;
    return out;
}

SeriesResult s_sum(const BigFloat& alpha, long N, mpfr_prec_t p, const BigFloat& tol) {
    return k_sum(alpha, 0, N, p, tol);
}

SeriesResult coth_sum(const BigFloat& beta, long s, mpfr_prec_t p, const BigFloat& tol) {
    if (!(beta.sign() > 0)) throw std::domain_error("coth_sum: beta must be positive");
    if (s < 2) throw std::domain_error("coth_sum: s must be >= 2");
    if (!(tol.sign() > 0)) throw std::domain_error("coth_sum: tol must be positive");
    const mpfr_prec_t wp = p + kGuardBits;

    const BigFloat b = round_to(beta, wp);
    const BigFloat two_b_pi = ldexp2(b * BigFloat::pi(wp), 1);
    const BigFloat q = exp(-two_b_pi);
    const BigFloat one = BigFloat::of(1L, wp);
    const BigFloat pref = ldexp2(one, 1) / (one - q);  // 2/(1-q)

    SeriesResult out;
    BigFloat acc = BigFloat::zero(wp);
    BigFloat qpow = q;
    long n = 1;
    for (;; ++n) {
        BigFloat x = mul_long(two_b_pi, n);
        BigFloat term = ldexp2(one, 1) /
                        (pow_ui(BigFloat::of(n, wp), static_cast<unsigned long>(s)) * expm1(x));
        acc += term;

        qpow *= q;
        BigFloat bound = pref * qpow;
        // 1/(e^y - 1) <= 2 e^{-y} needs y >= ln 2; ensured before stopping
        if (bound <= tol && mul_long(two_b_pi, n + 1) >= one) {
            out.tail_bound = round_to(bound, p);
            out.converged = true;
            break;
        }
        if (n >= kTermBudget) {
            out.tail_bound = round_to(bound, p);
            out.converged = false;
            break;
        }
    }
    out.value = round_to(acc + zeta_int(s, wp), p);
    out.terms_used = n;
    return out;
}

namespace {

// zeta(2n+1)/2 + sum_m 1/(m^{2n+1}(e^{2mx}-1)) at working precision wp
BigFloat ramanujan_bracket(const BigFloat& x, long n, mpfr_prec_t wp) {
    const BigFloat one = BigFloat::of(1L, wp);
    const BigFloat two_x = ldexp2(x, 1);
    const BigFloat q = exp(-two_x);
    const BigFloat floor = BigFloat::pow2(-(static_cast<long>(wp) - 8), wp);
    const BigFloat pref = ldexp2(one, 1) / (one - q);

    BigFloat acc = ldexp2(zeta_int(2 * n + 1, wp), -1);
    BigFloat qpow = q;
    for (long m = 1;; ++m) {
        acc += one / (pow_ui(BigFloat::of(m, wp), static_cast<unsigned long>(2 * n + 1)) *
                      expm1(mul_long(two_x, m)));
        qpow *= q;
        if (pref * qpow <= floor && mul_long(two_x, m + 1) >= one) break;
        if (m >= kTermBudget) throw std::runtime_error("ramanujan_bracket: term budget exhausted");
    }
    return acc;
}

}  // namespace

std::pair<BigFloat, BigFloat> ramanujan_sides(const BigFloat& alpha, long n, mpfr_prec_t p) {
    if (!(alpha.sign() > 0)) throw std::domain_error("ramanujan_sides: alpha must be positive");
    if (n < 1) throw std::domain_error("ramanujan_sides: n must be >= 1");
    const mpfr_prec_t wp = p + 2 * kGuardBits;

    const BigFloat a = round_to(alpha, wp);
    const BigFloat pi = BigFloat::pi(wp);
    const BigFloat b = pi * pi / a;

    const BigFloat pow4a = pow_ui(ldexp2(a, 2), static_cast<unsigned long>(n));
    const BigFloat pow4b = pow_ui(ldexp2(b, 2), static_cast<unsigned long>(n));
    BigFloat lhs = ramanujan_bracket(a, n, wp) / pow4a;
    BigFloat second = ramanujan_bracket(b, n, wp) / pow4b;
    if (n % 2 == 0)
        lhs -= second;  // (-4b)^n = (4b)^n
    else
        lhs += second;

    BigFloat rhs = BigFloat::zero(wp);
    for (long k = 0; k <= n + 1; ++k) {
        Rational coef = bernoulli(2 * k) * bernoulli(2 * n - 2 * k + 2) /
                        rat(factorial(2 * k) * factorial(2 * n - 2 * k + 2));
        if (k % 2 == 0) coef = -coef;  // (-1)^{k-1}
        rhs += BigFloat::of(coef, wp) * pow_ui(a, static_cast<unsigned long>(n - k + 1)) *
               pow_ui(b, static_cast<unsigned long>(k));
    }
    return {round_to(lhs, p), round_to(rhs, p)};
}

std::pair<BigFloat, BigFloat> cor32_sides(const BigFloat& alpha, long M, Cor32Family family,
                                          mpfr_prec_t p) {
    if (!(alpha.sign() > 0)) throw std::domain_error("cor32_sides: alpha must be positive");
    if (family == Cor32Family::even_zeta && M < 1)
        throw std::domain_error("cor32_sides: even family needs M >= 1");
    if (family == Cor32Family::odd_zeta && M < 0)
        throw std::domain_error("cor32_sides: odd family needs M >= 0");
    const mpfr_prec_t wp = p + 2 * kGuardBits;

    const BigFloat a = round_to(alpha, wp);
    const BigFloat inv_a = BigFloat::of(1L, wp) / a;
    const BigFloat pi = BigFloat::pi(wp);
    const BigFloat tol = BigFloat::pow2(-(static_cast<long>(wp) - 8), wp);

    auto apow = [&](long e) {  // alpha^e for signed e
        return e >= 0 ? pow_ui(a, static_cast<unsigned long>(e))
                      : pow_ui(inv_a, static_cast<unsigned long>(-e));
    };

    if (family == Cor32Family::even_zeta) {
        const long s = 4 * M + 1;
        BigFloat lhs = pi * apow(-2 * M) * coth_sum(a, s, wp, tol).value -
                       pi * apow(2 * M) * coth_sum(inv_a, s, wp, tol).value;

        BigFloat rhs = -zeta_even(4 * M + 2, wp) * (apow(2 * M + 1) - apow(-(2 * M + 1)));
        for (long j = 1; j <= M; ++j) {
            BigFloat term = ldexp2(zeta_even(2 * j, wp) * zeta_even(4 * M + 2 - 2 * j, wp), 1) *
                            (apow(2 * M + 1 - 2 * j) - apow(-(2 * M + 1 - 2 * j)));
            rhs += (j % 2 == 0) ? term : -term;
        }
        return {round_to(lhs, p), round_to(rhs, p)};
    }

    const long s = 4 * M + 3;
    BigFloat lhs = pi * apow(-(2 * M + 1)) * coth_sum(a, s, wp, tol).value +
                   pi * apow(2 * M + 1) * coth_sum(inv_a, s, wp, tol).value;

    BigFloat rhs = zeta_even(4 * M + 4, wp) * (apow(2 * M + 2) + apow(-(2 * M + 2)));
    for (long j = 1; j <= M; ++j) {
        BigFloat term = ldexp2(zeta_even(2 * j, wp) * zeta_even(4 * M + 4 - 2 * j, wp), 1) *
                        (apow(2 * (M + 1 - j)) + apow(-2 * (M + 1 - j)));
        rhs += (j % 2 == 0) ? -term : term;  // -2 (-1)^j (...)
    }
    {
        BigFloat sq = zeta_even(2 * M + 2, wp);
        BigFloat term = ldexp2(sq * sq, 1);
        rhs += (M % 2 == 0) ? term : -term;  // +2 (-1)^M zeta(2M+2)^2
    }
    return {round_to(lhs, p), round_to(rhs, p)};
}

}  // namespace zetarecur
