#include "zetarecur/identities.hpp"

#include <sstream>
#include <stdexcept>

#include "zetarecur/cothalg.hpp"
#include "zetarecur/exactcore.hpp"

namespace zetarecur {

namespace {

constexpr long kGuardBits = 32;

void require_schedule(const std::vector<BigFloat>& schedule) {
    if (schedule.empty()) throw std::domain_error("schedule must be non-empty");
    for (size_t i = 0; i < schedule.size(); ++i) {
        if (!(schedule[i].sign() > 0)) throw std::domain_error("schedule values must be positive");
        if (i > 0 && !(schedule[i] < schedule[i - 1]))
            throw std::domain_error("schedule must be strictly decreasing");
    }
}

bool tail_non_increasing(const std::vector<BigFloat>& r) {
    // the last few steps must not grow; earlier plateaus don't matter
    const size_t pairs = std::min<size_t>(3, r.size() - 1);
    for (size_t i = r.size() - pairs; i < r.size(); ++i)
        if (r[i] > r[i - 1]) return false;
    return true;
}

// A measured residual of zero at precision p only certifies "below the
// rounding floor"; tolerances finer than the floor cannot be claimed.
bool tol_certifiable(const BigFloat& tol, mpfr_prec_t p) {
    return tol >= BigFloat::pow2(-(static_cast<long>(p) - 16), 64);
}

}  // namespace

std::vector<BigFloat> halving_schedule(const BigFloat& anchor, int steps) {
    if (!(anchor.sign() > 0)) throw std::domain_error("halving_schedule: anchor must be positive");
    std::vector<BigFloat> out;
    for (int j = 0; j < steps; ++j) out.push_back(ldexp2(anchor, -j));
    return out;
}

BigFloat limit_target(long N, mpfr_prec_t p) {
    const mpfr_prec_t wp = p + kGuardBits;
    const LimitCoeffs rc = limit_coeffs(N);
    const BigFloat pi = BigFloat::pi(wp);
    BigFloat acc = BigFloat::zero(wp);
    for (long k = 1; k <= N; ++k)
        acc += BigFloat::of(rc.r[k], wp) * zeta_int(2 * k + 1, wp) /
               pow_ui(pi, 2 * static_cast<unsigned long>(k));
    return round_to(acc, p);
}

BigFloat limit_estimate(const BigFloat& alpha, long K, long M, mpfr_prec_t p, long* terms,
                        BigFloat* series_tail) {
    const mpfr_prec_t wp = p + kGuardBits;
    const BigFloat tol = BigFloat::pow2(-(static_cast<long>(p) + 16), wp);
    SeriesResult sr = k_sum(alpha, K, M, wp, tol);
    if (terms) *terms = sr.terms_used;
    if (series_tail) *series_tail = sr.tail_bound;
    BigFloat value = sr.value;
    if (K > 0) value = value / pow_ui(round_to(alpha, wp), static_cast<unsigned long>(K));
    return round_to(value + ldexp2(round_to(alpha, wp), -1), p);
}

namespace {

LimitCertificate run_limit_schedule(long K, long M, const std::vector<BigFloat>& schedule,
                                    mpfr_prec_t p, const BigFloat& tol, const BigFloat& target) {
    require_schedule(schedule);
    LimitCertificate cert;
    cert.N = M;
    cert.K = K;
    cert.schedule = schedule;
    cert.target = target;
    cert.series_tail_bound = BigFloat::zero(p);
    for (const BigFloat& a : schedule) {
        long terms = 0;
        BigFloat tail(p);
        const BigFloat est = limit_estimate(a, K, M, p, &terms, &tail);
        cert.residuals.push_back(abs(est - target));
        cert.terms_used += terms;
        if (tail > cert.series_tail_bound) cert.series_tail_bound = tail;
    }
    cert.pass = (cert.residuals.back() < tol) && tail_non_increasing(cert.residuals) &&
                tol_certifiable(tol, p);
    return cert;
}

}  // namespace

LimitCertificate verify_limit(long N, const std::vector<BigFloat>& schedule, mpfr_prec_t p,
                              const BigFloat& tol) {
    if (N < 1) throw std::domain_error("verify_limit: N must be >= 1");
    return run_limit_schedule(0, N, schedule, p, tol, limit_target(N, p));
}

Cor41Report verify_recurrence_cor41(long J, long n_budget, mpfr_prec_t p, const BigFloat& tol) {
    if (J < 2) throw std::domain_error("verify_recurrence_cor41: J must be >= 2");
    if (n_budget < 10) throw std::domain_error("verify_recurrence_cor41: n_budget must be >= 10");
    const mpfr_prec_t wp = p + 2 * kGuardBits;

    Cor41Report rep;
    rep.J = J;
    rep.n_budget = n_budget;

    // w_n = n 2^n / ((n+1) binom(2n+2, n+1)), exact
    std::vector<Rational> w(n_budget + 2);
    for (long n = 1; n <= n_budget + 1; ++n)
        w[n] = rat(Int(n) * pow2(static_cast<unsigned long>(n)),
                   Int(n + 1) * binom(2 * n + 2, n + 1));

    const HTable h = build_h(n_budget + 1, J);
    const BigFloat pi = BigFloat::pi(wp);
    const BigFloat z3_over_pi2 = zeta_int(3, wp) / (pi * pi);

    Rational wsum(0);
    for (long n = 1; n <= n_budget; ++n) wsum += w[n];
    BigFloat lhs = BigFloat::of(Rational(14) * wsum, wp) * z3_over_pi2;
    rep.coeffs[1] = Rational(14) * wsum - Rational(28);

    for (long j = 2; j <= J; ++j) {
        Rational inner(0);
        for (long n = j - 1; n <= n_budget; ++n) inner += w[n] * h[j][n + 1];
        const Rational coef = Rational(4) * rat(factorial(2 * j)) *
                              (Rational(2) - rat(Int(1), pow2(2 * static_cast<unsigned long>(j)))) *
                              inner;
        rep.coeffs[j] = coef;
        lhs += BigFloat::of(coef, wp) * zeta_int(2 * j + 1, wp) /
               pow_ui(pi, 2 * static_cast<unsigned long>(j));
    }

    const BigFloat rhs = mul_long(z3_over_pi2, 28);
    rep.lhs = round_to(lhs, p);
    rep.rhs = round_to(rhs, p);
    rep.residual = round_to(abs(lhs - rhs), p);

    // Inner tails: w_{n+1}/w_n < 0.6 from n_budget on (the exact ratio tends
    // to 1/2 from above for large n), and h_{j,n} <= zeta(2)^{j-1}/(j-1)!
    // (elementary-symmetric bound). Dropped n > n_budget mass per j is then
    // coef_j * zeta(2)^{j-1}/(j-1)! * w_{n_budget+1}/(1-0.6).
    {
        const BigFloat ratio_bound = BigFloat::parse("0.6", wp);
        const BigFloat w_next = BigFloat::of(w[n_budget + 1], wp);
        const BigFloat geom = w_next / (BigFloat::of(1L, wp) - ratio_bound);
        const BigFloat zeta2 = zeta_even(2, wp);
        BigFloat hbound = BigFloat::of(1L, wp);
        BigFloat inner_tail = mul_long(z3_over_pi2, 14) * geom;
        for (long j = 2; j <= J; ++j) {
            hbound = hbound * zeta2 / BigFloat::of(j - 1, wp);  // zeta(2)^{j-1}/(j-1)!
            const BigFloat coef =
                mul_long(BigFloat::of(factorial(2 * j), wp), 8);  // 4 (2j)! (2 - 4^{-j}) <= 8 (2j)!
            inner_tail += coef * hbound * geom * zeta_int(2 * j + 1, wp) /
                          pow_ui(pi, 2 * static_cast<unsigned long>(j));
        }
        rep.inner_tail_bound = round_to(inner_tail, p);
    }

    // Outer tail: for j > J use h_{j,n} <= h_{j,inf} = pi^{2j-2}/(2j-1)!
    // (coefficients of prod (1+x/l^2) = sinh(pi sqrt x)/(pi sqrt x)), so the
    // j-term is at most 8 (2j)! h_{j,inf} zeta(3) W_{j-1} / pi^{2j}
    // = (16 j / pi^2) zeta(3) W_{j-1}, with W_m = sum_{n>=m} w_n.
    {
        const BigFloat ratio_bound = BigFloat::parse("0.6", wp);
        const BigFloat one = BigFloat::of(1L, wp);
        const BigFloat z3 = zeta_int(3, wp);
        const BigFloat floor = BigFloat::pow2(-(static_cast<long>(wp)), wp);
        BigFloat outer = BigFloat::zero(wp);
        for (long j = J + 1;; ++j) {
            BigFloat wtail;  // upper bound on w_{j-1}
            if (j - 1 <= n_budget + 1) {
                wtail = BigFloat::of(w[j - 1], wp);
            } else {
                wtail = BigFloat::of(w[n_budget + 1], wp) *
                        pow_ui(ratio_bound, static_cast<unsigned long>(j - 1 - (n_budget + 1)));
            }
            const BigFloat W = wtail / (one - ratio_bound);
            const BigFloat term = mul_long(z3 * W / (pi * pi), 16 * j);
            outer += term;
            if (term < floor) break;
        }
        rep.outer_tail_bound = round_to(outer, p);
    }

    rep.pass = rep.residual < tol && tol_certifiable(tol, p);
    return rep;
}

IdentityReport verify_tanh_ids(const std::vector<BigFloat>& points, mpfr_prec_t p) {
    IdentityReport report;
    const mpfr_prec_t wp = p + kGuardBits;
    const BigFloat one = BigFloat::of(1L, wp);
    const BigFloat floor = BigFloat::pow2(-(static_cast<long>(wp) - 4), wp);
    const BigFloat pass_tol = BigFloat::pow2(-(static_cast<long>(p) - 16), wp);

    for (const BigFloat& x0 : points) {
        if (!(x0.sign() > 0)) throw std::domain_error("verify_tanh_ids: points must be positive");
        const BigFloat x = round_to(x0, wp);
        const auto [shx, chx] = sinh_cosh(x);
        const BigFloat q = one / ldexp2(chx * chx, 1);  // 1/(2 cosh^2 x) <= 1/2
        const auto [sh2x, ch2x] = sinh_cosh(ldexp2(x, 1));

        {  // tanh(x) * geometric series = tanh(2x)
            BigFloat acc = BigFloat::zero(wp);
            BigFloat qpow = one;
            long k = 0;
            for (;; ++k) {
                acc += qpow;
                qpow *= q;
                if (qpow < floor) break;
            }
            const BigFloat lhs = tanh(x) * acc;
            const BigFloat rhs = sh2x / ch2x;

            CheckRecord rec;
            rec.name = "tanh_id.geometric.x=" + x0.str(6);
            rec.equation_label = "id_tanh";
            rec.exact = false;
            rec.terms_used = k + 1;
            const BigFloat resid = abs(lhs - rhs);
            rec.residual = resid.str();
            rec.tail_bound = (tanh(x) * qpow / (one - q)).str();
            rec.tolerance = pass_tol.str();
            rec.pass = resid < pass_tol;
            report.add(rec);
        }
        {  // sum k(k+1)/2^k sinh/cosh^{2k+3} = 4 sinh(2x)/cosh(2x)^3
            BigFloat acc = BigFloat::zero(wp);
            const BigFloat base = shx / pow_ui(chx, 3);
            BigFloat qpow = q;  // q^k
            long k = 1;
            BigFloat term(wp);
            for (;; ++k) {
                term = mul_long(base * qpow, k * (k + 1));
                acc += term;
                qpow *= q;
                if (k >= 8 && term < floor) break;
            }
            const BigFloat rhs = ldexp2(sh2x / pow_ui(ch2x, 3), 2);

            CheckRecord rec;
            rec.name = "tanh_id.derived.x=" + x0.str(6);
            rec.equation_label = "id_from_tanh";
            rec.exact = false;
            rec.terms_used = k;
            const BigFloat resid = abs(acc - rhs);
            rec.residual = resid.str();
            // ratio of consecutive terms is ((k+2)/k) q <= 1.25 q <= 0.625
            rec.tail_bound = (mul_long(term, 2) * q / (one - BigFloat::parse("0.625", wp))).str();
            rec.tolerance = pass_tol.str();
            rec.pass = resid < pass_tol;
            report.add(rec);
        }
    }
    return report;
}

KCombo klimit_combo(long K, long M) {
    if (K < 0 || M < 1) throw std::domain_error("klimit_combo: need K >= 0, M >= 1");
    KCombo combo;
    combo.K = K;
    combo.M = M;

    combo.weights[M] = Rational(1);
    for (long level = K; level >= 1; --level) {
        // expand L(level, m) = -(2m/level) L(level-1, m) + ((level+2m+1)/level) L(level-1, m+1)
        std::map<long, Rational> next;
        for (const auto& [m, wt] : combo.weights) {
            next[m] += rat(-Int(2 * m), Int(level)) * wt;
            next[m + 1] += rat(Int(2 * m + level + 1), Int(level)) * wt;
        }
        for (auto it = next.begin(); it != next.end();)
            it = (it->second == 0) ? next.erase(it) : std::next(it);
        combo.weights = std::move(next);
    }

    const long m_top = combo.weights.empty() ? M : combo.weights.rbegin()->first;
    const HTable h = build_h(m_top, m_top);
    for (const auto& [m, wt] : combo.weights) {
        const LimitCoeffs rc = limit_coeffs(m, h);
        for (long j = 1; j <= m; ++j) {
            combo.zeta_coeffs[j] += wt * rc.r[j];
        }
    }
    for (auto it = combo.zeta_coeffs.begin(); it != combo.zeta_coeffs.end();)
        it = (it->second == 0) ? combo.zeta_coeffs.erase(it) : std::next(it);
    return combo;
}

BigFloat kcombo_value(const KCombo& combo, mpfr_prec_t p) {
    const mpfr_prec_t wp = p + kGuardBits;
    const BigFloat pi = BigFloat::pi(wp);
    BigFloat acc = BigFloat::zero(wp);
    for (const auto& [j, coef] : combo.zeta_coeffs)
        acc += BigFloat::of(coef, wp) * zeta_int(2 * j + 1, wp) /
               pow_ui(pi, 2 * static_cast<unsigned long>(j));
    return round_to(acc, p);
}

LimitCertificate verify_klimit(long K, long M, const std::vector<BigFloat>& schedule,
                               mpfr_prec_t p, const BigFloat& tol) {
    const KCombo combo = klimit_combo(K, M);
    return run_limit_schedule(K, M, schedule, p, tol, kcombo_value(combo, p));
}

TanhRelation generate_tanh_recurrence(long N, long k_max, mpfr_prec_t p, const BigFloat& tol) {
    if (N < 1) throw std::domain_error("generate_tanh_recurrence: N must be >= 1");
    if (k_max < 8) throw std::domain_error("generate_tanh_recurrence: k_max must be >= 8");
    const long level = N - 1;  // double-derivatives applied to the k-sum identity
    const mpfr_prec_t wp = p + 2 * kGuardBits;

    TanhRelation rel;
    rel.N = N;
    rel.k_max = k_max;

    const auto [lhs_bv, rhs_bv] = tanh_family_sides(level, k_max);
    std::map<long, Rational> diff;
    for (const auto& [m, c] : lhs_bv.coeffs) diff[m] += c;
    for (const auto& [m, c] : rhs_bv.coeffs) diff[m] -= c;

    long m_top = 1;
    for (const auto& [m, c] : diff)
        if (c != 0) m_top = std::max(m_top, static_cast<long>(m));
    const HTable h = build_h(m_top, m_top);

    for (const auto& [m, c] : diff) {
        if (c == 0) continue;
        if (m == 0) throw std::logic_error("generate_tanh_recurrence: basis-0 term has no limit");
        const LimitCoeffs rc = limit_coeffs(m, h);
        for (long j = 1; j <= m; ++j) rel.kappa[j] += c * rc.r[j];
    }
    for (auto it = rel.kappa.begin(); it != rel.kappa.end();)
        it = (it->second == 0) ? rel.kappa.erase(it) : std::next(it);

    const BigFloat pi = BigFloat::pi(wp);
    BigFloat acc = BigFloat::zero(wp);
    for (const auto& [j, coef] : rel.kappa)
        acc += BigFloat::of(coef, wp) * zeta_int(2 * j + 1, wp) /
               pow_ui(pi, 2 * static_cast<unsigned long>(j));
    rel.residual = round_to(abs(acc), p);

    // Dropped k > k_max terms: weight k(k+1)/2^k, the 2(N-1) derivatives
    // amplify a basis element by at most (8(k+1+level)^2)^level in
    // basis-coefficient mass, and each base limit is below 1.
    {
        const BigFloat one = BigFloat::of(1L, wp);
        const BigFloat floor = BigFloat::pow2(-(static_cast<long>(wp)), wp);
        BigFloat bound = BigFloat::zero(wp);
        for (long k = k_max + 1;; ++k) {
            BigFloat amp = one;
            if (level > 0) {
                const BigFloat base = BigFloat::of(k + 1 + level, wp);
                amp = pow_ui(mul_long(base * base, 8), static_cast<unsigned long>(level));
            }
            const BigFloat term =
                ldexp2(mul_long(amp, k * (k + 1)), -k);  // k(k+1) 2^{-k} * amp
            bound += term;
            if (term < floor) break;
        }
        rel.tail_bound = round_to(bound, p);
    }

    rel.pass = rel.residual < tol && tol_certifiable(tol, p);
    return rel;
}

}  // namespace zetarecur
