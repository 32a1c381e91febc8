// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "zetarecur/coeffs.hpp"
#include "zetarecur/cothalg.hpp"
#include "zetarecur/exactcore.hpp"
#include "zetarecur/identities.hpp"
#include "zetarecur/laurent.hpp"
#include "zetarecur/zetanum.hpp"

using namespace zetarecur;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, double seconds) {
    std::printf("%s criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                seconds);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

void run(int criterion, const std::string& what, const std::function<bool()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(criterion, what + note, ok, secs);
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(ZETARECUR_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli_output(const std::string& args) {
    const std::string cmd = std::string(ZETARECUR_CLI_PATH) + " " + args + " 2>&1";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

constexpr mpfr_prec_t P = 256;

}  // namespace

int main() {
    CoeffTables tables40;

    run(1, "exact expansion and S-recurrence suites for all M <= 20, under 10 s", [] {
        const auto t0 = std::chrono::steady_clock::now();
        for (long M = 1; M <= 20; ++M) {
            if (!check_prop21(M).all_pass()) return false;
            if (!check_s_recurrences(M).all_pass()) return false;
        }
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 10.0;
    });

    run(2, "matrix suite at n_max = 40: UV=I, VU=I, UL=DU, LV=VD, row families, 3-way V, under 30 s",
        [&tables40] {
            const auto t0 = std::chrono::steady_clock::now();
            tables40 = build_tables(40);  // throws if the three V routes disagree
            if (!check_matrix_identities(tables40).all_pass()) return false;
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() <
                   30.0;
        });

    run(3, "2n-th derivative expansion matches the coefficient table exactly for n <= 20",
        [&tables40] {
            if (tables40.n_max < 20) tables40 = build_tables(40);
            return verify_lemma22(20, tables40.c).all_pass();
        });

    run(4, "binomial recurrence and a_{n,1} = 2^{4n-3} exact for all 1 <= k <= n <= 40",
        [&tables40] {
            if (tables40.n_max < 40) tables40 = build_tables(40);
            return check_binomial_recurrence(tables40).all_pass();
        });

    run(5, "Ramanujan sides agree within 2^-200 on the alpha x n grid, plus the zeta(3) form", [] {
        const BigFloat lim = BigFloat::pow2(-200, P);
        const BigFloat pi = BigFloat::pi(P);
        const std::array<BigFloat, 3> alphas = {pi, ldexp2(pi, 1), div_long(pi, 3)};
        for (const auto& a : alphas)
            for (long n = 1; n <= 3; ++n) {
                auto [lhs, rhs] = ramanujan_sides(a, n, P);
                if (!(abs(lhs - rhs) < lim)) return false;
            }
        // zeta(3) = 7 pi^3/180 - 2 sum 1/(n^3 (e^{2 pi n}-1))
        const mpfr_prec_t wp = P + 32;
        const BigFloat pih = BigFloat::pi(wp);
        BigFloat lam = BigFloat::zero(wp);
        const BigFloat floor = BigFloat::pow2(-(static_cast<long>(wp)), wp);
        for (long n = 1;; ++n) {
            const BigFloat term =
                BigFloat::of(1L, wp) /
                (pow_ui(BigFloat::of(n, wp), 3) * expm1(mul_long(ldexp2(pih, 1), n)));
            lam += term;
            if (term < floor) break;
        }
        const BigFloat rhs = mul_long(pow_ui(pih, 3), 7) / BigFloat::of(180L, wp) - ldexp2(lam, 1);
        return abs(zeta_int(3, P) - round_to(rhs, P)) < lim;
    });

    run(6, "rewritten displays: exact zero at alpha = 1, sides within 2^-200 at alpha = 1/2, 2", [] {
        const BigFloat lim = BigFloat::pow2(-200, P);
        {
            auto [lhs, rhs] = cor32_sides(BigFloat::of(1L, P), 1, Cor32Family::even_zeta, P);
            if (!(abs(lhs) < lim && abs(rhs) < lim)) return false;
        }
        for (const char* as : {"0.5", "2"}) {
            const BigFloat a = BigFloat::parse(as, P);
            for (long M = 1; M <= 3; ++M) {
                auto [lhs, rhs] = cor32_sides(a, M, Cor32Family::even_zeta, P);
                if (!(abs(lhs - rhs) < lim)) return false;
            }
            for (long M = 0; M <= 3; ++M) {
                auto [lhs, rhs] = cor32_sides(a, M, Cor32Family::odd_zeta, P);
                if (!(abs(lhs - rhs) < lim)) return false;
            }
        }
        return true;
    });

    run(7, "limit certificates: N = 1 within 1e-12, N = 2 within 1e-10, decreasing residuals", [] {
        const auto short_sched = halving_schedule(BigFloat::of(1L, P), 3);  // 1, 1/2, 1/4
        const LimitCertificate c1 = verify_limit(1, short_sched, P, BigFloat::parse("1e-12", P));
        const LimitCertificate c2 = verify_limit(2, short_sched, P, BigFloat::parse("1e-10", P));
        // the certificates anchored at alpha = 0.5 end far below the stated bounds
        const auto sched05 = halving_schedule(BigFloat::parse("0.5", P), 5);
        const LimitCertificate d1 = verify_limit(1, sched05, P, BigFloat::parse("1e-12", P));
        const LimitCertificate d2 = verify_limit(2, sched05, P, BigFloat::parse("1e-10", P));
        const bool decreasing = c1.residuals[0] > c1.residuals[1] &&
                                c1.residuals[1] > c1.residuals[2] &&
                                c2.residuals[0] > c2.residuals[1] &&
                                c2.residuals[1] > c2.residuals[2];
        return c1.pass && c2.pass && d1.pass && d2.pass && decreasing;
    });

    run(8, "zeta(3) recurrence within 1e-10 at J = 25, n_budget = 200, under 60 s", [] {
        const auto t0 = std::chrono::steady_clock::now();
        const Cor41Report rep = verify_recurrence_cor41(25, 200, P, BigFloat::parse("1e-10", P));
        if (!rep.pass) return false;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 60.0;
    });

    run(9, "K-limit: combo(1,1) confirmed at alpha = 0.25 within 1e-6; base combos exact", [] {
        const auto sched = halving_schedule(BigFloat::of(1L, P), 3);  // ends at 1/4
        const LimitCertificate cert = verify_klimit(1, 1, sched, P, BigFloat::parse("1e-6", P));
        if (!cert.pass) return false;
        for (long M = 1; M <= 4; ++M) {
            const KCombo combo = klimit_combo(0, M);
            const LimitCoeffs rc = limit_coeffs(M);
            for (long j = 1; j <= M; ++j)
                if (!combo.zeta_coeffs.count(j) || combo.zeta_coeffs.at(j) != rc.r[j]) return false;
        }
        return true;
    });

    run(10, "generator: N = 1 matches the assembled recurrence, N = 2 residual under 1e-8", [] {
        const TanhRelation rel1 = generate_tanh_recurrence(1, 100, P, BigFloat::parse("1e-8", P));
        const Cor41Report rep = verify_recurrence_cor41(25, 200, P, BigFloat::parse("1e-10", P));
        for (long j = 1; j <= 10; ++j) {
            const Rational a = rel1.kappa.count(j) ? rel1.kappa.at(j) : Rational(0);
            const Rational b = rep.coeffs.count(j) ? rep.coeffs.at(j) : Rational(0);
            if (!(abs(BigFloat::of(a - b, P)) < BigFloat::parse("1e-10", P))) return false;
        }
        if (!rel1.pass) return false;
        const TanhRelation rel2 = generate_tanh_recurrence(2, 64, P, BigFloat::parse("1e-8", P));
        return rel2.pass && rel2.residual < BigFloat::parse("1e-8", P);
    });

    run(11, "CLI contract: suite all exits 0; absurd tol exits 1; bad flags exit 2; stable JSON", [] {
        if (run_cli("verify --suite all") != 0) return false;
        if (run_cli("verify --suite limit --N 1 --tol 1e-200 --precision-bits 64") != 1) return false;
        if (run_cli("verify --suite nonsense") != 2) return false;
        if (run_cli("tables --kind bogus --n 4") != 2) return false;
        if (run_cli("verify --bad-flag") != 2) return false;

        auto strip = [](std::string s) {
            const auto pos = s.find("\"timestamp\"");
            if (pos == std::string::npos) return s;
            const auto end = s.find('\n', pos);
            return s.erase(pos, end - pos);
        };
        const std::string a = cli_output("verify --suite klimit --format json");
        const std::string b = cli_output("verify --suite klimit --format json");
        return !a.empty() && strip(a) == strip(b);
    });

    std::printf("%s: %d criterion failure(s)\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
