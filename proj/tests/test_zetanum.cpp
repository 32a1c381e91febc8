#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetarecur/zetanum.hpp"

using namespace zetarecur;

namespace {

constexpr mpfr_prec_t P = 256;

// reference digits computed by an independent high-precision summation oracle
const char* kZeta3 = "1.20205690315959428539973816151144999076498629";
const char* kZeta5 = "1.03692775514336992633136548645703416805708092";
const char* kSSumHalfN1 = "0.602557732510342529445533073588542834660484648";
const char* kSSumHalfN2 = "0.36419720163787016187094257983013964310272909";
const char* kCothCorrection = "3.7427455187320547576740910980487115e-3";

BigFloat bf(const char* s) { return BigFloat::parse(s, P + 16); }

bool close(const BigFloat& a, const BigFloat& b, int bits) {
    return abs(a - b) < BigFloat::pow2(-bits, 64);
}

}  // namespace

TEST_CASE("zeta at even integers from Bernoulli numbers") {
    const BigFloat pi = BigFloat::pi(P + 16);
    CHECK(close(zeta_even(2, P), pi * pi / BigFloat::of(6L, P + 16), P - 8));
    CHECK(close(zeta_even(4, P), pow_ui(pi, 4) / BigFloat::of(90L, P + 16), P - 8));

    BigFloat prev = zeta_even(2, P);
    for (long n = 2; n <= 10; ++n) {
        const BigFloat z = zeta_even(2 * n, P);
        CHECK(z > BigFloat::of(1L, P));
        CHECK(z < prev);
        prev = z;
    }
    CHECK_THROWS_AS(zeta_even(3, P), std::domain_error);
}

TEST_CASE("zeta at integers by Euler-Maclaurin") {
    CHECK(close(zeta_int(3, P), bf(kZeta3), 140));
    CHECK(close(zeta_int(5, P), bf(kZeta5), 140));
    CHECK_THROWS_AS(zeta_int(1, P), std::domain_error);

    // cross-check against the library zeta, an implementation-independent route
    for (long s = 2; s <= 14; ++s) {
        BigFloat ref(P);
        mpfr_zeta_ui(ref.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
        CHECK(close(zeta_int(s, P), ref, P - 8));
    }
    // even arguments agree with the Bernoulli route
    for (long n = 1; n <= 10; ++n) CHECK(close(zeta_int(2 * n, P), zeta_even(2 * n, P), P - 32));
}

TEST_CASE("hyperbolic limit series: values and tails") {
    const BigFloat tol = BigFloat::pow2(-280, P);
    const BigFloat half = BigFloat::parse("0.5", P);

    const SeriesResult r1 = s_sum(half, 1, P, tol);
    CHECK(r1.converged);
    CHECK(close(r1.value, bf(kSSumHalfN1), 140));
    CHECK(r1.tail_bound <= tol);
    CHECK(r1.value.sign() > 0);

    const SeriesResult r2 = s_sum(half, 2, P, tol);
    CHECK(close(r2.value, bf(kSSumHalfN2), 140));

    // all terms positive, so the value dominates any partial restart
    const SeriesResult r1small = s_sum(BigFloat::of(30L, P), 1, P, tol);
    CHECK(r1small.value < BigFloat::pow2(-80, P));  // decays like e^{-2 alpha}

    CHECK_THROWS_AS(s_sum(BigFloat::of(-1L, P), 1, P, tol), std::domain_error);
    CHECK_THROWS_AS(s_sum(half, 0, P, tol), std::domain_error);
    CHECK_THROWS_AS(s_sum(half, 1, P, BigFloat::zero(P)), std::domain_error);
}

TEST_CASE("k_sum generalizes s_sum") {
    const BigFloat tol = BigFloat::pow2(-280, P);
    const BigFloat a = BigFloat::parse("0.375", P);
    const SeriesResult via_s = s_sum(a, 3, P, tol);
    const SeriesResult via_k = k_sum(a, 0, 3, P, tol);
    CHECK(via_s.value == via_k.value);
    CHECK(via_s.terms_used == via_k.terms_used);
}

TEST_CASE("series result is reproducible at doubled precision") {
    const BigFloat a = BigFloat::parse("0.5", P);
    const BigFloat tol = BigFloat::pow2(-200, P);
    const SeriesResult at_p = s_sum(a, 1, P, tol);
    const SeriesResult at_2p = s_sum(round_to(a, 2 * P), 1, 2 * P, tol / BigFloat::of(100L, P));
    const BigFloat budget = at_p.tail_bound + BigFloat::pow2(-(P - 32), P);
    CHECK(abs(at_p.value - at_2p.value) <= budget);
}

TEST_CASE("coth sums") {
    const BigFloat tol = BigFloat::pow2(-280, P);
    const SeriesResult big = coth_sum(BigFloat::of(40L, P), 3, P, tol);
    CHECK(close(big.value, zeta_int(3, P), 250));  // correction vanishes

    const SeriesResult unit = coth_sum(BigFloat::of(1L, P), 3, P, tol);
    const BigFloat correction = unit.value - zeta_int(3, P);
    CHECK(correction.sign() > 0);
    CHECK(close(correction, bf(kCothCorrection), 100));  // reference carries 35 digits

    CHECK_THROWS_AS(coth_sum(BigFloat::zero(P), 3, P, tol), std::domain_error);
    CHECK_THROWS_AS(coth_sum(BigFloat::of(1L, P), 1, P, tol), std::domain_error);
}

TEST_CASE("ramanujan identity sides") {
    const BigFloat pi = BigFloat::pi(P);
    const BigFloat limit = BigFloat::pow2(-200, P);

    for (long n : {1L, 2L}) {
        auto [lhs, rhs] = ramanujan_sides(pi, n, P);
        CHECK(abs(lhs - rhs) < limit);
    }
    {
        auto [lhs, rhs] = ramanujan_sides(ldexp2(pi, 1), 1, P);
        CHECK(abs(lhs - rhs) < limit);
    }

    // alpha <-> beta swap: pi^2/(2 pi) = pi/2 leads to the same side values
    auto [l1, r1] = ramanujan_sides(ldexp2(pi, 1), 1, P);
    auto [l2, r2] = ramanujan_sides(ldexp2(pi, -1), 1, P);
    CHECK(abs(r1 - r2) < limit);
    CHECK(abs(l1 - l2) < limit);

    CHECK_THROWS_AS(ramanujan_sides(pi, 0, P), std::domain_error);
    CHECK_THROWS_AS(ramanujan_sides(-pi, 1, P), std::domain_error);
}

TEST_CASE("rewritten displays") {
    const BigFloat limit = BigFloat::pow2(-200, P);
    const BigFloat one = BigFloat::of(1L, P);

    {  // alpha = 1 even family: both sides vanish by antisymmetry
        auto [lhs, rhs] = cor32_sides(one, 1, Cor32Family::even_zeta, P);
        CHECK(abs(lhs) < limit);
        CHECK(abs(rhs) < limit);
    }
    {  // odd family at alpha = 1, M = 0
        auto [lhs, rhs] = cor32_sides(one, 0, Cor32Family::odd_zeta, P);
        CHECK(abs(lhs - rhs) < limit);
    }
    {  // even family, M = 1, alpha = 2
        auto [lhs, rhs] = cor32_sides(BigFloat::of(2L, P), 1, Cor32Family::even_zeta, P);
        CHECK(abs(lhs - rhs) < limit);
    }
    CHECK_THROWS_AS(cor32_sides(one, 0, Cor32Family::even_zeta, P), std::domain_error);
    CHECK_THROWS_AS(cor32_sides(-one, 1, Cor32Family::even_zeta, P), std::domain_error);
}

TEST_CASE("residuals are rounding-limited: doubling precision shrinks them") {
    const BigFloat pi512 = BigFloat::pi(512);
    auto [l256, r256] = ramanujan_sides(BigFloat::pi(256), 1, 256);
    auto [l512, r512] = ramanujan_sides(pi512, 1, 512);
    const BigFloat res256 = abs(l256 - r256) + BigFloat::pow2(-252, 64);
    const BigFloat res512 = abs(l512 - r512);
    CHECK(res512 < res256);
    CHECK(res512 < BigFloat::pow2(-456, 64));

    auto [cl256, cr256] = cor32_sides(BigFloat::of(2L, 256), 1, Cor32Family::odd_zeta, 256);
    auto [cl512, cr512] = cor32_sides(BigFloat::of(2L, 512), 1, Cor32Family::odd_zeta, 512);
    CHECK(abs(cl512 - cr512) < abs(cl256 - cr256) + BigFloat::pow2(-252, 64));
    CHECK(abs(cl512 - cr512) < BigFloat::pow2(-440, 64));
}
