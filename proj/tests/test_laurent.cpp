#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "zetarecur/exactcore.hpp"
#include "zetarecur/laurent.hpp"

using namespace zetarecur;

namespace {

LaurentPoly zterm(long c, long e) { return LaurentPoly::term(Rational(c), e); }

// deterministic small random polynomials for the algebra properties
struct Lcg {
    std::uint64_t s = 0x2545F4914F6CDD1DULL;
    std::uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
    LaurentPoly poly() {
        LaurentPoly p;
        const int terms = 1 + static_cast<int>(next() % 4);
        for (int i = 0; i < terms; ++i) {
            const long e = static_cast<long>(next() % 9) - 4;
            const long c = static_cast<long>(next() % 11) - 5;
            p += LaurentPoly::term(Rational(c), e);
        }
        return p;
    }
};

}  // namespace

TEST_CASE("products and powers") {
    const LaurentPoly zp = zterm(1, 1) + zterm(1, -1);
    const LaurentPoly zm = zterm(1, 1) - zterm(1, -1);

    CHECK(lp_mul(zp, zm) == zterm(1, 2) - zterm(1, -2));
    CHECK(lp_mul(LaurentPoly::one(), zp) == zp);
    const LaurentPoly z2m = zterm(1, 2) - zterm(1, -2);
    CHECK(lp_mul(z2m, z2m) == zterm(1, 4) - zterm(2, 0) + zterm(1, -4));

    CHECK(lp_pow(zp, 0) == LaurentPoly::one());
    CHECK(lp_pow(zp, 2) == zterm(1, 2) + zterm(2, 0) + zterm(1, -2));
    CHECK(lp_pow(zm, 4) ==
          zterm(1, 4) - zterm(4, 2) + zterm(6, 0) - zterm(4, -2) + zterm(1, -4));
}

TEST_CASE("algebra properties on random inputs") {
    Lcg gen;
    for (int i = 0; i < 40; ++i) {
        const LaurentPoly a = gen.poly(), b = gen.poly(), c = gen.poly();
        CHECK(lp_mul(a, b) == lp_mul(b, a));
        CHECK(lp_mul(lp_mul(a, b), c) == lp_mul(a, lp_mul(b, c)));
        const unsigned long m = gen.next() % 4, n = gen.next() % 4;
        CHECK(lp_pow(a, m + n) == lp_mul(lp_pow(a, m), lp_pow(a, n)));
    }
}

TEST_CASE("S values") {
    CHECK(s_value(SFamily::pow4M2, SParity::even, 1, 0) == 1);  // binom(6,0)
    CHECK(s_value(SFamily::pow4M2, SParity::odd, 1, 0) == 6);   // binom(6,1)
    CHECK(s_value(SFamily::pow4M, SParity::even, 1, 1) == 6);   // binom(4,2)
    CHECK_THROWS_AS(s_value(SFamily::pow4M, SParity::odd, 1, 1), std::out_of_range);
    CHECK_THROWS_AS(s_value(SFamily::pow4M2, SParity::even, 2, 3), std::out_of_range);
    CHECK_THROWS_AS(s_value(SFamily::pow4M2, SParity::even, 2, -1), std::out_of_range);
}

TEST_CASE("four rational-function identities expand exactly") {
    for (long M : {1L, 2L, 5L}) {
        auto rep = check_prop21(M);
        REQUIRE(rep.checks.size() == 4);
        for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name, " ", c.detail);
    }
}

TEST_CASE("identity 3 at M = 1, constant coefficient agrees on both sides") {
    // lhs = (z+1/z)^4/2 + (z-1/z)^4/2; rhs per the k-sum
    const LaurentPoly zp = zterm(1, 1) + zterm(1, -1);
    const LaurentPoly zm = zterm(1, 1) - zterm(1, -1);
    const LaurentPoly lhs =
        lp_pow(zp, 4).scaled(rat(1, 2)) + lp_pow(zm, 4).scaled(rat(1, 2));
    const LaurentPoly z2m = zterm(1, 2) - zterm(1, -2);
    LaurentPoly rhs;
    for (long k = 0; k <= 1; ++k)
        rhs += lp_pow(z2m, 2 * (1 - k))
                   .scaled(rat(pow2(4 * static_cast<unsigned long>(k))) * rat(Int(1), Int(1 + k)) *
                           rat(binom(1 + k, 2 * k)));
    CHECK(lhs.coeff(0) == rhs.coeff(0));
    CHECK(lhs.coeff(0) == Rational(6));  // the even-power parts of the two quartics average

    // z -> 1/z symmetry of both sides of identities 1 and 3
    CHECK(lhs == lhs.mirrored());
    CHECK(rhs == rhs.mirrored());
    const LaurentPoly lhs1 =
        lp_pow(zp, 6).scaled(rat(1, 2)) - lp_pow(zm, 6).scaled(rat(1, 2));
    CHECK(lhs1 == lhs1.mirrored());
}

TEST_CASE("S recurrences and closed forms") {
    for (long M = 1; M <= 6; ++M) {
        auto rep = check_s_recurrences(M);
        for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name, " ", c.detail);
    }
}

TEST_CASE("third recurrence spot value at M = 2, j = 1") {
    const long M = 2, j = 1;
    const Rational lhs = rat(Int(2 * j + 1)) * s_value(SFamily::pow4M2, SParity::odd, M, j) -
                         rat(Int(4 * M + 2)) * s_value(SFamily::pow4M2, SParity::even, M, j);
    const Rational rhs = rat(-Int(4 * M - 2 * j + 3)) * s_value(SFamily::pow4M2, SParity::odd, M, j - 1);
    CHECK(lhs == rhs);
}
