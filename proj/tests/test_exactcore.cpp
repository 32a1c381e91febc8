#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "zetarecur/exactcore.hpp"

using namespace zetarecur;

TEST_CASE("binomial coefficients and the zero conventions") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(2, -1) == 0);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(-2, 1) == 0);  // negative n falls under n < k
    CHECK(binom(-3, -1) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(80, 40) == Int("107507208733336176461620"));
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(4) == 24);
    CHECK(factorial(6) == 720);
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("bernoulli numbers by the defining recurrence") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == rat(-1, 2));
    // oracle: m = 2 instance of sum_j binom(3,j) B_j = 0 gives 1 - 3/2 + 3 B_2 = 0
    CHECK(bernoulli(2) == rat(1, 6));
    // oracle: m = 4 instance gives B_4 = -(1 - 5/2 + 10/6)/5
    CHECK(bernoulli(4) == -(Rational(1) - rat(5, 2) + rat(10, 6)) / Rational(5));
    CHECK(bernoulli(4) == rat(-1, 30));
    CHECK(bernoulli(12) == rat(-691, 2730));
    CHECK_THROWS_AS(bernoulli(-1), std::domain_error);
}

TEST_CASE("odd bernoulli numbers vanish") {
    auto prefix = bernoulli_prefix(99);
    for (long k = 1; 2 * k + 1 <= 99; ++k) CHECK(prefix[2 * k + 1] == 0);
}

TEST_CASE("recurrence property: binomial-weighted prefix sums vanish") {
    auto b = bernoulli_prefix(60);
    for (long m = 1; m <= 60; ++m) {
        Rational acc(0);
        for (long j = 0; j <= m; ++j) acc += rat(binom(m + 1, j)) * b[j];
        CHECK(acc == 0);
    }
}

TEST_CASE("binomial ratio identity used by the derivative lemma") {
    // binom(2k-2, k-1-j) 2k(2k-1) = (k^2-j^2) binom(2k, k-j) for 1 <= j <= k
    for (long k = 1; k <= 40; ++k)
        for (long j = 1; j <= k; ++j)
            CHECK(binom(2 * k - 2, k - 1 - j) * Int(2 * k) * Int(2 * k - 1) ==
                  Int(k * k - j * j) * binom(2 * k, k - j));
}

TEST_CASE("alternating prefix identity") {
    // 2 sum_{j=0}^{k-1} (-1)^j binom(2k,j) = (-1)^{k+1} binom(2k,k)
    for (long k = 1; k <= 60; ++k) {
        Int acc(0);
        for (long j = 0; j <= k - 1; ++j) {
            Int t = binom(2 * k, j);
            acc += (j % 2 == 0) ? t : -t;
        }
        Int rhs = binom(2 * k, k);
        if (k % 2 == 0) rhs = -rhs;
        CHECK(2 * acc == rhs);
    }
}

TEST_CASE("memo table is safe under concurrent access") {
    std::vector<std::thread> pool;
    std::vector<Rational> results(4);
    for (int i = 0; i < 4; ++i)
        pool.emplace_back([&results, i] { results[i] = bernoulli(200); });
    for (auto& t : pool) t.join();
    for (int i = 1; i < 4; ++i) CHECK(results[i] == results[0]);
    CHECK(results[0] != 0);
}
