#include "zetarecur/exactcore.hpp"

#include <mutex>
#include <stdexcept>

namespace zetarecur {

Int binom(long n, long k) {
    if (k < 0 || n < k) return Int(0);
    // here n >= k >= 0
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // B_0..B_{size-1}, complete prefix

// Extends the table to cover index r. Caller holds the lock.
void extend_bernoulli(long r) {
    if (g_bernoulli.empty()) g_bernoulli.push_back(Rational(1));
    for (long m = static_cast<long>(g_bernoulli.size()); m <= r; ++m) {
        // sum_{j=0}^{m} binom(m+1, j) B_j = 0  =>  solve for B_m
        Rational acc(0);
        for (long j = 0; j < m; ++j) acc += rat(binom(m + 1, j)) * g_bernoulli[j];
        g_bernoulli.push_back(-acc / rat(Int(m + 1)));
    }
}

}  // namespace

Rational bernoulli(long r) {
    if (r < 0) throw std::domain_error("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    extend_bernoulli(r);
    return g_bernoulli[static_cast<size_t>(r)];
}

std::vector<Rational> bernoulli_prefix(long r) {
    if (r < 0) throw std::domain_error("bernoulli_prefix: negative index");
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    extend_bernoulli(r);
    return std::vector<Rational>(g_bernoulli.begin(), g_bernoulli.begin() + r + 1);
}

}  // namespace zetarecur
