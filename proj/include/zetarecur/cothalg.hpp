#pragma once

#include <map>
#include <utility>
#include <vector>

#include "zetarecur/rational.hpp"
#include "zetarecur/report.hpp"

namespace zetarecur {

/**
 * Polynomials in a single formal variable c subject to the derivation rule
 * c' = 1 - c^2. The same rule holds for c = coth(x) and c = tanh(x), so one
 * algebra carries both readings; only the basis family below differs.
 *
 * Parity is preserved the way the derivative of an odd/even function is:
 * derive maps odd polynomials to even ones and back.
 */
class CPoly {
  public:
    CPoly() = default;

    static CPoly term(const Rational& coeff, int e);
    static CPoly variable() { return term(Rational(1), 1); }

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int e) const;
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    bool odd_exponents_only() const;
    bool even_exponents_only() const;

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    CPoly scaled(const Rational& s) const;

    bool operator==(const CPoly& o) const { return coeffs_ == o.coeffs_; }

  private:
    void set(int e, const Rational& c);
    std::map<int, Rational> coeffs_;
};

/// Formal derivative under c' = 1 - c^2.
CPoly derive(const CPoly& p);

/// derive applied 2n times.
CPoly derive2n(CPoly p, long n);

enum class BasisKind {
    coth,  // element k is c(c^2-1)^k, i.e. cosh(x)/sinh(x)^{2k+1}
    tanh,  // element k is t(1-t^2)^k, i.e. sinh(x)/cosh(x)^{2k+1}
};

/// Coefficients over basis elements k = 0, 1, 2, ...
struct BasisVector {
    BasisKind kind = BasisKind::coth;
    std::map<int, Rational> coeffs;  // index k -> coefficient, zeros dropped

    bool operator==(const BasisVector& o) const {
        return kind == o.kind && coeffs == o.coeffs;
    }
};

/// Expands basis element k of the given family as a CPoly.
CPoly basis_to_poly(int k, BasisKind kind);

/**
 * Inverse change of basis: writes an odd polynomial as a combination of
 * basis elements. Unique because element k has exact degree 2k+1. Non-odd
 * input is rejected.
 */
BasisVector poly_to_basis(const CPoly& p, BasisKind kind);

/**
 * Checks that the 2n-th formal derivative of c equals
 * sum_k c_table[n][k] * (coth basis element k) for every n <= n_max, and
 * cross-checks the coefficients recovered by poly_to_basis against the
 * table. c_table[n][k] indexed with c_table[n].size() == n+1; row 0 unused.
 */
IdentityReport verify_lemma22(long n_max, const std::vector<std::vector<Rational>>& c_table);

/**
 * Both sides of the identity
 *   sum_{k>=1} k(k+1) 2^{-k} sinh(x)/cosh(x)^{2k+3} = 4 sinh(2x)/cosh(2x)^3
 * after 2N more formal derivatives, expressed in the tanh basis. The left
 * side is differentiated termwise in k up to k_max (the k-sum is infinite;
 * truncation is the caller's to bound — term k carries weight k(k+1)/2^k).
 * The right side is a polynomial in u = tanh(2x); each x-derivative is the
 * u-derivation times 2, so 2N derivatives contribute the factor 2^{2N}.
 * N = 0 reproduces the identity itself.
 */
std::pair<BasisVector, BasisVector> tanh_family_sides(long N, long k_max);

}  // namespace zetarecur
