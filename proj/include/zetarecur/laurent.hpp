#pragma once

#include <map>
#include <string>

#include "zetarecur/rational.hpp"
#include "zetarecur/report.hpp"

namespace zetarecur {

/**
 * Laurent polynomial over Rational in one variable z: a finitely supported
 * map exponent -> coefficient, negative exponents allowed. Zero coefficients
 * are never stored, so equality is container equality.
 */
class LaurentPoly {
  public:
    LaurentPoly() = default;

    /// c * z^e
    static LaurentPoly term(const Rational& c, long e);
    static LaurentPoly one() { return term(Rational(1), 0); }

    const std::map<long, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(long e) const;
    long min_exp() const;  // 0 on the zero polynomial
    long max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const Rational& s) const;

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

    /// z -> 1/z substitution (mirrors the exponents).
    LaurentPoly mirrored() const;

    std::string str() const;

  private:
    void set(long e, const Rational& c);
    std::map<long, Rational> coeffs_;
};

/// Exact convolution product.
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Exact power by repeated squaring; lp_pow(a, 0) = 1.
LaurentPoly lp_pow(const LaurentPoly& a, unsigned long e);

enum class SFamily { pow4M, pow4M2 };   // superscript 4M vs 4M+2
enum class SParity { even, odd };       // subscript 2j vs 2j+1

/**
 * The alternating coefficient sums S_{2j}^{4M}, S_{2j}^{4M+2},
 * S_{2j+1}^{4M}, S_{2j+1}^{4M+2}. Admissible j: 0..M, except 0..M-1 for
 * the odd/4M family; out-of-range j throws std::out_of_range.
 */
Rational s_value(SFamily family, SParity parity, long M, long j);

/**
 * Expands both sides of the four rational-function identities relating
 * (z +- 1/z)^{4M(+2)} to powers of z^2 - 1/z^2 and checks exact equality.
 * A failing identity reports its first mismatching exponent.
 */
IdentityReport check_prop21(long M);

/**
 * Checks the four recurrences among the S-sums plus their binomial closed
 * forms S_{2j}^{m} = binom(m, 2j), S_{2j+1}^{m} = binom(m, 2j+1) for every
 * admissible j.
 */
IdentityReport check_s_recurrences(long M);

}  // namespace zetarecur
