#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "zetarecur/rational.hpp"

namespace zetarecur {

/**
 * Arbitrary-precision real with an explicit precision-in-bits parameter.
 * Thin RAII wrapper over mpfr_t; all rounding is to nearest. Binary
 * operations produce a result at the larger of the two operand precisions,
 * so precision is decided where values are created, never ambiently.
 */
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_nan(v_);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of(long x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }

    static BigFloat of(const Rational& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    static BigFloat of(const Int& z, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    /// Parses a decimal string such as "1e-12" or "0.25".
    static BigFloat parse(const std::string& s, mpfr_prec_t prec);

    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    static BigFloat zero(mpfr_prec_t prec) { return of(0L, prec); }

    /// 2^e at the given precision (exact).
    static BigFloat pow2(long e, mpfr_prec_t prec) {
        BigFloat r = of(1L, prec);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Scientific-notation decimal string with the given significant digits.
    std::string str(int digits = 20) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) <= 0;
    }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) == 0;
    }

  private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat tanh(const BigFloat& x);
BigFloat coth(const BigFloat& x);
std::pair<BigFloat, BigFloat> sinh_cosh(const BigFloat& x);
BigFloat pow_ui(const BigFloat& x, unsigned long e);
BigFloat ldexp2(const BigFloat& x, long e);  // x * 2^e, exact
BigFloat mul_long(const BigFloat& x, long s);
BigFloat div_long(const BigFloat& x, long s);

}  // namespace zetarecur
