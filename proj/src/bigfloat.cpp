#include "zetarecur/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace zetarecur {

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

BigFloat BigFloat::parse(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigFloat::parse: bad numeric literal '" + s + "'");
    return r;
}

std::string BigFloat::str(int digits) const {
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define ZR_UNARY(name, fn)                   \
    BigFloat name(const BigFloat& x) {       \
        BigFloat r(x.prec());                \
        fn(r.raw(), x.raw(), MPFR_RNDN);     \
        return r;                            \
    }

ZR_UNARY(abs, mpfr_abs)
ZR_UNARY(exp, mpfr_exp)
ZR_UNARY(expm1, mpfr_expm1)
ZR_UNARY(log, mpfr_log)
ZR_UNARY(sinh, mpfr_sinh)
ZR_UNARY(cosh, mpfr_cosh)
ZR_UNARY(tanh, mpfr_tanh)
ZR_UNARY(coth, mpfr_coth)

#undef ZR_UNARY

std::pair<BigFloat, BigFloat> sinh_cosh(const BigFloat& x) {
    BigFloat s(x.prec()), c(x.prec());
    mpfr_sinh_cosh(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
    return {std::move(s), std::move(c)};
}

BigFloat pow_ui(const BigFloat& x, unsigned long e) {
    BigFloat r(x.prec());
    mpfr_pow_ui(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat ldexp2(const BigFloat& x, long e) {
    BigFloat r(x.prec());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat mul_long(const BigFloat& x, long s) {
    BigFloat r(x.prec());
    mpfr_mul_si(r.raw(), x.raw(), s, MPFR_RNDN);
    return r;
}

BigFloat div_long(const BigFloat& x, long s) {
    BigFloat r(x.prec());
    mpfr_div_si(r.raw(), x.raw(), s, MPFR_RNDN);
    return r;
}

}  // namespace zetarecur
