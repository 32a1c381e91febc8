#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zetarecur {

// Exact arbitrary-size integers and rationals. mpq_class keeps values in
// lowest terms with positive denominator once canonicalized; every
// constructor here canonicalizes, so equality is plain coefficient compare.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long n) { return Rational(n); }

inline Rational rat(const Int& n) { return Rational(n); }

inline Rational rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(long num, long den) { return rat(Int(num), Int(den)); }

/// 2^e as an exact integer, e >= 0.
inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// q^e for integer e (negative e inverts; q must be nonzero then).
inline Rational rpow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    Rational base = q;
    if (e < 0) {
        if (q == 0) throw std::domain_error("rpow: 0 to negative power");
        base = Rational(q.get_den(), q.get_num());
        base.canonicalize();
        e = -e;
    }
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;  // powers of a canonical value stay canonical
}

/// "p/q" (or plain "p" for integers), the serialization used by the CLI.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace zetarecur
