#include "zetarecur/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "zetarecur/exactcore.hpp"

namespace zetarecur {

LaurentPoly LaurentPoly::term(const Rational& c, long e) {
    LaurentPoly p;
    p.set(e, c);
    return p;
}

Rational LaurentPoly::coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

long LaurentPoly::min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
long LaurentPoly::max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

void LaurentPoly::set(long e, const Rational& c) {
    if (c == 0)
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) - c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return lp_mul(a, b); }

LaurentPoly LaurentPoly::scaled(const Rational& s) const {
    LaurentPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = c * s;
    return r;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) os << " + ";
        os << to_string(it->second) << "*z^" << it->first;
        first = false;
    }
    return os.str();
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<long, Rational> acc;
    for (const auto& [ea, ca] : a.coeffs())
        for (const auto& [eb, cb] : b.coeffs()) acc[ea + eb] += ca * cb;
    LaurentPoly r;
    for (auto& [e, c] : acc)
        if (c != 0) r += LaurentPoly::term(c, e);
    return r;
}

LaurentPoly lp_pow(const LaurentPoly& a, unsigned long e) {
    LaurentPoly r = LaurentPoly::one();
    LaurentPoly base = a;
    while (e) {
        if (e & 1) r = lp_mul(r, base);
        base = lp_mul(base, base);
        e >>= 1;
    }
    return r;
}

namespace {

const LaurentPoly& z_plus() {
    static const LaurentPoly p = LaurentPoly::term(Rational(1), 1) + LaurentPoly::term(Rational(1), -1);
    return p;
}
const LaurentPoly& z_minus() {
    static const LaurentPoly p = LaurentPoly::term(Rational(1), 1) - LaurentPoly::term(Rational(1), -1);
    return p;
}
const LaurentPoly& z2_plus() {
    static const LaurentPoly p = LaurentPoly::term(Rational(1), 2) + LaurentPoly::term(Rational(1), -2);
    return p;
}
const LaurentPoly& z2_minus() {
    static const LaurentPoly p = LaurentPoly::term(Rational(1), 2) - LaurentPoly::term(Rational(1), -2);
    return p;
}

CheckRecord compare_sides(const std::string& name, const std::string& label,
                          const LaurentPoly& lhs, const LaurentPoly& rhs) {
    CheckRecord rec;
    rec.name = name;
    rec.equation_label = label;
    rec.exact = true;
    rec.pass = (lhs == rhs);
    std::ostringstream os;
    os << "max_degree=" << lhs.max_exp();
    if (!rec.pass) {
        LaurentPoly diff = lhs - rhs;
        os << " first_mismatch_exponent=" << diff.min_exp();
    }
    rec.detail = os.str();
    return rec;
}

}  // namespace

Rational s_value(SFamily family, SParity parity, long M, long j) {
    if (M < 1) throw std::out_of_range("s_value: M must be >= 1");
    const long jmax = (family == SFamily::pow4M && parity == SParity::odd) ? M - 1 : M;
    if (j < 0 || j > jmax) throw std::out_of_range("s_value: j out of range");

    Rational sum(0);
    for (long k = 0; k <= j; ++k) {
        Rational term;
        if (family == SFamily::pow4M2 && parity == SParity::even) {
            term = rat(binom(2 * (M - k), j - k) - binom(2 * (M - k), j - 1 - k));
        } else if (family == SFamily::pow4M && parity == SParity::even) {
            term = rat(Int(M), Int(M + k)) * rat(binom(2 * (M - k), j - k));
        } else if (family == SFamily::pow4M2 && parity == SParity::odd) {
            term = rat(Int(4 * M + 2), Int(2 * k + 1)) * rat(binom(2 * (M - k), j - k));
        } else {  // pow4M, odd
            term = rat(Int(4 * (M - k)), Int(2 * k + 1)) *
                   rat(binom(2 * (M - 1 - k), j - k) - binom(2 * (M - 1 - k), j - 1 - k));
        }
        term *= rat(binom(M + k, 2 * k)) * rat(pow2(4 * static_cast<unsigned long>(k)));
        if ((j - k) % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

IdentityReport check_prop21(long M) {
    if (M < 1) throw std::out_of_range("check_prop21: M must be >= 1");
    IdentityReport report;
    const Rational half = rat(1, 2);
    const std::string mtag = ".M=" + std::to_string(M);

    // Each side is expanded independently of the other.
    {
        LaurentPoly lhs = lp_pow(z_plus(), 4 * M + 2).scaled(half) -
                          lp_pow(z_minus(), 4 * M + 2).scaled(half);
        LaurentPoly rhs;
        for (long k = 0; k <= M; ++k) {
            Rational c = rat(pow2(4 * static_cast<unsigned long>(k))) *
                         rat(Int(4 * M + 2), Int(2 * k + 1)) * rat(binom(M + k, 2 * k));
            rhs += lp_pow(z2_minus(), 2 * (M - k)).scaled(c);
        }
        report.add(compare_sides("prop21.id1" + mtag, "prop21", lhs, rhs));
    }
    {
        LaurentPoly lhs = lp_pow(z_plus(), 4 * M).scaled(half) -
                          lp_pow(z_minus(), 4 * M).scaled(half);
        LaurentPoly inner;
        for (long k = 0; k <= M - 1; ++k) {
            Rational c = rat(pow2(4 * static_cast<unsigned long>(k))) *
                         rat(Int(M - k), Int(2 * k + 1)) * rat(binom(M + k, 2 * k));
            inner += lp_pow(z2_minus(), 2 * (M - 1 - k)).scaled(c);
        }
        LaurentPoly rhs = lp_mul(z2_plus(), inner).scaled(Rational(4));
        report.add(compare_sides("prop21.id2" + mtag, "prop21", lhs, rhs));
    }
    {
        LaurentPoly lhs = lp_pow(z_plus(), 4 * M).scaled(half) +
                          lp_pow(z_minus(), 4 * M).scaled(half);
        LaurentPoly rhs;
        for (long k = 0; k <= M; ++k) {
            Rational c = rat(pow2(4 * static_cast<unsigned long>(k))) *
                         rat(Int(M), Int(M + k)) * rat(binom(M + k, 2 * k));
            rhs += lp_pow(z2_minus(), 2 * (M - k)).scaled(c);
        }
        report.add(compare_sides("prop21.id3" + mtag, "prop21", lhs, rhs));
    }
    {
        LaurentPoly lhs = lp_pow(z_plus(), 4 * M + 2).scaled(half) +
                          lp_pow(z_minus(), 4 * M + 2).scaled(half);
        LaurentPoly inner;
        for (long k = 0; k <= M; ++k) {
            Rational c = rat(pow2(4 * static_cast<unsigned long>(k))) * rat(binom(M + k, 2 * k));
            inner += lp_pow(z2_minus(), 2 * (M - k)).scaled(c);
        }
        LaurentPoly rhs = lp_mul(z2_plus(), inner);
        report.add(compare_sides("prop21.id4" + mtag, "prop21", lhs, rhs));
    }
    return report;
}

IdentityReport check_s_recurrences(long M) {
    if (M < 1) throw std::out_of_range("check_s_recurrences: M must be >= 1");
    IdentityReport report;

    auto record = [&](const std::string& name, bool ok, long j) {
        CheckRecord rec;
        rec.name = name + ".M=" + std::to_string(M);
        rec.equation_label = "prop21_proof";
        rec.exact = true;
        rec.pass = ok;
        if (!ok) rec.detail = "first failing j=" + std::to_string(j);
        report.add(rec);
    };

    auto Se2 = [&](long j) { return s_value(SFamily::pow4M2, SParity::even, M, j); };
    auto Se0 = [&](long j) { return s_value(SFamily::pow4M, SParity::even, M, j); };
    auto So2 = [&](long j) { return s_value(SFamily::pow4M2, SParity::odd, M, j); };
    auto So0 = [&](long j) { return s_value(SFamily::pow4M, SParity::odd, M, j); };

    bool ok = true;
    long bad = -1;
    for (long j = 1; j <= M && ok; ++j) {
        Rational lhs = rat(Int((2 * M - 2 * j + 3)) * (4 * M + 2) * j) * Se2(j) +
                       rat(Int(4) * (2 * M - 2 * j + 2) * (2 * M - 2 * j + 1) * (3 * M - j + 2)) * So2(j - 1) -
                       rat(Int(2) * (2 * M - 2 * j + 2) * (4 * M + 1) * (4 * M + 2)) * So0(j - 1);
        Rational rhs = rat(-Int(2 * M - 2 * j + 1) * (2 * M - j + 2) * (4 * M + 2)) * Se2(j - 1);
        if (lhs != rhs) { ok = false; bad = j; }
    }
    record("s_rec.1", ok, bad);

    ok = true; bad = -1;
    for (long j = 1; j <= M && ok; ++j) {
        Rational lhs = rat(Int(j)) * Se0(j) - rat(Int(2 * M)) * So0(j - 1);
        Rational rhs = rat(-Int(2 * M - j + 1)) * Se0(j - 1);
        if (lhs != rhs) { ok = false; bad = j; }
    }
    record("s_rec.2", ok, bad);

    ok = true; bad = -1;
    for (long j = 1; j <= M && ok; ++j) {
        Rational lhs = rat(Int(2 * j + 1)) * So2(j) - rat(Int(4 * M + 2)) * Se2(j);
        Rational rhs = rat(-Int(4 * M - 2 * j + 3)) * So2(j - 1);
        if (lhs != rhs) { ok = false; bad = j; }
    }
    record("s_rec.3", ok, bad);

    ok = true; bad = -1;
    for (long j = 1; j <= M - 1 && ok; ++j) {
        Rational lhs = rat(Int(2 * M + 1)) * So0(j) - rat(Int(2 * M - 2 * j)) * So2(j);
        Rational rhs = rat(Int(2 * M + 1)) * So0(j - 1);
        if (lhs != rhs) { ok = false; bad = j; }
    }
    record("s_rec.4", ok, bad);

    // closed forms
    ok = true; bad = -1;
    for (long j = 0; j <= M && ok; ++j) {
        if (Se2(j) != rat(binom(4 * M + 2, 2 * j))) { ok = false; bad = j; }
        if (ok && Se0(j) != rat(binom(4 * M, 2 * j))) { ok = false; bad = j; }
        if (ok && So2(j) != rat(binom(4 * M + 2, 2 * j + 1))) { ok = false; bad = j; }
        if (ok && j <= M - 1 && So0(j) != rat(binom(4 * M, 2 * j + 1))) { ok = false; bad = j; }
    }
    record("s_rec.closed_forms", ok, bad);

    return report;
}

}  // namespace zetarecur
