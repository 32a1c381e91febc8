#include "zetarecur/cothalg.hpp"

#include <sstream>
#include <stdexcept>

#include "zetarecur/exactcore.hpp"

namespace zetarecur {

CPoly CPoly::term(const Rational& coeff, int e) {
    CPoly p;
    p.set(e, coeff);
    return p;
}

Rational CPoly::coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

bool CPoly::odd_exponents_only() const {
    for (const auto& [e, c] : coeffs_)
        if (e % 2 == 0) return false;
    return true;
}

bool CPoly::even_exponents_only() const {
    for (const auto& [e, c] : coeffs_)
        if (e % 2 != 0) return false;
    return true;
}

void CPoly::set(int e, const Rational& c) {
    if (c == 0)
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
}

CPoly& CPoly::operator+=(const CPoly& o) {
    for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) + c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) - c);
    return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    std::map<int, Rational> acc;
    for (const auto& [ea, ca] : a.coeffs())
        for (const auto& [eb, cb] : b.coeffs()) acc[ea + eb] += ca * cb;
    CPoly r;
    for (auto& [e, c] : acc)
        if (c != 0) r += CPoly::term(c, e);
    return r;
}

CPoly CPoly::scaled(const Rational& s) const {
    CPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = c * s;
    return r;
}

CPoly derive(const CPoly& p) {
    // d/dx c^e = e c^{e-1} (1 - c^2)
    CPoly r;
    for (const auto& [e, c] : p.coeffs()) {
        if (e == 0) continue;
        r += CPoly::term(c * rat(Int(e)), e - 1);
        r -= CPoly::term(c * rat(Int(e)), e + 1);
    }
    return r;
}

CPoly derive2n(CPoly p, long n) {
    for (long i = 0; i < 2 * n; ++i) p = derive(p);
    return p;
}

CPoly basis_to_poly(int k, BasisKind kind) {
    if (k < 0) throw std::domain_error("basis_to_poly: negative index");
    // coth: c (c^2 - 1)^k;  tanh: t (1 - t^2)^k
    CPoly r;
    for (int i = 0; i <= k; ++i) {
        Rational c = rat(binom(k, i));
        const int sign_flips = (kind == BasisKind::coth) ? (k - i) : i;
        if (sign_flips % 2 != 0) c = -c;
        r += CPoly::term(c, 2 * i + 1);
    }
    return r;
}

BasisVector poly_to_basis(const CPoly& p, BasisKind kind) {
    if (!p.odd_exponents_only())
        throw std::domain_error("poly_to_basis: polynomial has even-exponent terms");
    BasisVector out;
    out.kind = kind;
    CPoly rest = p;
    // Element k has degree exactly 2k+1, so eliminate from the top down.
    while (!rest.is_zero()) {
        const int d = rest.degree();
        const int k = (d - 1) / 2;
        const CPoly b = basis_to_poly(k, kind);
        const Rational coef = rest.coeff(d) / b.coeff(d);
        out.coeffs[k] = coef;
        rest -= b.scaled(coef);
    }
    return out;
}

IdentityReport verify_lemma22(long n_max, const std::vector<std::vector<Rational>>& c_table) {
    if (n_max < 1) throw std::domain_error("verify_lemma22: n_max must be >= 1");
    if (static_cast<long>(c_table.size()) <= n_max)
        throw std::domain_error("verify_lemma22: c_table too small");

    IdentityReport report;
    CPoly deriv = CPoly::variable();
    for (long n = 1; n <= n_max; ++n) {
        deriv = derive(derive(deriv));

        CheckRecord rec;
        rec.name = "lemma22.n=" + std::to_string(n);
        rec.equation_label = "definition_of_c_n_k";
        rec.exact = true;

        // route 1: assemble the claimed combination from the table
        CPoly claimed;
        for (long k = 1; k <= n; ++k)
            claimed += basis_to_poly(static_cast<int>(k), BasisKind::coth)
                           .scaled(c_table[n][k]);
        bool ok = (claimed == deriv);

        // route 2: recover the coefficients independently from the derivative
        if (ok) {
            BasisVector bv = poly_to_basis(deriv, BasisKind::coth);
            for (long k = 1; k <= n && ok; ++k) {
                auto it = bv.coeffs.find(static_cast<int>(k));
                const Rational got = (it == bv.coeffs.end()) ? Rational(0) : it->second;
                if (got != c_table[n][k]) {
                    ok = false;
                    rec.detail = "basis solve mismatch at k=" + std::to_string(k);
                }
            }
            if (ok && bv.coeffs.count(0)) {
                ok = false;
                rec.detail = "unexpected basis-0 component";
            }
        } else {
            rec.detail = "combination differs from formal derivative";
        }
        rec.pass = ok;
        report.add(rec);
    }
    return report;
}

std::pair<BasisVector, BasisVector> tanh_family_sides(long N, long k_max) {
    if (N < 0) throw std::domain_error("tanh_family_sides: N must be >= 0");
    if (k_max < 1) throw std::domain_error("tanh_family_sides: k_max must be >= 1");

    CPoly lhs;
    for (long k = 1; k <= k_max; ++k) {
        const Rational w = rat(Int(k) * Int(k + 1), pow2(static_cast<unsigned long>(k)));
        lhs += basis_to_poly(static_cast<int>(k + 1), BasisKind::tanh).scaled(w);
    }
    lhs = derive2n(lhs, N);

    // Right side lives in u = tanh(2x); du/dx = 2(1-u^2), so each pair of
    // x-derivatives is the plain u-derivation with an extra factor 4.
    CPoly rhs = basis_to_poly(1, BasisKind::tanh).scaled(Rational(4));
    rhs = derive2n(rhs, N);
    rhs = rhs.scaled(rat(ipow(Int(4), static_cast<unsigned long>(N))));

    return {poly_to_basis(lhs, BasisKind::tanh), poly_to_basis(rhs, BasisKind::tanh)};
}

}  // namespace zetarecur
