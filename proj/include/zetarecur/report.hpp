#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zetarecur {

/**
 * One verification record. Exact checks leave the numeric fields empty;
 * numeric checks carry residual / tolerance / tail bound as decimal strings
 * so reports serialize losslessly.
 */
struct CheckRecord {
    std::string name;            // stable identifier, e.g. "prop21.id3.M=5"
    std::string equation_label;  // source equation tag, e.g. "limit_equation"
    bool pass = false;
    bool exact = true;           // exact-equality check vs numeric residual check
    std::string residual;        // numeric checks: |lhs - rhs|
    std::string tolerance;
    std::string tail_bound;
    std::int64_t terms_used = 0;
    std::string detail;          // failure site, mismatch exponent, etc.
};

struct IdentityReport {
    std::vector<CheckRecord> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(CheckRecord c) { checks.push_back(std::move(c)); }

    void merge(const IdentityReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

}  // namespace zetarecur
