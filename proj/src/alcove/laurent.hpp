#pragma once

#include <map>
#include <string>
#include <utility>

#include "alcove/types.hpp"

namespace alcove {

// Laurent polynomial in t with integer coefficients.
class Laurent {
public:
    Laurent() = default;

    static Laurent monomial(int exp, long long coeff = 1);
    static Laurent one() { return monomial(0); }

    long long coeff(int exp) const;
    void add_term(int exp, long long coeff);
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, long long>& terms() const { return terms_; }

    // Substitution t -> t^{-1}.
    Laurent bar() const;

    Laurent& operator+=(const Laurent& q);
    Laurent& operator-=(const Laurent& q);
    friend Laurent operator+(Laurent p, const Laurent& q) { return p += q; }
    friend Laurent operator-(Laurent p, const Laurent& q) { return p -= q; }
    friend Laurent operator*(const Laurent& p, const Laurent& q);
    friend bool operator==(const Laurent&, const Laurent&) = default;

    std::string str() const;

private:
    std::map<int, long long> terms_;  // exponent -> nonzero coefficient
};

// Splits p uniquely as d + m with d in tZ[t] and m bar-invariant, where m is
// read off from the coefficients of p in degrees <= 0.  Validates that d has
// nonnegative coefficients in strictly positive degrees and that m has
// nonnegative coefficients; throws NegativeCoefficient otherwise.
std::pair<Laurent, Laurent> bar_split(const Laurent& p);

}  // namespace alcove
