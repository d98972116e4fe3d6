#include "alcove/laurent.hpp"

#include <sstream>

namespace alcove {

Laurent Laurent::monomial(int exp, long long coeff) {
    Laurent p;
    p.add_term(exp, coeff);
    return p;
}

long long Laurent::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

void Laurent::add_term(int exp, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent Laurent::bar() const {
    Laurent out;
    for (auto [exp, c] : terms_) out.add_term(-exp, c);
    return out;
}

Laurent& Laurent::operator+=(const Laurent& q) {
    for (auto [exp, c] : q.terms_) add_term(exp, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& q) {
    for (auto [exp, c] : q.terms_) add_term(exp, -c);
    return *this;
}

Laurent operator*(const Laurent& p, const Laurent& q) {
    Laurent out;
    for (auto [e1, c1] : p.terms_)
        for (auto [e2, c2] : q.terms_)
            out.add_term(e1 + e2, c1 * c2);
    return out;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [exp, c] : terms_) {
        if (!first) os << "+";
        first = false;
        if (exp == 0) {
            os << c;
            continue;
        }
        if (c == -1) os << "-";
        else if (c != 1) os << c;
        os << "t";
        if (exp != 1) os << "^" << exp;
    }
    return os.str();
}

std::pair<Laurent, Laurent> bar_split(const Laurent& p) {
    Laurent m;
    for (auto [exp, c] : p.terms()) {
        if (exp < 0) {
            m.add_term(exp, c);
            m.add_term(-exp, c);
        } else if (exp == 0) {
            m.add_term(0, c);
        }
    }
    Laurent d = p - m;
    for (auto [exp, c] : d.terms())
        if (exp <= 0 || c < 0)
            throw NegativeCoefficient("polynomial part not in tZ>=0[t]: " + d.str());
    for (auto [exp, c] : m.terms())
        if (c < 0)
            throw NegativeCoefficient("bar-invariant part has a negative coefficient: " + m.str());
    return {d, m};
}

}  // namespace alcove
