#include "capelli/polynomial.hpp"

#include <stdexcept>

namespace capelli {

CommutativePolynomial CommutativePolynomial::constant(const Rational& c) {
    return monomial(MultiIndex{}, c);
}

CommutativePolynomial CommutativePolynomial::variable(MultiIndex::Variable var) {
    return monomial(MultiIndex::variable(var), 1);
}

CommutativePolynomial CommutativePolynomial::monomial(const MultiIndex& m, const Rational& c) {
    CommutativePolynomial p;
    p.add_term(m, c);
    return p;
}

void CommutativePolynomial::add_term(const MultiIndex& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int CommutativePolynomial::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

Rational CommutativePolynomial::coefficient(const MultiIndex& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

CommutativePolynomial CommutativePolynomial::leading_form() const {
    CommutativePolynomial out;
    const int top = degree();
    for (const auto& [m, c] : terms_) {
        if (static_cast<int>(m.degree()) != top) break;
        out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

Rational CommutativePolynomial::evaluate(std::span<const Rational> values) const {
    Rational total;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [var, exp] : m.entries()) {
            if (var >= values.size()) throw std::out_of_range("evaluate: no value for variable " + std::to_string(var));
            for (MultiIndex::Exponent e = 0; e < exp; ++e) term *= values[var];
        }
        total += term;
    }
    return total;
}

CommutativePolynomial CommutativePolynomial::substitute(
    const std::function<CommutativePolynomial(MultiIndex::Variable)>& image) const {
    std::map<MultiIndex::Variable, CommutativePolynomial> cache;
    CommutativePolynomial out;
    for (const auto& [m, c] : terms_) {
        CommutativePolynomial term = constant(c);
        for (const auto& [var, exp] : m.entries()) {
            auto it = cache.find(var);
            if (it == cache.end()) it = cache.emplace(var, image(var)).first;
            term = term * pow(it->second, exp);
        }
        out += term;
    }
    return out;
}

CommutativePolynomial& CommutativePolynomial::operator+=(const CommutativePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CommutativePolynomial& CommutativePolynomial::operator-=(const CommutativePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CommutativePolynomial& CommutativePolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

CommutativePolynomial operator*(const CommutativePolynomial& a, const CommutativePolynomial& b) {
    CommutativePolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
    }
    return out;
}

CommutativePolynomial pow(const CommutativePolynomial& p, unsigned e) {
    CommutativePolynomial out = CommutativePolynomial::constant(1);
    for (unsigned i = 0; i < e; ++i) out = out * p;
    return out;
}

std::string format_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, mono] : terms) {
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (mono.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

std::string format(const CommutativePolynomial& p, const VariableNamer& name) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [m, c] : p.terms()) {
        std::string mono;
        for (const auto& [var, exp] : m.entries()) {
            if (!mono.empty()) mono += "*";
            mono += name(var);
            if (exp > 1) mono += "^" + std::to_string(exp);
        }
        terms.emplace_back(c, std::move(mono));
    }
    return format_terms(terms);
}

}  // namespace capelli
