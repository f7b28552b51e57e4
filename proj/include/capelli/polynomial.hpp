#pragma once

#include "capelli/multi_index.hpp"
#include "capelli/rational.hpp"

#include <functional>
#include <map>
#include <span>
#include <string>

namespace capelli {

using VariableNamer = std::function<std::string(MultiIndex::Variable)>;

/// Sparse polynomial with exact rational coefficients in commuting
/// variables identified by integer ids. Terms iterate in descending graded
/// lexicographic order.
class CommutativePolynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, DegLexDescending>;

    CommutativePolynomial() = default;

    static CommutativePolynomial constant(const Rational& c);
    static CommutativePolynomial variable(MultiIndex::Variable var);
    static CommutativePolynomial monomial(const MultiIndex& m, const Rational& c = 1);

    void add_term(const MultiIndex& m, const Rational& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    Rational coefficient(const MultiIndex& m) const;

    /// Homogeneous component of top degree.
    CommutativePolynomial leading_form() const;

    /// values[v] is substituted for variable v.
    Rational evaluate(std::span<const Rational> values) const;

    /// Replaces each variable by a polynomial.
    CommutativePolynomial substitute(const std::function<CommutativePolynomial(MultiIndex::Variable)>& image) const;

    CommutativePolynomial& operator+=(const CommutativePolynomial& o);
    CommutativePolynomial& operator-=(const CommutativePolynomial& o);
    CommutativePolynomial& operator*=(const Rational& c);

    friend CommutativePolynomial operator+(CommutativePolynomial a, const CommutativePolynomial& b) { return a += b; }
    friend CommutativePolynomial operator-(CommutativePolynomial a, const CommutativePolynomial& b) { return a -= b; }
    friend CommutativePolynomial operator-(CommutativePolynomial a) { return a *= Rational(-1); }
    friend CommutativePolynomial operator*(CommutativePolynomial a, const Rational& c) { return a *= c; }
    friend CommutativePolynomial operator*(const Rational& c, CommutativePolynomial a) { return a *= c; }
    friend CommutativePolynomial operator*(const CommutativePolynomial& a, const CommutativePolynomial& b);

    friend bool operator==(const CommutativePolynomial& a, const CommutativePolynomial& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

CommutativePolynomial pow(const CommutativePolynomial& p, unsigned e);

inline CommutativePolynomial zero_like(const CommutativePolynomial&) { return {}; }
inline CommutativePolynomial one_like(const CommutativePolynomial&) { return CommutativePolynomial::constant(1); }

/// Canonical text: "3/2*a*b^2 - c + 1", "0" for zero.
std::string format(const CommutativePolynomial& p, const VariableNamer& name);

/// Shared rendering of a signed term list. Each entry is (coefficient,
/// monomial text) where the monomial text is empty for the unit.
std::string format_terms(const std::vector<std::pair<Rational, std::string>>& terms);

}  // namespace capelli
