#pragma once

#include "capelli/multi_index.hpp"
#include "capelli/polynomial.hpp"
#include "capelli/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace capelli {

/// Index ranges of the variables x[i,a], d[i,a] with 1 <= i <= rows and
/// 1 <= a <= cols. Variables are linearized row-major.
struct WeylShape {
    int rows = 0;
    int cols = 0;

    int pairs() const { return rows * cols; }
    bool contains(int i, int a) const { return i >= 1 && i <= rows && a >= 1 && a <= cols; }
    MultiIndex::Variable variable(int i, int a) const;
    std::pair<int, int> position(MultiIndex::Variable v) const;

    friend bool operator==(const WeylShape&, const WeylShape&) = default;
};

/// x^alpha d^beta with all x's to the left.
struct WeylMonomial {
    MultiIndex x;
    MultiIndex d;

    MultiIndex::Exponent degree() const { return x.degree() + d.degree(); }
    friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;
};

/// Descending by total degree, then lexicographic on x then d.
struct WeylMonomialOrder {
    bool operator()(const WeylMonomial& a, const WeylMonomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        if (const int c = MultiIndex::lex_compare(a.x, b.x); c != 0) return c > 0;
        return MultiIndex::lex_compare(a.d, b.d) > 0;
    }
};

/// Normal-ordered element of the Weyl algebra on a rows x cols matrix
/// space. Immutable in spirit: arithmetic returns new values.
class WeylElement {
public:
    using TermMap = std::map<WeylMonomial, Rational, WeylMonomialOrder>;

    explicit WeylElement(WeylShape shape = {}) : shape_(shape) {}

    static WeylElement constant(WeylShape shape, const Rational& c);
    static WeylElement x(WeylShape shape, int i, int a);
    static WeylElement d(WeylShape shape, int i, int a);

    const WeylShape& shape() const { return shape_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Filtration degree (x and d both weight one); -1 for zero.
    int degree() const;

    void add_term(const WeylMonomial& m, const Rational& c);

    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    WeylElement& operator*=(const Rational& c);

    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator-(WeylElement a) { return a *= Rational(-1); }
    friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
    friend WeylElement operator*(const Rational& c, WeylElement a) { return a *= c; }
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.shape_ == b.shape_ && a.terms_ == b.terms_;
    }

private:
    void check_shape(const WeylElement& o) const;

    WeylShape shape_;
    TermMap terms_;
};

/// (x^a d^b)(x^c d^e) = sum_nu C(b,nu) C(c,nu) nu! x^{a+c-nu} d^{b+e-nu}.
WeylElement weyl_product(const WeylElement& a, const WeylElement& b);
WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b);
WeylElement pow(const WeylElement& a, unsigned e);

/// Differential-operator action on polynomials in the x variables (ids as
/// in WeylShape::variable).
CommutativePolynomial weyl_apply(const WeylElement& a, const CommutativePolynomial& p);

/// Top filtration component as a commutative polynomial: x[i,a] -> xi
/// (same id), d[i,a] -> eta (id + pairs).
CommutativePolynomial weyl_symbol(const WeylElement& a);

inline WeylElement zero_like(const WeylElement& a) { return WeylElement(a.shape()); }
inline WeylElement one_like(const WeylElement& a) { return WeylElement::constant(a.shape(), 1); }

std::string format(const WeylElement& a);
/// Names for polynomials over the x variables: "x[i,a]".
VariableNamer x_namer(WeylShape shape);
/// Names for symbol variables: "xi[i,a]" and "eta[i,a]".
VariableNamer symbol_namer(WeylShape shape);

}  // namespace capelli
