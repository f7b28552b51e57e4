#pragma once

#include "capelli/lie_algebra.hpp"
#include "capelli/polynomial.hpp"
#include "capelli/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace capelli {

/// A word in basis generators. PBW monomials are the non-decreasing words.
using Word = std::vector<LieAlgebra::Generator>;

/// Longer words first; among words of one length, lexicographically smaller
/// first (for sorted words this is graded lex with the larger monomial first).
struct PbwOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    }
};

/// Which adjacent out-of-order pair the straightening loop rewrites first.
enum class RewriteStrategy { leftmost, rightmost };

/// Element of U(g) in PBW normal form.
class UEAElement {
public:
    using TermMap = std::map<Word, Rational, PbwOrder>;

    explicit UEAElement(LieAlgebraPtr algebra);

    static UEAElement constant(LieAlgebraPtr algebra, const Rational& c);
    static UEAElement generator(LieAlgebraPtr algebra, LieAlgebra::Generator g);
    /// Matrix entry (i,j) of E (gl) or F (o), 1-based; F_ji = -F_ij, F_ii = 0.
    static UEAElement entry(LieAlgebraPtr algebra, int i, int j);
    /// Straightens an arbitrary word times a coefficient.
    static UEAElement from_word(LieAlgebraPtr algebra, const Word& word, const Rational& c,
                                RewriteStrategy strategy = RewriteStrategy::leftmost);
    /// Straightens a linear combination of words in one pass.
    static UEAElement from_words(LieAlgebraPtr algebra, const std::vector<std::pair<Word, Rational>>& words,
                                 RewriteStrategy strategy = RewriteStrategy::leftmost);

    const LieAlgebraPtr& algebra() const { return algebra_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Filtration degree; -1 for zero.
    int degree() const;

    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    UEAElement& operator*=(const Rational& c);

    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator-(UEAElement a) { return a *= Rational(-1); }
    friend UEAElement operator*(UEAElement a, const Rational& c) { return a *= c; }
    friend UEAElement operator*(const Rational& c, UEAElement a) { return a *= c; }
    friend UEAElement operator*(const UEAElement& a, const UEAElement& b);

    friend bool operator==(const UEAElement& a, const UEAElement& b) {
        return *a.algebra_ == *b.algebra_ && a.terms_ == b.terms_;
    }

private:
    friend class PbwStraightener;
    friend UEAElement uea_product(const UEAElement&, const UEAElement&, RewriteStrategy);
    void add_sorted(const Word& w, const Rational& c);
    void check_algebra(const UEAElement& o) const;

    LieAlgebraPtr algebra_;
    TermMap terms_;
};

UEAElement uea_product(const UEAElement& a, const UEAElement& b,
                       RewriteStrategy strategy = RewriteStrategy::leftmost);

/// ad(x)(a) = x a - a x for a basis generator x.
UEAElement uea_ad(LieAlgebra::Generator x, const UEAElement& a);
UEAElement uea_commutator(const UEAElement& a, const UEAElement& b);
UEAElement pow(const UEAElement& a, unsigned e);

/// Top-degree part with generators replaced by commuting symbols M. The
/// variable id of a generator is its basis index.
CommutativePolynomial uea_symbol(const UEAElement& a);

inline UEAElement zero_like(const UEAElement& a) { return UEAElement(a.algebra()); }
inline UEAElement one_like(const UEAElement& a) { return UEAElement::constant(a.algebra(), 1); }

/// "E[1,2]*E[2,1] + E[2,2] - E[1,1]" style text.
std::string format(const UEAElement& a);
/// Names symbol variables "M[i,j]".
VariableNamer symbol_namer(const LieAlgebra& algebra);

}  // namespace capelli
