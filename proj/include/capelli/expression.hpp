#pragma once

#include "capelli/dual_pair.hpp"
#include "capelli/rational.hpp"
#include "capelli/uea.hpp"
#include "capelli/weyl.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace capelli {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// The algebra an expression is read in: "weyl:RxC", "gl:n" or "o:N". A Weyl
/// declaration may carry a dual pair, in which case E[i,j] / F[i,j] denote R
/// images and Ep[a,b] / Fp[a,b] denote L images.
struct AlgebraDecl {
    enum class Kind { weyl, gl, o };

    Kind kind = Kind::weyl;
    WeylShape shape;
    LieAlgebraPtr lie;
    std::shared_ptr<const DualPairContext> pair;

    /// Throws std::invalid_argument on malformed text.
    static AlgebraDecl parse(const std::string& text);
    static AlgebraDecl weyl(WeylShape shape);
    static AlgebraDecl enveloping(LieAlgebraPtr algebra);
    /// Weyl algebra of the pair's matrix space with E/F and Ep/Fp bound.
    static AlgebraDecl realized(std::shared_ptr<const DualPairContext> pair);

    std::string describe() const;
};

struct Expression {
    enum class Kind { number, atom, add, subtract, multiply, negate, power, commutator };

    Kind kind = Kind::number;
    Rational value;
    std::string atom;  // x, d, E, F, Ep, Fp
    int i = 0;
    int j = 0;
    unsigned exponent = 0;
    std::vector<Expression> children;
    int line = 1;
    int column = 1;

    /// Structural equality, ignoring source positions.
    friend bool operator==(const Expression& a, const Expression& b);
};

/// expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
/// factor := '-' factor | primary ('^' uint)* ;
/// primary := atom '[' int ',' int ']' | int ('/' int)? | '(' expr ')' | 'comm(' expr ',' expr ')'.
/// Atoms and index ranges are checked against the declaration.
Expression parse_expression(const std::string& source, const AlgebraDecl& decl);

/// Fully structural rendering that parses back to an equal tree.
std::string to_string(const Expression& e);

using Element = std::variant<WeylElement, UEAElement>;

Element evaluate(const Expression& e, const AlgebraDecl& decl);
std::string format(const Element& e);

/// parse_expression followed by evaluate.
Element normal_form(const std::string& source, const AlgebraDecl& decl);

}  // namespace capelli
