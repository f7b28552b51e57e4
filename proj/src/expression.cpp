#include "capelli/expression.hpp"

#include <cctype>
#include <regex>

namespace capelli {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

AlgebraDecl AlgebraDecl::weyl(WeylShape shape) {
    if (shape.rows < 1 || shape.cols < 1) throw std::invalid_argument("weyl shape must be positive");
    AlgebraDecl d;
    d.kind = Kind::weyl;
    d.shape = shape;
    return d;
}

AlgebraDecl AlgebraDecl::enveloping(LieAlgebraPtr algebra) {
    AlgebraDecl d;
    d.kind = algebra->type() == LieType::gl ? Kind::gl : Kind::o;
    d.lie = std::move(algebra);
    return d;
}

AlgebraDecl AlgebraDecl::realized(std::shared_ptr<const DualPairContext> pair) {
    AlgebraDecl d = weyl(pair->shape);
    d.lie = pair->large_algebra;
    d.pair = std::move(pair);
    return d;
}

AlgebraDecl AlgebraDecl::parse(const std::string& text) {
    static const std::regex weyl_re(R"(weyl:(\d+)x(\d+))");
    static const std::regex lie_re(R"((gl|o):(\d+))");
    std::smatch m;
    try {
        if (std::regex_match(text, m, weyl_re)) return weyl({std::stoi(m[1]), std::stoi(m[2])});
        if (std::regex_match(text, m, lie_re)) {
            const int size = std::stoi(m[2]);
            return enveloping(m[1] == "gl" ? LieAlgebra::gl(size) : LieAlgebra::o(size));
        }
    } catch (const std::out_of_range&) {
    }
    throw std::invalid_argument("bad algebra '" + text + "' (expected weyl:RxC, gl:n or o:N)");
}

std::string AlgebraDecl::describe() const {
    std::string s;
    if (kind == Kind::weyl) {
        s = "weyl:" + std::to_string(shape.rows) + "x" + std::to_string(shape.cols);
        if (pair) s += " (" + to_string(pair->pair) + " pair, " + to_string(pair->convention) + ")";
    } else {
        s = lie->name();
    }
    return s;
}

bool operator==(const Expression& a, const Expression& b) {
    return a.kind == b.kind && a.value == b.value && a.atom == b.atom && a.i == b.i && a.j == b.j &&
           a.exponent == b.exponent && a.children == b.children;
}

namespace {

struct Token {
    enum class Type { integer, identifier, symbol, end };
    Type type;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1, column = 1;
    std::size_t p = 0;
    const auto advance = [&](std::size_t count) {
        for (std::size_t c = 0; c < count; ++c, ++p) {
            if (src[p] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (p < src.size()) {
        const unsigned char ch = static_cast<unsigned char>(src[p]);
        if (std::isspace(ch)) {
            advance(1);
            continue;
        }
        std::size_t q = p;
        if (std::isdigit(ch)) {
            while (q < src.size() && std::isdigit(static_cast<unsigned char>(src[q]))) ++q;
            out.push_back({Token::Type::integer, src.substr(p, q - p), line, column});
        } else if (std::isalpha(ch)) {
            while (q < src.size() && std::isalnum(static_cast<unsigned char>(src[q]))) ++q;
            out.push_back({Token::Type::identifier, src.substr(p, q - p), line, column});
        } else if (std::string_view("+-*/^()[],").find(static_cast<char>(ch)) != std::string_view::npos) {
            q = p + 1;
            out.push_back({Token::Type::symbol, std::string(1, static_cast<char>(ch)), line, column});
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(ch) + "'", line, column);
        }
        advance(q - p);
    }
    out.push_back({Token::Type::end, "", line, column});
    return out;
}

class Parser {
public:
    Parser(const std::string& src, const AlgebraDecl& decl) : tokens_(tokenize(src)), decl_(decl) {}

    Expression parse() {
        if (peek().type == Token::Type::end) fail("empty expression");
        Expression e = expr();
        if (peek().type != Token::Type::end) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }
    bool at(const char* sym) const { return peek().type == Token::Type::symbol && peek().text == sym; }

    [[noreturn]] void fail(const std::string& message) const { fail_at(message, peek()); }
    [[noreturn]] static void fail_at(const std::string& message, const Token& t) {
        throw ParseError(message, t.line, t.column);
    }

    void expect(const char* sym) {
        if (!at(sym)) fail(std::string("expected '") + sym + "'" + (peek().text.empty() ? "" : " before '" + peek().text + "'"));
        take();
    }

    static Expression node(Expression::Kind kind, const Token& t, std::vector<Expression> children = {}) {
        Expression e;
        e.kind = kind;
        e.line = t.line;
        e.column = t.column;
        e.children = std::move(children);
        return e;
    }

    Expression expr() {
        Expression lhs = term();
        while (at("+") || at("-")) {
            const Token& op = take();
            Expression rhs = term();
            lhs = node(op.text == "+" ? Expression::Kind::add : Expression::Kind::subtract, op, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    Expression term() {
        Expression lhs = factor();
        while (at("*")) {
            const Token& op = take();
            Expression rhs = factor();
            lhs = node(Expression::Kind::multiply, op, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    Expression factor() {
        if (at("-")) {
            const Token& op = take();
            return node(Expression::Kind::negate, op, {factor()});
        }
        Expression base = primary();
        while (at("^")) {
            const Token& op = take();
            if (peek().type != Token::Type::integer) fail("exponent must be a non-negative integer");
            const Token& exp = take();
            Expression p = node(Expression::Kind::power, op, {std::move(base)});
            try {
                p.exponent = static_cast<unsigned>(std::stoul(exp.text));
            } catch (const std::exception&) {
                fail_at("exponent too large", exp);
            }
            base = std::move(p);
        }
        return base;
    }

    int index() {
        if (peek().type != Token::Type::integer) fail("expected a positive index");
        const Token& t = take();
        int v = 0;
        try {
            v = std::stoi(t.text);
        } catch (const std::exception&) {
            fail_at("index too large", t);
        }
        if (v < 1) fail_at("indices are 1-based", t);
        return v;
    }

    Expression primary() {
        const Token& t = peek();
        if (t.type == Token::Type::integer) {
            take();
            std::string text = t.text;
            if (at("/")) {
                take();
                if (peek().type != Token::Type::integer) fail("expected a denominator");
                text += "/" + take().text;
            }
            Expression e = node(Expression::Kind::number, t);
            try {
                e.value = Rational::parse(text);
            } catch (const std::exception& ex) {
                fail_at(ex.what(), t);
            }
            return e;
        }
        if (at("(")) {
            take();
            Expression e = expr();
            expect(")");
            return e;
        }
        if (t.type == Token::Type::identifier) {
            take();
            if (t.text == "comm") {
                expect("(");
                Expression a = expr();
                expect(",");
                Expression b = expr();
                expect(")");
                return node(Expression::Kind::commutator, t, {std::move(a), std::move(b)});
            }
            Expression e = node(Expression::Kind::atom, t);
            e.atom = t.text;
            check_atom(t);
            expect("[");
            const Token& it = peek();
            e.i = index();
            expect(",");
            const Token& jt = peek();
            e.j = index();
            expect("]");
            const auto [max_i, max_j] = ranges(e.atom);
            if (e.i > max_i) fail_at(range_message(e, max_i, max_j), it);
            if (e.j > max_j) fail_at(range_message(e, max_i, max_j), jt);
            return e;
        }
        if (t.type == Token::Type::end) fail("unexpected end of input");
        fail("unexpected '" + t.text + "'");
    }

    static std::string range_message(const Expression& e, int max_i, int max_j) {
        return "index out of range: " + e.atom + "[" + std::to_string(e.i) + "," + std::to_string(e.j) +
               "] (allowed 1.." + std::to_string(max_i) + ", 1.." + std::to_string(max_j) + ")";
    }

    void check_atom(const Token& t) const {
        const std::string& a = t.text;
        bool ok = false;
        switch (decl_.kind) {
            case AlgebraDecl::Kind::weyl:
                ok = a == "x" || a == "d";
                if (decl_.pair) {
                    const bool gl = decl_.pair->pair == PairType::gl_gl;
                    ok = ok || a == (gl ? "E" : "F") || a == (gl ? "Ep" : "Fp");
                }
                break;
            case AlgebraDecl::Kind::gl: ok = a == "E"; break;
            case AlgebraDecl::Kind::o: ok = a == "F"; break;
        }
        if (!ok) fail_at("atom '" + a + "' is not in the declared algebra " + decl_.describe(), t);
    }

    std::pair<int, int> ranges(const std::string& atom) const {
        if (atom == "x" || atom == "d") return {decl_.shape.rows, decl_.shape.cols};
        if (atom == "Ep" || atom == "Fp") {
            const int m = static_cast<int>(decl_.pair->left_image.rows());
            return {m, m};
        }
        return {decl_.lie->size(), decl_.lie->size()};
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const AlgebraDecl& decl_;
};

int precedence(const Expression& e) {
    switch (e.kind) {
        case Expression::Kind::add:
        case Expression::Kind::subtract: return 1;
        case Expression::Kind::multiply: return 2;
        case Expression::Kind::negate: return 3;
        case Expression::Kind::power: return 4;
        case Expression::Kind::number: return e.value.is_integer() ? 5 : 2;
        default: return 5;
    }
}

std::string wrap(const Expression& e, int min_precedence) {
    const std::string s = to_string(e);
    return precedence(e) < min_precedence ? "(" + s + ")" : s;
}

Element constant_of(const AlgebraDecl& decl, const Rational& c) {
    if (decl.kind == AlgebraDecl::Kind::weyl) return WeylElement::constant(decl.shape, c);
    return UEAElement::constant(decl.lie, c);
}

Element atom_value(const Expression& e, const AlgebraDecl& decl) {
    if (e.atom == "x") return WeylElement::x(decl.shape, e.i, e.j);
    if (e.atom == "d") return WeylElement::d(decl.shape, e.i, e.j);
    if (decl.kind != AlgebraDecl::Kind::weyl) return UEAElement::entry(decl.lie, e.i, e.j);
    if (e.atom == "Ep" || e.atom == "Fp") return realize_left(*decl.pair, e.i, e.j);
    return decl.pair->right_image(static_cast<std::size_t>(e.i - 1), static_cast<std::size_t>(e.j - 1));
}

}  // namespace

Expression parse_expression(const std::string& source, const AlgebraDecl& decl) { return Parser(source, decl).parse(); }

std::string to_string(const Expression& e) {
    switch (e.kind) {
        case Expression::Kind::number: return e.value.str();
        case Expression::Kind::atom: return e.atom + "[" + std::to_string(e.i) + "," + std::to_string(e.j) + "]";
        case Expression::Kind::add: return wrap(e.children[0], 1) + " + " + wrap(e.children[1], 2);
        case Expression::Kind::subtract: return wrap(e.children[0], 1) + " - " + wrap(e.children[1], 2);
        case Expression::Kind::multiply: return wrap(e.children[0], 2) + "*" + wrap(e.children[1], 3);
        case Expression::Kind::negate: return "-" + wrap(e.children[0], 3);
        case Expression::Kind::power: return wrap(e.children[0], 5) + "^" + std::to_string(e.exponent);
        case Expression::Kind::commutator:
            return "comm(" + to_string(e.children[0]) + ", " + to_string(e.children[1]) + ")";
    }
    return "";
}

Element evaluate(const Expression& e, const AlgebraDecl& decl) {
    const auto binary = [&](auto op) {
        return std::visit(
            [&](const auto& a) -> Element {
                using T = std::decay_t<decltype(a)>;
                return op(a, std::get<T>(evaluate(e.children[1], decl)));
            },
            evaluate(e.children[0], decl));
    };
    switch (e.kind) {
        case Expression::Kind::number: return constant_of(decl, e.value);
        case Expression::Kind::atom: return atom_value(e, decl);
        case Expression::Kind::add: return binary([](const auto& a, const auto& b) { return a + b; });
        case Expression::Kind::subtract: return binary([](const auto& a, const auto& b) { return a - b; });
        case Expression::Kind::multiply: return binary([](const auto& a, const auto& b) { return a * b; });
        case Expression::Kind::commutator: return binary([](const auto& a, const auto& b) { return a * b - b * a; });
        case Expression::Kind::negate:
            return std::visit([](const auto& a) -> Element { return -a; }, evaluate(e.children[0], decl));
        case Expression::Kind::power:
            return std::visit([&](const auto& a) -> Element { return pow(a, e.exponent); }, evaluate(e.children[0], decl));
    }
    throw std::logic_error("unhandled expression kind");
}

std::string format(const Element& e) {
    return std::visit([](const auto& a) { return format(a); }, e);
}

Element normal_form(const std::string& source, const AlgebraDecl& decl) {
    return evaluate(parse_expression(source, decl), decl);
}

}  // namespace capelli
