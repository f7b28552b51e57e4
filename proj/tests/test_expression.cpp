#include "capelli/expression.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace capelli;

namespace {

std::string nf(const std::string& src, const std::string& algebra) {
    return format(normal_form(src, AlgebraDecl::parse(algebra)));
}

ParseError parse_error(const std::string& src, const AlgebraDecl& decl) {
    try {
        parse_expression(src, decl);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for ", src);
    return ParseError("", 0, 0);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("normal form examples") {
    CHECK(nf("d[1,1]*x[1,1]", "weyl:1x1") == "x[1,1]*d[1,1] + 1");
    CHECK(nf("comm(E[1,2],E[2,1])", "gl:2") == "E[1,1] - E[2,2]");
    CHECK(nf("x[1,1] - x[1,1]", "weyl:1x1") == "0");
    CHECK(nf("1", "weyl:2x2") == "1");
    CHECK(nf("(x[1,1]*d[1,1])^2", "weyl:1x1") == "x[1,1]^2*d[1,1]^2 + x[1,1]*d[1,1]");
    CHECK(nf("-3/2 * F[2,1]", "o:3") == "3/2*F[1,2]");
    CHECK(nf("F[2,2] + 2^3", "o:3") == "8");
    CHECK(nf("  comm( d[1,1] ,\n x[1,1]^3 )", "weyl:1x1") == "3*x[1,1]^2");
}

TEST_CASE("pair-bound atoms") {
    const auto ctx = std::make_shared<const DualPairContext>(make_dual_pair(PairType::gl_gl, 2, 1, Convention::unnormalized));
    const AlgebraDecl decl = AlgebraDecl::realized(ctx);
    CHECK(format(normal_form("E[1,2]", decl)) == "x[1,1]*d[2,1]");
    CHECK(format(normal_form("Ep[1,1] - E[1,1] - E[2,2]", decl)) == "0");
    CHECK_THROWS_AS(parse_expression("Fp[1,1]", decl), ParseError);

    const auto spo = std::make_shared<const DualPairContext>(make_dual_pair(PairType::o_sp, 4, 1, Convention::normalized));
    const AlgebraDecl sdecl = AlgebraDecl::realized(spo);
    CHECK(format(normal_form("F[1,2] + F[2,1]", sdecl)) == "0");
    CHECK_NOTHROW(parse_expression("Fp[2,2]", sdecl));
    CHECK_THROWS_AS(parse_expression("Fp[3,1]", sdecl), ParseError);
}

TEST_CASE("errors carry positions") {
    const AlgebraDecl weyl = AlgebraDecl::parse("weyl:2x1");
    const auto range = parse_error("x[3,1]", weyl);
    CHECK(std::string(range.what()).find("index out of range") != std::string::npos);
    CHECK(range.line() == 1);
    CHECK(range.column() == 3);

    const auto atom = parse_error("x[1,1] +\n  E[1,1]", weyl);
    CHECK(atom.line() == 2);
    CHECK(atom.column() == 3);
    CHECK(std::string(atom.what()).find("not in the declared algebra") != std::string::npos);

    CHECK(parse_error("x[1,1] $", weyl).column() == 8);
    CHECK(parse_error("x[1,1] +", weyl).column() == 9);
    CHECK(parse_error("(x[1,1]", weyl).column() == 8);
    CHECK_THROWS_AS(parse_expression("", weyl), ParseError);
    CHECK_THROWS_AS(parse_expression("x[0,1]", weyl), ParseError);
    CHECK_THROWS_AS(parse_expression("x[1,1]^-1", weyl), ParseError);
    CHECK_THROWS_AS(parse_expression("1/0", weyl), ParseError);
    CHECK_THROWS_AS(parse_expression("comm(x[1,1])", weyl), ParseError);
    CHECK_THROWS_AS(AlgebraDecl::parse("sp:4"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraDecl::parse("weyl:0x1"), std::invalid_argument);
}

TEST_CASE("expression trees print back to equal trees") {
    const AlgebraDecl decl = AlgebraDecl::parse("weyl:2x2");
    for (const std::string src : {"x[1,1]*(d[1,2] - 3/4)^2", "-(x[1,1] + x[2,2])*d[1,1]", "comm(x[1,1], d[1,1]*x[1,1]) - 2*-x[2,1]",
                                  "1 - (2 - 3)", "((x[1,2]))^2^3", "x[1,1]*(d[2,2]*x[1,2])", "-2^2"}) {
        const Expression e = parse_expression(src, decl);
        INFO(src, " -> ", to_string(e));
        CHECK(parse_expression(to_string(e), decl) == e);
    }
}

TEST_CASE("format, parse and evaluate is a fixed point on random elements") {
    SeededLcg rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const WeylShape s{2, 2};
        const WeylElement a = capelli::testing::random_weyl(rng, s, 4, 5);
        const std::string text = format(a);
        const Element back = normal_form(text, AlgebraDecl::weyl(s));
        CHECK(std::get<WeylElement>(back) == a);
        CHECK(format(back) == text);
    }
    for (const auto& alg : {LieAlgebra::gl(3), LieAlgebra::o(4)}) {
        for (int trial = 0; trial < 25; ++trial) {
            const UEAElement a = capelli::testing::random_uea(rng, alg, 3, 4);
            const std::string text = format(a);
            const Element back = normal_form(text, AlgebraDecl::enveloping(alg));
            CHECK(std::get<UEAElement>(back) == a);
            CHECK(format(back) == text);
        }
    }
}

}
