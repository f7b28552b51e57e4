#include "capelli/linalg.hpp"
#include "capelli/multi_index.hpp"
#include "capelli/polynomial.hpp"
#include "capelli/rational.hpp"
#include "support.hpp"

#include <doctest.h>

#include <gmpxx.h>

using namespace capelli;

TEST_SUITE("core_algebra") {

TEST_CASE("rationals are kept in lowest terms") {
    const Rational r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(r.denominator() == "2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational::parse("+4/6") == Rational(2, 3));
    CHECK(Rational::parse("-7").is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS(Rational::parse("1/x"));

    SeededLcg rng(3);
    for (int i = 0; i < 200; ++i) {
        const Rational a(rng.small_int(50), 1 + rng.small_int(20) + 20);
        const Rational b(rng.small_int(50), 1 + rng.small_int(20) + 20);
        const Rational s = a * b + a;
        mpz_class g;
        mpz_class num(s.numerator()), den(s.denominator());
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        CHECK(g == 1);
        CHECK(den > 0);
    }
}

TEST_CASE("binomials and factorials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
}

TEST_CASE("multi-indices drop zero exponents") {
    const MultiIndex a = MultiIndex::from_entries({{3, 2}, {1, 0}, {3, 1}, {0, 1}});
    CHECK(a.degree() == 4);
    CHECK(a.exponent(3) == 3);
    CHECK(a.exponent(1) == 0);
    CHECK(a.entries().size() == 2);
    const MultiIndex b = MultiIndex::variable(3);
    CHECK(b.divides(a));
    CHECK((a - b).exponent(3) == 2);
    CHECK_THROWS(b - a);
    CHECK(MultiIndex::lex_compare(MultiIndex::variable(0), MultiIndex::variable(1)) > 0);
}

TEST_CASE("solve_linear_system examples") {
    RationalMatrix m(1, 1);
    m(0, 0) = 2;
    RationalVector rhs(1);
    rhs(0) = 1;
    const auto x = solve_linear_system(m, rhs);
    REQUIRE(x);
    CHECK((*x)(0) == Rational(1, 2));

    RationalMatrix id = RationalMatrix::Identity(3, 3);
    RationalVector v(3);
    v << Rational(1), Rational(-2, 3), Rational(5);
    CHECK(*solve_linear_system(id, v) == v);

    RationalMatrix ones(2, 2);
    ones << Rational(1), Rational(1), Rational(1), Rational(1);
    RationalVector bad(2);
    bad << Rational(0), Rational(1);
    CHECK_FALSE(solve_linear_system(ones, bad));

    CHECK_THROWS_AS(solve_linear_system(ones, RationalVector(3)), std::invalid_argument);
}

TEST_CASE("solve_linear_system reproduces rhs on random systems") {
    SeededLcg rng(11);
    int solved = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index rows = 1 + (rng.small_int(2) + 2), cols = 1 + (rng.small_int(2) + 2);
        RationalMatrix m(rows, cols);
        RationalVector x0(cols);
        for (Eigen::Index j = 0; j < cols; ++j) {
            x0(j) = rng.small_int(6);
            for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.small_int(4);
        }
        const RationalVector rhs = m * x0;
        const auto x = solve_linear_system(m, rhs);
        REQUIRE(x);
        CHECK(RationalVector(m * *x) == rhs);
        ++solved;
    }
    CHECK(solved == 100);
}

TEST_CASE("span_membership examples") {
    RationalVector e1(3), e2(3), t(3);
    e1 << Rational(1), Rational(0), Rational(0);
    e2 << Rational(0), Rational(1), Rational(0);
    const auto c = span_membership({e1, e2}, e1);
    REQUIRE(c);
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == 0);

    const auto z = span_membership({e1, e2}, RationalVector::Constant(3, Rational(0)));
    REQUIRE(z);
    CHECK((*z)[0] == 0);
    CHECK((*z)[1] == 0);

    t << Rational(0), Rational(0), Rational(1);
    CHECK_FALSE(span_membership({e1, e2}, t));
    CHECK_THROWS(span_membership({e1, RationalVector(2)}, t));
}

TEST_CASE("nullspace_basis examples and properties") {
    CHECK(nullspace_basis(RationalMatrix::Constant(2, 2, Rational(0))).size() == 2);
    CHECK(nullspace_basis(RationalMatrix::Identity(3, 3)).empty());
    RationalMatrix row(1, 2);
    row << Rational(1), Rational(1);
    const auto k = nullspace_basis(row);
    REQUIRE(k.size() == 1);
    CHECK(k[0](0) == -k[0](1));

    SeededLcg rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        RationalMatrix m(3, 5);
        for (Eigen::Index i = 0; i < 3; ++i) {
            for (Eigen::Index j = 0; j < 5; ++j) m(i, j) = rng.small_int(2);
        }
        const auto basis = nullspace_basis(m);
        CHECK(static_cast<Eigen::Index>(basis.size()) == 5 - rank(m));
        for (const auto& v : basis) CHECK(RationalVector(m * v).isZero());
        if (!basis.empty()) {
            RationalMatrix stacked(5, static_cast<Eigen::Index>(basis.size()));
            for (std::size_t c = 0; c < basis.size(); ++c) stacked.col(static_cast<Eigen::Index>(c)) = basis[c];
            CHECK(rank(stacked) == static_cast<Eigen::Index>(basis.size()));
        }
    }
}

TEST_CASE("SpanBasis certificates reproduce the target") {
    using Vec = CommutativePolynomial::TermMap;
    const auto var = [](MultiIndex::Variable v) { return CommutativePolynomial::variable(v); };
    const CommutativePolynomial a = var(0) + var(1), b = var(1) - var(2), c = a + b * Rational(2);
    SpanBasis<Vec> span;
    CHECK(span.add(a.terms()));
    CHECK(span.add(b.terms()));
    CHECK_FALSE(span.add(c.terms()));
    CHECK(span.dimension() == 2);

    const CommutativePolynomial target = a * Rational(3) - b;
    const auto coeffs = span.express(target.terms());
    REQUIRE(coeffs);
    CommutativePolynomial rebuilt = a * (*coeffs)[0] + b * (*coeffs)[1] + c * (*coeffs)[2];
    CHECK(rebuilt == target);
    CHECK_FALSE(span.contains(var(3).terms()));
}

TEST_CASE("commutative polynomial printing") {
    const auto var = [](MultiIndex::Variable v) { return CommutativePolynomial::variable(v); };
    const VariableNamer name = [](MultiIndex::Variable v) { return std::string(1, static_cast<char>('a' + v)); };
    CHECK(format(CommutativePolynomial(), name) == "0");
    CHECK(format(var(0) * var(1) * Rational(3, 2) - var(2) + CommutativePolynomial::constant(1), name) ==
          "3/2*a*b - c + 1");
    CHECK(format(pow(var(1), 2) - var(0) * Rational(1, 2), name) == "b^2 - 1/2*a");
}

}
