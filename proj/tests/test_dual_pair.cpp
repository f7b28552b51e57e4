#include "capelli/capelli.hpp"
#include "capelli/dual_pair.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace capelli;

TEST_SUITE("dualpair") {

TEST_CASE("gl-gl realizations") {
    const auto c11 = make_dual_pair(PairType::gl_gl, 1, 1, Convention::unnormalized);
    const WeylShape s = c11.shape;
    const WeylElement euler = WeylElement::x(s, 1, 1) * WeylElement::d(s, 1, 1);
    CHECK(c11.right_image(0, 0) == euler);
    CHECK(realize_left(c11, 1, 1) == euler);
    CHECK(realize_right(c11, UEAElement::entry(c11.large_algebra, 1, 1)) == euler);
    CHECK(realize_right(c11, UEAElement::constant(c11.large_algebra, 1)) == WeylElement::constant(s, 1));

    const auto c21 = make_dual_pair(PairType::gl_gl, 2, 1, Convention::normalized);
    CHECK(format(c21.right_image(0, 0)) == "x[1,1]*d[1,1] + 1/2");
    CHECK(format(realize_left(c21, 1, 1)) == "x[1,1]*d[1,1] + x[2,1]*d[2,1] + 1");
    CHECK(c21.stable_range);
    CHECK_THROWS_AS(realize_left(c21, 2, 1), std::out_of_range);
}

TEST_CASE("left entries and traces") {
    const auto ctx = make_dual_pair(PairType::gl_gl, 3, 2, Convention::unnormalized);
    for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= 2; ++b) {
            WeylElement expected(ctx.shape);
            for (int i = 1; i <= 3; ++i) expected += WeylElement::x(ctx.shape, i, a) * WeylElement::d(ctx.shape, i, b);
            CHECK(realize_left(ctx, a, b) == expected);
        }
    }
    CHECK(trace(ctx.left_image) == trace(ctx.right_image));
}

TEST_CASE("normalized and unnormalized gl images differ by scalars") {
    const auto u = make_dual_pair(PairType::gl_gl, 4, 2, Convention::unnormalized);
    const auto n = make_dual_pair(PairType::gl_gl, 4, 2, Convention::normalized);
    CHECK(n.right_image == add_identity(u.right_image, Rational(1)));
    CHECK(n.left_image == add_identity(u.left_image, Rational(2)));
}

TEST_CASE("o-sp realization") {
    const auto ctx = make_dual_pair(PairType::o_sp, 2, 1, Convention::normalized);
    const WeylShape s = ctx.shape;
    const auto& r = ctx.right_image;
    CHECK(r(0, 1) == -r(1, 0));
    CHECK(r(0, 0).is_zero());
    CHECK(r(0, 1) == WeylElement::x(s, 1, 1) * WeylElement::d(s, 2, 1) - WeylElement::x(s, 2, 1) * WeylElement::d(s, 1, 1));
    CHECK(ctx.blocks->p_star_transpose == transpose(ctx.blocks->p_star));
    CHECK(ctx.blocks->j(1, 0) == WeylElement::constant(s, 1));
    CHECK(ctx.blocks->j(0, 1) == WeylElement::constant(s, -1));
    CHECK(ctx.small_algebra == nullptr);
    CHECK_THROWS(make_dual_pair(PairType::o_sp, 4, 1, Convention::unnormalized));
    CHECK_THROWS(make_dual_pair(PairType::o_sp, 1, 1, Convention::normalized));
    CHECK_THROWS(make_dual_pair(PairType::gl_gl, 0, 1, Convention::normalized));
}

TEST_CASE("realized entries have filtration degree two") {
    for (const auto& ctx : {make_dual_pair(PairType::gl_gl, 3, 2, Convention::normalized),
                            make_dual_pair(PairType::o_sp, 5, 2, Convention::normalized)}) {
        for (const auto& e : ctx.right_image.entries()) CHECK(e.degree() <= 2);
        for (const auto& e : ctx.left_image.entries()) CHECK(e.degree() <= 2);
    }
}

TEST_CASE("structure closure") {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 2; ++k) {
            for (const auto conv : {Convention::normalized, Convention::unnormalized}) {
                const auto report = check_structure_closure(make_dual_pair(PairType::gl_gl, n, k, conv));
                CHECK(report.passed);
                CHECK(report.witness.empty());
            }
        }
    }
    const auto ctx = make_dual_pair(PairType::gl_gl, 2, 1, Convention::unnormalized);
    const auto& alg = *ctx.large_algebra;
    CHECK(weyl_commutator(ctx.right_image(0, 1), ctx.right_image(1, 0)) == ctx.right_image(0, 0) - ctx.right_image(1, 1));
    CHECK(weyl_commutator(ctx.generator_images[0], ctx.generator_images[0]).is_zero());
    CHECK(alg.bracket(0, 0).empty());

    const auto spo = check_structure_closure(make_dual_pair(PairType::o_sp, 4, 1, Convention::normalized));
    CHECK(spo.passed);
    CHECK(spo.identity_id == "spo.structure_closure");
}

TEST_CASE("realize_right is multiplicative") {
    for (const auto& ctx : {make_dual_pair(PairType::gl_gl, 3, 1, Convention::normalized),
                            make_dual_pair(PairType::o_sp, 4, 1, Convention::normalized)}) {
        SeededLcg rng(31);
        for (int trial = 0; trial < 15; ++trial) {
            const UEAElement a = capelli::testing::random_uea(rng, ctx.large_algebra, 2, 3);
            const UEAElement b = capelli::testing::random_uea(rng, ctx.large_algebra, 1, 3);
            CHECK(realize_right(ctx, a * b) == realize_right(ctx, a) * realize_right(ctx, b));
        }
        CHECK_THROWS(realize_right(ctx, UEAElement::constant(LieAlgebra::gl(7), 1)));
    }
}

TEST_CASE("broken realization is reported with a witness") {
    auto ctx = make_dual_pair(PairType::gl_gl, 2, 1, Convention::unnormalized);
    ctx.generator_images[1] = ctx.generator_images[1] * Rational(2);
    const auto report = check_right_homomorphism(ctx);
    CHECK_FALSE(report.passed);
    CHECK_FALSE(report.witness.empty());
    CHECK(report.witness != "0");
}

}
