#include "capelli/dual_pair.hpp"

#include "capelli/linalg.hpp"

#include <chrono>
#include <stdexcept>

namespace capelli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string pair_text(const LieAlgebra& alg, LieAlgebra::Generator a, LieAlgebra::Generator b) {
    const auto la = alg.label(a);
    const auto lb = alg.label(b);
    const std::string s(1, alg.atom());
    return "[" + s + "[" + std::to_string(la.first) + "," + std::to_string(la.second) + "], " + s + "[" +
           std::to_string(lb.first) + "," + std::to_string(lb.second) + "]]";
}

}  // namespace

Parameters DualPairContext::parameters() const {
    Parameters p;
    p.pair = pair;
    p.n = large;
    p.k = small;
    p.normalized = convention == Convention::normalized;
    return p;
}

DualPairContext make_dual_pair(PairType pair, int large, int small, Convention convention) {
    if (large < 1 || small < 1) throw std::invalid_argument("dual pair sizes must be positive");
    if (convention == Convention::none) throw std::invalid_argument("dual pair needs a normalization convention");
    const WeylShape shape{large, small};
    const auto n = static_cast<std::size_t>(large);
    const auto k = static_cast<std::size_t>(small);
    const auto idx = [](std::size_t i) { return static_cast<int>(i) + 1; };

    WeylMatrix x = WeylMatrix::generate(n, k, [&](std::size_t i, std::size_t a) { return WeylElement::x(shape, idx(i), idx(a)); });
    WeylMatrix d = WeylMatrix::generate(n, k, [&](std::size_t i, std::size_t a) { return WeylElement::d(shape, idx(i), idx(a)); });

    if (pair == PairType::gl_gl) {
        WeylMatrix right = x * transpose(d);
        WeylMatrix left = transpose(x) * d;
        if (convention == Convention::normalized) {
            right = add_identity(right, Rational(small, 2));
            left = add_identity(left, Rational(large, 2));
        }
        auto alg = LieAlgebra::gl(large);
        std::vector<WeylElement> images;
        for (std::size_t g = 0; g < alg->dimension(); ++g) {
            const auto [i, j] = alg->label(static_cast<LieAlgebra::Generator>(g));
            images.push_back(right(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
        }
        return DualPairContext{pair,   large, small, convention, large >= 2 * small, shape, alg, LieAlgebra::gl(small),
                               x,      d,     right, left,       std::nullopt,       std::move(images)};
    }

    if (large < 2) throw std::invalid_argument("o-sp pair requires N >= 2");
    if (convention != Convention::normalized) {
        throw std::invalid_argument("the o-sp pair is only realized in normalized form");
    }
    const WeylElement zero(shape);
    WeylMatrix p = WeylMatrix::generate(n, 2 * k, [&](std::size_t i, std::size_t a) { return a < k ? x(i, a) : d(i, a - k); });
    WeylMatrix p_star = WeylMatrix::generate(2 * k, n, [&](std::size_t a, std::size_t i) {
        return a < k ? d(i, a) : -x(i, a - k);
    });
    WeylMatrix j = WeylMatrix::generate(2 * k, 2 * k, [&](std::size_t a, std::size_t b) {
        if (a >= k && b + k == a) return WeylElement::constant(shape, 1);
        if (a < k && b == a + k) return WeylElement::constant(shape, -1);
        return zero;
    });
    SymplecticBlocks blocks{p, transpose(p), p_star, transpose(p_star), j};

    WeylMatrix right = add_identity(blocks.p * blocks.p_star, Rational(small));
    WeylMatrix left = add_identity(blocks.p_transpose * blocks.p_star_transpose, Rational(large, 2));

    auto alg = LieAlgebra::o(large);
    std::vector<WeylElement> images;
    for (std::size_t g = 0; g < alg->dimension(); ++g) {
        const auto [a, b] = alg->label(static_cast<LieAlgebra::Generator>(g));
        images.push_back(right(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)));
    }
    return DualPairContext{pair, large, small, convention, large >= 4 * small, shape, alg, nullptr,
                           x,    d,     right, left,       std::move(blocks),  std::move(images)};
}

WeylElement realize_right(const DualPairContext& ctx, const UEAElement& a) {
    if (!(*a.algebra() == *ctx.large_algebra)) {
        throw std::invalid_argument("realize_right: element of " + a.algebra()->name() + " in a context for " +
                                    ctx.large_algebra->name());
    }
    WeylElement out(ctx.shape);
    for (const auto& [word, c] : a.terms()) {
        WeylElement term = WeylElement::constant(ctx.shape, c);
        for (const auto g : word) term = term * ctx.generator_images[g];
        out += term;
    }
    return out;
}

WeylElement realize_left(const DualPairContext& ctx, int a, int b) {
    const auto dim = static_cast<int>(ctx.left_image.rows());
    if (a < 1 || b < 1 || a > dim || b > dim) {
        throw std::out_of_range("realize_left: index (" + std::to_string(a) + "," + std::to_string(b) +
                                ") outside 1.." + std::to_string(dim));
    }
    return ctx.left_image(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
}

IdentityReport check_right_homomorphism(const DualPairContext& ctx) {
    const auto start = Clock::now();
    IdentityReport report;
    report.identity_id = ctx.pair == PairType::gl_gl ? "gl.hom" : "spo.hom_large";
    report.parameters = ctx.parameters();
    report.convention = ctx.convention;
    report.passed = true;

    const LieAlgebra& alg = *ctx.large_algebra;
    const auto dim = static_cast<LieAlgebra::Generator>(alg.dimension());
    for (LieAlgebra::Generator a = 0; a < dim; ++a) {
        for (LieAlgebra::Generator b = 0; b < dim; ++b) {
            WeylElement rhs(ctx.shape);
            for (const auto& [g, c] : alg.bracket(a, b)) rhs += ctx.generator_images[g] * c;
            const WeylElement diff = weyl_commutator(ctx.generator_images[a], ctx.generator_images[b]) - rhs;
            ++report.checks;
            if (!diff.is_zero() && report.passed) {
                report.passed = false;
                report.witness = format(diff);
                report.detail = "first failure at " + pair_text(alg, a, b);
            }
        }
    }
    report.elapsed_ms = elapsed_ms(start);
    return report;
}

IdentityReport check_left_closure(const DualPairContext& ctx) {
    const auto start = Clock::now();
    IdentityReport report;
    report.identity_id = ctx.pair == PairType::gl_gl ? "gl.hom_small" : "spo.small_closure";
    report.parameters = ctx.parameters();
    report.convention = ctx.convention;
    report.passed = true;

    const std::size_t m = ctx.left_image.rows();
    const auto fail = [&](const WeylElement& diff, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        if (!report.passed) return;
        report.passed = false;
        report.witness = format(diff);
        report.detail = "first failure at [L(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "), L(" +
                        std::to_string(c + 1) + "," + std::to_string(d + 1) + ")]";
    };

    if (ctx.pair == PairType::gl_gl) {
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                for (std::size_t c = 0; c < m; ++c) {
                    for (std::size_t d = 0; d < m; ++d) {
                        WeylElement rhs(ctx.shape);
                        if (b == c) rhs += ctx.left_image(a, d);
                        if (d == a) rhs -= ctx.left_image(c, b);
                        const WeylElement diff = weyl_commutator(ctx.left_image(a, b), ctx.left_image(c, d)) - rhs;
                        ++report.checks;
                        if (!diff.is_zero()) fail(diff, a, b, c, d);
                    }
                }
            }
        }
    } else {
        SpanBasis<WeylElement::TermMap> span;
        span.add(WeylElement::constant(ctx.shape, 1).terms());
        for (const auto& e : ctx.left_image.entries()) span.add(e.terms());
        std::size_t nonzero_coefficients = 0;
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                for (std::size_t c = 0; c < m; ++c) {
                    for (std::size_t d = 0; d < m; ++d) {
                        const WeylElement comm = weyl_commutator(ctx.left_image(a, b), ctx.left_image(c, d));
                        ++report.checks;
                        const auto coeffs = span.express(comm.terms());
                        if (!coeffs) {
                            fail(comm, a, b, c, d);
                            continue;
                        }
                        for (const auto& v : *coeffs) nonzero_coefficients += v.is_zero() ? 0 : 1;
                    }
                }
            }
        }
        if (report.passed) report.detail = "span dimension " + std::to_string(span.dimension()) + ", " +
                        std::to_string(nonzero_coefficients) + " nonzero certificate coefficients";
    }
    report.elapsed_ms = elapsed_ms(start);
    return report;
}

IdentityReport check_structure_closure(const DualPairContext& ctx) {
    IdentityReport large = check_right_homomorphism(ctx);
    const IdentityReport small = check_left_closure(ctx);
    large.identity_id = to_string(ctx.pair) + ".structure_closure";
    large.checks += small.checks;
    large.elapsed_ms += small.elapsed_ms;
    if (large.passed && !small.passed) {
        large.passed = false;
        large.witness = small.witness;
        large.detail = small.detail;
    } else if (large.passed) {
        large.detail = small.detail;
    }
    return large;
}

}  // namespace capelli
