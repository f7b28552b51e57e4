#include "capelli/verify.hpp"

#include "capelli/dual_pair.hpp"
#include "capelli/geometry.hpp"
#include "capelli/linalg.hpp"
#include "capelli/operator_matrix.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

namespace capelli {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> gl_ids = {
    "gl.trace",     "gl.quadratic",  "gl.minor_kernel",    "gl.twisted_minor_kernel", "gl.minor_row_col",
    "gl.hom",       "gl.hom_small",  "gl.ad_invariance",   "gl.symbol_vanishing",
};

const std::vector<std::string> spo_ids = {
    "spo.hom_large", "spo.small_closure", "spo.f2",           "spo.pF_symmetric",    "spo.convolution",
    "spo.pairing",   "spo.pf_kernel",     "spo.ad_invariance", "spo.symbol_vanishing",
};

std::size_t uidx(int i) { return static_cast<std::size_t>(i); }

std::string entry_text(const std::string& name, std::size_t i, std::size_t j) {
    return name + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

/// Accumulates exact zero checks; the first nonzero difference becomes the
/// witness.
class Checker {
public:
    Checker(std::string id, const Parameters& params, Convention convention) : start_(Clock::now()) {
        report_.identity_id = std::move(id);
        report_.parameters = params;
        report_.convention = convention;
        report_.passed = true;
    }

    template <class Element>
    void expect_zero(const Element& diff, const std::function<std::string()>& where) {
        ++report_.checks;
        if (diff.is_zero() || !report_.passed) {
            if (!diff.is_zero()) ++extra_failures_;
            return;
        }
        report_.passed = false;
        report_.witness = format(diff);
        report_.detail = "first failure at " + where();
    }

    void set_detail(std::string d) {
        if (report_.passed) report_.detail = std::move(d);
    }

    IdentityReport finish() {
        if (extra_failures_ > 0) report_.detail += "; " + std::to_string(extra_failures_) + " further failures";
        report_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        return std::move(report_);
    }

private:
    IdentityReport report_;
    Clock::time_point start_;
    std::size_t extra_failures_ = 0;
};

OperatorMatrix<UEAElement> uea_generator_matrix(const LieAlgebraPtr& alg) {
    const auto n = uidx(alg->size());
    return OperatorMatrix<UEAElement>::generate(n, n, [&](std::size_t i, std::size_t j) {
        return UEAElement::entry(alg, static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    });
}

void require_pair(const Parameters& p, PairType pair, const std::string& id) {
    if (p.pair != pair) throw std::invalid_argument(id + " needs a " + to_string(pair) + " parameter set");
    if (p.n < 1 || p.k < 1) throw std::invalid_argument(id + ": sizes must be positive");
    if (pair == PairType::o_sp && p.n < 2) throw std::invalid_argument(id + ": N must be at least 2");
}

// sum_ab (L + shift I)_ab x_ib d_ja
WeylMatrix gl_pairing_lhs(const DualPairContext& ctx, const Rational& shift) {
    const auto n = uidx(ctx.large), k = uidx(ctx.small);
    const WeylMatrix left = add_identity(ctx.left_image, shift);
    return WeylMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
        WeylElement sum(ctx.shape);
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) sum += left(a, b) * ctx.x(i, b) * ctx.d(j, a);
        }
        return sum;
    });
}

// sum_ab L(F')_ab P_ib P*_aj
WeylMatrix spo_pairing_lhs(const DualPairContext& ctx) {
    const auto n = uidx(ctx.large), m = 2 * uidx(ctx.small);
    const auto& blocks = *ctx.blocks;
    return WeylMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
        WeylElement sum(ctx.shape);
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) sum += ctx.left_image(a, b) * blocks.p(i, b) * blocks.p_star(a, j);
        }
        return sum;
    });
}

WeylMatrix right_of(const DualPairContext& ctx, const OperatorMatrix<UEAElement>& m) {
    return map_entries(m, [&](const UEAElement& e) { return realize_right(ctx, e); });
}

Convention convention_of(const Parameters& p) { return p.normalized ? Convention::normalized : Convention::unnormalized; }

Parameters with_convention(Parameters p, bool normalized) {
    p.normalized = normalized;
    return p;
}

IdentityReport gl_trace(const Parameters& p) {
    const auto ctx = make_dual_pair(PairType::gl_gl, p.n, p.k, Convention::unnormalized);
    Checker c("gl.trace", with_convention(p, false), Convention::unnormalized);
    WeylElement euler(ctx.shape);
    for (int i = 1; i <= p.n; ++i) {
        for (int a = 1; a <= p.k; ++a) euler += WeylElement::x(ctx.shape, i, a) * WeylElement::d(ctx.shape, i, a);
    }
    c.expect_zero(trace(ctx.left_image) - trace(ctx.right_image), [] { return std::string("tr L - tr R"); });
    c.expect_zero(trace(ctx.left_image) - euler, [] { return std::string("tr L - sum x d"); });
    return c.finish();
}

IdentityReport gl_quadratic(const Parameters& p, const VerifyOptions& options) {
    const Convention conv = convention_of(p);
    const auto ctx = make_dual_pair(PairType::gl_gl, p.n, p.k, conv);
    Checker c("gl.quadratic", p, conv);
    const WeylMatrix lhs = gl_pairing_lhs(ctx, p.normalized ? -p.t : p.t);
    QuadraticPolynomial q = gl_transfer_quadratic(p.n, p.k, p.t, p.normalized);
    if (options.trust_calibration && p.normalized) {
        if (const auto solved = calibrate_constants("gl.normalized", p).quadratic()) q = *solved;
    }
    const auto coeffs = q.coefficients();
    const auto alg = ctx.large_algebra;
    const WeylMatrix rhs = right_of(ctx, matrix_poly_eval(uea_generator_matrix(alg), std::span<const Rational>(coeffs)));
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t j = 0; j < lhs.cols(); ++j) {
            c.expect_zero(lhs(i, j) - rhs(i, j), [&] { return entry_text("(i,j)=", i, j); });
        }
    }
    return c.finish();
}

IdentityReport gl_minor_kernel(const Parameters& p, bool twisted) {
    const Convention conv = twisted ? Convention::normalized : Convention::unnormalized;
    const auto ctx = make_dual_pair(PairType::gl_gl, p.n, p.k, conv);
    Checker c(twisted ? "gl.twisted_minor_kernel" : "gl.minor_kernel", with_convention(p, twisted), conv);
    const Rational shift = twisted ? -Rational(p.k, 2) : Rational(0);
    const auto seqs = increasing_sequences(p.n, p.k + 1);
    for (const auto& rows : seqs) {
        for (const auto& cols : seqs) {
            const UEAElement minor = quantum_minor(ctx.large_algebra, rows, cols, shift);
            c.expect_zero(realize_right(ctx, minor), [&] {
                std::string s = "I=";
                for (int r : rows) s += std::to_string(r);
                s += " J=";
                for (int q : cols) s += std::to_string(q);
                return s;
            });
        }
    }
    c.set_detail(std::to_string(seqs.size() * seqs.size()) + " minors of order " + std::to_string(p.k + 1));
    return c.finish();
}

IdentityReport gl_minor_row_col(const Parameters& p) {
    Checker c("gl.minor_row_col", p, Convention::none);
    const auto alg = LieAlgebra::gl(p.n);
    const Rational shift = p.normalized ? -Rational(p.k, 2) : Rational(0);
    std::size_t minors = 0;
    for (int m = 1; m <= std::min(3, p.n); ++m) {
        const auto seqs = increasing_sequences(p.n, m);
        for (const auto& rows : seqs) {
            for (const auto& cols : seqs) {
                ++minors;
                const UEAElement row = quantum_minor(alg, rows, cols, shift, MinorForm::row);
                const UEAElement col = quantum_minor(alg, rows, cols, shift, MinorForm::column);
                c.expect_zero(row - col, [&] { return "order " + std::to_string(m) + " minor #" + std::to_string(minors); });
            }
        }
    }
    c.set_detail(std::to_string(minors) + " minors of order <= 3, shift " + shift.str());
    return c.finish();
}

IdentityReport with_id(IdentityReport r, const std::string& id, const Parameters& p) {
    r.identity_id = id;
    r.parameters = p;
    return r;
}

GeneratorSet gl_generators(const Parameters& p, const VerifyOptions& options) {
    std::optional<QuadraticPolynomial> override;
    if (options.trust_calibration && p.normalized) {
        override = calibrate_constants("gl.normalized", p).quadratic();
    }
    return transfer_generators_gl(p.n, p.k, p.t, p.normalized, override);
}

IdentityReport gl_symbol_vanishing(const Parameters& p, const VerifyOptions& options) {
    const auto start = Clock::now();
    const GeneratorSet set = gl_generators(p, options);
    std::vector<CommutativePolynomial> symbols;
    for (const auto& e : set.elements) symbols.push_back(uea_symbol(e));
    const VanishingReport v = vanishing_check_gl(p.n, p.k, symbols, options.trials, options.seed);

    IdentityReport r;
    r.identity_id = "gl.symbol_vanishing";
    r.parameters = p;
    r.convention = Convention::none;
    r.checks = v.trials;
    r.passed = v.ok();
    r.detail = std::to_string(v.passed) + "/" + std::to_string(v.trials) + " trials vanish on M = A B^t, B^t A = 0; " +
               "negative control " + (v.negative_control_nonzero ? "nonzero" : "vanished") + "; " +
               std::to_string(symbols.size()) + " symbols";
    if (!r.passed) r.witness = v.failure_witness.empty() ? "negative control vanished" : v.failure_witness;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

IdentityReport spo_f2(const Parameters& p) {
    Checker c("spo.f2", p, Convention::none);
    const auto f = uea_generator_matrix(LieAlgebra::o(p.n));
    const auto f2 = f * f;
    for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t j = 0; j < f.cols(); ++j) {
            c.expect_zero(f2(i, j) - f2(j, i) - f(i, j) * Rational(p.n - 2), [&] { return entry_text("(i,j)=", i, j); });
        }
    }
    return c.finish();
}

IdentityReport spo_pf_symmetric(const Parameters& p) {
    Checker c("spo.pF_symmetric", p, Convention::none);
    const auto f = uea_generator_matrix(LieAlgebra::o(p.n));
    const std::vector<Rational> coeffs{Rational(0), -(Rational(p.n, 2) - 1), Rational(1)};
    const auto pf = matrix_poly_eval(f, std::span<const Rational>(coeffs));
    for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t j = i + 1; j < f.cols(); ++j) {
            c.expect_zero(pf(i, j) - pf(j, i), [&] { return entry_text("(i,j)=", i, j); });
        }
    }
    return c.finish();
}

IdentityReport spo_convolution(const Parameters& p) {
    const auto ctx = make_dual_pair(PairType::o_sp, p.n, p.k, Convention::normalized);
    Checker c("spo.convolution", p, Convention::normalized);
    const auto& b = *ctx.blocks;
    const WeylMatrix lhs = b.p_transpose * b.p_star_transpose * b.p_transpose;
    const WeylMatrix rhs = b.p * b.p_star * b.p + Rational(-p.n + 2 * p.k + 1) * b.p;
    for (std::size_t a = 0; a < lhs.rows(); ++a) {
        for (std::size_t i = 0; i < lhs.cols(); ++i) {
            c.expect_zero(lhs(a, i) - rhs(i, a), [&] { return entry_text("(a,i)=", a, i); });
        }
    }
    return c.finish();
}

IdentityReport spo_pairing(const Parameters& p) {
    const auto ctx = make_dual_pair(PairType::o_sp, p.n, p.k, Convention::normalized);
    Checker c("spo.pairing", p, Convention::normalized);
    const WeylMatrix lhs = spo_pairing_lhs(ctx);
    const auto coeffs = spo_transfer_quadratic(p.n, p.k).coefficients();
    const WeylMatrix rhs =
        right_of(ctx, matrix_poly_eval(uea_generator_matrix(ctx.large_algebra), std::span<const Rational>(coeffs)));
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t j = 0; j < lhs.cols(); ++j) {
            c.expect_zero(lhs(i, j) - rhs(i, j), [&] { return entry_text("(i,j)=", i, j); });
        }
    }
    return c.finish();
}

IdentityReport spo_pf_kernel(const Parameters& p) {
    const auto ctx = make_dual_pair(PairType::o_sp, p.n, p.k, Convention::normalized);
    Checker c("spo.pf_kernel", p, Convention::normalized);
    const auto seqs = increasing_sequences(p.n, 2 * p.k + 2);
    for (const auto& seq : seqs) {
        c.expect_zero(realize_right(ctx, quantum_pfaffian(ctx.large_algebra, seq)), [&] {
            std::string s = "I=";
            for (int i : seq) s += std::to_string(i);
            return s;
        });
    }
    c.set_detail(std::to_string(seqs.size()) + " pfaffians of order " + std::to_string(p.k + 1));
    return c.finish();
}

IdentityReport spo_symbol_vanishing(const Parameters& p) {
    const auto start = Clock::now();
    const GeneratorSet set = transfer_generators_spo(p.n, p.k);
    std::vector<CommutativePolynomial> symbols;
    for (const auto& e : set.elements) symbols.push_back(uea_symbol(e));
    const FormalVanishingReport v = vanishing_check_spo(p.n, p.k, symbols);

    IdentityReport r;
    r.identity_id = "spo.symbol_vanishing";
    r.parameters = p;
    r.convention = Convention::none;
    r.checks = v.certificates.size();
    r.passed = v.ok();
    std::size_t vacuous = 0, cofactors = 0;
    for (std::size_t i = 0; i < v.certificates.size(); ++i) {
        const auto& cert = v.certificates[i];
        vacuous += cert.vacuous ? 1 : 0;
        cofactors += cert.cofactors.size();
        if (!cert.certified && r.witness.empty()) {
            r.witness = cert.expansion;
            r.detail = "no certificate for " + set.names[i] + " = " + cert.symbol;
        }
    }
    if (r.passed) {
        r.detail = std::to_string(v.certificates.size()) + " symbols certified at M = X Y^t - Y X^t (" +
                   std::to_string(vacuous) + " vacuous, " + std::to_string(cofactors) + " constraint cofactors)";
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

}  // namespace

const std::vector<std::string>& identity_catalog() {
    static const std::vector<std::string> all = [] {
        std::vector<std::string> v = gl_ids;
        v.insert(v.end(), spo_ids.begin(), spo_ids.end());
        return v;
    }();
    return all;
}

std::vector<std::string> suite_identities(const std::string& suite, PairType pair) {
    if (suite == "gl-all") return pair == PairType::gl_gl ? gl_ids : std::vector<std::string>{};
    if (suite == "spo-all") return pair == PairType::o_sp ? spo_ids : std::vector<std::string>{};
    if (suite == "full") return pair == PairType::gl_gl ? gl_ids : spo_ids;
    throw std::invalid_argument("unknown suite '" + suite + "' (expected gl-all, spo-all or full)");
}

std::vector<Parameters> default_grid(const std::string& suite) {
    std::vector<Parameters> grid;
    if (suite == "gl-all" || suite == "full") {
        for (const auto& [n, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{4, 2}}) {
            for (const int t : {0, 1, -2}) grid.push_back(Parameters{PairType::gl_gl, n, k, Rational(t), false});
        }
    }
    if (suite == "spo-all" || suite == "full") {
        for (const auto& [n, k] : {std::pair{4, 1}, std::pair{6, 1}}) {
            grid.push_back(Parameters{PairType::o_sp, n, k, Rational(0), true});
        }
    }
    if (grid.empty()) suite_identities(suite, PairType::gl_gl);
    return grid;
}

IdentityReport run_identity(const std::string& id, const Parameters& params, const VerifyOptions& options) {
    const bool gl = std::find(gl_ids.begin(), gl_ids.end(), id) != gl_ids.end();
    const bool spo = std::find(spo_ids.begin(), spo_ids.end(), id) != spo_ids.end();
    if (!gl && !spo) throw std::invalid_argument("unknown identity id '" + id + "'");
    require_pair(params, gl ? PairType::gl_gl : PairType::o_sp, id);
    Parameters p = params;
    if (spo) {
        p.normalized = true;
        p.t = 0;
    }

    if (id == "gl.trace") return gl_trace(p);
    if (id == "gl.quadratic") return gl_quadratic(p, options);
    if (id == "gl.minor_kernel") return gl_minor_kernel(p, false);
    if (id == "gl.twisted_minor_kernel") return gl_minor_kernel(p, true);
    if (id == "gl.minor_row_col") return gl_minor_row_col(p);
    if (id == "gl.hom" || id == "spo.hom_large") {
        return with_id(check_right_homomorphism(make_dual_pair(p.pair, p.n, p.k, convention_of(p))), id, p);
    }
    if (id == "gl.hom_small" || id == "spo.small_closure") {
        return with_id(check_left_closure(make_dual_pair(p.pair, p.n, p.k, convention_of(p))), id, p);
    }
    if (id == "gl.ad_invariance") return with_id(check_ad_invariance(gl_generators(p, options)), id, p);
    if (id == "gl.symbol_vanishing") return gl_symbol_vanishing(p, options);
    if (id == "spo.f2") return spo_f2(p);
    if (id == "spo.pF_symmetric") return spo_pf_symmetric(p);
    if (id == "spo.convolution") return spo_convolution(p);
    if (id == "spo.pairing") return spo_pairing(p);
    if (id == "spo.pf_kernel") return spo_pf_kernel(p);
    if (id == "spo.ad_invariance") return with_id(check_ad_invariance(transfer_generators_spo(p.n, p.k)), id, p);
    return spo_symbol_vanishing(p);
}

std::optional<QuadraticPolynomial> CalibrationResult::quadratic() const {
    if (!ok() || solved.size() != 2) return std::nullopt;
    return QuadraticPolynomial{solved[0].second, solved[1].second};
}

nlohmann::json CalibrationResult::to_json() const {
    nlohmann::json j;
    j["templateId"] = template_id;
    j["parameters"] = parameters.to_json();
    nlohmann::json s = nlohmann::json::object(), st = nlohmann::json::object();
    for (const auto& [name, v] : solved) s[name] = v.str();
    for (const auto& [name, v] : stated) st[name] = v.str();
    j["solvedConstants"] = s;
    j["statedConstants"] = st;
    j["match"] = match;
    j["unique"] = unique;
    j["residualZero"] = residual_zero;
    j["equations"] = equations;
    j["status"] = ok() ? "pass" : "fail";
    j["detail"] = detail;
    return j;
}

std::string CalibrationResult::to_text() const {
    const auto list = [](const std::vector<std::pair<std::string, Rational>>& v) {
        std::string s;
        for (const auto& [name, c] : v) s += (s.empty() ? "" : " ") + name + "=" + c.str();
        return s.empty() ? std::string("-") : s;
    };
    std::string out = std::string(ok() ? "PASS " : "FAIL ") + "calibrate " + template_id + " [" + parameters.describe() +
                      "]\n";
    out += "  solved: " + list(solved) + "\n";
    out += "  stated: " + list(stated) + "\n";
    out += std::string("  match=") + (match ? "true" : "false") + " unique=" + (unique ? "true" : "false") +
           " residual_zero=" + (residual_zero ? "true" : "false") + " equations=" + std::to_string(equations);
    if (!detail.empty()) out += "\n  " + detail;
    return out;
}

CalibrationResult calibrate_constants(const std::string& template_id, const Parameters& params) {
    CalibrationResult result;
    result.template_id = template_id;
    Parameters p = params;

    std::optional<DualPairContext> ctx;
    std::optional<WeylMatrix> lhs;
    QuadraticPolynomial stated;
    if (template_id == "gl.unnormalized" || template_id == "gl.normalized") {
        require_pair(p, PairType::gl_gl, template_id);
        p.normalized = template_id == "gl.normalized";
        ctx.emplace(make_dual_pair(PairType::gl_gl, p.n, p.k, convention_of(p)));
        // The character enters as L(E') + t I unnormalized and L(E') - alpha I normalized.
        lhs.emplace(gl_pairing_lhs(*ctx, p.normalized ? -p.t : p.t));
        stated = gl_transfer_quadratic(p.n, p.k, p.t, p.normalized);
    } else if (template_id == "spo") {
        require_pair(p, PairType::o_sp, template_id);
        p.normalized = true;
        p.t = 0;
        ctx.emplace(make_dual_pair(PairType::o_sp, p.n, p.k, Convention::normalized));
        lhs.emplace(spo_pairing_lhs(*ctx));
        stated = spo_transfer_quadratic(p.n, p.k);
    } else {
        throw std::invalid_argument("unknown calibration template '" + template_id +
                                    "' (expected gl.unnormalized, gl.normalized or spo)");
    }
    result.parameters = p;
    result.stated = {{"c1", stated.linear}, {"c0", stated.constant}};

    const WeylMatrix& r = ctx->right_image;
    const WeylMatrix r2 = r * r;
    const std::size_t n = r.rows();

    // Unknowns (c1, c0): c1 R_ij + c0 d_ij = lhs_ij - (R^2)_ij, per monomial.
    std::vector<std::array<Rational, 3>> rows;
    const WeylMonomial unit{};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const WeylElement target = (*lhs)(i, j) - r2(i, j);
            std::map<WeylMonomial, std::array<Rational, 3>, WeylMonomialOrder> eq;
            for (const auto& [m, c] : r(i, j).terms()) eq[m][0] += c;
            if (i == j) eq[unit][1] += 1;
            for (const auto& [m, c] : target.terms()) eq[m][2] += c;
            for (const auto& [m, row] : eq) rows.push_back(row);
        }
    }
    result.equations = rows.size();
    RationalMatrix a(static_cast<Eigen::Index>(rows.size()), 2);
    RationalVector b(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t e = 0; e < rows.size(); ++e) {
        a(static_cast<Eigen::Index>(e), 0) = rows[e][0];
        a(static_cast<Eigen::Index>(e), 1) = rows[e][1];
        b(static_cast<Eigen::Index>(e)) = rows[e][2];
    }
    const auto solution = solve_linear_system(a, b);
    if (!solution) {
        result.detail = "template has no solution";
        return result;
    }
    result.unique = rank(a) == 2;
    if (!result.unique) result.detail = "solution is not unique";
    const Rational c1 = (*solution)(0), c0 = (*solution)(1);
    result.solved = {{"c1", c1}, {"c0", c0}};
    result.match = c1 == stated.linear && c0 == stated.constant;

    const auto alg = ctx->large_algebra;
    const std::vector<Rational> coeffs{c0, c1, Rational(1)};
    const WeylMatrix closed = right_of(*ctx, matrix_poly_eval(uea_generator_matrix(alg), std::span<const Rational>(coeffs)));
    result.residual_zero = is_zero(closed - *lhs);
    if (result.unique && !result.residual_zero) result.detail = "substituted constants leave a nonzero residual";
    if (result.ok() && !result.match) result.detail = "solver differs from the stated constants";
    return result;
}

nlohmann::json SuiteResult::to_json(bool with_timing) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["parameters"] = nlohmann::json::array();
    for (const auto& p : grid) j["parameters"].push_back(p.to_json());
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(r.to_json(with_timing));
    j["summary"] = {{"pass", summary.passed}, {"fail", summary.failed}};
    return j;
}

std::string SuiteResult::to_text(bool with_timing) const {
    std::string out = "suite " + suite + "\n";
    for (const auto& r : reports) out += r.to_text(with_timing) + "\n";
    out += "summary: " + std::to_string(summary.passed) + " pass, " + std::to_string(summary.failed) + " fail\n";
    return out;
}

SuiteResult run_suite(const std::string& suite, const std::vector<Parameters>& grid, const VerifyOptions& options) {
    suite_identities(suite, PairType::gl_gl);
    SuiteResult result;
    result.suite = suite;
    result.grid = grid;

    std::vector<std::pair<std::string, Parameters>> tasks;
    for (const auto& p : grid) {
        for (const auto& id : suite_identities(suite, p.pair)) tasks.emplace_back(id, p);
    }
    result.reports.resize(tasks.size());

    const auto run_task = [&](std::size_t i) {
        try {
            result.reports[i] = run_identity(tasks[i].first, tasks[i].second, options);
        } catch (const std::exception& e) {
            IdentityReport r;
            r.identity_id = tasks[i].first;
            r.parameters = tasks[i].second;
            r.passed = false;
            r.witness = "error";
            r.detail = e.what();
            result.reports[i] = std::move(r);
        }
    };

    const auto workers = static_cast<std::size_t>(std::max(1, options.jobs));
    if (workers == 1 || tasks.size() < 2) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < std::min(workers, tasks.size()); ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) run_task(i);
            });
        }
    }
    result.summary = summarize(result.reports);
    return result;
}

}  // namespace capelli
