#include "capelli/capelli.hpp"
#include "capelli/expression.hpp"
#include "capelli/geometry.hpp"
#include "capelli/verify.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

using namespace capelli;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (passed) detail << "first failure: " << what << "; ";
        passed = false;
    }
};

int failures = 0;

void criterion(int number, const std::string& name, std::optional<double> limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s && s >= *limit_s) out.require(false, "time limit exceeded");
    std::string detail = out.detail.str();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", s);
    if (limit_s) std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", s, *limit_s);
    std::printf("[%s] %2d %s (%s%s)\n", out.passed ? "PASS" : "FAIL", number, name.c_str(), detail.c_str(), timing);
    std::fflush(stdout);
    if (!out.passed) ++failures;
}

Parameters gl(int n, int k, int t = 0, bool normalized = false) { return {PairType::gl_gl, n, k, Rational(t), normalized}; }
Parameters spo(int big_n, int k) { return {PairType::o_sp, big_n, k, Rational(0), true}; }

const std::vector<std::pair<int, int>> gl_sizes{{2, 1}, {3, 1}, {4, 2}};

void identity(Outcome& out, std::size_t& checks, const std::string& id, const Parameters& p) {
    const IdentityReport r = run_identity(id, p);
    checks += r.checks;
    out.require(r.passed, id + " " + p.describe() + " " + r.detail + " " + r.witness);
}

std::vector<CommutativePolynomial> symbols_of(const GeneratorSet& set) {
    std::vector<CommutativePolynomial> out;
    for (const auto& e : set.elements) out.push_back(uea_symbol(e));
    return out;
}

std::string cli(const std::string& args) { return std::string("\"") + CAPELLI_CLI_PATH + "\" " + args; }

}  // namespace

int main() {
    criterion(1, "Weyl oracle equivalence", 60.0, [](Outcome& out) {
        SeededLcg rng(default_seed);
        std::size_t applications = 0;
        const std::vector<WeylShape> shapes{{1, 1}, {2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {2, 3}, {6, 1}};
        for (int trial = 0; trial < 200; ++trial) {
            const WeylShape s = shapes[static_cast<std::size_t>(trial) % shapes.size()];
            const WeylElement a = capelli::testing::random_weyl(rng, s, 4, 4);
            const WeylElement b = capelli::testing::random_weyl(rng, s, 4, 4);
            const WeylElement ab = a * b;
            for (const auto& p : capelli::testing::x_monomials(s, capelli::testing::d_degree(a) + capelli::testing::d_degree(b))) {
                ++applications;
                out.require(weyl_apply(ab, p) == weyl_apply(a, weyl_apply(b, p)), "pair " + std::to_string(trial));
            }
        }
        out.detail << "200 pairs, " << applications << " monomials; ";
    });

    criterion(2, "Homomorphism suite", 60.0, [](Outcome& out) {
        std::size_t checks = 0;
        for (const auto& [n, k] : gl_sizes) {
            identity(out, checks, "gl.hom", gl(n, k));
            identity(out, checks, "gl.hom", gl(n, k, 0, true));
        }
        for (const auto& [big_n, k] : {std::pair{4, 1}, std::pair{6, 1}}) identity(out, checks, "spo.hom_large", spo(big_n, k));
        out.detail << checks << " brackets; ";
    });

    criterion(3, "gl.trace and gl.quadratic", 120.0, [](Outcome& out) {
        std::size_t checks = 0;
        for (const auto& [n, k] : gl_sizes) {
            for (const int t : {0, 1, -2}) {
                identity(out, checks, "gl.trace", gl(n, k, t));
                identity(out, checks, "gl.quadratic", gl(n, k, t));
            }
        }
        out.detail << checks << " entries; ";
    });

    criterion(4, "gl.minor_kernel and gl.twisted_minor_kernel", 300.0, [](Outcome& out) {
        std::size_t checks = 0;
        for (const auto& [n, k] : gl_sizes) {
            identity(out, checks, "gl.minor_kernel", gl(n, k));
            identity(out, checks, "gl.twisted_minor_kernel", gl(n, k, 0, true));
        }
        out.detail << checks << " minors; ";
    });

    criterion(5, "gl.minor_row_col in U(gl_4)", std::nullopt, [](Outcome& out) {
        const auto gl4 = LieAlgebra::gl(4);
        std::size_t count = 0;
        for (int order = 1; order <= 3; ++order) {
            for (const auto& rows : increasing_sequences(4, order)) {
                for (const auto& cols : increasing_sequences(4, order)) {
                    ++count;
                    out.require(quantum_minor(gl4, rows, cols, Rational(0), MinorForm::row) ==
                                    quantum_minor(gl4, rows, cols, Rational(0), MinorForm::column),
                                "order " + std::to_string(order));
                }
            }
        }
        out.detail << count << " minors; ";
    });

    criterion(6, "spo.f2 and spo.pF_symmetric", 60.0, [](Outcome& out) {
        std::size_t checks = 0;
        for (const int big_n : {4, 6, 8}) {
            identity(out, checks, "spo.f2", spo(big_n, 1));
            identity(out, checks, "spo.pF_symmetric", spo(big_n, 1));
        }
        out.detail << checks << " entries; ";
    });

    criterion(7, "spo.convolution and spo.pairing", 300.0, [](Outcome& out) {
        std::size_t checks = 0;
        for (const auto& [big_n, k] : {std::pair{4, 1}, std::pair{6, 1}, std::pair{8, 2}}) {
            identity(out, checks, "spo.convolution", spo(big_n, k));
            identity(out, checks, "spo.pairing", spo(big_n, k));
        }
        out.detail << checks << " entries; ";
    });

    criterion(8, "spo.pf_kernel", std::nullopt, [](Outcome& out) {
        std::size_t checks = 0;
        for (const auto& [big_n, k] : {std::pair{4, 1}, std::pair{5, 1}, std::pair{6, 1}}) identity(out, checks, "spo.pf_kernel", spo(big_n, k));
        out.detail << checks << " pfaffians; ";
    });

    criterion(9, "ad-invariance", std::nullopt, [](Outcome& out) {
        std::size_t checks = 0;
        for (const auto& [n, k] : {std::pair{3, 1}, std::pair{4, 2}}) {
            identity(out, checks, "gl.ad_invariance", gl(n, k));
            identity(out, checks, "gl.ad_invariance", gl(n, k, 1, true));
        }
        for (const auto& [big_n, k] : {std::pair{4, 1}, std::pair{6, 1}}) identity(out, checks, "spo.ad_invariance", spo(big_n, k));
        out.detail << checks << " certificates; ";
    });

    criterion(10, "Calibration", std::nullopt, [](Outcome& out) {
        for (const auto& p : {gl(3, 1, 0), gl(4, 2, 1), gl(2, 1, -2)}) {
            const auto r = calibrate_constants("gl.unnormalized", p);
            const bool recovered = r.ok() && r.solved.size() == 2 && r.solved[0].second == Rational(p.k - p.n) + p.t &&
                                   r.solved[1].second == 0;
            out.require(recovered, "gl.unnormalized " + p.describe() + " " + r.detail);
        }
        for (const auto& p : {spo(4, 1), spo(6, 1), spo(8, 2)}) {
            const auto r = calibrate_constants("spo", p);
            const Rational r2 = Rational(p.n, 2) - p.k - 1;
            const bool recovered = r.ok() && r.solved.size() == 2 && r.solved[0].second == -(Rational(p.k) + r2) &&
                                   r.solved[1].second == Rational(p.k) * r2;
            out.require(recovered, "spo " + p.describe() + " " + r.detail);
        }
        for (const int alpha : {0, 1}) {
            const auto r = calibrate_constants("gl.normalized", gl(4, 1, alpha, true));
            out.require(r.ok(), "gl.normalized " + r.detail);
            out.detail << "normalized alpha=" << alpha << " match=" << (r.match ? "true" : "false") << "; ";
        }
    });

    criterion(11, "Symbol vanishing", std::nullopt, [](Outcome& out) {
        for (const auto& [n, k] : gl_sizes) {
            const auto report = vanishing_check_gl(n, k, symbols_of(transfer_generators_gl(n, k, 0, false)), 100, default_seed);
            out.require(report.passed == 100 && report.trials == 100, "gl n=" + std::to_string(n) + " " + report.failure_witness);
            out.require(report.negative_control_nonzero, "negative control vanished at n=" + std::to_string(n));
        }
        std::size_t certificates = 0;
        for (const auto& [big_n, k] : {std::pair{4, 1}, std::pair{6, 1}}) {
            const auto report = vanishing_check_spo(big_n, k, symbols_of(transfer_generators_spo(big_n, k)));
            certificates += report.certificates.size();
            out.require(report.ok(), "spo N=" + std::to_string(big_n));
        }
        out.detail << "gl 300/300 trials, " << certificates << " spo certificates; ";
    });

    criterion(12, "Orbit combinatorics", std::nullopt, [](Outcome& out) {
        for (int k = 1; 2 * k <= 8; ++k) {
            for (int n = 2 * k; n <= 8; ++n) {
                std::vector<int> expected(static_cast<std::size_t>(k), 2);
                expected.resize(static_cast<std::size_t>(n - k), 1);
                out.require(kp_lift(Partition::zero(OrbitType::gl, k), n) == Partition(expected, OrbitType::gl), "gl lift");
            }
        }
        for (int k = 1; 4 * k <= 16; ++k) {
            for (int big_n = 4 * k; big_n <= 16; ++big_n) {
                std::vector<int> expected(static_cast<std::size_t>(2 * k), 2);
                expected.resize(static_cast<std::size_t>(big_n - 2 * k), 1);
                out.require(kp_lift(Partition::zero(OrbitType::sp, 2 * k), big_n) == Partition(expected, OrbitType::o), "o lift");
            }
        }
        for (int n = 2; n <= 8; ++n) {
            for (int r = 1; 2 * r <= n; ++r) {
                if (r % 2 == 1) {
                    bool rejected = false;
                    try {
                        small_orbit(OrbitType::o, n, r);
                    } catch (const std::invalid_argument& e) {
                        rejected = std::string(e.what()).find("parity") != std::string::npos;
                    }
                    out.require(rejected, "odd rank accepted in o_" + std::to_string(n));
                }
            }
            for (const OrbitType type : {OrbitType::gl, OrbitType::sp, OrbitType::o}) {
                if (type == OrbitType::sp && n % 2 == 1) continue;
                const int step = type == OrbitType::o ? 2 : 1;
                for (int r = step; 2 * (r + step) <= n; r += step) {
                    const auto lower = small_orbit(type, n, r), upper = small_orbit(type, n, r + step);
                    out.require(closure_contains(upper, lower) && !closure_contains(lower, upper),
                                "chain " + to_string(type) + " n=" + std::to_string(n));
                }
            }
        }
    });

    criterion(13, "CLI round trip, exit codes and reproducible JSON", std::nullopt, [](Outcome& out) {
        SeededLcg rng(default_seed);
        const WeylShape s{2, 2};
        for (int trial = 0; trial < 50; ++trial) {
            const WeylElement a = capelli::testing::random_weyl(rng, s, 4, 5);
            const Element back = normal_form(format(a), AlgebraDecl::weyl(s));
            out.require(std::get<WeylElement>(back) == a && format(back) == format(a), "weyl " + format(a));
        }
        for (const auto& alg : {LieAlgebra::gl(3), LieAlgebra::o(4)}) {
            for (int trial = 0; trial < 25; ++trial) {
                const UEAElement a = capelli::testing::random_uea(rng, alg, 3, 4);
                const Element back = normal_form(format(a), AlgebraDecl::enveloping(alg));
                out.require(std::get<UEAElement>(back) == a && format(back) == format(a), "uea " + format(a));
            }
        }
        using capelli::testing::run_command;
        out.require(run_command(cli("verify --pair gl --n 2 --k 1 --t 0 --suite gl-all >/dev/null")).exit_code == 0, "exit 0");
        out.require(run_command(cli("verify --identity gl.quadratic --pair gl --n 4 --k 1 --t 1 --normalized >/dev/null")).exit_code == 1,
                    "exit 1");
        out.require(run_command(cli("verify --pair gl --n 2 --k 1 --bogus 2>/dev/null")).exit_code == 2, "exit 2 usage");
        out.require(run_command(cli("nf --algebra weyl:1x1 --expr \"x[1,1\" 2>/dev/null")).exit_code == 2, "exit 2 parse");
        const std::string args = "--format json verify --suite full";
        const auto a = run_command(cli("--seed 12345 " + args));
        const auto b = run_command(cli("--seed 12345 --jobs 4 " + args));
        const auto c = run_command("CAPELLI_SEED=12345 " + cli(args));
        out.require(a.exit_code == 0 && !a.output.empty() && a.output == b.output && a.output == c.output, "byte-identical JSON");
        out.detail << "100 elements, exit codes 0/1/2, " << a.output.size() << " JSON bytes identical x3; ";
    });

    std::printf("%d of 13 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
