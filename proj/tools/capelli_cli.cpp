#include "capelli/capelli.hpp"
#include "capelli/dual_pair.hpp"
#include "capelli/expression.hpp"
#include "capelli/geometry.hpp"
#include "capelli/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <regex>
#include <string>

using namespace capelli;
using nlohmann::json;

namespace {

struct Globals {
    std::string format = "text";
    std::uint64_t seed = default_seed;
    int jobs = 1;
    int trials = 100;
    bool timing = false;
    bool trust_calibration = false;

    bool json_output() const { return format == "json"; }
    VerifyOptions options() const { return {seed, trials, jobs, trust_calibration}; }
};

struct PairArgs {
    std::string pair;
    int n = 0;
    int big_n = 0;
    int k = 0;
    std::string t = "0";
    bool normalized = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--pair", pair, "Dual pair: gl or spo")->check(CLI::IsMember({"gl", "spo"}));
        cmd->add_option("--n", n, "Size n of gl_n");
        cmd->add_option("--N", big_n, "Size N of o_N");
        cmd->add_option("--k", k, "Size k of the small member");
        cmd->add_option("--t", t, "Character value t (alpha with --normalized)");
        cmd->add_flag("--normalized", normalized, "Use the normalized realization");
    }

    bool has_sizes() const { return k > 0 && (pair == "gl" ? n > 0 : big_n > 0); }

    Parameters parameters() const {
        if (pair.empty()) throw std::invalid_argument("--pair is required");
        if (!has_sizes()) {
            throw std::invalid_argument(pair == "gl" ? "--n and --k are required for --pair gl"
                                                     : "--N and --k are required for --pair spo");
        }
        if (pair == "gl") return Parameters{PairType::gl_gl, n, k, Rational::parse(t), normalized};
        return Parameters{PairType::o_sp, big_n, k, Rational(0), true};
    }
};

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.json_output()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    }
}

int run_verify(const Globals& g, const PairArgs& args, std::string suite, const std::string& identity) {
    const VerifyOptions options = g.options();
    if (!identity.empty()) {
        const Parameters p = args.parameters();
        SuiteResult result;
        result.suite = identity;
        result.grid = {p};
        result.reports = {run_identity(identity, p, options)};
        result.summary = summarize(result.reports);
        emit(g, result.to_json(g.timing), result.to_text(g.timing));
        return result.summary.ok() ? 0 : 1;
    }
    if (suite.empty()) {
        if (args.pair.empty()) throw std::invalid_argument("verify needs --pair or --suite");
        suite = args.pair == "gl" ? "gl-all" : "spo-all";
    }
    std::vector<Parameters> grid;
    if (!args.pair.empty() && args.has_sizes()) {
        grid.push_back(args.parameters());
        if (suite_identities(suite, grid.front().pair).empty()) {
            throw std::invalid_argument("suite " + suite + " has no identities for --pair " + args.pair);
        }
    } else if (!args.pair.empty()) {
        args.parameters();
    } else {
        grid = default_grid(suite);
    }
    const SuiteResult result = run_suite(suite, grid, options);
    emit(g, result.to_json(g.timing), result.to_text(g.timing));
    return result.summary.ok() ? 0 : 1;
}

int run_nf(const Globals& g, const std::string& algebra, const std::string& expr, const PairArgs& args) {
    AlgebraDecl decl = AlgebraDecl::parse(algebra);
    if (!args.pair.empty()) {
        if (decl.kind != AlgebraDecl::Kind::weyl) throw std::invalid_argument("--pair needs a weyl algebra");
        const PairType pair = args.pair == "gl" ? PairType::gl_gl : PairType::o_sp;
        const Convention conv =
            pair == PairType::o_sp || args.normalized ? Convention::normalized : Convention::unnormalized;
        decl = AlgebraDecl::realized(std::make_shared<const DualPairContext>(
            make_dual_pair(pair, decl.shape.rows, decl.shape.cols, conv)));
    }
    const std::string nf = format(normal_form(expr, decl));
    emit(g, json{{"algebra", decl.describe()}, {"expr", expr}, {"normalForm", nf}}, nf);
    return 0;
}

int run_generators(const Globals& g, const PairArgs& args) {
    const Parameters p = args.parameters();
    GeneratorSet set;
    if (p.pair == PairType::gl_gl) {
        std::optional<QuadraticPolynomial> override;
        if (g.trust_calibration && p.normalized) override = calibrate_constants("gl.normalized", p).quadratic();
        set = transfer_generators_gl(p.n, p.k, p.t, p.normalized, override);
    } else {
        set = transfer_generators_spo(p.n, p.k);
    }
    if (!set.stable_range) std::cerr << "warning: " << p.describe() << " is outside the stable range\n";

    json j{{"label", set.label}, {"parameters", p.to_json()}, {"stableRange", set.stable_range}};
    j["generators"] = json::array();
    std::string text = set.label + " [" + p.describe() + "]: " + std::to_string(set.elements.size()) + " generators\n";
    for (std::size_t i = 0; i < set.elements.size(); ++i) {
        const std::string element = format(set.elements[i]);
        j["generators"].push_back({{"name", set.names[i]}, {"element", element}});
        text += set.names[i] + " = " + element + "\n";
    }
    emit(g, j, text);
    return 0;
}

Parameters parse_params(const std::string& template_id, const std::string& text) {
    Parameters p;
    p.pair = template_id == "spo" ? PairType::o_sp : PairType::gl_gl;
    p.normalized = template_id == "gl.normalized";
    static const std::regex item(R"(\s*(n|N|k|t|alpha)\s*=\s*(-?\d+(?:/\d+)?)\s*)");
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::smatch m;
        if (!std::regex_match(part, m, item)) throw std::invalid_argument("bad --params entry '" + part + "'");
        const std::string key = m[1];
        if (key == "n" || key == "N") {
            p.n = std::stoi(m[2]);
        } else if (key == "k") {
            p.k = std::stoi(m[2]);
        } else {
            p.t = Rational::parse(m[2].str());
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return p;
}

json label_json(const OrbitLabel& l) {
    return {{"type", to_string(l.partition.type())},
            {"size", l.partition.size()},
            {"partition", l.partition.to_string()},
            {"rank", l.rank},
            {"small", l.small}};
}

int run_orbits(const Globals& g, const PairArgs& args, bool lift, const std::vector<int>& partition) {
    if (args.pair.empty()) throw std::invalid_argument("orbits needs --pair");
    const bool gl = args.pair == "gl";
    const int large = gl ? args.n : args.big_n;
    if (large < 1) throw std::invalid_argument(gl ? "--n is required" : "--N is required");
    const OrbitType large_type = gl ? OrbitType::gl : OrbitType::o;

    json j;
    std::string text;
    if (lift) {
        if (args.k < 1) throw std::invalid_argument("--k is required with --lift");
        const OrbitType small_type = gl ? OrbitType::gl : OrbitType::sp;
        const int small_size = gl ? args.k : 2 * args.k;
        const Partition small = partition.empty() ? Partition::zero(small_type, small_size) : Partition(partition, small_type);
        if (small.size() != small_size) {
            throw std::invalid_argument("partition " + small.to_string() + " is not a partition of " + std::to_string(small_size));
        }
        const OrbitLabel from = label_orbit(small);
        const OrbitLabel to = label_orbit(kp_lift(small, large));
        j["smallSide"] = label_json(from);
        j["lift"] = label_json(to);
        text += "small side: " + from.to_string() + "\n";
        text += "lift:       " + to.to_string() + "\n";
    }
    j["chain"] = json::array();
    text += "small orbits of " + to_string(large_type) + "_" + std::to_string(large) + " (closure chain):\n";
    for (int r = 1; 2 * r <= large; ++r) {
        if (large_type == OrbitType::o && r % 2 != 0) continue;
        const OrbitLabel l = small_orbit(large_type, large, r);
        j["chain"].push_back(label_json(l));
        text += "  " + l.to_string() + "\n";
    }
    emit(g, j, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of dual-pair transfer identities"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Seed for randomized checks")->envname("CAPELLI_SEED");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--trials", g.trials, "Trials of pointwise vanishing checks")->check(CLI::PositiveNumber);
    app.add_flag("--timing", g.timing, "Report elapsed times");
    app.add_flag("--trust-calibration", g.trust_calibration, "Use calibrated constants in generator sets");

    PairArgs verify_args, gen_args, orbit_args, nf_args;
    std::string suite, identity, algebra, expr, template_id, params;
    bool lift = false;
    std::vector<int> partition;

    auto* verify = app.add_subcommand("verify", "Run identity checks");
    verify_args.add_to(verify);
    verify->add_option("--suite", suite, "gl-all, spo-all or full");
    verify->add_option("--identity", identity, "Run a single identity");

    auto* nf = app.add_subcommand("nf", "Print the normal form of an expression");
    nf->add_option("--algebra", algebra, "weyl:RxC, gl:n or o:N")->required();
    nf->add_option("--expr", expr, "Expression")->required();
    nf->add_option("--pair", nf_args.pair, "Bind E/F and Ep/Fp in a weyl algebra")->check(CLI::IsMember({"gl", "spo"}));
    nf->add_flag("--normalized", nf_args.normalized, "Normalized gl realization");

    auto* generators = app.add_subcommand("generators", "Print a transfer generator set");
    gen_args.add_to(generators);

    auto* calibrate = app.add_subcommand("calibrate", "Solve for the quadratic constants");
    calibrate->add_option("--template", template_id, "gl.unnormalized, gl.normalized or spo")->required();
    calibrate->add_option("--params", params, "e.g. n=3,k=1,t=0 or N=4,k=1")->required();

    auto* orbits = app.add_subcommand("orbits", "Small orbits and Kraft-Procesi lifting");
    orbit_args.add_to(orbits);
    orbits->add_flag("--lift", lift, "Lift a small-side orbit");
    orbits->add_option("--partition", partition, "Small-side partition (default zero orbit)")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return run_verify(g, verify_args, suite, identity);
        if (*nf) return run_nf(g, algebra, expr, nf_args);
        if (*generators) return run_generators(g, gen_args);
        if (*calibrate) {
            const CalibrationResult r = calibrate_constants(template_id, parse_params(template_id, params));
            emit(g, r.to_json(), r.to_text());
            return r.ok() ? 0 : 1;
        }
        if (*orbits) return run_orbits(g, orbit_args, lift, partition);
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
