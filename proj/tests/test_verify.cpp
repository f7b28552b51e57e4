#include "capelli/verify.hpp"

#include <doctest.h>

using namespace capelli;

namespace {

Parameters gl(int n, int k, int t = 0, bool normalized = false) { return {PairType::gl_gl, n, k, Rational(t), normalized}; }
Parameters spo(int big_n, int k) { return {PairType::o_sp, big_n, k, Rational(0), true}; }

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("catalog examples") {
    const auto trace = run_identity("gl.trace", gl(2, 1));
    CHECK(trace.passed);
    CHECK(trace.witness.empty());
    CHECK(trace.convention == Convention::unnormalized);
    CHECK(run_identity("spo.f2", spo(4, 1)).passed);
    CHECK(run_identity("gl.quadratic", gl(2, 1)).passed);
}

TEST_CASE("every catalog identity passes at small sizes") {
    for (const auto& id : identity_catalog()) {
        const Parameters p = id.starts_with("gl.") ? gl(3, 1, -2) : spo(5, 1);
        const auto report = run_identity(id, p);
        INFO(id, " ", report.detail, " ", report.witness);
        CHECK(report.passed);
        CHECK(report.checks > 0);
    }
}

TEST_CASE("normalized gl checks") {
    for (const auto& id : {"gl.hom", "gl.hom_small", "gl.ad_invariance", "gl.symbol_vanishing", "gl.twisted_minor_kernel"}) {
        CHECK(run_identity(id, gl(4, 2, 1, true)).passed);
    }
    VerifyOptions trusted;
    trusted.trust_calibration = true;
    CHECK(run_identity("gl.ad_invariance", gl(4, 1, 1, true), trusted).passed);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(run_identity("gl.nothing", gl(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(run_identity("spo.f2", gl(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(run_identity("gl.trace", gl(0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("bogus", {}), std::invalid_argument);
    CHECK_THROWS_AS(calibrate_constants("gl.other", gl(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(calibrate_constants("spo", gl(2, 1)), std::invalid_argument);
}

TEST_CASE("calibration recovers the unnormalized constants") {
    for (const auto& p : {gl(3, 1, 0), gl(4, 2, 1), gl(2, 1, -2)}) {
        const auto r = calibrate_constants("gl.unnormalized", p);
        CHECK(r.ok());
        CHECK(r.match);
        REQUIRE(r.solved.size() == 2);
        CHECK(r.solved[0].second == Rational(p.k - p.n) + p.t);
        CHECK(r.solved[1].second == 0);
    }
    const auto r = calibrate_constants("gl.unnormalized", gl(3, 1, 0));
    CHECK(r.solved[0].second == -2);
}

TEST_CASE("calibration of the spo template") {
    for (const auto& [big_n, k] : {std::pair{4, 1}, std::pair{6, 1}, std::pair{8, 2}}) {
        const auto r = calibrate_constants("spo", spo(big_n, k));
        CHECK(r.ok());
        CHECK(r.match);
        const Rational r2 = Rational(big_n, 2) - k - 1;
        CHECK(r.solved[0].second == -(Rational(k) + r2));
        CHECK(r.solved[1].second == Rational(k) * r2);
    }
}

TEST_CASE("normalized calibration reports the match flag") {
    const auto zero = calibrate_constants("gl.normalized", gl(4, 1, 0, true));
    CHECK(zero.ok());
    CHECK(zero.match);
    const auto shifted = calibrate_constants("gl.normalized", gl(4, 1, 1, true));
    CHECK(shifted.ok());
    CHECK_FALSE(shifted.match);
    // Roots k/2 and (n-k)/2 + alpha.
    CHECK(shifted.solved[0].second == -(Rational(1, 2) + Rational(3, 2) + 1));
    CHECK(shifted.solved[1].second == Rational(1, 2) * (Rational(3, 2) + 1));
    CHECK(shifted.quadratic().has_value());
    CHECK(shifted.to_json()["status"] == "pass");
}

TEST_CASE("suites") {
    const auto empty = run_suite("gl-all", {});
    CHECK(empty.reports.empty());
    CHECK(empty.summary.ok());

    const std::vector<Parameters> grid{gl(2, 1), gl(3, 1, 1), spo(4, 1)};
    VerifyOptions serial, parallel;
    parallel.jobs = 4;
    const auto a = run_suite("full", grid, serial);
    const auto b = run_suite("full", grid, parallel);
    CHECK(a.summary.ok());
    CHECK(a.reports.size() == 27);
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());
    CHECK(run_suite("spo-all", grid).reports.size() == 9);

    const auto j = a.to_json(false);
    CHECK(j.contains("suite"));
    CHECK(j["summary"]["pass"] == 27);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["reports"][0]["elapsedMs"].is_null());
    for (const auto& key : {"identityId", "parameters", "convention", "status", "witness", "elapsedMs"}) {
        CHECK(j["reports"][0].contains(key));
    }
}

TEST_CASE("default grids") {
    CHECK(default_grid("gl-all").size() == 9);
    CHECK(default_grid("spo-all").size() == 2);
    CHECK(default_grid("full").size() == 11);
    CHECK_THROWS(default_grid("nope"));
}

}
