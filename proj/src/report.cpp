#include "capelli/report.hpp"

#include <cstdio>

namespace capelli {

std::string to_string(PairType p) { return p == PairType::gl_gl ? "gl" : "spo"; }

std::string to_string(Convention c) {
    switch (c) {
        case Convention::normalized: return "normalized";
        case Convention::unnormalized: return "unnormalized";
        case Convention::none: return "none";
    }
    return "none";
}

std::string Parameters::describe() const {
    if (pair == PairType::o_sp) return "N=" + std::to_string(n) + " k=" + std::to_string(k);
    std::string s = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    s += normalized ? " alpha=" : " t=";
    return s + t.str();
}

nlohmann::json Parameters::to_json() const {
    nlohmann::json j;
    j["pair"] = to_string(pair);
    if (pair == PairType::o_sp) {
        j["N"] = n;
        j["k"] = k;
    } else {
        j["n"] = n;
        j["k"] = k;
        j[normalized ? "alpha" : "t"] = t.str();
        j["normalized"] = normalized;
    }
    return j;
}

nlohmann::json IdentityReport::to_json(bool with_timing) const {
    nlohmann::json j;
    j["identityId"] = identity_id;
    j["parameters"] = parameters.to_json();
    j["convention"] = to_string(convention);
    j["status"] = passed ? "pass" : "fail";
    j["witness"] = witness;
    j["elapsedMs"] = with_timing ? nlohmann::json(elapsed_ms) : nlohmann::json(nullptr);
    j["checks"] = checks;
    j["detail"] = detail;
    return j;
}

std::string IdentityReport::to_text(bool with_timing) const {
    std::string line = std::string(passed ? "PASS " : "FAIL ") + identity_id + " [" + parameters.describe() +
                       "] convention=" + to_string(convention) + " checks=" + std::to_string(checks);
    if (with_timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.1fms", elapsed_ms);
        line += buf;
    }
    if (!detail.empty()) line += " (" + detail + ")";
    if (!passed) line += "\n  witness: " + witness;
    return line;
}

SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
    SuiteSummary s;
    for (const auto& r : reports) (r.passed ? s.passed : s.failed)++;
    return s;
}

}  // namespace capelli
