#pragma once

#include "capelli/capelli.hpp"
#include "capelli/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

inline constexpr std::uint64_t default_seed = 0x5eedc0ffeeULL;

struct VerifyOptions {
    std::uint64_t seed = default_seed;
    int trials = 100;
    int jobs = 1;
    /// Use calibrated quadratic constants in normalized gl generator sets.
    bool trust_calibration = false;
};

/// Every identity id understood by run_identity.
const std::vector<std::string>& identity_catalog();
/// Identity ids of a suite ("gl-all", "spo-all", "full") applicable to a
/// pair type. Throws std::invalid_argument for an unknown suite.
std::vector<std::string> suite_identities(const std::string& suite, PairType pair);
/// Grid used when a suite is run without explicit parameters.
std::vector<Parameters> default_grid(const std::string& suite);

/// Throws std::invalid_argument for an unknown id or parameters that do not
/// fit it.
IdentityReport run_identity(const std::string& id, const Parameters& params, const VerifyOptions& options = {});

struct CalibrationResult {
    std::string template_id;
    Parameters parameters;
    /// c1, c0 of p(u) = u^2 + c1 u + c0.
    std::vector<std::pair<std::string, Rational>> solved;
    std::vector<std::pair<std::string, Rational>> stated;
    bool match = false;
    bool unique = false;
    bool residual_zero = false;
    std::size_t equations = 0;
    std::string detail;

    bool ok() const { return unique && residual_zero; }
    std::optional<QuadraticPolynomial> quadratic() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Templates "gl.unnormalized", "gl.normalized" and "spo": solves for the
/// scalars of R(E^2 + c1 E + c0 I)_ij (resp. F) that make the pairing
/// identity hold for all i, j. Throws std::invalid_argument for an unknown
/// template or parameters of the wrong pair type.
CalibrationResult calibrate_constants(const std::string& template_id, const Parameters& params);

struct SuiteResult {
    std::string suite;
    std::vector<Parameters> grid;
    std::vector<IdentityReport> reports;
    SuiteSummary summary;

    nlohmann::json to_json(bool with_timing) const;
    std::string to_text(bool with_timing) const;
};

/// Runs every identity of the suite at every grid point whose pair type fits.
/// Report order is grid order, then catalog order, whatever `jobs` is.
SuiteResult run_suite(const std::string& suite, const std::vector<Parameters>& grid, const VerifyOptions& options = {});

}  // namespace capelli
