#pragma once

#include "capelli/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace capelli {

enum class PairType { gl_gl, o_sp };

/// Which realization of the dual pair an identity is checked under; `none`
/// for identities that live entirely in U(g).
enum class Convention { normalized, unnormalized, none };

std::string to_string(PairType p);
std::string to_string(Convention c);

/// Parameter record of one check. For o-sp, `n` holds N. The scalar `t` is
/// the character value t in the unnormalized gl setting and alpha in the
/// normalized one.
struct Parameters {
    PairType pair = PairType::gl_gl;
    int n = 0;
    int k = 0;
    Rational t;
    bool normalized = false;

    std::string describe() const;
    nlohmann::json to_json() const;
};

struct IdentityReport {
    std::string identity_id;
    Parameters parameters;
    Convention convention = Convention::none;
    bool passed = false;
    /// Normal-form difference of the first failing check in parser grammar;
    /// empty on pass.
    std::string witness;
    double elapsed_ms = 0.0;
    std::size_t checks = 0;
    std::string detail;

    /// Timing is left out unless requested so reports are byte-stable.
    nlohmann::json to_json(bool with_timing) const;
    std::string to_text(bool with_timing) const;
};

struct SuiteSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    bool ok() const { return failed == 0; }
};

SuiteSummary summarize(const std::vector<IdentityReport>& reports);

}  // namespace capelli
