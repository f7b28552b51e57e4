#pragma once

#include "capelli/geometry.hpp"
#include "capelli/polynomial.hpp"
#include "capelli/uea.hpp"
#include "capelli/weyl.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace capelli::testing {

inline Rational random_coefficient(SeededLcg& rng) {
    int num = 0;
    while (num == 0) num = rng.small_int(5);
    const int den = 1 + (rng.small_int(1) + 1);
    return Rational(num, den);
}

inline unsigned random_count(SeededLcg& rng, int max) {
    return static_cast<unsigned>(rng.small_int(max) + max) / 2;
}

/// Sum of up to `terms` normal-ordered monomials of degree <= max_degree.
inline WeylElement random_weyl(SeededLcg& rng, WeylShape shape, int max_degree, int terms) {
    WeylElement out(shape);
    const auto pairs = static_cast<unsigned>(shape.pairs());
    const int count = 1 + static_cast<int>(random_count(rng, terms - 1));
    for (int t = 0; t < count; ++t) {
        const int degree = static_cast<int>(random_count(rng, max_degree));
        std::vector<MultiIndex::Entry> xs, ds;
        for (int e = 0; e < degree; ++e) {
            const auto var = static_cast<MultiIndex::Variable>(random_count(rng, 2 * static_cast<int>(pairs) - 1) % pairs);
            (rng.small_int(1) >= 0 ? xs : ds).emplace_back(var, 1);
        }
        out.add_term({MultiIndex::from_entries(xs), MultiIndex::from_entries(ds)}, random_coefficient(rng));
    }
    return out;
}

/// Random word-products of generators, straightened.
inline UEAElement random_uea(SeededLcg& rng, const LieAlgebraPtr& alg, int max_degree, int terms) {
    std::vector<std::pair<Word, Rational>> words;
    const int dim = static_cast<int>(alg->dimension());
    const int count = 1 + static_cast<int>(random_count(rng, terms - 1));
    for (int t = 0; t < count; ++t) {
        Word w;
        const int degree = static_cast<int>(random_count(rng, max_degree));
        for (int e = 0; e < degree; ++e) {
            w.push_back(static_cast<LieAlgebra::Generator>(random_count(rng, 2 * dim - 1) % static_cast<unsigned>(dim)));
        }
        words.emplace_back(std::move(w), random_coefficient(rng));
    }
    return UEAElement::from_words(alg, words);
}

/// All monomials in the x variables of `shape` with total degree <= max_degree.
inline std::vector<CommutativePolynomial> x_monomials(WeylShape shape, unsigned max_degree) {
    std::vector<CommutativePolynomial> out;
    std::vector<MultiIndex::Entry> current;
    const auto pairs = static_cast<MultiIndex::Variable>(shape.pairs());
    auto rec = [&](auto&& self, MultiIndex::Variable from, unsigned left) -> void {
        out.push_back(CommutativePolynomial::monomial(MultiIndex::from_entries(current)));
        if (left == 0) return;
        for (MultiIndex::Variable v = from; v < pairs; ++v) {
            current.emplace_back(v, 1);
            self(self, v, left - 1);
            current.pop_back();
        }
    };
    rec(rec, 0, max_degree);
    return out;
}

inline unsigned d_degree(const WeylElement& a) {
    unsigned best = 0;
    for (const auto& [m, c] : a.terms()) best = std::max(best, static_cast<unsigned>(m.d.degree()));
    return best;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

/// Runs a shell command and captures standard output.
inline CommandResult run_command(const std::string& command) {
    CommandResult r;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace capelli::testing
