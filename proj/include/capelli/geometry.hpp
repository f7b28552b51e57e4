#pragma once

#include "capelli/polynomial.hpp"
#include "capelli/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace capelli {

enum class OrbitType { gl, o, sp };

std::string to_string(OrbitType t);

/// Jordan type of a nilpotent orbit: non-increasing positive parts. For sp,
/// odd parts have even multiplicity; for o, even parts have even
/// multiplicity.
class Partition {
public:
    /// Throws std::invalid_argument on a malformed or parity-violating list.
    Partition(std::vector<int> parts, OrbitType type);

    static Partition zero(OrbitType type, int size);
    /// Reason the parts fail the type's parity rule, if any.
    static std::optional<std::string> parity_violation(const std::vector<int>& parts, OrbitType type);
    /// Largest partition of the type dominated by `parts` (the collapse).
    static Partition collapse(std::vector<int> parts, OrbitType type);

    const std::vector<int>& parts() const { return parts_; }
    OrbitType type() const { return type_; }
    int size() const;
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int multiplicity(int part) const;
    /// Column lengths of the Young diagram.
    std::vector<int> columns() const;

    /// Dominance order, which is the closure order on orbits of one type.
    bool dominates(const Partition& other) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    OrbitType type_;
};

struct OrbitLabel {
    Partition partition;
    /// Length of the second column.
    int rank;
    bool small;

    std::string to_string() const;
};

OrbitLabel label_orbit(const Partition& p);

/// Kraft-Procesi lifting in the stable range: prepend a first column of
/// length large_size - |p|. gl lifts to gl, sp to o, o to sp. Throws
/// std::invalid_argument when large_size < 2 |p|.
Partition kp_lift(const Partition& small_side, int large_size);

/// (2^rank, 1^{size - 2 rank}); throws std::invalid_argument for rank out of
/// range or odd rank in type o.
OrbitLabel small_orbit(OrbitType type, int size, int rank);

/// Whether the closure of orbit `a` contains orbit `b`.
bool closure_contains(const OrbitLabel& a, const OrbitLabel& b);

/// Reproducible 64-bit linear congruential generator (MMIX constants).
class SeededLcg {
public:
    explicit SeededLcg(std::uint64_t seed) : engine_(seed) {}
    /// Uniform-ish integer in [-bound, bound] from the high bits.
    int small_int(int bound);

private:
    std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL> engine_;
};

struct VanishingReport {
    std::size_t trials = 0;
    std::size_t passed = 0;
    /// Generic B (no constraint) made at least one symbol nonzero.
    bool negative_control_nonzero = false;
    std::string failure_witness;

    bool ok() const { return passed == trials && negative_control_nonzero; }
};

/// Evaluates symbols in the n^2 variables M_ij (variable id (i-1) n + j-1)
/// at M = A B^t with A of rank k and B^t A = 0, for `trials` seeded points.
VanishingReport vanishing_check_gl(int n, int k, const std::vector<CommutativePolynomial>& symbols, int trials,
                                   std::uint64_t seed);

struct MembershipCertificate {
    std::string symbol;
    bool certified = false;
    /// The expansion in X, Y is identically zero.
    bool vacuous = false;
    /// (constraint entry name, cofactor) with sum of constraint * cofactor
    /// equal to the expanded symbol.
    std::vector<std::pair<std::string, CommutativePolynomial>> cofactors;
    std::string expansion;
};

struct FormalVanishingReport {
    std::vector<MembershipCertificate> certificates;
    bool ok() const;
};

/// Variable ids of the symbolic N x k matrices: X_ia -> (i-1) k + a-1,
/// Y_ia -> N k + (i-1) k + a-1.
CommutativePolynomial expand_skew_moment(int big_n, int k, const CommutativePolynomial& symbol);

/// Symbols are in the skew variables of o_N (variable id = basis index of
/// F_ij, i < j). Each is expanded at M = X Y^t - Y X^t and written as a
/// combination of entries of X^t X, X^t Y, Y^t Y (Y^t X is the transpose of
/// X^t Y) with explicit polynomial cofactors.
FormalVanishingReport vanishing_check_spo(int big_n, int k, const std::vector<CommutativePolynomial>& symbols);

}  // namespace capelli
