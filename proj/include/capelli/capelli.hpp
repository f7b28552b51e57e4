#pragma once

#include "capelli/lie_algebra.hpp"
#include "capelli/rational.hpp"
#include "capelli/report.hpp"
#include "capelli/uea.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace capelli {

enum class MinorForm { row, column };

/// Quantum minor E_IJ(s) of order m = |I| = |J| in U(gl_n):
///
///   row:    sum_sigma sgn(sigma) (E+s+m-1)_{i_sigma(1) j_1} ... (E+s)_{i_sigma(m) j_m}
///   column: sum_sigma sgn(sigma) (E+s)_{i_1 j_sigma(1)} ... (E+s+m-1)_{i_m j_sigma(m)}
///
/// Indices are 1-based and need not be increasing or distinct.
UEAElement quantum_minor(const LieAlgebraPtr& gl, std::span<const int> rows, std::span<const int> cols,
                         const Rational& shift = 0, MinorForm form = MinorForm::row);

/// Quantum pfaffian Pf_I of order |I|/2 in U(o_N):
///   1/(2^{k+1} (k+1)!) sum_sigma sgn(sigma) F_{i_s(1) i_s(2)} ... F_{i_s(2k+1) i_s(2k+2)}.
/// Permutations differing by swaps inside a factor pair contribute equal
/// terms, so only those with increasing pairs are enumerated and the 2^{k+1}
/// is cancelled.
UEAElement quantum_pfaffian(const LieAlgebraPtr& o, std::span<const int> indices);

/// Coefficients of p(u) = u^2 + linear u + constant.
struct QuadraticPolynomial {
    Rational linear;
    Rational constant;

    std::vector<Rational> coefficients() const { return {constant, linear, Rational(1)}; }
    friend bool operator==(const QuadraticPolynomial&, const QuadraticPolynomial&) = default;
};

struct GeneratorSet {
    std::string label;
    Parameters parameters;
    std::vector<std::string> names;
    std::vector<UEAElement> elements;
    /// Whether the sizes satisfy the stable range (n >= 2k, N >= 4k).
    bool stable_range = true;
};

/// p(u) of the gl transfer: u^2 + (k-n+t) u unnormalized, or the stated
/// (u - k/2)(u - (n-k+alpha)/2) normalized.
QuadraticPolynomial gl_transfer_quadratic(int n, int k, const Rational& t, bool normalized);
/// p(u) = (u-k)(u-(N/2-k-1)).
QuadraticPolynomial spo_transfer_quadratic(int big_n, int k);

/// tr E + kt (tr E - k alpha normalized), entries of p(E), and all
/// order-(k+1) quantum minors over increasing index sequences (shift -k/2
/// when normalized). `quadratic_override` replaces p, e.g. by calibrated
/// constants.
GeneratorSet transfer_generators_gl(int n, int k, const Rational& t, bool normalized,
                                    std::optional<QuadraticPolynomial> quadratic_override = std::nullopt);

/// Entries of p(F) and all order-(k+1) quantum pfaffians over increasing I.
GeneratorSet transfer_generators_spo(int big_n, int k);

/// All strictly increasing sequences of `length` values from 1..n, in lex order.
std::vector<std::vector<int>> increasing_sequences(int n, int length);

/// Checks that uea_ad(x, v) lies in the span of the set for every basis
/// generator x and every element v.
IdentityReport check_ad_invariance(const GeneratorSet& set);

}  // namespace capelli
