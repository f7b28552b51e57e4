#include "capelli/capelli.hpp"

#include "capelli/linalg.hpp"
#include "capelli/operator_matrix.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace capelli {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) sign = -sign;
        }
    }
    return sign;
}

void check_indices(const LieAlgebra& alg, std::span<const int> indices) {
    for (const int i : indices) {
        if (i < 1 || i > alg.size()) {
            throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(alg.size()));
        }
    }
}

// (E + c)_{ab}
UEAElement shifted_entry(const LieAlgebraPtr& alg, int a, int b, const Rational& c) {
    UEAElement e = UEAElement::entry(alg, a, b);
    if (a == b) e += UEAElement::constant(alg, c);
    return e;
}

std::string sequence_text(std::span<const int> seq) {
    std::string s = "(";
    for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + std::to_string(seq[i]);
    return s + ")";
}

}  // namespace

UEAElement quantum_minor(const LieAlgebraPtr& gl, std::span<const int> rows, std::span<const int> cols,
                         const Rational& shift, MinorForm form) {
    if (gl->type() != LieType::gl) throw std::invalid_argument("quantum minors live in U(gl_n)");
    if (rows.size() != cols.size()) throw std::invalid_argument("quantum minor: |I| != |J|");
    if (rows.empty()) throw std::invalid_argument("quantum minor: empty index sequence");
    check_indices(*gl, rows);
    check_indices(*gl, cols);

    const auto m = static_cast<int>(rows.size());
    std::vector<int> perm(rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    UEAElement out(gl);
    do {
        UEAElement term = UEAElement::constant(gl, permutation_sign(perm));
        for (int r = 0; r < m; ++r) {
            const auto ur = static_cast<std::size_t>(r);
            const auto up = static_cast<std::size_t>(perm[ur]);
            if (form == MinorForm::row) {
                term = term * shifted_entry(gl, rows[up], cols[ur], shift + (m - 1 - r));
            } else {
                term = term * shifted_entry(gl, rows[ur], cols[up], shift + r);
            }
        }
        out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

UEAElement quantum_pfaffian(const LieAlgebraPtr& o, std::span<const int> indices) {
    if (o->type() != LieType::o) throw std::invalid_argument("quantum pfaffians live in U(o_N)");
    if (indices.empty() || indices.size() % 2 != 0) {
        throw std::invalid_argument("quantum pfaffian needs a nonempty index sequence of even length");
    }
    check_indices(*o, indices);

    const std::size_t len = indices.size();
    const std::size_t factors = len / 2;
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<Word, Rational>> words;
    do {
        bool pairs_increasing = true;
        for (std::size_t r = 0; r < factors; ++r) pairs_increasing = pairs_increasing && perm[2 * r] < perm[2 * r + 1];
        if (!pairs_increasing) continue;

        int sign = permutation_sign(perm);
        Word word;
        for (std::size_t r = 0; r < factors && sign != 0; ++r) {
            const auto e = o->entry(indices[static_cast<std::size_t>(perm[2 * r])],
                                    indices[static_cast<std::size_t>(perm[2 * r + 1])]);
            if (!e) {
                sign = 0;
                break;
            }
            sign *= e->sign;
            word.push_back(e->generator);
        }
        if (sign != 0) words.emplace_back(std::move(word), Rational(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));

    UEAElement out = UEAElement::from_words(o, words);
    return out * (Rational(1) / factorial(static_cast<unsigned>(factors)));
}

QuadraticPolynomial gl_transfer_quadratic(int n, int k, const Rational& t, bool normalized) {
    if (!normalized) return {Rational(k - n) + t, Rational(0)};
    const Rational r1(k, 2);
    const Rational r2 = (Rational(n - k) + t) / 2;
    return {-(r1 + r2), r1 * r2};
}

QuadraticPolynomial spo_transfer_quadratic(int big_n, int k) {
    const Rational r1(k);
    const Rational r2 = Rational(big_n, 2) - k - 1;
    return {-(r1 + r2), r1 * r2};
}

std::vector<std::vector<int>> increasing_sequences(int n, int length) {
    std::vector<std::vector<int>> out;
    if (length < 0 || length > n) return out;
    std::vector<int> seq(static_cast<std::size_t>(length));
    std::iota(seq.begin(), seq.end(), 1);
    while (true) {
        out.push_back(seq);
        int pos = length - 1;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - (length - 1 - pos)) --pos;
        if (pos < 0) break;
        ++seq[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < length; ++q) seq[static_cast<std::size_t>(q)] = seq[static_cast<std::size_t>(q - 1)] + 1;
    }
    return out;
}

namespace {

void append_matrix_entries(GeneratorSet& set, const OperatorMatrix<UEAElement>& m, const std::string& name) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            set.names.push_back(name + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
            set.elements.push_back(m(i, j));
        }
    }
}

OperatorMatrix<UEAElement> generator_matrix(const LieAlgebraPtr& alg) {
    const auto n = static_cast<std::size_t>(alg->size());
    return OperatorMatrix<UEAElement>::generate(n, n, [&](std::size_t i, std::size_t j) {
        return UEAElement::entry(alg, static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    });
}

}  // namespace

GeneratorSet transfer_generators_gl(int n, int k, const Rational& t, bool normalized,
                                    std::optional<QuadraticPolynomial> quadratic_override) {
    if (n < 1 || k < 1) throw std::invalid_argument("transfer generators need positive sizes");
    const auto alg = LieAlgebra::gl(n);
    GeneratorSet set;
    set.label = normalized ? "gl normalized transfer" : "gl unnormalized transfer";
    set.parameters = Parameters{PairType::gl_gl, n, k, t, normalized};
    set.stable_range = n >= 2 * k;

    const auto e = generator_matrix(alg);
    const Rational trace_shift = normalized ? -(Rational(k) * t) : Rational(k) * t;
    set.names.push_back(normalized ? "trE-k*alpha" : "trE+k*t");
    set.elements.push_back(trace(e) + UEAElement::constant(alg, trace_shift));

    const QuadraticPolynomial p = quadratic_override.value_or(gl_transfer_quadratic(n, k, t, normalized));
    const auto coeffs = p.coefficients();
    append_matrix_entries(set, matrix_poly_eval(e, std::span<const Rational>(coeffs)), "p(E)");

    const Rational shift = normalized ? -Rational(k, 2) : Rational(0);
    const auto seqs = increasing_sequences(n, k + 1);
    for (const auto& rows : seqs) {
        for (const auto& cols : seqs) {
            set.names.push_back("E_IJ" + sequence_text(rows) + sequence_text(cols));
            set.elements.push_back(quantum_minor(alg, rows, cols, shift));
        }
    }
    return set;
}

GeneratorSet transfer_generators_spo(int big_n, int k) {
    if (big_n < 2 || k < 1) throw std::invalid_argument("transfer generators need N >= 2 and k >= 1");
    const auto alg = LieAlgebra::o(big_n);
    GeneratorSet set;
    set.label = "spo transfer";
    set.parameters = Parameters{PairType::o_sp, big_n, k, Rational(0), true};
    set.stable_range = big_n >= 4 * k;

    const auto coeffs = spo_transfer_quadratic(big_n, k).coefficients();
    append_matrix_entries(set, matrix_poly_eval(generator_matrix(alg), std::span<const Rational>(coeffs)), "p(F)");

    for (const auto& seq : increasing_sequences(big_n, 2 * k + 2)) {
        set.names.push_back("Pf" + sequence_text(seq));
        set.elements.push_back(quantum_pfaffian(alg, seq));
    }
    return set;
}

IdentityReport check_ad_invariance(const GeneratorSet& set) {
    const auto start = std::chrono::steady_clock::now();
    IdentityReport report;
    report.identity_id = set.parameters.pair == PairType::gl_gl ? "gl.ad_invariance" : "spo.ad_invariance";
    report.parameters = set.parameters;
    report.convention = Convention::none;
    report.passed = true;
    if (set.elements.empty()) throw std::invalid_argument("ad invariance of an empty generator set");

    const LieAlgebraPtr alg = set.elements.front().algebra();
    SpanBasis<UEAElement::TermMap> span;
    for (const auto& v : set.elements) span.add(v.terms());

    std::size_t certificate_terms = 0;
    for (std::size_t g = 0; g < alg->dimension(); ++g) {
        const auto x = static_cast<LieAlgebra::Generator>(g);
        for (std::size_t v = 0; v < set.elements.size(); ++v) {
            const UEAElement image = uea_ad(x, set.elements[v]);
            ++report.checks;
            const auto coeffs = span.express(image.terms());
            if (!coeffs) {
                if (report.passed) {
                    report.passed = false;
                    report.witness = format(image);
                    const auto [i, j] = alg->label(x);
                    report.detail = "ad(" + std::string(1, alg->atom()) + "[" + std::to_string(i) + "," +
                                    std::to_string(j) + "]) of " + set.names[v] + " leaves the span";
                }
                continue;
            }
            for (const auto& c : *coeffs) certificate_terms += c.is_zero() ? 0 : 1;
        }
    }
    if (report.passed) {
        report.detail = std::to_string(set.elements.size()) + " generators, span dimension " +
                        std::to_string(span.dimension()) + ", " + std::to_string(certificate_terms) +
                        " nonzero certificate coefficients";
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace capelli
