#include "capelli/geometry.hpp"

#include "capelli/lie_algebra.hpp"
#include "capelli/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace capelli {

std::string to_string(OrbitType t) {
    switch (t) {
        case OrbitType::gl: return "gl";
        case OrbitType::o: return "o";
        case OrbitType::sp: return "sp";
    }
    return "gl";
}

Partition::Partition(std::vector<int> parts, OrbitType type) : parts_(std::move(parts)), type_(type) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    }
    if (const auto why = parity_violation(parts_, type_)) throw std::invalid_argument(*why);
}

Partition Partition::zero(OrbitType type, int size) {
    if (size < 0) throw std::invalid_argument("negative partition size");
    return Partition(std::vector<int>(static_cast<std::size_t>(size), 1), type);
}

std::optional<std::string> Partition::parity_violation(const std::vector<int>& parts, OrbitType type) {
    if (type == OrbitType::gl) return std::nullopt;
    std::map<int, int> mult;
    for (const int p : parts) ++mult[p];
    if (type == OrbitType::sp) {
        int total = std::accumulate(parts.begin(), parts.end(), 0);
        if (total % 2 != 0) return "sp partition must have even size";
    }
    for (const auto& [part, m] : mult) {
        const bool constrained = type == OrbitType::o ? part % 2 == 0 : part % 2 == 1;
        if (constrained && m % 2 != 0) {
            return "parity: part " + std::to_string(part) + " has odd multiplicity " + std::to_string(m) + " in type " +
                   capelli::to_string(type);
        }
    }
    return std::nullopt;
}

Partition Partition::collapse(std::vector<int> parts, OrbitType type) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (parity_violation(parts, type)) {
        std::map<int, int, std::greater<>> mult;
        for (const int p : parts) ++mult[p];
        int bad = 0;
        for (const auto& [part, m] : mult) {
            const bool constrained = type == OrbitType::o ? part % 2 == 0 : part % 2 == 1;
            if (constrained && m % 2 != 0) {
                bad = part;
                break;
            }
        }
        if (bad == 0) throw std::invalid_argument("partition size incompatible with type " + capelli::to_string(type));
        std::size_t last = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] == bad) last = i;
        }
        --parts[last];
        std::size_t s = last + 1;
        while (s < parts.size() && parts[s] >= bad - 1) ++s;
        if (s < parts.size()) {
            ++parts[s];
        } else {
            parts.push_back(1);
        }
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
    }
    return Partition(std::move(parts), type);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<int> Partition::columns() const {
    std::vector<int> cols(static_cast<std::size_t>(largest()), 0);
    for (const int p : parts_) {
        for (int c = 0; c < p; ++c) ++cols[static_cast<std::size_t>(c)];
    }
    return cols;
}

bool Partition::dominates(const Partition& other) const {
    if (size() != other.size()) return false;
    int a = 0, b = 0;
    const std::size_t len = std::max(parts_.size(), other.parts_.size());
    for (std::size_t i = 0; i < len; ++i) {
        a += i < parts_.size() ? parts_[i] : 0;
        b += i < other.parts_.size() ? other.parts_[i] : 0;
        if (a < b) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
}

std::string OrbitLabel::to_string() const {
    return capelli::to_string(partition.type()) + "_" + std::to_string(partition.size()) + " " + partition.to_string() +
           " rank=" + std::to_string(rank) + (small ? " small" : "");
}

OrbitLabel label_orbit(const Partition& p) {
    const auto cols = p.columns();
    const int rank = cols.size() >= 2 ? cols[1] : 0;
    return OrbitLabel{p, rank, p.largest() <= 2};
}

Partition kp_lift(const Partition& small_side, int large_size) {
    const int small = small_side.size();
    if (large_size < 2 * small) {
        throw std::invalid_argument("Kraft-Procesi lift outside the stable range: " + std::to_string(large_size) +
                                    " < 2*" + std::to_string(small));
    }
    OrbitType target = OrbitType::gl;
    if (small_side.type() == OrbitType::sp) target = OrbitType::o;
    if (small_side.type() == OrbitType::o) target = OrbitType::sp;

    const int column = large_size - small;
    std::vector<int> parts(static_cast<std::size_t>(column), 1);
    for (std::size_t i = 0; i < small_side.parts().size(); ++i) parts[i] += small_side.parts()[i];
    std::sort(parts.begin(), parts.end(), std::greater<>());
    if (Partition::parity_violation(parts, target)) return Partition::collapse(std::move(parts), target);
    return Partition(std::move(parts), target);
}

OrbitLabel small_orbit(OrbitType type, int size, int rank) {
    if (rank < 1 || 2 * rank > size) {
        throw std::invalid_argument("small orbit rank " + std::to_string(rank) + " outside 1.." +
                                    std::to_string(size / 2));
    }
    if (type == OrbitType::o && rank % 2 != 0) {
        throw std::invalid_argument("parity: small orbits of o_N have even rank, got " + std::to_string(rank));
    }
    std::vector<int> parts(static_cast<std::size_t>(rank), 2);
    parts.resize(static_cast<std::size_t>(size - rank), 1);
    return label_orbit(Partition(std::move(parts), type));
}

bool closure_contains(const OrbitLabel& a, const OrbitLabel& b) {
    return a.partition.type() == b.partition.type() && a.partition.dominates(b.partition);
}

int SeededLcg::small_int(int bound) {
    const std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<int>((engine_() >> 33) % span) - bound;
}

namespace {

RationalMatrix random_matrix(SeededLcg& rng, Eigen::Index rows, Eigen::Index cols) {
    RationalMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.small_int(10);
    }
    return m;
}

std::vector<Rational> flatten_row_major(const RationalMatrix& m) {
    std::vector<Rational> out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    }
    return out;
}

RationalMatrix product(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out = RationalMatrix::Constant(a.rows(), b.cols(), Rational(0));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index l = 0; l < a.cols(); ++l) {
            if (a(i, l).is_zero()) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, l) * b(l, j);
        }
    }
    return out;
}

bool all_vanish(const std::vector<CommutativePolynomial>& symbols, const std::vector<Rational>& point,
                std::string* witness) {
    for (std::size_t s = 0; s < symbols.size(); ++s) {
        const Rational v = symbols[s].evaluate(point);
        if (!v.is_zero()) {
            if (witness) *witness = "symbol #" + std::to_string(s) + " evaluates to " + v.str();
            return false;
        }
    }
    return true;
}

}  // namespace

VanishingReport vanishing_check_gl(int n, int k, const std::vector<CommutativePolynomial>& symbols, int trials,
                                   std::uint64_t seed) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("vanishing_check_gl needs 1 <= k <= n");
    SeededLcg rng(seed);
    VanishingReport report;
    const Eigen::Index rows = n, cols = k;

    for (int trial = 0; trial < trials; ++trial) {
        RationalMatrix a;
        do {
            a = random_matrix(rng, rows, cols);
        } while (rank(a) < cols);

        const auto kernel = nullspace_basis(RationalMatrix(a.transpose()));
        RationalMatrix b = RationalMatrix::Constant(rows, cols, Rational(0));
        if (!kernel.empty()) {
            bool nonzero = false;
            while (!nonzero) {
                for (Eigen::Index c = 0; c < cols; ++c) {
                    RationalVector col = RationalVector::Constant(rows, Rational(0));
                    for (const auto& v : kernel) {
                        const Rational w = rng.small_int(10);
                        for (Eigen::Index i = 0; i < rows; ++i) col(i) += w * v(i);
                    }
                    b.col(c) = col;
                    for (Eigen::Index i = 0; i < rows; ++i) nonzero = nonzero || !col(i).is_zero();
                }
            }
        }

        const auto point = flatten_row_major(product(a, RationalMatrix(b.transpose())));
        ++report.trials;
        std::string witness;
        if (all_vanish(symbols, point, &witness)) {
            ++report.passed;
        } else if (report.failure_witness.empty()) {
            report.failure_witness = "trial " + std::to_string(trial) + ": " + witness;
        }
    }

    for (int attempt = 0; attempt < 16 && !report.negative_control_nonzero; ++attempt) {
        const RationalMatrix a = random_matrix(rng, rows, cols);
        const RationalMatrix b = random_matrix(rng, rows, cols);
        const auto point = flatten_row_major(product(a, RationalMatrix(b.transpose())));
        report.negative_control_nonzero = !all_vanish(symbols, point, nullptr);
    }
    return report;
}

bool FormalVanishingReport::ok() const {
    return std::all_of(certificates.begin(), certificates.end(), [](const auto& c) { return c.certified; });
}

CommutativePolynomial expand_skew_moment(int big_n, int k, const CommutativePolynomial& symbol) {
    const auto alg = LieAlgebra::o(big_n);
    const auto x_var = [k](int i, int a) { return static_cast<MultiIndex::Variable>((i - 1) * k + (a - 1)); };
    const auto y_var = [big_n, k](int i, int a) {
        return static_cast<MultiIndex::Variable>(big_n * k + (i - 1) * k + (a - 1));
    };
    return symbol.substitute([&](MultiIndex::Variable v) {
        if (v >= alg->dimension()) throw std::invalid_argument("symbol variable outside o_N");
        const auto [i, j] = alg->label(static_cast<LieAlgebra::Generator>(v));
        CommutativePolynomial m;
        for (int a = 1; a <= k; ++a) {
            m.add_term(MultiIndex::from_entries({{x_var(i, a), 1}, {y_var(j, a), 1}}), 1);
            m.add_term(MultiIndex::from_entries({{y_var(i, a), 1}, {x_var(j, a), 1}}), -1);
        }
        return m;
    });
}

namespace {

void monomials_of_degree(const std::vector<MultiIndex::Variable>& vars, unsigned degree, std::size_t from,
                         std::vector<MultiIndex::Entry>& current, std::vector<MultiIndex>& out) {
    if (degree == 0) {
        out.push_back(MultiIndex::from_entries(current));
        return;
    }
    for (std::size_t v = from; v < vars.size(); ++v) {
        current.emplace_back(vars[v], 1);
        monomials_of_degree(vars, degree - 1, v, current, out);
        current.pop_back();
    }
}

std::vector<MultiIndex> bidegree_monomials(const std::vector<MultiIndex::Variable>& xs,
                                           const std::vector<MultiIndex::Variable>& ys, unsigned dx, unsigned dy) {
    std::vector<MultiIndex> mx, my, out;
    std::vector<MultiIndex::Entry> scratch;
    monomials_of_degree(xs, dx, 0, scratch, mx);
    monomials_of_degree(ys, dy, 0, scratch, my);
    for (const auto& a : mx) {
        for (const auto& b : my) out.push_back(a + b);
    }
    return out;
}

struct Constraint {
    std::string name;
    CommutativePolynomial value;
    unsigned x_degree;
    unsigned y_degree;
};

}  // namespace

FormalVanishingReport vanishing_check_spo(int big_n, int k, const std::vector<CommutativePolynomial>& symbols) {
    if (big_n < 2 || k < 1) throw std::invalid_argument("vanishing_check_spo needs N >= 2, k >= 1");
    const auto nk = static_cast<MultiIndex::Variable>(big_n * k);
    std::vector<MultiIndex::Variable> xs, ys;
    for (MultiIndex::Variable v = 0; v < nk; ++v) {
        xs.push_back(v);
        ys.push_back(v + nk);
    }

    // Entries of X^t X, Y^t Y (a <= b) and X^t Y (all a, b).
    std::vector<Constraint> constraints;
    const auto entry = [&](MultiIndex::Variable first_block, MultiIndex::Variable second_block, int a, int b) {
        CommutativePolynomial p;
        for (int i = 0; i < big_n; ++i) {
            const auto base = static_cast<MultiIndex::Variable>(i * k);
            p.add_term(MultiIndex::from_entries({{first_block + base + static_cast<MultiIndex::Variable>(a), 1},
                                                 {second_block + base + static_cast<MultiIndex::Variable>(b), 1}}),
                       1);
        }
        return p;
    };
    const auto idx = [](int a, int b) { return "[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]"; };
    for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) {
            constraints.push_back({"XtX" + idx(a, b), entry(0, 0, a, b), 2, 0});
            constraints.push_back({"YtY" + idx(a, b), entry(nk, nk, a, b), 0, 2});
        }
        for (int b = 0; b < k; ++b) constraints.push_back({"XtY" + idx(a, b), entry(0, nk, a, b), 1, 1});
    }

    const auto namer = [&](MultiIndex::Variable v) {
        const bool is_y = v >= nk;
        const int local = static_cast<int>(is_y ? v - nk : v);
        return std::string(is_y ? "Y" : "X") + "[" + std::to_string(local / k + 1) + "," +
               std::to_string(local % k + 1) + "]";
    };
    const auto o_namer = [&](MultiIndex::Variable v) {
        const auto [i, j] = LieAlgebra::o(big_n)->label(static_cast<LieAlgebra::Generator>(v));
        return "M[" + std::to_string(i) + "," + std::to_string(j) + "]";
    };

    FormalVanishingReport report;
    for (const auto& symbol : symbols) {
        MembershipCertificate cert;
        cert.symbol = format(symbol, o_namer);
        const CommutativePolynomial expanded = expand_skew_moment(big_n, k, symbol);
        cert.expansion = format(expanded, namer);
        if (expanded.is_zero()) {
            cert.certified = true;
            cert.vacuous = true;
            report.certificates.push_back(std::move(cert));
            continue;
        }

        std::map<std::pair<unsigned, unsigned>, bool> bidegrees;
        for (const auto& [m, c] : expanded.terms()) {
            unsigned dx = 0, dy = 0;
            for (const auto& [var, exp] : m.entries()) (var < nk ? dx : dy) += exp;
            bidegrees[{dx, dy}] = true;
        }

        struct Column {
            std::size_t constraint;
            MultiIndex cofactor;
        };
        std::vector<Column> columns;
        SpanBasis<CommutativePolynomial::TermMap> span;
        for (const auto& [bd, unused] : bidegrees) {
            for (std::size_t c = 0; c < constraints.size(); ++c) {
                if (constraints[c].x_degree > bd.first || constraints[c].y_degree > bd.second) continue;
                for (const auto& m : bidegree_monomials(xs, ys, bd.first - constraints[c].x_degree,
                                                        bd.second - constraints[c].y_degree)) {
                    columns.push_back({c, m});
                    span.add((constraints[c].value * CommutativePolynomial::monomial(m)).terms());
                }
            }
        }

        if (const auto coeffs = span.express(expanded.terms())) {
            std::vector<CommutativePolynomial> cofactor(constraints.size());
            for (std::size_t col = 0; col < columns.size(); ++col) {
                cofactor[columns[col].constraint].add_term(columns[col].cofactor, (*coeffs)[col]);
            }
            CommutativePolynomial recombined;
            for (std::size_t c = 0; c < constraints.size(); ++c) {
                if (cofactor[c].is_zero()) continue;
                recombined += constraints[c].value * cofactor[c];
                cert.cofactors.emplace_back(constraints[c].name, cofactor[c]);
            }
            cert.certified = recombined == expanded;
        }
        report.certificates.push_back(std::move(cert));
    }
    return report;
}

}  // namespace capelli
