#include "capelli/lie_algebra.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace capelli {

namespace {

using SparseMap = std::map<LieAlgebra::Generator, Rational>;

void accumulate(SparseMap& out, const LieAlgebra& alg, int i, int j, int coeff) {
    if (coeff == 0) return;
    const auto e = alg.entry(i, j);
    if (!e) return;
    Rational& slot = out[e->generator];
    slot += Rational(coeff * e->sign);
    if (slot.is_zero()) out.erase(e->generator);
}

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

LieAlgebra::LieAlgebra(LieType type, int size) : type_(type), size_(size) {
    if (size < 1) throw std::invalid_argument("Lie algebra size must be positive");
    index_.assign(static_cast<std::size_t>(size * size), -1);
    for (int i = 1; i <= size; ++i) {
        for (int j = (type == LieType::gl ? 1 : i + 1); j <= size; ++j) {
            index_[static_cast<std::size_t>((i - 1) * size + (j - 1))] = static_cast<int>(labels_.size());
            labels_.emplace_back(i, j);
        }
    }

    const std::size_t dim = labels_.size();
    table_.resize(dim * dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            const auto [i, j] = labels_[a];
            const auto [k, l] = labels_[b];
            SparseMap out;
            if (type == LieType::gl) {
                accumulate(out, *this, i, l, delta(j, k));
                accumulate(out, *this, k, j, -delta(l, i));
            } else {
                accumulate(out, *this, i, l, delta(j, k));
                accumulate(out, *this, j, l, -delta(i, k));
                accumulate(out, *this, i, k, -delta(j, l));
                accumulate(out, *this, j, k, delta(i, l));
            }
            table_[a * dim + b] = SparseVector(out.begin(), out.end());
        }
    }
}

// One validated instance per (type, size).
std::shared_ptr<const LieAlgebra> LieAlgebra::gl(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const LieAlgebra>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        std::shared_ptr<const LieAlgebra> alg(new LieAlgebra(LieType::gl, n));
        if (const auto err = alg->check_axioms(); !err.empty()) throw std::logic_error(err);
        slot = std::move(alg);
    }
    return slot;
}

std::shared_ptr<const LieAlgebra> LieAlgebra::o(int n) {
    if (n < 2) throw std::invalid_argument("o_N requires N >= 2");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const LieAlgebra>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        std::shared_ptr<const LieAlgebra> alg(new LieAlgebra(LieType::o, n));
        if (const auto err = alg->check_axioms(); !err.empty()) throw std::logic_error(err);
        slot = std::move(alg);
    }
    return slot;
}

std::string LieAlgebra::name() const {
    return std::string(type_ == LieType::gl ? "gl_" : "o_") + std::to_string(size_);
}

std::optional<LieAlgebra::Entry> LieAlgebra::entry(int i, int j) const {
    if (i < 1 || j < 1 || i > size_ || j > size_) {
        throw std::out_of_range(std::string(1, atom()) + "[" + std::to_string(i) + "," + std::to_string(j) +
                                "] outside " + name());
    }
    if (type_ == LieType::o) {
        if (i == j) return std::nullopt;
        if (i > j) return Entry{generator(j, i), -1};
    }
    return Entry{generator(i, j), 1};
}

LieAlgebra::Generator LieAlgebra::generator(int i, int j) const {
    const int idx = (i >= 1 && j >= 1 && i <= size_ && j <= size_) ? index_[static_cast<std::size_t>((i - 1) * size_ + (j - 1))] : -1;
    if (idx < 0) {
        throw std::out_of_range("no basis generator " + std::string(1, atom()) + "[" + std::to_string(i) + "," +
                                std::to_string(j) + "] in " + name());
    }
    return static_cast<Generator>(idx);
}

std::string LieAlgebra::check_axioms() const {
    const auto dim = static_cast<Generator>(dimension());
    const auto label_text = [this](Generator g) {
        return std::string(1, atom()) + "[" + std::to_string(labels_[g].first) + "," +
               std::to_string(labels_[g].second) + "]";
    };
    for (Generator a = 0; a < dim; ++a) {
        for (Generator b = 0; b < dim; ++b) {
            SparseMap sum;
            for (const auto& [g, c] : bracket(a, b)) sum[g] += c;
            for (const auto& [g, c] : bracket(b, a)) sum[g] += c;
            for (const auto& [g, c] : sum) {
                if (!c.is_zero()) return "antisymmetry fails for " + label_text(a) + ", " + label_text(b);
            }
        }
    }
    // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0
    const auto nested = [this](SparseMap& out, Generator x, const SparseVector& inner) {
        for (const auto& [g, c] : inner) {
            for (const auto& [h, e] : bracket(x, g)) out[h] += c * e;
        }
    };
    for (Generator a = 0; a < dim; ++a) {
        for (Generator b = 0; b < dim; ++b) {
            for (Generator c = 0; c < dim; ++c) {
                SparseMap sum;
                nested(sum, a, bracket(b, c));
                nested(sum, b, bracket(c, a));
                nested(sum, c, bracket(a, b));
                for (const auto& [g, v] : sum) {
                    if (!v.is_zero()) {
                        return "Jacobi identity fails for " + label_text(a) + ", " + label_text(b) + ", " +
                               label_text(c);
                    }
                }
            }
        }
    }
    return {};
}

}  // namespace capelli
