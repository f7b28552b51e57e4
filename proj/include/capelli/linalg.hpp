#pragma once

#include "capelli/rational.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace Eigen {
template <>
struct NumTraits<capelli::Rational> : GenericNumTraits<capelli::Rational> {
    using Real = capelli::Rational;
    using NonInteger = capelli::Rational;
    using Literal = capelli::Rational;
    using Nested = capelli::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };
    static inline int digits10() { return 0; }
    static inline int max_digits10() { return 0; }
};
}  // namespace Eigen

namespace capelli {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// scanning columns left to right and rows top to bottom.
struct RowEchelon {
    RationalMatrix reduced;
    std::vector<Eigen::Index> pivot_columns;

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_columns.size()); }
};

RowEchelon row_reduce(const RationalMatrix& m);

Eigen::Index rank(const RationalMatrix& m);

/// Any exact solution of m * x = rhs (free variables set to zero), or
/// nullopt when the system is inconsistent. Throws std::invalid_argument on a
/// dimension mismatch.
std::optional<RationalVector> solve_linear_system(const RationalMatrix& m, const RationalVector& rhs);

/// Coefficients c with sum_i c_i * candidates[i] == target, or nullopt.
std::optional<std::vector<Rational>> span_membership(const std::vector<RationalVector>& candidates,
                                                     const RationalVector& target);

/// Basis of the right kernel, one vector per free column, in column order.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

RationalMatrix to_rational(const Eigen::MatrixXi& m);

/// Incremental sparse echelon basis over vectors stored as ordered maps
/// (monomial -> coefficient). Keeps every basis vector reduced against the
/// pivots of the others and remembers how each was built from the
/// candidates, so membership queries return explicit certificates.
template <class SparseVector>
class SpanBasis {
public:
    using Key = typename SparseVector::key_type;

    /// Returns true if the candidate enlarged the span.
    bool add(const SparseVector& candidate) {
        const std::size_t id = candidate_count_++;
        SparseVector v = candidate;
        std::map<std::size_t, Rational> expr{{id, Rational(1)}};
        reduce(v, expr);
        if (v.empty()) return false;

        const Key pivot = v.begin()->first;
        const Rational inv = Rational(1) / v.begin()->second;
        for (auto& [key, c] : v) c *= inv;
        for (auto& [cid, c] : expr) c *= inv;

        for (auto& row : rows_) {
            const auto it = row.vector.find(pivot);
            if (it == row.vector.end()) continue;
            const Rational f = it->second;
            axpy(row.vector, -f, v);
            axpy(row.expression, -f, expr);
        }
        pivot_index_.emplace(pivot, rows_.size());
        rows_.push_back(Row{pivot, std::move(v), std::move(expr)});
        return true;
    }

    std::size_t dimension() const { return rows_.size(); }
    std::size_t candidate_count() const { return candidate_count_; }

    /// Coefficients (indexed by candidate insertion order) expressing the
    /// target, or nullopt when the target is outside the span.
    std::optional<std::vector<Rational>> express(const SparseVector& target) const {
        SparseVector v = target;
        std::map<std::size_t, Rational> expr;
        reduce(v, expr);
        if (!v.empty()) return std::nullopt;
        std::vector<Rational> out(candidate_count_);
        for (const auto& [cid, c] : expr) out[cid] = -c;
        return out;
    }

    bool contains(const SparseVector& target) const { return express(target).has_value(); }

private:
    struct Row {
        Key pivot;
        SparseVector vector;
        std::map<std::size_t, Rational> expression;
    };

    template <class Map>
    static void axpy(Map& y, const Rational& a, const Map& x) {
        for (const auto& [key, c] : x) {
            auto [it, inserted] = y.try_emplace(key, a * c);
            if (!inserted) {
                it->second += a * c;
                if (it->second.is_zero()) y.erase(it);
            }
        }
    }

    void reduce(SparseVector& v, std::map<std::size_t, Rational>& expr) const {
        std::vector<std::pair<std::size_t, Rational>> hits;
        for (const auto& [key, c] : v) {
            const auto p = pivot_index_.find(key);
            if (p != pivot_index_.end()) hits.emplace_back(p->second, c);
        }
        for (const auto& [row, c] : hits) {
            axpy(v, -c, rows_[row].vector);
            axpy(expr, -c, rows_[row].expression);
        }
    }

    std::vector<Row> rows_;
    std::map<Key, std::size_t, typename SparseVector::key_compare> pivot_index_;
    std::size_t candidate_count_ = 0;
};

}  // namespace capelli
