#include "capelli/linalg.hpp"

namespace capelli {

RowEchelon row_reduce(const RationalMatrix& m) {
    RowEchelon out{m, {}};
    RationalMatrix& a = out.reduced;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < a.rows(); ++r) {
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) a.row(pivot).swap(a.row(row));

        const Rational inv = Rational(1) / a(row, col);
        for (Eigen::Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const Rational f = a(r, col);
            for (Eigen::Index c = col; c < a.cols(); ++c) {
                if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
            }
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    return out;
}

Eigen::Index rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

std::optional<RationalVector> solve_linear_system(const RationalMatrix& m, const RationalVector& rhs) {
    if (rhs.size() != m.rows()) {
        throw std::invalid_argument("solve_linear_system: rhs length " + std::to_string(rhs.size()) +
                                    " != row count " + std::to_string(m.rows()));
    }
    RationalMatrix augmented(m.rows(), m.cols() + 1);
    augmented.leftCols(m.cols()) = m;
    augmented.col(m.cols()) = rhs;
    const RowEchelon ech = row_reduce(augmented);
    if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == m.cols()) return std::nullopt;

    RationalVector x = RationalVector::Constant(m.cols(), Rational(0));
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
        x(ech.pivot_columns[r]) = ech.reduced(static_cast<Eigen::Index>(r), m.cols());
    }
    return x;
}

std::optional<std::vector<Rational>> span_membership(const std::vector<RationalVector>& candidates,
                                                     const RationalVector& target) {
    for (const auto& c : candidates) {
        if (c.size() != target.size()) throw std::invalid_argument("span_membership: mismatched index sets");
    }
    RationalMatrix m(target.size(), static_cast<Eigen::Index>(candidates.size()));
    for (std::size_t j = 0; j < candidates.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = candidates[j];
    const auto x = solve_linear_system(m, target);
    if (!x) return std::nullopt;
    return std::vector<Rational>(x->begin(), x->end());
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
    const RowEchelon ech = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (const auto c : ech.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<RationalVector> basis;
    for (Eigen::Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        RationalVector v = RationalVector::Constant(m.cols(), Rational(0));
        v(free) = 1;
        for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
            v(ech.pivot_columns[r]) = -ech.reduced(static_cast<Eigen::Index>(r), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix to_rational(const Eigen::MatrixXi& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    }
    return out;
}

}  // namespace capelli
