#pragma once

#include "capelli/rational.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace capelli {

/// Rectangular matrix with entries in a (possibly noncommutative) ring:
/// WeylElement, UEAElement or CommutativePolynomial. Indices are 0-based.
///
/// The ring type must provide +, -, * (ring product), scaling by Rational,
/// is_zero(), and the free functions zero_like / one_like found by ADL.
template <class Ring>
class OperatorMatrix {
public:
    OperatorMatrix(std::size_t rows, std::size_t cols, const Ring& fill)
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("operator matrix must be nonempty");
    }

    template <class F>
    static OperatorMatrix generate(std::size_t rows, std::size_t cols, F&& f) {
        OperatorMatrix m(rows, cols, f(std::size_t{0}, std::size_t{0}));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                if (i != 0 || j != 0) m(i, j) = f(i, j);
            }
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Ring& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
    const Ring& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

    std::span<const Ring> entries() const { return entries_; }

    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Ring> entries_;
};

/// (A B)_ij = sum_l A_il B_lj, factors kept in left-to-right order.
template <class Ring>
OperatorMatrix<Ring> operator*(const OperatorMatrix<Ring>& a, const OperatorMatrix<Ring>& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("operator matrix product: inner dimensions " + std::to_string(a.cols()) +
                                    " and " + std::to_string(b.rows()) + " differ");
    }
    return OperatorMatrix<Ring>::generate(a.rows(), b.cols(), [&](std::size_t i, std::size_t j) {
        Ring sum = zero_like(a(0, 0));
        for (std::size_t l = 0; l < a.cols(); ++l) sum += a(i, l) * b(l, j);
        return sum;
    });
}

template <class Ring>
OperatorMatrix<Ring> operator+(const OperatorMatrix<Ring>& a, const OperatorMatrix<Ring>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("operator matrix sum: shape mismatch");
    return OperatorMatrix<Ring>::generate(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) { return a(i, j) + b(i, j); });
}

template <class Ring>
OperatorMatrix<Ring> operator-(const OperatorMatrix<Ring>& a, const OperatorMatrix<Ring>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("operator matrix difference: shape mismatch");
    return OperatorMatrix<Ring>::generate(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) { return a(i, j) - b(i, j); });
}

template <class Ring>
OperatorMatrix<Ring> operator*(const Rational& c, const OperatorMatrix<Ring>& a) {
    return OperatorMatrix<Ring>::generate(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) { return a(i, j) * c; });
}

template <class Ring>
OperatorMatrix<Ring> transpose(const OperatorMatrix<Ring>& a) {
    return OperatorMatrix<Ring>::generate(a.cols(), a.rows(), [&](std::size_t i, std::size_t j) { return a(j, i); });
}

/// A + c I.
template <class Ring>
OperatorMatrix<Ring> add_identity(const OperatorMatrix<Ring>& a, const Rational& c) {
    if (!a.is_square()) throw std::invalid_argument("add_identity: matrix is not square");
    OperatorMatrix<Ring> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) += one_like(a(0, 0)) * c;
    return out;
}

template <class Ring>
OperatorMatrix<Ring> identity_like(const OperatorMatrix<Ring>& a) {
    if (!a.is_square()) throw std::invalid_argument("identity_like: matrix is not square");
    return OperatorMatrix<Ring>::generate(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
        return i == j ? one_like(a(0, 0)) : zero_like(a(0, 0));
    });
}

template <class Ring>
Ring trace(const OperatorMatrix<Ring>& a) {
    if (!a.is_square()) throw std::invalid_argument("trace: matrix is not square");
    Ring sum = zero_like(a(0, 0));
    for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
    return sum;
}

/// p(A) for p(u) = coefficients[0] + coefficients[1] u + ... ; powers are
/// taken with operator matrix products.
template <class Ring>
OperatorMatrix<Ring> matrix_poly_eval(const OperatorMatrix<Ring>& a, std::span<const Rational> coefficients) {
    if (!a.is_square()) throw std::invalid_argument("matrix_poly_eval: matrix is not square");
    const Ring zero = zero_like(a(0, 0));
    OperatorMatrix<Ring> result(a.rows(), a.cols(), zero);
    OperatorMatrix<Ring> power = identity_like(a);
    for (std::size_t d = 0; d < coefficients.size(); ++d) {
        if (d > 0) power = power * a;
        if (!coefficients[d].is_zero()) result = result + coefficients[d] * power;
    }
    return result;
}

/// Maps every entry through f, possibly into another ring.
template <class Ring, class F>
auto map_entries(const OperatorMatrix<Ring>& a, F&& f) {
    using Out = decltype(f(a(0, 0)));
    return OperatorMatrix<Out>::generate(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) { return f(a(i, j)); });
}

template <class Ring>
bool is_zero(const OperatorMatrix<Ring>& a) {
    for (const auto& e : a.entries()) {
        if (!e.is_zero()) return false;
    }
    return true;
}

}  // namespace capelli
