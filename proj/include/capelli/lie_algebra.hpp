#pragma once

#include "capelli/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

enum class LieType { gl, o };

/// Finite-dimensional Lie algebra given by an ordered basis and a table of
/// structure constants. Basis labels are 1-based index pairs; the basis is
/// ordered lexicographically on them.
///
///   gl_n: E[i,j] for all i, j;  [E_ij, E_kl] = d_jk E_il - d_li E_kj
///   o_N:  F[i,j] for i < j;     [F_ij, F_kl] = d_jk F_il - d_ik F_jl - d_jl F_ik + d_il F_jk
///
/// with F_ji = -F_ij and F_ii = 0 used to resolve out-of-range labels.
class LieAlgebra {
public:
    using Generator = std::uint16_t;
    using SparseVector = std::vector<std::pair<Generator, Rational>>;

    /// Matrix entry (i,j) of the generator matrix E or F expressed in the
    /// basis: a signed basis element, or nothing for F_ii.
    struct Entry {
        Generator generator;
        int sign;
    };

    static std::shared_ptr<const LieAlgebra> gl(int n);
    static std::shared_ptr<const LieAlgebra> o(int n);

    LieType type() const { return type_; }
    int size() const { return size_; }
    std::size_t dimension() const { return labels_.size(); }
    std::string name() const;
    /// "E" for gl, "F" for o.
    char atom() const { return type_ == LieType::gl ? 'E' : 'F'; }

    std::pair<int, int> label(Generator g) const { return labels_[g]; }
    std::optional<Entry> entry(int i, int j) const;
    Generator generator(int i, int j) const;

    const SparseVector& bracket(Generator a, Generator b) const { return table_[a * dimension() + b]; }

    /// Checks antisymmetry and the Jacobi identity on all basis triples.
    /// Returns an empty string on success, otherwise a description of the
    /// first violation.
    std::string check_axioms() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.type_ == b.type_ && a.size_ == b.size_;
    }

private:
    LieAlgebra(LieType type, int size);

    LieType type_;
    int size_;
    std::vector<std::pair<int, int>> labels_;
    std::vector<int> index_;  // size*size lookup, -1 when not a basis label
    std::vector<SparseVector> table_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

}  // namespace capelli
