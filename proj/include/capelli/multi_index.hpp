#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace capelli {

/// Sparse exponent vector: sorted (variable, exponent) pairs with no zero
/// exponents stored.
class MultiIndex {
public:
    using Variable = std::uint32_t;
    using Exponent = std::uint32_t;
    using Entry = std::pair<Variable, Exponent>;

    MultiIndex() = default;

    static MultiIndex variable(Variable var, Exponent exp = 1);
    /// Accepts entries in any order; repeated variables are summed and zero
    /// exponents dropped.
    static MultiIndex from_entries(std::vector<Entry> entries);

    Exponent exponent(Variable var) const;
    Exponent degree() const { return degree_; }
    bool empty() const { return entries_.empty(); }
    std::span<const Entry> entries() const { return entries_; }

    /// Componentwise this <= other.
    bool divides(const MultiIndex& other) const;

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
    /// Requires b.divides(a).
    friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.entries_ == b.entries_; }

    /// Pure lexicographic comparison on exponent vectors ordered by variable
    /// id: positive when a has the larger exponent at the first variable
    /// where they differ.
    static int lex_compare(const MultiIndex& a, const MultiIndex& b);

    std::size_t hash() const;

private:
    std::vector<Entry> entries_;
    Exponent degree_ = 0;
};

/// Graded lexicographic order, largest first. Iterating a map keyed with
/// this comparator yields canonical printing order.
struct DegLexDescending {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return MultiIndex::lex_compare(a, b) > 0;
    }
};

}  // namespace capelli
