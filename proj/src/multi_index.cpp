#include "capelli/multi_index.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace capelli {

MultiIndex MultiIndex::variable(Variable var, Exponent exp) {
    MultiIndex m;
    if (exp > 0) {
        m.entries_.emplace_back(var, exp);
        m.degree_ = exp;
    }
    return m;
}

MultiIndex MultiIndex::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    MultiIndex m;
    for (const auto& [var, exp] : entries) {
        if (exp == 0) continue;
        if (!m.entries_.empty() && m.entries_.back().first == var) {
            m.entries_.back().second += exp;
        } else {
            m.entries_.emplace_back(var, exp);
        }
        m.degree_ += exp;
    }
    return m;
}

MultiIndex::Exponent MultiIndex::exponent(Variable var) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0});
    return (it != entries_.end() && it->first == var) ? it->second : 0;
}

bool MultiIndex::divides(const MultiIndex& other) const {
    auto it = other.entries_.begin();
    for (const auto& [var, exp] : entries_) {
        while (it != other.entries_.end() && it->first < var) ++it;
        if (it == other.entries_.end() || it->first != var || it->second < exp) return false;
    }
    return true;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex out;
    out.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
        if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
            out.entries_.push_back(*i++);
        } else if (i == a.entries_.end() || j->first < i->first) {
            out.entries_.push_back(*j++);
        } else {
            out.entries_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
    if (!b.divides(a)) throw std::invalid_argument("multi-index subtraction would go negative");
    MultiIndex out;
    auto j = b.entries_.begin();
    for (const auto& [var, exp] : a.entries_) {
        MultiIndex::Exponent sub = 0;
        if (j != b.entries_.end() && j->first == var) sub = (j++)->second;
        if (exp > sub) out.entries_.emplace_back(var, exp - sub);
    }
    out.degree_ = a.degree_ - b.degree_;
    return out;
}

int MultiIndex::lex_compare(const MultiIndex& a, const MultiIndex& b) {
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    for (; i != a.entries_.end() && j != b.entries_.end(); ++i, ++j) {
        if (i->first != j->first) return i->first < j->first ? 1 : -1;
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
    }
    if (i != a.entries_.end()) return 1;
    if (j != b.entries_.end()) return -1;
    return 0;
}

std::size_t MultiIndex::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& [var, exp] : entries_) {
        h ^= (static_cast<std::size_t>(var) << 32) | exp;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace capelli
