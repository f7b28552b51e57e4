#include "capelli/uea.hpp"

#include <stdexcept>
#include <tuple>

namespace capelli {

namespace {

std::size_t inversions(const Word& w) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j] ? 1 : 0;
    }
    return count;
}

bool is_sorted(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i - 1] > w[i]) return false;
    }
    return true;
}

}  // namespace

/// Rewrites words into PBW form with yx -> xy + [y,x]. Each rewrite lowers
/// (length, inversions), so processing pending words in decreasing order of
/// that key visits every word at most once.
class PbwStraightener {
public:
    PbwStraightener(const LieAlgebra& algebra, RewriteStrategy strategy) : algebra_(algebra), strategy_(strategy) {}

    void seed(const Word& w, const Rational& c) {
        if (c.is_zero()) return;
        auto key = std::make_tuple(w.size(), inversions(w), w);
        auto [it, inserted] = pending_.try_emplace(std::move(key), c);
        if (!inserted) it->second += c;
    }

    void run(UEAElement& out) {
        while (!pending_.empty()) {
            auto node = pending_.extract(pending_.begin());
            const Rational& c = node.mapped();
            if (c.is_zero()) continue;
            const Word& w = std::get<2>(node.key());
            if (std::get<1>(node.key()) == 0) {
                out.add_sorted(w, c);
                continue;
            }
            const std::size_t i = find_descent(w);
            Word swapped = w;
            std::swap(swapped[i], swapped[i + 1]);
            seed(swapped, c);
            for (const auto& [g, e] : algebra_.bracket(w[i], w[i + 1])) {
                Word shorter;
                shorter.reserve(w.size() - 1);
                shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                shorter.push_back(g);
                shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
                seed(shorter, c * e);
            }
        }
    }

private:
    std::size_t find_descent(const Word& w) const {
        if (strategy_ == RewriteStrategy::leftmost) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                if (w[i] > w[i + 1]) return i;
            }
        } else {
            for (std::size_t i = w.size() - 1; i > 0; --i) {
                if (w[i - 1] > w[i]) return i - 1;
            }
        }
        throw std::logic_error("find_descent on a sorted word");
    }

    using Key = std::tuple<std::size_t, std::size_t, Word>;
    const LieAlgebra& algebra_;
    RewriteStrategy strategy_;
    std::map<Key, Rational, std::greater<>> pending_;
};

UEAElement::UEAElement(LieAlgebraPtr algebra) : algebra_(std::move(algebra)) {
    if (!algebra_) throw std::invalid_argument("UEAElement requires an algebra");
}

UEAElement UEAElement::constant(LieAlgebraPtr algebra, const Rational& c) {
    UEAElement e(std::move(algebra));
    e.add_sorted({}, c);
    return e;
}

UEAElement UEAElement::generator(LieAlgebraPtr algebra, LieAlgebra::Generator g) {
    if (g >= algebra->dimension()) throw std::out_of_range("generator index outside algebra");
    UEAElement e(std::move(algebra));
    e.add_sorted({g}, 1);
    return e;
}

UEAElement UEAElement::entry(LieAlgebraPtr algebra, int i, int j) {
    const auto ent = algebra->entry(i, j);
    UEAElement e(std::move(algebra));
    if (ent) e.add_sorted({ent->generator}, Rational(ent->sign));
    return e;
}

UEAElement UEAElement::from_word(LieAlgebraPtr algebra, const Word& word, const Rational& c,
                                 RewriteStrategy strategy) {
    for (const auto g : word) {
        if (g >= algebra->dimension()) throw std::out_of_range("generator index outside algebra");
    }
    UEAElement out(algebra);
    if (is_sorted(word)) {
        out.add_sorted(word, c);
        return out;
    }
    PbwStraightener s(*algebra, strategy);
    s.seed(word, c);
    s.run(out);
    return out;
}

UEAElement UEAElement::from_words(LieAlgebraPtr algebra, const std::vector<std::pair<Word, Rational>>& words,
                                  RewriteStrategy strategy) {
    UEAElement out(algebra);
    PbwStraightener s(*algebra, strategy);
    for (const auto& [word, c] : words) {
        for (const auto g : word) {
            if (g >= algebra->dimension()) throw std::out_of_range("generator index outside algebra");
        }
        if (is_sorted(word)) {
            out.add_sorted(word, c);
        } else {
            s.seed(word, c);
        }
    }
    s.run(out);
    return out;
}

int UEAElement::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
}

void UEAElement::add_sorted(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void UEAElement::check_algebra(const UEAElement& o) const {
    if (!(*algebra_ == *o.algebra_)) {
        throw std::invalid_argument("algebra mismatch: " + algebra_->name() + " vs " + o.algebra_->name());
    }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    check_algebra(o);
    for (const auto& [w, c] : o.terms_) add_sorted(w, c);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
    check_algebra(o);
    for (const auto& [w, c] : o.terms_) add_sorted(w, -c);
    return *this;
}

UEAElement& UEAElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) { return uea_product(a, b); }

UEAElement uea_product(const UEAElement& a, const UEAElement& b, RewriteStrategy strategy) {
    a.check_algebra(b);
    UEAElement out(a.algebra());
    PbwStraightener s(*a.algebra(), strategy);
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            if (wa.empty() || wb.empty() || wa.back() <= wb.front()) {
                out.add_sorted(w, ca * cb);
            } else {
                s.seed(w, ca * cb);
            }
        }
    }
    s.run(out);
    return out;
}

UEAElement uea_ad(LieAlgebra::Generator x, const UEAElement& a) {
    const UEAElement gx = UEAElement::generator(a.algebra(), x);
    return uea_product(gx, a) - uea_product(a, gx);
}

UEAElement uea_commutator(const UEAElement& a, const UEAElement& b) { return a * b - b * a; }

UEAElement pow(const UEAElement& a, unsigned e) {
    UEAElement out = one_like(a);
    for (unsigned i = 0; i < e; ++i) out = out * a;
    return out;
}

CommutativePolynomial uea_symbol(const UEAElement& a) {
    CommutativePolynomial out;
    const int top = a.degree();
    for (const auto& [w, c] : a.terms()) {
        if (static_cast<int>(w.size()) != top) break;
        std::vector<MultiIndex::Entry> entries;
        for (const auto g : w) entries.emplace_back(g, 1);
        out.add_term(MultiIndex::from_entries(std::move(entries)), c);
    }
    return out;
}

std::string format(const UEAElement& a) {
    const LieAlgebra& alg = *a.algebra();
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [w, c] : a.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            const auto [r, s] = alg.label(w[i]);
            if (!mono.empty()) mono += "*";
            mono += std::string(1, alg.atom()) + "[" + std::to_string(r) + "," + std::to_string(s) + "]";
            if (j - i > 1) mono += "^" + std::to_string(j - i);
            i = j;
        }
        terms.emplace_back(c, std::move(mono));
    }
    return format_terms(terms);
}

VariableNamer symbol_namer(const LieAlgebra& algebra) {
    std::vector<std::pair<int, int>> labels;
    for (std::size_t g = 0; g < algebra.dimension(); ++g) labels.push_back(algebra.label(static_cast<LieAlgebra::Generator>(g)));
    return [labels](MultiIndex::Variable v) {
        return "M[" + std::to_string(labels[v].first) + "," + std::to_string(labels[v].second) + "]";
    };
}

}  // namespace capelli
