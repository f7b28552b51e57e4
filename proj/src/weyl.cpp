#include "capelli/weyl.hpp"

#include <stdexcept>
#include <vector>

namespace capelli {

MultiIndex::Variable WeylShape::variable(int i, int a) const {
    if (!contains(i, a)) {
        throw std::out_of_range("variable index [" + std::to_string(i) + "," + std::to_string(a) +
                                "] outside shape " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    return static_cast<MultiIndex::Variable>((i - 1) * cols + (a - 1));
}

std::pair<int, int> WeylShape::position(MultiIndex::Variable v) const {
    const int idx = static_cast<int>(v);
    return {idx / cols + 1, idx % cols + 1};
}

WeylElement WeylElement::constant(WeylShape shape, const Rational& c) {
    WeylElement e(shape);
    e.add_term(WeylMonomial{}, c);
    return e;
}

WeylElement WeylElement::x(WeylShape shape, int i, int a) {
    WeylElement e(shape);
    e.add_term(WeylMonomial{MultiIndex::variable(shape.variable(i, a)), {}}, 1);
    return e;
}

WeylElement WeylElement::d(WeylShape shape, int i, int a) {
    WeylElement e(shape);
    e.add_term(WeylMonomial{{}, MultiIndex::variable(shape.variable(i, a))}, 1);
    return e;
}

int WeylElement::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

void WeylElement::add_term(const WeylMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void WeylElement::check_shape(const WeylElement& o) const {
    if (!(shape_ == o.shape_)) throw std::invalid_argument("Weyl element shape mismatch");
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    check_shape(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    check_shape(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

namespace {

// C(b,nu) C(c,nu) nu! for small exponents.
long contraction_weight(unsigned b, unsigned c, unsigned nu) {
    long w = 1;
    for (unsigned t = 0; t < nu; ++t) w = w * (b - t) * (c - t) / (t + 1);
    return w;
}

void multiply_monomials(const WeylMonomial& left, const WeylMonomial& right, const Rational& coeff,
                        WeylElement& out) {
    struct Overlap {
        MultiIndex::Variable var;
        unsigned d_exp;
        unsigned x_exp;
    };
    std::vector<Overlap> overlaps;
    {
        auto i = left.d.entries().begin();
        auto j = right.x.entries().begin();
        while (i != left.d.entries().end() && j != right.x.entries().end()) {
            if (i->first < j->first) {
                ++i;
            } else if (j->first < i->first) {
                ++j;
            } else {
                overlaps.push_back({i->first, i->second, j->second});
                ++i;
                ++j;
            }
        }
    }

    const MultiIndex x_sum = left.x + right.x;
    const MultiIndex d_sum = left.d + right.d;
    if (overlaps.empty()) {
        out.add_term(WeylMonomial{x_sum, d_sum}, coeff);
        return;
    }

    std::vector<unsigned> nu(overlaps.size(), 0);
    while (true) {
        Rational weight = coeff;
        std::vector<MultiIndex::Entry> removed;
        for (std::size_t t = 0; t < overlaps.size(); ++t) {
            if (nu[t] == 0) continue;
            weight *= Rational(contraction_weight(overlaps[t].d_exp, overlaps[t].x_exp, nu[t]));
            removed.emplace_back(overlaps[t].var, nu[t]);
        }
        const MultiIndex contracted = MultiIndex::from_entries(std::move(removed));
        out.add_term(WeylMonomial{x_sum - contracted, d_sum - contracted}, weight);

        std::size_t t = 0;
        for (; t < overlaps.size(); ++t) {
            const unsigned limit = std::min(overlaps[t].d_exp, overlaps[t].x_exp);
            if (nu[t] < limit) {
                ++nu[t];
                break;
            }
            nu[t] = 0;
        }
        if (t == overlaps.size()) break;
    }
}

}  // namespace

WeylElement operator*(const WeylElement& a, const WeylElement& b) { return weyl_product(a, b); }

WeylElement weyl_product(const WeylElement& a, const WeylElement& b) {
    if (!(a.shape() == b.shape())) throw std::invalid_argument("Weyl element shape mismatch");
    WeylElement out(a.shape());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) multiply_monomials(ma, mb, ca * cb, out);
    }
    return out;
}

WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b) {
    return weyl_product(a, b) - weyl_product(b, a);
}

WeylElement pow(const WeylElement& a, unsigned e) {
    WeylElement out = one_like(a);
    for (unsigned i = 0; i < e; ++i) out = out * a;
    return out;
}

CommutativePolynomial weyl_apply(const WeylElement& a, const CommutativePolynomial& p) {
    const auto pairs = static_cast<MultiIndex::Variable>(a.shape().pairs());
    for (const auto& [m, c] : p.terms()) {
        if (!m.empty() && m.entries().back().first >= pairs) {
            throw std::invalid_argument("weyl_apply: polynomial variable outside the x variables of the shape");
        }
    }
    CommutativePolynomial out;
    for (const auto& [wm, wc] : a.terms()) {
        for (const auto& [pm, pc] : p.terms()) {
            if (!wm.d.divides(pm)) continue;
            Rational coeff = wc * pc;
            for (const auto& [var, exp] : wm.d.entries()) {
                const unsigned have = pm.exponent(var);
                for (unsigned t = 0; t < exp; ++t) coeff *= Rational(static_cast<long>(have - t));
            }
            out.add_term(wm.x + (pm - wm.d), coeff);
        }
    }
    return out;
}

CommutativePolynomial weyl_symbol(const WeylElement& a) {
    CommutativePolynomial out;
    const int top = a.degree();
    const auto shift = static_cast<MultiIndex::Variable>(a.shape().pairs());
    for (const auto& [m, c] : a.terms()) {
        if (static_cast<int>(m.degree()) != top) break;
        std::vector<MultiIndex::Entry> entries(m.x.entries().begin(), m.x.entries().end());
        for (const auto& [var, exp] : m.d.entries()) entries.emplace_back(var + shift, exp);
        out.add_term(MultiIndex::from_entries(std::move(entries)), c);
    }
    return out;
}

namespace {

std::string indexed(const char* head, std::pair<int, int> pos) {
    return std::string(head) + "[" + std::to_string(pos.first) + "," + std::to_string(pos.second) + "]";
}

void append_factor(std::string& mono, const std::string& atom, MultiIndex::Exponent exp) {
    if (!mono.empty()) mono += "*";
    mono += atom;
    if (exp > 1) mono += "^" + std::to_string(exp);
}

}  // namespace

std::string format(const WeylElement& a) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [m, c] : a.terms()) {
        std::string mono;
        for (const auto& [var, exp] : m.x.entries()) append_factor(mono, indexed("x", a.shape().position(var)), exp);
        for (const auto& [var, exp] : m.d.entries()) append_factor(mono, indexed("d", a.shape().position(var)), exp);
        terms.emplace_back(c, std::move(mono));
    }
    return format_terms(terms);
}

VariableNamer x_namer(WeylShape shape) {
    return [shape](MultiIndex::Variable v) { return indexed("x", shape.position(v)); };
}

VariableNamer symbol_namer(WeylShape shape) {
    return [shape](MultiIndex::Variable v) {
        const auto pairs = static_cast<MultiIndex::Variable>(shape.pairs());
        return v < pairs ? indexed("xi", shape.position(v)) : indexed("eta", shape.position(v - pairs));
    };
}

}  // namespace capelli
