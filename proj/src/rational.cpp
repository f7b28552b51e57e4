#include "capelli/rational.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace capelli {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    const auto slash = s.find('/');
    const auto digits_ok = [](const std::string& part) {
        std::size_t i = (!part.empty() && part.front() == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') return false;
        }
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || den.front() == '-') {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q(n, d);
    return Rational(std::move(q));
}

long Rational::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p()) {
        throw std::overflow_error("rational " + str() + " is not a machine integer");
    }
    return q_.get_num().get_si();
}

std::size_t Rational::hash() const {
    const std::size_t h1 = std::hash<std::string>{}(q_.get_num().get_str(16));
    const std::size_t h2 = std::hash<std::string>{}(q_.get_den().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational binomial(unsigned n, unsigned k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return Rational(mpq_class(out));
}

Rational factorial(unsigned n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return Rational(mpq_class(out));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace capelli
