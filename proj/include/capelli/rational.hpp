#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

namespace capelli {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(long numerator, long denominator);
    explicit Rational(mpq_class q);

    /// Parses "7", "-3/2", "+4/6" (reduced on construction).
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string numerator() const { return q_.get_num().get_str(); }
    std::string denominator() const { return q_.get_den().get_str(); }
    std::string str() const { return q_.get_str(); }

    /// Exact conversion; throws std::overflow_error unless the value is an
    /// integer that fits in a long.
    long to_long() const;

    std::size_t hash() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

Rational abs(const Rational& r);

/// n choose k as an exact integer.
Rational binomial(unsigned n, unsigned k);
Rational factorial(unsigned n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace capelli

template <>
struct std::hash<capelli::Rational> {
    std::size_t operator()(const capelli::Rational& r) const { return r.hash(); }
};
