#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace dilworth {

/// Exact rational in canonical form (den > 0, gcd 1, zero is 0/1).
/// Thin value wrapper over GMP's mpq_class.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long num) : q_(num) {}  // NOLINT: implicit integer promotion is intended
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Accepts "p", "p/q", "-p/q".
    static Rational parse(const std::string& text);

    const mpq_class& value() const noexcept { return q_; }
    mpq_class& value() noexcept { return q_; }

    std::string numerator() const { return q_.get_num().get_str(); }
    std::string denominator() const { return q_.get_den().get_str(); }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;
    double to_double() const { return q_.get_d(); }
    /// log2 of a positive rational, accurate for huge numerators/denominators.
    double log2() const;

    Rational pow(unsigned exponent) const;
    /// Smallest integer >= this.
    long ceil() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

}  // namespace dilworth
