#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace polycauchy {

using BigInt = mpz_class;

/// Exact arbitrary-precision rational, the scalar type of the whole library.
/// Canonical form is maintained after every operation: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
///
/// Serialized as "p/q", or just "p" when the denominator is 1, with an
/// optional leading '-'. parse() accepts exactly that grammar and nothing
/// else (no whitespace, no '+', no decimal points).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // implicit: integer literals are rationals
    Rational(const BigInt& n) : q_(n) {}
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);

    /// Strict parser for the interchange format. Throws std::invalid_argument
    /// on anything outside the grammar, including a zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_positive() const { return sgn(q_) > 0; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ + b.q_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ - b.q_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ * b.q_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        Rational r = a;
        r /= b;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Rational abs(const Rational& r) { return Rational(mpq_class(abs(r.q_))); }

    /// base^exp with exp >= 0; pow(0, 0) = 1.
    friend Rational pow(const Rational& base, unsigned long exp);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : q_(std::move(v)) {}
    mpq_class q_;
};

}  // namespace polycauchy
