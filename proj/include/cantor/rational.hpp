#pragma once

/**
 * Exact rational scalar used for every interval endpoint and Cantor-function
 * value. Backed by GMP's mpq_class; always stored in lowest terms with a
 * positive denominator.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cantor {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den);

    // Parses "a/b", "a" or "-a/b". Throws DomainError on malformed input or zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    double to_double() const { return q_.get_d(); }
    std::string str() const;  // "a/b", or "a" for integers
    // Decimal rendering to `significant` digits, round-half-even, %g-like layout.
    std::string to_decimal(int significant = 17) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_{0};
};

// base^exp for exp >= 0; negative exponents give the reciprocal.
Rational pow(const Rational& base, long exp);
BigInt ipow(unsigned long base, unsigned long exp);
BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);
Rational abs(const Rational& x);

}  // namespace cantor
