#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace egyptian {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown for non-finite constructions (zero denominator, division by zero)
/// and for unparseable rational literals.
struct arithmetic_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Arbitrary-precision rational kept in canonical form at all times:
/// gcd(num, den) == 1, den > 0, zero is 0/1. Two Rationals are equal as
/// values iff their fields are identical, so the default comparisons on
/// (num, den) would be sound; ordering still goes through cross
/// multiplication to get the numeric total order.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational abs() const;
    Rational reciprocal() const;
    /// Largest integer <= *this.
    BigInt floor() const;
    /// Smallest integer >= *this.
    BigInt ceil() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt l = a.num_ * b.den_, r = b.num_ * a.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

  private:
    BigInt num_, den_;  // den_ > 0, gcd == 1
    void normalize();
};

/// Parses "p", "-p", "p/q" with optional surrounding whitespace. The result is
/// canonical ("3/6" parses to 1/2). Rejects empty input, junk, and q == 0.
Rational rat_parse(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise, '-' on the numerator.
std::string rat_format(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace egyptian
