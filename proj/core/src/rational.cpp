#include "egyptian/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <ostream>

namespace egyptian {

void Rational::normalize() {
    if (den_ == 0) throw arithmetic_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
}

Rational Rational::abs() const {
    return num_ < 0 ? Rational(-num_, den_) : *this;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw arithmetic_error("reciprocal of zero");
    return Rational(den_, num_);
}

BigInt Rational::floor() const {
    if (den_ == 1) return num_;
    BigInt q = num_ / den_;
    if (num_ < 0) q -= 1;  // C++ division truncates toward zero
    return q;
}

BigInt Rational::ceil() const {
    if (den_ == 1) return num_;
    BigInt q = num_ / den_;
    if (num_ > 0) q += 1;
    return q;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw arithmetic_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational rat_parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw arithmetic_error("empty rational literal");
    bool neg = false;
    if (s.front() == '-' || s.front() == '+') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num_part = s, den_part;
    if (auto pos = s.find('/'); pos != std::string_view::npos) {
        num_part = s.substr(0, pos);
        den_part = s.substr(pos + 1);
        if (!all_digits(den_part))
            throw arithmetic_error("bad rational literal: '" + std::string(text) + "'");
    }
    if (!all_digits(num_part))
        throw arithmetic_error("bad rational literal: '" + std::string(text) + "'");
    BigInt n{std::string(num_part)};
    BigInt d = den_part.empty() ? BigInt(1) : BigInt{std::string(den_part)};
    if (d == 0) throw arithmetic_error("zero denominator in '" + std::string(text) + "'");
    if (neg) n = -n;
    return Rational(std::move(n), std::move(d));
}

std::string rat_format(const Rational& r) {
    std::string out = r.num().str();
    if (!r.is_integer()) {
        out += '/';
        out += r.den().str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << rat_format(r);
}

}  // namespace egyptian
