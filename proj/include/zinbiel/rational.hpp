#pragma once

/*
 * Exact rational scalar used throughout the library.
 *
 * Thin value wrapper around boost::multiprecision::cpp_rational.  The
 * backend keeps every value in lowest terms with a positive denominator,
 * which is exactly the normal form the rest of the code relies on when
 * comparing coefficients or printing them.  All arithmetic is exact;
 * dividing by zero throws instead of producing a sentinel.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zinbiel {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}

    /// p/q with q != 0; normalizes sign and reduces.  The backend rejects
    /// negative denominators, so the sign moves to the numerator first.
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    Rational(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = Backend(std::move(num), std::move(den));
    }

    /// Strict parse of "p", "-p" or "p/q" (q > 0, all digits, no spaces).
    /// Throws std::invalid_argument on any other shape, including "1/0".
    static Rational from_string(std::string_view s);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    /// Canonical rendering: lowest terms, "p" or "p/q" with q > 1.
    std::string str() const;

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    int sign() const { return v_.sign(); }
    Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(Backend(1) / v_);
    }

    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    using Backend = boost::multiprecision::cpp_rational;

    explicit Rational(Backend v) : v_(std::move(v)) {}

    Backend v_;
};

inline Rational Rational::from_string(std::string_view s) {
    const auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("malformed rational '") +
                                    std::string(s) + "': " + why);
    };
    if (s.empty()) fail("empty string");

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '-') {
        negative = true;
        ++pos;
    }
    const auto digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) fail("expected digits");
        out.assign(s.substr(start, pos - start));
    };

    std::string num_digits;
    digits(num_digits);
    BigInt num(num_digits);
    if (negative) num = -num;

    if (pos == s.size()) return Rational(std::move(num), BigInt(1));

    if (s[pos] != '/') fail("unexpected character");
    ++pos;
    std::string den_digits;
    digits(den_digits);
    if (pos != s.size()) fail("unexpected trailing characters");
    BigInt den(den_digits);
    if (den == 0) fail("zero denominator");
    return Rational(std::move(num), std::move(den));
}

inline std::string Rational::str() const {
    std::string out = numerator().str();
    if (denominator() != 1) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

} // namespace zinbiel
