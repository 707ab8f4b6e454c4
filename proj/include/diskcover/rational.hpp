#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace diskcover {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction of arbitrary-precision integers. Always stored reduced
/// with a positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        value_ = Value(num);
        value_ /= Value(den);
    }

    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const { return Rational(Value(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    Rational inverse() const {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        return Rational(denominator(), numerator());
    }

    /// "p/q" in lowest terms, or "p" alone when q = 1.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer())
            s += "/" + denominator().str();
        return s;
    }

    static Rational parse(const std::string& s) {
        if (s.empty())
            throw std::invalid_argument("Rational::parse: empty string");
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(parse_int(s));
        if (slash == 0 || slash + 1 == s.size())
            throw std::invalid_argument("Rational::parse: malformed fraction '" + s + "'");
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    }

    double to_double() const { return value_.convert_to<double>(); }

private:
    using Value = boost::multiprecision::cpp_rational;

    explicit Rational(Value v) : value_(std::move(v)) {}

    static BigInt parse_int(const std::string& s) {
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("Rational::parse: malformed integer '" + s + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("Rational::parse: malformed integer '" + s + "'");
        return BigInt(s);
    }

    Value value_;
};

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt b = 1;
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

} // namespace diskcover
