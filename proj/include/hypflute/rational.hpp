#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypflute {

// Small exact rational used for the family parameter q. Always reduced,
// positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // "p" or "p/r"
    static Rational parse(const std::string& s);
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        // denominators fit comfortably in 64 bits for every q we handle
        return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }
};

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigRational to_big(const Rational& r) { return BigRational(r.num, r.den); }

// Exact square root of a rational, when it is a perfect square.
std::optional<BigRational> exact_sqrt(const BigRational& r);

// Element a + b*sqrt(q) of the quadratic extension Q(sqrt(q)), with
// exact rational coordinates. q is carried along and must agree between
// operands; q a perfect square is allowed (then the value is rational).
struct SqrtRational {
    BigRational a;
    BigRational b;
    BigRational q = 0;

    SqrtRational() = default;
    SqrtRational(BigRational a_, BigRational b_, BigRational q_)
        : a(std::move(a_)), b(std::move(b_)), q(std::move(q_)) {}
    static SqrtRational rational(BigRational v, BigRational q_) {
        return SqrtRational(std::move(v), 0, std::move(q_));
    }
    static SqrtRational root(BigRational q_) { return SqrtRational(0, 1, q_); }

    bool is_rational() const { return b == 0; }
    // Rational value; collapses b*sqrt(q) when q is a perfect square.
    std::optional<BigRational> as_rational() const;
    double to_double() const;
    // Exact sign of a + b*sqrt(q): -1, 0 or +1.
    int sign() const;

    SqrtRational operator-() const { return SqrtRational(-a, -b, q); }
    SqrtRational inv() const;

    friend SqrtRational operator+(const SqrtRational& x, const SqrtRational& y);
    friend SqrtRational operator-(const SqrtRational& x, const SqrtRational& y);
    friend SqrtRational operator*(const SqrtRational& x, const SqrtRational& y);
    friend SqrtRational operator/(const SqrtRational& x, const SqrtRational& y);
    friend bool operator==(const SqrtRational& x, const SqrtRational& y);
};

std::string to_string(const SqrtRational& v);

} // namespace hypflute
