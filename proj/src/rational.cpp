#include "hypflute/rational.hpp"

#include <cmath>

namespace hypflute {

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::domain_error("cannot parse rational: '" + s + "'");
    }
}

std::optional<BigRational> exact_sqrt(const BigRational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return BigRational(0);
    BigInt n = boost::multiprecision::numerator(r);
    BigInt d = boost::multiprecision::denominator(r);
    BigInt sn = boost::multiprecision::sqrt(n);
    BigInt sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return BigRational(sn, sd);
}

std::optional<BigRational> SqrtRational::as_rational() const {
    if (b == 0) return a;
    if (auto s = exact_sqrt(q)) return a + b * *s;
    return std::nullopt;
}

double SqrtRational::to_double() const {
    return a.convert_to<double>() + b.convert_to<double>() * std::sqrt(q.convert_to<double>());
}

int SqrtRational::sign() const {
    auto sgn = [](const BigRational& v) { return v > 0 ? 1 : v < 0 ? -1 : 0; };
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare |a| with |b| sqrt(q) exactly
    BigRational lhs = a * a, rhs = b * b * q;
    if (lhs == rhs) return 0;
    return (lhs > rhs) == (sa > 0) ? 1 : -1;
}

SqrtRational SqrtRational::inv() const {
    // (a + b sqrt(q))^-1 = (a - b sqrt(q)) / (a^2 - b^2 q)
    BigRational norm = a * a - b * b * q;
    if (norm == 0) throw std::domain_error("SqrtRational: division by zero");
    return SqrtRational(a / norm, -b / norm, q);
}

namespace {
void check_same_q(const SqrtRational& x, const SqrtRational& y) {
    if (x.q != y.q && x.b != 0 && y.b != 0)
        throw std::domain_error("SqrtRational: mixed radicands");
}
BigRational pick_q(const SqrtRational& x, const SqrtRational& y) {
    return x.b != 0 ? x.q : y.q;
}
} // namespace

SqrtRational operator+(const SqrtRational& x, const SqrtRational& y) {
    check_same_q(x, y);
    return SqrtRational(x.a + y.a, x.b + y.b, pick_q(x, y));
}

SqrtRational operator-(const SqrtRational& x, const SqrtRational& y) {
    check_same_q(x, y);
    return SqrtRational(x.a - y.a, x.b - y.b, pick_q(x, y));
}

SqrtRational operator*(const SqrtRational& x, const SqrtRational& y) {
    check_same_q(x, y);
    BigRational q = pick_q(x, y);
    return SqrtRational(x.a * y.a + x.b * y.b * q, x.a * y.b + x.b * y.a, q);
}

SqrtRational operator/(const SqrtRational& x, const SqrtRational& y) {
    check_same_q(x, y);
    return x * y.inv();
}

bool operator==(const SqrtRational& x, const SqrtRational& y) {
    if (x.a != y.a) {
        // allow e.g. 0 + 1*sqrt(4) == 2 + 0*sqrt(q)
        auto rx = x.as_rational(), ry = y.as_rational();
        return rx && ry && *rx == *ry;
    }
    if (x.b == y.b && (x.b == 0 || x.q == y.q)) return true;
    auto rx = x.as_rational(), ry = y.as_rational();
    return rx && ry && *rx == *ry;
}

std::string to_string(const SqrtRational& v) {
    auto rat = [](const BigRational& r) {
        BigInt n = boost::multiprecision::numerator(r);
        BigInt d = boost::multiprecision::denominator(r);
        return d == 1 ? n.str() : n.str() + "/" + d.str();
    };
    if (v.b == 0) return rat(v.a);
    return rat(v.a) + " + " + rat(v.b) + "*sqrt(" + rat(v.q) + ")";
}

} // namespace hypflute
