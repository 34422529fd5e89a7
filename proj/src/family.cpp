#include "hypflute/family.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypflute {

double family_step(int n) {
    if (n < 1 || n > kMaxFamilyIndex)
        throw std::domain_error("family index n must be in [1, " +
                                std::to_string(kMaxFamilyIndex) + "], got " + std::to_string(n));
    double r = 2.0;
    for (int i = 1; i < n; ++i) r *= 3.0;
    return r;
}

BigInt family_step_exact(int n) {
    if (n < 1 || n > kMaxFamilyIndex)
        throw std::domain_error("family index n out of range");
    BigInt r = 2;
    for (int i = 1; i < n; ++i) r *= 3;
    return r;
}

Isometry family_conjugator(const Rational& q, int n) {
    double sq = std::sqrt(q.to_double());
    return Isometry::translation(-family_step(n) * (sq - 2.0));
}

FamilyElement make_family_element(const Rational& q, int n) {
    if (q <= Rational(1))
        throw std::domain_error("family parameter q must exceed 1, got " + q.str());
    FamilyElement e;
    e.q = q;
    e.n = n;
    e.r = family_step(n);
    double qd = q.to_double();
    double sq = std::sqrt(qd);

    BigRational Q = to_big(q);
    BigRational R(family_step_exact(n));
    auto rat = [&](BigRational v) { return SqrtRational::rational(std::move(v), Q); };
    SqrtRational sqrt_q = SqrtRational::root(Q);

    if (q >= Rational(4)) {
        e.branch = Branch::G;
        e.matrix = Isometry(sq, (1.0 - qd) * e.r, -1.0 / e.r, sq);
        e.exact_matrix = {sqrt_q, rat((1 - Q) * R), rat(BigRational(-1) / R), sqrt_q};
    } else {
        e.branch = Branch::H;
        double t = sq - 2.0;
        e.matrix = Isometry(4.0 - sq, e.r * (t * t - 3.0), -1.0 / e.r, sq);
        // (sqrt(q) - 2)^2 - 3 = (q + 1) - 4 sqrt(q)
        e.exact_matrix = {SqrtRational(4, -1, Q), SqrtRational((Q + 1) * R, -4 * R, Q),
                          rat(BigRational(-1) / R), sqrt_q};
    }
    return e;
}

double constant_C() {
    // 2C = dist((0, inf), hypercycle through 1+i) = arcsinh(1)
    return 0.5 * std::asinh(1.0);
}

BisectorData bisector_data(const FamilyElement& e, bool inverse) {
    BisectorData out;
    Isometry m = inverse ? e.matrix.inverse() : e.matrix;
    ExtendedPoint p = apply(m, ExtendedPoint::interior(0.0, 1.0));
    Geodesic g = perp_bisector(p);
    if (g.is_vertical())
        throw std::domain_error("family bisector degenerated to a vertical line");
    out.bisector = g;
    out.center = g.center;
    out.radius = g.radius;
    out.extremities = {g.center - g.radius, g.center + g.radius};

    // exact path: f * i = ((ac + bd) + i) / (c^2 + d^2)
    const auto& em = e.exact_matrix;
    SqrtRational a = em[0], b = em[1], c = em[2], d = em[3];
    if (inverse) {
        SqrtRational t = a;
        a = d; d = t; b = -b; c = -c;
    }
    SqrtRational den = c * c + d * d;
    SqrtRational R = (a * c + b * d) / den;
    SqrtRational I = den.inv();
    SqrtRational one = SqrtRational::rational(1, I.q);
    SqrtRational im1 = I - one;
    if (im1 == SqrtRational::rational(0, I.q))
        throw std::domain_error("family bisector degenerated (Im = 1)");
    out.exact_center = -(R / im1);
    out.exact_radius_sq = I * (one + (R * R) / (im1 * im1));
    return out;
}

bool below_hypercycle_check(const FamilyElement& e, bool inverse) {
    BisectorData bd = bisector_data(e, inverse);
    // exact test: side via the sign of the center, and "every point of the
    // semicircle satisfies |x|/y >= 1" via center^2 >= 2 radius^2 (the
    // minimum of |x|/y over the arc is sqrt(center^2 - radius^2)/radius).
    // center^2 >= 2 radius^2 > radius^2 already forces the whole circle to
    // one side of 0.
    int center_sign = bd.exact_center.sign();
    bool side_ok = inverse ? center_sign > 0 : center_sign < 0;
    SqrtRational two = SqrtRational::rational(2, bd.exact_center.q);
    SqrtRational margin = bd.exact_center * bd.exact_center - two * bd.exact_radius_sq;
    return side_ok && margin.sign() >= 0;
}

} // namespace hypflute
