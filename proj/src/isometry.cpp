#include "hypflute/isometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hypflute {

Isometry::Isometry(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    double det = a * d - b * c;
    if (!(det > 0.0))
        throw std::domain_error("isometry requires positive determinant, got " + std::to_string(det));
    double s = std::sqrt(det);
    a /= s; b /= s; c /= s; d /= s;
    double tr = a + d;
    bool flip;
    if (tr != 0.0) flip = tr < 0.0;
    else if (c != 0.0) flip = c < 0.0;
    else if (b != 0.0) flip = b < 0.0;
    else flip = a < 0.0;
    if (flip) { a = -a; b = -b; c = -c; d = -d; }
}

Isometry compose(const Isometry& m, const Isometry& n) {
    return Isometry(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                    m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

Isometry conjugate(const Isometry& m, const Isometry& t) {
    return t.inverse() * m * t;
}

ExtendedPoint apply(const Isometry& m, const ExtendedPoint& p) {
    if (p.is_interior()) {
        double x = p.x, y = p.y;
        double u = m.c * x + m.d, v = m.c * y;
        double den = u * u + v * v;
        // Im((az+b)/(cz+d)) = (ad - bc) y / |cz+d|^2 = y / den
        double wx = ((m.a * x + m.b) * u + m.a * m.c * y * y) / den;
        double wy = y / den;
        return ExtendedPoint::interior(wx, wy);
    }
    if (p.is_boundary()) {
        double den = m.c * p.x + m.d;
        if (den == 0.0) return ExtendedPoint::infinity();
        return ExtendedPoint::boundary((m.a * p.x + m.b) / den);
    }
    if (m.c == 0.0) return ExtendedPoint::infinity();
    return ExtendedPoint::boundary(m.a / m.c);
}

Geodesic apply(const Isometry& m, const Geodesic& g) {
    auto [e1, e2] = g.endpoints();
    return Geodesic::through(apply(m, e1), apply(m, e2));
}

IsometryClass classify(const Isometry& m, double parabolic_band) {
    IsometryClass out;
    double tr = std::abs(m.trace());
    if (std::abs(m.a - 1.0) + std::abs(m.d - 1.0) + std::abs(m.b) + std::abs(m.c) < 1e-12) {
        out.type = IsometryType::Identity;
        return out;
    }
    if (std::abs(tr - 2.0) < parabolic_band) {
        out.type = IsometryType::Parabolic;
        if (m.c == 0.0)
            out.fixed_points.push_back(ExtendedPoint::infinity());
        else
            out.fixed_points.push_back(ExtendedPoint::boundary((m.a - m.d) / (2.0 * m.c)));
        return out;
    }
    if (tr < 2.0) {
        out.type = IsometryType::Elliptic;
        return out;
    }
    out.type = IsometryType::Hyperbolic;
    out.translation_length = 2.0 * std::acosh(tr / 2.0);
    if (m.c == 0.0) {
        // fixed points: infinity and b/(d-a); infinity attracts iff |a| > 1
        ExtendedPoint finite = ExtendedPoint::boundary(m.b / (m.d - m.a));
        if (std::abs(m.a) > 1.0)
            out.fixed_points = {finite, ExtendedPoint::infinity()};
        else
            out.fixed_points = {ExtendedPoint::infinity(), finite};
    } else {
        // roots of c z^2 + (d - a) z - b = 0, cancellation-free
        double sum = m.a - m.d;
        double root = std::sqrt(tr * tr - 4.0);
        double z1 = (sum >= 0.0 ? sum + root : sum - root) / (2.0 * m.c);
        double z2 = z1 != 0.0 ? (-m.b / m.c) / z1 : (sum >= 0.0 ? sum - root : sum + root) / (2.0 * m.c);
        // attracting fixed point x: |c x + d| > 1 (derivative 1/(cx+d)^2 < 1)
        ExtendedPoint p1 = ExtendedPoint::boundary(z1), p2 = ExtendedPoint::boundary(z2);
        if (std::abs(m.c * z1 + m.d) > 1.0)
            out.fixed_points = {p2, p1};
        else
            out.fixed_points = {p1, p2};
    }
    out.axis = Geodesic::through(out.fixed_points[0], out.fixed_points[1]);
    return out;
}

double displacement(const Isometry& m, const ExtendedPoint& z) {
    return dist(z, apply(m, z));
}

double displacement_hyperbolic(const Isometry& m, const ExtendedPoint& z) {
    IsometryClass cls = classify(m);
    if (cls.type != IsometryType::Hyperbolic)
        throw std::domain_error("displacement_hyperbolic: isometry is not hyperbolic");
    double s = dist_point_geodesic(z, *cls.axis);
    return 2.0 * std::asinh(std::cosh(s) * std::sinh(*cls.translation_length / 2.0));
}

double displacement_parabolic(const Isometry& m, const ExtendedPoint& z, const ExtendedPoint& z0) {
    IsometryClass cls = classify(m);
    if (cls.type != IsometryType::Parabolic)
        throw std::domain_error("displacement_parabolic: isometry is not parabolic");
    double s = busemann(cls.fixed_points[0], z, z0);
    double l0 = dist(z0, apply(m, z0));
    return 2.0 * std::asinh(std::exp(s) * std::sinh(l0 / 2.0));
}

Isometry reorient_expanding(const Isometry& m) {
    IsometryClass cls = classify(m);
    if (cls.type != IsometryType::Hyperbolic)
        throw std::domain_error("reorient_expanding: isometry is not hyperbolic");
    auto absval = [](const ExtendedPoint& p) {
        return p.is_infinity() ? std::numeric_limits<double>::infinity() : std::abs(p.x);
    };
    return absval(cls.attracting()) >= absval(cls.repelling()) ? m : m.inverse();
}

std::string to_string(const Isometry& m) {
    std::ostringstream os;
    os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
    return os.str();
}

} // namespace hypflute
