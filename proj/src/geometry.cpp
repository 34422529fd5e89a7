#include "hypflute/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace hypflute {

namespace {

std::complex<double> cx(const ExtendedPoint& p) { return p.as_complex(); }

// Busemann potential: B_xi(z, w) = phi_xi(w) - phi_xi(z). Writing it as a
// per-point potential makes the cocycle identity exact in floating point.
double busemann_potential(const ExtendedPoint& xi, const ExtendedPoint& p) {
    if (!p.is_interior())
        throw std::domain_error("busemann: z and w must be interior points");
    if (xi.is_infinity()) return std::log(p.y);
    // conjugate xi to infinity by u -> -1/(u - xi)
    double dx = p.x - xi.x;
    return std::log(p.y) - std::log(dx * dx + p.y * p.y);
}

// Euclidean support of a hypercycle: either a line through (x0, 0) and the
// through point, or a circle through both ideal endpoints and the through
// point. The y > 0 part of the support is exactly the hypercycle.
struct HypercycleSupport {
    bool is_line = false;
    // line: passes through (x_foot, 0) and the through point
    double x_foot = 0.0;
    // circle
    double cx = 0.0, cy = 0.0, radius = 0.0;
    ExtendedPoint through = ExtendedPoint::infinity();
};

HypercycleSupport support_of(const Hypercycle& h) {
    HypercycleSupport s;
    s.through = h.through;
    if (h.base.is_vertical()) {
        s.is_line = true;
        s.x_foot = h.base.x0;
        return s;
    }
    double c = h.base.center, rg = h.base.radius;
    double wx = h.through.x, wy = h.through.y;
    double d2 = (wx - c) * (wx - c) + wy * wy;
    s.cx = c;
    s.cy = (d2 - rg * rg) / (2.0 * wy);
    s.radius = std::sqrt(rg * rg + s.cy * s.cy);
    return s;
}

} // namespace

double dist(const ExtendedPoint& a, const ExtendedPoint& b) {
    std::complex<double> za = cx(a), zb = cx(b);
    double s = std::abs(za - zb) / (2.0 * std::sqrt(a.y * b.y));
    return 2.0 * std::asinh(s);
}

double busemann(const ExtendedPoint& xi, const ExtendedPoint& z, const ExtendedPoint& w) {
    if (xi.is_interior())
        throw std::domain_error("busemann: xi must be a boundary point");
    return busemann_potential(xi, w) - busemann_potential(xi, z);
}

double signed_dist_point_geodesic(const ExtendedPoint& z, const Geodesic& g) {
    if (!z.is_interior())
        throw std::domain_error("signed_dist_point_geodesic: z must be interior");
    if (g.is_vertical())
        return std::asinh((z.x - g.x0) / z.y);
    // distance to a semicircle: arcsinh(| |z-c|^2 - rho^2 | / (2 rho y)),
    // positive outside the circle
    double dx = z.x - g.center;
    double v = dx * dx + z.y * z.y - g.radius * g.radius;
    return std::asinh(v / (2.0 * g.radius * z.y));
}

double dist_point_geodesic(const ExtendedPoint& z, const Geodesic& g) {
    return std::abs(signed_dist_point_geodesic(z, g));
}

ExtendedPoint project_to_geodesic(const ExtendedPoint& z, const Geodesic& g) {
    if (!z.is_interior())
        throw std::domain_error("project_to_geodesic: z must be interior");
    if (g.is_vertical()) {
        double dx = z.x - g.x0;
        return ExtendedPoint::interior(g.x0, std::sqrt(dx * dx + z.y * z.y));
    }
    // send the semicircle to the imaginary axis with T = (z-a)/(b-z)/(scaling),
    // drop the real part, come back
    double a = g.center - g.radius, b = g.center + g.radius;
    std::complex<double> w = (cx(z) - a) / (b - cx(z));
    std::complex<double> foot_w(0.0, std::abs(w));
    // T^-1 u = (b u + a) / (u + 1)
    std::complex<double> foot = (b * foot_w + a) / (foot_w + 1.0);
    return ExtendedPoint::interior(foot.real(), std::max(foot.imag(), 1e-300));
}

double dist_geodesic_geodesic(const Geodesic& g1, const Geodesic& g2) {
    // Map g1 to the imaginary axis, track the ideal endpoints of g2.
    bool u_inf = false, v_inf = false;
    double u = 0.0, v = 0.0;
    auto [e1, e2] = g2.endpoints();
    if (g1.is_vertical()) {
        if (e1.is_infinity()) u_inf = true; else u = e1.x - g1.x0;
        if (e2.is_infinity()) v_inf = true; else v = e2.x - g1.x0;
    } else {
        double a = g1.center - g1.radius, b = g1.center + g1.radius;
        auto send = [&](const ExtendedPoint& e, bool& inf, double& val) {
            if (e.is_infinity()) { val = -1.0; return; }
            if (e.x == b) { inf = true; return; }
            val = (e.x - a) / (b - e.x);
        };
        send(e1, u_inf, u);
        send(e2, v_inf, v);
    }
    if (u_inf || v_inf) return 0.0;       // shares the ideal endpoint infinity
    if (u == 0.0 || v == 0.0) return 0.0; // shares an ideal endpoint
    if ((u < 0.0) != (v < 0.0)) return 0.0; // crossing
    double p = std::min(std::abs(u), std::abs(v));
    double q = std::max(std::abs(u), std::abs(v));
    if (!(q > p)) return std::numeric_limits<double>::infinity();
    // distance from (0, inf) to the geodesic with endpoints 0 < p < q:
    // arcsinh(2 sqrt(pq) / (q - p))
    return std::asinh(2.0 * std::sqrt(p * q) / (q - p));
}

Geodesic perp_bisector(const ExtendedPoint& p) {
    if (!p.is_interior())
        throw std::domain_error("perp_bisector: P must be interior");
    double R = p.x, I = p.y;
    if (I == 1.0) {
        if (R == 0.0)
            throw std::domain_error("perp_bisector: P must differ from the basepoint i");
        return Geodesic::vertical(R / 2.0);
    }
    double center = -R / (I - 1.0);
    double radius_sq = I * (1.0 + (R * R) / ((I - 1.0) * (I - 1.0)));
    return Geodesic::semicircle(center, std::sqrt(radius_sq));
}

std::optional<ExtendedPoint> hypercycle_ray_intersection(const Hypercycle& h, const ExtendedPoint& z) {
    if (!z.is_interior())
        throw std::domain_error("hypercycle_ray_intersection: z must be interior");
    // On the hypercycle already: same signed distance as the through point.
    double sd_z = signed_dist_point_geodesic(z, h.base);
    double sd_w = signed_dist_point_geodesic(h.through, h.base);
    if (std::abs(sd_z - sd_w) < 1e-12) return z;

    HypercycleSupport s = support_of(h);
    if (s.is_line) {
        double wx = s.through.x, wy = s.through.y;
        if (wx == s.x_foot) // degenerate: the hypercycle is the vertical geodesic
            return z.x == s.x_foot ? std::optional<ExtendedPoint>(z) : std::nullopt;
        double t = (z.x - s.x_foot) / (wx - s.x_foot);
        if (t <= 0.0) return std::nullopt;
        double y = t * wy;
        if (y < z.y) return std::nullopt;
        return ExtendedPoint::interior(z.x, y);
    }
    double dx = z.x - s.cx;
    double h2 = s.radius * s.radius - dx * dx;
    if (h2 < 0.0) return std::nullopt; // vertical line misses the support circle
    double root = std::sqrt(h2);
    for (double y : {s.cy - root, s.cy + root}) // lowest hit first
        if (y > 0.0 && y >= z.y) return ExtendedPoint::interior(z.x, y);
    return std::nullopt;
}

bool halfplane_contains(const HalfPlane& hp, const ExtendedPoint& z, double tol) {
    // Signed offset from the bisector: positive on the unbounded side of a
    // semicircle (which is where infinity lives) or to the right of a line.
    auto side_value = [&](const ExtendedPoint& p) {
        if (p.is_infinity()) {
            if (hp.bisector.is_vertical())
                throw std::domain_error("halfplane_contains: infinity against a vertical bisector is ambiguous");
            return 1.0;
        }
        if (hp.bisector.is_vertical()) return p.x - hp.bisector.x0;
        double dx = p.x - hp.bisector.center;
        return std::sqrt(dx * dx + p.y * p.y) - hp.bisector.radius;
    };
    double v = side_value(z);
    if (!z.is_infinity() && std::abs(v) <= tol) return true; // on the bisector: both closed sides
    bool same = (v > 0.0) == (side_value(hp.basepoint) > 0.0);
    return hp.side == HalfPlane::Side::ContainsBasepoint ? same : !same;
}

bool horocycle_contains(const Horocycle& h, const ExtendedPoint& z, double tol) {
    return std::abs(busemann(h.center, h.through, z)) <= tol;
}

ExtendedPoint horocycle_point(const Horocycle& h, double u) {
    if (h.center.is_infinity())
        return ExtendedPoint::interior(h.through.x + u, h.through.y);
    double xi = h.center.x;
    double wx = h.through.x, wy = h.through.y;
    double rho = ((wx - xi) * (wx - xi) + wy * wy) / (2.0 * wy);
    double theta = std::atan2(wy - rho, wx - xi) + u;
    double y = rho + rho * std::sin(theta);
    if (!(y > 0.0))
        throw std::domain_error("horocycle_point: parameter reaches the tangency point");
    return ExtendedPoint::interior(xi + rho * std::cos(theta), y);
}

std::vector<ExtendedPoint> sample_hypercycle(const Hypercycle& h, int k) {
    std::vector<ExtendedPoint> out;
    out.reserve(static_cast<std::size_t>(k));
    HypercycleSupport s = support_of(h);
    if (s.is_line) {
        double wx = s.through.x, wy = s.through.y;
        for (int j = 0; j < k; ++j) {
            double t = std::exp(std::log(0.05) + (std::log(20.0) - std::log(0.05)) * (j + 0.5) / k);
            out.push_back(ExtendedPoint::interior(s.x_foot + t * (wx - s.x_foot), t * wy));
        }
        return out;
    }
    auto [pa, pb] = h.base.endpoints();
    double ta = std::atan2(0.0 - s.cy, pa.x - s.cx);
    double tb = std::atan2(0.0 - s.cy, pb.x - s.cx);
    // sweep from ta to tb through the top of the circle (theta = pi/2)
    auto contains_top = [](double from, double delta) {
        for (double top : {M_PI / 2.0, M_PI / 2.0 + 2.0 * M_PI, M_PI / 2.0 - 2.0 * M_PI}) {
            double tau = (top - from) / delta;
            if (tau > 0.0 && tau < 1.0) return true;
        }
        return false;
    };
    double delta = tb - ta;
    if (delta == 0.0) delta = 2.0 * M_PI;
    if (!contains_top(ta, delta))
        delta += (delta > 0.0 ? -2.0 * M_PI : 2.0 * M_PI);
    for (int j = 0; j < k; ++j) {
        double theta = ta + delta * (j + 0.5) / k;
        double y = s.cy + s.radius * std::sin(theta);
        if (y <= 0.0) continue;
        out.push_back(ExtendedPoint::interior(s.cx + s.radius * std::cos(theta), y));
    }
    return out;
}

} // namespace hypflute
