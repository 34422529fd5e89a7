#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "hypflute/point.hpp"

namespace hypflute {

// Complete geodesic of the upper half-plane: either a vertical line
// x = x0 (ideal endpoints x0 and infinity) or a semicircle centered on
// the real axis (ideal endpoints center -/+ radius).
struct Geodesic {
    enum class Kind { Vertical, Semicircle };

    Kind kind = Kind::Vertical;
    double x0 = 0.0;     // Vertical only
    double center = 0.0; // Semicircle only
    double radius = 0.0; // Semicircle only

    static Geodesic vertical(double x0) {
        Geodesic g;
        g.kind = Kind::Vertical;
        g.x0 = x0;
        return g;
    }

    static Geodesic semicircle(double center, double radius) {
        if (!(radius > 0.0))
            throw std::domain_error("semicircle radius must be positive");
        Geodesic g;
        g.kind = Kind::Semicircle;
        g.center = center;
        g.radius = radius;
        return g;
    }

    // Geodesic through two distinct boundary points.
    static Geodesic through(const ExtendedPoint& a, const ExtendedPoint& b) {
        if (a.is_interior() || b.is_interior())
            throw std::domain_error("geodesic endpoints must be boundary points");
        if (a.is_infinity() && b.is_infinity())
            throw std::domain_error("geodesic endpoints must be distinct");
        if (a.is_infinity()) return vertical(b.x);
        if (b.is_infinity()) return vertical(a.x);
        if (a.x == b.x)
            throw std::domain_error("geodesic endpoints must be distinct");
        double lo = a.x < b.x ? a.x : b.x;
        double hi = a.x < b.x ? b.x : a.x;
        return semicircle((lo + hi) / 2.0, (hi - lo) / 2.0);
    }

    bool is_vertical() const { return kind == Kind::Vertical; }

    // Ideal endpoints, sorted: for a semicircle (center - radius, center + radius),
    // for a vertical line (x0, infinity).
    std::pair<ExtendedPoint, ExtendedPoint> endpoints() const {
        if (is_vertical())
            return {ExtendedPoint::boundary(x0), ExtendedPoint::infinity()};
        return {ExtendedPoint::boundary(center - radius), ExtendedPoint::boundary(center + radius)};
    }
};

inline std::string to_string(const Geodesic& g) {
    if (g.is_vertical()) return "vertical(x=" + std::to_string(g.x0) + ")";
    return "semicircle(center=" + std::to_string(g.center) + ", radius=" + std::to_string(g.radius) + ")";
}

// Horocycle: limit circle tangent to the boundary at `center`, passing
// through the interior point `through`. A horocycle centered at infinity
// is the horizontal line Im z = Im through.
struct Horocycle {
    ExtendedPoint center;  // Boundary or Infinity
    ExtendedPoint through; // Interior

    Horocycle(const ExtendedPoint& c, const ExtendedPoint& t) : center(c), through(t) {
        if (c.is_interior())
            throw std::domain_error("horocycle center must be a boundary point");
        if (!t.is_interior())
            throw std::domain_error("horocycle must pass through an interior point");
    }
};

// Hypercycle: curve at constant distance from the geodesic with ideal
// endpoints `a`, `b`, passing through the interior point `through`.
// Supported by a Euclidean circle (or line) through all three points.
struct Hypercycle {
    Geodesic base;         // the equidistant geodesic
    ExtendedPoint through; // Interior

    Hypercycle(const Geodesic& g, const ExtendedPoint& t) : base(g), through(t) {
        if (!t.is_interior())
            throw std::domain_error("hypercycle must pass through an interior point");
    }

    static Hypercycle through_point(const ExtendedPoint& a, const ExtendedPoint& b,
                                    const ExtendedPoint& t) {
        return Hypercycle(Geodesic::through(a, b), t);
    }
};

// Closed half-plane bounded by a geodesic. `side` selects the closed side
// containing `basepoint` or its closed complement.
struct HalfPlane {
    enum class Side { ContainsBasepoint, Opposite };

    Geodesic bisector;
    Side side = Side::ContainsBasepoint;
    ExtendedPoint basepoint = ExtendedPoint::interior(0.0, 1.0);
};

using Curve = std::variant<Geodesic, Horocycle, Hypercycle, HalfPlane>;

} // namespace hypflute
