#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hypflute {

// Point of the closed upper half-plane model: either an interior point
// (x + iy, y > 0), a point of the real boundary line, or the point at
// infinity.
struct ExtendedPoint {
    enum class Kind { Interior, Boundary, Infinity };

    Kind kind = Kind::Infinity;
    double x = 0.0;
    double y = 0.0;

    static ExtendedPoint interior(double x, double y) {
        if (!(y > 0.0))
            throw std::domain_error("interior point requires Im > 0, got y=" + std::to_string(y));
        return ExtendedPoint{Kind::Interior, x, y};
    }
    static ExtendedPoint interior(std::complex<double> z) { return interior(z.real(), z.imag()); }
    static ExtendedPoint boundary(double x) { return ExtendedPoint{Kind::Boundary, x, 0.0}; }
    static ExtendedPoint infinity() { return ExtendedPoint{Kind::Infinity, 0.0, 0.0}; }

    bool is_interior() const { return kind == Kind::Interior; }
    bool is_boundary() const { return kind == Kind::Boundary; }
    bool is_infinity() const { return kind == Kind::Infinity; }

    std::complex<double> as_complex() const {
        if (!is_interior())
            throw std::domain_error("as_complex: point is not interior");
        return {x, y};
    }

    // Boundary coordinate; only meaningful for finite boundary points.
    double boundary_coord() const {
        if (!is_boundary())
            throw std::domain_error("boundary_coord: point is not a finite boundary point");
        return x;
    }

    friend bool operator==(const ExtendedPoint& p, const ExtendedPoint& q) {
        if (p.kind != q.kind) return false;
        if (p.kind == Kind::Infinity) return true;
        if (p.kind == Kind::Boundary) return p.x == q.x;
        return p.x == q.x && p.y == q.y;
    }
};

inline std::string to_string(const ExtendedPoint& p) {
    switch (p.kind) {
    case ExtendedPoint::Kind::Infinity: return "inf";
    case ExtendedPoint::Kind::Boundary: return std::to_string(p.x);
    default: return std::to_string(p.x) + "+" + std::to_string(p.y) + "i";
    }
}

} // namespace hypflute
