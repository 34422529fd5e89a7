#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypflute/curves.hpp"
#include "hypflute/geometry.hpp"
#include "hypflute/point.hpp"

namespace hypflute {

// Orientation-preserving isometry of the upper half-plane, acting as the
// Moebius map z -> (az + b)/(cz + d). Stored with determinant 1; M and
// -M act identically, so the sign is canonicalized to positive trace
// (first nonzero of c, b, a positive when the trace vanishes).
struct Isometry {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    Isometry() = default;
    // Normalizes determinant and sign; requires det > 0.
    Isometry(double a, double b, double c, double d);

    static Isometry identity() { return Isometry(); }
    static Isometry translation(double t) { return Isometry(1.0, t, 0.0, 1.0); }

    double trace() const { return a + d; }
    Isometry inverse() const { return Isometry(d, -b, -c, a); }
    std::array<double, 4> entries() const { return {a, b, c, d}; }
};

Isometry compose(const Isometry& m, const Isometry& n); // m after n
inline Isometry operator*(const Isometry& m, const Isometry& n) { return compose(m, n); }

// T^-1 * m * T
Isometry conjugate(const Isometry& m, const Isometry& t);

// Action on interior and boundary points (boundary maps to boundary;
// c*x + d = 0 maps to infinity, infinity maps to a/c).
ExtendedPoint apply(const Isometry& m, const ExtendedPoint& p);

// Image of a geodesic (endpoints map to endpoints).
Geodesic apply(const Isometry& m, const Geodesic& g);

enum class IsometryType { Identity, Hyperbolic, Parabolic, Elliptic };

// Classification by |trace|: > 2 hyperbolic, = 2 (within a 1e-10 band)
// parabolic or identity, < 2 elliptic.
struct IsometryClass {
    IsometryType type = IsometryType::Identity;
    // Boundary fixed points. Hyperbolic: {repelling, attracting} in this
    // order, so iterating the map forward converges to fixed_points[1].
    // Parabolic: one entry. Identity/elliptic: empty.
    std::vector<ExtendedPoint> fixed_points;
    std::optional<Geodesic> axis;               // hyperbolic only
    std::optional<double> translation_length;   // hyperbolic: 2*arccosh(|tr|/2)

    ExtendedPoint repelling() const { return fixed_points.at(0); }
    ExtendedPoint attracting() const { return fixed_points.at(1); }
};

IsometryClass classify(const Isometry& m, double parabolic_band = 1e-10);

// d(z, m z)
double displacement(const Isometry& m, const ExtendedPoint& z);

// Hyperbolic displacement law: sinh(d(z, mz)/2) = cosh(s) * sinh(l/2)
// with s the distance from z to the axis and l the translation length.
double displacement_hyperbolic(const Isometry& m, const ExtendedPoint& z);

// Parabolic displacement law: sinh(d(z, mz)/2) = e^s * sinh(l(z0)/2)
// with l(z0) = d(z0, m z0) and s the Busemann cocycle from z to the
// horocycle through z0 centered at the fixed point.
double displacement_parabolic(const Isometry& m, const ExtendedPoint& z, const ExtendedPoint& z0);

// For a hyperbolic m, returns m or its inverse, whichever has the
// attracting fixed point of larger absolute value (infinity counts as
// largest). Optional re-orientation used when hunting expanding return
// maps; not applied by classify().
Isometry reorient_expanding(const Isometry& m);

std::string to_string(const Isometry& m);

} // namespace hypflute
