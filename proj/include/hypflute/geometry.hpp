#pragma once

#include <optional>
#include <vector>

#include "hypflute/curves.hpp"
#include "hypflute/point.hpp"
#include "hypflute/tolerance.hpp"

namespace hypflute {

// Hyperbolic distance between interior points:
//   sinh(d/2) = |a - b| / (2 sqrt(Im a * Im b))
double dist(const ExtendedPoint& a, const ExtendedPoint& b);

// Busemann cocycle B_xi(z, w) for a boundary point xi and interior z, w.
// Normalized so that B_inf(z, w) = ln(Im w / Im z); finite xi is handled
// by conjugating xi to infinity with u -> -1/(u - xi). Equivalently the
// boundary limit of d(z, u) - d(w, u) as u -> xi.
double busemann(const ExtendedPoint& xi, const ExtendedPoint& z, const ExtendedPoint& w);

// Distance from an interior point to a complete geodesic. For the
// imaginary axis this is arcsinh(|x| / y).
double dist_point_geodesic(const ExtendedPoint& z, const Geodesic& g);

// Same distance with a sign: positive on one side of the geodesic,
// negative on the other, zero on it. For a semicircle the positive side
// is the outside; for a vertical line the half x > x0.
double signed_dist_point_geodesic(const ExtendedPoint& z, const Geodesic& g);

// Nearest point of g to z (foot of the perpendicular).
ExtendedPoint project_to_geodesic(const ExtendedPoint& z, const Geodesic& g);

// Distance between two complete geodesics; 0 iff their closures in the
// closed half-plane intersect (crossing or shared ideal endpoint).
double dist_geodesic_geodesic(const Geodesic& g1, const Geodesic& g2);

// Perpendicular bisector of the segment [i, P] for an interior P = R + iI
// distinct from i. For I != 1 this is the semicircle
//   (x + R/(I-1))^2 + y^2 = I * (1 + R^2/(I-1)^2),
// for I == 1 the vertical line x = R/2.
Geodesic perp_bisector(const ExtendedPoint& p);

// First point of the vertical ray { Re = z.x, Im >= z.y } on the
// hypercycle, if any.
std::optional<ExtendedPoint> hypercycle_ray_intersection(const Hypercycle& h, const ExtendedPoint& z);

// Membership in a closed half-plane, with tolerance on the boundary.
bool halfplane_contains(const HalfPlane& hp, const ExtendedPoint& z, double tol = 1e-12);

// Horocycle membership: B_center(through, z) == 0 within tol.
bool horocycle_contains(const Horocycle& h, const ExtendedPoint& z, double tol = 1e-12);

// A point of the horocycle at parameter u (u = 0 gives `through`).
ExtendedPoint horocycle_point(const Horocycle& h, double u);

// k points sampled along the hypercycle (interior points, excludes the
// ideal endpoints).
std::vector<ExtendedPoint> sample_hypercycle(const Hypercycle& h, int k);

} // namespace hypflute
