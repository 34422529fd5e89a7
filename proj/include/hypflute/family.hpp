#pragma once

#include <array>
#include <optional>

#include "hypflute/isometry.hpp"
#include "hypflute/rational.hpp"

namespace hypflute {

// Largest admissible family index n. r_n = 2 * 3^(n-1) stays well inside
// double range and the selection loop below never comes close.
inline constexpr int kMaxFamilyIndex = 128;

// Translation step r_n: r_1 = 2, r_n = 3 r_{n-1}.
double family_step(int n);
BigInt family_step_exact(int n);

enum class Branch { G, H };

// Hyperbolic element f_{q,n} of the two-branch family over q in Q, q > 1:
//   branch G (q >= 4):    [ sqrt(q)      (1-q) r_n ]
//                         [ -1/r_n       sqrt(q)   ]      trace 2 sqrt(q)
//   branch H (1 < q < 4): [ 4 - sqrt(q)  r_n ((sqrt(q)-2)^2 - 3) ]
//                         [ -1/r_n       sqrt(q)   ]      trace 4
// Branch H is the conjugate T^-1 g_{4,n} T by the translation
// T = [[1, t],[0,1]], t = -r_n (sqrt(q) - 2).
struct FamilyElement {
    Rational q;
    int n = 1;
    Branch branch = Branch::G;
    double r = 2.0;
    Isometry matrix;
    // Entries in Q(sqrt(q)), exact.
    std::array<SqrtRational, 4> exact_matrix;
};

FamilyElement make_family_element(const Rational& q, int n);

// The translation T_{q,n} whose conjugation produces branch H.
Isometry family_conjugator(const Rational& q, int n);

// Half of the distance between the imaginary axis and the hypercycle
// through 1+i with the same ideal endpoints; 2C = arcsinh(1).
double constant_C();

// Perpendicular bisector of [i, f^{+/-1} i], with its ideal endpoints
// ("extremities") and, exactly, its center and squared radius in
// Q(sqrt(q)).
struct BisectorData {
    Geodesic bisector;           // always a semicircle for family elements
    double center = 0.0;
    double radius = 0.0;
    std::array<double, 2> extremities{}; // {center - radius, center + radius}
    SqrtRational exact_center;
    SqrtRational exact_radius_sq;
};

BisectorData bisector_data(const FamilyElement& e, bool inverse);

// True iff the bisector of f^-1 (inverse=true) resp. f (inverse=false)
// lies weakly below the hypercycle through +/-1 + i over the imaginary
// axis, i.e. every point of the semicircle satisfies |x|/y >= 1 and the
// semicircle stays on the expected side of 0 (x > 0 for the inverse,
// x < 0 for the forward one). Closed form: correct sign of the center,
// |center| > radius, and center^2 >= 2 radius^2.
bool below_hypercycle_check(const FamilyElement& e, bool inverse);

} // namespace hypflute
