#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypflute/family.hpp"
#include "hypflute/geometry.hpp"
#include "oracles.hpp"

using namespace hypflute;

namespace {
const std::vector<Rational> kGrid = {Rational(3, 2), Rational(2), Rational(7, 2), Rational(4),
                                     Rational(9)};
}

TEST_CASE("translation steps r_n = 2 * 3^(n-1)") {
    CHECK(family_step(1) == 2.0);
    CHECK(family_step(2) == 6.0);
    CHECK(family_step(3) == 18.0);
    CHECK(family_step(5) == 162.0);
    CHECK(family_step_exact(1) == 2);
    CHECK(family_step_exact(4) == 54);
    // Exact and floating values agree while the double is exact.
    for (int n = 1; n <= 30; ++n)
        CHECK(family_step(n) == family_step_exact(n).convert_to<double>());
    CHECK_THROWS(family_step(0));
    CHECK_THROWS(family_step(kMaxFamilyIndex + 1));
}

TEST_CASE("family matrices: entries, trace, determinant, branch split") {
    for (const Rational& q : kGrid) {
        for (int n = 1; n <= 8; ++n) {
            FamilyElement e = make_family_element(q, n);
            double qd = q.to_double();
            double rn = family_step(n);
            CHECK(e.r == rn);
            CHECK(e.n == n);
            double det = e.matrix.a * e.matrix.d - e.matrix.b * e.matrix.c;
            CHECK(det == doctest::Approx(1.0).epsilon(1e-13));
            if (qd >= 4.0) {
                CHECK(e.branch == Branch::G);
                CHECK(e.matrix.a == doctest::Approx(std::sqrt(qd)).epsilon(1e-14));
                CHECK(e.matrix.b == doctest::Approx((1.0 - qd) * rn).epsilon(1e-14));
                CHECK(e.matrix.c == doctest::Approx(-1.0 / rn).epsilon(1e-14));
                CHECK(e.matrix.d == doctest::Approx(std::sqrt(qd)).epsilon(1e-14));
                CHECK(e.matrix.trace() == doctest::Approx(2.0 * std::sqrt(qd)).epsilon(1e-14));
            } else {
                CHECK(e.branch == Branch::H);
                double sq = std::sqrt(qd);
                CHECK(e.matrix.a == doctest::Approx(4.0 - sq).epsilon(1e-14));
                CHECK(e.matrix.b ==
                      doctest::Approx(rn * ((sq - 2.0) * (sq - 2.0) - 3.0)).epsilon(1e-13));
                CHECK(e.matrix.c == doctest::Approx(-1.0 / rn).epsilon(1e-14));
                CHECK(e.matrix.d == doctest::Approx(sq).epsilon(1e-14));
                CHECK(e.matrix.trace() == doctest::Approx(4.0).epsilon(1e-13));
            }
            // The exact entries reproduce the floating matrix.
            const double* md = &e.matrix.a;
            for (int j = 0; j < 4; ++j)
                CHECK(e.exact_matrix[j].to_double() ==
                      doctest::Approx(md[j]).epsilon(1e-13));
        }
    }
    CHECK_THROWS(make_family_element(Rational(1), 1));     // q must exceed 1
    CHECK_THROWS(make_family_element(Rational(1, 2), 1));
    CHECK_THROWS(make_family_element(Rational(2), 0));
}

TEST_CASE("fixed translation length 2 arccosh(2) on the small-q branch") {
    for (const Rational& q : {Rational(3, 2), Rational(2), Rational(7, 2)}) {
        for (int n = 1; n <= 6; ++n) {
            IsometryClass cls = classify(make_family_element(q, n).matrix);
            REQUIRE(cls.type == IsometryType::Hyperbolic);
            CHECK(*cls.translation_length ==
                  doctest::Approx(2.0 * std::acosh(2.0)).epsilon(1e-12));
        }
    }
    // On the large-q branch the length is 2 arccosh(sqrt(q)).
    for (const Rational& q : {Rational(4), Rational(9)}) {
        IsometryClass cls = classify(make_family_element(q, 3).matrix);
        CHECK(*cls.translation_length ==
              doctest::Approx(2.0 * std::acosh(std::sqrt(q.to_double()))).epsilon(1e-12));
    }
}

TEST_CASE("small-q branch is a translation conjugate of the q = 4 matrix") {
    for (const Rational& q : {Rational(3, 2), Rational(2), Rational(7, 2)}) {
        for (int n = 1; n <= 5; ++n) {
            FamilyElement h = make_family_element(q, n);
            FamilyElement g4 = make_family_element(Rational(4), n);
            Isometry t = family_conjugator(q, n);
            // t is the horizontal translation by -r_n (sqrt q - 2).
            CHECK(t.a == 1.0);
            CHECK(t.c == 0.0);
            CHECK(t.b ==
                  doctest::Approx(-family_step(n) * (std::sqrt(q.to_double()) - 2.0))
                      .epsilon(1e-13));
            Isometry conj = conjugate(g4.matrix, t);
            CHECK(conj.a == doctest::Approx(h.matrix.a).epsilon(1e-12));
            CHECK(conj.b == doctest::Approx(h.matrix.b).epsilon(1e-12));
            CHECK(conj.c == doctest::Approx(h.matrix.c).epsilon(1e-12));
            CHECK(conj.d == doctest::Approx(h.matrix.d).epsilon(1e-12));
        }
    }
}

TEST_CASE("the constant C is half the axis-to-hypercycle distance") {
    CHECK(constant_C() == doctest::Approx(std::asinh(1.0) / 2.0).epsilon(1e-16));
    CHECK(constant_C() == doctest::Approx(0.4406867935097715).epsilon(1e-15));
    // Every point of the hypercycle through 1 + i over the imaginary axis
    // is at distance arcsinh(1) = 2C from the axis.
    Hypercycle hc(Geodesic::vertical(0.0), ExtendedPoint::interior(1.0, 1.0));
    for (const ExtendedPoint& z : sample_hypercycle(hc, 64))
        CHECK(dist_point_geodesic(z, Geodesic::vertical(0.0)) ==
              doctest::Approx(2.0 * constant_C()).epsilon(1e-10));
}

TEST_CASE("bisector data: equidistance, endpoints, exact/double agreement") {
    oracle::Rng rng(41);
    ExtendedPoint base = ExtendedPoint::interior(0.0, 1.0);
    for (const Rational& q : kGrid) {
        for (int n = 1; n <= 6; ++n) {
            FamilyElement e = make_family_element(q, n);
            for (bool inverse : {false, true}) {
                BisectorData bd = bisector_data(e, inverse);
                REQUIRE_FALSE(bd.bisector.is_vertical());
                CHECK(bd.bisector.center == bd.center);
                CHECK(bd.bisector.radius == bd.radius);
                CHECK(bd.extremities[0] == doctest::Approx(bd.center - bd.radius));
                CHECK(bd.extremities[1] == doctest::Approx(bd.center + bd.radius));
                CHECK(bd.exact_center.to_double() ==
                      doctest::Approx(bd.center).epsilon(1e-12));
                CHECK(bd.exact_radius_sq.to_double() ==
                      doctest::Approx(bd.radius * bd.radius).epsilon(1e-12));
                Isometry f = inverse ? e.matrix.inverse() : e.matrix;
                ExtendedPoint img = apply(f, base);
                for (int j = 0; j < 24; ++j) {
                    std::complex<double> z =
                        oracle::geodesic_point(bd.bisector, rng.uniform(-2.0, 2.0));
                    ExtendedPoint zp = oracle::as_point(z);
                    CHECK(oracle::dist(zp, base) ==
                          doctest::Approx(oracle::dist(zp, img)).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("the q = 4, n = 1 bisector is exactly the circle |z + 4| = 2") {
    FamilyElement e = make_family_element(Rational(4), 1);
    BisectorData bd = bisector_data(e, false);
    REQUIRE(bd.exact_center.as_rational().has_value());
    REQUIRE(bd.exact_radius_sq.as_rational().has_value());
    CHECK(*bd.exact_center.as_rational() == BigRational(-4));
    CHECK(*bd.exact_radius_sq.as_rational() == BigRational(4));
    CHECK(bd.center == -4.0);
    CHECK(bd.radius == 2.0);
    // Its mirror image: the inverse bisector is |z - 4| = 2.
    BisectorData bi = bisector_data(e, true);
    CHECK(*bi.exact_center.as_rational() == BigRational(4));
    CHECK(*bi.exact_radius_sq.as_rational() == BigRational(4));
}

namespace {
// Leading coefficient of the forward bisector center, c ~ -kappa(q) r_n.
double kappa(const Rational& q) {
    double qd = q.to_double();
    double sq = std::sqrt(qd);
    if (qd >= 4.0) return sq;
    return sq * ((sq - 2.0) * (sq - 2.0) - 3.0) / (1.0 - qd);
}
} // namespace

TEST_CASE("bisector centers approach -kappa(q) r_n as n grows") {
    for (const Rational& q : kGrid) {
        double prev = 1e9;
        for (int n = 4; n <= 12; n += 4) {
            BisectorData bd = bisector_data(make_family_element(q, n), false);
            double ratio = bd.center / (-family_step(n) * kappa(q));
            CHECK(std::abs(ratio - 1.0) < std::abs(prev - 1.0) + 1e-12);
            prev = ratio;
        }
        BisectorData last = bisector_data(make_family_element(q, 12), false);
        CHECK(std::abs(last.center / (-family_step(12) * kappa(q)) - 1.0) < 1e-4);
        // Radius and center grow at the same rate, with limiting ratio
        // 1/sqrt(q); for q >= 4 the ratio is identically 1/sqrt(q).
        CHECK(last.radius / std::abs(last.center)
              == doctest::Approx(1.0 / std::sqrt(q.to_double())).epsilon(1e-9));
    }
}

TEST_CASE("inverse bisectors pass the below-hypercycle predicate") {
    for (const Rational& q : kGrid)
        for (int n = 1; n <= 12; ++n)
            CHECK(below_hypercycle_check(make_family_element(q, n), true));
}

TEST_CASE("below-hypercycle predicate: forward bisectors split by q") {
    // Forward bisectors sit on the negative side; the q >= 4 ones are
    // steep enough, while q = 3/2 stays above the guide hypercycle.
    for (int n = 1; n <= 8; ++n) {
        CHECK(below_hypercycle_check(make_family_element(Rational(4), n), false));
        CHECK(below_hypercycle_check(make_family_element(Rational(9), n), false));
        CHECK_FALSE(below_hypercycle_check(make_family_element(Rational(3, 2), n), false));
    }
}

TEST_CASE("below-hypercycle predicate matches direct geometry") {
    // Cross-check the exact predicate against sampled points: below means
    // every sampled point z of the semicircle satisfies |x| / y >= 1
    // within rounding, i.e. lies weakly below the guide hypercycle.
    for (const Rational& q : kGrid) {
        for (int n = 1; n <= 6; ++n) {
            FamilyElement e = make_family_element(q, n);
            for (bool inverse : {false, true}) {
                BisectorData bd = bisector_data(e, inverse);
                double worst = 1e300;
                for (int j = 0; j <= 256; ++j) {
                    double th = M_PI * (j + 0.5) / 258.0;
                    double x = bd.center + bd.radius * std::cos(th);
                    double y = bd.radius * std::sin(th);
                    worst = std::min(worst, std::abs(x) / y);
                }
                bool sampled_below = worst >= 1.0 - 1e-12 &&
                                     (inverse ? bd.center > 0 : bd.center < 0);
                CHECK(below_hypercycle_check(e, inverse) == sampled_below);
            }
        }
    }
}
