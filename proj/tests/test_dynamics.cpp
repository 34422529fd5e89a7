#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hypflute/dynamics.hpp"
#include "hypflute/geometry.hpp"
#include "oracles.hpp"

using namespace hypflute;

namespace {
const GroupSpec& spec6() {
    static GroupSpec s = select_generators(6);
    return s;
}

// Height at which a generator's axis crosses the imaginary axis, if it does.
std::vector<double> axis_crossings(const GroupSpec& spec, double t_min, double t_max) {
    std::vector<double> out;
    for (const SelectedGenerator& g : spec.generators) {
        IsometryClass cls = classify(g.element.matrix);
        REQUIRE(cls.axis.has_value());
        if (cls.axis->is_vertical()) continue;
        double c = cls.axis->center, rho = cls.axis->radius;
        if (std::abs(c) >= rho) continue;
        double h = std::sqrt((rho - c) * (rho + c));
        if (h >= t_min && h <= t_max) out.push_back(h);
    }
    std::sort(out.begin(), out.end());
    return out;
}
} // namespace

TEST_CASE("injectivity profile: grid contents and single-letter ceiling") {
    const GroupSpec& spec = spec6();
    InjProfile p = inj_profile(spec, 1.0, 1e4, 200, 2);
    CHECK(p.t_min == 1.0);
    CHECK(p.t_max == 1e4);
    CHECK(p.word_len == 2);
    REQUIRE(p.heights.size() >= 200);
    REQUIRE(p.inj.size() == p.heights.size());
    REQUIRE(p.words.size() == p.heights.size());
    CHECK(p.heights.front() == doctest::Approx(1.0));
    CHECK(p.heights.back() == doctest::Approx(1e4));
    for (std::size_t i = 1; i < p.heights.size(); ++i) CHECK(p.heights[i] > p.heights[i - 1]);

    // Every axis crossing of a generator is represented in the grid.
    std::vector<double> crossings = axis_crossings(spec, 1.0, 1e4);
    REQUIRE_FALSE(crossings.empty());
    REQUIRE(p.crossing_heights.size() == crossings.size());
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        CHECK(p.crossing_heights[i] == doctest::Approx(crossings[i]).epsilon(1e-12));
        bool in_grid = false;
        for (double h : p.heights)
            if (h == doctest::Approx(crossings[i]).epsilon(1e-12)) in_grid = true;
        CHECK(in_grid);
    }

    WordSet ws = enumerate_words(spec, 2);
    for (std::size_t i = 0; i < p.heights.size(); i += 17) {
        ExtendedPoint z = ExtendedPoint::interior(0.0, p.heights[i]);
        CHECK(p.inj[i] >= constant_C() - 1e-9);
        CHECK_FALSE(p.words[i].empty());
        // The profile is exactly the word-set minimum at that height.
        auto [ref, idx] = min_displacement_over_words(ws, z);
        CHECK(p.inj[i] == doctest::Approx(ref).epsilon(1e-12));
        // ... and is bounded by each single letter.
        for (const SelectedGenerator& g : spec.generators)
            CHECK(p.inj[i] <= displacement(g.element.matrix, z) + 1e-12);
    }
}

TEST_CASE("injectivity profile dips to the translation length at a crossing") {
    const GroupSpec& spec = spec6();
    InjProfile p = inj_profile(spec, 1.0, 1e4, 50, 1);
    for (const SelectedGenerator& g : spec.generators) {
        IsometryClass cls = classify(g.element.matrix);
        if (cls.axis->is_vertical() || std::abs(cls.axis->center) >= cls.axis->radius) continue;
        double h = std::sqrt((cls.axis->radius - cls.axis->center) *
                             (cls.axis->radius + cls.axis->center));
        if (h < 1.0 || h > 1e4) continue;
        for (std::size_t i = 0; i < p.heights.size(); ++i) {
            if (p.heights[i] == doctest::Approx(h).epsilon(1e-12)) {
                CHECK(p.inj[i] <= *cls.translation_length + 1e-9);
                CHECK(p.inj[i] >= 2.0 * constant_C() - 1e-9);
            }
        }
    }
}

TEST_CASE("injectivity profile with a single point degenerates to t_min") {
    InjProfile p = inj_profile(spec6(), 3.0, 1e3, 1, 1);
    REQUIRE(p.heights.size() == 1);
    CHECK(p.heights[0] == 3.0);
    CHECK(p.inj.size() == 1);
}

TEST_CASE("liminf estimate takes the minimum over the late windows") {
    const GroupSpec& spec = spec6();
    InjProfile p = inj_profile(spec, 1.0, 1e4, 300, 2);
    double thr = iinj_late_threshold(p);
    CHECK(thr > 1.0);
    CHECK(thr < 1e4);
    double expect = 1e300;
    for (std::size_t i = 0; i < p.heights.size(); ++i)
        if (p.heights[i] >= thr) expect = std::min(expect, p.inj[i]);
    CHECK(iinj_estimate(p) == expect);
    // Larger window factor moves the threshold but keeps an estimate.
    CHECK(iinj_estimate(p, 4.0) >= 2.0 * constant_C() - 1e-9);
}

TEST_CASE("liminf estimate requires at least three windows") {
    InjProfile p = inj_profile(spec6(), 1.0, 3.0, 20, 1);
    CHECK_THROWS(iinj_estimate(p));
}

namespace {
Isometry g41() { return make_family_element(Rational(4), 1).matrix; }
} // namespace

TEST_CASE("return-height search: first hit of [1, 2.5) is ln(17/4) at k = 1") {
    StepTwoRecord rec = step2_search(g41(), 1.0, 2.5);
    CHECK(rec.k_found == 1);
    REQUIRE(rec.r.size() == 1);
    CHECK(std::abs(rec.r[0] - std::log(17.0 / 4.0)) < 1e-12);
    CHECK(rec.lo == 1.0);
    CHECK(rec.hi == 2.5);
    CHECK(rec.displacement_bound ==
          doctest::Approx(dist(ExtendedPoint::interior(0, 1),
                               apply(g41().inverse(), ExtendedPoint::interior(0, 1))))
              .epsilon(1e-12));
    CHECK(rec.max_increment <= rec.displacement_bound + 1e-12);
}

TEST_CASE("return-height search: deep windows are reached monotonically") {
    StepTwoRecord rec = step2_search(g41(), 50.0, 53.0);
    CHECK(rec.k_found >= 15);
    CHECK(rec.r.back() >= 50.0);
    CHECK(rec.r.back() < 53.0);
    for (std::size_t i = 1; i < rec.r.size(); ++i) {
        CHECK(rec.r[i] > rec.r[i - 1]);
        CHECK(rec.r[i] - rec.r[i - 1] <= rec.displacement_bound + 1e-12);
    }
    // Increments settle near the translation length 2 arccosh(2).
    double last_inc = rec.r.back() - rec.r[rec.r.size() - 2];
    CHECK(last_inc == doctest::Approx(2.0 * std::acosh(2.0)).epsilon(1e-6));
}

TEST_CASE("return-height search: intervals that the sequence skips are reported") {
    double r1 = std::log(17.0 / 4.0);
    CHECK_THROWS_AS(step2_search(g41(), r1 + 0.01, r1 + 0.02), NoHitError);
    CHECK_THROWS_AS(step2_search(g41(), 0.1, 0.2), NoHitError); // below the first height
    CHECK_THROWS_AS(step2_search(g41(), 1e8, 1e8 + 1, 50), NoHitError); // cap reached
    // A parabolic never raises its return height, so the cap fires too.
    CHECK_THROWS_AS(step2_search(Isometry::translation(1.0), 1.0, 2.0), NoHitError);
}

TEST_CASE("return heights agree with exact rational iteration") {
    // g_{4,1} has rational entries, so the backward orbit of i can be
    // followed in exact arithmetic: Im of the k-th point is
    // 1 / (c_k^2 + d_k^2) for the bottom row of the k-th inverse power.
    StepTwoRecord rec = step2_search(g41(), 25.0, 28.0);
    std::array<BigRational, 4> A = {BigRational(2), BigRational(6), BigRational(1, 2),
                                    BigRational(2)};
    std::array<BigRational, 4> P = A;
    for (std::size_t k = 1; k <= rec.r.size(); ++k) {
        BigRational den = P[2] * P[2] + P[3] * P[3];
        double exact_r = std::log(den.convert_to<double>());
        CHECK(std::abs(rec.r[k - 1] - exact_r) < 1e-10);
        std::array<BigRational, 4> nxt = {A[0] * P[0] + A[1] * P[2], A[0] * P[1] + A[1] * P[3],
                                          A[2] * P[0] + A[3] * P[2], A[2] * P[1] + A[3] * P[3]};
        P = nxt;
    }
}

TEST_CASE("orbit-closure witness: terms, closed forms, increasing heights") {
    GroupSpec spec = select_generators(12);
    WitnessReport w = orbit_closure_witness(spec, Rational(3, 2), 3);
    CHECK(w.q == Rational(3, 2));
    CHECK(w.target == doctest::Approx(std::log(1.5)).epsilon(1e-15));
    REQUIRE(w.terms.size() >= 3);
    CHECK(w.increasing);
    CHECK(w.pass);
    double prev = 0.0;
    for (const WitnessTerm& t : w.terms) {
        double r = family_step(t.n);
        CHECK(t.alpha_inf == doctest::Approx(r * std::sqrt(1.5)).epsilon(1e-13));
        CHECK(std::abs(t.alpha_inf) > prev);
        prev = std::abs(t.alpha_inf);
        // The Busemann value has the closed form ln(q + 1/r^2), and the
        // residual is its gap to the target ln q.
        CHECK(t.busemann == doctest::Approx(std::log(1.5 + 1.0 / (r * r))).epsilon(1e-12));
        CHECK(t.residual == doctest::Approx(std::log1p(1.0 / (1.5 * r * r))).epsilon(1e-12));
        CHECK(t.residual >= 0.0);
    }
    CHECK(w.terms.back().residual < 1e-8);
    // The Busemann value matches a direct evaluation for the first term.
    const SelectedGenerator* g0 = nullptr;
    for (const SelectedGenerator& g : spec.generators)
        if (g.m == w.terms.front().m) g0 = &g;
    REQUIRE(g0 != nullptr);
    ExtendedPoint img = apply(g0->element.matrix, ExtendedPoint::interior(0, 1));
    double direct = busemann(ExtendedPoint::infinity(), img, ExtendedPoint::interior(0, 1));
    CHECK(w.terms.front().busemann == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("orbit-closure witness: q = 2 has exactly three terms in a 12-group") {
    GroupSpec spec = select_generators(12);
    WitnessReport w = orbit_closure_witness(spec, Rational(2), 3);
    CHECK(w.terms.size() == 3);
    CHECK(w.pass);
}

TEST_CASE("orbit-closure witness: too few matching generators is an error") {
    GroupSpec spec = select_generators(12);
    CHECK_THROWS_AS(orbit_closure_witness(spec, Rational(5), 1), InsufficientDataError);
    CHECK_THROWS_AS(orbit_closure_witness(spec, Rational(9), 2), InsufficientDataError);
    try {
        orbit_closure_witness(spec, Rational(3), 1);
    } catch (const InsufficientDataError& e) {
        CHECK(std::string(e.what()).find("enlarge the group") != std::string::npos);
    }
}

TEST_CASE("the vertical ray is minimizing to the sampled depth") {
    const GroupSpec& spec = spec6();
    for (double t_max : {50.0, 250.0, 400.0}) { // spans the asymptotic switch
        DefectReport d = almost_minimizing_defect(spec, t_max, 2);
        CHECK(d.t_max == t_max);
        CHECK(d.defect == 0.0);
        CHECK(d.argmax_word.empty());
    }
    DefectReport d3 = almost_minimizing_defect(spec, 60.0, 3, 128);
    CHECK(d3.defect == 0.0);
}
