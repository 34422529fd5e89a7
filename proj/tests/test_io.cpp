#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "hypflute/dynamics.hpp"
#include "hypflute/spec_io.hpp"
#include "hypflute/svg.hpp"

using namespace hypflute;

namespace {
const GroupSpec& spec5() {
    static GroupSpec s = select_generators(5);
    return s;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/hypflute_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};
} // namespace

TEST_CASE("spec JSON: schema, field order, shortest-round-trip numbers") {
    ordered_json j = spec_to_json(spec5());
    CHECK(j.at("schema") == kSpecSchema);
    CHECK(j.at("C") == constant_C());
    CHECK(j.at("enumeration").at("type") == "seeded-stern-brocot-cantor");
    CHECK(j.at("enumeration").at("seeds").size() == 5);
    REQUIRE(j.at("generators").size() == 5);
    const auto& g0 = j.at("generators").at(0);
    CHECK(g0.at("m") == 0);
    CHECK(g0.at("q") == "3/2");
    CHECK(g0.at("n") == 1);
    CHECK(g0.at("branch") == "H");
    CHECK(g0.at("r") == 2.0);
    REQUIRE(g0.at("matrix").size() == 4);
    CHECK(g0.at("bisectors").at("fwd").at("extremities").size() == 2);
    // Dumping twice is byte-identical.
    CHECK(j.dump(2) == spec_to_json(spec5()).dump(2));
}

TEST_CASE("spec JSON round-trips through parse") {
    GroupSpec back = spec_from_json(spec_to_json(spec5()));
    REQUIRE(back.generators.size() == spec5().generators.size());
    CHECK(back.C == spec5().C);
    for (std::size_t i = 0; i < back.generators.size(); ++i) {
        const SelectedGenerator& a = spec5().generators[i];
        const SelectedGenerator& b = back.generators[i];
        CHECK(a.m == b.m);
        CHECK(a.element.q == b.element.q);
        CHECK(a.element.n == b.element.n);
        CHECK(a.element.branch == b.element.branch);
        CHECK(a.element.matrix.a == doctest::Approx(b.element.matrix.a).epsilon(1e-15));
        CHECK(a.element.matrix.b == doctest::Approx(b.element.matrix.b).epsilon(1e-15));
        CHECK(a.fwd.center == b.fwd.center);
        CHECK(a.inv.radius == b.inv.radius);
        CHECK(a.fwd.extremities[0] == b.fwd.extremities[0]);
    }
    // Serializing the round-tripped spec reproduces the bytes.
    CHECK(spec_to_json(back).dump(2) == spec_to_json(spec5()).dump(2));
}

TEST_CASE("spec files: save and load") {
    TempFile f("roundtrip.json");
    save_spec_file(spec5(), f.path);
    GroupSpec back = load_spec_file(f.path);
    CHECK(back.generators.size() == 5);
    validate_spec(back, 1e-9);
}

TEST_CASE("unreadable, malformed, and mismatched files are format errors") {
    CHECK_THROWS_AS(load_spec_file("/nonexistent/nope.json"), SpecFormatError);

    TempFile junk("junk.json");
    std::ofstream(junk.path) << "this is not json {";
    CHECK_THROWS_AS(load_spec_file(junk.path), SpecFormatError);

    TempFile wrong("wrong_schema.json");
    ordered_json j = spec_to_json(spec5());
    j["schema"] = "something-else";
    std::ofstream(wrong.path) << j.dump();
    CHECK_THROWS_AS(load_spec_file(wrong.path), SpecFormatError);

    TempFile missing("missing_field.json");
    ordered_json j2 = spec_to_json(spec5());
    j2["generators"][0].erase("q");
    std::ofstream(missing.path) << j2.dump();
    CHECK_THROWS_AS(load_spec_file(missing.path), SpecFormatError);

    TempFile badmat("bad_matrix.json");
    ordered_json j3 = spec_to_json(spec5());
    j3["generators"][0]["matrix"] = {1.0, 0.0, 0.0, -1.0}; // negative determinant
    std::ofstream(badmat.path) << j3.dump();
    CHECK_THROWS_AS(load_spec_file(badmat.path), SpecFormatError);
}

TEST_CASE("validation detects tampered stored values") {
    ordered_json j = spec_to_json(spec5());
    j["generators"][1]["matrix"][0] = j["generators"][1]["matrix"][0].get<double>() * 1.001;
    GroupSpec tampered = spec_from_json(j);
    CHECK_THROWS_AS(validate_spec(tampered, 1e-9), SpecFormatError);

    ordered_json j2 = spec_to_json(spec5());
    j2["generators"][2]["bisectors"]["inv"]["center"] = 12345.0;
    CHECK_THROWS_AS(validate_spec(spec_from_json(j2), 1e-9), SpecFormatError);

    ordered_json j3 = spec_to_json(spec5());
    j3["C"] = 0.25;
    CHECK_THROWS_AS(validate_spec(spec_from_json(j3), 1e-9), SpecFormatError);

    ordered_json j4 = spec_to_json(spec5());
    j4["generators"][3]["m"] = 1; // indices must increase
    CHECK_THROWS_AS(validate_spec(spec_from_json(j4), 1e-9), SpecFormatError);

    validate_spec(spec_from_json(spec_to_json(spec5())), 1e-9); // clean spec passes
}

TEST_CASE("report JSON shapes carry the report schema and kind") {
    const GroupSpec& spec = spec5();
    ordered_json pp = report_json(verify_pingpong(spec));
    CHECK(pp.at("schema") == kReportSchema);
    CHECK(pp.at("kind") == "pingpong");
    CHECK(pp.at("ok") == true);
    CHECK(pp.contains("min_geodesic_gap"));

    ordered_json inj = report_json(injectivity_lower_bound_check(spec, 2, 20));
    CHECK(inj.at("kind") == "injectivity");
    CHECK(inj.at("ok") == true);
    CHECK(inj.at("samples_used") == 20);
    CHECK(inj.at("argmin_point").size() == 2);

    // Five generators only reach n=7 for q=3/2, so loosen the residual
    // target accordingly (residual ~ 1/(q r_n^2) ~ 3e-7 at n=7).
    ordered_json wit = report_json(orbit_closure_witness(spec, Rational(3, 2), 2, 1e-6));
    CHECK(wit.at("kind") == "witness");
    CHECK(wit.at("q") == "3/2");
    CHECK(wit.at("terms").size() >= 2);
    CHECK(wit.at("pass") == true);

    InjProfile prof = inj_profile(spec, 1.0, 1e4, 60, 1);
    ordered_json pj = report_json(prof, iinj_estimate(prof), "PASS");
    CHECK(pj.at("kind") == "inj_profile");
    CHECK(pj.at("heights").size() == pj.at("inj").size());
    CHECK(pj.at("verdict") == "PASS");

    ordered_json st = report_json(step2_search(make_family_element(Rational(4), 1).matrix,
                                               1.0, 2.5));
    CHECK(st.at("kind") == "busemann_hit");
    CHECK(st.at("k_found") == 1);
    CHECK(st.at("interval").at(0) == 1.0);

    ordered_json df = report_json(almost_minimizing_defect(spec, 40.0, 2));
    CHECK(df.at("kind") == "ray_defect");
    CHECK(df.at("defect") == 0.0);
}

TEST_CASE("scene generation and SVG rendering") {
    const GroupSpec& spec = spec5();
    for (const std::string& which : {"bisectors", "axes", "ray", "domain", "all"}) {
        for (bool log_y : {false, true}) {
            SceneDescription scene = scene_for_spec(spec, which, log_y);
            CHECK_FALSE(scene.items.empty());
            std::string svg = render_svg(scene);
            CHECK(svg.rfind("<svg", 0) == 0);
            CHECK(svg.find("</svg>") != std::string::npos);
            CHECK(svg.find("NaN") == std::string::npos);
            CHECK(svg.find("nan") == std::string::npos);
            CHECK(svg.find("inf") == std::string::npos);
        }
    }
    // Determinism.
    CHECK(render_svg(scene_for_spec(spec, "all", false)) ==
          render_svg(scene_for_spec(spec, "all", false)));
    // An empty group still renders the reference curves.
    GroupSpec empty;
    empty.C = constant_C();
    empty.enumeration = Enumeration::standard();
    std::string svg = render_svg(scene_for_spec(empty, "bisectors", false));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK_THROWS(scene_for_spec(spec, "nonsense", false));
}
