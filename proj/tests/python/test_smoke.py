"""End-to-end smoke tests for the Python bindings."""

import math

import hypflute as hf


def test_constant():
    assert math.isclose(hf.C, math.asinh(1.0) / 2.0, rel_tol=0, abs_tol=1e-15)
    assert hf.constant_C() == hf.C


def test_dist_and_busemann():
    assert math.isclose(hf.dist(1j, 10j), math.log(10.0), abs_tol=1e-12)
    assert math.isclose(hf.dist(0.3 + 1j, 0.3 + 1j), 0.0, abs_tol=1e-15)
    # Busemann normalization toward infinity: ln(Im w / Im z).
    assert math.isclose(hf.busemann(float("inf"), 0.5j, 2j), math.log(4.0), abs_tol=1e-12)
    assert math.isclose(hf.busemann(0.0, 1j, 1j), 0.0, abs_tol=1e-15)


def test_family_matrix_and_bisector():
    m = hf.family_matrix("4", 1)
    assert (m.a, m.b, m.c, m.d) == (2.0, -6.0, -0.5, 2.0)
    assert m.type() == "hyperbolic"
    assert math.isclose(m.translation_length(), 2.0 * math.acosh(2.0), abs_tol=1e-12)
    z = m.apply(1j)
    assert z.imag > 0
    b = hf.bisector("4", 1, False)
    assert math.isclose(b["center"], -4.0, abs_tol=1e-12)
    assert math.isclose(b["radius"], 2.0, abs_tol=1e-12)
    assert hf.below_hypercycle("4", 1, True)
    assert not hf.below_hypercycle("3/2", 1, False)


def test_isometry_algebra():
    m = hf.family_matrix("2", 2)
    e = m * m.inverse()
    assert math.isclose(e.a, 1.0, abs_tol=1e-12)
    assert abs(e.b) < 1e-12
    z = m.apply(0.25 + 2j)
    assert math.isclose(
        m.displacement(0.25 + 2j), hf.dist(0.25 + 2j, z), abs_tol=1e-12
    )


def test_pipeline():
    spec = hf.construct(6)
    assert spec["schema"] == "hypflute-spec-1"
    assert len(spec["generators"]) == 6
    assert spec["generators"][0]["q"] == "3/2"

    pp = hf.verify_pingpong(spec)
    assert pp["ok"]
    assert pp["min_geodesic_gap"] > hf.C

    chk = hf.injectivity_check(spec, word_len=3, samples=50)
    assert chk["ok"]
    assert chk["min_displacement"] >= hf.C - 1e-9
    assert chk["samples_used"] == 50

    assert hf.dirichlet_contains(spec, 1j)
    assert hf.dirichlet_contains(spec, 1e4j)

    w = hf.witness(spec, "3/2", 2)
    assert w["pass"]
    assert len(w["terms"]) >= 2

    est = hf.inj_estimate(spec, t_min=1.0, t_max=1e4, points=200, word_len=2)
    assert hf.C - 1e-9 <= est <= 2.0 * math.acosh(2.0) + 1e-6

    svg = hf.render_svg(spec, "bisectors")
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")
