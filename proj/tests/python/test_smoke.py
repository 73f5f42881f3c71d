import cmath
import math

import pytest

import cusp_radius as cr


def test_domain_basics():
    d = cr.EpicycloidDomain(8)
    assert d.n == 8
    assert d.phi(0) == 1
    assert abs(d.phi(1) - 2.0) < 1e-15
    b = d.boundary(math.pi)
    assert abs(b.x - 2.0 / 9.0) < 1e-14 and abs(b.y) < 1e-14
    assert len(d.cusp_angles()) == 7
    assert d.contains(1.0) == "inside"
    assert d.contains(3.0) == "outside"


def test_constructor_rejects_odd_n():
    with pytest.raises(Exception):
        cr.EpicycloidDomain(5)


def test_inscribed_radius_and_extremes():
    d = cr.EpicycloidDomain(4)
    assert abs(d.inscribed_radius(1.0) - 0.6) < 1e-12
    assert abs(d.min_real_part() - (1 - math.cos(math.pi / 5))) < 1e-12
    assert abs(d.max_argument() - (math.pi / 2 - math.pi / 8)) < 1e-12
    assert abs(d.hausdorff_gap_to_unit_circle(20000) - 0.4) < 1e-8


def test_backward_radius_matches_published_table():
    sl = cr.comparator("sl-alpha", alpha=0.0)
    res = cr.backward_radius(sl, 4)
    assert abs(res["closed_form"] - 0.501903) < 1e-5
    assert abs(cr.table2_value(0, 4) - 0.501903) < 1e-12

    sinh = cr.comparator("arc-sinh")
    assert abs(cr.backward_radius(sinh, 8)["closed_form"] - 0.924715) < 1e-5


def test_backward_oracle_agreement():
    sg = cr.comparator("sg")
    res = cr.backward_radius(sg, 6, with_oracle=True)
    assert res["agree"]
    assert abs(res["oracle"] - 0.535219) < 1e-4


def test_forward_radius_and_limit():
    w = cr.comparator("w")
    res = cr.forward_radius(w, 4)
    assert abs(res["closed_form"] - (math.sqrt(34) - 5) / 3) < 1e-12
    assert abs(cr.limit_radius(cr.comparator("z-exp")) - 0.567143) < 1e-4


def test_membership_predicates():
    lune = cr.comparator("lune")
    assert lune.membership(1.0) == "inside"
    sg = cr.comparator("sg")
    e = math.e
    assert sg.membership(2 * e / (e + 1)) == "boundary"
    zexp = cr.comparator("z-exp")
    assert zexp.membership(1 - 1 / e + 1e-6) == "inside"
    assert zexp.membership(1 - 1 / e - 1e-6) == "outside"


def test_inclusion_constants():
    rep = cr.inclusion_constants(8)
    assert abs(rep["alpha0"] - (1 - math.cos(math.pi / 9))) < 1e-12
    assert abs(rep["cassinian_c_max"] - 77 / 81) < 1e-14
    assert cr.janowski_inclusion(8, 1 - 2 / 9, 0.0)
    assert not cr.janowski_inclusion(8, 1.0, -1.0)


def test_coefficients_and_lambert():
    rep = cr.coefficient_bounds(4)
    assert rep["bounds_exact"][0] == "4/5"
    assert rep["extremal_exact"][2] == "4/15"
    assert not rep["agreement"][2]
    coeffs = cr.extremal_coefficients(4, 2, 4)
    assert abs(coeffs[2] - 0.8) < 1e-15
    assert abs(cr.lambert_w0(1.0) - 0.5671432904097838) < 1e-12
    z = cr.lambert_w0_complex(0.3 + 0.4j)
    assert abs(z * cmath.exp(z) - (0.3 + 0.4j)) < 1e-12
