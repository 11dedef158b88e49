"""Catalog data, the fiber integrand, derived and closed genus factors,
and the polynomial table."""

from fractions import Fraction as F

import pytest

from ellgenus import (
    CATALOG,
    FAMILIES,
    BundleSpec,
    FibrationSpec,
    Poly,
    RootForm,
    WSeries,
    closed_form_q,
    closed_form_text,
    derived_q,
    fiber_integrand,
    hirzebruch_class,
    p_polynomial,
    p_table_reference,
    pushforward,
    pushforward_class,
    todd_factor,
)


def test_catalog_root_data():
    expected = {
        "D5": ((0, 1, 1, 1), ((2, 2), (2, 2))),
        "E6": ((0, 1, 1), ((3, 3),)),
        "E7": ((0, 1, 2, 2), ((2, 2), (2, 4))),
        "E8": ((0, 2, 3), ((3, 6),)),
    }
    for fam, (exps, nroots) in expected.items():
        spec = CATALOG[fam]
        assert spec.bundle.exps == exps
        assert tuple((r.a, r.b) for r in spec.n_roots) == nroots
        assert tuple((r.a, r.b) for r in spec.f_roots) == tuple(
            (1, m) for m in exps
        )
        assert spec.fiber_dim == 1


def test_spec_validates_f_roots():
    with pytest.raises(ValueError):
        FibrationSpec(
            name="bad",
            bundle=BundleSpec((0, 1)),
            n_roots=(),
            f_roots=(RootForm(1, 0), RootForm(1, 2)),
        )


def test_spec_rejects_nonpositive_normal_roots():
    with pytest.raises(ValueError):
        FibrationSpec(
            name="bad", bundle=BundleSpec((0, 1, 1)), n_roots=(RootForm(0, 3),)
        )


def test_spec_rejects_negative_fiber_dim():
    with pytest.raises(ValueError):
        FibrationSpec(
            name="bad",
            bundle=BundleSpec((0, 1)),
            n_roots=(RootForm(1, 1), RootForm(2, 2)),
        )


# -- the integrand -------------------------------------------------------------


def test_d5_integrand_matches_displayed_formula():
    # character-by-character rebuild of the D5 integrand:
    # (1+y e^-H)(1+y e^-H-L)^3 / ((1+y e^-2H-2L)^2 (1+y))
    #   * H (H+L)^3 (1-e^-2H-2L)^2 / ((1-e^-H)(1-e^-H-L)^3)
    # where the H(H+L)^3/(...) part is assembled as Todd factors.
    wmax, qmax = 5, 4
    y = WSeries.y(wmax, qmax)
    H = WSeries.var("H", wmax, qmax)
    L = WSeries.var("L", wmax, qmax)
    eH = (-H).exp()
    eHL = (-H - L).exp()
    e2 = (-2 * H - 2 * L).exp()
    numerator = (1 + y * eH) * (1 + y * eHL) ** 3 * (1 - e2) ** 2
    denominator = (1 + y * e2) ** 2 * (1 + y)
    todd_part = todd_factor(RootForm(1, 0), wmax, qmax) * (
        todd_factor(RootForm(1, 1), wmax, qmax) ** 3
    )
    longhand = numerator * denominator.inverse() * todd_part
    assert fiber_integrand(CATALOG["D5"], wmax, qmax) == longhand


def test_integrand_weight_zero_vanishes():
    D = fiber_integrand(CATALOG["D5"], 4, 3)
    for q in range(0, 4):
        assert D.coeff(0, q).is_zero()


def test_integrand_y_zero_slice_is_todd_type():
    wmax = 4
    spec = CATALOG["E8"]
    D = fiber_integrand(spec, wmax, 2)
    expected = WSeries.const(1, wmax, 0)
    for r in spec.f_roots:
        expected = expected * todd_factor(r, wmax, 0)
    for r in spec.n_roots:
        expected = expected * (1 - (-r.series(wmax, 0)).exp())
    assert D.y_slice(0).truncate(wmax, 0) == expected


def test_identity_fibration_pushes_to_one():
    # rank-1 bundle, no normal roots: Y = P(E) = B, so Q = 1
    spec = FibrationSpec(name="identity", bundle=BundleSpec((0,)), n_roots=())
    wmax, qmax = 4, 3
    D = fiber_integrand(spec, wmax, qmax)
    y = WSeries.y(wmax, qmax)
    H = WSeries.var("H", wmax, qmax)
    longhand = (
        (1 + y * (-H).exp())
        * todd_factor(RootForm(1, 0), wmax, qmax)
        * (1 + y).inverse()
    )
    assert D == longhand
    assert pushforward(D, spec.bundle) == WSeries.const(1, wmax, qmax)


def test_integrand_rejects_tiny_wmax():
    with pytest.raises(ValueError):
        fiber_integrand(CATALOG["D5"], 1, 2)


# -- derived vs closed ------------------------------------------------------------


def test_derived_equals_closed_smoke():
    for fam in FAMILIES:
        assert derived_q(fam, 3, 3) == closed_form_q(fam, 3, 3)


def test_derived_q_accepts_family_name_or_spec():
    assert derived_q("E6", 2, 2) == derived_q(CATALOG["E6"], 2, 2)


def test_closed_form_y_zero_slice_is_one_minus_u():
    wmax, qmax = 4, 3
    one_minus_u = (1 - (-WSeries.var("L", wmax, qmax)).exp()).y_slice(0)
    for fam in FAMILIES:
        assert closed_form_q(fam, wmax, qmax).y_slice(0) == one_minus_u


def test_closed_form_vanishes_at_u_equal_one():
    # U = 1 is the L -> 0 slice: the weight-0 part must vanish in every
    # y-degree (chi_y of the fiber itself is 0)
    for fam in FAMILIES:
        Q = closed_form_q(fam, 3, 5)
        for q in range(0, 6):
            assert Q.coeff(0, q).is_zero()


def test_closed_form_text_mentions_all_families():
    for fam in FAMILIES:
        text = closed_form_text(fam)
        assert "U" in text and "y" in text


def test_derived_y_zero_slice_anticanonical_row():
    # catalog normal data satisfies the anticanonical condition, so the
    # pushforward route reproduces P_0 = 1 - U on its own
    wmax, qmax = 3, 2
    one_minus_u = (1 - (-WSeries.var("L", wmax, qmax)).exp()).y_slice(0)
    for fam in FAMILIES:
        assert derived_q(fam, wmax, qmax).y_slice(0) == one_minus_u


# -- the polynomial table -----------------------------------------------------------


def test_p_table_small_entries():
    U = Poly.x()
    assert p_polynomial("E7", 1) == U**5 + U**4 + U**3 - U - 2
    assert p_polynomial("D5", 3) == -U * (4 * U - 1) * (U - 1) * (U + 1) ** 2 * (
        -(U**2)
    )
    assert p_polynomial("E8", 0) == 1 - U


def test_p_table_matches_reference_forms():
    for fam in FAMILIES:
        for n in range(0, 7):
            assert p_polynomial(fam, n) == p_table_reference(fam, n)


def test_e8_high_rows_follow_geometric_pattern():
    U = Poly.x()
    for n in range(2, 6):
        expected = -(U**5) * (U**6 - 1) * (U**2 + 1) * (-(U**6)) ** (n - 2)
        assert p_polynomial("E8", n) == expected


def test_root_locations():
    # table rows vanish at U = 0 and U = 1 exactly; D5 carries the extra
    # rational root (n-2)/(n+1), verified by exact polynomial division
    U = Poly.x()
    for fam in FAMILIES:
        for n in range(2, 7):
            p = p_polynomial(fam, n)
            _, rem0 = p.divmod(U)
            assert rem0.is_zero()
            _, rem1 = p.divmod(U - 1)
            assert rem1.is_zero()
    for n in range(2, 7):
        p = p_polynomial("D5", n)
        divisor = (n + 1) * U - (n - 2)
        _, rem = p.divmod(divisor)
        assert rem.is_zero()
        assert p.evaluate(F(n - 2, n + 1)) == 0


def test_u_degree_structure():
    widths = {"D5": 2, "E6": 3, "E7": 4, "E8": 6}
    for fam in FAMILIES:
        for n in range(0, 7):
            assert p_polynomial(fam, n).degree() == widths[fam] * n + 1


# -- pushed-forward classes -----------------------------------------------------------


def test_pushforward_class_q0_is_one_minus_u_times_todd():
    d, qmax = 3, 5
    got = pushforward_class("E6", 0, d, qmax)
    one_minus_u = (1 - (-WSeries.var("L", d, qmax)).exp()).y_slice(0)
    td = hirzebruch_class(d, qmax).y_slice(0)
    assert got == one_minus_u * td


def test_pushforward_class_e8_anticanonical_integral_vanishes():
    # weight-2 part of (1 - U) td(B) over (P^2, L = 3h) integrates to 0
    from ellgenus import BaseSpec, integrate

    cls = pushforward_class("E8", 0, 2).weight_component(2)
    base = BaseSpec.projective_space(2, 3)
    assert integrate(cls, base) == 0


def test_pushforward_class_matches_product_slices():
    # y^q slice of Q * H_y(B), both factors expanded directly
    d, qmax = 2, 4
    for fam in ("D5", "E8"):
        Q = closed_form_q(fam, d, qmax)
        base = hirzebruch_class(d, qmax)
        product = Q * base
        for q in range(0, 4):
            assert pushforward_class(fam, q, d, qmax) == product.y_slice(q)
