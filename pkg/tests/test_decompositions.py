"""Structural decompositions of the unitary groups and their certificates."""

from __future__ import annotations

import json

import pytest

import f2units as f
from f2units.errors import NotUnitaryError


def checks_by_name(report):
    return {c.name: c for c in report.checks}


# ---------------------------------------------------------------------------
# classical-involution pipeline


def test_unipotent_factor_q8(q8, q8_form):
    w = f.build_unipotent_factor(q8_form)
    assert w.order == 4  # 2^(|A|/2)
    sigma = f.classical_involution(q8)
    for x in w.elements():
        assert f.ga_mul(x, x).is_one()
        assert f.ga_mul(x, f.ga_involute(sigma, x)).is_one()


def test_abelian_complement_q8(q8, q8_form):
    ell = f.build_abelian_complement(q8_form)
    assert ell.order == 2
    a_img = f.group_image(q8, q8_form.a_sub)
    v_a = f.enumerate_unitary(q8, f.classical_involution(q8), support=q8_form.a_sub)
    assert f.product_masks(q8, a_img.masks, ell.masks) == v_a.mask_set()
    assert a_img.mask_set() & ell.mask_set() == {1}


def test_conjugation_closure_q8_q16(q8_form, q16_form):
    assert f.check_conjugation_closure(q8_form)
    assert f.check_conjugation_closure(q16_form)


def test_split_form_accepts_every_unitary_element(q8, q8_form):
    v = f.enumerate_unitary(q8, f.classical_involution(q8))
    for x in v.elements():
        assert f.check_unitary_split_form(q8_form, x)


def test_split_form_rejects_non_unitary_normalized(q8, q8_form):
    v = f.enumerate_unitary(q8, f.classical_involution(q8)).mask_set()
    rejected = 0
    for m in range(1 << q8.order):
        if bin(m).count("1") % 2 == 1 and m not in v:
            if not f.check_unitary_split_form(q8_form, f.AlgebraElement(q8, m)):
                rejected += 1
    assert rejected == 64  # everything normalized outside the unitary set


def test_split_form_requires_a_unit(q8, q8_form):
    with pytest.raises(NotUnitaryError):
        f.check_unitary_split_form(q8_form, f.zero(q8))
    with pytest.raises(NotUnitaryError):
        f.check_unitary_split_form(q8_form, f.one(q8) + f.basis(q8, 1))


def test_verify_classical_q8_passes(q8_form):
    report = f.verify_inverting_decomposition(q8_form)
    assert report.passed
    names = checks_by_name(report)
    assert names["oracle_set_equality"].passed
    assert names["unitary_order_matches"].passed
    assert report.orders["oracle_unitary"] == 64
    assert report.orders["expected_unitary"] == 64


def test_verify_classical_skip_enumeration(q8_form):
    report = f.verify_inverting_decomposition(q8_form, skip_enumeration=True)
    assert report.passed
    names = checks_by_name(report)
    assert "oracle_set_equality" not in names
    assert "cofactor_members_unitary" in names


def test_verify_degrades_over_the_bound(q16_form):
    report = f.verify_inverting_decomposition(q16_form, max_order=8)
    assert report.passed
    assert "oracle_set_equality" not in checks_by_name(report)
    assert any("exceeds the exhaustive bound" in note for note in report.notes)


# ---------------------------------------------------------------------------
# twisted-involution pipeline


def test_central_unipotent_d8(d8, d8_odot_form):
    w = f.build_central_unipotent(d8_odot_form)
    assert w.order == 8  # 2^(3|C|/2)
    sigma = f.odot_involution(d8_odot_form)
    gens = [f.basis(d8, i) for i in d8.generators]
    for x in w.elements():
        assert f.ga_mul(x, x).is_one()
        assert f.ga_mul(x, f.ga_involute(sigma, x)).is_one()
        for gen in gens:
            assert f.ga_mul(x, gen) == f.ga_mul(gen, x)


def test_torsion_complement_sizes(d8_odot_form, d8xc2_odot_form):
    assert f.build_torsion_complement(d8_odot_form).order == 1
    t = f.build_torsion_complement(d8xc2_odot_form)
    assert t.order == 2


def test_quadrant_system_biconditional_d8(d8, d8_odot_form):
    sigma = f.odot_involution(d8_odot_form)
    unitary = f.enumerate_unitary(d8, sigma).mask_set()
    for m in range(1 << d8.order):
        if bin(m).count("1") % 2 == 1:
            got = f.check_unitary_quadrant_system(d8_odot_form, f.AlgebraElement(d8, m))
            assert got == (m in unitary)


def test_quadrant_components_have_even_coefficient_sum(q8, q8_odot_form):
    """For unitary x whose identity-coset component has coefficient sum 1,
    the other three quadrant components each sum to 0. (Without that
    normalization the claim is false: the basis element a is unitary and its
    whole support sits in the a-coset.)"""
    form = q8_odot_form
    sigma = f.odot_involution(form)
    seen_normalized = 0
    for x in f.enumerate_unitary(q8, sigma).elements():
        x0, x1, x2, x3 = f.quadrant_split(x, form.c_sub, form.a, form.b)
        if f.augmentation(x0) != 1:
            continue
        seen_normalized += 1
        assert f.augmentation(x1) == 0
        assert f.augmentation(x2) == 0
        assert f.augmentation(x3) == 0
    assert seen_normalized > 0


def test_quadrant_system_requires_a_unit(q8, q8_odot_form):
    with pytest.raises(NotUnitaryError):
        f.check_unitary_quadrant_system(q8_odot_form, f.zero(q8))


def test_verify_twisted_q8_passes(q8_odot_form):
    report = f.verify_odot_decomposition(q8_odot_form)
    assert report.passed
    names = checks_by_name(report)
    assert names["group_inside_unitary"].passed
    assert names["direct_product"].passed
    assert names["oracle_set_equality"].passed
    assert report.orders["oracle_unitary"] == 64


def test_verify_twisted_d8_fails_on_group_containment(d8_odot_form):
    """Reflections square to 1, not to the derived generator, so they are not
    unitary under the twisted involution and the advertised direct-product
    decomposition cannot hold; the report must say so with a witness."""
    report = f.verify_odot_decomposition(d8_odot_form)
    assert not report.passed
    names = checks_by_name(report)
    assert not names["group_inside_unitary"].passed
    assert names["group_inside_unitary"].witness == "s"
    assert not names["unitary_order_matches"].passed
    assert not names["oracle_set_equality"].passed
    # the constructed factors themselves are still internally sound
    assert names["central_unipotent_order_formula"].passed
    assert names["central_unipotent_members_central_unitary"].passed
    assert names["torsion_complement_exists"].passed
    assert report.orders["oracle_unitary"] == 32
    assert report.orders["expected_unitary"] == 64


def test_verify_twisted_skip_enumeration(q8_odot_form):
    report = f.verify_odot_decomposition(q8_odot_form, skip_enumeration=True)
    assert report.passed
    names = checks_by_name(report)
    assert "oracle_set_equality" not in names
    assert "factors_pairwise_direct" in names
    assert "torsion_members_unitary" in names


# ---------------------------------------------------------------------------
# report serialization


def test_report_shape_and_determinism(q8_form):
    a = f.verify_inverting_decomposition(q8_form).to_json_dict()
    b = f.verify_inverting_decomposition(q8_form, workers=4).to_json_dict()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["schema"] == 1
    assert set(a) == {
        "schema", "kind", "group", "involution", "instance",
        "orders", "checks", "notes", "pass",
    }
    for check in a["checks"]:
        assert set(check) <= {"name", "pass", "witness"}


def test_report_carries_instance_descriptors(q8_form):
    d = f.verify_inverting_decomposition(q8_form).to_json_dict()
    inst = d["instance"]
    assert inst["subgroup"] == ["1", "a", "a2", "a3"]
    assert inst["twist"] == "b"
    assert inst["transversal"] == ["1", "a"]
    assert "complement_generators" in inst
