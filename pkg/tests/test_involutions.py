"""Anti-automorphisms and the two decomposition-instance validators."""

from __future__ import annotations

import pytest

import f2units as f
from f2units.errors import (
    BadOrderError,
    CenterQuotientNotKleinError,
    NotAbelianSubgroupError,
    NotInvertingError,
    WrongIndexError,
)


# ---------------------------------------------------------------------------
# the involutions themselves


def test_classical_involution_is_the_inverse_map(q8):
    sigma = f.classical_involution(q8)
    assert tuple(sigma.perm) == tuple(q8.inv)
    assert f.validate_involution(sigma)


def test_odot_fixes_center_and_twists_the_rest(d8, d8_odot_form):
    sigma = f.odot_involution(d8_odot_form)
    e = d8_odot_form.e
    central = f.center(d8).member_set()
    for g in range(d8.order):
        if g in central:
            assert sigma.perm[g] == g
        else:
            assert sigma.perm[g] == d8.mul[g][e]
    assert f.validate_involution(sigma)


def test_odot_perm_does_not_depend_on_representative_choice(d8, q8xc2):
    for g in (d8, q8xc2):
        default = f.odot_involution(f.make_odot_form(g))
        alternate = f.odot_involution(f.make_odot_form(g, prefer_large_reps=True))
        assert tuple(default.perm) == tuple(alternate.perm)


def test_identity_map_validates_only_on_abelian_groups(c4, d8):
    ident_c4 = f.AntiAutomorphism(c4, tuple(range(4)), "identity")
    assert f.validate_involution(ident_c4)
    ident_d8 = f.AntiAutomorphism(d8, tuple(range(8)), "identity")
    assert not f.validate_involution(ident_d8)


def test_non_permutation_fails_validation(c4):
    collapse = f.AntiAutomorphism(c4, (0, 0, 2, 2), "collapse")
    assert not f.validate_involution(collapse)


# ---------------------------------------------------------------------------
# inverting-extension instances (abelian index-2 subgroup + order-4 twist)


def test_make_inverting_form_on_quaternion(q8, q8_form):
    assert list(q8_form.a_sub.members) == [0, 1, 2, 3]
    assert q8_form.b == 4
    assert q8_form.b_squared == 2
    assert q8_form.transversal == (0, 1)


def test_inverting_form_requires_abelian_subgroup(d8xc2):
    # the copy of the dihedral factor has index 2 but is not abelian
    with pytest.raises(NotAbelianSubgroupError):
        f.make_inverting_form(d8xc2, [2, 8], 1)


def test_inverting_form_requires_index_two(q8):
    with pytest.raises(WrongIndexError):
        f.make_inverting_form(q8, [2], 4)


def test_inverting_form_requires_order_four_twist_outside(d8, q8):
    with pytest.raises(BadOrderError):
        f.make_inverting_form(d8, [1], 4)  # reflection squares to 1
    with pytest.raises(BadOrderError):
        f.make_inverting_form(q8, [1], 1)  # twist inside the subgroup


def test_inverting_form_requires_inversion():
    c4xc4 = f.make_direct_product(f.make_cyclic(4), f.make_cyclic(4))
    # the subgroup generated by (a,1) and (1,a2) has index 2; the twist (1,a)
    # has order 4 and lies outside it, but centralizes it instead of inverting
    with pytest.raises(NotInvertingError):
        f.make_inverting_form(c4xc4, [4, 2], 1)


def test_detect_inverting_form(q8, q16, d8, c8):
    got = f.detect_inverting_form(q8)
    assert len(got.a_sub.members) == 4
    assert f.element_order(q8, got.b) == 4
    got16 = f.detect_inverting_form(q16)
    assert len(got16.a_sub.members) == 8
    for g in (d8, c8):
        with pytest.raises(NotInvertingError):
            f.detect_inverting_form(g)


def test_detect_is_deterministic(q16):
    first = f.detect_inverting_form(q16)
    second = f.detect_inverting_form(q16)
    assert first.a_sub.members == second.a_sub.members
    assert first.b == second.b


# ---------------------------------------------------------------------------
# odot instances (Klein central quotient + order-2 derived subgroup)


def test_make_odot_form_on_dihedral(d8, d8_odot_form):
    form = d8_odot_form
    assert list(form.c_sub.members) == [0, 2]  # the center {1, r2}
    assert form.e == 2
    assert d8.mul[d8.mul[d8.inv[form.a]][d8.inv[form.b]]][d8.mul[form.a][form.b]] == form.e
    for g in (form.a, form.b):
        assert g not in f.center(d8).member_set()


def test_odot_form_rejects_wrong_central_quotient(c8, c4):
    for g in (c8, c4, f.make_dihedral(16)):
        with pytest.raises(CenterQuotientNotKleinError):
            f.make_odot_form(g)


def test_odot_form_on_products(d8xc2, q8xc2):
    for g in (d8xc2, q8xc2):
        form = f.make_odot_form(g)
        assert len(form.c_sub.members) == 4
        assert f.element_order(g, form.e) == 2
        assert f.validate_involution(f.odot_involution(form))


def test_alternate_representatives_are_still_valid(d8):
    form = f.make_odot_form(d8, prefer_large_reps=True)
    default = f.make_odot_form(d8)
    assert form.e == default.e  # the derived-subgroup generator is unique
    assert form.a != default.a
    assert f.validate_involution(f.odot_involution(form))
