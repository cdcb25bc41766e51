from __future__ import annotations

import random

import pytest

from s3covers.covers import (
    BuildingData,
    RelationsViolated,
    is_torsor,
    random_point,
    random_specialization,
    satisfies_relations,
    trivial_torsor,
    u_alpha_family,
    u_beta_family,
    z2_family,
)
from s3covers.exactnum import CharacteristicError
from s3covers.miranda import delta_from_beta, triple_cover_algebra
from s3covers.qring import CoeffRing, RingHom, is_unit
from s3covers.s3x import equivariant_trivialization, s3_invariants_under_transposition, s3_transform

from oracles import Expansion

Q = CoeffRing.rationals()
F7 = CoeffRing.prime_field(7)


def matches_oracle(chi) -> bool:
    c = s3_transform(chi)
    ex = Expansion(chi)
    return (
        ex.structure_constants() == c.algebra.mult
        and ex.action_matrix(True) == c.r.matrix
        and ex.action_matrix(False) == c.s.matrix
    )


@pytest.mark.parametrize("chi", [trivial_torsor(), u_alpha_family(), u_beta_family(), z2_family(), BuildingData.zero(Q)],
                         ids=["torsor", "u_alpha", "u_beta", "z2", "zero"])
def test_closed_forms_match_expansion(chi):
    assert matches_oracle(chi)
    v = s3_transform(chi).verify()
    assert v["commutative"] and v["associative"] and v["action"], v


def test_random_specializations_match_expansion():
    rng = random.Random(31)
    for fam in (u_alpha_family(), u_beta_family(), z2_family()):
        for _ in range(5):
            assert matches_oracle(random_specialization(fam, F7, rng))


def test_trivial_torsor_is_etale():
    c = s3_transform(trivial_torsor())
    disc = c.algebra.discriminant()
    assert is_unit(disc) and disc == Q(-1259712)


def test_discriminant_unit_iff_torsor():
    rng = random.Random(4)
    seen = set()
    for fam in (u_alpha_family(), u_beta_family(), z2_family()):
        for _ in range(15):
            chi = random_specialization(fam, F7, rng)
            tors = is_torsor(chi)
            seen.add(tors)
            assert is_unit(s3_transform(chi).algebra.discriminant()) == tors
    assert seen == {True, False}


def test_refusals():
    with pytest.raises(CharacteristicError):
        s3_transform(BuildingData.zero(CoeffRing.prime_field(3)))
    with pytest.raises(RelationsViolated):
        s3_transform(trivial_torsor(omega_sign=1))


def test_trivialization_over_extension():
    t = equivariant_trivialization(trivial_torsor())
    assert t.verified, t.checks
    assert t.ring.describe() == "QQ[w]/(w^2 + 3)"
    assert equivariant_trivialization(BuildingData.zero(Q)).verified


def test_trivialization_without_extension_over_f7():
    fam = u_alpha_family()
    chi = fam.map(RingHom(fam.ring, F7, {"m": 1, "a": 1, "b": 2}))
    t = equivariant_trivialization(chi, allow_extension=False)
    assert t.ring == F7 and t.w == F7(2) and t.verified


def test_no_root_without_extension():
    with pytest.raises(ValueError):
        equivariant_trivialization(trivial_torsor(), allow_extension=False)


def test_transposition_invariants():
    tt = trivial_torsor()
    inv = s3_invariants_under_transposition(s3_transform(tt))
    assert inv.mult == triple_cover_algebra(delta_from_beta(tt.beta)).mult
    y = inv.basis_vector(1)
    assert inv.product(inv.product(y, y), y) == inv.unit()
    fam = u_beta_family()
    assert s3_invariants_under_transposition(s3_transform(fam)).mult == triple_cover_algebra(delta_from_beta(fam.beta)).mult
    zero = s3_invariants_under_transposition(s3_transform(BuildingData.zero(Q)))
    assert all(c.is_zero() for i in (1, 2) for j in (1, 2) for c in zero.mult[i][j])


def test_invalid_random_points_are_refused():
    rng = random.Random(8)
    for _ in range(20):
        chi = random_point(F7, rng)
        if not satisfies_relations(chi):
            with pytest.raises(RelationsViolated):
                s3_transform(chi)
