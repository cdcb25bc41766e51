"""One test per acceptance criterion, each with its time limit.

Criterion 9 contains claims that do not hold for the 5-quadric ideal; those
tests fail, and the reasons are in the notes shipped with the repository.
"""

from __future__ import annotations

import random
import time

import pytest

from s3covers.atlas import (
    VERIFIED,
    build_IP,
    check_equivalence_scan,
    check_torsor_sign,
    five_quadrics,
    verify_components,
    verify_surface,
)
from s3covers.covers import (
    derive,
    random_specialization,
    relation_residuals,
    satisfies_relations,
    torsor_determinant,
    trivial_torsor,
    u_alpha_family,
    u_beta_family,
    z2_family,
)
from s3covers.exactnum import QQ
from s3covers.groebner import (
    ideal_contains,
    ideal_equal,
    ideal_intersection,
    ideal_sum,
    normal_form,
)
from s3covers.miranda import (
    ZData,
    alpha_delta,
    beta_from_delta,
    delta_discriminant,
    delta_from_beta,
    eta_delta,
    generic_delta,
    lambda_to_cover,
    m_delta,
    pair,
    triple_cover_algebra,
    z_conditions,
    zeta_check,
    zeta_of_alpha,
)
from s3covers.atlas import j1_ideal, j2_ideal, trace_ideal_gens, trace_zero_substitution
from s3covers.poly import Ideal
from s3covers.qring import CoeffRing
from s3covers.s3x import equivariant_trivialization, s3_transform

from oracles import Expansion

F7 = CoeffRing.prime_field(7)


class Clock:
    def __init__(self, limit: float):
        self.limit = limit
        self.t0 = time.monotonic()

    def check(self) -> float:
        elapsed = time.monotonic() - self.t0
        assert elapsed < self.limit, f"took {elapsed:.1f}s, limit {self.limit}s"
        return elapsed


@pytest.fixture(scope="module")
def surface_report():
    return {c.name: c for c in verify_surface(5, budget=600.0, seed=0)}


def test_criterion_1_symbolic_families():
    clock = Clock(5)
    for chi in (u_alpha_family(), u_beta_family(), lambda_to_cover(generic_delta()), z2_family()):
        res = relation_residuals(chi)
        assert len(res) == 25 and all(r.is_zero() for r in res)
    clock.check()


def test_criterion_2_torsor_determinant():
    clock = Clock(1)
    fam = u_alpha_family()
    m, a, b = fam.ring.gens()
    w = m * b * b - a * a
    assert fam.omega == w
    assert torsor_determinant(fam) == -4 * m * w**3
    clock.check()


def test_criterion_3_nilpotency():
    clock = Clock(60)
    IP = build_IP(QQ)
    g = dict(zip(IP.ring.variables, IP.ring.gens()))
    gb = IP.groebner()
    for t in (g["a"] + g["d"], g["c"] + g["f"]):
        assert normal_form(t**3, gb).is_zero()
        assert not normal_form(t, gb).is_zero()
    clock.check()


def test_criterion_4_component_identities():
    clock = Clock(300)
    IP = build_IP(QQ)
    ring = IP.ring
    J1, J2 = j1_ideal(IP), j2_ideal(ring)
    assert ideal_contains(J2, IP)
    assert ideal_equal(ideal_sum(J1, J2), Ideal(ring.gens(), ring))
    assert ideal_equal(ideal_intersection(J1, J2), IP + trace_ideal_gens(ring)[:2])
    I = five_quadrics(QQ)
    images = trace_zero_substitution(ring, I.ring)
    assert ideal_equal(Ideal([f.compose(images, I.ring.one()) for f in J1.gens], I.ring), I)
    clock.check()


def test_criterion_5_equivalence_scan():
    clock = Clock(600)
    checks = check_equivalence_scan(3)
    for c in checks:
        assert c.status == VERIFIED, (c.name, c.detail, c.witness)
    assert "177147 points" in checks[0].detail
    clock.check()


def test_criterion_6_miranda_identities():
    clock = Clock(10)
    d = generic_delta()
    assert delta_from_beta(beta_from_delta(d)) == d
    b = beta_from_delta(d)
    assert beta_from_delta(delta_from_beta(b)) == b
    chi = lambda_to_cover(d)
    sym = derive(chi).sym_pairing
    assert eta_delta(d) == (2 * sym[0][0], 2 * sym[0][1], 2 * sym[1][1])
    assert m_delta(d) == derive(chi).m
    from s3covers.covers import discriminant_chi

    assert delta_discriminant(d) == 4 * discriminant_chi(chi)
    assert triple_cover_algebra(d).discriminant() == 27 * delta_discriminant(d)
    clock.check()


def _s3_certified(chi, allow_extension=True) -> None:
    c = s3_transform(chi)
    v = c.verify()
    assert v["commutative"] and v["associative"] and v["action"], v
    ex = Expansion(chi)
    assert ex.structure_constants() == c.algebra.mult
    assert ex.action_matrix(True) == c.r.matrix and ex.action_matrix(False) == c.s.matrix
    t = equivariant_trivialization(chi, allow_extension)
    assert t.verified, t.checks


def test_criterion_7_s3_transform():
    clock = Clock(120)
    _s3_certified(trivial_torsor())
    rng = random.Random(7)
    for fam in (u_alpha_family(), u_beta_family(), z2_family()):
        for _ in range(20):
            chi = random_specialization(fam, F7, rng)
            _s3_certified(chi, allow_extension=False)
    clock.check()


def test_criterion_8_zeta_and_z_data():
    clock = Clock(30)
    d = generic_delta()
    al = alpha_delta(d)
    assert pair(zeta_check(al), zeta_of_alpha(al)) == -4 * m_delta(d)
    for chi in (u_alpha_family(), u_beta_family(), lambda_to_cover(d)):
        c1, c2 = z_conditions(ZData.from_cover(chi))
        assert all(x.is_zero() for x in c1 + c2)
    rng = random.Random(8)
    hits = 0
    for k in range(100):
        fam = (u_alpha_family, u_beta_family)[k % 2]()
        chi = random_specialization(fam, F7, rng)
        assert satisfies_relations(chi)
        c1, c2 = z_conditions(ZData.from_cover(chi))
        assert all(x.is_zero() for x in c1 + c2)
        hits += 1
    assert hits == 100
    clock.check()


def test_criterion_9_no_linear_forms(surface_report):
    c = surface_report["no_linear_forms"]
    assert c.status == VERIFIED, c.witness


def test_criterion_9_cone_dimension_3(surface_report):
    c = surface_report["cone_dimension"]
    assert c.status == VERIFIED, f"{c.detail}; {c.witness}"


def test_criterion_9_smoothness_within_budget(surface_report):
    c = surface_report["jacobian_smoothness"]
    assert c.runtime < 600
    assert c.status == VERIFIED, f"{c.detail}; {c.witness}"


def test_criterion_9_rank5_fallback(surface_report):
    c = surface_report.get("jacobian_rank5_fallback")
    if c is None:
        pytest.skip("the Groebner smoothness check was not skipped, so the fallback did not run")
    assert c.status == VERIFIED, f"{c.detail}; {c.witness}"


def test_criterion_9_supplementary_codimension_smoothness(surface_report):
    # not part of the stated criterion: the Jacobian test at the actual codimension
    c = surface_report["jacobian_smoothness_codim"]
    assert c.status == VERIFIED, c.witness
    assert surface_report["origin_jacobian_degenerate"].status == VERIFIED


def test_criterion_10_typo_findings():
    comps = {c.name: c for c in verify_components(build_IP(QQ))}
    typo = comps["typo_resolution"]
    assert typo.status == VERIFIED, typo.witness
    assert all(comps[f"J1_{k}"].status == VERIFIED for k in ("sum", "intersection", "substitution"))
    assert "(a+c, d+f, A+D) fails" in typo.detail
    (sign,) = check_torsor_sign()
    assert sign.status == VERIFIED and "omega = -1/2 satisfies all 25 relations" in sign.detail
