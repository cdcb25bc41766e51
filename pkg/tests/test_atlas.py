from __future__ import annotations

import json
import random

import numpy as np
import pytest
from sympy import GF
from sympy.polys.matrices import DomainMatrix
from hypothesis import given
from hypothesis import strategies as st

from s3covers.atlas import (
    REFUTED,
    VERIFIED,
    AtlasCheck,
    AtlasReport,
    _scan_chunk,
    algebra_flags,
    build_IP,
    check_generators,
    check_torsor_sign,
    check_trace_locus_sampled,
    cover_tensor,
    five_quadrics,
    j1_ideal,
    jacobian_minors,
    rank_mod_p,
    residual_matrix,
    run_suite,
    substitution_hom,
    verify_components,
    verify_nilpotents,
)
from s3covers.covers import BuildingData, cover_algebra, relation_residuals
from s3covers.exactnum import QQ, PrimeField
from s3covers.qring import CoeffRing


def test_generators():
    IP = build_IP(QQ)
    assert len(IP.gens) == 25
    assert all(g.is_homogeneous() and g.total_degree() == 2 for g in IP.gens)
    assert all(c.status == VERIFIED for c in check_generators(PrimeField(7)))
    with pytest.raises(ValueError):
        build_IP("fp:2")


def test_refuted_needs_witness():
    with pytest.raises(ValueError):
        AtlasCheck("x", REFUTED, "no witness")
    AtlasCheck("x", REFUTED, "", "x = 1")


def test_report_serialization_is_stable():
    rep = AtlasReport([AtlasCheck("a", VERIFIED, "fine", None, 1.5, "q"), AtlasCheck("b", REFUTED, "", "pt", 0.1, "q")], seed=3)
    assert "runtime" not in json.dumps(rep.to_json())
    assert rep.to_json(timings=True)["checks"][0]["runtime"] == 1.5
    assert rep.to_text() == rep.to_text() and "witness: pt" in rep.to_text()
    assert [c.name for c in rep.refuted] == ["b"]


@given(st.lists(st.integers(0, 6), min_size=11, max_size=11))
def test_vectorized_tensor_matches_cover_algebra(values):
    F7 = CoeffRing.prime_field(7)
    chi = BuildingData.from_params(F7, **dict(zip(("a", "b", "c", "d", "e", "f", "A", "B", "C", "D", "omega"), values)))
    alg, _, _ = cover_algebra(chi)
    T = cover_tensor(np.array([values]), 7)
    ref = [[[int(x.constant_value()) for x in alg.mult[i][j]] for j in range(6)] for i in range(6)]
    assert T[0].tolist() == ref
    comm, assoc = algebra_flags(T, 7)
    assert bool(comm[0]) == alg.check_commutative()[0]
    assert bool(assoc[0]) == alg.check_associative()[0]
    res = residual_matrix(np.array([values]), 7)[0].tolist()
    assert res == [int(r.constant_value()) for r in relation_residuals(chi)]


@given(st.lists(st.lists(st.integers(0, 4), min_size=8, max_size=8), min_size=5, max_size=5))
def test_rank_mod_p_matches_sympy(rows):
    dm = DomainMatrix([[GF(5)(x) for x in r] for r in rows], (5, 8), GF(5))
    assert rank_mod_p(rows, 5) == dm.rank()


def test_scan_chunk_against_scalar_checks():
    # a slice of GF(3)^11 containing the origin and a few solutions
    part = _scan_chunk((3, 0, 3**6))
    assert part["count"] == 3**6 and part["mismatch"] is None
    assert part["trace_fail"] is None and part["exactly_one_fail"] is None
    assert part["solutions"] >= 1


def test_nilpotents_over_f7():
    checks = {c.name: c for c in verify_nilpotents(build_IP("fp:7"))}
    assert checks["nilpotent_cubes"].status == VERIFIED
    assert checks["traces_not_zero"].status == VERIFIED
    assert "is False" in checks["trace_squares"].detail


def test_components_over_f5():
    checks = {c.name: c for c in verify_components(build_IP("fp:5"))}
    for name in ("J2_contains_IP", "J2_quotient_polynomial", "J1_sum", "J1_intersection", "J1_substitution", "typo_resolution"):
        assert checks[name].status == VERIFIED, checks[name]
    assert "fails ['intersection', 'substitution']" in checks["typo_resolution"].detail


def test_substitution_is_a_ring_map():
    IP = build_IP(QQ)
    h = substitution_hom(j1_ideal(IP), five_quadrics(QQ))
    assert h.images["d"] == -h.images["a"]
    with pytest.raises(ValueError):
        substitution_hom(j1_ideal(IP, variant=True), five_quadrics(QQ))


def test_jacobian_minor_counts():
    I = five_quadrics("fp:5")
    assert len(jacobian_minors(I, 5)) > 0
    assert all(I.groebner().contains(m) for m in jacobian_minors(I, 5))


def test_sampled_check_is_reproducible():
    a = check_trace_locus_sampled(5, samples=2000, seed=4)[0]
    b = check_trace_locus_sampled(5, samples=2000, seed=4)[0]
    assert a.status == VERIFIED and a.detail == b.detail


def test_torsor_sign_finding():
    (c,) = check_torsor_sign()
    assert c.status == VERIFIED and "g[14]" in c.detail


def test_ideal_suite_verifies_everything():
    rep = run_suite("ideal", ["fp:7"], seed=0, threads=1)
    assert rep.refuted == [] and rep.skipped == []
    names = {c.name for c in rep.checks}
    assert {"nilpotent_cubes", "J1_intersection", "typo_resolution", "no_zero_divisor_sampled"} <= names
    assert "non-conclusive" in rep.by_name("no_zero_divisor_sampled").detail


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("everything", ["q"])
