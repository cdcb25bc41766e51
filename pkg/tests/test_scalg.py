from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from s3covers.covers import BuildingData, cover_algebra, random_specialization, u_alpha_family, u_beta_family, z2_family
from s3covers.qring import CoeffRing
from s3covers.scalg import (
    AlgebraMap,
    Grading,
    SCAlgebra,
    check_action,
    check_associative,
    check_commutative,
    check_grading,
    direct_product,
    discriminant,
    mat_equal,
    mat_mul,
    mat_transpose,
    trace_form,
)

Q = CoeffRing.rationals()


def cyclic(n: int, ring=Q) -> SCAlgebra:
    """``ring[t]/(t^n - 1)`` on the basis ``1, t, ..., t^(n-1)``."""
    mult = [[[1 if k == (i + j) % n else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    return SCAlgebra(ring, mult)


def matrix_algebra() -> SCAlgebra:
    # basis e11, e12, e21, e22; e_ij e_kl = delta_jk e_il; unit e11 + e22 is not a basis vector,
    # so only the commutativity/associativity checks are meaningful
    idx = [(0, 0), (0, 1), (1, 0), (1, 1)]
    mult = [[[1 if (a[1] == b[0] and idx[k] == (a[0], b[1])) else 0 for k in range(4)] for b in idx] for a in idx]
    return SCAlgebra(Q, mult)


def test_matrix_algebra():
    A = matrix_algebra()
    ok, w = check_commutative(A)
    assert not ok
    e = A.basis_vector
    for i, j in (w, (1, 2)):  # the reported pair and (e12, e21)
        assert A.product(e(i), e(j)) != A.product(e(j), e(i))
    assert check_associative(matrix_algebra())[0]


def test_cover_algebras():
    assert check_commutative(cover_algebra(u_alpha_family())[0])[0]
    assert check_associative(cover_algebra(u_beta_family())[0])[0]
    zero, _, _ = cover_algebra(BuildingData.zero(Q))
    assert check_commutative(zero)[0] and check_associative(zero)[0]
    bad, _, _ = cover_algebra(BuildingData.from_params(Q, a=1))
    ok, triple = check_associative(bad)
    assert not ok
    # the witness really fails
    i, j, k = triple
    e = bad.basis_vector
    assert bad.product(bad.product(e(i), e(j)), e(k)) != bad.product(e(i), bad.product(e(j), e(k)))


def test_trace_and_discriminant_of_cyclic_cubic():
    A = cyclic(3)
    assert A.trace(A.basis_vector(0)) == Q(3) and A.trace(A.basis_vector(1)) == Q(0)
    assert mat_equal(trace_form(A), [[Q(3), Q(0), Q(0)], [Q(0), Q(0), Q(3)], [Q(0), Q(3), Q(0)]])
    assert discriminant(A) == Q(-27)


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (1, 3)])
def test_discriminant_multiplicative(n, m):
    x, y = cyclic(n), cyclic(m)
    prod = direct_product(x, y)
    assert prod.check_unit()[0] and check_associative(prod)[0]
    assert discriminant(prod) == discriminant(x) * discriminant(y)


def test_sigma_and_grading_on_families():
    for fam in (u_alpha_family(), u_beta_family(), z2_family()):
        alg, sigma, grading = cover_algebra(fam)
        ok, why = check_action(alg, {"s": sigma}, ["ss"])
        assert ok, why
        assert check_grading(alg, grading)[0]
        T = trace_form(alg)
        assert mat_equal(mat_mul(mat_transpose(sigma.matrix), mat_mul(T, sigma.matrix)), T)


def test_trivial_grading_and_identity_action():
    A = cyclic(3)
    assert check_grading(A, Grading([0, 0, 0], 3))[0]
    ident = AlgebraMap(A, A, [[Q.one if i == j else Q.zero for j in range(3)] for i in range(3)])
    assert check_action(A, {"e": ident}, ["e", "ee"])[0]


def test_swapped_grading():
    # With beta != 0 the standard grading passes.  Swapping F1 and F2 gives
    # the inverse character, which is again a grading; a genuinely wrong
    # grading puts F1 and F2 in the same degree.
    alg, _, g = cover_algebra(u_beta_family())
    assert check_grading(alg, g)[0]
    assert check_grading(alg, Grading([0, 0, 2, 2, 1, 1]))[0]
    ok, w = check_grading(alg, Grading([0, 0, 1, 1, 1, 1]))
    assert not ok
    i, j, k = w
    assert not alg.mult[i][j][k].is_zero()


def test_json_round_trip_preserves_verdicts():
    for chi in (u_beta_family(), BuildingData.from_params(Q, a=1)):
        alg, _, _ = cover_algebra(chi)
        back = SCAlgebra.from_json(alg.to_json())
        assert back.mult == alg.mult
        assert check_associative(back) == check_associative(alg)


@pytest.mark.parametrize("family", [u_alpha_family, u_beta_family, z2_family])
def test_associativity_survives_specialization(family):
    fam = family()
    F7 = CoeffRing.prime_field(7)
    rng = random.Random(11)
    assert check_associative(cover_algebra(fam)[0])[0]
    for _ in range(20):
        alg, _, _ = cover_algebra(random_specialization(fam, F7, rng))
        assert check_associative(alg)[0] and check_commutative(alg)[0]


@given(st.permutations(range(3)))
def test_automorphisms_preserve_trace_form(perm):
    # QQ^3 with basis (1, e2, e3), e_i the idempotents; permuting idempotents is an automorphism
    A = direct_product(direct_product(cyclic(1), cyclic(1)), cyclic(1))
    T = trace_form(A)
    to_idem = [[1, 0, 0], [1, 1, 0], [1, 0, 1]]  # columns: 1, e2, e3 in idempotent coordinates
    from_idem = [[1, 0, 0], [-1, 1, 0], [-1, 0, 1]]
    P = [[1 if perm[j] == i else 0 for j in range(3)] for i in range(3)]
    M = [[sum(from_idem[i][k] * P[k][l] * to_idem[l][j] for k in range(3) for l in range(3)) for j in range(3)] for i in range(3)]
    g = AlgebraMap(A, A, M)
    ok, why = g.check_automorphism()
    assert ok, why
    assert mat_equal(mat_mul(mat_transpose(g.matrix), mat_mul(T, g.matrix)), T)
