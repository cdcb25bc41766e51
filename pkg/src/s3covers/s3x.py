"""From a cover to an S3-algebra, and back after adjoining a cube root of unity.

Inside ``A_chi[x, z]/(x^3 - 1, z^2 + 3)`` the span of

    1, l z, p(u) = u1 x + u2 x^2, q(u) = u1 z x - u2 z x^2     (u in {y, z})

is a subalgebra ``C`` of rank 6.  ``S3`` acts through ``(123): x -> x(z-1)/2``
and ``(12): z -> -z``.  The structure constants below are closed forms of
that expansion; the test suite re-derives them from the rank-36 expansion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .covers import BuildingData, RelationsViolated, alpha_of, beta_of, cover_algebra, derive, relation_residuals
from .exactnum import CharacteristicError
from .qring import CoeffRing, RingElem, sqrt_in_prime_field
from .scalg import AlgebraMap, SCAlgebra, check_action, mat_mul, mat_equal

S3_BASIS = ("1", "lz", "p(y)", "p(z)", "q(y)", "q(z)")
S3_RELATIONS = ("rrr", "ss", "srsr")


@dataclass
class S3Algebra:
    algebra: SCAlgebra
    r: AlgebraMap
    s: AlgebraMap

    def generators(self) -> dict[str, AlgebraMap]:
        return {"r": self.r, "s": self.s}

    def verify(self) -> dict[str, object]:
        comm, cw = self.algebra.check_commutative()
        assoc, aw = self.algebra.check_associative()
        act, why = check_action(self.algebra, self.generators(), S3_RELATIONS)
        return {"commutative": comm, "associative": assoc, "action": act, "action_note": why,
                "commutativity_witness": cw, "associativity_witness": aw}

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.to_json(),
            "r": [[str(x) for x in row] for row in self.r.matrix],
            "s": [[str(x) for x in row] for row in self.s.matrix],
        }


def _require_s3_characteristic(ring: CoeffRing) -> None:
    if ring.characteristic in (2, 3):
        raise CharacteristicError(f"the S3 transform needs 1/2 and 1/3; characteristic {ring.characteristic} refused")


def s3_transform(chi: BuildingData) -> S3Algebra:
    ring = chi.ring
    _require_s3_characteristic(ring)
    bad = [i + 1 for i, r in enumerate(relation_residuals(chi)) if not r.is_zero()]
    if bad:
        raise RelationsViolated(f"relations violated: g{', g'.join(map(str, bad))}")
    der = derive(chi)
    zero, one = ring.zero, ring.one
    n = 6
    mult = [[[zero] * n for _ in range(n)] for _ in range(n)]

    def put(i: int, j: int, vec: list) -> None:
        mult[i][j] = vec
        mult[j][i] = list(vec)

    for j in range(n):
        put(0, j, [one if k == j else zero for k in range(n)])
    put(1, 1, [-3 * der.m] + [zero] * 5)
    for u in range(2):
        ay, az = alpha_of(chi, u)
        put(1, 2 + u, [zero, zero, zero, zero, ay, az])
        put(1, 4 + u, [zero, zero, -3 * ay, -3 * az, zero, zero])
    for u in range(2):
        for v in range(2):
            by, bz = beta_of(chi, u, v)
            sym = der.sym_pairing[u][v]
            alt = der.alt_pairing[u][v]
            mult[2 + u][2 + v] = [2 * sym, zero, by, bz, zero, zero]
            mult[4 + u][4 + v] = [6 * sym, zero, -3 * by, -3 * bz, zero, zero]
            mult[2 + u][4 + v] = [zero, -2 * alt, zero, zero, -by, -bz]
            mult[4 + v][2 + u] = list(mult[2 + u][4 + v])
    alg = SCAlgebra(ring, mult, 0, S3_BASIS)

    half = one / 2
    r = [[zero] * n for _ in range(n)]
    r[0][0] = one
    r[1][1] = one
    for u in range(2):
        pu, qu = 2 + u, 4 + u
        r[pu][pu] = -half
        r[qu][pu] = half
        r[pu][qu] = -3 * half
        r[qu][qu] = -half
    s = [[zero] * n for _ in range(n)]
    for i, sign in enumerate((1, -1, 1, 1, -1, -1)):
        s[i][i] = one if sign > 0 else -one
    return S3Algebra(alg, AlgebraMap(alg, alg, r, "(123)"), AlgebraMap(alg, alg, s, "(12)"))


def s3_invariants_under_transposition(c: S3Algebra) -> SCAlgebra:
    """The subalgebra fixed by ``(12)``: the span of ``1, p(y), p(z)``."""
    ring = c.algebra.ring
    for i, sign in enumerate((1, -1, 1, 1, -1, -1)):
        expected = ring.one if sign > 0 else -ring.one
        if c.s.matrix[i][i] != expected:
            raise ValueError("the transposition is not in its diagonal form")
    return c.algebra.subalgebra([c.algebra.basis_vector(k) for k in (0, 2, 3)], ("1", "y", "z"))


def root_of_minus_three(ring: CoeffRing, allow_extension: bool = True) -> tuple[CoeffRing, RingElem]:
    """A ring containing ``w`` with ``w^2 = -3``, and that ``w``."""
    if ring.kind == "fp":
        w = sqrt_in_prime_field(-3, ring.characteristic)
        if w is not None:
            return ring, ring(w)
    if "w" in ring.variables:
        w = ring.gen("w")
        if w * w == ring(-3):
            return ring, w
    if not allow_extension:
        raise ValueError(f"{ring} has no square root of -3 and extension was disallowed")
    ext = ring.adjoin("w", "w^2+3")
    return ext, ext.gen("w")


@dataclass
class Trivialization:
    phi: AlgebraMap
    w: RingElem
    ring: CoeffRing
    checks: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return all(bool(v) for v in self.checks.values())


def equivariant_trivialization(chi: BuildingData, allow_extension: bool = True) -> Trivialization:
    """``C -> A_chi``: ``1->1, lz->w l, p(u)->u1+u2, q(u)->w(u1-u2)``, checked.

    ``(123)`` must correspond to ``zeta = (w-1)/2`` acting by ``zeta^deg`` and
    ``(12)`` to the involution of ``A_chi``.
    """
    _require_s3_characteristic(chi.ring)
    ring, w = root_of_minus_three(chi.ring, allow_extension)
    if ring != chi.ring:
        chi = chi.map(chi.ring.inclusion_into(ring)) if chi.ring.kind == "quotient" else _lift_field_data(chi, ring)
    c = s3_transform(chi)
    a_chi, sigma, grading = cover_algebra(chi)
    zero, one = ring.zero, ring.one
    n = 6
    mat = [[zero] * n for _ in range(n)]
    mat[0][0] = one
    mat[1][1] = w
    for u in range(2):
        mat[2 + u][2 + u] = one
        mat[4 + u][2 + u] = one
        mat[2 + u][4 + u] = w
        mat[4 + u][4 + u] = -w
    phi = AlgebraMap(c.algebra, a_chi, mat, "trivialization")
    zeta = (w - 1) / 2
    mu = [[zero] * n for _ in range(n)]
    for i, deg in enumerate(grading.degrees):
        mu[i][i] = zeta**deg
    checks = {
        "w_squared_is_minus_3": w * w == ring(-3),
        "zeta_cubed_is_1": zeta**3 == one,
        "invertible": phi.is_invertible(),
        "unit_preserving": phi.preserves_unit(),
        "multiplicative": phi.is_multiplicative(),
        "r_intertwines_zeta": mat_equal(mat_mul(mat, c.r.matrix), mat_mul(mu, mat)),
        "s_intertwines_sigma": mat_equal(mat_mul(mat, c.s.matrix), mat_mul(sigma.matrix, mat)),
    }
    return Trivialization(phi, w, ring, checks)


def _lift_field_data(chi: BuildingData, ring: CoeffRing) -> BuildingData:
    return BuildingData.from_params(ring, **{k: ring(v.value) for k, v in chi.params().items()})
