"""Triple covers as cubic forms, and the trace-zero data of the main component.

A triple cover datum is a binary cubic ``delta`` stored by its values
``(delta(y^3), delta(y^2 z), delta(y z^2), delta(z^3)) = (-b, a, c, e)``;
it corresponds to the trace-zero ``beta = [[a, c, e], [b, -a, -c]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .covers import BuildingData, _require_odd, cover_algebra, derive, frame_action
from .qring import CoeffRing, RingElem, is_unit
from .scalg import SCAlgebra


class TraceError(ValueError):
    pass


@dataclass
class TripleCoverData:
    ring: CoeffRing
    delta: tuple

    def __post_init__(self) -> None:
        if len(self.delta) != 4:
            raise ValueError("a cubic form has 4 coefficients")
        self.delta = tuple(self.ring(x) for x in self.delta)

    @classmethod
    def from_abce(cls, ring: CoeffRing, a, b, c, e) -> "TripleCoverData":
        return cls(ring, (-ring(b), a, c, e))

    def abce(self) -> tuple[RingElem, RingElem, RingElem, RingElem]:
        d0, d1, d2, d3 = self.delta
        return d1, -d0, d2, d3

    def to_json(self) -> dict:
        return {"ring": self.ring.to_json(), "delta": [str(x) for x in self.delta]}

    @classmethod
    def from_json(cls, data) -> "TripleCoverData":
        ring = CoeffRing.from_json(data.get("ring", {"type": "rational"}))
        return cls(ring, tuple(data["delta"]))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TripleCoverData) and self.ring == other.ring and self.delta == other.delta


def generic_delta(ring: CoeffRing | None = None) -> TripleCoverData:
    """The universal cubic over ``QQ[a,b,c,e]``."""
    R = ring or CoeffRing.polynomial(["a", "b", "c", "e"])
    a, b, c, e = R.gens()
    return TripleCoverData.from_abce(R, a, b, c, e)


def beta_from_delta(d: TripleCoverData) -> list:
    a, b, c, e = d.abce()
    return [[a, c, e], [b, -a, -c]]


def delta_from_beta(beta: Sequence[Sequence[RingElem]]) -> TripleCoverData:
    (a, c, e), (b, dd, f) = beta
    ring = a.ring
    if not (a + dd).is_zero():
        raise TraceError(f"beta has non-zero trace: a+d = {a + dd}")
    if not (c + f).is_zero():
        raise TraceError(f"beta has non-zero trace: c+f = {c + f}")
    return TripleCoverData.from_abce(ring, a, b, c, e)


def eta_delta(d: TripleCoverData) -> tuple[RingElem, RingElem, RingElem]:
    """``(eta(y^2), eta(yz), eta(z^2))``."""
    a, b, c, e = d.abce()
    return 2 * (a * a + b * c), a * c + b * e, 2 * (c * c - a * e)


def alpha_delta(d: TripleCoverData) -> list:
    _require_odd(d.ring)
    yy, yz, zz = eta_delta(d)
    half = d.ring(1) / 2
    return [[half * yz, half * zz], [-half * yy, -half * yz]]


def m_delta(d: TripleCoverData) -> RingElem:
    (p, q), (r, s) = alpha_delta(d)
    return -(p * s - q * r)


def lambda_to_cover(d: TripleCoverData) -> BuildingData:
    """``(F, delta) -> (det F, F, alpha_delta, beta_delta, id)``, framed: omega = 1."""
    _require_odd(d.ring)
    return BuildingData(d.ring, alpha_delta(d), beta_from_delta(d), d.ring.one)


def cover_to_delta(chi: BuildingData) -> tuple[TripleCoverData, BuildingData]:
    """Inverse of :func:`lambda_to_cover` on a point where omega is a unit.

    The datum is first rescaled by the frame action with ``M = Id`` and
    ``lambda = omega^-1`` so that its omega becomes 1; the normalized datum is
    returned alongside the cubic.
    """
    if not is_unit(chi.omega):
        raise ValueError("omega is not a unit")
    one, zero = chi.ring.one, chi.ring.zero
    normalized = frame_action(chi, [[one, zero], [zero, one]], chi.omega.inverse())
    return delta_from_beta(normalized.beta), normalized


def delta_discriminant(d: TripleCoverData) -> RingElem:
    """``eta(y^2) eta(z^2) - eta(yz)^2``."""
    yy, yz, zz = eta_delta(d)
    return yy * zz - yz * yz


def triple_cover_algebra(d: TripleCoverData) -> SCAlgebra:
    """``O + F`` on ``(1, y, z)`` with ``u v = eta(uv) + beta(uv)``."""
    _require_odd(d.ring)
    ring = d.ring
    eta = eta_delta(d)
    beta = beta_from_delta(d)
    zero, one = ring.zero, ring.one
    mult = [[[zero] * 3 for _ in range(3)] for _ in range(3)]
    for j in range(3):
        mult[0][j] = [one if k == j else zero for k in range(3)]
        mult[j][0] = [one if k == j else zero for k in range(3)]
    for i in range(2):
        for j in range(2):
            col = i + j
            mult[1 + i][1 + j] = [eta[col], beta[0][col], beta[1][col]]
    return SCAlgebra(ring, mult, 0, ("1", "y", "z"))


def sigma_invariants(a_chi: SCAlgebra) -> SCAlgebra:
    """The subalgebra of ``A_chi`` fixed by its involution, on ``(1, y1+y2, z1+z2)``."""
    ring = a_chi.ring
    z, o = ring.zero, ring.one
    vectors = [
        [o, z, z, z, z, z],
        [z, z, o, z, o, z],
        [z, z, z, o, z, o],
    ]
    return a_chi.subalgebra(vectors, ("1", "y", "z"))


def compare_sigma_invariants(chi: BuildingData) -> tuple[SCAlgebra, bool | None, str]:
    """Fixed subalgebra of ``A_chi`` against the triple cover of ``delta_beta``."""
    alg, _, _ = cover_algebra(chi)
    inv = sigma_invariants(alg)
    try:
        d = delta_from_beta(chi.beta)
    except TraceError as exc:
        return inv, None, f"comparison skipped: {exc}"
    tri = triple_cover_algebra(d)
    same = inv.mult == tri.mult
    return inv, same, "structure constants agree" if same else "structure constants differ"


# trace-zero alpha and the main component


def zeta_of_alpha(alpha: Sequence[Sequence[RingElem]]) -> tuple[RingElem, RingElem, RingElem]:
    """Coefficients of ``zeta = B y^2 - 2A yz - C z^2`` on ``(y^2, yz, z^2)``."""
    (A, B), (C, D) = alpha
    if not (A + D).is_zero():
        raise TraceError(f"alpha has non-zero trace: A+D = {A + D}")
    return B, -2 * A, -C


def alpha_of_zeta(zeta: Sequence[RingElem]) -> list:
    z0, z1, z2 = zeta
    half = z0.ring(1) / 2
    A = -half * z1
    return [[A, z0], [-z2, -A]]


def zeta_check(alpha: Sequence[Sequence[RingElem]]) -> tuple[RingElem, RingElem, RingElem]:
    """The dual functional ``(-2C, 2A, 2B)`` on ``(y^2, yz, z^2)``."""
    (A, B), (C, D) = alpha
    if not (A + D).is_zero():
        raise TraceError(f"alpha has non-zero trace: A+D = {A + D}")
    return -2 * C, 2 * A, 2 * B


def pair(functional: Sequence[RingElem], vector: Sequence[RingElem]) -> RingElem:
    return sum((u * v for u, v in zip(functional, vector)), functional[0] * 0)


@dataclass
class ZData:
    ring: CoeffRing
    delta: TripleCoverData
    zeta: tuple  # (A, B, C)
    omega: RingElem

    def __post_init__(self) -> None:
        self.zeta = tuple(self.ring(x) for x in self.zeta)
        self.omega = self.ring(self.omega)

    def alpha(self) -> list:
        A, B, C = self.zeta
        return [[A, B], [C, -A]]

    def to_cover(self) -> BuildingData:
        return BuildingData(self.ring, self.alpha(), beta_from_delta(self.delta), self.omega)

    @classmethod
    def from_cover(cls, chi: BuildingData) -> "ZData":
        (A, B), (C, D) = chi.alpha
        if not (A + D).is_zero():
            raise TraceError(f"alpha has non-zero trace: A+D = {A + D}")
        return cls(chi.ring, delta_from_beta(chi.beta), (A, B, C), chi.omega)

    def to_json(self) -> dict:
        out = self.delta.to_json()
        out["zeta"] = [str(x) for x in self.zeta]
        out["omega"] = str(self.omega)
        return out


def z_conditions(zd: ZData) -> tuple[list[RingElem], list[RingElem]]:
    """Residuals of ``beta o zeta = 0`` and of ``omega * zeta_check = eta_delta``."""
    a, b, c, e = zd.delta.abce()
    A, B, C = zd.zeta
    w = zd.omega
    cond1 = [2 * a * A + b * B + c * C, 2 * c * A + e * C - a * B]
    chk = zeta_check(zd.alpha())
    eta = eta_delta(zd.delta)
    cond2 = [w * chk[i] - eta[i] for i in range(3)]
    return cond1, cond2
