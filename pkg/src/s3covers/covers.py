"""Framed building data for (mu_3 x| Z/2)-covers and the rank-6 cover algebra.

Conventions, fixed once for the whole package:

* ``alpha = [[A, B], [C, D]]`` with columns the images of ``y, z``, so
  ``alpha(y) = A y + C z`` and ``alpha(z) = B y + D z``;
* ``beta = [[a, c, e], [b, d, f]]`` with columns the images of
  ``y^2, yz, z^2``;
* ``omega = <y, z>``.

The cover algebra uses the basis ``(1, l, y1, z1, y2, z2)``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .exactnum import CharacteristicError
from .groebner import buchberger
from .qring import CoeffRing, RingElem, RingHom, is_unit
from .scalg import AlgebraMap, Grading, SCAlgebra, determinant

PARAMETERS = ("a", "b", "c", "d", "e", "f", "A", "B", "C", "D", "omega")
BASIS = ("1", "l", "y1", "z1", "y2", "z2")


def relation_values(a, b, c, d, e, f, A, B, C, D, w) -> list:
    """The 25 relation polynomials evaluated on anything with ``+ - *``.

    Works for ring elements, polynomials and numpy integer arrays alike.
    """
    tA = A + D
    ta = a + d
    tc = c + f
    return [
        (A - D) * tA,
        B * tA,
        C * tA,
        w * tA,
        2 * a * A + b * B + c * C,
        2 * c * A + d * B + e * C,
        C * ta + b * tA,
        C * tc + d * tA,
        B * ta + c * tA,
        B * tc + e * tA,
        a * tA - D * ta,
        c * tA - D * tc,
        a * a + b * c + w * C,
        a * c + b * e - w * (A - D),
        c * c + d * e - B * w,
        (a - d) * ta,
        b * ta,
        c * ta,
        (c - f) * tc,
        d * tc,
        e * tc,
        a * ta + b * tc,
        e * ta + c * tc,
        w * ta,
        w * tc,
    ]


@dataclass
class BuildingData:
    ring: CoeffRing
    alpha: list  # [[A, B], [C, D]]
    beta: list  # [[a, c, e], [b, d, f]]
    omega: RingElem

    def __post_init__(self) -> None:
        if len(self.alpha) != 2 or any(len(r) != 2 for r in self.alpha):
            raise ValueError("alpha must be 2x2")
        if len(self.beta) != 2 or any(len(r) != 3 for r in self.beta):
            raise ValueError("beta must be 2x3")
        self.alpha = [[self.ring(x) for x in row] for row in self.alpha]
        self.beta = [[self.ring(x) for x in row] for row in self.beta]
        self.omega = self.ring(self.omega)

    @classmethod
    def from_params(cls, ring: CoeffRing, **params) -> "BuildingData":
        unknown = set(params) - set(PARAMETERS)
        if unknown:
            raise ValueError(f"unknown parameters {sorted(unknown)}")
        p = {k: params.get(k, 0) for k in PARAMETERS}
        return cls(
            ring,
            [[p["A"], p["B"]], [p["C"], p["D"]]],
            [[p["a"], p["c"], p["e"]], [p["b"], p["d"], p["f"]]],
            p["omega"],
        )

    @classmethod
    def zero(cls, ring: CoeffRing) -> "BuildingData":
        return cls.from_params(ring)

    def params(self) -> dict[str, RingElem]:
        (A, B), (C, D) = self.alpha
        (a, c, e), (b, d, f) = self.beta
        return dict(a=a, b=b, c=c, d=d, e=e, f=f, A=A, B=B, C=C, D=D, omega=self.omega)

    def param_tuple(self) -> tuple[RingElem, ...]:
        p = self.params()
        return tuple(p[k] for k in PARAMETERS)

    def map(self, h: RingHom) -> "BuildingData":
        return BuildingData.from_params(h.target, **{k: h(v) for k, v in self.params().items()})

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "alpha": [[str(x) for x in row] for row in self.alpha],
            "beta": [[str(x) for x in row] for row in self.beta],
            "omega": str(self.omega),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "BuildingData":
        for key in ("alpha", "beta", "omega"):
            if key not in data:
                raise ValueError(f"building data is missing {key!r}")
        ring = CoeffRing.from_json(data.get("ring", {"type": "rational"}))
        return cls(ring, data["alpha"], data["beta"], data["omega"])

    @classmethod
    def loads(cls, text: str) -> "BuildingData":
        return cls.from_json(json.loads(text))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BuildingData) and self.ring == other.ring and self.param_tuple() == other.param_tuple()


def _require_odd(ring: CoeffRing) -> None:
    if ring.characteristic == 2:
        raise CharacteristicError("building data needs 1/2")


# derived maps


@dataclass
class DerivedMaps:
    m: RingElem
    sym_pairing: list  # [[(y,y), (y,z)], [(z,y), (z,z)]]
    alt_pairing: list  # [[<y,y>, <y,z>], [<z,y>, <z,z>]]
    gamma: list  # gamma[i][j] = ((u,v), <u,v>) coordinates on (1, l)
    gamma_prime: list  # ((u,v), -<u,v>)


def derive(chi: BuildingData) -> DerivedMaps:
    _require_odd(chi.ring)
    p = chi.params()
    A, B, C, D, w = p["A"], p["B"], p["C"], p["D"], p["omega"]
    half = chi.ring(1) / 2
    m = half * (A * A + D * D) + B * C
    sym = [[-C * w, -D * w], [A * w, B * w]]
    zero = chi.ring.zero
    alt = [[zero, w], [-w, zero]]
    gamma = [[(sym[i][j], alt[i][j]) for j in range(2)] for i in range(2)]
    gamma_prime = [[(sym[i][j], -alt[i][j]) for j in range(2)] for i in range(2)]
    return DerivedMaps(m, sym, alt, gamma, gamma_prime)


def relation_residuals(chi: BuildingData) -> list[RingElem]:
    _require_odd(chi.ring)
    return relation_values(*chi.param_tuple())


def satisfies_relations(chi: BuildingData) -> bool:
    return all(r.is_zero() for r in relation_residuals(chi))


def beta_of(chi: BuildingData, i: int, j: int) -> tuple[RingElem, RingElem]:
    """Coordinates of ``beta(u_i u_j)`` for ``u_0 = y``, ``u_1 = z``."""
    col = i + j
    return chi.beta[0][col], chi.beta[1][col]


def alpha_of(chi: BuildingData, i: int) -> tuple[RingElem, RingElem]:
    return chi.alpha[0][i], chi.alpha[1][i]


def cover_algebra(chi: BuildingData) -> tuple[SCAlgebra, AlgebraMap, Grading]:
    """``A_chi`` on ``(1, l, y1, z1, y2, z2)`` with its involution and mu_3-grading."""
    ring = chi.ring
    der = derive(chi)
    zero, one = ring.zero, ring.one
    n = 6
    mult = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        mult[0][j] = [one if k == j else zero for k in range(n)]
        mult[j][0] = [one if k == j else zero for k in range(n)]
    mult[1][1] = [der.m] + [zero] * 5
    for i in range(2):
        ay, az = alpha_of(chi, i)
        # l * u1 = alpha(u)_1, l * u2 = -alpha(u)_2
        v1 = [zero, zero, ay, az, zero, zero]
        v2 = [zero, zero, zero, zero, -ay, -az]
        mult[1][2 + i] = v1
        mult[2 + i][1] = list(v1)
        mult[1][4 + i] = v2
        mult[4 + i][1] = list(v2)
    for i in range(2):
        for j in range(2):
            by, bz = beta_of(chi, i, j)
            mult[2 + i][2 + j] = [zero, zero, zero, zero, by, bz]
            mult[4 + i][4 + j] = [zero, zero, by, bz, zero, zero]
            s, t = der.gamma[i][j]
            mult[2 + i][4 + j] = [s, t, zero, zero, zero, zero]
            s2, t2 = der.gamma_prime[i][j]
            mult[4 + i][2 + j] = [s2, t2, zero, zero, zero, zero]
    alg = SCAlgebra(ring, mult, 0, BASIS)
    sigma_matrix = [[zero] * n for _ in range(n)]
    sigma_matrix[0][0] = one
    sigma_matrix[1][1] = -one
    for a_, b_ in ((2, 4), (3, 5), (4, 2), (5, 3)):
        sigma_matrix[b_][a_] = one
    sigma = AlgebraMap(alg, alg, sigma_matrix, "sigma")
    return alg, sigma, Grading([0, 0, 1, 1, 2, 2])


# loci


@dataclass
class LocusReport:
    satisfies_relations: bool
    in_U_omega: bool
    in_U_alpha: bool
    in_U_beta: bool
    in_Z_G: bool
    in_Z_2: bool
    is_zero_point: bool
    is_torsor: bool
    scheme_theoretic: bool = False
    residuals: list = field(default_factory=list)

    FLAGS = (
        "satisfies_relations",
        "in_U_omega",
        "in_U_alpha",
        "in_U_beta",
        "in_Z_G",
        "in_Z_2",
        "is_zero_point",
        "is_torsor",
    )

    def loci(self) -> list[str]:
        if self.is_zero_point:
            return ["{0}"]
        names = []
        for flag, name in (
            ("in_U_omega", "U_omega"),
            ("in_U_alpha", "U_alpha"),
            ("in_U_beta", "U_beta"),
            ("in_Z_G", "Z_G"),
            ("in_Z_2", "Z_2"),
        ):
            if getattr(self, flag):
                names.append(name)
        return names

    def to_json(self) -> dict:
        out = {flag: getattr(self, flag) for flag in self.FLAGS}
        out["scheme_theoretic"] = self.scheme_theoretic
        out["residuals"] = [str(r) for r in self.residuals]
        out["loci"] = self.loci()
        return out


def _nonvanishing(values: Sequence[RingElem]) -> bool:
    """Over a field: some value is non-zero.  Otherwise: the values generate the unit ideal."""
    ring = values[0].ring
    if ring.is_field:
        return any(not v.is_zero() for v in values)
    polys = [v.value for v in values if not v.is_zero()]
    if not polys:
        return False
    if any(p.is_constant() for p in polys):
        return True
    return buchberger(list(ring.ideal.gens) + polys).is_unit_ideal()


def _all_zero(values: Sequence[RingElem]) -> bool:
    return all(v.is_zero() for v in values)


def classify(chi: BuildingData) -> LocusReport:
    """Locus membership; pointwise over fields, as polynomial conditions otherwise.

    Over a non-field ring the closed conditions (Z_G, Z_2, zero) mean
    "identically zero" and the open ones (U_*) mean "the complement's ideal
    is the unit ideal", i.e. the whole family lies in the open locus.
    """
    _require_odd(chi.ring)
    p = chi.params()
    res = relation_residuals(chi)
    ok = _all_zero(res)
    a, b, c, d, e, f = (p[k] for k in "abcdef")
    A, B, C, D, w = p["A"], p["B"], p["C"], p["D"], p["omega"]
    in_u_omega = _nonvanishing([w])
    in_u_alpha = _nonvanishing([A - D, B, C])
    in_u_beta = _nonvanishing([b, 2 * d - a, f - 2 * c, e])
    in_z_g = _all_zero([a + d, c + f, A + D])
    in_z_2 = _all_zero([a, b, c, d, e, f, w, B, C, A - D])
    zero = _all_zero(list(p.values()))
    torsor = False
    if ok:
        m = derive(chi).m
        torsor = is_unit(m) and is_unit(w)
    return LocusReport(ok, in_u_omega, in_u_alpha, in_u_beta, in_z_g, in_z_2, zero, torsor, not chi.ring.is_field, res)


# torsors


def torsor_matrix(chi: BuildingData) -> list:
    """Matrix of ``(-,-) + <-,-> + beta : F (x) F -> O + L + F``.

    Columns are ordered ``y*y, z*y, y*z, z*z``; rows are the ``O``, ``L``,
    ``y`` and ``z`` coordinates.
    """
    der = derive(chi)
    cols = []
    for i, j in ((0, 0), (1, 0), (0, 1), (1, 1)):
        by, bz = beta_of(chi, i, j)
        cols.append([der.sym_pairing[i][j], der.alt_pairing[i][j], by, bz])
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def torsor_determinant(chi: BuildingData) -> RingElem:
    return determinant(torsor_matrix(chi))


class RelationsViolated(ValueError):
    pass


def is_torsor(chi: BuildingData) -> bool:
    """``m`` and ``omega`` are units; the unit determinant of ``M`` is checked as a consequence."""
    res = relation_residuals(chi)
    bad = [i + 1 for i, r in enumerate(res) if not r.is_zero()]
    if bad:
        raise RelationsViolated(f"relations violated: g{', g'.join(map(str, bad))}")
    der = derive(chi)
    result = is_unit(der.m) and is_unit(chi.omega)
    if result and not is_unit(torsor_determinant(chi)):
        raise AssertionError("m and omega are units but det M is not: inconsistent data")
    return result


def discriminant_chi(chi: BuildingData) -> RingElem:
    s = derive(chi).sym_pairing
    return s[0][0] * s[1][1] - s[0][1] * s[1][0]


# frame action


def _inverse_2x2(M: list) -> list:
    (p, q), (r, s) = M
    det = p * s - q * r
    if not is_unit(det):
        raise ValueError("frame matrix is not invertible")
    inv = det.inverse()
    return [[s * inv, -q * inv], [-r * inv, p * inv]]


def sym2(M: list) -> list:
    """Matrix of ``Sym^2 M`` on ``(y^2, yz, z^2)`` (columns are images)."""
    (p, q), (r, s) = M
    cols = [
        [p * p, 2 * p * r, r * r],
        [p * q, p * s + q * r, r * s],
        [q * q, 2 * q * s, s * s],
    ]
    return [[cols[j][i] for j in range(3)] for i in range(3)]


def _mm(x: list, y: list) -> list:
    return [[sum((x[i][k] * y[k][j] for k in range(len(y))), x[0][0] * 0) for j in range(len(y[0]))] for i in range(len(x))]


def frame_action(chi: BuildingData, M: list, lam) -> BuildingData:
    """``alpha' = lam^-1 M alpha M^-1``, ``beta' = M beta (Sym^2 M)^-1``, ``omega' = lam omega / det M``."""
    ring = chi.ring
    M = [[ring(x) for x in row] for row in M]
    lam = ring(lam)
    if not is_unit(lam):
        raise ValueError("lambda must be a unit")
    Minv = _inverse_2x2(M)
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    lam_inv = lam.inverse()
    alpha = [[lam_inv * x for x in row] for row in _mm(_mm(M, chi.alpha), Minv)]
    beta = _mm(_mm(M, chi.beta), sym2(Minv))
    omega = lam * chi.omega * det.inverse()
    return BuildingData(ring, alpha, beta, omega)


def frame_isomorphism(chi: BuildingData, M: list, lam) -> AlgebraMap:
    """The algebra map ``A_chi -> A_chi'`` given by ``diag(1, lam, M, M)``."""
    ring = chi.ring
    M = [[ring(x) for x in row] for row in M]
    lam = ring(lam)
    target = frame_action(chi, M, lam)
    src, _, _ = cover_algebra(chi)
    dst, _, _ = cover_algebra(target)
    z = ring.zero
    mat = [[z] * 6 for _ in range(6)]
    mat[0][0] = ring.one
    mat[1][1] = lam
    for off in (2, 4):
        for i in range(2):
            for j in range(2):
                mat[off + i][off + j] = M[i][j]
    return AlgebraMap(src, dst, mat, "frame")


# families


def u_alpha_family(field_ring: CoeffRing | None = None) -> BuildingData:
    """The family over ``QQ[m,a,b]`` covering the locus where alpha is not scalar."""
    R = field_ring or CoeffRing.polynomial(["m", "a", "b"])
    m, a, b = R.gens()
    return BuildingData.from_params(
        R, a=a, b=b, c=-m * b, d=-a, e=m * a, f=m * b, A=0, B=m, C=1, D=0, omega=m * b * b - a * a
    )


def u_beta_family(field_ring: CoeffRing | None = None) -> BuildingData:
    """The family over ``QQ[omega,A,C]`` covering the locus where beta is not zero."""
    R = field_ring or CoeffRing.polynomial(["omega", "A", "C"])
    w, A, C = R.gens()
    return BuildingData.from_params(
        R, a=0, b=1, c=-w * C, d=0, e=2 * w * A, f=w * C, A=A, B=w * C * C, C=C, D=-A, omega=w
    )


def z2_family(field_ring: CoeffRing | None = None) -> BuildingData:
    """``alpha = A * Id``, ``beta = 0``, ``omega = 0`` over ``QQ[A]``."""
    R = field_ring or CoeffRing.polynomial(["A"])
    (A,) = R.gens()
    return BuildingData.from_params(R, A=A, D=A)


def trivial_torsor(ring: CoeffRing | None = None, omega_sign: int = -1) -> BuildingData:
    """The split torsor datum; ``omega_sign=+1`` gives the printed (inconsistent) variant."""
    R = ring or CoeffRing.rationals()
    half = R(1) / 2
    return BuildingData.from_params(R, A=-1, D=1, b=1, e=1, omega=half if omega_sign > 0 else -half)


def random_point(ring: CoeffRing, rng: random.Random) -> BuildingData:
    p = ring.characteristic
    if not ring.is_field or not p:
        raise ValueError("random points need a prime field")
    return BuildingData.from_params(ring, **{k: rng.randrange(p) for k in PARAMETERS})


def random_specialization(chi: BuildingData, target: CoeffRing, rng: random.Random) -> BuildingData:
    """Evaluate a polynomial family at a uniformly random point of ``target``."""
    p = target.characteristic
    images = {v: rng.randrange(p) for v in chi.ring.variables}
    return chi.map(RingHom(chi.ring, target, images))
