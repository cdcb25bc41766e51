"""Finite free algebras given by structure constants.

``mult[i][j]`` is the coordinate vector of ``b_i * b_j``.  Matrices follow
one convention throughout the package: column ``j`` holds the coordinates of
the image of basis vector ``j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .qring import CoeffRing, RingElem

Matrix = list  # list of rows of RingElem


def mat_identity(ring: CoeffRing, n: int) -> Matrix:
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    ring_zero = x[0][0] * 0
    return [
        [sum((x[i][k] * y[k][j] for k in range(len(y))), ring_zero) for j in range(len(y[0]))]
        for i in range(len(x))
    ]


def mat_vec(x: Matrix, v: Sequence[RingElem]) -> list[RingElem]:
    zero = v[0] * 0
    return [sum((row[k] * v[k] for k in range(len(v))), zero) for row in x]


def mat_transpose(x: Matrix) -> Matrix:
    return [list(col) for col in zip(*x)]


def determinant(x: Matrix) -> RingElem:
    """Division-free Laplace expansion along rows, memoized on column subsets."""
    n = len(x)
    if n == 0:
        raise ValueError("empty matrix")
    if any(len(row) != n for row in x):
        raise ValueError("determinant of a non-square matrix")

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> RingElem:
        if row == n:
            return x[0][0] * 0 + 1
        total = x[0][0] * 0
        for pos, col in enumerate(sorted(cols)):
            entry = x[row][col]
            if entry.is_zero():
                continue
            term = entry * minor(row + 1, cols - {col})
            total = total + term if pos % 2 == 0 else total - term
        return total

    return minor(0, frozenset(range(n)))


def mat_equal(x: Matrix, y: Matrix) -> bool:
    return len(x) == len(y) and all(len(r) == len(s) and all(a == b for a, b in zip(r, s)) for r, s in zip(x, y))


class SCAlgebra:
    """A free algebra of rank ``n`` over ``ring`` with a distinguished unit basis vector."""

    def __init__(
        self,
        ring: CoeffRing,
        mult: Sequence[Sequence[Sequence[object]]],
        unit_index: int = 0,
        basis_names: Sequence[str] | None = None,
    ):
        n = len(mult)
        if n == 0:
            raise ValueError("rank must be positive")
        self.ring = ring
        self.rank = n
        self.unit_index = unit_index
        self.mult = [[[ring(c) for c in mult[i][j]] for j in range(n)] for i in range(n)]
        for i in range(n):
            if len(mult[i]) != n or any(len(v) != n for v in mult[i]):
                raise ValueError("structure constants must form an n x n x n tensor")
        self.basis_names = list(basis_names) if basis_names else [f"e{i}" for i in range(n)]

    def __repr__(self) -> str:
        return f"SCAlgebra(rank={self.rank}, ring={self.ring}, basis={self.basis_names})"

    # elements are coordinate vectors

    def basis_vector(self, i: int) -> list[RingElem]:
        return [self.ring.one if k == i else self.ring.zero for k in range(self.rank)]

    def unit(self) -> list[RingElem]:
        return self.basis_vector(self.unit_index)

    def product(self, x: Sequence[RingElem], y: Sequence[RingElem]) -> list[RingElem]:
        n = self.rank
        out = [self.ring.zero] * n
        for i in range(n):
            if x[i].is_zero():
                continue
            for j in range(n):
                if y[j].is_zero():
                    continue
                c = x[i] * y[j]
                row = self.mult[i][j]
                for k in range(n):
                    if not row[k].is_zero():
                        out[k] = out[k] + c * row[k]
        return out

    def left_matrix(self, x: Sequence[RingElem]) -> Matrix:
        """Matrix of ``v -> x*v``."""
        cols = [self.product(x, self.basis_vector(j)) for j in range(self.rank)]
        return mat_transpose(cols)

    def check_unit(self) -> tuple[bool, tuple[int, str] | None]:
        u = self.unit_index
        for j in range(self.rank):
            e = self.basis_vector(j)
            if self.mult[u][j] != e:
                return False, (j, "left")
            if self.mult[j][u] != e:
                return False, (j, "right")
        return True, None

    def check_commutative(self) -> tuple[bool, tuple[int, int] | None]:
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.mult[i][j] != self.mult[j][i]:
                    return False, (i, j)
        return True, None

    def check_associative(self) -> tuple[bool, tuple[int, int, int] | None]:
        """Scan triples in lexicographic order; report the first failure."""
        n = self.rank
        for i in range(n):
            for j in range(n):
                left_ij = self.mult[i][j]
                for k in range(n):
                    lhs = self.product(left_ij, self.basis_vector(k))
                    rhs = self.product(self.basis_vector(i), self.mult[j][k])
                    if lhs != rhs:
                        return False, (i, j, k)
        return True, None

    def trace_vector(self) -> list[RingElem]:
        """``tr(L_{b_k})`` for each basis vector."""
        n = self.rank
        return [sum((self.mult[k][l][l] for l in range(n)), self.ring.zero) for k in range(n)]

    def trace(self, x: Sequence[RingElem]) -> RingElem:
        tv = self.trace_vector()
        return sum((x[k] * tv[k] for k in range(self.rank)), self.ring.zero)

    def trace_form(self) -> Matrix:
        tv = self.trace_vector()
        n = self.rank
        return [
            [sum((self.mult[i][j][k] * tv[k] for k in range(n)), self.ring.zero) for j in range(n)]
            for i in range(n)
        ]

    def discriminant(self) -> RingElem:
        return determinant(self.trace_form())

    def subalgebra(self, vectors: Sequence[Sequence[RingElem]], names: Sequence[str] | None = None) -> "SCAlgebra":
        """Structure constants of the span of ``vectors`` (must be closed and pivoted).

        Each vector needs a pivot coordinate holding a unit where every other
        vector vanishes; coordinates of products are read off at the pivots
        and the reconstruction is checked.
        """
        vectors = [list(v) for v in vectors]
        pivots = []
        for idx, v in enumerate(vectors):
            for pos in range(self.rank):
                if v[pos].is_unit() and all(w[pos].is_zero() for k, w in enumerate(vectors) if k != idx):
                    pivots.append(pos)
                    break
            else:
                raise ValueError(f"vector {idx} has no pivot coordinate")
        inverses = [vectors[k][pivots[k]].inverse() for k in range(len(vectors))]

        def coords(w):
            cs = [w[pivots[k]] * inverses[k] for k in range(len(vectors))]
            rebuilt = [sum((cs[k] * vectors[k][pos] for k in range(len(vectors))), self.ring.zero) for pos in range(self.rank)]
            if rebuilt != list(w):
                raise ValueError("span is not closed under multiplication")
            return cs

        m = len(vectors)
        mult = [[coords(self.product(vectors[i], vectors[j])) for j in range(m)] for i in range(m)]
        unit = self.unit()
        unit_index = next((k for k in range(m) if vectors[k] == unit), 0)
        return SCAlgebra(self.ring, mult, unit_index, names)

    # serialization

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "rank": self.rank,
            "unit": self.unit_index,
            "basis": list(self.basis_names),
            "mult": [[[str(c) for c in self.mult[i][j]] for j in range(self.rank)] for i in range(self.rank)],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, data: Mapping, ring: CoeffRing | None = None) -> "SCAlgebra":
        ring = ring or CoeffRing.from_json(data.get("ring", {"type": "rational"}))
        mult = data["mult"]
        rank = int(data.get("rank", len(mult)))
        if len(mult) != rank:
            raise ValueError(f"declared rank {rank} does not match the tensor size {len(mult)}")
        return cls(ring, [[[ring(c) for c in vec] for vec in row] for row in mult], int(data.get("unit", 0)), data.get("basis"))


def check_commutative(a: SCAlgebra):
    return a.check_commutative()


def check_associative(a: SCAlgebra):
    return a.check_associative()


def trace_form(a: SCAlgebra) -> Matrix:
    return a.trace_form()


def discriminant(a: SCAlgebra) -> RingElem:
    return a.discriminant()


def direct_product(x: SCAlgebra, y: SCAlgebra) -> SCAlgebra:
    """``x * y`` on the basis ``(1_x + 1_y, other basis of x, basis of y)``.

    The change from the plain block basis is unimodular, so the discriminant
    of the product is exactly the product of the discriminants.
    """
    if x.ring != y.ring:
        raise ValueError("factors live over different rings")
    n, m = x.rank, y.rank
    zero = x.ring.zero
    ux, uy = x.unit_index, y.unit_index
    x_others = [i for i in range(n) if i != ux]

    def plain(k: int) -> list:
        # new basis vector k in block coordinates
        v = [zero] * (n + m)
        if k == 0:
            v[ux] = x.ring.one
            v[n + uy] = x.ring.one
        elif k <= len(x_others):
            v[x_others[k - 1]] = x.ring.one
        else:
            v[n + k - 1 - len(x_others)] = x.ring.one
        return v

    def block_product(v, w) -> list:
        px = x.product(v[:n], w[:n])
        py = y.product(v[n:], w[n:])
        return px + py

    def to_new(v) -> list:
        c0 = v[ux]
        out = [c0] + [v[i] for i in x_others]
        yb = list(v[n:])
        yb[uy] = yb[uy] - c0
        return out + yb

    basis = [plain(k) for k in range(n + m)]
    mult = [[to_new(block_product(basis[i], basis[j])) for j in range(n + m)] for i in range(n + m)]
    names = ["1"] + [x.basis_names[i] for i in x_others] + [f"{s}'" for s in y.basis_names]
    return SCAlgebra(x.ring, mult, 0, names)


@dataclass
class AlgebraMap:
    """A module map given by its matrix (columns are images of source basis vectors)."""

    source: SCAlgebra
    target: SCAlgebra
    matrix: Matrix
    name: str = ""

    def __post_init__(self) -> None:
        if len(self.matrix) != self.target.rank or any(len(r) != self.source.rank for r in self.matrix):
            raise ValueError("matrix shape does not match the algebra ranks")
        self.matrix = [[self.target.ring(c) for c in row] for row in self.matrix]

    def apply(self, v: Sequence[RingElem]) -> list[RingElem]:
        return mat_vec(self.matrix, v)

    def image(self, j: int) -> list[RingElem]:
        return [row[j] for row in self.matrix]

    def determinant(self) -> RingElem:
        return determinant(self.matrix)

    def is_invertible(self) -> bool:
        return self.source.rank == self.target.rank and self.determinant().is_unit()

    def preserves_unit(self) -> bool:
        return self.apply(self.source.unit()) == self.target.unit()

    def multiplicative_witness(self) -> tuple[int, int] | None:
        for i in range(self.source.rank):
            for j in range(self.source.rank):
                lhs = self.apply(self.source.mult[i][j])
                rhs = self.target.product(self.image(i), self.image(j))
                if lhs != rhs:
                    return (i, j)
        return None

    def is_multiplicative(self) -> bool:
        return self.multiplicative_witness() is None

    def check_automorphism(self) -> tuple[bool, str]:
        if not self.is_invertible():
            return False, "not invertible"
        if not self.preserves_unit():
            return False, "does not preserve the unit"
        w = self.multiplicative_witness()
        if w is not None:
            return False, f"not multiplicative on basis pair {w}"
        return True, "ok"

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        """``self after other``."""
        return AlgebraMap(other.source, self.target, mat_mul(self.matrix, other.matrix))


@dataclass
class Grading:
    """A Z/3 (by default) degree for each basis vector."""

    degrees: list[int]
    modulus: int = 3

    def witness(self, a: SCAlgebra) -> tuple[int, int, int] | None:
        if len(self.degrees) != a.rank:
            raise ValueError("grading length does not match the rank")
        m = self.modulus
        for i in range(a.rank):
            for j in range(a.rank):
                target = (self.degrees[i] + self.degrees[j]) % m
                for k, c in enumerate(a.mult[i][j]):
                    if not c.is_zero() and self.degrees[k] % m != target:
                        return (i, j, k)
        return None


def check_grading(a: SCAlgebra, g: Grading) -> tuple[bool, tuple[int, int, int] | None]:
    w = g.witness(a)
    return w is None, w


def evaluate_word(word: str, gens: Mapping[str, AlgebraMap], ring: CoeffRing, rank: int) -> Matrix:
    """Matrix of a word read as composition: ``"sr"`` is ``s`` after ``r``."""
    result = mat_identity(ring, rank)
    for letter in word:
        if letter not in gens:
            raise ValueError(f"relation word uses unknown generator {letter!r}")
        result = mat_mul(result, gens[letter].matrix)
    return result


def check_action(a: SCAlgebra, gens: Mapping[str, AlgebraMap], relations: Sequence[str]) -> tuple[bool, str]:
    """Each generator is an automorphism and each relation word is the identity."""
    for name, g in gens.items():
        if g.source.rank != a.rank or g.target.rank != a.rank:
            raise ValueError(f"generator {name!r} has the wrong size")
        if not g.is_invertible():
            raise ValueError(f"generator {name!r} is not invertible")
        ok, why = g.check_automorphism()
        if not ok:
            return False, f"{name}: {why}"
    ident = mat_identity(a.ring, a.rank)
    for word in relations:
        if not mat_equal(evaluate_word(word, gens, a.ring, a.rank), ident):
            return False, f"relation {word} is not the identity"
    return True, "ok"
