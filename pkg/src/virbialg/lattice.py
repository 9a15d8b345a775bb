"""The grading group: degrees in Q(i)^2, Cartan elements and the pairing."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import lcm
from typing import Iterable, Sequence

from . import linsolve
from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "Degree",
    "CartanElt",
    "Lattice",
    "ZERO_DEGREE",
    "D1_CARTAN",
    "D2_CARTAN",
    "pairing",
    "separating_cartan",
    "check_nondegenerate",
    "member",
    "det",
]


class Degree:
    """A point (c1, c2) of Q(i)^2."""

    __slots__ = ("c1", "c2", "_hash")

    def __init__(self, c1=0, c2=0):
        self.c1 = as_scalar(c1)
        self.c2 = as_scalar(c2)
        self._hash = None

    @classmethod
    def _make(cls, c1: Scalar, c2: Scalar) -> "Degree":
        d = object.__new__(cls)
        d.c1 = c1
        d.c2 = c2
        d._hash = None
        return d

    def __add__(self, other: "Degree") -> "Degree":
        return Degree._make(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: "Degree") -> "Degree":
        return Degree._make(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> "Degree":
        return Degree._make(-self.c1, -self.c2)

    def scale(self, k) -> "Degree":
        k = as_scalar(k)
        return Degree._make(k * self.c1, k * self.c2)

    def __bool__(self):
        return bool(self.c1) or bool(self.c2)

    def __eq__(self, other):
        if not isinstance(other, Degree):
            return NotImplemented
        return self.c1 == other.c1 and self.c2 == other.c2

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.c1, self.c2))
        return h

    def __iter__(self):
        yield self.c1
        yield self.c2

    def sort_key(self):
        return (self.c1.re, self.c1.im, self.c2.re, self.c2.im)

    def __lt__(self, other: "Degree"):
        return self.sort_key() < other.sort_key()

    def is_positive(self) -> bool:
        """p > 0, or p = 0 and q > 0, in the lexicographic order on Q(i)."""
        if self.c1:
            return self.c1 > ZERO
        return self.c2 > ZERO

    def __str__(self):
        return f"({self.c1};{self.c2})"

    def __repr__(self):
        return f"Degree{self}"


ZERO_DEGREE = Degree(0, 0)


def det(a: Degree, b: Degree) -> Scalar:
    """a1*b2 - b1*a2, the structure constant of [L_a, L_b]."""
    return a.c1 * b.c2 - b.c1 * a.c2


@dataclass(frozen=True)
class CartanElt:
    """a1*d1 + a2*d2."""

    a1: Scalar = ZERO
    a2: Scalar = ZERO

    def __post_init__(self):
        object.__setattr__(self, "a1", as_scalar(self.a1))
        object.__setattr__(self, "a2", as_scalar(self.a2))

    def __bool__(self):
        return bool(self.a1) or bool(self.a2)

    def __str__(self):
        from .algebra import LieElt

        return str(LieElt.from_cartan(self))


D1_CARTAN = CartanElt(ONE, ZERO)
D2_CARTAN = CartanElt(ZERO, ONE)


def pairing(d: CartanElt, a: Degree) -> Scalar:
    return d.a1 * a.c1 + d.a2 * a.c2


def separating_cartan(degrees: Iterable[Degree]) -> CartanElt:
    """Find d with pairing(d, a) != 0 for every given degree.

    Tries d1, d2, then d1 + k*d2 for k = 1, 2, ...; each nonzero degree
    rules out at most one candidate, so at most len(degrees) + 1 tries fail.
    """
    degrees = list(degrees)
    if any(not a for a in degrees):
        raise ValueError("separating_cartan needs nonzero degrees")
    k = 0
    while True:
        if k == 0:
            cands = [D1_CARTAN, D2_CARTAN]
        else:
            cands = [CartanElt(ONE, Scalar(k))]
        for d in cands:
            if all(pairing(d, a) for a in degrees):
                return d
        k += 1


@dataclass(frozen=True)
class Lattice:
    generators: tuple

    def __init__(self, generators: Sequence[Degree]):
        object.__setattr__(self, "generators", tuple(generators))

    def rank(self) -> int:
        rows = [{0: g.c1, 1: g.c2} for g in self.generators]
        return linsolve.rank(rows)

    def basis(self) -> tuple[Degree, Degree]:
        """Two generators spanning C^2 (the first such pair in order)."""
        gens = self.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if det(gens[i], gens[j]):
                    return gens[i], gens[j]
        raise ValueError("lattice is degenerate")

    def coordinates(self, a: Degree, basis: tuple[Degree, Degree] | None = None) -> Degree:
        """(p, q) with a = p*e1 + q*e2 for the chosen basis (e1, e2)."""
        e1, e2 = basis or self.basis()
        d = det(e1, e2)
        return Degree._make(det(a, e2) / d, det(e1, a) / d)

    def from_coordinates(self, pq: Degree, basis: tuple[Degree, Degree] | None = None) -> Degree:
        e1, e2 = basis or self.basis()
        return e1.scale(pq.c1) + e2.scale(pq.c2)

    def dual_cartan(self, basis: tuple[Degree, Degree] | None = None) -> tuple[CartanElt, CartanElt]:
        """d'_1, d'_2 with pairing(d'_i, e_j) = delta_ij."""
        e1, e2 = basis or self.basis()
        d = det(e1, e2)
        # rows of the inverse of [[e1.c1, e1.c2], [e2.c1, e2.c2]]^T
        return (CartanElt(e2.c2 / d, -e2.c1 / d), CartanElt(-e1.c2 / d, e1.c1 / d))


def check_nondegenerate(lat: Lattice) -> bool:
    return lat.rank() == 2


def _integer_rows(vectors: Sequence[Degree]) -> tuple[list[list[int]], int]:
    dens = [c.re.denominator for v in vectors for c in v] + [c.im.denominator for v in vectors for c in v]
    m = reduce(lcm, dens, 1)
    rows = []
    for v in vectors:
        row = []
        for c in v:
            row.append(int(c.re * m))
            row.append(int(c.im * m))
        rows.append(row)
    return rows, m


def _echelon(rows: list[list[int]]) -> list[list[int]]:
    """Integer row echelon form spanning the same Z-module (Hermite style)."""
    rows = [list(r) for r in rows if any(r)]
    out = []
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        live = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                f = r[col] // piv[col]
                r = [x - f * y for x, y in zip(r, piv)]
                if r[col]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        if live:
            piv = live[0]
            if piv[col] < 0:
                piv = [-x for x in piv]
            out.append(piv)
        rows = rest
    # reduce entries above pivots
    for i, piv in enumerate(out):
        col = next(c for c, x in enumerate(piv) if x)
        for j in range(i):
            f = out[j][col] // piv[col]
            if f:
                out[j] = [x - f * y for x, y in zip(out[j], piv)]
    return out


def member(lat: Lattice, a: Degree) -> bool:
    """Is a an integer combination of the generators?"""
    rows, m = _integer_rows(list(lat.generators) + [a])
    target = rows.pop()
    for row in _echelon(rows):
        col = next(c for c, x in enumerate(row) if x)
        if target[col] % row[col]:
            return False
        f = target[col] // row[col]
        target = [x - f * y for x, y in zip(target, row)]
    return not any(target)
