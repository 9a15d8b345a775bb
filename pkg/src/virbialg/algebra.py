"""The Lie algebra L(Gamma): basis symbols, sparse elements and the bracket.

Basis: L_a for nonzero a in Gamma, plus d1, d2, with

    [L_a, L_b] = (a1*b2 - b1*a2) L_{a+b},   [d_i, L_a] = a_i L_a,   [d1, d2] = 0

and the convention L_0 = 0.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .lattice import ZERO_DEGREE, CartanElt, Degree, det
from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "BasisSym",
    "D1",
    "D2",
    "L",
    "Lsym",
    "d1",
    "d2",
    "Combination",
    "LieElt",
    "bracket",
    "bracket_sym",
    "degree_decompose",
    "check_jacobi",
    "lie_sum",
]


class BasisSym:
    """One of d1, d2 or L_a (a != 0)."""

    __slots__ = ("kind", "deg", "_hash", "_key")

    D1_KIND, D2_KIND, L_KIND = 0, 1, 2

    def __init__(self, kind: int, deg: Degree | None = None):
        if kind == self.L_KIND:
            if deg is None or not deg:
                raise ValueError("L_0 is not a basis symbol")
        else:
            deg = ZERO_DEGREE
        self.kind = kind
        self.deg = deg
        self._hash = hash((kind, deg))
        self._key = None

    @property
    def degree(self) -> Degree:
        return self.deg

    def is_cartan(self) -> bool:
        return self.kind != self.L_KIND

    def sort_key(self):
        k = self._key
        if k is None:
            k = self._key = (self.kind,) + (self.deg.sort_key() if self.kind == self.L_KIND else ())
        return k

    def __lt__(self, other: "BasisSym"):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        if not isinstance(other, BasisSym):
            return NotImplemented
        return self.kind == other.kind and (self.kind != self.L_KIND or self.deg == other.deg)

    def __hash__(self):
        return self._hash

    def __str__(self):
        if self.kind == self.D1_KIND:
            return "d1"
        if self.kind == self.D2_KIND:
            return "d2"
        return f"L{self.deg}"

    __repr__ = __str__


D1 = BasisSym(BasisSym.D1_KIND)
D2 = BasisSym(BasisSym.D2_KIND)


def Lsym(a) -> BasisSym | None:
    """The symbol L_a, or None when a = 0."""
    a = a if isinstance(a, Degree) else Degree(*a)
    if not a:
        return None
    return BasisSym(BasisSym.L_KIND, a)


@lru_cache(maxsize=1 << 18)
def bracket_sym(x: BasisSym, y: BasisSym) -> tuple[BasisSym, Scalar] | None:
    """[x, y] for basis symbols; always a single term or zero."""
    kx, ky = x.kind, y.kind
    if kx == BasisSym.L_KIND:
        if ky == BasisSym.L_KIND:
            c = det(x.deg, y.deg)
            if not c:
                return None
            s = x.deg + y.deg
            if not s:
                return None
            return BasisSym(BasisSym.L_KIND, s), c
        c = x.deg.c1 if ky == BasisSym.D1_KIND else x.deg.c2
        if not c:
            return None
        return x, -c
    if ky == BasisSym.L_KIND:
        c = y.deg.c1 if kx == BasisSym.D1_KIND else y.deg.c2
        if not c:
            return None
        return y, c
    return None


def _sym_str(key) -> str:
    if isinstance(key, tuple):
        return " (x) ".join(str(s) for s in key)
    return str(key)


def _sort_key(key):
    if isinstance(key, tuple):
        return tuple(s.sort_key() for s in key)
    return key.sort_key()


def format_term(coeff: Scalar, body: str, first: bool) -> str:
    if coeff == ONE:
        return body if first else f"+ {body}"
    if coeff == -ONE:
        return f"-{body}" if first else f"- {body}"
    if coeff.re and coeff.im:
        c = f"({coeff})"
        return f"{c}*{body}" if first else f"+ {c}*{body}"
    neg = coeff.re < 0 if coeff.re else coeff.im < 0
    mag = str(-coeff) if neg else str(coeff)
    if first:
        return f"-{mag}*{body}" if neg else f"{mag}*{body}"
    return f"- {mag}*{body}" if neg else f"+ {mag}*{body}"


class Combination:
    """Finite sparse linear combination over Q(i); zero coefficients are dropped.

    Subclasses fix the key type: a BasisSym for LieElt, a tuple of
    ``arity`` BasisSyms for tensors.
    """

    __slots__ = ("terms",)
    arity = 1

    def __init__(self, terms=None):
        out = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, v in items:
                v = as_scalar(v)
                if not v:
                    continue
                nv = out.get(k, ZERO) + v
                if nv:
                    out[k] = nv
                else:
                    del out[k]
        self.terms = out

    @classmethod
    def _raw(cls, terms: dict):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def items(self):
        return self.terms.items()

    def coeff(self, key) -> Scalar:
        return self.terms.get(key, ZERO)

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k, ZERO) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return self._raw(out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k, ZERO) - v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return self._raw(out)

    def __neg__(self):
        return self._raw({k: -v for k, v in self.terms.items()})

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return self.zero()
        return self._raw({k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, Combination):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, c):
        if isinstance(c, Combination):
            return NotImplemented
        return self.scale(c)

    def __truediv__(self, c):
        return self.scale(as_scalar(c).inverse())

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (k, v) in enumerate(self.sorted_terms()):
            parts.append(format_term(v, _sym_str(k), i == 0))
        return " ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class LieElt(Combination):
    __slots__ = ()
    arity = 1

    @classmethod
    def basis(cls, sym: BasisSym | None, coeff=ONE) -> "LieElt":
        if sym is None:
            return cls.zero()
        return cls({sym: coeff})

    @classmethod
    def from_cartan(cls, d: CartanElt) -> "LieElt":
        return cls({D1: d.a1, D2: d.a2})

    def to_cartan(self) -> CartanElt:
        if any(not s.is_cartan() for s in self.terms):
            raise ValueError(f"{self} is not in span(d1, d2)")
        return CartanElt(self.coeff(D1), self.coeff(D2))

    def is_homogeneous(self) -> bool:
        return len({s.deg for s in self.terms}) <= 1

    def degrees(self) -> set:
        return {s.deg for s in self.terms}


def L(*deg) -> LieElt:
    """Element L_a; L(0, 0) is the zero element."""
    a = deg[0] if len(deg) == 1 else Degree(*deg)
    return LieElt.basis(Lsym(a))


def d1() -> LieElt:
    return LieElt.basis(D1)


def d2() -> LieElt:
    return LieElt.basis(D2)


def bracket(x: LieElt, y: LieElt) -> LieElt:
    out: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            t = bracket_sym(a, b)
            if t is None:
                continue
            s, c = t
            nv = out.get(s, ZERO) + ca * cb * c
            if nv:
                out[s] = nv
            else:
                out.pop(s, None)
    return LieElt._raw(out)


def degree_decompose(x: LieElt) -> dict:
    """Degree -> homogeneous component."""
    parts: dict = {}
    for s, c in x.terms.items():
        parts.setdefault(s.deg, {})[s] = c
    return {d: LieElt._raw(t) for d, t in parts.items()}


def check_jacobi(x: LieElt, y: LieElt, z: LieElt) -> LieElt:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]]."""
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))


def lie_sum(elts: Iterable[LieElt]) -> LieElt:
    out = LieElt.zero()
    for e in elts:
        out = out + e
    return out
