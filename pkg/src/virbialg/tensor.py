"""Tensor square and cube of L(Gamma) with the adjoint diagonal action."""
from __future__ import annotations

from .algebra import BasisSym, Combination, LieElt, bracket_sym
from .lattice import Degree
from .scalars import ONE, ZERO

HALF = ONE / 2

__all__ = [
    "Tensor2",
    "Tensor3",
    "tensor",
    "twist",
    "cyclic",
    "cyclic_sum",
    "act",
    "act2",
    "act3",
    "antisym_defect",
    "antisymmetrize",
    "symmetric_part",
    "tensor_degree_decompose",
    "key_degree",
]


class Tensor2(Combination):
    __slots__ = ()
    arity = 2


class Tensor3(Combination):
    __slots__ = ()
    arity = 3


_BY_ARITY = {1: LieElt, 2: Tensor2, 3: Tensor3}


def tensor(*factors: LieElt) -> Combination:
    """Outer product x (x) y [(x) z]."""
    keys = {(): ONE}
    for f in factors:
        nxt: dict = {}
        for k, c in keys.items():
            for s, v in f.terms.items():
                nk = k + (s,)
                nv = nxt.get(nk, ZERO) + c * v
                if nv:
                    nxt[nk] = nv
                else:
                    nxt.pop(nk, None)
        keys = nxt
    return _BY_ARITY[len(factors)]._raw(keys)


def twist(t: Tensor2) -> Tensor2:
    """x (x) y -> y (x) x."""
    return Tensor2._raw({(b, a): c for (a, b), c in t.terms.items()})


def cyclic(t: Tensor3) -> Tensor3:
    """x (x) y (x) z -> y (x) z (x) x."""
    return Tensor3._raw({(b, c, a): v for (a, b, c), v in t.terms.items()})


def cyclic_sum(t: Tensor3) -> Tensor3:
    """(1 + xi + xi^2) t."""
    c1 = cyclic(t)
    return t + c1 + cyclic(c1)


def act(x: LieElt, t: Combination) -> Combination:
    """Diagonal adjoint action: Leibniz rule over every tensor slot."""
    out: dict = {}
    get = out.get
    for s, cs in x.terms.items():
        for key, v in t.terms.items():
            cv = cs * v
            for i, f in enumerate(key):
                br = bracket_sym(s, f)
                if br is None:
                    continue
                nsym, c = br
                nk = key[:i] + (nsym,) + key[i + 1:]
                nv = get(nk, ZERO) + cv * c
                if nv:
                    out[nk] = nv
                else:
                    del out[nk]
    return type(t)._raw(out)


def act2(x: LieElt, t: Tensor2) -> Tensor2:
    return act(x, t)


def act3(x: LieElt, t: Tensor3) -> Tensor3:
    return act(x, t)


def antisym_defect(t: Tensor2) -> Tensor2:
    """t + twist(t); zero exactly when t lies in Im(1 - twist)."""
    return t + twist(t)


def antisymmetrize(t: Tensor2) -> Tensor2:
    """(1 - twist) t."""
    return t - twist(t)


def symmetric_part(t: Tensor2) -> Tensor2:
    return (t + twist(t)).scale(HALF)


def key_degree(key: tuple[BasisSym, ...]) -> Degree:
    d = key[0].deg
    for s in key[1:]:
        d = d + s.deg
    return d


def tensor_degree_decompose(t: Combination) -> dict:
    """Degree -> homogeneous component (V_a pieces)."""
    parts: dict = {}
    for k, c in t.terms.items():
        parts.setdefault(key_degree(k), {})[k] = c
    cls = type(t)
    return {d: cls._raw(p) for d, p in parts.items()}
