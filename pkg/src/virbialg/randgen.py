"""Seeded random elements for self-checks and property tests."""
from __future__ import annotations

import random

from .algebra import D1, D2, LieElt, Lsym
from .bialgebra import michaelis_r
from .lattice import CartanElt, Degree, pairing
from .scalars import Scalar
from .tensor import Tensor2, Tensor3, antisymmetrize


def scalar(rng: random.Random, box: int = 5, gaussian: bool = True, nonzero: bool = False) -> Scalar:
    while True:
        re = rng.randint(-box, box)
        im = rng.randint(-box, box) if gaussian else 0
        if rng.random() < 0.2:
            re = Scalar(re) / rng.randint(1, 4)
            s = re + Scalar(0, im)
        else:
            s = Scalar(re, im)
        if s or not nonzero:
            return s


def degree(rng: random.Random, box: int = 5, gaussian: bool = False, nonzero: bool = True) -> Degree:
    while True:
        d = Degree(scalar(rng, box, gaussian), scalar(rng, box, gaussian))
        if d or not nonzero:
            return d


def sym(rng: random.Random, box: int = 5, gaussian: bool = False, cartan_rate: float = 0.2):
    if rng.random() < cartan_rate:
        return rng.choice((D1, D2))
    return Lsym(degree(rng, box, gaussian))


def lie_elt(rng: random.Random, nterms: int = 4, box: int = 5, gaussian: bool = False) -> LieElt:
    n = rng.randint(1, nterms)
    return LieElt([(sym(rng, box, gaussian), scalar(rng, 3, nonzero=True)) for _ in range(n)])


def tensor2(rng: random.Random, nterms: int = 4, box: int = 3, gaussian: bool = False) -> Tensor2:
    n = rng.randint(1, nterms)
    return Tensor2(
        [((sym(rng, box, gaussian), sym(rng, box, gaussian)), scalar(rng, 3, nonzero=True)) for _ in range(n)]
    )


def tensor3(rng: random.Random, nterms: int = 4, box: int = 3) -> Tensor3:
    n = rng.randint(1, nterms)
    return Tensor3([((sym(rng, box), sym(rng, box), sym(rng, box)), scalar(rng, 3, nonzero=True)) for _ in range(n)])


def antisym_tensor2(rng: random.Random, nterms: int = 6, box: int = 3) -> Tensor2:
    """(1 - twist) s for random s; at most nterms terms after expansion."""
    while True:
        t = antisymmetrize(tensor2(rng, max(1, nterms // 2), box))
        if t and len(t) <= nterms:
            return t


def homogeneous_tensor2(rng: random.Random, alpha: Degree, nterms: int = 3, box: int = 3) -> Tensor2:
    """Random element of V_alpha."""
    terms = []
    for _ in range(rng.randint(1, nterms)):
        kind = rng.random()
        if kind < 0.25:
            a = rng.choice((D1, D2))
            b = Lsym(alpha)
            if b is None:
                b = rng.choice((D1, D2))
            if rng.random() < 0.5:
                a, b = b, a
        else:
            beta = degree(rng, box)
            a, b = Lsym(beta), Lsym(alpha - beta)
            if b is None:
                continue
        terms.append(((a, b), scalar(rng, 3, nonzero=True)))
    t = Tensor2(terms)
    return t if t else homogeneous_tensor2(rng, alpha, nterms, box)


def degree0_tensor2(rng: random.Random, nterms: int = 4, box: int = 3) -> Tensor2:
    """Random element of V_0: d_i (x) d_j and L_b (x) L_-b terms."""
    terms = []
    for _ in range(rng.randint(1, nterms)):
        if rng.random() < 0.3:
            terms.append(((rng.choice((D1, D2)), rng.choice((D1, D2))), scalar(rng, 3, nonzero=True)))
        else:
            b = degree(rng, box)
            terms.append(((Lsym(b), Lsym(-b)), scalar(rng, 3, nonzero=True)))
    t = Tensor2(terms)
    return t if t else degree0_tensor2(rng, nterms, box)


def cartan_alpha(rng: random.Random, box: int = 3) -> tuple[CartanElt, Degree]:
    """(d, alpha) with <d, alpha> != 0."""
    while True:
        d = CartanElt(scalar(rng, 3), scalar(rng, 3))
        a = degree(rng, box)
        if pairing(d, a):
            return d, a


def michaelis_family(rng: random.Random, box: int = 3) -> Tensor2:
    """k * michaelis_r(d, alpha) for random nonzero k."""
    d, a = cartan_alpha(rng, box)
    return michaelis_r(d, a).scale(scalar(rng, 3, nonzero=True))
