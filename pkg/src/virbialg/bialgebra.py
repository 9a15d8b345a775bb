"""Coboundary cobrackets, Yang-Baxter residuals and the Lie bialgebra axioms."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .algebra import BasisSym, LieElt, Lsym, bracket, bracket_sym
from .errors import NotAntisymmetric, OutOfWindow, ZeroDegree, ZeroPairing
from .lattice import CartanElt, Degree, pairing
from .scalars import ZERO
from .tensor import Tensor2, Tensor3, act, antisym_defect, cyclic_sum, tensor

__all__ = [
    "Cobracket",
    "AxiomReport",
    "cobracket_apply",
    "cybe_residual",
    "mybe_defect",
    "michaelis_r",
    "one_tensor_delta",
    "co_jacobi_defect",
    "check_cocommutator_axioms",
    "theorem_identity_defect",
]


@dataclass(frozen=True)
class Cobracket:
    """Either x -> x.r for a fixed r, or a table of values on a window of symbols."""

    r: Tensor2 | None = None
    table: Mapping[BasisSym, Tensor2] | None = None

    @classmethod
    def from_r(cls, r: Tensor2) -> "Cobracket":
        return cls(r=r)

    @classmethod
    def tabulated(cls, values: Mapping[BasisSym, Tensor2]) -> "Cobracket":
        return cls(table=dict(values))

    @classmethod
    def tabulate_r(cls, r: Tensor2, window: Sequence[BasisSym]) -> "Cobracket":
        return cls(table={s: act(LieElt.basis(s), r) for s in window})

    @property
    def window(self) -> tuple:
        return tuple(self.table) if self.table is not None else ()

    def evaluable(self, sym: BasisSym) -> bool:
        return self.table is None or sym in self.table

    def __call__(self, x: LieElt) -> Tensor2:
        return cobracket_apply(self, x)


def cobracket_apply(delta: Cobracket, x: LieElt) -> Tensor2:
    if delta.table is None:
        return act(x, delta.r)
    out = Tensor2.zero()
    for s, c in x.items():
        try:
            v = delta.table[s]
        except KeyError:
            raise OutOfWindow(s) from None
        out = out + v.scale(c)
    return out


def cybe_residual(r: Tensor2) -> Tensor3:
    """c(r) = [r12, r13] + [r12, r23] + [r13, r23], collapsed into L (x) L (x) L.

    For r = sum a_i (x) b_i this is
    sum_{i,j} [a_i,a_j] (x) b_i (x) b_j + a_i (x) [b_i,a_j] (x) b_j + a_i (x) a_j (x) [b_i,b_j].
    """
    out: dict = {}

    def put(k, v):
        nv = out.get(k, ZERO) + v
        if nv:
            out[k] = nv
        else:
            del out[k]

    terms = list(r.items())
    for (ai, bi), ci in terms:
        for (aj, bj), cj in terms:
            c = ci * cj
            t = bracket_sym(ai, aj)
            if t is not None:
                put((t[0], bi, bj), c * t[1])
            t = bracket_sym(bi, aj)
            if t is not None:
                put((ai, t[0], bj), c * t[1])
            t = bracket_sym(bi, bj)
            if t is not None:
                put((ai, aj, t[0]), c * t[1])
    return Tensor3._raw(out)


def mybe_defect(r: Tensor2, x: LieElt) -> Tensor3:
    return act(x, cybe_residual(r))


def michaelis_r(d: CartanElt, alpha: Degree) -> Tensor2:
    """r = a (x) b - b (x) a with b = L_alpha and a = d / <d, alpha>, so [a, b] = b."""
    if not alpha:
        raise ZeroDegree("alpha must be nonzero")
    p = pairing(d, alpha)
    if not p:
        raise ZeroPairing(f"<{d}, {alpha}> = 0")
    a = LieElt.from_cartan(d).scale(p.inverse())
    b = LieElt.basis(Lsym(alpha))
    return tensor(a, b) - tensor(b, a)


def one_tensor_delta(delta: Cobracket, t: Tensor2) -> Tensor3:
    """(1 (x) Delta) t."""
    out: dict = {}
    for (p, q), c in t.items():
        for (u, v), k in cobracket_apply(delta, LieElt.basis(q)).items():
            key = (p, u, v)
            nv = out.get(key, ZERO) + c * k
            if nv:
                out[key] = nv
            else:
                del out[key]
    return Tensor3._raw(out)


def co_jacobi_defect(delta: Cobracket, x: LieElt) -> Tensor3:
    """(1 + xi + xi^2)(1 (x) Delta) Delta(x)."""
    return cyclic_sum(one_tensor_delta(delta, cobracket_apply(delta, x)))


@dataclass
class AxiomReport:
    anticommutativity: dict = field(default_factory=dict)  # sym -> Tensor2
    co_jacobi: dict = field(default_factory=dict)  # sym -> Tensor3
    compatibility: dict = field(default_factory=dict)  # (sym, sym) -> Tensor2
    skipped: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(
            v for d in (self.anticommutativity, self.co_jacobi, self.compatibility) for v in d.values()
        )

    def nonzero(self) -> list:
        out = []
        for name, d in (
            ("anticommutativity", self.anticommutativity),
            ("co_jacobi", self.co_jacobi),
            ("compatibility", self.compatibility),
        ):
            for k, v in d.items():
                if v:
                    out.append((name, k, v))
        return out


def check_cocommutator_axioms(
    delta: Cobracket, window: Sequence[BasisSym], skip_unevaluable: bool = False
) -> AxiomReport:
    """Exact defects of the three Lie bialgebra conditions on a window.

    With ``skip_unevaluable`` a tabulated cobracket that cannot be evaluated
    somewhere is recorded in ``skipped`` instead of raising OutOfWindow.
    """
    rep = AxiomReport()
    window = list(window)
    for s in window:
        x = LieElt.basis(s)
        try:
            dx = cobracket_apply(delta, x)
        except OutOfWindow:
            if not skip_unevaluable:
                raise
            rep.skipped.append(("delta", s))
            continue
        rep.anticommutativity[s] = antisym_defect(dx)
        try:
            rep.co_jacobi[s] = cyclic_sum(one_tensor_delta(delta, dx))
        except OutOfWindow:
            if not skip_unevaluable:
                raise
            rep.skipped.append(("co_jacobi", s))
    for i, s in enumerate(window):
        for t in window[i + 1:]:
            x, y = LieElt.basis(s), LieElt.basis(t)
            try:
                lhs = cobracket_apply(delta, bracket(x, y))
                d = lhs - act(x, cobracket_apply(delta, y)) + act(y, cobracket_apply(delta, x))
            except OutOfWindow:
                if not skip_unevaluable:
                    raise
                rep.skipped.append(("compatibility", (s, t)))
                continue
            rep.compatibility[(s, t)] = d
    return rep


def theorem_identity_defect(r: Tensor2, x: LieElt) -> Tensor3:
    """(1 + xi + xi^2)(1 (x) Delta_r) Delta_r(x) - x . c(r); zero for antisymmetric r."""
    if antisym_defect(r):
        raise NotAntisymmetric("r is not in Im(1 - twist)")
    delta = Cobracket.from_r(r)
    return co_jacobi_defect(delta, x) - mybe_defect(r, x)
