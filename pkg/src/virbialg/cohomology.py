"""Derivations L(Gamma) -> L (x) L, inner-witness recovery and classification.

Every derivation into V = L (x) L is inner. Nonzero-degree components are
recovered in closed form as a = D(d) / <d, alpha>; the degree-0 component
is recovered by an exact linear solve on a finite window of generators.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count
from typing import Iterable, Mapping

from . import linsolve
from .algebra import D1, D2, BasisSym, LieElt, Lsym, bracket
from .bialgebra import Cobracket, cobracket_apply, cybe_residual
from .errors import (
    InconclusiveBudgetExhausted,
    NoSolution,
    NotHomogeneous,
    OutOfWindow,
    VerificationFailed,
)
from .lattice import ZERO_DEGREE, Degree, Lattice, det, pairing, separating_cartan
from .scalars import ONE, Scalar
from .tensor import (
    HALF,
    Tensor2,
    Tensor3,
    act,
    antisym_defect,
    antisymmetrize,
    key_degree,
    tensor,
    tensor_degree_decompose,
)

__all__ = [
    "DerivationSpec",
    "InnerWitness",
    "WindowWitness",
    "CentralizerWitness",
    "Reduction",
    "Classification",
    "standard_window",
    "box_window",
    "lattice_window",
    "derivation_defect",
    "inner_witness_homogeneous",
    "inner_witness_window",
    "centralizer_witness",
    "reduce_to_antisymmetric",
    "classify",
]

DEFAULT_BUDGET = 64


def standard_window() -> list[BasisSym]:
    """d1, d2 and L_(p;q) for (p, q) = (+-1, 0), (0, +-1), +-(1, 1)."""
    degs = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]
    return [D1, D2] + [Lsym(d) for d in degs]


def box_window(radius: int) -> list[BasisSym]:
    """d1, d2 and every L_(p;q) with integer |p|, |q| <= radius."""
    syms = [D1, D2]
    for p in range(-radius, radius + 1):
        for q in range(-radius, radius + 1):
            if p or q:
                syms.append(Lsym((p, q)))
    return syms


def lattice_window(lat: Lattice) -> list[BasisSym]:
    """The standard window written in a basis (e1, e2) of the lattice."""
    e1, e2 = lat.basis()
    degs = [e1, -e1, e2, -e2, e1 + e2, -(e1 + e2)]
    return [D1, D2] + [Lsym(d) for d in degs]


@dataclass(frozen=True)
class DerivationSpec:
    """A linear map L -> V given by its values on a finite window of basis symbols."""

    window: tuple
    values: Mapping[BasisSym, Tensor2]

    def __init__(self, window: Iterable[BasisSym], values: Mapping[BasisSym, Tensor2]):
        window = tuple(window)
        vals = {s: values.get(s, Tensor2.zero()) for s in window}
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "values", vals)

    @classmethod
    def inner(cls, u: Tensor2, window: Iterable[BasisSym]) -> "DerivationSpec":
        """u_inn restricted to the window: x -> x . u."""
        window = tuple(window)
        return cls(window, {s: act(LieElt.basis(s), u) for s in window})

    @classmethod
    def from_cobracket(cls, delta: Cobracket, window: Iterable[BasisSym] | None = None) -> "DerivationSpec":
        window = tuple(window) if window is not None else delta.window
        return cls(window, {s: cobracket_apply(delta, LieElt.basis(s)) for s in window})

    def as_cobracket(self) -> Cobracket:
        return Cobracket.tabulated(self.values)

    def __call__(self, x: LieElt) -> Tensor2:
        out = Tensor2.zero()
        for s, c in x.items():
            if s not in self.values:
                raise OutOfWindow(s)
            out = out + self.values[s].scale(c)
        return out

    def component(self, alpha: Degree) -> "DerivationSpec":
        """D_alpha: the part of D(x) lying in V_{alpha + deg x}."""
        vals = {}
        for s, v in self.values.items():
            target = alpha + s.deg
            vals[s] = Tensor2._raw({k: c for k, c in v.items() if key_degree(k) == target})
        return DerivationSpec(self.window, vals)

    def degrees(self) -> set:
        """All alpha with D_alpha != 0 on the window."""
        out = set()
        for s, v in self.values.items():
            for k in v.terms:
                out.add(key_degree(k) - s.deg)
        return out

    def is_homogeneous(self, alpha: Degree) -> list:
        """Window symbols where D leaves V_{alpha + deg x} (empty list = homogeneous)."""
        return [s for s in self.window if any(key_degree(k) != alpha + s.deg for k in self.values[s].terms)]


def derivation_defect(D: DerivationSpec, x: BasisSym, y: BasisSym) -> Tensor2:
    """D([x,y]) - x.D(y) + y.D(x)."""
    for s in (x, y):
        if s not in D.values:
            raise OutOfWindow(s)
    X, Y = LieElt.basis(x), LieElt.basis(y)
    return D(bracket(X, Y)) - act(X, D.values[y]) + act(Y, D.values[x])


# ---------------------------------------------------------------------------
# inner witnesses


@dataclass
class InnerWitness:
    witness: Tensor2
    cartan: object
    verified: tuple


def inner_witness_homogeneous(D: DerivationSpec, alpha: Degree) -> InnerWitness:
    """Recover a with D = a_inn for D homogeneous of nonzero degree alpha.

    Picks d with <d, alpha> != 0 and sets a = D(d) / <d, alpha>; then checks
    D(x) = x . a on every window symbol.
    """
    if not alpha:
        raise NotHomogeneous("degree-0 components are handled by inner_witness_window")
    bad = D.is_homogeneous(alpha)
    if bad:
        raise NotHomogeneous(f"D is not homogeneous of degree {alpha} at {bad[0]}")
    d = separating_cartan([alpha])
    p = pairing(d, alpha)
    a = D(LieElt.from_cartan(d)).scale(p.inverse())
    for s in D.window:
        got = act(LieElt.basis(s), a)
        if got != D.values[s]:
            raise VerificationFailed(s, D.values[s], got)
    return InnerWitness(a, d, tuple(D.window))


@dataclass
class WindowWitness:
    witness: Tensor2
    rank: int
    unknowns: int
    equations: int
    verified: tuple


def _degree0_candidates(D: DerivationSpec) -> list[Degree]:
    wdegs = {s.deg for s in D.window} | {ZERO_DEGREE}
    diff = {a - b for a in wdegs for b in wdegs}
    cands = {b + s for b in diff for s in wdegs}
    # degrees that can reach the prescribed values in one action step
    for s, v in D.values.items():
        g = s.deg
        for left, right in v.terms:
            cands.update((left.deg, left.deg - g, -right.deg, g - right.deg))
    cands.discard(ZERO_DEGREE)
    return sorted(cands, key=Degree.sort_key)


def inner_witness_window(D: DerivationSpec) -> WindowWitness:
    """Solve x . u = D(x) for u in V_0, x ranging over the window.

    Unknowns are the coefficients of d_i (x) d_j and L_b (x) L_-b for b in
    a finite candidate set (differences of window degrees widened by one
    bracket step, plus degrees forced by the prescribed values).
    """
    if not any(D.values.values()):
        return WindowWitness(Tensor2.zero(), 0, 0, 0, tuple(D.window))
    cols = [(D1, D1), (D1, D2), (D2, D1), (D2, D2)]
    cols += [(Lsym(b), Lsym(-b)) for b in _degree0_candidates(D)]
    rows: dict = {}
    for j, col in enumerate(cols):
        basis_t = Tensor2._raw({col: ONE})
        for s in D.window:
            for k, c in act(LieElt.basis(s), basis_t).items():
                rows.setdefault((s, k), {})[j] = c
    rhs_map = {}
    for s, v in D.values.items():
        for k, c in v.items():
            rhs_map[(s, k)] = c
            rows.setdefault((s, k), {})
    keys = list(rows)
    res = linsolve.solve([rows[k] for k in keys], [rhs_map.get(k, Scalar(0)) for k in keys], range(len(cols)))
    nonhom = D.is_homogeneous(ZERO_DEGREE)
    diag = {
        "rank": res.rank,
        "rank_augmented": res.rank_augmented,
        "unknowns": len(cols),
        "equations": len(keys),
        "not_degree_zero_at": [str(s) for s in nonhom],
    }
    if not res.consistent:
        bad = [keys[i] for i in res.inconsistent_rows]
        diag["first_unreachable"] = f"{bad[0][0]}: {bad[0][1][0]} (x) {bad[0][1][1]}" if bad else ""
        raise NoSolution("no inner witness in V_0 on this window", diag)
    u = Tensor2._raw({cols[j]: c for j, c in res.solution.items() if c})
    for s in D.window:
        got = act(LieElt.basis(s), u)
        if got != D.values[s]:
            raise VerificationFailed(s, D.values[s], got)
    return WindowWitness(u, res.rank, len(cols), len(keys), tuple(D.window))


# ---------------------------------------------------------------------------
# centralizer witnesses


@dataclass
class CentralizerWitness:
    x: LieElt
    image: object
    probes: list


def _factor_degrees(c) -> list[Degree]:
    degs = set()
    for k in c.terms:
        for s in k:
            degs.add(s.deg)
    return sorted(degs, key=Degree.sort_key)


def centralizer_probe_schedule(c):
    """Probe elements in the fixed search order for a nonzero tensor c."""
    comps = [d for d in tensor_degree_decompose(c) if d]
    if comps:
        yield LieElt.from_cartan(separating_cartan(comps))
    yield LieElt.basis(D1)
    yield LieElt.basis(D2)
    fdegs = _factor_degrees(c)
    diffs = sorted({a - b for a in fdegs for b in fdegs if a != b}, key=Degree.sort_key)
    for b in diffs:
        yield LieElt.basis(Lsym(b))
    for b in ((1, 0), (-1, 0), (0, 1), (0, -1)):
        yield LieElt.basis(Lsym(b))


def centralizer_witness(c, budget: int = DEFAULT_BUDGET) -> CentralizerWitness:
    """Find x with x . c != 0 for nonzero c in L^(x)2 or L^(x)3."""
    if not c:
        raise ValueError("centralizer_witness needs a nonzero tensor")
    probes = []
    seen = set()
    for x in centralizer_probe_schedule(c):
        if len(probes) >= budget:
            break
        key = frozenset(x.terms.items())
        if key in seen:
            continue
        seen.add(key)
        image = act(x, c)
        probes.append((x, bool(image)))
        if image:
            return CentralizerWitness(x, image, probes)
    raise InconclusiveBudgetExhausted(probes)


# ---------------------------------------------------------------------------
# reduction to Im(1 - twist)


@dataclass
class Reduction:
    witness: Tensor2 | None = None
    residual: Tensor2 | None = None
    counterexample: LieElt | None = None
    defect: Tensor2 | None = None
    probes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _positive_probes():
    """L_(0;1), L_(1;0), then L_(s;t) with s, t >= 1 by increasing s + t."""
    yield Degree(0, 1)
    yield Degree(1, 0)
    for n in count(2):
        for s in range(1, n):
            yield Degree(s, n - s)


def reduce_to_antisymmetric(r: Tensor2, budget: int = DEFAULT_BUDGET) -> Reduction:
    """Write r = (1 - twist) w, or return a probe a with a . r outside Im(1 - twist).

    Nonzero-degree components are tested all at once by a separating Cartan
    probe. In degree 0, L_b (x) L_-b terms are moved onto positive b (p > 0,
    or p = 0 and q > 0, lexicographically) using v_b = (1 - twist)(L_b (x) L_-b);
    any survivor is exposed by a probe L_s with s positive and det(s, b) != 0.
    """
    rep = Reduction()

    def try_probe(x: LieElt) -> bool:
        d = antisym_defect(act(x, r))
        rep.probes.append((x, bool(d)))
        if d:
            rep.counterexample = x
            rep.defect = d
            return True
        return False

    parts = tensor_degree_decompose(r)
    w = Tensor2.zero()
    nonzero = [a for a in parts if a]
    if nonzero:
        dprobe = LieElt.from_cartan(separating_cartan(nonzero))
        if try_probe(dprobe):
            return rep
        for a in nonzero:
            w = w + parts[a].scale(HALF)

    r0 = parts.get(ZERO_DEGREE, Tensor2.zero())
    cartan_block = Tensor2._raw({k: c for k, c in r0.items() if k[0].is_cartan()})
    lblock: dict = {}
    for (a, b), c in r0.items():
        if a.is_cartan():
            continue
        beta = a.deg
        if beta.is_positive():
            lblock[beta] = lblock.get(beta, Scalar(0)) + c
        else:
            # r + c v_{-beta} kills this term and moves c onto L_{-beta} (x) L_beta
            pos = -beta
            lblock[pos] = lblock.get(pos, Scalar(0)) + c
            w = w - tensor(LieElt.basis(Lsym(pos)), LieElt.basis(Lsym(beta))).scale(c)
    survivors = sorted((b for b, c in lblock.items() if c), key=Degree.sort_key)
    if survivors:
        tried = 0
        for s in _positive_probes():
            if tried >= budget:
                break
            if not any(det(s, b) for b in survivors):
                continue
            tried += 1
            if try_probe(LieElt.basis(Lsym(s))):
                return rep
        raise InconclusiveBudgetExhausted(rep.probes)

    if antisym_defect(cartan_block):
        for s in [(1, 0), (0, 1), (1, 1), (1, -1)]:
            if try_probe(LieElt.basis(Lsym(s))):
                return rep
        raise InconclusiveBudgetExhausted(rep.probes)
    w = w + cartan_block.scale(HALF)

    rep.witness = w
    rep.residual = r - antisymmetrize(w)
    return rep


# ---------------------------------------------------------------------------
# classification pipeline


@dataclass
class Classification:
    verdict: str
    r: Tensor2 | None = None
    cr: Tensor3 | None = None
    pair: tuple | None = None
    probe: LieElt | None = None
    detail: str = ""
    components: dict = field(default_factory=dict)  # degree -> witness piece
    compatibility_checked: int = 0
    compatibility_skipped: int = 0
    recovery_defects: dict = field(default_factory=dict)
    reduction: Reduction | None = None
    mybe_witness: CentralizerWitness | None = None

    @property
    def ok(self) -> bool:
        return self.verdict == "TriangularCoboundary"


def classify(delta, budget: int = DEFAULT_BUDGET) -> Classification:
    """Run the full pipeline on a cobracket tabulated on a window.

    1. compatibility (derivation) defects on window pairs
    2. recover r with Delta = Delta_r on the window, degree by degree
    3. reduce r into Im(1 - twist)
    4. check c(r) = 0
    """
    D = delta if isinstance(delta, DerivationSpec) else DerivationSpec.from_cobracket(delta)
    res = Classification(verdict="")

    window = list(D.window)
    for i, s in enumerate(window):
        for t in window[i + 1:]:
            try:
                d = derivation_defect(D, s, t)
            except OutOfWindow:
                res.compatibility_skipped += 1
                continue
            res.compatibility_checked += 1
            if d:
                res.verdict = "NotADerivation"
                res.pair = (s, t)
                res.detail = str(d)
                return res

    r = Tensor2.zero()
    for alpha in sorted(D.degrees(), key=Degree.sort_key):
        comp = D.component(alpha)
        try:
            if alpha:
                piece = inner_witness_homogeneous(comp, alpha).witness
            else:
                piece = inner_witness_window(comp).witness
        except (VerificationFailed, NoSolution, NotHomogeneous) as exc:
            res.verdict = "NotADerivation"
            res.detail = f"degree {alpha}: {exc}"
            return res
        res.components[alpha] = piece
        r = r + piece
    res.r = r
    for s in D.window:
        got = act(LieElt.basis(s), r)
        diff = got - D.values[s]
        if diff:
            res.recovery_defects[s] = diff
    if res.recovery_defects:
        res.verdict = "NotADerivation"
        res.detail = "recovered r does not reproduce Delta on the window"
        return res

    red = reduce_to_antisymmetric(r, budget)
    res.reduction = red
    if not red.ok:
        res.verdict = "NotAntisymmetric"
        res.probe = red.counterexample
        return res

    cr = cybe_residual(r)
    res.cr = cr
    if cr:
        res.verdict = "CYBEFails"
        try:
            res.mybe_witness = centralizer_witness(cr, budget)
        except InconclusiveBudgetExhausted:
            pass
        return res
    res.verdict = "TriangularCoboundary"
    return res
