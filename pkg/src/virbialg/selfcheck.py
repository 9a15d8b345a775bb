"""Embedded invariant suite behind ``virbialg selfcheck``.

Each check draws seeded random inputs, recomputes an identity exactly and
prints one PASS/FAIL line. The exit status is 0 only if every check passes.
"""
from __future__ import annotations

import random
import time
from typing import Callable

from . import randgen
from .algebra import LieElt, bracket, check_jacobi
from .bialgebra import (
    Cobracket,
    check_cocommutator_axioms,
    cybe_residual,
    mybe_defect,
    theorem_identity_defect,
)
from .cohomology import (
    DerivationSpec,
    centralizer_witness,
    classify,
    inner_witness_homogeneous,
    inner_witness_window,
    reduce_to_antisymmetric,
    standard_window,
)
from .script import parse_element
from .tensor import act, antisym_defect, antisymmetrize, twist


def _field_axioms(rng, n):
    for _ in range(n):
        a, b, c = (randgen.scalar(rng) for _ in range(3))
        if (a + b) + c != a + (b + c) or a * (b + c) != a * b + a * c:
            return f"failed at {a}, {b}, {c}"
        if a and a * a.inverse() != 1:
            return f"inverse failed at {a}"
        if a < b and not (a + c < b + c):
            return f"order not translation invariant at {a}, {b}, {c}"


def _jacobi(rng, n):
    for _ in range(n):
        x, y, z = (randgen.lie_elt(rng, 4, 5, gaussian=True) for _ in range(3))
        if check_jacobi(x, y, z):
            return f"defect at {x}; {y}; {z}"
        if bracket(x, y) + bracket(y, x):
            return f"antisymmetry fails at {x}; {y}"


def _module_axiom(rng, n):
    for _ in range(n):
        x, y = randgen.lie_elt(rng, 3), randgen.lie_elt(rng, 3)
        t = randgen.tensor2(rng)
        if act(bracket(x, y), t) != act(x, act(y, t)) - act(y, act(x, t)):
            return f"fails at {x}; {y}; {t}"
        if twist(act(x, t)) != act(x, twist(t)):
            return f"action does not commute with twist at {x}; {t}"


def _bridge(rng, n):
    for _ in range(n):
        r = randgen.antisym_tensor2(rng)
        x = randgen.lie_elt(rng, 3)
        if theorem_identity_defect(r, x):
            return f"defect at r={r}, x={x}"


def _michaelis(rng, n):
    window = standard_window()
    for _ in range(n):
        r = randgen.michaelis_family(rng)
        if cybe_residual(r) or antisym_defect(r):
            return f"not triangular: {r}"
        if not check_cocommutator_axioms(Cobracket.from_r(r), window).ok:
            return f"axioms fail for {r}"
        x = randgen.lie_elt(rng)
        if mybe_defect(r, x):
            return f"mybe fails for {r} at {x}"


def _centralizer(rng, n):
    done = 0
    while done < n:
        r = randgen.antisym_tensor2(rng)
        c = cybe_residual(r)
        if not c:
            continue
        w = centralizer_witness(c)
        if not act(w.x, c):
            return f"witness {w.x} does not move c(r) for r={r}"
        done += 1


def _inner(rng, n):
    window = standard_window()
    for _ in range(n):
        alpha = randgen.degree(rng, 3)
        u = randgen.homogeneous_tensor2(rng, alpha)
        got = inner_witness_homogeneous(DerivationSpec.inner(u, window), alpha).witness
        if got != u:
            return f"recovered {got}, expected {u}"
        u0 = randgen.degree0_tensor2(rng)
        D = DerivationSpec.inner(u0, window)
        w = inner_witness_window(D).witness
        if any(act(LieElt.basis(s), w) != D.values[s] for s in window):
            return f"window witness {w} disagrees with {u0}"


def _reduction(rng, n):
    for _ in range(n):
        s = randgen.tensor2(rng)
        r = antisymmetrize(s)
        red = reduce_to_antisymmetric(r)
        if not red.ok or red.residual or r != antisymmetrize(red.witness):
            return f"reduction failed for {r}"
        sym = s + twist(s)
        if sym:
            red = reduce_to_antisymmetric(sym)
            if red.ok or not antisym_defect(act(red.counterexample, sym)):
                return f"no valid counterexample for {sym}"


def _classify(rng, n):
    from .cohomology import box_window

    window = box_window(2)
    for _ in range(n):
        r = randgen.michaelis_family(rng, box=2)
        D = DerivationSpec.inner(r, window)
        res = classify(D)
        if res.verdict != "TriangularCoboundary":
            return f"{res.verdict} for {r}"
        if any(act(LieElt.basis(s), res.r) != D.values[s] for s in window):
            return f"recovered r' disagrees with {r}"


def _roundtrip(rng, n):
    for i in range(n):
        kind = i % 3
        if kind == 0:
            e = randgen.lie_elt(rng, 5, gaussian=True)
        elif kind == 1:
            e = randgen.tensor2(rng, gaussian=True)
        else:
            e = randgen.tensor3(rng)
        back = parse_element(str(e), kind + 1)
        if back != e:
            return f"{e} parsed back as {back}"


CHECKS: list[tuple[str, Callable, int]] = [
    ("field axioms and order", _field_axioms, 300),
    ("Jacobi and antisymmetry", _jacobi, 200),
    ("module axiom and twist commutation", _module_axiom, 100),
    ("bridge identity", _bridge, 50),
    ("Michaelis triangular bialgebras", _michaelis, 20),
    ("centralizer witnesses", _centralizer, 30),
    ("inner witness round-trips", _inner, 20),
    ("antisymmetric reduction", _reduction, 30),
    ("classification pipeline", _classify, 3),
    ("print/parse round-trip", _roundtrip, 150),
]


def run_selfcheck(seed: int = 0, scale: float = 1.0, out=print) -> int:
    failures = 0
    for name, fn, n in CHECKS:
        rng = random.Random(f"{seed}:{name}")
        cases = max(1, int(n * scale))
        t0 = time.perf_counter()
        try:
            problem = fn(rng, cases)
        except Exception as exc:  # report, never crash the suite
            problem = f"{type(exc).__name__}: {exc}"
        dt = time.perf_counter() - t0
        status = "FAIL" if problem else "PASS"
        failures += bool(problem)
        line = f"{status} {name} ({cases} cases, {dt:.2f}s)"
        out(line + (f": {problem}" if problem else ""))
    return 1 if failures else 0
