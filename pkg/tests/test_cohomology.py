import random

import pytest
from hypothesis import given, strategies as st

from virbialg import randgen
from virbialg.algebra import D1, D2, L, LieElt, Lsym, d1, d2
from virbialg.bialgebra import Cobracket, cybe_residual
from virbialg.cohomology import (
    DerivationSpec,
    box_window,
    centralizer_probe_schedule,
    centralizer_witness,
    classify,
    derivation_defect,
    inner_witness_homogeneous,
    inner_witness_window,
    reduce_to_antisymmetric,
    standard_window,
)
from virbialg.errors import InconclusiveBudgetExhausted, NoSolution, NotHomogeneous, OutOfWindow, VerificationFailed
from virbialg.lattice import D1_CARTAN, Degree
from virbialg.tensor import Tensor2, act, antisym_defect, antisymmetrize, tensor, twist

from conftest import tensor2s
from test_bialgebra import C_SIX, R_MICH, R_SYM

E, F = L(1, 0), L(0, 1)
WIN6 = [D1, D2, Lsym(Degree(0, 1)), Lsym(Degree(0, -1)), Lsym(Degree(1, 0)), Lsym(Degree(-1, 0))]


def sym(p, q):
    return Lsym(Degree(p, q))


def test_windows():
    w = standard_window()
    assert w[:2] == [D1, D2] and len(w) == 8 and len(set(w)) == 8
    assert len(box_window(1)) == 2 + 8
    assert len(box_window(5)) == 2 + 120


def test_derivation_defect_inner_is_zero():
    D = DerivationSpec.inner(R_SYM + tensor(d1(), d2()), standard_window())
    for x in D.window:
        for y in D.window:
            try:
                assert derivation_defect(D, x, y) == 0
            except OutOfWindow:
                pass


def test_derivation_defect_table_example():
    D = DerivationSpec(WIN6, {sym(1, 0): tensor(d1(), d1())})
    assert derivation_defect(D, D2, sym(1, 0)) == 0


def test_derivation_defect_out_of_window():
    D = DerivationSpec([D1, sym(1, 0)], {})
    with pytest.raises(OutOfWindow):
        derivation_defect(D, sym(1, 0), sym(0, 1))


def test_inner_homogeneous_round_trip():
    u = tensor(E, d1())
    w = inner_witness_homogeneous(DerivationSpec.inner(u, WIN6), Degree(1, 0))
    assert w.witness == u
    assert w.cartan == D1_CARTAN


def test_inner_homogeneous_rejects_non_cocycle():
    D = DerivationSpec(WIN6, {D1: tensor(L(1, 1), d2())})
    with pytest.raises(VerificationFailed):
        inner_witness_homogeneous(D, Degree(1, 1))


def test_inner_homogeneous_preconditions():
    D = DerivationSpec(WIN6, {})
    with pytest.raises(NotHomogeneous):
        inner_witness_homogeneous(D, Degree(0, 0))
    D = DerivationSpec(WIN6, {D1: tensor(E, d1()), D2: tensor(F, d1())})
    with pytest.raises(NotHomogeneous):
        inner_witness_homogeneous(D, Degree(1, 0))


@given(st.randoms(use_true_random=False))
def test_inner_homogeneous_random(rng):
    alpha = randgen.degree(rng, 3)
    u = randgen.homogeneous_tensor2(rng, alpha)
    assert inner_witness_homogeneous(DerivationSpec.inner(u, standard_window()), alpha).witness == u


def test_inner_window_examples():
    u = tensor(d1(), d2()) - tensor(d2(), d1())
    D = DerivationSpec.inner(u, standard_window())
    w = inner_witness_window(D).witness
    assert all(act(LieElt.basis(s), w) == D.values[s] for s in D.window)
    assert inner_witness_window(DerivationSpec(standard_window(), {})).witness == 0


def test_inner_window_no_solution():
    D = DerivationSpec(standard_window(), {sym(1, 0): tensor(E, E)})
    with pytest.raises(NoSolution) as info:
        inner_witness_window(D)
    diag = info.value.diagnostics
    assert diag["rank_augmented"] > diag["rank"] or diag.get("not_degree_zero_at")


@given(st.randoms(use_true_random=False))
def test_inner_window_random(rng):
    u = randgen.degree0_tensor2(rng)
    D = DerivationSpec.inner(u, standard_window())
    w = inner_witness_window(D).witness
    assert all(act(LieElt.basis(s), w) == act(LieElt.basis(s), u) for s in D.window)


def test_centralizer_examples():
    assert centralizer_witness(C_SIX).x == d1()
    w = centralizer_witness(tensor(d1(), d1()))
    assert w.x == E
    assert w.image == -tensor(d1(), E) - tensor(E, d1())
    assert centralizer_witness(tensor(E, F)).x == d1()


def test_centralizer_zero_and_budget():
    with pytest.raises(ValueError):
        centralizer_witness(Tensor2.zero())
    with pytest.raises(InconclusiveBudgetExhausted):
        centralizer_witness(tensor(d1(), d1()), budget=1)


def test_probe_schedule_is_deterministic():
    a = [str(x) for x in centralizer_probe_schedule(C_SIX)]
    b = [str(x) for x in centralizer_probe_schedule(C_SIX)]
    assert a == b and a[0] == "d1"


@given(tensor2s(4))
def test_centralizer_witness_sound(t):
    if not t:
        return
    w = centralizer_witness(t)
    assert act(w.x, t) == w.image != 0


def test_reduce_examples():
    r = antisymmetrize(tensor(E, F))
    red = reduce_to_antisymmetric(r)
    assert red.ok and red.residual == 0
    assert antisymmetrize(red.witness) == r

    red = reduce_to_antisymmetric(tensor(E, L(-1, 0)))
    assert not red.ok
    assert red.counterexample == F
    expected = act(F, tensor(E, L(-1, 0)))
    assert expected == -tensor(L(1, 1), L(-1, 0)) + tensor(E, L(-1, 1))
    assert red.defect == antisym_defect(expected) != 0


def test_reduce_degree_zero_normalization():
    # mixed signs: terms on negative b are moved onto positive b
    r = tensor(L(-2, 1), L(2, -1)) - tensor(L(2, -1), L(-2, 1)) + tensor(d1(), d2()) - tensor(d2(), d1())
    red = reduce_to_antisymmetric(r)
    assert red.ok and antisymmetrize(red.witness) == r


@pytest.mark.parametrize(
    "r",
    [
        tensor(d1(), d1()),
        tensor(d1(), d2()) + tensor(d2(), d1()),
        tensor(E, L(-1, 0)) + tensor(L(-1, 0), E),
        tensor(L(3, -2), L(-3, 2)),
        tensor(L(0, 1), L(0, -1)),
        tensor(E, F) + tensor(F, E),
    ],
)
def test_reduce_counterexamples_verified(r):
    red = reduce_to_antisymmetric(r)
    assert not red.ok
    assert antisym_defect(act(red.counterexample, r)) == red.defect != 0


@given(tensor2s(4))
def test_reduce_round_trip(s):
    r = s - twist(s)
    red = reduce_to_antisymmetric(r)
    assert red.ok and red.residual == 0
    assert r == red.witness - twist(red.witness)


def test_classify_michaelis():
    win = box_window(2)
    D = DerivationSpec.inner(R_MICH, win)
    res = classify(D)
    assert res.verdict == "TriangularCoboundary" and res.ok
    assert all(act(LieElt.basis(s), res.r) == D.values[s] for s in win)
    assert res.cr == 0


def test_classify_zero():
    res = classify(DerivationSpec(standard_window(), {}))
    assert res.verdict == "TriangularCoboundary"
    assert res.r == 0


def test_classify_symmetric_counterexample():
    res = classify(DerivationSpec.inner(R_SYM, box_window(2)))
    assert res.verdict == "CYBEFails"
    assert res.cr == C_SIX
    assert act(res.mybe_witness.x, C_SIX) != 0


def test_classify_not_a_derivation():
    D = DerivationSpec(standard_window(), {sym(1, 0): tensor(d1(), d1())})
    res = classify(D)
    assert res.verdict == "NotADerivation"
    assert res.pair is not None


def test_classify_not_antisymmetric():
    r = tensor(E, L(-1, 0))
    res = classify(DerivationSpec.inner(r, box_window(2)))
    assert res.verdict == "NotAntisymmetric"
    assert antisym_defect(act(res.probe, res.r)) != 0


def test_classify_accepts_cobracket():
    delta = Cobracket.tabulated({s: act(LieElt.basis(s), R_MICH) for s in standard_window()})
    assert classify(delta).verdict == "TriangularCoboundary"


def test_classify_scaled_michaelis_family():
    rng = random.Random(7)
    for _ in range(3):
        r = randgen.michaelis_family(rng, box=2)
        assert cybe_residual(r) == 0
        assert classify(DerivationSpec.inner(r, box_window(2))).ok
