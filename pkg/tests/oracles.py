"""Independent reference computations used only by the tests."""
from collections import defaultdict

from virbialg.algebra import LieElt, bracket
from virbialg.scalars import ONE, ZERO, Scalar
from virbialg.tensor import Tensor3, tensor


def _embed(r, slots):
    """r^{ij}: place the factors of r in the given slots, empty words elsewhere."""
    out = {}
    for (a, b), c in r.items():
        words = [(), (), ()]
        words[slots[0]] = (a,)
        words[slots[1]] = (b,)
        out[tuple(words)] = c
    return out


def _mul(x, y):
    out = defaultdict(lambda: ZERO)
    for kx, cx in x.items():
        for ky, cy in y.items():
            out[tuple(u + v for u, v in zip(kx, ky))] += cx * cy
    return out


def _commutator(x, y):
    out = defaultdict(lambda: ZERO, _mul(x, y))
    for k, c in _mul(y, x).items():
        out[k] -= c
    return out


def cybe_via_enveloping_words(r):
    """c(r) from [r12,r13] + [r12,r23] + [r13,r23] in the free algebra on each slot.

    Every surviving word has one slot of length 2. That slot is split as
    xy = (xy + yx)/2 + [x,y]/2. The symmetric halves must cancel. The
    commutator halves give the element of L(x)L(x)L that is returned.
    """
    r12, r13, r23 = _embed(r, (0, 1)), _embed(r, (0, 2)), _embed(r, (1, 2))
    total = defaultdict(lambda: ZERO)
    for x, y in ((r12, r13), (r12, r23), (r13, r23)):
        for k, c in _commutator(x, y).items():
            total[k] += c
    sym = defaultdict(lambda: ZERO)
    out = Tensor3.zero()
    half = ONE / 2
    for words, c in total.items():
        if not c:
            continue
        assert sorted(len(w) for w in words) == [1, 1, 2], words
        factors = []
        for w in words:
            if len(w) == 1:
                factors.append(LieElt.basis(w[0]))
            else:
                factors.append(bracket(LieElt.basis(w[0]), LieElt.basis(w[1])).scale(half))
        out = out + tensor(*factors).scale(c)
        skey = tuple(tuple(sorted(w, key=lambda s: s.sort_key())) for w in words)
        sym[skey] += c * half
    leftover = {k: v for k, v in sym.items() if v}
    assert not leftover, f"symmetric parts do not cancel: {leftover}"
    return out


def sym_tensor(*parts):
    """Sum of coefficient * tensor(factors) for (coeff, factors) pairs."""
    out = None
    for c, facs in parts:
        t = tensor(*facs).scale(Scalar(c))
        out = t if out is None else out + t
    return out
