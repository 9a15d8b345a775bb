"""Sparse exact Gauss elimination over Q(i)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .scalars import ZERO, Scalar


@dataclass
class SolveResult:
    solution: dict | None
    rank: int
    rank_augmented: int
    ncols: int
    inconsistent_rows: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.solution is not None

    @property
    def nullity(self) -> int:
        return self.ncols - self.rank


class _Eliminator:
    def __init__(self, order: dict):
        self.order = order
        self.pivots: dict = {}  # col -> (row, rhs)
        self.sequence: list = []

    def _key(self, col):
        return self.order.get(col, (1, repr(col)))

    def reduce(self, row: dict, rhs: Scalar):
        row = {c: v for c, v in row.items() if v}
        while True:
            hits = [c for c in row if c in self.pivots]
            if not hits:
                return row, rhs
            for c in hits:
                f = row.get(c)
                if not f:
                    continue
                prow, prhs = self.pivots[c]
                for k, v in prow.items():
                    nv = row.get(k, ZERO) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                rhs = rhs - f * prhs

    def add(self, row: dict, rhs: Scalar):
        """Returns False if the row reduces to 0 = nonzero."""
        row, rhs = self.reduce(row, rhs)
        if not row:
            return not rhs
        col = min(row, key=self._key)
        scale = row[col].inverse()
        row = {k: v * scale for k, v in row.items()}
        self.pivots[col] = (row, rhs * scale)
        self.sequence.append(col)
        return True

    def back_substitute(self) -> dict:
        x: dict = {}
        for col in reversed(self.sequence):
            row, rhs = self.pivots[col]
            acc = rhs
            for k, v in row.items():
                if k != col and k in x:
                    acc = acc - v * x[k]
            if acc:
                x[col] = acc
            else:
                x[col] = ZERO
        return {k: v for k, v in x.items() if v}


def solve(rows: Sequence[dict], rhs: Sequence[Scalar], columns: Iterable[Hashable] = ()) -> SolveResult:
    """Solve ``sum_c rows[i][c] * x[c] == rhs[i]`` exactly.

    ``columns`` fixes the pivot preference order and the reported column
    count; free variables are set to zero.
    """
    columns = list(columns)
    order = {c: (0, i) for i, c in enumerate(columns)}
    elim = _Eliminator(order)
    bad = []
    for i, (row, b) in enumerate(zip(rows, rhs)):
        if not elim.add(dict(row), b):
            bad.append(i)
    allcols = set(columns)
    for row in rows:
        allcols.update(row)
    rank = len(elim.sequence)
    if bad:
        return SolveResult(None, rank, rank + 1, len(allcols), bad)
    return SolveResult(elim.back_substitute(), rank, rank, len(allcols))


def rank(rows: Sequence[dict]) -> int:
    elim = _Eliminator({})
    for row in rows:
        elim.add(dict(row), ZERO)
    return len(elim.sequence)
