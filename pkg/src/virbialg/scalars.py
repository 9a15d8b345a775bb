"""Exact Gaussian rationals a + b*i with a, b in Q.

Coordinates are stored as ``gmpy2.mpq`` values, which are always kept in
lowest terms with a positive denominator.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

__all__ = ["Scalar", "ZERO", "ONE", "I", "as_scalar", "add", "mul", "neg", "inv", "cmp"]

_Q0 = mpq(0)
_Q1 = mpq(1)


def _q(x) -> mpq:
    if isinstance(x, mpq):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        return mpq(x)
    if isinstance(x, str):
        return mpq(Fraction(x))
    raise TypeError(f"cannot make a rational from {x!r}")


class Scalar:
    """Element of Q(i). Immutable; ordered lexicographically by (re, im)."""

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re=0, im=0):
        self.re = _q(re)
        self.im = _q(im)
        self._hash = None

    @classmethod
    def _make(cls, re: mpq, im: mpq) -> "Scalar":
        s = object.__new__(cls)
        s.re = re
        s.im = im
        s._hash = None
        return s

    # -- field operations -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            other = as_scalar(other)
        return Scalar._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = as_scalar(other)
        return Scalar._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, mpq, Fraction)):
                o = _q(other)
                return Scalar._make(self.re * o, self.im * o)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar._make(a * c, _Q0)
        return Scalar._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self) -> "Scalar":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero scalar")
            return Scalar._make(_Q1 / a, _Q0)
        n = a * a + b * b
        return Scalar._make(a / n, -b / n)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            other = as_scalar(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def conjugate(self) -> "Scalar":
        return Scalar._make(self.re, -self.im)

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    # -- equality, hashing, order -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, mpq, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.re, self.im)) if self.im else hash(self.re)
        return h

    def sort_key(self):
        return (self.re, self.im)

    def __lt__(self, other):
        other = as_scalar(other)
        return (self.re, self.im) < (other.re, other.im)

    def __le__(self, other):
        other = as_scalar(other)
        return (self.re, self.im) <= (other.re, other.im)

    def __gt__(self, other):
        return as_scalar(other) < self

    def __ge__(self, other):
        return as_scalar(other) <= self

    # -- printing ---------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"


def _fmt_q(q: mpq) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(s: Scalar) -> str:
    """Render in the literal grammar: ``3/4``, ``-2``, ``1/2+1/3i``, ``-1i``."""
    if not s.im:
        return _fmt_q(s.re)
    im = _fmt_q(s.im) + "i"
    if not s.re:
        return im
    sign = "-" if s.im < 0 else "+"
    return f"{_fmt_q(s.re)}{sign}{_fmt_q(abs(s.im))}i"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, complex):
        raise TypeError("floating point complex values are not exact")
    if isinstance(x, float):
        raise TypeError("floats are not exact scalars")
    if isinstance(x, str):
        from .script import parse_scalar

        return parse_scalar(x)
    return Scalar._make(_q(x), _Q0)


# functional aliases
def add(a, b) -> Scalar:
    return as_scalar(a) + as_scalar(b)


def mul(a, b) -> Scalar:
    return as_scalar(a) * as_scalar(b)


def neg(a) -> Scalar:
    return -as_scalar(a)


def inv(a) -> Scalar:
    return as_scalar(a).inverse()


def cmp(a, b) -> int:
    """-1, 0 or 1 under the lexicographic (re, im) order."""
    a, b = as_scalar(a), as_scalar(b)
    ka, kb = a.sort_key(), b.sort_key()
    return (ka > kb) - (ka < kb)
