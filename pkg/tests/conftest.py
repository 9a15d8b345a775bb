import os
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from virbialg.algebra import D1, D2, LieElt, Lsym
from virbialg.lattice import Degree
from virbialg.scalars import Scalar
from virbialg.tensor import Tensor2, Tensor3

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.large_base_example],
)
settings.register_profile(
    "ci",
    max_examples=300,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.large_base_example],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_q = st.fractions(min_value=-6, max_value=6, max_denominator=5)
ints = st.integers(-5, 5)


@st.composite
def scalars(draw, gaussian=True):
    re = draw(small_q)
    im = draw(small_q) if gaussian else Fraction(0)
    return Scalar(re, im)


nonzero_scalars = scalars().filter(bool)


def degrees(nonzero=True, gaussian=False):
    coord = st.builds(Scalar, ints, ints) if gaussian else ints
    d = st.builds(Degree, coord, coord)
    return d.filter(bool) if nonzero else d


@st.composite
def syms(draw, gaussian=False):
    if draw(st.integers(0, 4)) == 0:
        return draw(st.sampled_from([D1, D2]))
    return Lsym(draw(degrees(gaussian=gaussian)))


@st.composite
def lie_elts(draw, max_terms=4, gaussian=False):
    n = draw(st.integers(0, max_terms))
    return LieElt([(draw(syms(gaussian)), draw(nonzero_scalars)) for _ in range(n)])


@st.composite
def tensor2s(draw, max_terms=4):
    n = draw(st.integers(0, max_terms))
    return Tensor2([((draw(syms()), draw(syms())), draw(nonzero_scalars)) for _ in range(n)])


@st.composite
def tensor3s(draw, max_terms=3):
    n = draw(st.integers(0, max_terms))
    return Tensor3([((draw(syms()), draw(syms()), draw(syms())), draw(nonzero_scalars)) for _ in range(n)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
