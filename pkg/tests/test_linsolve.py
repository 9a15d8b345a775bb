from hypothesis import given, strategies as st

from virbialg.linsolve import rank, solve
from virbialg.scalars import ONE, ZERO, Scalar

from conftest import scalars


def test_unique_solution():
    # x + y = 3, x - y = 1
    res = solve([{"x": ONE, "y": ONE}, {"x": ONE, "y": -ONE}], [Scalar(3), Scalar(1)])
    assert res.consistent and res.nullity == 0
    assert res.solution == {"x": 2, "y": 1}


def test_inconsistent_system():
    res = solve([{"x": ONE}, {"x": Scalar(2)}], [ONE, ONE])
    assert not res.consistent
    assert res.solution is None
    assert res.rank == 1 and res.rank_augmented == 2


def test_free_variables_default_to_zero():
    res = solve([{"x": ONE, "y": ONE}], [Scalar(4)], columns=["x", "y", "z"])
    assert res.consistent and res.nullity == 2
    sol = res.solution
    assert sol.get("x", 0) + sol.get("y", 0) == 4


def test_gaussian_coefficients():
    i = Scalar(0, 1)
    res = solve([{"x": i}], [ONE])
    assert res.solution["x"] == Scalar(0, -1)


def test_rank_of_dependent_rows():
    assert rank([{"a": ONE, "b": ONE}, {"a": Scalar(2), "b": Scalar(2)}, {"c": ONE}]) == 2
    assert rank([]) == 0


@given(st.lists(st.lists(scalars(), min_size=3, max_size=3), min_size=1, max_size=5), st.lists(scalars(), min_size=3, max_size=3))
def test_solution_satisfies_consistent_systems(matrix, x):
    rows = [{j: c for j, c in enumerate(row) if c} for row in matrix]
    rhs = [sum((c * x[j] for j, c in r.items()), ZERO) for r in rows]
    res = solve(rows, rhs, columns=range(3))
    assert res.consistent
    sol = res.solution
    for r, b in zip(rows, rhs):
        assert sum((c * sol.get(j, ZERO) for j, c in r.items()), ZERO) == b
