import sympy
from hypothesis import given
from hypothesis import strategies as st

from k4verma import linalg
from k4verma.scalars import GaussianRational, gq

small = st.integers(-3, 3)
entries = st.builds(GaussianRational, small, small)
matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
)


def rows_as_dicts(rows):
    return [{j: c for j, c in enumerate(row) if c} for row in rows]


def to_sympy(rows):
    return sympy.Matrix([[sympy.Rational(c.re) + sympy.I * sympy.Rational(c.im) for c in row] for row in rows])


@given(matrices)
def test_rank_agrees_with_sympy(rows):
    assert linalg.rank(rows_as_dicts(rows)) == to_sympy(rows).rank()


@given(matrices)
def test_kernel_vectors_are_relations(rows):
    vecs = rows_as_dicts(rows)
    kern = linalg.kernel(vecs)
    assert len(kern) == len(vecs) - linalg.rank(vecs)
    for rel in kern:
        total: dict = {}
        for j, c in rel.items():
            linalg.axpy(total, c, vecs[j])
        assert not total


@given(matrices, st.lists(entries, min_size=5, max_size=5))
def test_solve_is_consistent_with_span(rows, coefs):
    cols = rows_as_dicts(rows)
    rhs: dict = {}
    for c, v in zip(coefs, cols):
        linalg.axpy(rhs, c, v)
    sol = linalg.solve(cols, rhs)
    assert sol is not None
    back: dict = {}
    for j, c in sol.items():
        linalg.axpy(back, c, cols[j])
    assert back == rhs


def test_solve_reports_inconsistency():
    assert linalg.solve([{0: gq(1)}], {1: gq(1)}) is None
    assert not linalg.in_span({1: gq(1)}, [{0: gq(1)}])
