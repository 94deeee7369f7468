from fractions import Fraction

import pytest
import sympy

from k4verma.characters import (
    Quotient,
    character_series,
    size_formula,
    size_from_coeffs,
    size_from_series,
    type_a_closed_form,
)
from k4verma.verma import SIGNS, ModuleSpec


def irreducible(q, m, n):
    sx, sy = SIGNS[q]
    return Quotient.irreducible(ModuleSpec(q, sx * m, sy * n))


def test_trivial_verma_character():
    ch = character_series(ModuleSpec("A", 0, 0), 5)
    assert ch.coeffs == (1, 4, 7, 8, 8, 8)
    assert ch.leading_exponent == 0
    assert ch.rows()[:2] == ["0: 1", "1: 4"]


def test_trivial_quotient_is_one_dimensional():
    assert character_series(irreducible("A", 0, 0), 6).coeffs == (1, 0, 0, 0, 0, 0, 0)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (2, 1)])
def test_verma_leading_coefficient(m, n):
    spec = ModuleSpec.general(m, n, Fraction(1, 2), 3)
    ch = character_series(spec, 0)
    assert ch.coeffs == ((m + 1) * (n + 1),)
    assert ch.leading_exponent == Fraction(-1, 2)


@pytest.mark.parametrize("q,m,n,size", [("A", 1, 1, 4), ("C", 0, 0, 4), ("A", 0, 0, 0)])
def test_size_formula_values(q, m, n, size):
    assert size_formula(q, m, n) == size


@pytest.mark.parametrize("q", "ABCD")
@pytest.mark.parametrize("m", range(3))
@pytest.mark.parametrize("n", range(3))
def test_size_oracle_matches_formula(q, m, n):
    report = size_from_series(irreducible(q, m, n), 12)
    assert report.status == "stabilized"
    assert report.size == size_formula(q, m, n)


def test_verma_size_is_four_times_dim():
    for spec in (ModuleSpec("C", 0, 0), ModuleSpec("A", 2, 1), ModuleSpec("D", 1, -2)):
        assert size_from_series(spec, 12).size == 4 * spec.dim()


def test_named_sizes():
    assert size_from_series(irreducible("A", 1, 1), 12).size == 4
    assert size_from_series(irreducible("A", 0, 0), 12).size == 0
    assert size_from_series(Quotient(ModuleSpec("C", 0, 0)), 12).size == 4


def test_short_window_is_inconclusive():
    report = size_from_series(ModuleSpec("A", 0, 0), 3)
    assert report.size is None and report.status == "not stabilized"
    assert size_from_coeffs([1, 2, 3, 4, 5, 6, 7, 8]).size is None


@pytest.mark.parametrize("m", range(3))
@pytest.mark.parametrize("n", range(3))
def test_type_a_closed_form(m, n):
    s = sympy.symbols("s")
    if (m, n) == (0, 0):
        expected = [1] + [0] * 8
    else:
        f = (1 + s) ** 4 / (1 - s**2) * (2 / (1 + s) ** 3 + (m + n - 1) / (1 + s) ** 2 + m * n / (1 + s))
        poly = sympy.series(f, s, 0, 9).removeO()
        expected = [int(poly.coeff(s, d)) for d in range(9)]
    computed = character_series(irreducible("A", m, n), 8)
    assert list(computed.coeffs) == expected
    assert computed.leading_exponent == Fraction(m + n, 2)
    assert type_a_closed_form(m, n, 8) == computed
