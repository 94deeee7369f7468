import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k4verma import contact
from k4verma.verma import (
    QUADRANTS,
    SIGNS,
    ModuleSpec,
    act,
    graded_basis,
    lie_action_failures,
    vector,
)


@pytest.mark.parametrize(
    "spec,d,size",
    [(ModuleSpec("A", 0, 0), 0, 1), (ModuleSpec("A", 1, 1), 1, 16), (ModuleSpec("C", 0, 0), 2, 7)],
)
def test_basis_sizes(spec, d, size):
    assert len(graded_basis(spec, d)) == size


def test_weights_of_named_nodes():
    assert ModuleSpec("C", -1, -1).weight == (1, 1, 3, 0)
    assert ModuleSpec("C", 0, 0).weight == (0, 0, 2, 0)
    assert ModuleSpec("A", 1, 1).weight == (1, 1, -1, 0)
    assert ModuleSpec.general(1, 2, Fraction(1, 3), 5).weight == (1, 2, Fraction(1, 3), 5)


def test_parse_and_quadrant_checks():
    assert ModuleSpec.parse("d:2,-1") == ModuleSpec("D", 2, -1)
    with pytest.raises(ValueError):
        ModuleSpec.parse("A:-1,0")
    with pytest.raises(ValueError):
        ModuleSpec.parse("A1,0")


def test_g0_acts_on_the_highest_vector():
    spec = ModuleSpec("A", 2, 1)
    v = vector(spec, (1, "", spec.highest_monomial()))
    hx, hy = contact.named_element("hx"), contact.named_element("hy")
    assert act(hx, v) == v * 2
    assert act(hy, v) == v * 1
    assert not act(contact.named_element("ex"), v)
    assert act(contact.named_element("t"), v) == v * spec.weight[2]


specs = st.sampled_from(QUADRANTS).flatmap(
    lambda q: st.tuples(st.integers(0, 2), st.integers(0, 2)).map(
        lambda ab: ModuleSpec(q, SIGNS[q][0] * ab[0], SIGNS[q][1] * ab[1])
    )
)


@given(specs, st.integers(0, 10**6))
def test_action_is_a_lie_action(spec, seed):
    assert lie_action_failures(spec, random.Random(seed), trials=4) == []


def test_action_on_a_shifted_module():
    spec = ModuleSpec.general(1, 0, Fraction(1, 3), Fraction(2, 5))
    assert lie_action_failures(spec, random.Random(7), trials=20) == []
