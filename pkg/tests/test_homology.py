import pytest

from k4verma import homology
from k4verma.enveloping import theta
from k4verma.homology import (
    ComplexNode,
    bicomplex_failures,
    expected_gr_dim,
    expected_total_dim,
    gr_node_homology,
    homology_classes,
    homology_dims,
    label_range,
    module_or_none,
    nodes_in_range,
)
from k4verma.morphisms import apply_nabla, make_tag
from k4verma.verma import ModuleSpec, left_multiply, vector


def test_exceptional_nodes():
    a00 = homology_classes(ComplexNode.at(ModuleSpec("A", 0, 0)), 8)
    c11 = homology_classes(ComplexNode.at(ModuleSpec("C", -1, -1)), 8)
    assert [(c.degree, c.weight, c.t_eigenvalue, c.dim) for c in a00] == [(0, (0, 0), 0, 1)]
    assert [(c.degree, c.weight, c.t_eigenvalue, c.dim) for c in c11] == [(3, (0, 0), 0, 1)]


@pytest.mark.parametrize("spec", nodes_in_range(3), ids=str)
def test_exactness_window(spec):
    dims = homology_dims(ComplexNode.at(spec), 6)
    if spec in homology.EXCEPTIONAL_NODES:
        assert sum(dims.values()) == 1
    else:
        assert not any(dims.values())


def test_node_validation():
    with pytest.raises(ValueError):
        ComplexNode(ModuleSpec("A", 0, 0), outgoing=make_tag("nabla", ModuleSpec("A", 1, 1)))


def test_window_override(monkeypatch):
    monkeypatch.setenv("K4VERMA_WINDOW", "4")
    assert homology.default_window() == 4
    monkeypatch.delenv("K4VERMA_WINDOW")
    assert homology.default_window() == homology.DEFAULT_WINDOW


def test_distinguished_vectors():
    z, k, s = homology.vector_z(), homology.vector_k(), homology.vector_s()
    assert not apply_nabla(z)
    assert not homology.in_image(make_tag("nabla", ModuleSpec("C", 0, 0)), z)
    assert apply_nabla(k) == left_multiply(theta(), z)
    assert apply_nabla(s) == vector(ModuleSpec("A", 0, 0), (8, "Th", (0, 0, 0, 0)))


def test_named_graded_values():
    assert gr_node_homology("A", 0, 3, (1, 3)) == 2
    assert gr_node_homology("A", 1, 0, (0, 0), modified=True) == 2
    assert gr_node_homology("C", -1, 0, None, modified=True) == 4


def _tables():
    for q in "ACD":
        for modified in (False, True):
            for a in range(-1, 5):
                for b in range(-1, 5):
                    yield q, modified, a, b


@pytest.mark.parametrize("q,modified,a,b", list(_tables()))
def test_graded_tables(q, modified, a, b):
    for m in range(-4, 5):
        for n in range(-4, 5):
            if module_or_none(q, m, n) is None:
                continue
            e = expected_gr_dim(q, a, b, m, n, modified)
            if e is not None:
                assert gr_node_homology(q, m, n, (a, b), modified) == e, (m, n)


@pytest.mark.parametrize("q", "ACD")
def test_totals_over_labels(q):
    for m in range(-4, 5):
        for n in range(-4, 5):
            if module_or_none(q, m, n) is not None:
                assert gr_node_homology(q, m, n, None, True) == expected_total_dim(q, m, n)


def test_sum_of_labels_on_the_axis():
    sums = [sum(gr_node_homology("A", 0, n, ab, True) for ab in label_range("A", 0, n)) for n in range(5)]
    assert sums == [1, 4, 8, 12, 16]


@pytest.mark.parametrize("a,b", [(a, b) for a in range(0, 4) for b in range(0, 3)])
def test_s_ladder(a, b):
    table = homology.s_ladder(a, b, 5)
    assert table == {k: homology.expected_s(k, b) for k in range(a + 1)}


@pytest.mark.parametrize("a,b", [(a, b) for a in range(-1, 3) for b in range(0, 2)])
def test_t_ladder(a, b):
    table = homology.t_ladder(a, b, 5)
    assert table == {k: homology.expected_t(k, b) for k in range(a, 3)}


@pytest.mark.parametrize("q", "ABCD")
def test_bicomplex_identities(q):
    from k4verma.verma import SIGNS

    sx, sy = SIGNS[q]
    for a in range(4):
        for b in range(4):
            assert bicomplex_failures(q, sx * a, sy * b) == []
