import pytest

from k4verma import morphisms
from k4verma.homology import composition_failures, nodes_in_range
from k4verma.morphisms import (
    apply_nabla,
    apply_nabla3,
    classified_vector,
    family_instances,
    incoming,
    is_singular,
    make_tag,
    outgoing,
    singular_space,
)
from k4verma.verma import ModuleSpec, vector

INSTANCES = family_instances(4)


def test_instance_count():
    assert len(INSTANCES) == 99


@pytest.mark.parametrize("fam,m,n", INSTANCES)
def test_classified_vectors_are_singular(fam, m, n):
    v = classified_vector(fam, m, n)
    assert is_singular(v, "highest_weight")
    assert is_singular(v, "full")


@pytest.mark.parametrize("fam,m,n", INSTANCES)
def test_search_recovers_classified_vectors(fam, m, n):
    v = classified_vector(fam, m, n)
    space = singular_space(v.module, v.degree(), "highest_weight")
    assert morphisms.in_span(v, space)


def test_no_degree_four_highest_weight_vectors():
    for spec in nodes_in_range(2):
        assert singular_space(spec, 4, "highest_weight") == []


def test_trivial_weight_module_of_t_eigenvalue_two_has_no_singular_vectors():
    spec = ModuleSpec("C", 0, 0)
    for d in (1, 2, 3):
        assert singular_space(spec, d, "full") == []


def test_degree_one_singular_vectors_of_trivial_module():
    # the four w generators applied to 1 (x) 1 are all singular
    assert len(singular_space(ModuleSpec("A", 0, 0), 1, "full")) == 4


def test_nabla_on_a_monomial():
    spec = ModuleSpec("A", 3, 2)
    v = vector(spec, (1, "", (3, 0, 2, 0)))
    assert apply_nabla(v) == classified_vector("1a", 2, 1) * 6


def test_cubic_morphisms_hit_the_degree_three_vectors():
    y1 = vector(ModuleSpec("A", 0, 1), (1, "", (0, 0, 1, 0)))
    x1 = vector(ModuleSpec("A", 1, 0), (1, "", (1, 0, 0, 0)))
    assert apply_nabla3(y1) == classified_vector("3a") * -1
    assert apply_nabla3(x1, "tilde") == classified_vector("3b") * -1


def test_arrow_layout_is_consistent():
    for spec in nodes_in_range(3):
        out, inc = outgoing(spec), incoming(spec)
        if out is not None:
            assert out.source == spec
        if inc is not None:
            assert inc.target == spec


def test_domain_validation():
    with pytest.raises(ValueError):
        make_tag("nabla3", ModuleSpec("A", 1, 1))
    with pytest.raises(ValueError):
        make_tag("nabla2", ModuleSpec("A", 1, 0))
    with pytest.raises(ValueError):
        make_tag("bogus", ModuleSpec("A", 1, 0))


def test_consecutive_arrows_compose_to_zero():
    assert composition_failures(3, 5) == []
