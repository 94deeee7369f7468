import pytest

from k4verma import conformal, contact
from k4verma.conformal import ConformalElement, lambda_bracket, n_product
from k4verma.scalars import gq

GENS = conformal.generators()


def test_generator_count():
    assert len(GENS) == 16


def test_bracket_of_units():
    # [1 lambda 1] = 2 d 1 + 4 lambda 1 in this normalisation
    one = ConformalElement.xi()
    br = lambda_bracket(one, one)
    assert br[0] == one.d() * -2
    assert br[1] == one * -4


def test_sesquilinearity():
    a, b = ConformalElement.xi(1), ConformalElement.xi(2, 3)
    # [d a lambda b] = -lambda [a lambda b]
    lhs = lambda_bracket(a.d(), b)
    rhs = {k + 1: v * -1 for k, v in lambda_bracket(a, b).items()}
    assert lhs == rhs


@pytest.mark.parametrize("a", GENS, ids=str)
def test_derivation_and_skew_symmetry(a):
    for b in GENS:
        assert conformal.check_derivation_axiom(a, b)
        assert conformal.check_skew_symmetry(a, b)


def test_jacobi_all_generator_triples():
    bad = [(a, b, c) for a in GENS for b in GENS for c in GENS if not conformal.check_jacobi(a, b, c)]
    assert bad == []


def test_jacobi_on_a_mixed_triple():
    a, b, c = ConformalElement.xi(1), ConformalElement.xi(2), ConformalElement.xi(1, 2)
    assert n_product(a, b, 0) or n_product(a, b, 1)
    assert conformal.check_jacobi(a, b, c)


def test_modes_reproduce_the_contact_bracket():
    for a in GENS:
        for b in GENS:
            (_, I), (_, J) = next(iter(a.terms)), next(iter(b.terms))
            for m in range(3):
                for k in range(3):
                    lhs = conformal.to_contact(conformal.annihilation_bracket(a, m, b, k))
                    full = contact.contact_bracket(contact.xi(*I, tpow=m), contact.xi(*J, tpow=k))
                    expected = contact.SuperElement({t: c for t, c in full.terms.items() if not t.central})
                    assert lhs == expected, (I, m, J, k)


def test_parity():
    assert ConformalElement.xi(1, 2, 3).parity() == 1
    with pytest.raises(ValueError):
        (ConformalElement.xi(1) + ConformalElement.xi(1, 2)).parity()
    assert (ConformalElement.xi(1) * gq(0)).terms == {}
