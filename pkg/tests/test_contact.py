import pytest

from k4verma import contact
from k4verma.contact import (
    CENTRAL,
    ContactMonomial,
    SuperElement,
    contact_bracket,
    named_element,
    xi,
)
from k4verma.scalars import gq

ONE_F = SuperElement({ContactMonomial(0, ()): gq(1)})


def br(a, b):
    return contact_bracket(named_element(a) if isinstance(a, str) else a, named_element(b) if isinstance(b, str) else b)


def test_basis_sizes():
    assert [len(contact.basis(d)) for d in range(-2, 4)] == [1, 4, 8, 8, 8, 8]
    assert CENTRAL in contact.basis(0)


def test_structure_constants():
    for i in contact.FULL:
        assert contact_bracket(xi(i), xi(i)) == ONE_F * -1
    assert contact_bracket(ONE_F, xi(1, 2, 3, 4)) == SuperElement.central(gq(-2))


def test_cocycle_values():
    assert contact.psi(ContactMonomial(0, (1,)), ContactMonomial(0, (2, 3, 4))) == gq(-1)
    assert contact.psi(ContactMonomial(0, (2,)), ContactMonomial(0, (1, 3, 4))) == gq(1)
    assert contact.psi(ContactMonomial(1, ()), ContactMonomial(0, (1, 2, 3, 4))) == gq(0)


def test_super_skew_symmetry_and_jacobi():
    assert contact.skew_symmetry_failures() == []
    assert contact.jacobi_failures() == []


def test_cocycle_identity():
    assert contact.cocycle_failures(4) == []


@pytest.mark.parametrize("x", ["x", "y"])
def test_sl2_relations(x):
    e, f, h = f"e{x}", f"f{x}", f"h{x}"
    assert br(e, f) == named_element(h)
    assert br(h, e) == named_element(e) * 2
    assert br(h, f) == named_element(f) * -2


def test_two_sl2_commute():
    for a in ("ex", "fx", "hx"):
        for b in ("ey", "fy", "hy"):
            assert not br(a, b)


def test_g0_coordinates_round_trip():
    g = named_element("ex") * 3 + named_element("hy") - named_element("t") + named_element("C") * gq(0, 2)
    coords = contact.g0_coordinates(g)
    assert coords == {"ex": gq(3), "hy": gq(1), "t": gq(-1), "C": gq(0, 2)}
    with pytest.raises(ValueError):
        contact.g0_coordinates(xi(1))


def test_grading_and_parity():
    assert contact.grading_and_parity(xi(1, 2, 3)) == (1, "odd")
    assert contact.grading_and_parity(named_element("t")) == (0, "even")
    with pytest.raises(ValueError):
        contact.grading_and_parity(xi(1) + xi(1, 2))


def test_parse():
    assert contact.parse_monomial("t^2 xi{1,3}") == xi(1, 3, tpow=2)
    assert contact.parse_monomial("xi{2,1}") == xi(1, 2) * -1
    assert contact.parse_element("(1/2)*t + (-i)*xi{1,2}") == named_element("t") * gq("1/2") + xi(1, 2) * gq(0, -1)
    with pytest.raises(ValueError):
        contact.parse_monomial("xi{5}")
    with pytest.raises(KeyError):
        named_element("nope")
