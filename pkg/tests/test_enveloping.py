import itertools

import sympy
from hypothesis import given
from hypothesis import strategies as st

from k4verma import contact
from k4verma import enveloping as env
from k4verma.enveloping import UEnvElement, theta, w
from k4verma.scalars import ONE, gq

NAMES = env.W_NAMES


def test_graded_dimensions_match_generating_function():
    s = sympy.symbols("s")
    series = sympy.series((1 + s) ** 4 / (1 - s**2), s, 0, 9).removeO()
    expected = [int(series.coeff(s, d)) for d in range(9)]
    assert [env.graded_dimension(d) for d in range(9)] == expected
    assert expected[:6] == [1, 4, 7, 8, 8, 8]


def test_anticommutators():
    for a, b in itertools.combinations_with_replacement(NAMES, 2):
        anti = w(a) * w(b) + w(b) * w(a)
        if {a, b} == {"w11", "w22"}:
            assert anti == theta() * 4
        elif {a, b} == {"w12", "w21"}:
            assert anti == theta() * -4
        else:
            assert not anti


def test_graded_flag_drops_theta():
    u = UEnvElement.from_word("w22 w11", graded=True)
    assert u == UEnvElement.from_word("w11 w22", graded=True) * -1


words = st.lists(st.sampled_from(NAMES + ("Th",)), max_size=4)


@given(words, words, words)
def test_associativity(a, b, c):
    A, B, C = (UEnvElement.from_word(x) for x in (a, b, c))
    assert (A * B) * C == A * (B * C)


@given(words)
def test_word_equals_product_of_letters(word):
    prod = UEnvElement.one()
    for letter in word:
        prod = prod * (theta() if letter == "Th" else w(letter))
    assert prod == UEnvElement.from_word(word)


@given(st.lists(st.integers(1, 4), max_size=4), st.integers(0, 2))
def test_eta_round_trip(word, tp):
    u = env.eta_to_w(tuple(word), tp)
    assert env.eta_conversion(env.w_to_eta(u), "to_w") == u


def test_eta_squares_to_theta():
    for i in range(1, 5):
        assert env.eta_to_w((i, i)) == theta()


def test_embedding_respects_the_bracket():
    # for x, y in g_-1: x y + y x equals the image of [x, y]
    gens = contact.basis_elements(-1)
    for x in gens:
        for y in gens:
            X, Y = env.from_negative(x), env.from_negative(y)
            assert X * Y + Y * X == env.from_negative(contact.contact_bracket(x, y))


def test_constant_function_is_minus_two_theta():
    one = contact.SuperElement({contact.ContactMonomial(0, ()): ONE})
    assert env.from_negative(one) == theta() * -2


def test_parse_pbw():
    assert str(env.parse_pbw("Th^2 w11 w12")) == "Th^2 w11 w12"
    assert env.parse_pbw("1") == env.ONE_MONO
    assert UEnvElement.from_word("Th w21") == theta() * w("w21") * gq(1)
