"""U(g_-) in the normal-ordered basis Theta^k w11^e1 w21^e2 w12^e3 w22^e4.

The negative part g_- = g_{-2} + g_{-1} has odd generators eta_i = xi_i and
the even central element Theta = -1/2 in g_{-2}.  In the w basis

    w11 = eta2 + i eta1,  w22 = eta2 - i eta1,
    w12 = -eta4 + i eta3, w21 = eta4 + i eta3,

the only nonzero anticommutators are {w11, w22} = 4 Theta and
{w12, w21} = -4 Theta.  Setting ``graded=True`` drops these Theta terms,
which gives the associated graded algebra S(g_{-2}) (x) Lambda(g_{-1}).
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from . import linalg
from .contact import ContactMonomial, SuperElement
from .scalars import ONE, GaussianRational, gq

W_NAMES = ("w11", "w21", "w12", "w22")
W_INDEX = {n: k for k, n in enumerate(W_NAMES)}

# {w_a, w_b} in units of Theta, for a < b in the fixed order
_ANTICOMM = {(0, 3): gq(4), (1, 2): gq(-4)}


class PBWMonomial(NamedTuple):
    theta_pow: int = 0
    flags: tuple = (0, 0, 0, 0)

    @property
    def degree(self) -> int:
        return 2 * self.theta_pow + sum(self.flags)

    @property
    def parity(self) -> int:
        return sum(self.flags) % 2

    @property
    def word(self) -> tuple:
        return tuple(k for k in range(4) if self.flags[k])

    def __str__(self):
        parts = []
        if self.theta_pow:
            parts.append(f"Th^{self.theta_pow}")
        parts += [W_NAMES[k] for k in self.word]
        return " ".join(parts) if parts else "1"


ONE_MONO = PBWMonomial()


def _flags(word) -> tuple:
    f = [0, 0, 0, 0]
    for k in word:
        f[k] = 1
    return tuple(f)


@lru_cache(maxsize=None)
def _normal_order(word: tuple, graded: bool) -> tuple:
    """Normal form of a word in w indices as ((theta_pow, sorted word), coef) pairs."""
    for pos in range(len(word) - 1):
        a, b = word[pos], word[pos + 1]
        if a < b:
            continue
        if a == b:
            return ()
        out: dict = {}
        swapped = word[:pos] + (b, a) + word[pos + 2 :]
        for key, c in _normal_order(swapped, graded):
            linalg.axpy(out, -ONE, {key: c})
        ac = None if graded else _ANTICOMM.get((b, a))
        if ac is not None:
            rest = word[:pos] + word[pos + 2 :]
            for (tp, w), c in _normal_order(rest, graded):
                linalg.axpy(out, ac, {(tp + 1, w): c})
        return tuple(out.items())
    return (((0, word), ONE),)


class UEnvElement:
    __slots__ = ("terms", "graded")

    def __init__(self, terms=None, graded: bool = False):
        self.terms = {k: c for k, c in (terms or {}).items() if c}
        self.graded = graded

    @classmethod
    def _wrap(cls, terms, graded=False):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.graded = graded
        return obj

    @classmethod
    def from_word(cls, names, theta_pow=0, coef=ONE, graded=False):
        """Product of named generators (w11, ..., 'Th') in the given order."""
        word = []
        for n in names.split() if isinstance(names, str) else names:
            if n in ("Th", "Theta"):
                theta_pow += 1
            else:
                word.append(W_INDEX[n])
        out: dict = {}
        for (tp, w), c in _normal_order(tuple(word), graded):
            linalg.axpy(out, coef * c, {PBWMonomial(theta_pow + tp, _flags(w)): ONE})
        return cls._wrap(out, graded)

    @classmethod
    def one(cls, graded=False):
        return cls._wrap({ONE_MONO: ONE}, graded)

    def __add__(self, other):
        out = dict(self.terms)
        linalg.axpy(out, ONE, other.terms)
        return UEnvElement._wrap(out, self.graded)

    def __sub__(self, other):
        out = dict(self.terms)
        linalg.axpy(out, -ONE, other.terms)
        return UEnvElement._wrap(out, self.graded)

    def __neg__(self):
        return UEnvElement._wrap({k: -c for k, c in self.terms.items()}, self.graded)

    def __mul__(self, other):
        if isinstance(other, UEnvElement):
            return pbw_multiply(self, other)
        s = other if isinstance(other, GaussianRational) else gq(other)
        return UEnvElement._wrap(linalg.scale(self.terms, s), self.graded)

    def __rmul__(self, scalar):
        s = scalar if isinstance(scalar, GaussianRational) else gq(scalar)
        return UEnvElement._wrap(linalg.scale(self.terms, s), self.graded)

    def __eq__(self, other):
        return isinstance(other, UEnvElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in sorted(self.terms.items(), key=_pbw_key))

    __repr__ = __str__


def _pbw_key(item):
    m = item[0]
    return (m.degree, m.theta_pow, tuple(-f for f in m.flags))


def multiply_monomials(u: PBWMonomial, v: PBWMonomial, graded=False) -> tuple:
    """Normal form of u*v as ((PBWMonomial, coef), ...)."""
    return _mono_mult(u, v, graded)


@lru_cache(maxsize=None)
def _mono_mult(u, v, graded):
    out = []
    for (tp, w), c in _normal_order(u.word + v.word, graded):
        out.append((PBWMonomial(u.theta_pow + v.theta_pow + tp, _flags(w)), c))
    return tuple(out)


def pbw_multiply(u: UEnvElement, v: UEnvElement) -> UEnvElement:
    graded = u.graded or v.graded
    out: dict = {}
    for mu, cu in u.terms.items():
        for mv, cv in v.terms.items():
            for m, c in _mono_mult(mu, mv, graded):
                linalg.axpy(out, cu * cv * c, {m: ONE})
    return UEnvElement._wrap(out, graded)


def basis(degree: int) -> list[PBWMonomial]:
    """Deterministic basis of U(g_-) in the given degree."""
    out = []
    for k in range(degree // 2, -1, -1):
        j = degree - 2 * k
        if j > 4:
            continue
        for bits in range(16):
            flags = tuple((bits >> (3 - s)) & 1 for s in range(4))
            if sum(flags) == j:
                out.append(PBWMonomial(k, flags))
    out.sort(key=lambda m: (m.theta_pow, tuple(-f for f in m.flags)))
    return out


def graded_dimension(degree: int) -> int:
    return len(basis(degree))


# eta basis -------------------------------------------------------------------

_i = gq(0, 1)
_half = gq("1/2")

# eta_i in terms of the w generators
ETA_IN_W = {
    1: {0: -_i * _half, 3: _i * _half},
    2: {0: _half, 3: _half},
    3: {1: -_i * _half, 2: -_i * _half},
    4: {1: _half, 2: -_half},
}

# w generators in terms of eta_i
W_IN_ETA = {
    0: {2: ONE, 1: _i},
    3: {2: ONE, 1: -_i},
    2: {4: -ONE, 3: _i},
    1: {4: ONE, 3: _i},
}


def eta_to_w(word, theta_pow: int = 0, graded: bool = False) -> UEnvElement:
    """Image of Theta^k eta_{i1} ... eta_{ij} in the w normal form."""
    acc = UEnvElement._wrap({PBWMonomial(theta_pow, (0, 0, 0, 0)): ONE}, graded)
    for i in word:
        gen = UEnvElement._wrap(
            {PBWMonomial(0, _flags((k,))): c for k, c in ETA_IN_W[i].items()}, graded
        )
        acc = pbw_multiply(acc, gen)
    return acc


@lru_cache(maxsize=None)
def _eta_normal(word: tuple) -> tuple:
    """Normal form of an eta word: sorted indices, eta_i^2 = Theta."""
    for pos in range(len(word) - 1):
        a, b = word[pos], word[pos + 1]
        if a < b:
            continue
        if a == b:
            rest = word[:pos] + word[pos + 2 :]
            return tuple(((tp + 1, w), c) for (tp, w), c in _eta_normal(rest))
        swapped = word[:pos] + (b, a) + word[pos + 2 :]
        return tuple((k, -c) for k, c in _eta_normal(swapped))
    return (((0, word), ONE),)


def w_to_eta(u: UEnvElement) -> dict:
    """Express u in the eta basis: {(theta_pow, increasing eta tuple): coef}."""
    out: dict = {}
    for m, c in u.terms.items():
        partial = {(m.theta_pow, ()): c}
        for k in m.word:
            nxt: dict = {}
            for (tp, w), cw in partial.items():
                for i, ci in W_IN_ETA[k].items():
                    for (tp2, w2), cn in _eta_normal(w + (i,)):
                        linalg.axpy(nxt, cw * ci * cn, {(tp + tp2, w2): ONE})
            partial = nxt
        linalg.axpy(out, ONE, partial)
    return out


def eta_conversion(x, direction: str):
    """to_w: x is {(theta_pow, eta tuple): coef}; to_eta: x is a UEnvElement."""
    if direction == "to_eta":
        return w_to_eta(x)
    if direction == "to_w":
        out = UEnvElement()
        for (tp, word), c in x.items():
            out = out + eta_to_w(word, tp) * c
        return out
    raise ValueError(f"unknown direction {direction!r}")


# Embedding of g_- ---------------------------------------------------------------

_THETA_PER_ONE = gq(-2)  # the contact function 1 equals -2 Theta


@lru_cache(maxsize=None)
def _negative_monomial(m: ContactMonomial, graded: bool) -> tuple:
    if m.central or m.degree >= 0:
        raise ValueError(f"{m} does not lie in g_-")
    if m.degree == -2:
        return ((PBWMonomial(1, (0, 0, 0, 0)), _THETA_PER_ONE),)
    (i,) = m.xi
    return tuple((PBWMonomial(0, _flags((k,))), c) for k, c in ETA_IN_W[i].items())


def from_negative(x: SuperElement, graded: bool = False) -> UEnvElement:
    """Image in U(g_-) of an element of g_{-1} + g_{-2}."""
    out: dict = {}
    for m, c in x.terms.items():
        for pm, pc in _negative_monomial(m, graded):
            linalg.axpy(out, c * pc, {pm: ONE})
    return UEnvElement._wrap(out, graded)


def w(name: str, graded: bool = False) -> UEnvElement:
    return UEnvElement.from_word([name], graded=graded)


def theta(graded: bool = False) -> UEnvElement:
    return UEnvElement._wrap({PBWMonomial(1, (0, 0, 0, 0)): ONE}, graded)


def parse_pbw(text: str) -> PBWMonomial:
    """Parse ``Th^k w11 w21 ...`` (canonical order required)."""
    tp = 0
    word = []
    for tok in text.split():
        if tok.startswith("Th"):
            tp += int(tok[3:]) if tok.startswith("Th^") else 1
        elif tok in W_INDEX:
            word.append(W_INDEX[tok])
        elif tok != "1":
            raise ValueError(f"unknown token {tok!r}")
    if list(word) != sorted(set(word)):
        raise ValueError(f"{text!r} is not in canonical order")
    return PBWMonomial(tp, _flags(word))
