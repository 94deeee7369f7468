"""The Lie superalgebra g = K(1,4)_+ + C*C of contact functions t^m xi_I.

Functions in t and four odd variables xi_1..xi_4 carry the contact bracket,
and a one-dimensional central extension by the cocycle ``psi`` adds the even
central element C.  The grading is deg(t^m xi_I) = 2m + |I| - 2.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from . import linalg
from .scalars import ONE, ZERO, GaussianRational, gq

N_ODD = 4
FULL = (1, 2, 3, 4)


class ContactMonomial(NamedTuple):
    tpow: int = 0
    xi: tuple = ()
    central: bool = False

    @property
    def degree(self) -> int:
        if self.central:
            return 0
        return 2 * self.tpow + len(self.xi) - 2

    @property
    def parity(self) -> int:
        return len(self.xi) % 2

    def __str__(self):
        if self.central:
            return "C"
        parts = []
        if self.tpow:
            parts.append("t" if self.tpow == 1 else f"t^{self.tpow}")
        if self.xi:
            parts.append("xi{" + ",".join(map(str, self.xi)) + "}")
        return " ".join(parts) if parts else "1"


CENTRAL = ContactMonomial(0, (), True)


# Grassmann helpers --------------------------------------------------------


def xi_product(a: tuple, b: tuple):
    """xi_a * xi_b as (sign, sorted index tuple); sign 0 if they overlap."""
    if set(a) & set(b):
        return 0, ()
    inv = sum(1 for i in a for j in b if i > j)
    return (-1) ** inv, tuple(sorted(a + b))


def xi_derivative(i: int, a: tuple):
    """Left odd derivative d/dxi_i of xi_a as (sign, tuple)."""
    if i not in a:
        return 0, ()
    k = a.index(i)
    return (-1) ** k, a[:k] + a[k + 1 :]


# Elements -------------------------------------------------------------------


class SuperElement:
    """Finite Q(i)-combination of ContactMonomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in dict(terms).items():
                c = c if isinstance(c, GaussianRational) else gq(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def monomial(cls, tpow=0, xi=(), coef=ONE):
        sign = _sort_sign(tuple(xi))
        return cls({ContactMonomial(tpow, tuple(sorted(xi))): coef * sign})

    @classmethod
    def central(cls, coef=ONE):
        return cls({CENTRAL: coef})

    def __add__(self, other):
        out = dict(self.terms)
        linalg.axpy(out, ONE, other.terms)
        return SuperElement._wrap(out)

    def __sub__(self, other):
        out = dict(self.terms)
        linalg.axpy(out, -ONE, other.terms)
        return SuperElement._wrap(out)

    def __neg__(self):
        return SuperElement._wrap({m: -c for m, c in self.terms.items()})

    def __mul__(self, scalar):
        s = scalar if isinstance(scalar, GaussianRational) else gq(scalar)
        return SuperElement._wrap(linalg.scale(self.terms, s))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, GaussianRational)) and not other:
            return not self.terms
        return isinstance(other, SuperElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    @classmethod
    def _wrap(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    def component(self, degree: int) -> "SuperElement":
        return SuperElement._wrap({m: c for m, c in self.terms.items() if m.degree == degree})

    def degrees(self) -> set:
        return {m.degree for m in self.terms}

    def parity(self) -> int:
        ps = {m.parity for m in self.terms}
        if len(ps) > 1:
            raise ValueError("parity of an inhomogeneous element")
        return ps.pop() if ps else 0

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in sorted(self.terms.items(), key=_mono_key))

    __repr__ = __str__


def _sort_sign(xi: tuple) -> int:
    if len(set(xi)) != len(xi):
        return 0
    inv = sum(1 for a in range(len(xi)) for b in range(a + 1, len(xi)) if xi[a] > xi[b])
    return (-1) ** inv


def _mono_key(item):
    m = item[0]
    return (m.central, m.degree, m.tpow, len(m.xi), m.xi)


def xi(*idx, tpow=0) -> SuperElement:
    """t^tpow * xi_{idx} with the Koszul sign of the given order."""
    return SuperElement.monomial(tpow, idx)


def grading_and_parity(x: SuperElement):
    degs = x.degrees()
    if len(degs) != 1:
        raise ValueError("element is not homogeneous in degree")
    return degs.pop(), ("odd" if x.parity() else "even")


# Bracket --------------------------------------------------------------------


def _psi_table():
    table = {}
    table[((), FULL)] = gq(-2)
    for i in FULL:
        sign, comp = xi_derivative(i, FULL)
        # psi(xi_i, d_i xi_1234) = -1, and d_i xi_1234 = sign * xi_comp
        table[((i,), comp)] = gq(-sign)
    for (a, b), v in list(table.items()):
        pa, pb = len(a) % 2, len(b) % 2
        table[(b, a)] = -((-1) ** (pa * pb)) * v
    return table


_PSI = _psi_table()


def psi(f: ContactMonomial, g: ContactMonomial) -> GaussianRational:
    if f.central or g.central or f.tpow or g.tpow:
        return ZERO
    return _PSI.get((f.xi, g.xi), ZERO)


@lru_cache(maxsize=None)
def _bracket_monomials(f: ContactMonomial, g: ContactMonomial) -> tuple:
    if f.central or g.central:
        return ()
    out: dict = {}
    a, b = f.tpow, g.tpow
    nI, nJ = len(f.xi), len(g.xi)
    coef = (2 - nI) * b - a * (2 - nJ)
    if coef:
        sign, k = xi_product(f.xi, g.xi)
        if sign:
            linalg.axpy(out, ONE, {ContactMonomial(a + b - 1, k): gq(coef * sign)})
    pf = (-1) ** nI
    for i in FULL:
        s1, k1 = xi_derivative(i, f.xi)
        s2, k2 = xi_derivative(i, g.xi)
        if not (s1 and s2):
            continue
        s3, k = xi_product(k1, k2)
        if s3:
            linalg.axpy(out, ONE, {ContactMonomial(a + b, k): gq(pf * s1 * s2 * s3)})
    c = psi(f, g)
    if c:
        linalg.axpy(out, ONE, {CENTRAL: c})
    return tuple(out.items())


def contact_bracket(f: SuperElement, g: SuperElement) -> SuperElement:
    out: dict = {}
    for mf, cf in f.terms.items():
        for mg, cg in g.terms.items():
            for m, c in _bracket_monomials(mf, mg):
                linalg.axpy(out, ONE, {m: cf * cg * c})
    return SuperElement._wrap(out)


def basis(degree: int) -> list[ContactMonomial]:
    """Monomial basis of g_degree (C included in degree 0)."""
    out = []
    for k in range(0, N_ODD + 1):
        if (degree + 2 - k) % 2 or degree + 2 - k < 0:
            continue
        m = (degree + 2 - k) // 2
        for I in combinations(FULL, k):
            out.append(ContactMonomial(m, I))
    if degree == 0:
        out.append(CENTRAL)
    return out


def basis_elements(degree: int) -> list[SuperElement]:
    return [SuperElement({m: ONE}) for m in basis(degree)]


# Named elements ---------------------------------------------------------------

_i = gq(0, 1)
_half = gq("1/2")


def _named():
    one = SuperElement({ContactMonomial(0, ()): ONE})
    x = {}
    x["theta"] = one * gq("-1/2")
    x["t"] = SuperElement({ContactMonomial(1, ()): ONE})
    x["C"] = SuperElement.central()
    x["hx"] = xi(1, 2) * (-_i) + xi(3, 4) * _i
    x["hy"] = xi(1, 2) * (-_i) - xi(3, 4) * _i
    x["ex"] = (-xi(1, 3) - xi(2, 4) - xi(1, 4) * _i + xi(2, 3) * _i) * _half
    x["ey"] = (-xi(1, 3) + xi(2, 4) + xi(1, 4) * _i + xi(2, 3) * _i) * _half
    x["fx"] = (xi(1, 3) + xi(2, 4) - xi(1, 4) * _i + xi(2, 3) * _i) * _half
    x["fy"] = (xi(1, 3) - xi(2, 4) + xi(1, 4) * _i + xi(2, 3) * _i) * _half
    x["e1"] = -xi(1, 3) + xi(2, 3) * _i
    x["e2"] = -xi(2, 4) - xi(1, 4) * _i
    x["g1_lowest_even"] = xi(1, tpow=1) + xi(2, tpow=1) * _i
    x["g1_lowest_odd"] = xi(1, 3, 4) + xi(2, 3, 4) * _i
    return x


NAMED = _named()


def named_element(name: str) -> SuperElement:
    try:
        return NAMED[name]
    except KeyError:
        raise KeyError(f"unknown element name {name!r}") from None


# The degree-zero part in the sl2 + sl2 + <t, C> basis -------------------------

SL2_NAMES = ("ex", "fx", "hx", "ey", "fy", "hy")
G0_COORDS = SL2_NAMES + ("t", "C")


@lru_cache(maxsize=None)
def _g0_change_of_basis():
    cols = [NAMED[n].terms for n in G0_COORDS]
    e = linalg.Echelon()
    for j, c in enumerate(cols):
        if e.add(c, {j: ONE}) is not None:
            raise ArithmeticError("root vectors are linearly dependent")
    return cols


def g0_coordinates(g: SuperElement) -> dict:
    """Coordinates of g in (ex, fx, hx, ey, fy, hy, t, C)."""
    if any(d != 0 for d in g.degrees()):
        raise ValueError("element is not in g_0")
    sol = linalg.solve(_g0_change_of_basis(), g.terms)
    if sol is None:
        raise ValueError("element is not in the span of the g_0 basis")
    return {G0_COORDS[j]: c for j, c in sol.items()}


# Text grammar -----------------------------------------------------------------

_MONO = re.compile(r"^(?:t(?:\^(\d+))?)?\s*(?:xi\{([\d,\s]*)\})?$")


def parse_monomial(text: str) -> SuperElement:
    s = text.strip()
    if s == "C":
        return SuperElement.central()
    if s == "1":
        return SuperElement({ContactMonomial(0, ()): ONE})
    m = _MONO.match(s)
    if not m or not s:
        raise ValueError(f"cannot parse monomial {text!r}")
    has_t = s.startswith("t")
    tpow = int(m.group(1)) if m.group(1) else (1 if has_t else 0)
    idx = tuple(int(v) for v in m.group(2).split(",") if v.strip()) if m.group(2) else ()
    if any(i not in FULL for i in idx):
        raise ValueError(f"odd index out of range in {text!r}")
    return SuperElement.monomial(tpow, idx)


def parse_element(text: str) -> SuperElement:
    """Parse ``coeff * monomial + ...``; coefficients in parentheses."""
    out = SuperElement()
    for part in re.findall(r"\(([^)]*)\)\s*\*\s*([^+]+?)(?=\s*\+\s*\(|$)", text.strip()):
        out = out + parse_monomial(part[1]) * gq(part[0])
    return out


# Axiom checks -------------------------------------------------------------------


def _elem(m: ContactMonomial) -> SuperElement:
    return SuperElement._wrap({m: ONE})


def _psi_linear(f: SuperElement, g: SuperElement) -> GaussianRational:
    total = ZERO
    for mf, cf in f.terms.items():
        for mg, cg in g.terms.items():
            total = total + cf * cg * psi(mf, mg)
    return total


def skew_symmetry_failures(degrees=range(-2, 4)) -> list:
    """Pairs of basis monomials violating [a,b] = -(-1)^{|a||b|} [b,a]."""
    mons = [m for d in degrees for m in basis(d)]
    bad = []
    for a in mons:
        for b in mons:
            lhs = contact_bracket(_elem(a), _elem(b))
            rhs = contact_bracket(_elem(b), _elem(a)) * (-((-1) ** (a.parity * b.parity)))
            if lhs != rhs:
                bad.append((a, b))
    return bad


def jacobi_failures(degrees=range(-2, 4)) -> list:
    """Triples with [a,[b,c]] != [[a,b],c] + (-1)^{|a||b|} [b,[a,c]], central terms included."""
    mons = [m for d in degrees for m in basis(d)]
    brackets = {(a, b): contact_bracket(_elem(a), _elem(b)) for a in mons for b in mons}

    def br(x: SuperElement, c: ContactMonomial) -> SuperElement:
        out: dict = {}
        for m, k in x.terms.items():
            if m.central:
                continue
            val = brackets.get((m, c))
            if val is None:
                val = contact_bracket(_elem(m), _elem(c))
            linalg.axpy(out, k, val.terms)
        return SuperElement._wrap(out)

    def lbr(a: ContactMonomial, x: SuperElement) -> SuperElement:
        out: dict = {}
        for m, k in x.terms.items():
            if m.central:
                continue
            val = brackets.get((a, m))
            if val is None:
                val = contact_bracket(_elem(a), _elem(m))
            linalg.axpy(out, k, val.terms)
        return SuperElement._wrap(out)

    bad = []
    for a in mons:
        for b in mons:
            ab = brackets[(a, b)]
            sign = (-1) ** (a.parity * b.parity)
            for c in mons:
                lhs = lbr(a, brackets[(b, c)])
                rhs = br(ab, c) + lbr(b, brackets[(a, c)]) * sign
                if lhs != rhs:
                    bad.append((a, b, c))
    return bad


def cocycle_failures(max_degree: int = 4) -> list:
    """Triples of total degree 0 violating the 2-cocycle identity of psi."""
    degs = range(-2, max_degree + 1)
    mons = [m for d in degs for m in basis(d) if not m.central]
    bad = []
    for a in mons:
        for b in mons:
            for c in mons:
                if a.degree + b.degree + c.degree != 0:
                    continue
                A, B, Cm = _elem(a), _elem(b), _elem(c)
                sign = (-1) ** (a.parity * b.parity)
                val = (
                    _psi_linear(contact_bracket(A, B), Cm)
                    - _psi_linear(A, contact_bracket(B, Cm))
                    + _psi_linear(B, contact_bracket(A, Cm)) * sign
                )
                if val:
                    bad.append((a, b, c))
    return bad
