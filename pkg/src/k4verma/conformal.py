"""The conformal superalgebra K_4 = C[d] (x) Lambda(4) and its annihilation algebra.

Elements are combinations of ``d^k xi_I`` keyed by ``(k, I)``.  A lambda
bracket is a dict ``power of lambda -> element``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from . import linalg
from .contact import FULL, ContactMonomial, SuperElement, xi_derivative, xi_product
from .scalars import ONE, GaussianRational, gq


class ConformalElement:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: gq(c) if not isinstance(c, GaussianRational) else c
                      for k, c in (terms or {}).items()}
        self.terms = {k: c for k, c in self.terms.items() if c}

    @classmethod
    def xi(cls, *idx, dpow=0):
        return cls({(dpow, tuple(idx)): ONE})

    @classmethod
    def _wrap(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    def __add__(self, other):
        out = dict(self.terms)
        linalg.axpy(out, ONE, other.terms)
        return ConformalElement._wrap(out)

    def __sub__(self, other):
        out = dict(self.terms)
        linalg.axpy(out, -ONE, other.terms)
        return ConformalElement._wrap(out)

    def __mul__(self, scalar):
        s = scalar if isinstance(scalar, GaussianRational) else gq(scalar)
        return ConformalElement._wrap(linalg.scale(self.terms, s))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ConformalElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def parity(self) -> int:
        ps = {len(I) % 2 for _, I in self.terms}
        if len(ps) > 1:
            raise ValueError("parity of an inhomogeneous element")
        return ps.pop() if ps else 0

    def d(self, k: int = 1) -> "ConformalElement":
        """Apply the derivation d k times."""
        return ConformalElement._wrap({(p + k, I): c for (p, I), c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c})*" + (f"d^{p} " if p else "") + ("xi{" + ",".join(map(str, I)) + "}" if I else "1")
            for (p, I), c in sorted(self.terms.items())
        )

    __repr__ = __str__


def generators() -> list[ConformalElement]:
    """The 16 elements xi_I spanning Lambda(4) over C[d]."""
    return [ConformalElement.xi(*I) for k in range(5) for I in combinations(FULL, k)]


def _xi_bracket(I: tuple, J: tuple) -> dict:
    """[xi_I lambda xi_J] as {lambda power: {(dpow, K): coef}}."""
    out: dict = {}
    sign, K = xi_product(I, J)
    if sign:
        if len(I) != 2:
            out.setdefault(0, {})[(1, K)] = gq((len(I) - 2) * sign)
        if len(I) + len(J) != 4:
            out.setdefault(1, {})[(0, K)] = gq((len(I) + len(J) - 4) * sign)
    pf = (-1) ** len(I)
    for i in FULL:
        s1, k1 = xi_derivative(i, I)
        s2, k2 = xi_derivative(i, J)
        if s1 and s2:
            s3, K2 = xi_product(k1, k2)
            if s3:
                linalg.axpy(out.setdefault(0, {}), ONE, {(0, K2): gq(pf * s1 * s2 * s3)})
    return {p: v for p, v in out.items() if v}


@lru_cache(maxsize=None)
def _monomial_bracket(a: tuple, b: tuple) -> tuple:
    """Sesquilinear extension: [d^p x lambda d^q y] = (-lambda)^p (lambda+d)^q [x lambda y]."""
    (p, I), (q, J) = a, b
    base = _xi_bracket(I, J)
    out: dict = {}
    for k, elem in base.items():
        for r in range(q + 1):
            power = k + p + q - r
            coef = comb(q, r) * (-1) ** p
            shifted = {(dp + r, K): c for (dp, K), c in elem.items()}
            linalg.axpy(out.setdefault(power, {}), gq(coef), shifted)
    return tuple((k, tuple(v.items())) for k, v in sorted(out.items()) if v)


def lambda_bracket(a: ConformalElement, b: ConformalElement) -> dict:
    """[a lambda b] as {power of lambda: ConformalElement}."""
    out: dict = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            for power, items in _monomial_bracket(ka, kb):
                linalg.axpy(out.setdefault(power, {}), ca * cb, dict(items))
    return {k: ConformalElement._wrap(v) for k, v in sorted(out.items()) if v}


def n_product(a: ConformalElement, b: ConformalElement, n: int) -> ConformalElement:
    """a_(n) b = n! * [lambda^n] of the lambda bracket."""
    coeff = lambda_bracket(a, b).get(n)
    if coeff is None:
        return ConformalElement()
    return coeff * factorial(n)


# Axiom checks -----------------------------------------------------------------


def check_derivation_axiom(a, b, nmax=4) -> bool:
    """(da)_(0) b = 0 and (da)_(n+1) b = -(n+1) a_(n) b."""
    da = a.d()
    if n_product(da, b, 0):
        return False
    return all(n_product(da, b, n + 1) == n_product(a, b, n) * (-(n + 1)) for n in range(nmax))


def check_skew_symmetry(a, b, nmax=4) -> bool:
    sign = (-1) ** (a.parity() * b.parity())
    for n in range(nmax):
        rhs = ConformalElement()
        for j in range(0, 6):
            term = n_product(b, a, n + j)
            if term:
                rhs = rhs + term.d(j) * (gq(-sign * (-1) ** (j + n)) / factorial(j))
        if n_product(a, b, n) != rhs:
            return False
    return True


def check_jacobi(a, b, c, mmax=2, nmax=2) -> bool:
    sign = (-1) ** (a.parity() * b.parity())
    for m in range(mmax + 1):
        for n in range(nmax + 1):
            lhs = n_product(a, n_product(b, c, n), m)
            rhs = n_product(b, n_product(a, c, m), n) * sign
            for j in range(m + 1):
                rhs = rhs + n_product(n_product(a, b, j), c, m + n - j) * comb(m, j)
            if lhs != rhs:
                return False
    return True


# Annihilation algebra -----------------------------------------------------------


def _eliminate_d(elem: ConformalElement, ypow: int) -> dict:
    """Reduce sum c d^r xi_K y^p using d a y^p = -p a y^(p-1); returns {(K, p'): c}."""
    out: dict = {}
    for (r, K), c in elem.terms.items():
        if r > ypow:
            continue
        falling = 1
        for s in range(r):
            falling *= ypow - s
        linalg.axpy(out, ONE, {(K, ypow - r): c * ((-1) ** r * falling)})
    return out


def annihilation_bracket(a: ConformalElement, m: int, b: ConformalElement, k: int) -> dict:
    """[a y^m, b y^k] = sum_j C(m,j) (a_(j) b) y^(m+k-j), in d-free normal form.

    Returns {(xi index tuple, y power): coefficient}.
    """
    out: dict = {}
    for j in range(m + 1):
        prod = n_product(a, b, j)
        if prod:
            linalg.axpy(out, gq(comb(m, j)), _eliminate_d(prod, m + k - j))
    return out


def to_contact(terms: dict) -> SuperElement:
    """Identify xi_I y^m with t^m xi_I."""
    return SuperElement({ContactMonomial(p, K): c for (K, p), c in terms.items()})
