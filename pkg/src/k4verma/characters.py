"""Truncated characters, closed-form sizes and the size-from-series oracle.

The character of a module V is tr_V s^(-t).  For the modules here t acts on
the degree-d piece by mu_t - d, so the series is s^(-mu_t) * sum_d c_d s^d and
only the integer coefficients c_d need to be stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import enveloping as env
from . import linalg
from .homology import images
from .morphisms import MorphismTag, incoming
from .verma import ModuleSpec, basis_keys


@dataclass(frozen=True)
class CharacterSeries:
    leading_exponent: Fraction
    coeffs: tuple

    def rows(self) -> list[str]:
        """``exponent: coefficient`` lines."""
        return [f"{self.leading_exponent + d}: {c}" for d, c in enumerate(self.coeffs)]


@dataclass(frozen=True)
class Quotient:
    """M / image of ``by``; ``by=None`` means the module itself."""

    module: ModuleSpec
    by: MorphismTag | None = None

    @classmethod
    def irreducible(cls, module: ModuleSpec) -> "Quotient":
        """The quotient by the image of the incoming arrow of the diagram."""
        return cls(module, incoming(module) if module.shift is None else None)

    def __str__(self):
        return f"{self.module}/{self.by.kind}" if self.by else str(self.module)


def verma_dimension(module: ModuleSpec, d: int) -> int:
    return env.graded_dimension(d) * module.dim()


def character_series(target, max_deg: int) -> CharacterSeries:
    """Graded dimensions of a module or of a quotient by a morphism image."""
    if max_deg < 0:
        raise ValueError("max_deg must be nonnegative")
    q = target if isinstance(target, Quotient) else Quotient(target)
    coeffs = []
    for d in range(max_deg + 1):
        c = verma_dimension(q.module, d)
        if q.by is not None and d - q.by.degree >= 0:
            c -= linalg.rank(images(q.by, basis_keys(q.by.source, d - q.by.degree)))
        coeffs.append(c)
    return CharacterSeries(-q.module.weight[2], tuple(coeffs))


# Sizes -----------------------------------------------------------------------------


def size_formula(quadrant: str, m: int, n: int) -> int:
    """Size of the irreducible quotient, in terms of |m| and |n|."""
    if m < 0 or n < 0:
        raise ValueError("size_formula takes the unsigned bidegree")
    if quadrant == "A":
        return 2 * m * n + m + n
    if quadrant == "B":
        return 2 * m * n + m + 3 * n + 2
    if quadrant == "C":
        return 2 * m * n + 3 * m + 3 * n + 4
    if quadrant == "D":
        return 2 * m * n + n + 3 * m + 2
    raise ValueError(f"unknown quadrant {quadrant!r}")


STABLE_RUN = 3


@dataclass(frozen=True)
class SizeReport:
    size: Fraction | None
    stable_from: tuple | None  # first even and odd degree of the stable run
    limits: tuple | None

    @property
    def status(self) -> str:
        return "stabilized" if self.size is not None else "not stabilized"


def _stable_value(values: list[tuple]):
    """Last value of a parity class if its final STABLE_RUN entries agree."""
    if len(values) < STABLE_RUN:
        return None
    tail = [c for _, c in values[-STABLE_RUN:]]
    if len(set(tail)) != 1:
        return None
    start = len(values) - STABLE_RUN
    while start > 0 and values[start - 1][1] == tail[0]:
        start -= 1
    return tail[0], values[start][0]


def size_from_coeffs(coeffs) -> SizeReport:
    """(c_even + c_odd) / 4 from the stabilized tails of both parity classes."""
    even = [(d, c) for d, c in enumerate(coeffs) if d % 2 == 0]
    odd = [(d, c) for d, c in enumerate(coeffs) if d % 2 == 1]
    se, so = _stable_value(even), _stable_value(odd)
    if se is None or so is None:
        return SizeReport(None, None, None)
    return SizeReport(Fraction(se[0] + so[0], 4), (se[1], so[1]), (se[0], so[0]))


def size_from_series(target, window: int) -> SizeReport:
    return size_from_coeffs(character_series(target, window).coeffs)


# Closed form for quadrant A --------------------------------------------------------------


def type_a_closed_form(m: int, n: int, max_deg: int) -> CharacterSeries:
    """Expansion of the closed-form character of the quadrant-A quotient.

    For (m, n) != (0, 0) the series is s^((m+n)/2) times
    [2 + (m+n-1)(1+s) + mn(1+s)^2] / (1 - s); the (0, 0) quotient is trivial.
    """
    lead = Fraction(m + n, 2)
    if (m, n) == (0, 0):
        return CharacterSeries(lead, tuple([1] + [0] * max_deg))
    numer = [2 + (m + n - 1) + m * n, (m + n - 1) + 2 * m * n, m * n]
    coeffs, acc = [], 0
    for d in range(max_deg + 1):
        acc += numer[d] if d < len(numer) else 0
        coeffs.append(acc)
    return CharacterSeries(lead, tuple(coeffs))
