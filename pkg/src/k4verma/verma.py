"""Weight modules V_X^{m,n} and the induced modules M = U(g_-) (x) V.

Quadrants realise the irreducible g_0-modules on polynomial spaces:

    A: C[x1,x2,y1,y2]        B: C[dx1,dx2,y1,y2]
    C: C[dx1,dx2,dy1,dy2]    D: C[x1,x2,dy1,dy2]

``m`` and ``n`` are the signed eigenvalues of the x- and y-Euler operators, so
M_C^{-1,-1} is ``ModuleSpec("C", -1, -1)``.  t acts on V as
-(Euler_x + Euler_y)/2 + i and C as (Euler_x - Euler_y)/2 + j, where (i, j)
is the quadrant shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import enveloping as env
from . import linalg
from .contact import (
    ContactMonomial,
    SuperElement,
    contact_bracket,
    g0_coordinates,
)
from .enveloping import PBWMonomial, UEnvElement
from .scalars import ONE, GaussianRational, gq

QUADRANTS = ("A", "B", "C", "D")
SHIFTS = {"A": (0, 0), "B": (1, -1), "C": (2, 0), "D": (1, 1)}
# sign of the x and y bidegree per quadrant (+1 for polynomial, -1 for d-variables)
SIGNS = {"A": (1, 1), "B": (-1, 1), "C": (-1, -1), "D": (1, -1)}
X_LETTERS = {1: "x", -1: "dx"}
Y_LETTERS = {1: "y", -1: "dy"}


@dataclass(frozen=True, order=True)
class ModuleSpec:
    """Coordinates of M_X^{m,n}; ``shift`` overrides the quadrant's (i, j)."""

    quadrant: str
    m: int
    n: int
    shift: tuple | None = None

    def __post_init__(self):
        if self.quadrant not in QUADRANTS:
            raise ValueError(f"unknown quadrant {self.quadrant!r}")
        sx, sy = SIGNS[self.quadrant]
        if self.m * sx < 0 or self.n * sy < 0:
            raise ValueError(f"bidegree ({self.m},{self.n}) is outside quadrant {self.quadrant}")

    @classmethod
    def parse(cls, text: str) -> "ModuleSpec":
        """Parse ``X:m,n`` with signed coordinates."""
        try:
            q, rest = text.split(":")
            m, n = (int(s) for s in rest.split(","))
        except ValueError:
            raise ValueError(f"module coordinates must look like A:1,2, got {text!r}") from None
        return cls(q.strip().upper(), m, n)

    @classmethod
    def general(cls, m: int, n: int, mu_t, mu_c) -> "ModuleSpec":
        """M(m, n, mu_t, mu_C) realised on quadrant-A polynomials."""
        i = Fraction(mu_t) + Fraction(m + n, 2)
        j = Fraction(mu_c) - Fraction(m - n, 2)
        return cls("A", m, n, (i, j))

    @property
    def signs(self):
        return SIGNS[self.quadrant]

    @property
    def degrees(self):
        """Unsigned polynomial degrees in the x and y generators."""
        sx, sy = self.signs
        return self.m * sx, self.n * sy

    @property
    def ij(self):
        return tuple(Fraction(v) for v in (self.shift if self.shift is not None else SHIFTS[self.quadrant]))

    @property
    def weight(self):
        """(m, n, mu_t, mu_C): sl2 highest weights and the t, C eigenvalues."""
        i, j = self.ij
        return (
            abs(self.m),
            abs(self.n),
            Fraction(-(self.m + self.n), 2) + i,
            Fraction(self.m - self.n, 2) + j,
        )

    def weight_basis(self) -> list[tuple]:
        a, b = self.degrees
        return [(a - k, k, b - l, l) for k in range(a + 1) for l in range(b + 1)]

    def highest_monomial(self) -> tuple:
        """The monomial of highest (h_x, h_y) weight."""
        a, b = self.degrees
        sx, sy = self.signs
        xe = (a, 0) if sx > 0 else (0, a)
        ye = (b, 0) if sy > 0 else (0, b)
        return xe + ye

    def dim(self) -> int:
        a, b = self.degrees
        return (a + 1) * (b + 1)

    def __str__(self):
        s = f"{self.quadrant}:{self.m},{self.n}"
        if self.shift is not None:
            s += f"[{self.ij[0]},{self.ij[1]}]"
        return s


class WeightMonomial(NamedTuple):
    quadrant: str
    exps: tuple

    def __str__(self):
        return monomial_str(self.quadrant, self.exps)


def monomial_str(quadrant: str, exps: tuple) -> str:
    sx, sy = SIGNS[quadrant]
    names = [X_LETTERS[sx] + "1", X_LETTERS[sx] + "2", Y_LETTERS[sy] + "1", Y_LETTERS[sy] + "2"]
    parts = [nm if e == 1 else f"{nm}^{e}" for nm, e in zip(names, exps) if e]
    return " ".join(parts) if parts else "1"


# g_0 action on weight polynomials ------------------------------------------------


def _sl2_on_pair(op: str, sign: int, e: tuple):
    """Apply e/f/h of one sl2 to the exponent pair e; returns [(coef, new pair)].

    For polynomial generators x_i d/dx_j is the usual derivation.  For the
    d-type generators x_i d/dx_j . dx_k = -delta_{ik} dx_j.
    """
    a1, a2 = e
    if op == "h":
        return [(sign * (a1 - a2), e)] if a1 != a2 else []
    if sign > 0:
        if op == "e":  # x1 d/dx2
            return [(a2, (a1 + 1, a2 - 1))] if a2 else []
        return [(a1, (a1 - 1, a2 + 1))] if a1 else []  # x2 d/dx1
    if op == "e":  # dx1 -> -dx2
        return [(-a1, (a1 - 1, a2 + 1))] if a1 else []
    return [(-a2, (a1 + 1, a2 - 1))] if a2 else []  # dx2 -> -dx1


@lru_cache(maxsize=None)
def _g0_monomial_action(spec: ModuleSpec, op: ContactMonomial, exps: tuple) -> tuple:
    coords = _coords(op)
    sx, sy = spec.signs
    i, j = spec.ij
    ex = sx * (exps[0] + exps[1])
    ey = sy * (exps[2] + exps[3])
    out: dict = {}
    for name, c in coords:
        if name in ("t", "C"):
            val = (Fraction(-(ex + ey), 2) + i) if name == "t" else (Fraction(ex - ey, 2) + j)
            if val:
                linalg.axpy(out, c * gq(val), {exps: ONE})
            continue
        kind, var = name[0], name[1]
        if var == "x":
            for k, pair in _sl2_on_pair(kind, sx, exps[:2]):
                linalg.axpy(out, c * k, {pair + exps[2:]: ONE})
        else:
            for k, pair in _sl2_on_pair(kind, sy, exps[2:]):
                linalg.axpy(out, c * k, {exps[:2] + pair: ONE})
    return tuple(out.items())


@lru_cache(maxsize=None)
def _coords(op: ContactMonomial) -> tuple:
    return tuple(g0_coordinates(SuperElement({op: ONE})).items())


def g0_action(g: SuperElement, f: dict, spec: ModuleSpec) -> dict:
    """Apply g in g_0 to a weight polynomial f = {exps: coef} of the given module."""
    if any(d != 0 for d in g.degrees()):
        raise ValueError("g0_action needs an element of degree 0")
    out: dict = {}
    for op, c in g.terms.items():
        for exps, cf in f.items():
            for e2, k in _g0_monomial_action(spec, op, exps):
                linalg.axpy(out, c * cf * k, {e2: ONE})
    return out


# Verma vectors ----------------------------------------------------------------------


class VermaVector:
    """Element of U(g_-) (x) V_X^{m,n}, keyed by (PBWMonomial, exponent tuple).

    With ``graded=True`` the U-part lives in the associated graded algebra,
    where the w generators strictly anticommute.
    """

    __slots__ = ("module", "terms", "graded")

    def __init__(self, module: ModuleSpec, terms=None, graded: bool = False):
        self.module = module
        self.terms = {}
        self.graded = graded
        basis = set(module.weight_basis())
        for (pm, exps), c in (terms or {}).items():
            if exps not in basis:
                raise ValueError(f"monomial {exps} does not lie in {module}")
            c = c if isinstance(c, GaussianRational) else gq(c)
            if c:
                self.terms[(pm, exps)] = c

    @classmethod
    def _wrap(cls, module, terms, graded=False):
        obj = cls.__new__(cls)
        obj.module = module
        obj.terms = terms
        obj.graded = graded
        return obj

    @classmethod
    def tensor(cls, module: ModuleSpec, u: UEnvElement, f: dict, graded: bool | None = None):
        """u (x) f for u in U(g_-) and a weight polynomial f."""
        g = u.graded if graded is None else graded
        return cls(module, {(pm, e): cu * cf for pm, cu in u.terms.items() for e, cf in f.items()}, g)

    def _check(self, other):
        if self.module != other.module:
            raise ValueError(f"vectors live in different modules {self.module} and {other.module}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        linalg.axpy(out, ONE, other.terms)
        return VermaVector._wrap(self.module, out, self.graded)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        linalg.axpy(out, -ONE, other.terms)
        return VermaVector._wrap(self.module, out, self.graded)

    def __neg__(self):
        return VermaVector._wrap(self.module, {k: -c for k, c in self.terms.items()}, self.graded)

    def __mul__(self, scalar):
        s = scalar if isinstance(scalar, GaussianRational) else gq(scalar)
        return VermaVector._wrap(self.module, linalg.scale(self.terms, s), self.graded)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, VermaVector) and self.module == other.module and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {pm.degree for pm, _ in self.terms}

    def degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("vector is not homogeneous in degree")
        return ds.pop()

    def __str__(self):
        if not self.terms:
            return "0"
        q = self.module.quadrant
        items = sorted(self.terms.items(), key=lambda it: term_key(it[0]))
        return " + ".join(f"({c})*{pm} (x) {monomial_str(q, e)}" for (pm, e), c in items)

    __repr__ = __str__


def term_key(key):
    pm, exps = key
    return (pm.degree, pm.theta_pow, tuple(-f for f in pm.flags), tuple(-e for e in exps))


def left_multiply(u: UEnvElement, v: VermaVector) -> VermaVector:
    out: dict = {}
    graded = u.graded or v.graded
    for pu, cu in u.terms.items():
        for (pm, e), c in v.terms.items():
            for p2, k in env.multiply_monomials(pu, pm, graded):
                linalg.axpy(out, cu * c * k, {(p2, e): ONE})
    return VermaVector._wrap(v.module, out, graded)


def graded_basis(module: ModuleSpec, d: int, graded: bool = False) -> list[VermaVector]:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return [
        VermaVector._wrap(module, {(pm, e): ONE}, graded)
        for pm in env.basis(d)
        for e in module.weight_basis()
    ]


def basis_keys(module: ModuleSpec, d: int) -> list[tuple]:
    return [(pm, e) for pm in env.basis(d) for e in module.weight_basis()]


# Action of g ------------------------------------------------------------------------

_LETTER_THETA = -1


def _split_first(pm: PBWMonomial):
    """Leading generator of a normal-ordered monomial and the remainder."""
    if pm.theta_pow:
        return _LETTER_THETA, PBWMonomial(pm.theta_pow - 1, pm.flags)
    k = pm.word[0]
    flags = list(pm.flags)
    flags[k] = 0
    return k, PBWMonomial(0, tuple(flags))


@lru_cache(maxsize=None)
def _letter_element(letter: int) -> SuperElement:
    if letter == _LETTER_THETA:
        return SuperElement({ContactMonomial(0, ()): gq("-1/2")})
    out: dict = {}
    for i, c in env.W_IN_ETA[letter].items():
        out[ContactMonomial(0, (i,))] = c
    return SuperElement(out)


@lru_cache(maxsize=None)
def _letter_monomial(letter: int) -> PBWMonomial:
    if letter == _LETTER_THETA:
        return PBWMonomial(1, (0, 0, 0, 0))
    f = [0, 0, 0, 0]
    f[letter] = 1
    return PBWMonomial(0, tuple(f))


@lru_cache(maxsize=None)
def _act_symbolic(g: ContactMonomial, pm: PBWMonomial) -> tuple:
    """g . (pm (x) v) = sum c * p' (x) (op . v); returns ((p', op), c) with op None for identity."""
    out: dict = {}
    deg = g.degree
    if pm == env.ONE_MONO:
        if g.central or deg == 0:
            out[(env.ONE_MONO, g)] = ONE
        elif deg < 0:
            for p2, c in env.from_negative(SuperElement({g: ONE})).terms.items():
                out[(p2, None)] = c
        return tuple(out.items())
    letter, rest = _split_first(pm)
    x = _letter_element(letter)
    # [g, x] . rest
    br = contact_bracket(SuperElement({g: ONE}), x)
    for bm, bc in br.terms.items():
        if not bm.central and bm.degree < 0:
            for pu, cu in env.from_negative(SuperElement({bm: ONE})).terms.items():
                for p2, k in env.multiply_monomials(pu, rest):
                    linalg.axpy(out, bc * cu * k, {(p2, None): ONE})
        else:
            for key, c in _act_symbolic(bm, rest):
                linalg.axpy(out, bc * c, {key: ONE})
    # +- x . (g . rest)
    sign = -1 if (g.parity and letter != _LETTER_THETA) else 1
    xm = _letter_monomial(letter)
    for (p1, op), c in _act_symbolic(g, rest):
        for p2, k in env.multiply_monomials(xm, p1):
            linalg.axpy(out, c * k * sign, {(p2, op): ONE})
    return tuple(out.items())


def act(g: SuperElement, v: VermaVector) -> VermaVector:
    if v.graded:
        raise ValueError("the g-action is defined on ungraded Verma vectors")
    spec = v.module
    out: dict = {}
    for gm, gc in g.terms.items():
        for (pm, exps), vc in v.terms.items():
            for (p2, op), c in _act_symbolic(gm, pm):
                coef = gc * vc * c
                if op is None:
                    linalg.axpy(out, coef, {(p2, exps): ONE})
                else:
                    for e2, k in _g0_monomial_action(spec, op, exps):
                        linalg.axpy(out, coef * k, {(p2, e2): ONE})
    return VermaVector._wrap(spec, out)


def vector(module: ModuleSpec, *pairs, graded=False) -> VermaVector:
    """Build sum of (coef, 'w11 w21', exps) triples; the word may be unordered."""
    out = VermaVector(module, graded=graded)
    for coef, word, exps in pairs:
        u = UEnvElement.from_word(word, graded=graded) if word else UEnvElement.one(graded)
        out = out + VermaVector.tensor(module, u * coef, {tuple(exps): ONE}, graded)
    return out


def weight_of_term(key, spec: ModuleSpec) -> tuple:
    """(h_x, h_y) eigenvalues of a basis term."""
    pm, e = key
    hx = sum((1 if k in (0, 2) else -1) for k in pm.word)
    hy = sum((1 if k in (0, 1) else -1) for k in pm.word)
    sx, sy = spec.signs
    return hx + sx * (e[0] - e[1]), hy + sy * (e[2] - e[3])


def t_eigenvalue(spec: ModuleSpec, degree: int):
    return spec.weight[2] - degree


def lie_action_failures(module: ModuleSpec, rng, trials: int = 20, max_deg: int = 2) -> list:
    """Random checks of [g,h].v = g.(h.v) - (-1)^{|g||h|} h.(g.v) on basis vectors."""
    from .contact import basis as g_basis

    gens = [m for d in range(-2, 3) for m in g_basis(d)]
    bad = []
    for _ in range(trials):
        g, h = rng.choice(gens), rng.choice(gens)
        d = rng.randrange(max_deg + 1)
        key = rng.choice(basis_keys(module, d))
        v = VermaVector._wrap(module, {key: ONE})
        G, H = SuperElement({g: ONE}), SuperElement({h: ONE})
        lhs = act(contact_bracket(G, H), v)
        rhs = act(G, act(H, v)) - act(H, act(G, v)) * ((-1) ** (g.parity * h.parity))
        if lhs != rhs:
            bad.append((g, h, key))
    return bad
