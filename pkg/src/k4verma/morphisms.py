"""Morphisms between the modules M_X^{m,n}, and singular vectors.

A morphism is a finite sum of terms ``u (x) phi`` acting by

    (u (x) phi)(u' (x) v) = u' u (x) phi(v),

where phi is a word in the weight operators below.  ``dx_j`` differentiates
when the x-generators are polynomial (quadrants A, D) and multiplies by dx_j
otherwise, and likewise for ``dy_j``.  ``relabel`` reinterprets a polynomial
in another quadrant.  It is valid only when the generators it touches have
exponent zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import enveloping as env
from . import linalg
from .contact import NAMED, SuperElement, basis_elements
from .enveloping import UEnvElement
from .scalars import ONE, gq
from .verma import (
    SIGNS,
    ModuleSpec,
    VermaVector,
    act,
    basis_keys,
    term_key,
    vector,
    weight_of_term,
)

# Weight operators --------------------------------------------------------------


def _apply_op(op: tuple, quadrant: str, exps: tuple):
    """Apply one primitive operator; returns (new quadrant, [(coef, exps)])."""
    kind = op[0]
    if kind == "relabel":
        target = op[1]
        sx, sy = SIGNS[quadrant]
        tx, ty = SIGNS[target]
        if (sx != tx and (exps[0] or exps[1])) or (sy != ty and (exps[2] or exps[3])):
            raise ValueError(f"cannot relabel {exps} from {quadrant} to {target}")
        return target, [(1, exps)]
    j = op[1]
    slot = (j - 1) if kind == "dx" else (j + 1)
    sign = SIGNS[quadrant][0 if kind == "dx" else 1]
    e = list(exps)
    if sign > 0:
        if not e[slot]:
            return quadrant, []
        k = e[slot]
        e[slot] -= 1
        return quadrant, [(k, tuple(e))]
    e[slot] += 1
    return quadrant, [(1, tuple(e))]


def _apply_ops(ops: tuple, quadrant: str, exps: tuple):
    cur = [(1, exps)]
    q = quadrant
    for op in ops:
        nxt = []
        for c, e in cur:
            _, res = _apply_op(op, q, e)
            nxt += [(c * k, e2) for k, e2 in res]
        q = op[1] if op[0] == "relabel" else q
        cur = nxt
    return q, cur


def _target_spec(ops: tuple, spec: ModuleSpec) -> ModuleSpec:
    q, m, n = spec.quadrant, spec.m, spec.n
    for op in ops:
        if op[0] == "dx":
            m -= 1
        elif op[0] == "dy":
            n -= 1
        else:
            q = op[1]
    return ModuleSpec(q, m, n)


@dataclass(frozen=True)
class Morphism:
    """A sum of terms (word in w generators, coefficient, operator word)."""

    name: str
    terms: tuple  # ((word tuple, coef, ops tuple), ...)
    degree: int

    def target(self, source: ModuleSpec) -> ModuleSpec:
        return _target_spec(self.terms[0][2], source)

    def compose(self, first: "Morphism", name: str | None = None) -> "Morphism":
        """self o first: apply ``first`` then ``self``."""
        out = []
        for w1, c1, o1 in first.terms:
            for w2, c2, o2 in self.terms:
                out.append((w1 + w2, c1 * c2, o1 + o2))
        return Morphism(name or f"{self.name}.{first.name}", tuple(out), self.degree + first.degree)

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(f"{self.name}+{other.name}", self.terms + other.terms, self.degree)

    def scaled(self, c) -> "Morphism":
        return Morphism(self.name, tuple((w, c * k, o) for w, k, o in self.terms), self.degree)

    def apply(self, v: VermaVector, target: ModuleSpec | None = None) -> VermaVector:
        tgt = target or self.target(v.module)
        out: dict = {}
        for word, coef, ops in self.terms:
            u = _word_element(word, v.graded)
            for (pm, exps), c in v.terms.items():
                q, images = _apply_ops(ops, v.module.quadrant, exps)
                if not images:
                    continue
                if q != tgt.quadrant:
                    raise ValueError(f"{self.name} lands in quadrant {q}, expected {tgt.quadrant}")
                for pu, cu in u.terms.items():
                    for p2, k in env.multiply_monomials(pm, pu, v.graded):
                        for ki, e2 in images:
                            linalg.axpy(out, c * coef * cu * k * ki, {(p2, e2): ONE})
        return VermaVector._wrap(tgt, out, v.graded)


@lru_cache(maxsize=None)
def _word_element(word: tuple, graded: bool) -> UEnvElement:
    return UEnvElement.from_word(list(word), graded=graded) if word else UEnvElement.one(graded)


def _m(name, *terms, degree):
    return Morphism(name, tuple((tuple(w.split()), gq(c), tuple(o)) for w, c, o in terms), degree)


DX = {1: ("dx", 1), 2: ("dx", 2)}
DY = {1: ("dy", 1), 2: ("dy", 2)}

DELTA_PLUS = _m("D+", ("w11", 1, [DX[1]]), ("w21", 1, [DX[2]]), degree=1)
DELTA_MINUS = _m("D-", ("w12", 1, [DX[1]]), ("w22", 1, [DX[2]]), degree=1)
DELTA_PLUS_T = _m("~D+", ("w11", 1, [DY[1]]), ("w12", 1, [DY[2]]), degree=1)
DELTA_MINUS_T = _m("~D-", ("w21", 1, [DY[1]]), ("w22", 1, [DY[2]]), degree=1)
DY1 = _m("dy1", ("", 1, [DY[1]]), degree=0)
DY2 = _m("dy2", ("", 1, [DY[2]]), degree=0)
DX1 = _m("dx1", ("", 1, [DX[1]]), degree=0)
DX2 = _m("dx2", ("", 1, [DX[2]]), degree=0)

NABLA = (DELTA_PLUS.compose(DY1) + DELTA_MINUS.compose(DY2))
NABLA = Morphism("nabla", NABLA.terms, 1)
D_PRIME = Morphism("d'", DELTA_PLUS.compose(DY1).terms, 1)
D_SECOND = Morphism("d''", DELTA_MINUS.compose(DY2).terms, 1)


def _relabel(q):
    return _m(f"tau->{q}", ("", 1, [("relabel", q)]), degree=0)


def _nabla2(target_quadrant):
    m = DELTA_MINUS.compose(DELTA_PLUS).compose(_relabel(target_quadrant))
    return Morphism("nabla2", m.terms, 2)


def _nabla2_tilde(target_quadrant):
    m = DELTA_MINUS_T.compose(DELTA_PLUS_T).compose(_relabel(target_quadrant))
    return Morphism("nabla2_tilde", m.terms, 2)


def _w2(word, c=1):
    return _m(word, (word, c, []), degree=len(word.split()))


def _nabla3():
    tau = _relabel("C")
    a = DELTA_MINUS.compose(_w2("w11 w21").compose(tau)).compose(DY1)
    b = DELTA_MINUS.compose((_w2("w12 w21") + _w2("w11 w22")).compose(tau)).compose(DY2)
    return Morphism("nabla3", (a + b).terms, 3)


def _nabla3_tilde():
    tau = _relabel("C")
    a = DELTA_MINUS_T.compose(_w2("w11 w12").compose(tau)).compose(DX1)
    b = DELTA_MINUS_T.compose((_w2("w21 w12") + _w2("w11 w22")).compose(tau)).compose(DX2)
    return Morphism("nabla3_tilde", (a + b).terms, 3)


NABLA3 = _nabla3()
NABLA3_TILDE = _nabla3_tilde()

KINDS = ("nabla", "nabla2", "nabla2_tilde", "nabla3", "nabla3_tilde")


@dataclass(frozen=True)
class MorphismTag:
    kind: str
    source: ModuleSpec
    target: ModuleSpec

    @property
    def degree(self) -> int:
        return {"nabla": 1, "nabla2": 2, "nabla2_tilde": 2, "nabla3": 3, "nabla3_tilde": 3}[self.kind]

    def morphism(self) -> Morphism:
        return _morphism_for(self.kind, self.source)

    def apply(self, v: VermaVector) -> VermaVector:
        if v.module != self.source:
            raise ValueError(f"{self.kind} expects a vector of {self.source}, got {v.module}")
        return self.morphism().apply(v, self.target)

    def __str__(self):
        return f"{self.kind}: {self.source} -> {self.target}"


def _morphism_for(kind: str, src: ModuleSpec) -> Morphism:
    q = src.quadrant
    if kind == "nabla":
        return NABLA
    if kind == "nabla2":
        return _nabla2("D" if q == "A" else "C")
    if kind == "nabla2_tilde":
        return _nabla2_tilde("B" if q == "A" else "C")
    if kind == "nabla3":
        return NABLA3
    if kind == "nabla3_tilde":
        return NABLA3_TILDE
    raise ValueError(f"unknown morphism kind {kind!r}")


def make_tag(kind: str, source: ModuleSpec) -> MorphismTag:
    """Validate the domain of a morphism family and compute its target."""
    q, m, n = source.quadrant, source.m, source.n
    if source.shift is not None:
        raise ValueError("morphisms are defined on the quadrant modules only")
    if kind == "nabla":
        try:
            tgt = ModuleSpec(q, m - 1, n - 1)
        except ValueError:
            raise ValueError(f"nabla has no target from {source}") from None
    elif kind == "nabla2":
        if q == "A" and n == 0 and m >= 2:
            tgt = ModuleSpec("D", m - 2, 0)
        elif q == "B" and n == 0:
            tgt = ModuleSpec("C", m - 2, 0)
        else:
            raise ValueError(f"nabla2 is not defined on {source}")
    elif kind == "nabla2_tilde":
        if q == "A" and m == 0 and n >= 2:
            tgt = ModuleSpec("B", 0, n - 2)
        elif q == "D" and m == 0:
            tgt = ModuleSpec("C", 0, n - 2)
        else:
            raise ValueError(f"nabla2_tilde is not defined on {source}")
    elif kind == "nabla3":
        if (q, m, n) != ("A", 0, 1):
            raise ValueError("nabla3 is defined only on A:0,1")
        tgt = ModuleSpec("C", -1, 0)
    elif kind == "nabla3_tilde":
        if (q, m, n) != ("A", 1, 0):
            raise ValueError("nabla3_tilde is defined only on A:1,0")
        tgt = ModuleSpec("C", 0, -1)
    else:
        raise ValueError(f"unknown morphism kind {kind!r}")
    return MorphismTag(kind, source, tgt)


def apply_nabla(v: VermaVector) -> VermaVector:
    return make_tag("nabla", v.module).apply(v)


def apply_nabla2(v: VermaVector, variant: str = "plain") -> VermaVector:
    kind = "nabla2" if variant == "plain" else "nabla2_tilde"
    return make_tag(kind, v.module).apply(v)


def apply_nabla3(v: VermaVector, variant: str = "plain") -> VermaVector:
    kind = "nabla3" if variant == "plain" else "nabla3_tilde"
    return make_tag(kind, v.module).apply(v)


def outgoing(source: ModuleSpec) -> MorphismTag | None:
    """The arrow leaving a node of the morphism diagram, if any."""
    q, m, n = source.quadrant, source.m, source.n
    if q == "A":
        if m >= 1 and n >= 1:
            return make_tag("nabla", source)
        if n == 0 and m >= 2:
            return make_tag("nabla2", source)
        if m == 0 and n >= 2:
            return make_tag("nabla2_tilde", source)
        if (m, n) == (0, 1):
            return make_tag("nabla3", source)
        if (m, n) == (1, 0):
            return make_tag("nabla3_tilde", source)
        return None
    if q == "B":
        return make_tag("nabla", source) if n >= 1 else make_tag("nabla2", source)
    if q == "C":
        return make_tag("nabla", source)
    return make_tag("nabla", source) if m >= 1 else make_tag("nabla2_tilde", source)


def incoming(target: ModuleSpec) -> MorphismTag | None:
    """The arrow entering a node of the morphism diagram, if any."""
    q, m, n = target.quadrant, target.m, target.n
    if q == "A":
        return make_tag("nabla", ModuleSpec("A", m + 1, n + 1))
    if q == "B":
        if m < 0:
            return make_tag("nabla", ModuleSpec("B", m + 1, n + 1))
        return make_tag("nabla2_tilde", ModuleSpec("A", 0, n + 2))
    if q == "D":
        if n < 0:
            return make_tag("nabla", ModuleSpec("D", m + 1, n + 1))
        return make_tag("nabla2", ModuleSpec("A", m + 2, 0))
    if m < 0 and n < 0:
        return make_tag("nabla", ModuleSpec("C", m + 1, n + 1))
    if n == 0:
        if m <= -2:
            return make_tag("nabla2", ModuleSpec("B", m + 2, 0))
        if m == -1:
            return make_tag("nabla3", ModuleSpec("A", 0, 1))
        return None
    if n <= -2:
        return make_tag("nabla2_tilde", ModuleSpec("D", 0, n + 2))
    return make_tag("nabla3_tilde", ModuleSpec("A", 1, 0))


# Singular vectors -------------------------------------------------------------

HW_GENERATORS = ("e1", "e2", "g1_lowest_even", "g1_lowest_odd")


def _generators(mode: str) -> list[SuperElement]:
    if mode == "highest_weight":
        return [NAMED[n] for n in HW_GENERATORS]
    if mode == "full":
        return basis_elements(1)
    raise ValueError(f"unknown mode {mode!r}")


def is_singular(v: VermaVector, mode: str = "highest_weight") -> bool:
    return all(not act(g, v) for g in _generators(mode))


def singular_space(module: ModuleSpec, d: int, mode: str = "highest_weight") -> list[VermaVector]:
    """Basis of the singular vectors of degree d, one weight space at a time."""
    if d < 1:
        raise ValueError("singular vectors are searched in degree >= 1")
    gens = _generators(mode)
    keys = basis_keys(module, d)
    by_weight: dict = {}
    for k in keys:
        by_weight.setdefault(weight_of_term(k, module), []).append(k)
    out = []
    for wt in sorted(by_weight, reverse=True):
        ks = by_weight[wt]
        images = []
        for k in ks:
            v = VermaVector._wrap(module, {k: ONE})
            img: dict = {}
            for gi, g in enumerate(gens):
                for key, c in act(g, v).terms.items():
                    img[(gi, key)] = c
            images.append(img)
        kern = linalg.kernel(images)
        for vec in rref([{ks[j]: c for j, c in kv.items()} for kv in kern], ks):
            out.append(VermaVector._wrap(module, vec))
    return out


def rref(vectors: list[dict], order: list) -> list[dict]:
    """Reduced row echelon basis of the span, pivots normalised to 1."""
    e = linalg.Echelon(order)
    for v in vectors:
        e.add(v)
    pos = {k: i for i, k in enumerate(order)}
    pivots = sorted(e.rows, key=pos.__getitem__)
    rows = {p: dict(e.rows[p][0]) for p in pivots}
    for p in reversed(pivots):
        for q in pivots:
            if q != p and p in rows[q]:
                linalg.axpy(rows[q], -rows[q][p], rows[p])
    return [rows[p] for p in pivots]


def normalized(v: VermaVector) -> VermaVector:
    """Scale so the first coefficient in the deterministic term order is 1."""
    if not v.terms:
        return v
    first = min(v.terms, key=term_key)
    return v * v.terms[first].inverse()


def proportional(u: VermaVector, v: VermaVector) -> bool:
    return u.module == v.module and normalized(u) == normalized(v)


def in_span(v: VermaVector, space: list[VermaVector]) -> bool:
    return linalg.in_span(v.terms, [s.terms for s in space])


# Classified singular vectors ------------------------------------------------------


def classified_vector(family: str, m: int = 0, n: int = 0) -> VermaVector:
    """Highest weight singular vectors of degrees 1 to 3, by family label."""
    if family == "1a":
        M = ModuleSpec("A", m, n)
        return vector(M, (1, "w11", (m, 0, n, 0)))
    if family == "1b":
        _need(m > 0, family)
        M = ModuleSpec("B", -m, n)
        return vector(M, (1, "w21", (0, m, n, 0)), (1, "w11", (1, m - 1, n, 0)))
    if family == "1c":
        _need(m > 0 and n > 0, family)
        M = ModuleSpec("C", -m, -n)
        return vector(
            M,
            (1, "w22", (0, m, 0, n)),
            (1, "w12", (1, m - 1, 0, n)),
            (1, "w21", (0, m, 1, n - 1)),
            (1, "w11", (1, m - 1, 1, n - 1)),
        )
    if family == "1d":
        _need(n > 0, family)
        M = ModuleSpec("D", m, -n)
        return vector(M, (1, "w12", (m, 0, 0, n)), (1, "w11", (m, 0, 1, n - 1)))
    if family == "2a":
        M = ModuleSpec("B", 0, n)
        return vector(M, (1, "w11 w21", (0, 0, n, 0)))
    if family == "2b":
        M = ModuleSpec("D", m, 0)
        return vector(M, (1, "w11 w12", (m, 0, 0, 0)))
    if family == "2c":
        _need(m > 1, family)
        M = ModuleSpec("C", -m, 0)
        return vector(
            M,
            (1, "w21 w22", (0, m, 0, 0)),
            (1, "w11 w22", (1, m - 1, 0, 0)),
            (1, "w21 w12", (1, m - 1, 0, 0)),
            (1, "w11 w12", (2, m - 2, 0, 0)),
        )
    if family == "2d":
        _need(n > 1, family)
        M = ModuleSpec("C", 0, -n)
        return vector(
            M,
            (1, "w12 w22", (0, 0, 0, n)),
            (1, "w11 w22", (0, 0, 1, n - 1)),
            (1, "w12 w21", (0, 0, 1, n - 1)),
            (1, "w11 w21", (0, 0, 2, n - 2)),
        )
    if family == "3a":
        M = ModuleSpec("C", -1, 0)
        return vector(M, (1, "w11 w22 w21", (0, 1, 0, 0)), (-1, "w21 w12 w11", (1, 0, 0, 0)))
    if family == "3b":
        M = ModuleSpec("C", 0, -1)
        return vector(M, (1, "w11 w22 w12", (0, 0, 0, 1)), (-1, "w12 w21 w11", (0, 0, 1, 0)))
    raise ValueError(f"unknown family {family!r}")


def _need(cond, family):
    if not cond:
        raise ValueError(f"parameters out of range for family {family}")


FAMILIES = ("1a", "1b", "1c", "1d", "2a", "2b", "2c", "2d", "3a", "3b")


def family_instances(bound: int = 4):
    """All (family, m, n) in the classification with m, n <= bound."""
    out = []
    for fam in FAMILIES:
        for m in range(bound + 1):
            for n in range(bound + 1):
                if fam in ("2a", "2d") and m:
                    continue
                if fam in ("2b", "2c") and n:
                    continue
                if fam in ("3a", "3b") and (m or n):
                    continue
                try:
                    classified_vector(fam, m, n)
                except ValueError:
                    continue
                out.append((fam, m, n))
    return out
