"""Exact homology of the morphism complexes and of their graded pieces.

Every space here is finite-dimensional once the degree (and, for the graded
complexes, the bidegree) is fixed, so homology is plain rank-nullity over
Q(i).  Compositions of consecutive maps are checked, never assumed, to vanish.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from . import linalg
from .enveloping import PBWMonomial
from .morphisms import (
    D_PRIME,
    D_SECOND,
    DELTA_MINUS,
    DELTA_PLUS,
    MorphismTag,
    incoming,
    make_tag,
    outgoing,
)
from .scalars import ONE, gq
from .verma import (
    QUADRANTS,
    SIGNS,
    ModuleSpec,
    VermaVector,
    basis_keys,
    t_eigenvalue,
    vector,
    weight_of_term,
)

DEFAULT_WINDOW = 6


def default_window() -> int:
    """Degree window, overridable through K4VERMA_WINDOW."""
    raw = os.environ.get("K4VERMA_WINDOW")
    if raw is None:
        return DEFAULT_WINDOW
    value = int(raw)
    if value < 0:
        raise ValueError("K4VERMA_WINDOW must be nonnegative")
    return value


class CompositionError(ArithmeticError):
    """Two consecutive maps of a complex do not compose to zero."""


# Matrices ------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _image(tag: MorphismTag, key: tuple, graded: bool) -> tuple:
    v = VermaVector._wrap(tag.source, {key: ONE}, graded)
    return tuple(tag.apply(v).terms.items())


def images(tag: MorphismTag, keys, graded: bool = False) -> list[dict]:
    return [dict(_image(tag, k, graded)) for k in keys]


def _apply_to(tag: MorphismTag, vec: dict, graded: bool) -> dict:
    out: dict = {}
    for k, c in vec.items():
        linalg.axpy(out, c, dict(_image(tag, k, graded)))
    return out


def _check_zero(tag: MorphismTag, vectors, graded: bool, where: str) -> None:
    for v in vectors:
        if _apply_to(tag, v, graded):
            raise CompositionError(f"{tag} does not vanish on the image at {where}")


# Nodes of the morphism diagram -----------------------------------------------------


@dataclass(frozen=True)
class ComplexNode:
    module: ModuleSpec
    incoming: MorphismTag | None = None
    outgoing: MorphismTag | None = None

    def __post_init__(self):
        if self.incoming is not None and self.incoming.target != self.module:
            raise ValueError(f"{self.incoming} does not end at {self.module}")
        if self.outgoing is not None and self.outgoing.source != self.module:
            raise ValueError(f"{self.outgoing} does not start at {self.module}")

    @classmethod
    def at(cls, module: ModuleSpec) -> "ComplexNode":
        return cls(module, incoming(module), outgoing(module))

    def __str__(self):
        return str(self.module)


@dataclass
class DegreeHomology:
    degree: int
    dim: int
    by_weight: dict = field(default_factory=dict)  # (h_x, h_y) -> dim


def _by_weight(keys, spec):
    groups: dict = {}
    for k in keys:
        groups.setdefault(weight_of_term(k, spec), []).append(k)
    return groups


def _vector_weight(vec: dict, spec: ModuleSpec):
    ws = {weight_of_term(k, spec) for k in vec}
    if len(ws) != 1:
        raise ArithmeticError("a morphism image is not a weight vector")
    return ws.pop()


def homology_at(node: ComplexNode, d: int) -> DegreeHomology:
    """Homology of the complex at ``node`` in degree d, split by g_0 weight."""
    spec = node.module
    keys = basis_keys(spec, d)
    groups = _by_weight(keys, spec)

    incoming_by_weight: dict = {}
    tag_in = node.incoming
    if tag_in is not None and d - tag_in.degree >= 0:
        src_keys = basis_keys(tag_in.source, d - tag_in.degree)
        for v in images(tag_in, src_keys):
            if v:
                incoming_by_weight.setdefault(_vector_weight(v, spec), []).append(v)
        if node.outgoing is not None:
            for vs in incoming_by_weight.values():
                _check_zero(node.outgoing, vs, False, f"{spec} degree {d}")

    out = DegreeHomology(d, 0)
    for wt, ks in groups.items():
        if node.outgoing is not None:
            kdim = len(ks) - linalg.rank(images(node.outgoing, ks))
        else:
            kdim = len(ks)
        h = kdim - linalg.rank(incoming_by_weight.get(wt, []))
        if h < 0:
            raise ArithmeticError(f"negative homology at {spec}, degree {d}")
        if h:
            out.by_weight[wt] = h
            out.dim += h
    return out


def homology_dims(node: ComplexNode, max_degree: int) -> dict:
    """Map degree -> homology dimension for degrees 0..max_degree."""
    return {d: homology_at(node, d).dim for d in range(max_degree + 1)}


@dataclass(frozen=True)
class HomologyClass:
    module: ModuleSpec
    degree: int
    weight: tuple
    t_eigenvalue: object
    dim: int


def homology_classes(node: ComplexNode, max_degree: int) -> list[HomologyClass]:
    out = []
    for d in range(max_degree + 1):
        h = homology_at(node, d)
        for wt, dim in sorted(h.by_weight.items()):
            out.append(HomologyClass(node.module, d, wt, t_eigenvalue(node.module, d), dim))
    return out


def nodes_in_range(bound: int) -> list[ModuleSpec]:
    """All quadrant nodes with |m|, |n| <= bound, in a fixed order."""
    out = []
    for q in QUADRANTS:
        sx, sy = SIGNS[q]
        for a in range(bound + 1):
            for b in range(bound + 1):
                out.append(ModuleSpec(q, sx * a, sy * b))
    return sorted(set(out))


def homology_table(bound: int, max_degree: int) -> list[tuple]:
    """Rows (quadrant, m, n, degree, dim) over the window, sorted."""
    rows = []
    for spec in nodes_in_range(bound):
        node = ComplexNode.at(spec)
        for d, dim in homology_dims(node, max_degree).items():
            rows.append((spec.quadrant, spec.m, spec.n, d, dim))
    return rows


# nodes with nonzero homology; the degree is observed, not assumed
EXCEPTIONAL_NODES = frozenset({ModuleSpec("A", 0, 0), ModuleSpec("C", -1, -1)})


def composition_failures(bound: int, max_degree: int) -> list[str]:
    """Check outgoing o incoming = 0 on full bases for every node in range."""
    bad = []
    for spec in nodes_in_range(bound):
        tin, tout = incoming(spec), outgoing(spec)
        if tin is None or tout is None:
            continue
        for d in range(max_degree + 1):
            for v in images(tin, basis_keys(tin.source, d)):
                if _apply_to(tout, v, False):
                    bad.append(f"{tout.kind} o {tin.kind} at {spec} (source degree {d})")
                    break
    return bad


# Associated graded complexes ---------------------------------------------------------


def _labels(key, spec: ModuleSpec) -> tuple:
    """(a, b): number of w11/w21 (resp. w12/w22) factors plus the signed y degree."""
    pm, e = key
    sy = spec.signs[1]
    return (pm.flags[0] + pm.flags[1] + sy * e[2], pm.flags[2] + pm.flags[3] + sy * e[3])


def module_or_none(q: str, m: int, n: int) -> ModuleSpec | None:
    """The node M_X^{m,n}, or None outside the quadrant."""
    try:
        return ModuleSpec(q, m, n)
    except ValueError:
        return None


@lru_cache(maxsize=None)
def gr_keys(spec: ModuleSpec, ab: tuple | None = None) -> tuple:
    """Basis of Lambda(g_-1) (x) V_X^{m,n}, optionally restricted to label (a, b)."""
    keys = [
        (PBWMonomial(0, flags), e)
        for flags in (tuple((bits >> (3 - s)) & 1 for s in range(4)) for bits in range(16))
        for e in spec.weight_basis()
    ]
    if ab is not None:
        keys = [k for k in keys if _labels(k, spec) == ab]
    return tuple(keys)


def _nabla_tag(spec: ModuleSpec) -> MorphismTag | None:
    tgt = module_or_none(spec.quadrant, spec.m - 1, spec.n - 1)
    return None if tgt is None else make_tag("nabla", spec)


def _nabla2_tag(spec: ModuleSpec) -> MorphismTag | None:
    if spec.n != 0 or spec.quadrant not in ("A", "B"):
        return None
    try:
        return make_tag("nabla2", spec)
    except ValueError:
        return None


def _shift(ab, k):
    return None if ab is None else (ab[0] + k, ab[1] + k)


def gr_node_homology(quadrant: str, m: int, n: int, ab: tuple | None = None, modified: bool = False) -> int:
    """dim H^{m,n} of G_X(a,b), or of the modified complex G_X°(a,b).

    The modification replaces the n = 0 column by the kernel of nabla_2 for
    X in {A, B} and by the cokernel of nabla_2 for X in {C, D}.
    """
    spec = module_or_none(quadrant, m, n)
    if spec is None:
        return 0
    keys = gr_keys(spec, ab)
    space = [{k: ONE} for k in keys]

    if modified and quadrant in ("A", "B") and n == 0:
        t2 = _nabla2_tag(spec)
        if t2 is not None:
            kern = linalg.kernel(images(t2, keys, True))
            space = [{keys[j]: c for j, c in kv.items()} for kv in kern]

    tout = _nabla_tag(spec)
    if tout is not None:
        kdim = len(space) - linalg.rank(_apply_to(tout, v, True) for v in space)
    else:
        kdim = len(space)

    killed: list = []
    src = module_or_none(quadrant, m + 1, n + 1)
    if src is not None:
        tin = make_tag("nabla", src)
        killed += images(tin, gr_keys(src, ab), True)
    if modified and quadrant in ("C", "D") and n == 0:
        src2 = module_or_none("A" if quadrant == "D" else "B", m + 2, 0)
        t2 = _nabla2_tag(src2) if src2 is not None else None
        if t2 is not None:
            killed += images(t2, gr_keys(src2, _shift(ab, -1)), True)
    if tout is not None:
        _check_zero(tout, killed, True, f"G_{quadrant}^{m},{n}")
    h = kdim - linalg.rank(killed)
    if h < 0:
        raise ArithmeticError(f"negative homology at G_{quadrant}^{m},{n}")
    return h


def lam(j: int) -> int:
    """dim of the j-th exterior power of a 2-dimensional space."""
    return comb(2, j) if 0 <= j <= 2 else 0


def expected_gr_dim(quadrant: str, a: int, b: int, m: int, n: int, modified: bool) -> int | None:
    """Closed-form dim H^{m,n}(G_X(a,b)); None where no closed form is claimed."""
    if quadrant == "B":
        return None
    if quadrant == "A":
        if a < 0 or b < 0:
            return 0
        if a > 2 or b > 2:
            k = max(a, b)
            return lam(a + b - n) if m == 0 and n >= k else 0
        if not modified:
            return None
        if m == 0 and n >= max(a, b):
            return lam(a + b - n)
        if m == 1 and 0 <= n <= min(a, b):
            return lam(a + b - n + 1)
        return 0
    if a > 2 or b > 2:
        return 0
    if a < 0 or b < 0:
        k = min(a, b)
        if quadrant == "D":
            return lam(a + b - n) if m == 0 and n <= k else 0
        return lam(a + b - n - 2) if m == 0 and n <= k - 2 else 0
    if not modified:
        return None
    if quadrant == "D":
        return lam(a + b - n) if m == 0 and n <= 0 else 0
    if m == 0 and n <= min(a, b) - 2:
        return lam(a + b - n - 2)
    if m == -1 and max(a, b) - 2 <= n <= 0:
        return lam(a + b - n - 3)
    return 0


def _q_dim(i: int, n: int) -> int:
    return (i + 1) * (n + 1) if i >= 0 and n >= 0 else 0


def expected_total_dim(quadrant: str, m: int, n: int) -> int | None:
    """dim H^{m,n}(G_X°) summed over all labels, from the g_0-module decomposition."""
    r = (0, 1, 0)
    if quadrant == "A":
        if m == 0 and n >= 0:
            return sum(_q_dim(r[i], n - i) for i in range(3))
        if m == 1 and 0 <= n <= 1:
            return sum(_q_dim(r[i], i - n - 1) for i in range(3))
        return 0
    if quadrant == "D":
        return sum(_q_dim(r[i], -n + i) for i in range(3)) if m == 0 and n <= 0 else 0
    if quadrant == "C":
        if m == 0 and n <= 0:
            return sum(_q_dim(r[i], -n - 2 + i) for i in range(3))
        if m == -1 and -1 <= n <= 0:
            return sum(_q_dim(r[i], n + 2 - i - 1) for i in range(3))
        return 0
    return None


def label_range(quadrant: str, m: int, n: int) -> list[tuple]:
    """All labels (a, b) with a nonzero G_X^{m,n}(a,b)."""
    spec = module_or_none(quadrant, m, n)
    if spec is None:
        return []
    return sorted({_labels(k, spec) for k in gr_keys(spec)})


def gr_homology(quadrant: str, ab: tuple | None, window: int, modified: bool = False) -> dict:
    """Table (m, n) -> dim H^{m,n} over |m|, |n| <= window (zeros omitted)."""
    out = {}
    sx, sy = SIGNS[quadrant]
    for a in range(window + 1):
        for b in range(window + 1):
            m, n = sx * a, sy * b
            h = gr_node_homology(quadrant, m, n, ab, modified)
            if h:
                out[(m, n)] = h
    return out


def bicomplex_failures(quadrant: str, m: int, n: int) -> list[str]:
    """d'^2, d''^2 and d'd'' + d''d' on the graded basis of G_X^{m,n}."""
    spec = module_or_none(quadrant, m, n)
    if spec is None:
        return []
    bad = []
    for key in gr_keys(spec):
        v = VermaVector._wrap(spec, {key: ONE}, True)
        maps = {}
        for name, mor in (("d'", D_PRIME), ("d''", D_SECOND)):
            try:
                maps[name] = mor.apply(v)
            except ValueError:
                maps[name] = None
        def twice(first, second):
            u = maps[first]
            if u is None or not u.terms:
                return {}
            try:
                return second.apply(u).terms
            except ValueError:
                return {}
        if twice("d'", D_PRIME):
            bad.append(f"d'^2 on {key}")
        if twice("d''", D_SECOND):
            bad.append(f"d''^2 on {key}")
        mixed = dict(twice("d'", D_SECOND))
        linalg.axpy(mixed, ONE, twice("d''", D_PRIME))
        if mixed:
            bad.append(f"d'd''+d''d' on {key}")
    return bad


# Ladders built from the Delta maps ------------------------------------------------------


def _wedge_keys(spec: ModuleSpec, plus: int, minus: int) -> list[tuple]:
    out = []
    for bits in range(16):
        flags = tuple((bits >> (3 - s)) & 1 for s in range(4))
        if flags[0] + flags[1] == plus and flags[2] + flags[3] == minus:
            out.extend((PBWMonomial(0, flags), e) for e in spec.weight_basis())
    return out


def _delta_image(quadrant: str, xdeg: int, plus: int, minus: int) -> tuple:
    """Basis of Delta^-(Lambda_+^plus Lambda_-^minus (x) x-polynomials) at x-degree xdeg.

    ``xdeg`` is the unsigned degree after Delta^- has been applied.
    """
    sx = SIGNS[quadrant][0]
    src = module_or_none(quadrant, sx * (xdeg + sx), 0)
    if src is None or plus < 0 or minus < 0:
        return None, []
    tgt = module_or_none(quadrant, sx * xdeg, 0)
    vecs = []
    for k in _wedge_keys(src, plus, minus):
        v = VermaVector._wrap(src, {k: ONE}, True)
        vecs.append(DELTA_MINUS.apply(v, tgt).terms)
    e = linalg.Echelon()
    for v in vecs:
        e.add(v)
    return tgt, [row for row, _ in e.rows.values()]


def _delta_plus(spec: ModuleSpec, vectors: list[dict]) -> list[dict]:
    tgt = module_or_none(spec.quadrant, spec.m - 1, 0)
    if tgt is None:
        return [{} for _ in vectors]
    out = []
    for vec in vectors:
        acc: dict = {}
        for k, c in vec.items():
            img = DELTA_PLUS.apply(VermaVector._wrap(spec, {k: ONE}, True), tgt)
            linalg.axpy(acc, c, img.terms)
        out.append(acc)
    return out


def _ladder_homology(quadrant: str, b: int, k: int, xdeg: int) -> int:
    """Homology at the Lambda_+^k spot of the Delta^+ ladder, at fixed x-degree."""
    sx = SIGNS[quadrant][0]
    spec, basis = _delta_image(quadrant, xdeg, k, b)
    if spec is None or not basis:
        return 0
    kdim = len(basis) - linalg.rank(_delta_plus(spec, basis))
    # Delta^+ changes the unsigned x-degree by -sx
    src_spec, src_basis = _delta_image(quadrant, xdeg + sx, k - 1, b)
    incoming_rank = 0
    if src_spec is not None and src_basis:
        incoming_rank = linalg.rank(_delta_plus(src_spec, src_basis))
    return kdim - incoming_rank


def s_ladder(a: int, b: int, max_xdeg: int) -> dict:
    """H_k of S(a, b) for k = 0..a, summed over x-degrees up to max_xdeg."""
    return {k: sum(_ladder_homology("A", b, k, e) for e in range(max_xdeg + 1)) for k in range(a + 1)}


def t_ladder(a: int, b: int, max_xdeg: int) -> dict:
    """H_k of T(a, b) for k = a..2, summed over dx-degrees up to max_xdeg."""
    return {k: sum(_ladder_homology("B", b - 1, k, e) for e in range(max_xdeg + 1)) for k in range(a, 3)}


def expected_s(k: int, b: int) -> int:
    return lam(k + 1 + b)


def expected_t(k: int, b: int) -> int:
    return lam(k + b - 3)


# Distinguished vectors ----------------------------------------------------------------

_I = gq(0, 1)


def vector_z() -> VermaVector:
    """i w11 w21 Delta^- dy1 + i (w12 w21 + w11 w22) Delta^- dy2 in M_C^{-1,-1}."""
    spec = ModuleSpec("C", -1, -1)
    terms = []
    for u, y in (("w11 w21", (1, 0)), ("w12 w21", (0, 1)), ("w11 w22", (0, 1))):
        terms.append((_I, f"{u} w12", (1, 0) + y))
        terms.append((_I, f"{u} w22", (0, 1) + y))
    return vector(spec, *terms)


def vector_k() -> VermaVector:
    """The degree-4 vector of M_C^{0,0} whose image under nabla is Theta z."""
    spec = ModuleSpec("C", 0, 0)
    one = (0, 0, 0, 0)
    return vector(spec, (_I * gq("1/2"), "w11 w21 w12 w22", one), (_I, "Th w12 w21", one), (_I, "Th w11 w22", one))


def vector_s() -> VermaVector:
    """(w11 x2 - w21 x1) y2 - (w12 x2 - w22 x1) y1 in M_A^{1,1}."""
    spec = ModuleSpec("A", 1, 1)
    return vector(spec, (1, "w11", (0, 1, 0, 1)), (-1, "w21", (1, 0, 0, 1)),
                  (-1, "w12", (0, 1, 1, 0)), (1, "w22", (1, 0, 1, 0)))


def in_image(tag: MorphismTag, v: VermaVector) -> bool:
    """Whether v lies in tag(M) within its degree."""
    d = v.degree() - tag.degree
    if d < 0:
        return not v.terms
    return linalg.in_span(v.terms, images(tag, basis_keys(tag.source, d)))
