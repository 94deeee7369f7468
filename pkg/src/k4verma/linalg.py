"""Sparse exact linear algebra over Q(i).

Vectors are dicts ``key -> GaussianRational`` with no zero entries.  Keys are
ordered through an explicit index so pivoting is deterministic: the pivot of a
row is always its first key in that order.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from .scalars import ZERO, GaussianRational

Vector = dict


def axpy(target: dict, coef, source: dict) -> None:
    """target += coef * source, in place, dropping zeros."""
    if not coef:
        return
    for k, c in source.items():
        v = target.get(k)
        nv = coef * c if v is None else v + coef * c
        if nv:
            target[k] = nv
        elif v is not None:
            del target[k]


def scale(v: dict, coef) -> dict:
    if not coef:
        return {}
    return {k: coef * c for k, c in v.items()}


class Echelon:
    """Incrementally built row echelon form.

    Each inserted vector may carry a ``tag`` vector that undergoes the same
    row operations, which is how kernels are read off.
    """

    def __init__(self, order: Sequence[Hashable] | None = None):
        self._index = {k: i for i, k in enumerate(order)} if order is not None else None
        self.rows: dict = {}  # pivot key -> (row, tag), row[pivot] == 1

    def _pos(self, k):
        if self._index is None:
            return k
        return self._index[k]

    def reduce(self, v: dict, tag: dict | None = None):
        v = dict(v)
        tag = dict(tag) if tag is not None else None
        rows = self.rows
        while True:
            hits = [k for k in v if k in rows]
            if not hits:
                return v, tag
            k = min(hits, key=self._pos)
            c = v[k]
            row, rtag = rows[k]
            axpy(v, -c, row)
            if tag is not None:
                axpy(tag, -c, rtag)

    def add(self, v: dict, tag: dict | None = None):
        """Insert v. Returns None if v was independent, else the reduced tag."""
        r, t = self.reduce(v, tag)
        if not r:
            return t if t is not None else {}
        p = min(r, key=self._pos)
        inv = r[p].inverse()
        self.rows[p] = (scale(r, inv), scale(t, inv) if t is not None else {})
        return None

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)[0]

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(vectors: Iterable[dict]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


def kernel(images: Sequence[dict]) -> list[dict]:
    """Basis of {c : sum c_j images[j] = 0}, as dicts j -> coefficient."""
    e = Echelon()
    out = []
    for j, v in enumerate(images):
        t = e.add(v, {j: GaussianRational(1)})
        if t is not None:
            out.append(t)
    return out


def in_span(v: dict, vectors: Iterable[dict]) -> bool:
    e = Echelon()
    for w in vectors:
        e.add(w)
    return e.contains(v)


def solve(columns: Sequence[dict], rhs: dict) -> dict | None:
    """Find c with sum c_j columns[j] == rhs, or None."""
    e = Echelon()
    for j, v in enumerate(columns):
        e.add(v, {j: GaussianRational(1)})
    r, t = e.reduce(rhs, {})
    if r:
        return None
    return {j: -c for j, c in t.items()}


def is_zero_vector(v: dict) -> bool:
    return all(c == ZERO for c in v.values())
