"""Exact sparse Gaussian elimination over the Gaussian rationals.

Vectors are dicts ``column -> GaussQ`` with integer columns.  Pivots are
always the smallest column of a row, so results do not depend on anything
but the insertion order of the rows.
"""

from __future__ import annotations

from .scalars import GaussQ


def _axpy(y: dict, a: GaussQ, x: dict) -> None:
    """In place ``y -= a * x``, dropping zeros."""
    for k, v in x.items():
        w = y.get(k)
        nv = -(a * v) if w is None else w - a * v
        if nv:
            y[k] = nv
        elif w is not None:
            del y[k]


class EchelonBasis:
    """Incrementally built row-echelon basis of a subspace.

    With ``track=True`` every stored row also remembers which combination
    of the inserted vectors produced it, which is what :func:`kernel`
    uses to read off linear dependencies.
    """

    def __init__(self, track: bool = False):
        self.rows: dict = {}  # pivot column -> (row, combo)
        self.track = track
        self.inserted = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict, combo: dict | None = None):
        v = dict(vec)
        c = dict(combo) if combo is not None else None
        while v:
            col = min(v)
            hit = self.rows.get(col)
            if hit is None:
                break
            row, rcombo = hit
            f = v[col]
            _axpy(v, f, row)
            if c is not None and rcombo is not None:
                _axpy(c, f, rcombo)
        return v, c

    def add(self, vec: dict):
        """Insert a vector; return the dependency combo if it was already in the span."""
        idx = self.inserted
        self.inserted += 1
        combo = {idx: GaussQ(1)} if self.track else None
        v, c = self.reduce(vec, combo)
        if not v:
            return c if self.track else {}
        col = min(v)
        inv = 1 / v[col]
        v = {k: x * inv for k, x in v.items()}
        if c is not None:
            c = {k: x * inv for k, x in c.items()}
        self.rows[col] = (v, c)
        return None

    def contains(self, vec: dict) -> bool:
        v, _ = self.reduce(vec)
        return not v


def rank(vectors) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return basis.rank


def kernel(columns: list) -> list:
    """Basis of ``{x : sum_j x_j * columns[j] = 0}`` as dicts ``j -> GaussQ``."""
    basis = EchelonBasis(track=True)
    out = []
    for col in columns:
        dep = basis.add(col)
        if dep is not None:
            out.append(dep)
    return out
