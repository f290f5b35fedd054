"""Finitely supported linear combinations with ``Scalar`` coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .scalars import GaussQ, Scalar

_SCALARLIKE = (Scalar, int, Rational, GaussQ, complex)


class Combination:
    """Immutable mapping ``key -> Scalar`` with zero coefficients dropped.

    Subclasses fix the meaning of the keys and may define an algebra
    product; ``*`` with a scalar-like operand always scales.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, v in dict(terms).items():
                v = Scalar.coerce(v)
                if v:
                    t[k] = v
        self._terms = t
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def _accumulate(cls, pairs):
        """Build from an iterable of ``(key, Scalar)`` pairs, summing repeats."""
        acc: dict = {}
        for k, v in pairs:
            w = acc.get(k)
            acc[k] = v if w is None else w + v
        return cls._raw({k: v for k, v in acc.items() if v})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coeff(self, key) -> Scalar:
        return self._terms.get(key, Scalar._raw({}))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        self._check(other)
        t = dict(self._terms)
        for k, v in other._terms.items():
            w = t.get(k)
            if w is None:
                t[k] = v
            else:
                w = w + v
                if w:
                    t[k] = w
                else:
                    del t[k]
        return type(self)._raw(t)

    def __neg__(self):
        return type(self)._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Scalar.coerce(c)
        if not c:
            return type(self)._raw({})
        t = {k: v * c for k, v in self._terms.items()}
        return type(self)._raw({k: v for k, v in t.items() if v})

    def __mul__(self, other):
        if isinstance(other, _SCALARLIKE):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALARLIKE):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if type(other) is not type(self):
            if isinstance(other, (int, Fraction)) and other == 0:
                return not self._terms
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def specialize(self, lam0: GaussQ) -> dict:
        """Coefficients evaluated at ``lam = lam0`` (zero entries dropped)."""
        out = {}
        for k, v in self._terms.items():
            g = v.specialize(lam0)
            if g:
                out[k] = g
        return out
