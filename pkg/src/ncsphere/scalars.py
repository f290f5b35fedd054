"""Exact coefficient rings.

``GaussQ`` is a Gaussian rational ``re + im*i`` with ``Fraction`` parts.
``Scalar`` is a Laurent polynomial in the formal unimodular parameter
``lam`` with ``GaussQ`` coefficients.  The involution sends ``lam`` to
``lam**-1`` and ``i`` to ``-i``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

EXP_LIMIT = 2**31 - 1


class ExponentOverflowError(OverflowError):
    """An exponent left the range [-(2**31 - 1), 2**31 - 1]."""


def check_exponent(e: int, *, signed: bool = True) -> int:
    lo = -EXP_LIMIT if signed else 0
    if not lo <= e <= EXP_LIMIT:
        raise ExponentOverflowError(f"exponent {e} outside [{lo}, {EXP_LIMIT}]")
    return e


class GaussQ:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussQ":
        if isinstance(x, GaussQ):
            return x
        if isinstance(x, (int, Rational)):
            return cls(x)
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussQ")

    @classmethod
    def parse(cls, text: str) -> "GaussQ":
        """Read values such as ``"(3+4i)/5"``, ``"3/5+4/5i"``, ``"i"``, ``"-2"``."""
        s = text.replace(" ", "")
        den = Fraction(1)
        m = re.fullmatch(r"\((.+)\)/(\d+)", s)
        if m:
            s, den = m.group(1), Fraction(int(m.group(2)))
        term = r"(?:\d+(?:/\d+)?i?|i)"
        if not re.fullmatch(rf"[+-]?{term}(?:[+-]{term})*", s):
            raise ValueError(f"malformed Gaussian rational {text!r}")
        re_part = im_part = Fraction(0)
        for piece in re.findall(r"[+-]?[^+-]+", s):
            if piece.endswith("i"):
                body = piece[:-1]
                im_part += Fraction(body + "1" if body in ("", "+", "-") else body)
            else:
                re_part += Fraction(piece)
        if den == 0:
            raise ValueError("zero denominator")
        return cls(re_part / den, im_part / den)

    def __add__(self, other):
        o = GaussQ.coerce(other)
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussQ.coerce(other)
        return GaussQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussQ.coerce(other) - self

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __mul__(self, other):
        o = GaussQ.coerce(other)
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussQ.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("GaussQ division by zero")
        return self * o.conj() * GaussQ(1 / n)

    def __rtruediv__(self, other):
        return GaussQ.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return (1 / self) ** (-n)
        out, base = GaussQ(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "GaussQ":
        return GaussQ(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_unimodular(self) -> bool:
        return self.norm() == 1

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = GaussQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return f"GaussQ({self.re})"
        return f"GaussQ({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = "i" if abs(self.im) == 1 else f"{abs(self.im)}i"
        if not self.re:
            return im if self.im > 0 else "-" + im
        return f"{self.re}{'+' if self.im > 0 else '-'}{im}"


ONE_Q = GaussQ(1)
I_Q = GaussQ(0, 1)


class Scalar:
    """Laurent polynomial in ``lam`` over the Gaussian rationals.

    Instances are immutable; ``coeffs`` maps a lam-exponent to a nonzero
    ``GaussQ``.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                v = GaussQ.coerce(v)
                if v:
                    c[check_exponent(k)] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "Scalar":
        s = cls.__new__(cls)
        s._c = c
        s._hash = None
        return s

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return cls({0: GaussQ.coerce(x)})

    @classmethod
    def lam(cls, k: int = 1) -> "Scalar":
        return cls._raw({check_exponent(k): ONE_Q})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def __add__(self, other):
        o = other if isinstance(other, Scalar) else Scalar.coerce(other)
        c = dict(self._c)
        for k, v in o._c.items():
            w = c.get(k)
            if w is None:
                c[k] = v
            else:
                w = w + v
                if w:
                    c[k] = w
                else:
                    del c[k]
        return Scalar._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Rational, GaussQ, complex)):
                g = GaussQ.coerce(other)
                if not g:
                    return Scalar._raw({})
                return Scalar._raw({k: v * g for k, v in self._c.items()})
            return NotImplemented
        c: dict = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = check_exponent(k1 + k2)
                w = c.get(k)
                c[k] = v1 * v2 if w is None else w + v1 * v2
        return Scalar._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def shift(self, k: int) -> "Scalar":
        """Multiply by ``lam**k``."""
        if not k:
            return self
        return Scalar._raw({check_exponent(e + k): v for e, v in self._c.items()})

    def conj(self) -> "Scalar":
        return Scalar._raw({check_exponent(-k): v.conj() for k, v in self._c.items()})

    def specialize(self, lam0: GaussQ) -> GaussQ:
        """Value at ``lam = lam0``; ``lam0`` must be unimodular so that
        negative powers are conjugates."""
        inv = lam0.conj() if lam0.is_unimodular() else 1 / lam0
        out = GaussQ(0)
        for k, v in self._c.items():
            out = out + v * (lam0**k if k >= 0 else inv ** (-k))
        return out

    def at_one(self) -> complex:
        """Value at ``lam = 1`` as a complex float."""
        re = sum((v.re for v in self._c.values()), Fraction(0))
        im = sum((v.im for v in self._c.values()), Fraction(0))
        return complex(float(re), float(im))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._c == other._c
        try:
            return self._c == Scalar.coerce(other)._c
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"Scalar({{{', '.join(f'{k}: {v!s}' for k, v in self.items())}}})"


ZERO = Scalar._raw({})
ONE = Scalar._raw({0: ONE_Q})
LAM = Scalar.lam(1)
LAM_INV = Scalar.lam(-1)
I = Scalar._raw({0: I_Q})
