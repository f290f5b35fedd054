"""Laurent polynomials in a group-like unitary ``Z`` and the U(1) coaction.

``H`` is spanned by group-likes ``Z^n`` (``n < 0`` meaning ``Z*^|n|``), so
the comultiplication ``Z^n -> Z^n (x) Z^n`` and antipode ``Z^n -> Z^-n``
never need to be stored: checks that use them work with the integer ``n``.
"""

from __future__ import annotations

from .combination import Combination
from .ncalg import Element, Monomial, degree_decompose, mul
from .parsing import print_expr
from .scalars import ONE, Scalar


def _z_power(n: int) -> str:
    if n == 0:
        return "1"
    base = "Z" if n > 0 else "Z'"
    return base if abs(n) == 1 else f"{base}^{abs(n)}"


class HElement(Combination):
    """Element of the Hopf algebra of U(1): ``{n: Scalar}`` meaning sum c_n Z^n."""

    __slots__ = ()

    @classmethod
    def z(cls, n: int = 1) -> "HElement":
        return cls._raw({n: ONE})

    def __mul__(self, other):
        if isinstance(other, HElement):
            return h_mul(self, other)
        return super().__mul__(other)

    def star(self) -> "HElement":
        return h_star(self)

    def __repr__(self):
        parts = [f"({c!r}) {_z_power(n)}" for n, c in sorted(self.items())]
        return f"HElement({' + '.join(parts) or '0'})"


def h_mul(g: HElement, h: HElement) -> HElement:
    return HElement._accumulate(
        (m + n, c * d) for m, c in g.items() for n, d in h.items()
    )


def h_star(h: HElement) -> HElement:
    return HElement._raw({-n: c.conj() for n, c in h.items()})


def counit(h: HElement) -> Scalar:
    """epsilon(Z^n) = 1, extended linearly."""
    out = Scalar()
    for c in h._terms.values():
        out = out + c
    return out


class TensorPH(Combination):
    """Element of P (x) H as ``{(Monomial, n): Scalar}``."""

    __slots__ = ()

    @classmethod
    def from_pair(cls, f: Element, h: HElement) -> "TensorPH":
        return cls._accumulate(((m, n), c * d) for m, c in f.items() for n, d in h.items())

    def __mul__(self, other):
        if isinstance(other, TensorPH):
            acc = []
            for (m1, n1), c1 in self.items():
                for (m2, n2), c2 in other.items():
                    prod = mul(Element._raw({m1: c1}), Element._raw({m2: c2}))
                    acc.extend(((m, n1 + n2), c) for m, c in prod.items())
            return TensorPH._accumulate(acc)
        return super().__mul__(other)

    def star(self) -> "TensorPH":
        from .ncalg import star

        acc = []
        for (m, n), c in self.items():
            acc.extend(((mm, -n), cc) for mm, cc in star(Element._raw({m: c})).items())
        return TensorPH._accumulate(acc)

    def legs(self) -> dict:
        """Group by Z-power: ``{n: Element}``."""
        out: dict = {}
        for (m, n), c in self.items():
            out.setdefault(n, {})[m] = c
        return {n: Element._raw(out[n]) for n in sorted(out)}

    def __str__(self):
        parts = [f"({print_expr(f)}) (x) {_z_power(n)}" for n, f in self.legs().items()]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TensorPH({self})"


def coact(f: Element) -> TensorPH:
    """Delta_R(f) = sum_n f_n (x) Z^n over the degree components of f."""
    return TensorPH._raw({(m, d): c for d, part in degree_decompose(f).items() for m, c in part.items()})


def tensor(f: Element, n: int) -> TensorPH:
    """``f (x) Z^n``."""
    return TensorPH._raw({(m, n): c for m, c in f.items()})


def monomial_tensor(m: Monomial, n: int) -> TensorPH:
    return TensorPH._raw({(m, n): ONE})
