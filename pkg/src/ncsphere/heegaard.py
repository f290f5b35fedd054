"""Polynomial models of the two quantum solid tori glued along a quantum torus.

Orientation ``+1`` is D_theta: normal ``y``, unitary ``v`` with
``v y = lam y v``.  Orientation ``-1`` is D_{-theta}: normal ``x``, unitary
``u`` with ``u x = lam^-1 x u``.  Normal forms are ``y^p y*^q v^k``
(``p, q >= 0``, ``k`` any integer).  The boundary tori carry ``U, V`` with
``V U = lam^(+-1) U V`` and normal form ``U^m V^n``.

The boundary map sends the normal generator to ``U`` and the unitary to
``V``; since the normal generator becomes unitary on the boundary, its star
goes to ``U^-1``.  The gluing map exchanges the two torus generators.
Operator norm conditions have no polynomial counterpart and are not checked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .combination import Combination
from .report import Report
from .scalars import ONE, Scalar

PLUS, MINUS = 1, -1


class OrientationError(ValueError):
    pass


def _same(o1: int, o2: int) -> int:
    if o1 != o2:
        raise OrientationError(f"orientation mismatch: {o1:+d} vs {o2:+d}")
    return o1


class DTorusElement(Combination):
    """Solid-torus element ``{(p, q, k): Scalar}``; ``orientation`` is +1 or -1."""

    __slots__ = ("orientation",)

    def __init__(self, orientation: int, terms=None):
        super().__init__(terms)
        for p, q, k in self._terms:
            if p < 0 or q < 0:
                raise ValueError("the normal generator is not invertible")
        self.orientation = orientation

    @classmethod
    def _make(cls, orientation: int, terms: dict) -> "DTorusElement":
        obj = cls._raw(terms)
        obj.orientation = orientation
        return obj

    @classmethod
    def _accumulate_o(cls, orientation: int, pairs) -> "DTorusElement":
        obj = cls._accumulate(pairs)
        obj.orientation = orientation
        return obj

    def _check(self, other):
        super()._check(other)
        _same(self.orientation, other.orientation)

    def __add__(self, other):
        out = super().__add__(other)
        out.orientation = self.orientation
        return out

    def __neg__(self):
        out = super().__neg__()
        out.orientation = self.orientation
        return out

    def scale(self, c):
        out = super().scale(c)
        out.orientation = self.orientation
        return out

    def __mul__(self, other):
        if isinstance(other, DTorusElement):
            return d_mul(self, other)
        return super().__mul__(other)

    def star(self) -> "DTorusElement":
        return d_star(self)

    def __eq__(self, other):
        if isinstance(other, DTorusElement) and other.orientation != self.orientation:
            return False
        return super().__eq__(other)

    __hash__ = Combination.__hash__

    def __repr__(self):
        return f"DTorusElement({self.orientation:+d}, {dict(sorted(self._terms.items()))})"


def d_mul(f: DTorusElement, g: DTorusElement) -> DTorusElement:
    o = _same(f.orientation, g.orientation)
    # v^k y^p y*^q = lam^(o k (p - q)) y^p y*^q v^k
    return DTorusElement._accumulate_o(
        o,
        (((p1 + p2, q1 + q2, k1 + k2), (c1 * c2).shift(o * k1 * (p2 - q2)))
         for (p1, q1, k1), c1 in f.items() for (p2, q2, k2), c2 in g.items()),
    )


def d_star(f: DTorusElement) -> DTorusElement:
    o = f.orientation
    # (y^p y*^q v^k)* = v^-k y^q y*^p
    return DTorusElement._accumulate_o(
        o, (((q, p, -k), c.conj().shift(o * (-k) * (q - p))) for (p, q, k), c in f.items())
    )


_D_LETTERS = {"n": (1, 0, 0), "n'": (0, 1, 0), "w": (0, 0, 1), "w'": (0, 0, -1)}


def d_generator(orientation: int, letter: str) -> DTorusElement:
    """``letter`` in {"n", "n'", "w", "w'"}: normal generator, its star, unitary, its inverse.
    Aliases: y/x for the normal generator, v/u for the unitary."""
    alias = {"y": "n", "x": "n", "v": "w", "u": "w"}
    base = letter.rstrip("'*")
    key = alias.get(base, base) + ("'" if letter != base else "")
    return DTorusElement._make(orientation, {_D_LETTERS[key]: ONE})


def d_normalize(orientation: int, word, coeff=ONE) -> DTorusElement:
    """Normal form of a word of letters (see :func:`d_generator`)."""
    out = DTorusElement._make(orientation, {(0, 0, 0): Scalar.coerce(coeff)})
    for letter in word:
        out = out * d_generator(orientation, letter)
    return out


def d_one(orientation: int) -> DTorusElement:
    return DTorusElement._make(orientation, {(0, 0, 0): ONE})


class ATorusElement(Combination):
    """Quantum torus element ``{(m, n): Scalar}`` meaning sum c U^m V^n."""

    __slots__ = ("orientation",)

    def __init__(self, orientation: int, terms=None):
        super().__init__(terms)
        self.orientation = orientation

    @classmethod
    def _make(cls, orientation, terms):
        obj = cls._raw(terms)
        obj.orientation = orientation
        return obj

    @classmethod
    def _accumulate_o(cls, orientation, pairs):
        obj = cls._accumulate(pairs)
        obj.orientation = orientation
        return obj

    def _check(self, other):
        super()._check(other)
        _same(self.orientation, other.orientation)

    def __add__(self, other):
        out = super().__add__(other)
        out.orientation = self.orientation
        return out

    def __neg__(self):
        out = super().__neg__()
        out.orientation = self.orientation
        return out

    def scale(self, c):
        out = super().scale(c)
        out.orientation = self.orientation
        return out

    def __mul__(self, other):
        if isinstance(other, ATorusElement):
            return a_mul(self, other)
        return super().__mul__(other)

    def star(self) -> "ATorusElement":
        o = self.orientation
        # (U^m V^n)* = V^-n U^-m = lam^(o n m) U^-m V^-n
        return ATorusElement._accumulate_o(o, (((-m, -n), c.conj().shift(o * n * m)) for (m, n), c in self.items()))

    def __eq__(self, other):
        if isinstance(other, ATorusElement) and other.orientation != self.orientation:
            return False
        return super().__eq__(other)

    __hash__ = Combination.__hash__

    def __repr__(self):
        return f"ATorusElement({self.orientation:+d}, {dict(sorted(self._terms.items()))})"


def a_mul(f: ATorusElement, g: ATorusElement) -> ATorusElement:
    o = _same(f.orientation, g.orientation)
    # V^n U^m = lam^(o n m) U^m V^n
    return ATorusElement._accumulate_o(
        o,
        (((m1 + m2, n1 + n2), (c1 * c2).shift(o * n1 * m2)) for (m1, n1), c1 in f.items() for (m2, n2), c2 in g.items()),
    )


def a_generator(orientation: int, name: str) -> ATorusElement:
    """``name`` in {"U", "V", "U'", "V'"} (primes are inverses)."""
    m, n = {"U": (1, 0), "V": (0, 1), "U'": (-1, 0), "V'": (0, -1)}[name]
    return ATorusElement._make(orientation, {(m, n): ONE})


def pi_theta(d: DTorusElement) -> ATorusElement:
    """Boundary restriction: normal generator -> U, its star -> U^-1, unitary -> V."""
    return ATorusElement._accumulate_o(d.orientation, (((p - q, k), c) for (p, q, k), c in d.items()))


def rho_theta(t: ATorusElement) -> ATorusElement:
    """Gluing map A_{-theta} -> A_theta exchanging the generators: U-hat -> V, V-hat -> U."""
    if t.orientation != MINUS:
        raise OrientationError("rho_theta is defined on the -theta torus")
    # U-hat^m V-hat^n -> V^m U^n = lam^(m n) U^n V^m
    return ATorusElement._accumulate_o(PLUS, (((n, m), c.shift(m * n)) for (m, n), c in t.items()))


@dataclass(frozen=True)
class PairElement:
    left: DTorusElement  # -theta
    right: DTorusElement  # +theta

    def __post_init__(self):
        if self.left.orientation != MINUS or self.right.orientation != PLUS:
            raise OrientationError("pairs are (D_-theta, D_theta)")

    def __mul__(self, other):
        if isinstance(other, PairElement):
            return PairElement(self.left * other.left, self.right * other.right)
        return PairElement(self.left.scale(other), self.right.scale(other))

    __rmul__ = __mul__

    def __add__(self, other):
        return PairElement(self.left + other.left, self.right + other.right)

    def __sub__(self, other):
        return PairElement(self.left - other.left, self.right - other.right)

    def star(self) -> "PairElement":
        return PairElement(self.left.star(), self.right.star())

    def is_zero(self) -> bool:
        return self.left.is_zero() and self.right.is_zero()

    def is_compatible(self) -> bool:
        return rho_theta(pi_theta(self.left)) == pi_theta(self.right)


def pair_one() -> PairElement:
    return PairElement(d_one(MINUS), d_one(PLUS))


def sphere_generators() -> tuple:
    """``S = (u, y)`` and ``T = (x, v)``."""
    S = PairElement(d_generator(MINUS, "u"), d_generator(PLUS, "y"))
    T = PairElement(d_generator(MINUS, "x"), d_generator(PLUS, "v"))
    return S, T


def verify_pair_presentation() -> Report:
    S, T = sphere_generators()
    one = pair_one()
    params = {"skipped": ["norm conditions ||S|| = ||T|| = 1 (no polynomial counterpart)"]}
    checks = {
        "compatible": S.is_compatible() and T.is_compatible(),
        "TS = lam ST": (T * S - (S * T) * Scalar.lam(1)).is_zero(),
        "(1 - TT*)(1 - S*S) = 0": ((one - T * T.star()) * (one - S.star() * S)).is_zero(),
        "normal": (S * S.star() - S.star() * S).is_zero() and (T * T.star() - T.star() * T).is_zero(),
    }
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        return Report("heegaard", params, "fail", counterexample=", ".join(failed))
    return Report("heegaard", params, "pass", dims={"checks": len(checks)})


def random_d_element(rng: random.Random, orientation: int, max_power: int = 3, max_terms: int = 4) -> DTorusElement:
    pairs = []
    for _ in range(rng.randint(0, max_terms)):
        key = (rng.randint(0, max_power), rng.randint(0, max_power), rng.randint(-max_power, max_power))
        pairs.append((key, Scalar({rng.randint(-2, 2): complex(rng.randint(-3, 3), rng.randint(-3, 3))})))
    return DTorusElement._accumulate_o(orientation, pairs)


def random_a_element(rng: random.Random, orientation: int, max_power: int = 3, max_terms: int = 4) -> ATorusElement:
    pairs = []
    for _ in range(rng.randint(0, max_terms)):
        key = (rng.randint(-max_power, max_power), rng.randint(-max_power, max_power))
        pairs.append((key, Scalar({rng.randint(-2, 2): complex(rng.randint(-3, 3), rng.randint(-3, 3))})))
    return ATorusElement._accumulate_o(orientation, pairs)


def verify_boundary_maps(samples: int = 100, seed: int = 42) -> Report:
    """pi_theta and rho_theta are *-homomorphisms on random elements, and
    products of compatible pairs stay compatible."""
    rng = random.Random(seed)
    params = {"samples": samples, "seed": seed}
    S, T = sphere_generators()
    gens = [S, T, S.star(), T.star()]
    for i in range(samples):
        for o in (PLUS, MINUS):
            f, g = random_d_element(rng, o), random_d_element(rng, o)
            if pi_theta(f * g) != pi_theta(f) * pi_theta(g) or pi_theta(f.star()) != pi_theta(f).star():
                return Report("boundary_maps", params, "fail", counterexample=f"pi_theta sample {i}, orientation {o:+d}")
        s, t = random_a_element(rng, MINUS), random_a_element(rng, MINUS)
        if rho_theta(s * t) != rho_theta(s) * rho_theta(t) or rho_theta(s.star()) != rho_theta(s).star():
            return Report("boundary_maps", params, "fail", counterexample=f"rho_theta sample {i}")
        w = pair_one()
        for _ in range(rng.randint(1, 4)):
            w = w * rng.choice(gens)
        if not w.is_compatible():
            return Report("boundary_maps", params, "fail", counterexample=f"compatible product {i} left the pullback")
    return Report("boundary_maps", params, "pass", dims={"samples": samples})
