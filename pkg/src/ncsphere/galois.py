"""The canonical Galois map, its inverse, the translation map and their checks.

``TensorPP`` is the plain tensor square P (x) P over the scalars.  The
balanced tensor product over the coinvariant subalgebra B is never stored;
equality there is decided either by comparing :func:`reduce_right_leg`
normal forms or, when those differ, by an exact membership test in the
relation space

    W = span{ (p beta) (x) q - p (x) (beta q) : beta in {z, x+, x-} }

after specializing ``lam`` to a unimodular Gaussian rational.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .combination import Combination
from .hopf import TensorPH, monomial_tensor, tensor
from .linalg import EchelonBasis, kernel
from .ncalg import (
    ONE_MONO,
    Element,
    Monomial,
    a_star,
    all_monomials,
    b,
    degree_decompose,
    mul,
    normalize,
    one,
    x_minus,
    x_plus,
    z,
)
from .parsing import print_expr
from .report import Report
from .scalars import ONE, GaussQ, Scalar

DEFAULT_LAMBDA = GaussQ(3, 4) / 5
DEFAULT_PADDING = 2
MAX_TRUNCATION = 8
B_GENERATORS = (("z", z), ("x+", x_plus), ("x-", x_minus))


class TruncationOverflowError(ValueError):
    """Requested truncation exceeds the configured bound."""


class TensorPP(Combination):
    """Element of P (x) P as ``{(Monomial, Monomial): Scalar}``."""

    __slots__ = ()

    @classmethod
    def from_pair(cls, f: Element, g: Element) -> "TensorPP":
        return cls._accumulate(((m1, m2), c1 * c2) for m1, c1 in f.items() for m2, c2 in g.items())

    def left_mul(self, f: Element) -> "TensorPP":
        """``(f (x) 1) * t``."""
        acc = []
        for (m1, m2), c in self.items():
            for m, cc in mul(f, Element._raw({m1: c})).items():
                acc.append(((m, m2), cc))
        return TensorPP._accumulate(acc)

    def mu(self) -> Element:
        """Multiply the two legs."""
        return Element._accumulate(
            (m, cc) for (m1, m2), c in self.items() for m, cc in _mono_prod(m1, m2, c).items()
        )

    def by_right_leg(self) -> dict:
        out: dict = {}
        for (m1, m2), c in self.items():
            out.setdefault(m2, {})[m1] = c
        return {m2: Element._raw(out[m2]) for m2 in sorted(out, key=Monomial.sort_key)}

    def __str__(self):
        parts = [f"({print_expr(left)}) (x) {print_expr(Element.monomial(m2))}" for m2, left in self.by_right_leg().items()]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TensorPP({self})"


def _mono_prod(m1: Monomial, m2: Monomial, c: Scalar = ONE) -> Element:
    return mul(Element._raw({m1: c}), Element._raw({m2: ONE}))


def pair(m1: Monomial, m2: Monomial, c: Scalar = ONE) -> TensorPP:
    return TensorPP._raw({(m1, m2): c})


# --- can, chi, ell ---------------------------------------------------------------


def can_lift(t: TensorPP) -> TensorPH:
    """f (x) g  ->  f Delta_R(g) = sum_n f g_n (x) Z^n."""
    acc = []
    for (m1, m2), c in t.items():
        n = m2.degree
        acc.extend(((m, n), cc) for m, cc in _mono_prod(m1, m2, c).items())
    return TensorPH._accumulate(acc)


@lru_cache(maxsize=None)
def _chi_legs(n: int) -> tuple:
    """``((Monomial left, Monomial right, Scalar), ...)`` with chi(1 (x) Z^n) = sum c left (x) right."""
    k = abs(n)
    out = []
    for m in range(k + 1):
        c = Scalar.lam(-m * (k - m)) * comb(k, m)
        unstarred = Monomial(k - m, 0, m, 0)
        starred = Monomial(0, k - m, 0, m)
        left, right = (starred, unstarred) if n >= 0 else (unstarred, starred)
        out.append((left, right, c))
    return tuple(out)


def chi(t: TensorPH) -> TensorPP:
    """Candidate inverse of can: f (x) Z^n -> sum_m lam^{-m(n-m)} C(n,m) f a*^{n-m} b*^m (x) a^{n-m} b^m,
    and the starred formula for Z*^n."""
    acc = []
    for (m0, n), c0 in t.items():
        for left, right, c in _chi_legs(n):
            for m, cc in _mono_prod(m0, left, c0 * c).items():
                acc.append(((m, right), cc))
    return TensorPP._accumulate(acc)


@lru_cache(maxsize=None)
def ell_terms(n: int) -> tuple:
    """The translation map as ordered legs ``((l_0, r_0), ..., (l_k, r_k))``.

    Index ``m`` runs over ascending powers of ``b``; the binomial weight
    ``C(|n|, m)`` sits on the left leg.  For ``n >= 0`` the left leg is
    ``(a^{n-m} b^m)*`` and the right leg ``a^{n-m} b^m``; for ``n < 0`` the
    star moves to the right leg.
    """
    k = abs(n)
    out = []
    for m in range(k + 1):
        w = normalize((0,) * (k - m) + (2,) * m)
        ws = w.star()
        l, r = (ws, w) if n >= 0 else (w, ws)
        out.append((l.scale(comb(k, m)), r))
    return tuple(out)


def ell(n: int) -> TensorPP:
    acc = TensorPP()
    for l, r in ell_terms(n):
        acc = acc + TensorPP.from_pair(l, r)
    return acc


# --- reduction of right legs ------------------------------------------------------


@lru_cache(maxsize=None)
def factor_right(w: Monomial) -> tuple:
    """Factor ``w = c * beta * s`` with ``beta`` in B and ``s`` of the form
    ``a^m b^n`` or ``a*^m b*^n``.  Returns ``(c, beta, s)``.

    Strips ``z = aa*`` first, then as many ``a*b`` (or ``ab*``) factors as
    the residual allows.  ``c`` is a pure lam-power.
    """
    p, q, r, s = w
    j = min(p, q)
    p1, q1 = p - j, q - j
    if q1 and r:
        k = min(q1, r)
        beta = (a_star * b) ** k
        resid = Monomial(0, q1 - k, r - k, 0)
    elif p1 and s:
        k = min(p1, s)
        beta = (a_star * b).star() ** k
        resid = Monomial(p1 - k, 0, 0, s - k)
    else:
        beta = one
        resid = Monomial(p1, q1, r, s)
    beta = z**j * beta
    prod = beta * Element.monomial(resid)
    ((mono, phase),) = prod.items()
    assert mono == w and phase.is_monomial(), (w, prod)
    ((e, g),) = phase.items()
    assert g == GaussQ(1)
    return Scalar.lam(-e), beta, resid


def reduce_right_leg(t: TensorPP) -> TensorPP:
    """Slide B-factors of every right leg onto the left leg."""
    acc = []
    for (m1, m2), c in t.items():
        cf, beta, resid = factor_right(m2)
        for m, cc in mul(Element._raw({m1: c * cf}), beta).items():
            acc.append(((m, resid), cc))
    return TensorPP._accumulate(acc)


def spanning_family(max_length: int) -> list:
    """Monomials ``a^m b^n, a^m b*^n, a*^m b^n, a*^m b*^n`` up to the given length."""
    return [m for m in all_monomials(max_length) if m.p == 0 or m.q == 0]


# --- relation space W and membership ----------------------------------------------


def check_lambda(lam0) -> GaussQ:
    g = GaussQ.parse(lam0) if isinstance(lam0, str) else GaussQ.coerce(lam0)
    if not g.is_unimodular():
        raise ValueError(f"lambda0 = {g} is not exactly unimodular (|lambda0|^2 = {g.norm()})")
    return g


def root_of_unity_order(g: GaussQ, max_order: int = 24):
    """Smallest ``k <= max_order`` with ``g**k == 1``, else ``None``."""
    x = g
    for k in range(1, max_order + 1):
        if x == 1:
            return k
        x = x * g
    return None


def relation_generators(max_total: int, bidegree=None):
    """Yield ``(label, TensorPP)`` for the generators of W whose terms all have
    total length ``<= max_total`` (restricted to one bidegree if given)."""
    monos = all_monomials(max_total)
    for p in monos:
        if bidegree is not None and p.degree != bidegree[0]:
            continue
        for q in monos:
            if p.length + q.length > max_total:
                break
            if bidegree is not None and q.degree != bidegree[1]:
                continue
            for name, beta in B_GENERATORS:
                pb = _mono_times(p, beta, left=True)
                bq = _mono_times(q, beta, left=False)
                vec = TensorPP.from_pair(pb, Element.monomial(q)) - TensorPP.from_pair(Element.monomial(p), bq)
                if vec and max(m1.length + m2.length for m1, m2 in vec.keys()) <= max_total:
                    yield (p, name, q), vec


@lru_cache(maxsize=1 << 14)
def _mono_times(m: Monomial, beta_name_or_elem, left: bool) -> Element:
    beta = beta_name_or_elem
    e = Element.monomial(m)
    return e * beta if left else beta * e


class RelationSpace:
    """Echelon bases of W (specialized at ``lam0``) cached per bidegree and length bound."""

    def __init__(self, lam0: GaussQ):
        self.lam0 = lam0
        self._bases: dict = {}

    def basis(self, bidegree: tuple, max_total: int) -> EchelonBasis:
        key = (bidegree, max_total)
        if key not in self._bases:
            eb = EchelonBasis()
            for _, vec in relation_generators(max_total, bidegree):
                eb.add(vec.specialize(self.lam0))
            self._bases[key] = eb
        return self._bases[key]

    def contains(self, t: TensorPP, max_total: int) -> bool:
        """Is ``t`` (formal) in W, using generators up to ``max_total``?"""
        blocks: dict = {}
        for (m1, m2), c in t.items():
            blocks.setdefault((m1.degree, m2.degree), {})[(m1, m2)] = c
        for bideg, terms in blocks.items():
            vec = TensorPP._raw(terms).specialize(self.lam0)
            if vec and not self.basis(bideg, max_total).contains(vec):
                return False
        return True


def _max_total(t: TensorPP) -> int:
    return max((m1.length + m2.length for m1, m2 in t.keys()), default=0)


# --- verification suites ------------------------------------------------------------


def verify_translation(N: int, max_charge: int | None = None) -> Report:
    """can(chi(m (x) Z^n)) = m (x) Z^n for normal m of length <= N, |n| <= max_charge,
    and mu(ell(n)) = 1 for |n| <= max_charge."""
    if N < 1:
        raise ValueError("N must be >= 1")
    M = N if max_charge is None else max_charge
    params = {"N": N, "max_charge": M}
    monos = all_monomials(N)
    checked = 0
    for n in range(-M, M + 1):
        if ell(n).mu() != one:
            return Report("translation", params, "fail", counterexample=f"mu(ell({n})) != 1")
        for m in monos:
            t = monomial_tensor(m, n)
            back = can_lift(chi(t))
            checked += 1
            if back != t:
                return Report("translation", params, "fail", counterexample=f"can(chi({t})) = {back}")
    return Report("translation", params, "pass", dims={"pairs_checked": checked})


def verify_chi_can(N: int, lam0=DEFAULT_LAMBDA, padding: int = DEFAULT_PADDING) -> Report:
    """chi(can(1 (x) s)) = 1 (x) s in P (x)_B P for s in the spanning family."""
    if N < 1:
        raise ValueError("N must be >= 1")
    lam0 = check_lambda(lam0)
    params = {"N": N, "lambda0": str(lam0), "padding": padding}
    space = RelationSpace(lam0)
    direct = escalated = 0
    unresolved = []
    for s in spanning_family(N):
        src = pair(ONE_MONO, s)
        back = chi(can_lift(src))
        if reduce_right_leg(back) == reduce_right_leg(src):
            direct += 1
            continue
        escalated += 1
        diff = back - src
        if not space.contains(diff, _max_total(diff) + padding):
            unresolved.append(print_expr(Element.monomial(s)))
    dims = {"family": direct + escalated, "direct": direct, "escalated": escalated, "unresolved": len(unresolved)}
    if unresolved:
        return Report("chi_can", params, "inconclusive", dims=dims, counterexample="s = " + ", ".join(unresolved))
    return Report("chi_can", params, "pass", dims=dims)


def _pairs_by_bidegree(max_total: int) -> dict:
    monos = all_monomials(max_total)
    blocks: dict = {}
    for m1 in monos:
        for m2 in monos:
            if m1.length + m2.length > max_total:
                break
            blocks.setdefault((m1.degree, m2.degree), []).append((m1, m2))
    return dict(sorted(blocks.items()))


def kernel_certificate(
    N: int,
    lam0=DEFAULT_LAMBDA,
    padding: int = DEFAULT_PADDING,
    max_truncation: int = MAX_TRUNCATION,
) -> Report:
    """Exact check that ker(can) on the length-N truncation of P (x) P lies in W.

    Works one bidegree (deg left leg, deg right leg) at a time; can and W
    both preserve the bidegree.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    if N > max_truncation:
        raise TruncationOverflowError(f"N = {N} exceeds the truncation bound {max_truncation}")
    lam0 = check_lambda(lam0)
    order = root_of_unity_order(lam0)
    params = {"N": N, "lambda0": str(lam0), "padding": padding, "generic": order is None}
    if order is not None:
        params["root_of_unity_order"] = order
    space = RelationSpace(lam0)
    dims = {"truncation": 0, "image_rank": 0, "kernel": 0, "w_truncated": 0, "w_padded": 0, "kernel_in_w": 0}
    missing = None
    for bideg, pairs in _pairs_by_bidegree(N).items():
        dims["truncation"] += len(pairs)
        images = []
        for m1, m2 in pairs:
            img = can_lift(pair(m1, m2)).specialize(lam0)
            images.append(img)
        ker = kernel(images)
        dims["kernel"] += len(ker)
        dims["image_rank"] += len(pairs) - len(ker)
        w_trunc = EchelonBasis()
        for label, vec in relation_generators(N, bideg):
            if can_lift(vec):
                return Report("kernel_certificate", params, "fail", dims=dims,
                              counterexample=f"can does not vanish on relation {label}")
            w_trunc.add(vec.specialize(lam0))
        dims["w_truncated"] += w_trunc.rank
        w_pad = space.basis(bideg, N + padding)
        dims["w_padded"] += w_pad.rank
        for kv in ker:
            vec = {pairs[j]: c for j, c in kv.items()}
            if w_pad.contains(vec):
                dims["kernel_in_w"] += 1
            elif missing is None:
                missing = " + ".join(f"({c}) {print_expr(Element.monomial(pairs[j][0]))} (x) "
                                     f"{print_expr(Element.monomial(pairs[j][1]))}" for j, c in sorted(kv.items()))
    if dims["w_truncated"] > dims["kernel"]:
        return Report("kernel_certificate", params, "fail", dims=dims,
                      counterexample="relation space larger than kernel")
    if missing is not None:
        return Report("kernel_certificate", params, "inconclusive", dims=dims,
                      counterexample=f"kernel vector outside padded W: {missing}")
    return Report("kernel_certificate", params, "pass", dims=dims)
