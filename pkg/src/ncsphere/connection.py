"""The strong connection s: P -> B (x) P and checks of its defining properties."""

from __future__ import annotations

import random

from .galois import TensorPP, ell_terms
from .ncalg import ONE_MONO, Element, Monomial, all_monomials, degree_decompose, one, x_minus, x_plus, z
from .parsing import print_expr
from .report import Report
from .scalars import Scalar


def strong_s(f: Element) -> TensorPP:
    """s(f) = sum_n (f_n (x) 1) ell(n) over the degree components f_n of f."""
    acc = TensorPP()
    for n, fn in degree_decompose(f).items():
        for l, r in ell_terms(n):
            acc = acc + TensorPP.from_pair(fn * l, r)
    return acc


def colinearity_triples(t: TensorPP, attach=None) -> dict:
    """``{(left, right, k): coeff}``; ``k`` is ``attach`` or, if None, the degree
    of the right leg (i.e. id (x) Delta_R on a group-like basis)."""
    return {(m1, m2, m2.degree if attach is None else attach): c for (m1, m2), c in t.items()}


def _random_homogeneous(rng: random.Random, max_length: int) -> Element:
    monos = all_monomials(max_length)
    d = rng.choice(monos).degree
    same = [m for m in monos if m.degree == d]
    pairs = []
    for _ in range(rng.randint(1, 3)):
        c = Scalar({rng.randint(-2, 2): complex(rng.randint(-3, 3), rng.randint(-3, 3))})
        pairs.append((rng.choice(same), c))
    f = Element._accumulate(pairs)
    return f if f else Element.monomial(rng.choice(same))


def _random_b_word(rng: random.Random, max_factors: int = 3) -> Element:
    out = one
    for _ in range(rng.randint(0, max_factors)):
        out = out * rng.choice((z, x_plus, x_minus))
    return out


def verify_connection(N: int, samples: int, seed: int = 42) -> Report:
    if N < 1 or samples < 1:
        raise ValueError("N and samples must be positive")
    params = {"N": N, "samples": samples, "seed": seed}

    def fail(msg):
        return Report("connection", params, "fail", counterexample=msg)

    if strong_s(one) != TensorPP.from_pair(one, one):
        return fail("s(1) != 1 (x) 1")
    monos = all_monomials(N)
    for m in monos:
        f = Element.monomial(m)
        if strong_s(f).mu() != f:
            return fail(f"mu(s({print_expr(f)})) != {print_expr(f)}")
    rng = random.Random(seed)
    for _ in range(samples):
        beta = _random_b_word(rng)
        f = _random_homogeneous(rng, N)
        sf = strong_s(f)
        if strong_s(beta * f) != sf.left_mul(beta):
            return fail(f"s(beta f) != (beta (x) 1) s(f) for beta = {print_expr(beta)}, f = {print_expr(f)}")
        (n,) = f.degrees()
        for (m1, m2) in sf.keys():
            if m1.degree != 0:
                return fail(f"left leg {print_expr(Element.monomial(m1))} of s({print_expr(f)}) not in B")
            if m1.degree + m2.degree != n:
                return fail(f"degree imbalance in s({print_expr(f)})")
        # (id (x) Delta_R) s(f)  vs  (s (x) id) Delta_R(f) = s(f) (x) Z^n
        if colinearity_triples(sf) != colinearity_triples(sf, attach=n):
            return fail(f"s not colinear on {print_expr(f)}")
    return Report("connection", params, "pass", dims={"monomials": len(monos), "samples": samples})
