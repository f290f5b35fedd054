import random
from math import cos, pi, sin

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncsphere.ncalg import (
    RULES,
    Element,
    Monomial,
    NotCoinvariantError,
    a,
    a_star,
    all_monomials,
    b,
    b_star,
    degree_decompose,
    eval_classical,
    is_coinvariant,
    lam,
    mul,
    normalize,
    one,
    redexes,
    renormalize,
    rewrite,
    star,
    termination_measure,
    x_minus,
    x_plus,
    z,
    zero,
)
from ncsphere.scalars import LAM, LAM_INV, ExponentOverflowError, Scalar

from tests.strategies import elements, words

M = Monomial


def mono(p=0, q=0, r=0, s=0, c=1):
    return Element.monomial(M(p, q, r, s), Scalar.coerce(c))


# --- normalize ----------------------------------------------------------------


def test_ba():
    assert normalize("b a") == mono(1, 0, 1, 0, LAM_INV)


def test_bbstar():
    assert normalize("b b'") == one - mono(1, 1)


def test_astar_a():
    assert normalize("a' a") == mono(1, 1)


def test_b_a_astar_bstar_is_z_minus_z_squared():
    # hand reduction: b a a* b* = lam^-1 a b a* b* = a a* b b* = z (1 - z)
    expected = mono(1, 1) - mono(2, 2)
    assert normalize("b a a' b'") == expected
    assert rewrite("b a a' b'")[0] == expected
    assert expected == z - z * z


def test_normal_monomials_shape():
    with pytest.raises(ValueError):
        M(0, 0, 1, 1)
    m = M(2, 1, 0, 1)
    assert m.degree == 0 and m.length == 4


def test_monomial_exponent_limit():
    with pytest.raises(ExponentOverflowError):
        M(2**31)
    big = mono(2**31 - 1)
    with pytest.raises(ExponentOverflowError):
        big * a


def test_monomial_count_by_length():
    for L in range(6):
        assert len(all_monomials(L, L)) == (L + 1) ** 2


# --- mul / star -----------------------------------------------------------------


def test_x_plus_x_minus():
    assert x_plus * x_minus == z - z * z


def test_unit():
    f = 2 * a + lam * b_star * a
    assert one * f == f == f * one


def test_a_astar_already_normal():
    assert a * a_star == mono(1, 1)


def test_star_examples():
    assert star(a * b) == mono(0, 1, 0, 1, LAM_INV)
    assert star(z) == z
    assert star(lam) == Element.scalar(LAM_INV)


@given(elements, elements)
def test_star_anti_homomorphism(f, g):
    assert star(f * g) == star(g) * star(f)
    assert star(star(f)) == f


@given(elements, elements, elements)
@settings(max_examples=50)
def test_associative_and_distributive(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(elements, elements)
def test_grading_multiplicative(f, g):
    sums = {d1 + d2 for d1 in f.degrees() for d2 in g.degrees()}
    assert (f * g).degrees() <= sums


@given(elements)
def test_lambda_central(f):
    assert lam * f == f * lam == f.scale(LAM)


@given(elements)
def test_normalize_idempotent(f):
    assert renormalize(f) == f


def test_relations_of_presentation():
    assert a * a_star - a_star * a == zero
    assert b * b_star - b_star * b == zero
    assert a * b - lam * b * a == zero
    assert a * b_star - Element.scalar(LAM_INV) * b_star * a == zero
    assert a * a_star + b * b_star == one


def test_z_is_central():
    for g in (a, a_star, b, b_star):
        assert z * g == g * z


def test_b_commutative():
    rng = random.Random(7)
    gens = (z, x_plus, x_minus)
    for _ in range(100):
        f = g = one
        for _ in range(rng.randint(0, 6)):
            f = f * rng.choice(gens)
        for _ in range(rng.randint(0, 6)):
            g = g * rng.choice(gens)
        assert f * g == g * f


def test_sphere_relation():
    assert z * z + x_plus * x_minus - z == zero


# --- rewriting engine ---------------------------------------------------------------


@given(words, st.integers(0, 2**32))
def test_random_rule_order_agrees_with_closed_form(w, seed):
    got, _ = rewrite(w, rng=random.Random(seed))
    assert got == normalize(w)


@given(words)
def test_each_rule_decreases_measure(w):
    for i in redexes(w):
        for _, _, rep in RULES[(w[i], w[i + 1])]:
            assert termination_measure(w[:i] + rep + w[i + 2 :]) < termination_measure(w)


def test_step_bound_enforced():
    with pytest.raises(RuntimeError):
        rewrite("b b' a", step_bound=1)


def test_irreducible_words_are_normal_monomials():
    for m in all_monomials(4):
        assert redexes(m.word()) == []


# --- grading -----------------------------------------------------------------------


def test_degree_decompose_examples():
    assert degree_decompose(mono(2, 0, 0, 1)) == {1: mono(2, 0, 0, 1)}
    assert degree_decompose(z + a) == {0: z, 1: a}
    assert degree_decompose(one) == {0: one}


@given(elements)
def test_degree_components_sum_back(f):
    parts = degree_decompose(f)
    total = zero
    for d, part in parts.items():
        assert part.degrees() == {d}
        total = total + part
    assert total == f


def test_is_coinvariant_examples():
    assert is_coinvariant(z) and is_coinvariant(x_plus)
    assert not is_coinvariant(a)
    assert is_coinvariant(zero)


# --- classical evaluation -------------------------------------------------------------


def test_eval_z_north_pole():
    for psi in (0.0, 1.0, 4.0):
        assert eval_classical(z, 0.0, psi) == pytest.approx(1.0)


def test_eval_x_minus_equator():
    assert eval_classical(x_minus, pi / 2, 0.0) == pytest.approx(0.5)


def test_eval_sphere_relation_random_points():
    rng = np.random.default_rng(0)
    th = rng.uniform(0, pi, 50)
    ps = rng.uniform(0, 2 * pi, 50)
    val = eval_classical(z * z + x_plus * x_minus - z, th, ps)
    assert np.abs(val).max() == 0.0
    zz = eval_classical(z, th, ps)
    xp = eval_classical(x_plus, th, ps)
    xm = eval_classical(x_minus, th, ps)
    assert np.abs(zz**2 + xp * xm - zz).max() < 1e-14


def test_eval_matches_character():
    th, ps = 1.1, 0.3
    # x_plus = b a* -> sin(th/2) cos(th/2) e^{-i ps}
    assert eval_classical(x_plus, th, ps) == pytest.approx(sin(th / 2) * cos(th / 2) * np.exp(-1j * ps))


def test_eval_rejects_nonzero_degree():
    with pytest.raises(NotCoinvariantError):
        eval_classical(a + z, 0.3, 0.1)
