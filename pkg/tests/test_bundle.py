import numpy as np
import pytest
import sympy as sp

from ncsphere.bundle import (
    bott_projector,
    chern_number,
    chern_report,
    projector,
    projector_defects,
    verify_projector,
)
from ncsphere.ncalg import a, a_star, b, b_star, is_coinvariant, one, star, x_minus, x_plus, z
from ncsphere.scalars import LAM_INV

# sympy oracle: c1(1) = -1 exactly, and c1(n) = -n


def _sympy_chern(n):
    th, ps = sp.symbols("theta psi", real=True)
    k = abs(n)
    ca, sb = sp.cos(th / 2) * sp.exp(sp.I * ps), sp.sin(th / 2)
    if n < 0:
        ca = sp.conjugate(ca)
    right = [ca ** (k - m) * sb**m for m in range(k + 1)]
    left = [sp.binomial(k, m) * sp.conjugate(r) for m, r in enumerate(right)]
    E = sp.Matrix(k + 1, k + 1, lambda i, j: right[i] * left[j])
    C = E * (E.diff(th) * E.diff(ps) - E.diff(ps) * E.diff(th))
    integrand = sp.simplify(C.trace())
    val = sp.integrate(sp.integrate(integrand, (ps, 0, 2 * sp.pi)), (th, 0, sp.pi))
    return sp.nsimplify(sp.simplify(val / (2 * sp.pi * sp.I)))


@pytest.mark.parametrize("n", [1, 2])
def test_sympy_oracle_frozen_values(n):
    assert _sympy_chern(n) == -n


# --- exact projector structure ---------------------------------------------------------


def test_charge_one_projector_symbolic():
    e = projector(1)
    assert e.entries == bott_projector().entries
    assert e.entries == ((z, x_minus), (x_plus, one - z))
    assert e.show() == "[ z | x- ]\n[ x+ | 1 - z ]"


def test_charge_zero():
    assert projector(0).entries == ((one,),)


def test_charge_two_entries():
    e = projector(2)
    assert e.size == 3
    assert e[0, 0] == a * a * a_star * a_star
    assert e[0, 1] == (a * a * star(a * b)).scale(2)
    assert e[0, 1] == (a * a * a_star * b_star).scale(2 * LAM_INV)


@pytest.mark.parametrize("n", range(-2, 5))
def test_verify_projector(n):
    r = verify_projector(n)
    assert r.passed, r.summary()


def test_charge_one_self_adjoint_and_two_not():
    e = projector(1)
    assert e.adjoint().entries == e.entries
    e2 = projector(2)
    assert e2.adjoint().entries != e2.entries


def test_trace_charge_three():
    e = projector(3)
    assert e.trace() == one
    assert all(is_coinvariant(x) for row in e.entries for x in row)


# --- numerics ------------------------------------------------------------------------


def test_classical_defects_small():
    for n in (1, 2, -1):
        d = projector_defects(n, 40)
        assert all(v < 1e-12 for v in d.values()), d


def test_chern_zero():
    assert abs(chern_number(0, 64)) < 1e-9


def test_chern_one():
    c = chern_number(1, 400)
    assert abs(c + 1) < 1e-6


def test_chern_higher_charges():
    for n in (2, 3):
        assert abs(chern_number(n, 400) + n) < 1e-4


def test_chern_antisymmetric():
    assert chern_number(-1, 200) == pytest.approx(-chern_number(1, 200), abs=1e-12)
    assert chern_number(-2, 100) == pytest.approx(-chern_number(2, 100), abs=1e-12)


def test_chern_drift_charge_one():
    assert abs(chern_number(1, 400) - chern_number(1, 200)) < 1e-5


def test_chern_rows_chunking_invariant():
    assert chern_number(2, 48, rows_per_chunk=7) == pytest.approx(chern_number(2, 48), abs=1e-13)


def test_chern_grid_validation():
    with pytest.raises(ValueError):
        chern_number(1, 4)


def test_chern_report():
    r = chern_report(1, 200)
    assert r.passed
    assert r.extra["sign"] == -1 and r.extra["nearest"] == -1


def test_evaluate_shape():
    E = projector(2).evaluate(np.zeros((3, 4)), np.ones((3, 4)))
    assert E.shape == (3, 4, 3, 3)
