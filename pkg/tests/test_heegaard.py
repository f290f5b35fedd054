import random

import pytest

from ncsphere import heegaard
from ncsphere.heegaard import (
    MINUS,
    PLUS,
    ATorusElement,
    OrientationError,
    PairElement,
    a_generator,
    d_generator,
    d_normalize,
    d_one,
    pair_one,
    pi_theta,
    random_a_element,
    random_d_element,
    rho_theta,
    sphere_generators,
    verify_boundary_maps,
    verify_pair_presentation,
)
from ncsphere.scalars import LAM, LAM_INV


def test_torus_commutation_plus():
    assert d_normalize(PLUS, ["v", "y"]) == d_normalize(PLUS, ["y", "v"]).scale(LAM)


def test_torus_commutation_minus():
    assert d_normalize(MINUS, ["u", "x"]) == d_normalize(MINUS, ["x", "u"]).scale(LAM_INV)


def test_unitary():
    v = d_generator(PLUS, "v")
    assert v * v.star() == d_one(PLUS)
    assert v.star() * v == d_one(PLUS)


def test_normal_generator_is_normal_not_unitary():
    y = d_generator(PLUS, "y")
    assert y * y.star() == y.star() * y
    assert y * y.star() != d_one(PLUS)


def test_star_anti_homomorphism():
    rng = random.Random(1)
    for o in (PLUS, MINUS):
        for _ in range(50):
            f, g = random_d_element(rng, o), random_d_element(rng, o)
            assert (f * g).star() == g.star() * f.star()
            assert f.star().star() == f
            s, t = random_a_element(rng, o), random_a_element(rng, o)
            assert (s * t).star() == t.star() * s.star()


def test_quantum_torus_relation():
    U, V = a_generator(PLUS, "U"), a_generator(PLUS, "V")
    assert V * U == (U * V).scale(LAM)
    Um, Vm = a_generator(MINUS, "U"), a_generator(MINUS, "V")
    assert Vm * Um == (Um * Vm).scale(LAM_INV)


def test_boundary_map_on_generators():
    assert pi_theta(d_generator(PLUS, "y")) == a_generator(PLUS, "U")
    assert pi_theta(d_generator(PLUS, "y'")) == a_generator(PLUS, "U'")
    assert pi_theta(d_generator(MINUS, "u")) == a_generator(MINUS, "V")


def test_gluing_exchanges_generators():
    assert rho_theta(a_generator(MINUS, "U")) == a_generator(PLUS, "V")
    assert rho_theta(a_generator(MINUS, "V")) == a_generator(PLUS, "U")


def test_orientation_errors():
    with pytest.raises(OrientationError):
        d_generator(PLUS, "y") * d_generator(MINUS, "x")
    with pytest.raises(OrientationError):
        rho_theta(a_generator(PLUS, "U"))
    with pytest.raises(OrientationError):
        PairElement(d_one(PLUS), d_one(PLUS))


def test_sphere_generators_compatible():
    S, T = sphere_generators()
    assert S.is_compatible() and T.is_compatible()
    assert pair_one().is_compatible()
    assert not PairElement(d_generator(MINUS, "x"), d_one(PLUS)).is_compatible()


def test_pair_presentation():
    r = verify_pair_presentation()
    assert r.passed
    assert r.params["skipped"]


def test_boundary_maps():
    assert verify_boundary_maps(100, 42).passed


def test_mutant_gluing_without_phase_is_caught(monkeypatch):
    def rho_no_phase(t):
        return ATorusElement._accumulate_o(PLUS, (((n, m), c) for (m, n), c in t.items()))

    monkeypatch.setattr(heegaard, "rho_theta", rho_no_phase)
    assert not verify_boundary_maps(100, 42).passed
