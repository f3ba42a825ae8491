"""Mode actions: untwisted, theta-even shortcut, zero modes, twisted shifts."""

import random
from fractions import Fraction

import pytest

from voalab.exactfield import I, exp_two_pi_i, sc, sixth_root, sqrt2_power
from voalab.fockspace import State, named_vector
from voalab.vertexengine import (
    ModeLegalityError, RationalPowerSeries, apply_word, delta_apply,
    mode_apply, mode_apply_theta_even, twisted_mode_apply, twisted_weight,
    virasoro_mode, zero_mode_decompose, zero_mode_exp,
)

ONE_V = named_vector("one")
OMEGA = named_vector("omega")
E = named_vector("E")
J = named_vector("J")


def test_heisenberg_modes():
    h = State.basis((1,))
    assert mode_apply(h, -1, ONE_V) == h
    assert mode_apply(h, 1, h) == ONE_V
    assert mode_apply(h, 0, h) == State()
    charged = State.basis((), 1)
    # h(0) reads the charge pairing (h, beta) = 2 sqrt 2
    assert mode_apply(h, 0, charged) == charged * sqrt2_power(1) * sc(2)
    assert mode_apply(h, 2, State.basis((2,))) == ONE_V * sc(2)


def test_virasoro_algebra_samples():
    assert virasoro_mode(0, J) == J * sc(4)
    assert virasoro_mode(0, E) == E * sc(4)
    assert virasoro_mode(1, OMEGA) == State()
    assert virasoro_mode(2, OMEGA) == ONE_V * sc(Fraction(1, 2))
    assert virasoro_mode(-1, ONE_V) == State()
    # [L(1), L(-1)] = 2 L(0) on a weight 2 state
    v = State.basis((2,))
    lhs = virasoro_mode(1, virasoro_mode(-1, v)) - virasoro_mode(-1, virasoro_mode(1, v))
    assert lhs == v * sc(4)


def test_apply_word():
    w = apply_word([-2, -2], ONE_V)
    direct = virasoro_mode(-2, virasoro_mode(-2, ONE_V))
    assert w == direct
    assert apply_word([], E) == E


def test_lattice_mode_values():
    # (E, E) = 2 shows up as the top pairing coefficient
    assert mode_apply(E, 7, E) == ONE_V * sc(2)
    assert mode_apply(E, 4, E).weight() == 3
    v = mode_apply(E, 3, E)
    assert v.coefficient((1, 1, 1, 1)) == sc(Fraction(16, 3))
    assert v.coefficient((2, 2)) == sc(2)
    assert v.coefficient((3, 1)) == sc(Fraction(16, 3))


def test_mode_legality():
    with pytest.raises(ModeLegalityError):
        mode_apply(E, Fraction(1, 2), E)
    with pytest.raises(ModeLegalityError):
        mode_apply(State.basis((1,)), Fraction(1, 3), ONE_V)


def test_theta_even_shortcut_agrees():
    # the fast path needs u supported away from charge zero
    rng = random.Random(90125)
    targets = [E, J, named_vector("u0"), OMEGA]
    for _ in range(6):
        v = targets[rng.randrange(len(targets))]
        n = rng.randint(0, 3)
        assert mode_apply_theta_even(E, n, v) == mode_apply(E, n, v)
    with pytest.raises(ValueError):
        mode_apply_theta_even(J, 0, J)


def test_zero_mode_decompose_and_exp():
    hp = named_vector("hprime")
    pieces = zero_mode_decompose(hp, E)
    assert set(pieces) == {Fraction(1, 3), Fraction(-1, 3),
                           Fraction(2, 3), Fraction(-2, 3)}
    assert sum(pieces.values(), State()) == E
    for lam, piece in pieces.items():
        img = mode_apply(hp, 0, piece)
        assert img == piece * sc(lam)
    g = zero_mode_exp(hp, E)
    direct = sum((piece * exp_two_pi_i(lam)
                  for lam, piece in pieces.items()), State())
    assert g == direct


def test_sigma_has_order_three_on_E():
    hp = named_vector("hprime")
    v = E
    for _ in range(3):
        v = zero_mode_exp(hp, v)
    assert v == E


def test_rational_power_series():
    s = RationalPowerSeries([(Fraction(0), ONE_V), (Fraction(1, 2), E)])
    assert s.coefficient(Fraction(0)) == ONE_V
    assert s.coefficient(Fraction(1, 2)) == E
    assert s.coefficient(Fraction(1, 3)) == State()
    t = RationalPowerSeries([(Fraction(1, 2), E), (Fraction(0), ONE_V)])
    assert s == t
    b = RationalPowerSeries([(Fraction(0), ONE_V)], bound=Fraction(2))
    assert s != b
    with pytest.raises(ValueError):
        RationalPowerSeries([(Fraction(0), ONE_V), (Fraction(0), E)])
    with pytest.raises(ValueError):
        b.coefficient(Fraction(5, 2))


def test_delta_apply_series():
    hp = named_vector("hprime")
    a = delta_apply(hp, named_vector("x1"))
    b = delta_apply(hp, named_vector("x1"))
    assert a == b
    r3 = (sixth_root(1) - sixth_root(5)) * I * sc(-1)
    assert r3 * r3 == sc(3)
    lead = a.coefficient(Fraction(-1))
    assert lead == ONE_V * sqrt2_power(1) * r3 * sc(Fraction(1, 18))
    assert a.coefficient(Fraction(1, 2)) == State()


def test_twisted_weight_eigenvector():
    hp = named_vector("hprime")
    y1 = named_vector("y1")
    assert twisted_weight(y1, hp) == y1 * sc(Fraction(49, 36))
    with pytest.raises(ModeLegalityError):
        twisted_mode_apply(E, Fraction(1, 5), ONE_V, hp)
