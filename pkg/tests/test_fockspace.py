"""States, gradings, involutions, and the named vector table."""

from fractions import Fraction

import pytest

from voalab.exactfield import ZERO, sc, sqrt2_power
from voalab.fockspace import (
    NAMED_VECTORS, State, basis_monomials, graded_states, lattice_component,
    named_vector, partitions, theta, theta_even_states, tau1,
)
from voalab.sectors import dim_full_lattice, graded_dim


def test_partitions_small():
    assert list(partitions(0)) == [()]
    assert len(list(partitions(5))) == 7
    assert len(list(partitions(10))) == 42
    assert all(sum(p) == 6 for p in partitions(6))
    assert len(list(partitions(6, max_part=2))) == 4


def test_basis_weight_and_charge():
    v = State.basis((3, 2, 1), 1)
    # charge beta contributes (beta, beta)/2 / 4 = 4 to the weight
    assert v.weight() == 10
    assert State.basis((), Fraction(1, 2)).weight() == 1
    assert State.basis((), Fraction(1, 4)).weight() == Fraction(1, 4)
    assert State.basis((1, 1)).weight() == 2


def test_state_linear_algebra():
    base = [State.basis(tuple(sorted(p, reverse=True))) for p in partitions(4)]
    a = base[0] * sc(3) + base[1] * sc(Fraction(-1, 2))
    b = base[1] * sc(Fraction(1, 2)) + base[2]
    assert a + b - a == b
    assert (a + b) * sc(2) == a * sc(2) + b * sc(2)
    assert not (a - a)
    assert a - a == State()
    assert -a == a * sc(-1)


def test_coefficient_lookup():
    v = State.basis((2, 1), 1) * sc(7)
    assert v.coefficient((2, 1), 1) == sc(7)
    assert v.coefficient((2, 1), 0) == ZERO
    assert v.coefficient((3,), 1) == ZERO


def test_theta_involution():
    E = named_vector("E")
    F = named_vector("F")
    J = named_vector("J")
    assert theta(E) == E
    assert theta(F) == F * sc(-1)
    assert theta(J) == J
    assert theta(theta(named_vector("u9"))) == named_vector("u9")
    # theta negates the oscillators and swaps the charge sign
    v = State.basis((1,), 1)
    assert theta(v) == State.basis((1,), -1) * sc(-1)


def test_tau1_charge_parity():
    # tau1 is +1 on charge multiples of beta and -1 on the odd alpha classes
    E = named_vector("E")
    assert tau1(E) == E
    half = State.basis((), Fraction(1, 2))
    assert tau1(half) == half * sc(-1)
    assert tau1(tau1(half)) == half


def test_graded_states_match_character():
    for w in range(0, 5):
        sts = graded_states("V_L2", w)
        assert len(sts) == dim_full_lattice(w)
        assert all(st.weight() == w for st in sts)
    for w in range(0, 7):
        assert len(basis_monomials(w, [0])) == graded_dim("M(1)", w)


def test_theta_even_states_dims():
    # regression: the two charge signs must collapse to a single invariant line
    for w in range(0, 9):
        sts = theta_even_states("V_Zb", w)
        assert len(sts) == graded_dim("V_Zb+", w)
        for st in sts:
            assert theta(st) == st
            assert st.weight() == w
    reps = {frozenset(st.terms) for st in theta_even_states("V_Zb", 4)}
    assert len(reps) == len(theta_even_states("V_Zb", 4))


def test_lattice_component():
    E = named_vector("E")
    J = named_vector("J")
    assert lattice_component(E, 1) == E
    assert lattice_component(E, 0) == State()
    assert lattice_component(J, 0) == J
    u16 = named_vector("u16")
    tail = lattice_component(u16, 2)
    assert tail == named_vector("E2") * sc(27)


def test_named_vector_weights():
    expected = {
        "one": 0, "h": 1, "omega": 2, "J": 4, "E": 4, "F": 4, "X1": 4,
        "X2": 4, "E2": 16, "x1": 1, "x2": 1, "x3": 1, "y1": 1, "y2": 1,
        "hprime": 1, "w1": Fraction(1, 4), "w2": Fraction(1, 4),
        "u0": 4, "u1": 5, "u2": 6, "u3": 7, "v2": 6, "v3": 7, "v4": 6,
        "v5": 7, "u9": 9, "W": 9, "u16": 16,
    }
    for name, wt in expected.items():
        v = named_vector(name)
        assert v.weight() == wt, name
    assert set(expected) == set(NAMED_VECTORS)


def test_named_vector_unknown():
    with pytest.raises(KeyError):
        named_vector("nonsense")


def test_scalar_multiple_display():
    v = State.basis((1, 1)) * sqrt2_power(1)
    s = str(v)
    assert "h(-1)h(-1)|0>" in s
