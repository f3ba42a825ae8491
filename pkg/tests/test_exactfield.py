"""The exact coefficient field: ring axioms, roots, and inversion."""

import random
from fractions import Fraction

import pytest

from voalab.exactfield import (
    I, ONE, ZERO, as_rational, exp_two_pi_i, invert, is_rational, rat,
    sc, sixth_root, sqrt2_power,
)


def random_scalar(rng):
    acc = ZERO
    for _ in range(rng.randint(1, 3)):
        base = sqrt2_power(rng.randint(0, 3)) * sixth_root(rng.randint(0, 5))
        acc = acc + base * sc(Fraction(rng.randint(-6, 6), rng.randint(1, 5)))
    return acc


def test_basic_constants():
    assert ONE == sc(1)
    assert ZERO == sc(0)
    assert sc(Fraction(3, 7)) + sc(Fraction(4, 7)) == ONE
    assert sqrt2_power(0) == ONE
    assert sqrt2_power(2) == sc(2)
    assert sqrt2_power(1) * sqrt2_power(1) == sc(2)
    assert sqrt2_power(-1) * sqrt2_power(3) == sc(2)


def test_sixth_roots():
    z = sixth_root(1)
    acc = ONE
    for _ in range(6):
        acc = acc * z
    assert acc == ONE
    assert sixth_root(3) == -ONE
    assert sixth_root(2) * sixth_root(4) == ONE
    # the primitive cube root satisfies 1 + w + w^2 = 0
    w = sixth_root(2)
    assert ONE + w + w * w == ZERO


def test_exp_two_pi_i():
    assert exp_two_pi_i(Fraction(1, 6)) == sixth_root(1)
    assert exp_two_pi_i(Fraction(1, 3)) == sixth_root(2)
    assert exp_two_pi_i(Fraction(1, 2)) == -ONE
    assert exp_two_pi_i(Fraction(7, 6)) == sixth_root(1)
    with pytest.raises(ValueError):
        exp_two_pi_i(Fraction(1, 4))
    assert I * I == -ONE


def test_surd_products():
    r2 = sqrt2_power(1)
    assert (ONE + r2) * (ONE - r2) == -ONE
    # sqrt 3 out of the sixth root: zeta6 - zeta6^-1 = sqrt(3) i
    r3i = sixth_root(1) - sixth_root(5)
    assert r3i * r3i == sc(-3)
    r6i = r2 * r3i
    assert r6i * r6i == sc(-6)


def test_ring_axioms_random():
    rng = random.Random(20240815)
    for _ in range(60):
        a, b, c = (random_scalar(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a + ZERO == a
        assert a * ONE == a
        assert a - a == ZERO


def test_inverse_random():
    rng = random.Random(77)
    seen = 0
    while seen < 25:
        a = random_scalar(rng)
        if a == ZERO:
            continue
        seen += 1
        assert a * a.inv() == ONE
        assert invert(a) * a == ONE


def test_rationality():
    assert is_rational(sc(5))
    assert as_rational(sc(Fraction(5, 3))) == Fraction(5, 3)
    assert not is_rational(sqrt2_power(1))
    with pytest.raises(Exception):
        as_rational(sqrt2_power(1))
    assert rat(3) == Fraction(3)


def test_scalar_str_is_stable():
    assert str(sc(5400)) == "5400"
    assert "2" in str(sqrt2_power(1))
