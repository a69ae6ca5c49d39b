import itertools
import random
from fractions import Fraction

import pytest

from constructa.errors import ArgumentOutOfRange, DivisorZero
from constructa.integers import (IntZ, archimedean_witness, build_integers, build_rationals, canonical_map,
                                 reduced_fractions, verify_cross_route)


def z(n):
    return IntZ.of(n)


def test_intz_canonical():
    assert z(0) == IntZ(0, 0)
    with pytest.raises(ArgumentOutOfRange):
        IntZ(1, 0)
    with pytest.raises(ArgumentOutOfRange):
        IntZ(0, 3)


def test_integer_examples():
    Z = build_integers()
    assert Z.mul(z(-3), z(4)) == z(-12)
    assert Z.mul(z(-1), z(-1)) == z(1)
    for n in range(-30, 31):
        assert Z.mul(z(0), z(n)) == z(0) == Z.mul(z(n), z(0))
    assert Z.embed(5) == z(5)


def test_iterate_and_fast_multiplication_agree():
    it, fast = build_integers("iterate"), build_integers("fast")
    for a, b in itertools.product(range(-40, 41), repeat=2):
        assert it.mul(z(a), z(b)) == fast.mul(z(a), z(b)) == z(a * b)


def test_integer_order():
    Z = build_integers()
    for a, b in itertools.product(range(-10, 11), repeat=2):
        assert Z.lt(z(a), z(b)) == (a < b)


def test_rational_examples():
    for route in ("two_step", "quotient_field"):
        Q = build_rationals(route)
        half, third = Q.from_fraction(1, 2), Q.from_fraction(1, 3)
        assert Q.to_fraction(Q.add(half, third)) == (5, 6)
        assert Q.mul(Q.from_fraction(2, 3), Q.from_fraction(3, 2)) == Q.one
        assert Q.to_fraction(Q.from_fraction(4, -6)) == (-2, 3)
        assert Q.to_fraction(Q.inv(Q.from_fraction(-2, 7))) == (-7, 2)
        with pytest.raises(DivisorZero):
            Q.inv(Q.zero)
        with pytest.raises(DivisorZero):
            Q.from_fraction(1, 0)


@pytest.mark.parametrize("route", ["two_step", "quotient_field"])
def test_rationals_match_fraction_oracle(route):
    Q = build_rationals(route)
    rng = random.Random(route)
    fracs = list(reduced_fractions(12))
    for _ in range(3000):
        f, g = rng.choice(fracs), rng.choice(fracs)
        x, y = Q.from_fraction(*f), Q.from_fraction(*g)
        F, G = Fraction(*f), Fraction(*g)
        for got, want in ((Q.add(x, y), F + G), (Q.mul(x, y), F * G), (Q.sub(x, y), F - G)):
            assert Q.to_fraction(got) == (want.numerator, want.denominator)
        assert Q.compare(x, y) == ("lt" if F < G else "eq" if F == G else "gt")


def test_canonical_map_small_window():
    report = verify_cross_route(bound=6)
    assert report.ok, report.failures[:5]
    A, B = build_rationals("two_step"), build_rationals("quotient_field")
    assert str(canonical_map(A.from_fraction(-3, 4), A, B)) == "-3/4"


def test_archimedean_examples():
    assert archimedean_witness((1, 1000), (7, 1)) == 7001
    assert archimedean_witness((3, 2), (3, 1)) == 3
    assert archimedean_witness((5, 1), (-2, 1)) == 0
    Q = build_rationals("two_step")
    assert archimedean_witness((1, 7), (2, 3), Q) == 5
    with pytest.raises(ArgumentOutOfRange):
        archimedean_witness((-1, 2), (1, 1))
