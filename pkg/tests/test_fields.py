import random

import numpy as np
import pytest
import sympy

from constructa.errors import (CarrierCapExceeded, FieldMismatch, NotPrime, OrderMismatch,
                               ReducibleModulus)
from constructa.fields import (QuotientField, characteristic_and_prime_subfield, find_isomorphism,
                               frobenius_fixed, linear_solve, make_gf, make_prime_field,
                               make_quotient_field, mult_generator, mult_order, verify_splitting)
from constructa.integers import build_rationals
from constructa.poly import Poly, format_poly
from constructa.rings import field_axioms

X = sympy.Symbol("x")


def sympy_gf_mul(F, a, b):
    """Oracle product of two labels via sympy's modular polynomial arithmetic."""
    p = F.characteristic
    mod = sympy.Poly(list(reversed(F.modulus_labels())), X, modulus=p)
    pa = sympy.Poly(list(reversed(F.digits(a))), X, modulus=p)
    pb = sympy.Poly(list(reversed(F.digits(b))), X, modulus=p)
    r = (pa * pb).rem(mod)
    return sum((int(c) % p) * p**i for i, c in enumerate(reversed(r.all_coeffs())))


def test_prime_field_examples():
    F = make_prime_field(7)
    assert F.inv(3) == 5 and F.mul(3, 5) == 1
    assert F.div(1, 3) == 5
    assert all(F.mul(x, F.inv(x)) == 1 for x in range(1, 7))
    with pytest.raises(NotPrime):
        make_prime_field(4)
    with pytest.raises(NotPrime):
        make_prime_field(1)


def test_quotient_field_examples():
    gf4 = make_gf(2, 2)
    assert format_poly(gf4.modulus) == "1,1,1"
    assert gf4.generator_class == 2
    assert gf4.mul(2, 2) == 3  # X^2 = X + 1
    assert gf4.inv(2) == 3

    K3 = make_prime_field(3)
    gf9 = make_quotient_field(K3, Poly(K3, [1, 0, 1]))
    assert gf9.mul(3, 3) == 2  # X^2 = -1 = 2
    assert gf9.size == 9 and gf9.characteristic == 3 and gf9.exponent == 2
    assert field_axioms(gf9).ok


def test_reducible_modulus_rejected():
    K = make_prime_field(2)
    with pytest.raises(ReducibleModulus) as info:
        QuotientField(K, Poly(K, [1, 0, 1]))
    assert info.value.factor == Poly(K, [1, 1])


def test_labels_round_trip():
    F = make_gf(3, 3)
    for x in F.elements():
        assert F.from_poly(F.to_poly(x)) == x
        assert sum(d * 3**i for i, d in enumerate(F.digits(x))) == x


@pytest.mark.parametrize("p, n", [(2, 4), (2, 5), (3, 3), (5, 2), (7, 2)])
def test_mul_table_against_sympy(p, n):
    F = make_gf(p, n)
    table = F.mul_table
    rng = random.Random(p * 100 + n)
    for _ in range(300):
        a, b = rng.randrange(F.size), rng.randrange(F.size)
        expected = sympy_gf_mul(F, a, b)
        assert table[a, b] == expected
        assert F.mul_poly(a, b) == expected


@pytest.mark.parametrize("p, n", [(2, 6), (3, 4), (5, 3)])
def test_vectorized_tables_match_scalar_path(p, n):
    F = make_gf(p, n)
    M, A = F.mul_table, F.add_table
    rows = np.array([[F.mul_poly(a, b) for b in F.elements()] for a in F.elements()])
    assert np.array_equal(M, rows)
    sums = np.array([[F.from_poly(F.to_poly(a) + F.to_poly(b)) for b in F.elements()]
                     for a in F.elements()])
    assert np.array_equal(A, sums)


def test_large_field_skips_table():
    F = make_gf(2, 11)
    rng = random.Random(11)
    for _ in range(100):
        a, b = rng.randrange(F.size), rng.randrange(F.size)
        assert F.mul(a, b) == sympy_gf_mul(F, a, b)
        if a:
            assert F.mul(a, F.inv(a)) == 1


def test_characteristic():
    rep = characteristic_and_prime_subfield(make_prime_field(7))
    assert rep.characteristic == 7 and rep.report.ok
    rep = characteristic_and_prime_subfield(make_gf(2, 3))
    assert rep.characteristic == 2 and rep.elements == (0, 1) and rep.report.ok
    rep = characteristic_and_prime_subfield(build_rationals(), bound=200)
    assert rep.characteristic == 0


def test_frobenius():
    gf4 = make_gf(2, 2)
    r = frobenius_fixed(gf4, 1)
    assert r.ok and r.fixed == (0, 1) and r.images == (0, 1, 3, 2)
    gf8 = make_gf(2, 3)
    assert frobenius_fixed(gf8, 3).fixed == tuple(range(8))
    gf16 = make_gf(2, 4)
    sub = frobenius_fixed(gf16, 2)
    assert sub.ok and len(sub.fixed) == 4


def test_mult_generator():
    assert mult_generator(make_prime_field(5)) == 2
    assert mult_generator(make_prime_field(3)) == 2
    assert mult_generator(make_gf(2, 2)) == 2
    F = make_gf(3, 3)
    g = mult_generator(F)
    assert mult_order(F, g) == 26
    assert len({F.power(g, k) for k in range(26)}) == 26
    for p in (7, 11, 13, 23):
        assert mult_generator(make_prime_field(p)) == sympy.primitive_root(p)


def test_splitting():
    for p, n in ((2, 1), (2, 3), (3, 2), (5, 1), (7, 1)):
        assert verify_splitting(make_gf(p, n)).ok


def test_isomorphism_between_moduli():
    K = make_prime_field(2)
    F = make_quotient_field(K, Poly(K, [1, 1, 0, 0, 1]))
    F2 = make_quotient_field(K, Poly(K, [1, 0, 0, 1, 1]))
    iso = find_isomorphism(F, F2)
    assert iso.verify().ok
    assert len({iso(x) for x in F.elements()}) == 16
    assert find_isomorphism(F, F).image_of_generator == F.generator_class

    K3 = make_prime_field(3)
    G = make_quotient_field(K3, Poly(K3, [1, 0, 1]))
    G2 = make_quotient_field(K3, Poly(K3, [2, 1, 1]))
    assert find_isomorphism(G, G2).verify().ok

    with pytest.raises(OrderMismatch):
        find_isomorphism(make_gf(2, 2), make_gf(2, 3))
    gf4 = make_gf(2, 2)
    tower = make_quotient_field(gf4, Poly(gf4, [2, 1, 1]))
    with pytest.raises(FieldMismatch):
        find_isomorphism(tower, make_gf(2, 4))


def test_affine_maps_are_bijections():
    for F in (make_prime_field(7), make_gf(2, 3), make_gf(3, 2)):
        for a in F.elements():
            if a == F.zero:
                continue
            for b in F.elements():
                assert sorted(F.add(F.mul(a, x), b) for x in F.elements()) == F.elements()


def test_linear_solve():
    F = make_prime_field(5)
    res = linear_solve(F, [[1, 2], [3, 4]], [1, 1])
    assert res.status == "unique"
    x, y = res.solution
    assert (x + 2 * y) % 5 == 1 and (3 * x + 4 * y) % 5 == 1
    assert linear_solve(F, [[1, 2], [2, 4]], [1, 2]).status == "singular"
    assert linear_solve(F, [[1, 2], [2, 4]], [1, 2]).column == 1
    rng = random.Random(5)
    G = make_gf(2, 3)
    for _ in range(50):
        A = [[rng.randrange(8) for _ in range(3)] for _ in range(3)]
        b = [rng.randrange(8) for _ in range(3)]
        res = linear_solve(G, A, b)
        if res.status == "unique":
            for row, bi in zip(A, b):
                acc = 0
                for a, s in zip(row, res.solution):
                    acc = G.add(acc, G.mul(a, s))
                assert acc == bi


def test_carrier_cap():
    with pytest.raises(CarrierCapExceeded):
        make_gf(2, 21)
    with pytest.raises(CarrierCapExceeded):
        make_gf(3, 3, cap=26)
    assert make_gf(3, 3, cap=27).size == 27
