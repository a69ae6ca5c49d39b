import itertools
import math
import random
import threading

import pytest
import sympy
from hypothesis import given, strategies as st

from constructa.divisibility import (Factorization, PrimeSieve, divides, divisors, factorize, gcd_euclid,
                                     goldbach_pair, is_prime, lattice_fold, lcm, nth_prime, primes,
                                     primes_up_to)
from constructa.errors import ArgumentOutOfRange, DivisorZero, EmptySet


def test_divides_examples():
    assert divides(3, 123456)
    assert not divides(5, 7)
    assert all(divides(1, x) for x in range(1, 200))
    with pytest.raises(DivisorZero):
        divides(0, 4)


def test_gcd_examples_and_trace():
    assert gcd_euclid(12, 18) == 6
    assert gcd_euclid(1, 99) == 1
    assert gcd_euclid(17, 17) == 17
    g, trace = gcd_euclid(12, 18, trace=True)
    assert g == 6
    assert [(s.b, s.a, s.q, s.r) for s in trace] == [(18, 12, 1, 6), (12, 6, 2, 0)]
    _, trace = gcd_euclid(9, 1, trace=True)
    assert [(s.b, s.a, s.q, s.r) for s in trace] == [(9, 1, 9, 0)]


@given(st.integers(1, 10**9), st.integers(1, 10**9))
def test_gcd_trace_invariants(x, y):
    g, trace = gcd_euclid(x, y, trace=True)
    assert g == math.gcd(x, y)
    steps = list(trace)
    assert steps[-1].r == 0
    for s in steps:
        assert s.b == s.q * s.a + s.r and 0 <= s.r < s.a
    for prev, nxt in zip(steps, steps[1:]):
        assert (nxt.b, nxt.a) == (prev.a, prev.r)


def test_gcd_is_greatest_under_both_orders():
    for x, y in itertools.product(range(1, 60), repeat=2):
        g = gcd_euclid(x, y)
        common = [d for d in range(1, min(x, y) + 1) if x % d == 0 and y % d == 0]
        assert g == max(common)
        assert all(g % d == 0 for d in common)


def test_lcm_examples():
    assert lcm(12, 18) == 36
    assert lcm(1, 13) == 13
    assert lcm(7, 7) == 7
    for x, y in itertools.product(range(1, 40), repeat=2):
        assert lcm(x, y) == min(m for m in range(max(x, y), x * y + 1) if m % x == 0 and m % y == 0)


def test_lattice_fold():
    assert lattice_fold("sup", [4, 6]) == 12
    assert lattice_fold("inf", [4, 6]) == 2
    assert lattice_fold("sup", [9]) == 9
    assert lattice_fold("sup", [3, 4, 5]) == 60
    with pytest.raises(EmptySet):
        lattice_fold("inf", [])
    rng = random.Random(5)
    for _ in range(200):
        A = [rng.randint(1, 500) for _ in range(rng.randint(1, 6))]
        B = A[:]
        rng.shuffle(B)
        assert lattice_fold("sup", A) == lattice_fold("sup", B) == math.lcm(*A)
        assert lattice_fold("inf", A) == lattice_fold("inf", B) == math.gcd(*A)


def test_divides_implies_le():
    for x, y in itertools.product(range(1, 301), repeat=2):
        if divides(x, y):
            assert x <= y


def test_euclid_lemma_and_coprime_product_fuzz():
    rng = random.Random(29)
    seen = 0
    for _ in range(20000):
        a, b, q = (rng.randint(1, 500) for _ in range(3))
        if math.gcd(a, q) == 1 and divides(q, a * b):
            assert divides(q, b)
            seen += 1
        c = rng.randint(1, 5000)
        if divides(a, c) and divides(b, c) and gcd_euclid(a, b) == 1:
            assert divides(a * b, c)
        g = gcd_euclid(a, b)
        assert gcd_euclid(a // g, b // g) == 1
    assert seen > 100


def test_primes_examples():
    assert [nth_prime(k) for k in range(3)] == [2, 3, 5]
    assert is_prime(2) and not is_prime(4)
    assert primes_up_to(12) == [2, 3, 5, 7, 11]
    assert primes("nth", 2) == 5 and primes("up_to", 1) == []
    for n in (0, 1):
        with pytest.raises(ArgumentOutOfRange):
            is_prime(n)


def test_primality_against_sympy():
    assert [n for n in range(2, 20000) if is_prime(n)] == list(sympy.primerange(2, 20000))
    assert [nth_prime(k) for k in range(500)] == [sympy.prime(k + 1) for k in range(500)]


def test_prime_enumeration_unbounded():
    counts = [len(primes_up_to(2**k)) for k in range(1, 18)]
    assert all(a < b for a, b in zip(counts, counts[1:]))


def test_sieve_concurrent_growth():
    sieve = PrimeSieve(16)
    results = []

    def work(k):
        results.append(sieve.nth(k))

    threads = [threading.Thread(target=work, args=(k,)) for k in range(0, 4000, 97)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert sorted(results) == [sympy.prime(k + 1) for k in range(0, 4000, 97)]


def test_no_least_element_above_one():
    assert all(not divides(u, u + 1) for u in range(2, 201))


def test_factorize_examples():
    assert factorize(12).pairs == ((2, 2), (3, 1))
    assert factorize(1024).pairs == ((2, 10),)
    for p in (2, 3, 97, 7919):
        assert factorize(p).pairs == ((p, 1),)
    with pytest.raises(ArgumentOutOfRange):
        factorize(1)


@given(st.integers(2, 10**7))
def test_factorize_against_sympy(n):
    f = factorize(n)
    assert dict(f.pairs) == sympy.factorint(n)
    for p, m in f.pairs:
        assert n % p**m == 0 and n % p ** (m + 1) != 0


def test_factorization_text_format():
    assert str(factorize(12)) == "2^2·3"
    assert str(factorize(360)) == "2^3·3^2·5"
    assert str(factorize(7)) == "7"
    for n in (12, 360, 7, 1024, 9699690):
        text = str(factorize(n))
        assert str(Factorization.parse(text)) == text
        assert Factorization.parse(text).value() == n
    with pytest.raises(ArgumentOutOfRange):
        Factorization.parse("3·2")
    with pytest.raises(ArgumentOutOfRange):
        Factorization.parse("4^2")


def test_divisors():
    assert divisors(2).elements == (1, 2)
    assert divisors(3).elements == (1, 3)
    assert divisors(4).elements == (1, 2, 4)
    assert divisors(1).elements == (1,)
    assert divisors(12).elements == (1, 2, 3, 4, 6, 12)
    for n in range(1, 500):
        assert list(divisors(n)) == sympy.divisors(n)


def test_goldbach():
    assert goldbach_pair(4) == (2, 2)
    assert goldbach_pair(8) == (3, 5)
    assert goldbach_pair(12) == (5, 7)
    with pytest.raises(ArgumentOutOfRange):
        goldbach_pair(9)
