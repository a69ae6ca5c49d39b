import itertools
import random

import pytest
from hypothesis import given, strategies as st

from constructa.errors import ArgumentOutOfRange, DivisorZero, IterateBudgetExceeded
from constructa.peano import (BUDGET_ENV, FinSet, Interval, StepBudget, SuccessorModel, all_maps, card,
                              cartesian, check_successor_model, div_algorithm, finset_ops, nat_arith,
                              nat_le, recurse, succ)


def test_recurse_examples():
    assert recurse("a", lambda x: x + "!", 0) == "a"
    assert recurse(0, succ, 5) == 5
    assert recurse(1, lambda x: 2 * x, 10) == 1024


def test_recurse_counts_step_applications():
    calls = []
    recurse(0, lambda x: calls.append(x) or x + 1, 7)
    assert calls == list(range(7))


@pytest.mark.parametrize("op, m, n, expected", [
    ("add", 9, 0, 9), ("mul", 0, 9, 0), ("mul", 9, 0, 0), ("pow", 2, 10, 1024),
    ("pow", 0, 0, 1), ("pow", 0, 3, 0), ("pow", 7, 1, 7),
])
def test_nat_arith_examples(op, m, n, expected):
    assert nat_arith(op, m, n, mode="fast") == expected
    assert nat_arith(op, m, n, mode="iterate") == expected
    assert nat_arith(op, m, n, mode="iterate", deep=True) == expected


@given(st.integers(0, 60), st.integers(0, 60))
def test_deep_iterate_matches_native(m, n):
    assert nat_arith("add", m, n, mode="iterate", deep=True) == m + n
    assert nat_arith("mul", m, n, mode="iterate", deep=True) == m * n


def test_iterate_budget_is_enforced():
    with pytest.raises(IterateBudgetExceeded):
        nat_arith("add", 0, 11, mode="iterate", budget=10)
    assert nat_arith("add", 0, 10, mode="iterate", budget=10) == 10
    # deep pow(3, 4) = 81 costs far more than 100 successor steps
    with pytest.raises(IterateBudgetExceeded):
        nat_arith("pow", 3, 4, mode="iterate", deep=True, budget=100)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "5")
    with pytest.raises(IterateBudgetExceeded):
        nat_arith("add", 1, 6, mode="iterate")
    monkeypatch.setenv(BUDGET_ENV, "nonsense")
    with pytest.raises(ArgumentOutOfRange):
        StepBudget()


def test_nat_arith_rejects_bad_input():
    with pytest.raises(ArgumentOutOfRange):
        nat_arith("add", -1, 2)
    with pytest.raises(ArgumentOutOfRange):
        nat_arith("sub", 1, 2)
    with pytest.raises(ArgumentOutOfRange):
        nat_arith("add", 1, 2, mode="slow")
    with pytest.raises(TypeError):
        nat_arith("add", 1.0, 2)


def test_nat_le_examples_and_trichotomy():
    assert nat_le(3, 3) == "eq"
    assert nat_le(2, 5) == "lt"
    for x in range(50):
        assert nat_le(succ(x), x, mode="iterate") == "gt"
    for m, n in itertools.product(range(25), repeat=2):
        got = nat_le(m, n, mode="iterate")
        assert got == nat_le(m, n)
        assert [m < n, m == n, m > n].count(True) == 1
        assert got == ("lt" if m < n else "eq" if m == n else "gt")


def test_no_strict_intermediate():
    for n in range(10**4 + 1):
        assert not any(n < m < succ(n) for m in (n, n + 1))
        assert nat_le(n, succ(n), mode="iterate") == "lt"


def test_monotonicity_fuzz():
    rng = random.Random(53)
    for _ in range(2000):
        a, b, c = (rng.randrange(10**6) for _ in range(3))
        if a < b:
            assert nat_le(nat_arith("add", a, c), nat_arith("add", b, c)) == "lt"


def test_div_algorithm_examples():
    assert div_algorithm(7, 3) == (2, 1)
    assert div_algorithm(0, 5) == (0, 0)
    assert div_algorithm(6, 3) == (2, 0)
    with pytest.raises(DivisorZero):
        div_algorithm(3, 0)


def test_finset_ops():
    assert finset_ops(FinSet()) == finset_ops(FinSet.of([]))
    empty = finset_ops(FinSet())
    assert (empty.card, empty.least, empty.greatest) == (0, None, None)
    assert finset_ops(FinSet((0,))).card == 1
    s = finset_ops(FinSet.of([9, 4, 7]))
    assert (s.card, s.least, s.greatest) == (3, 4, 9)
    with pytest.raises(ArgumentOutOfRange):
        FinSet((3, 3))


def test_intervals():
    assert Interval(2, 5).to_finset().elements == (2, 3, 4, 5)
    assert Interval(2, 5, closed=False).card == 3
    assert Interval(4, 4, closed=False).card == 0
    with pytest.raises(ArgumentOutOfRange):
        Interval(5, 2)


def test_counting_formulas_random():
    rng = random.Random(47)
    for _ in range(300):
        A = FinSet.of(rng.sample(range(30), rng.randint(0, 12)))
        B = FinSet.of(rng.sample(range(30), rng.randint(0, 12)))
        assert card(A.union(B)) + card(A.intersection(B)) == card(A) + card(B)
        assert len(cartesian(A, B)) == card(A) * card(B)
    for a, b in itertools.product(range(5), repeat=2):
        A, B = list(range(a)), list(range(10, 10 + b))
        maps = all_maps(A, B)
        assert len(maps) == b**a
        assert len({tuple(sorted(m.items())) for m in maps}) == len(maps)


def test_successor_models_are_isomorphic():
    strings = SuccessorModel("", lambda s: s + "|")
    assert check_successor_model(strings, ["|" * k for k in range(30)]) == (True, None)
    assert strings.numeral(4) == "||||"
    assert strings.index_of("|||") == 3
    binary = SuccessorModel((), lambda t: t + (0,))
    assert strings.transport(binary, "||") == (0, 0)

    wrap = SuccessorModel(0, lambda x: (x + 1) % 5)
    ok, witness = check_successor_model(wrap, range(5))
    assert not ok and witness[0] == "zero-is-successor"
    collapse = SuccessorModel(0, lambda x: min(x + 1, 3))
    ok, witness = check_successor_model(collapse, range(1, 5))
    assert not ok and witness[0] == "not-injective"
