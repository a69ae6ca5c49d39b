"""Natural numbers from a successor model.

Naturals are carried by Python ``int`` (all successor models are isomorphic,
so any faithful carrier will do).  The successor semantics are recovered by
the *iterate* evaluation mode, in which

* ``m + n`` is ``S`` applied ``n`` times to ``m``,
* ``m * n`` is the ``m``-fold iterate of ``n`` in ``(N, +, 0)``,
* ``m ** n`` is the ``n``-fold iterate of ``m`` in ``(N, *, 1)``,

each computed with :func:`recurse`.  By default the operation one level
down is taken natively (one-level iterate); ``deep=True`` evaluates the
lower level in iterate mode too, all the way down to ``S``.

Iterate mode is metered: every step application is charged against a
budget (default ``10**6``, overridable through ``CONSTRUCTA_ITER_BUDGET``).
"""

from __future__ import annotations

import bisect
import itertools
import operator
import os
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .errors import ArgumentOutOfRange, DivisorZero, IterateBudgetExceeded

DEFAULT_ITER_BUDGET = 10**6
BUDGET_ENV = "CONSTRUCTA_ITER_BUDGET"

ZERO = 0


def check_nat(n, name="n"):
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 0:
        raise ArgumentOutOfRange(f"{name} must be a natural number, got {n}")
    return n


def succ(n: int) -> int:
    """The successor ``S(n) = n + 1``."""
    return n + 1


ONE = succ(ZERO)


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_ITER_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ArgumentOutOfRange(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ArgumentOutOfRange(f"{BUDGET_ENV} must be nonnegative, got {value}")
    return value


class StepBudget:
    """Counter of step applications shared by nested recursions."""

    def __init__(self, limit: int | None = None):
        self.limit = default_budget() if limit is None else check_nat(limit, "limit")
        self.spent = 0

    def charge(self, steps: int) -> None:
        if self.spent + steps > self.limit:
            raise IterateBudgetExceeded(
                f"iterate mode needs more than {self.limit} step applications "
                f"(already spent {self.spent}, requested {steps} more)"
            )
        self.spent += steps


def recurse(initial, step: Callable[[Any], Any], n: int, budget: StepBudget | None = None):
    """Return ``psi(n)`` for the unique ``psi`` with ``psi(0) = initial`` and
    ``psi(S(k)) = step(psi(k))``.

    Exactly ``n`` applications of ``step`` are made.  With a ``budget``, the
    ``n`` applications are charged before the first one runs.
    """
    check_nat(n)
    if budget is not None:
        budget.charge(n)
    value = initial
    for _ in itertools.repeat(None, n):
        value = step(value)
    return value


def _iterate_add(m, n, budget, deep):
    return recurse(m, succ, n, budget)


def _iterate_mul(m, n, budget, deep):
    if deep:
        return recurse(0, lambda acc: _iterate_add(acc, n, budget, deep), m, budget)
    return recurse(0, lambda acc: acc + n, m, budget)


def _iterate_pow(m, n, budget, deep):
    if deep:
        return recurse(1, lambda acc: _iterate_mul(m, acc, budget, deep), n, budget)
    return recurse(1, lambda acc: m * acc, n, budget)


_ITERATE = {"add": _iterate_add, "mul": _iterate_mul, "pow": _iterate_pow}
_FAST = {"add": operator.add, "mul": operator.mul, "pow": operator.pow}


def nat_arith(op: str, m: int, n: int, mode: str = "fast", *, budget: int | StepBudget | None = None,
              deep: bool = False) -> int:
    """Add, multiply or exponentiate naturals.

    ``mode="fast"`` uses native big integers; ``mode="iterate"`` follows the
    iterate definitions (see the module docstring).  ``pow(0, 0) == 1``: the
    0-fold iterate is the identity.

    Raises :class:`IterateBudgetExceeded` when iterate mode would need more
    step applications than the budget allows.
    """
    check_nat(m, "m")
    check_nat(n, "n")
    if op not in _FAST:
        raise ArgumentOutOfRange(f"unknown operation {op!r}; expected add, mul or pow")
    if mode == "fast":
        return _FAST[op](m, n)
    if mode != "iterate":
        raise ArgumentOutOfRange(f"unknown mode {mode!r}; expected iterate or fast")
    if not isinstance(budget, StepBudget):
        budget = StepBudget(budget)
    return _ITERATE[op](m, n, budget, deep)


def nat_le(m: int, n: int, mode: str = "fast", budget: int | None = None) -> str:
    """Compare two naturals: ``"lt"``, ``"eq"`` or ``"gt"``.

    In iterate mode the answer comes from the definition of the natural
    order: ``m <= n`` iff ``n = S^k(m)`` for some ``k``.  Both chains are
    walked in lockstep, so the cost is ``|m - n|`` steps.
    """
    check_nat(m, "m")
    check_nat(n, "n")
    if mode == "fast":
        return "lt" if m < n else ("eq" if m == n else "gt")
    if mode != "iterate":
        raise ArgumentOutOfRange(f"unknown mode {mode!r}; expected iterate or fast")
    meter = StepBudget(budget)
    up_from_m, up_from_n = m, n
    if up_from_m == n:
        return "eq"
    while True:
        meter.charge(2)
        up_from_m, up_from_n = succ(up_from_m), succ(up_from_n)
        if up_from_m == n:
            return "lt"
        if up_from_n == m:
            return "gt"


def div_algorithm(b: int, a: int) -> tuple[int, int]:
    """The unique ``(q, r)`` with ``b = q*a + r`` and ``0 <= r < a``."""
    check_nat(b, "b")
    check_nat(a, "a")
    if a == 0:
        raise DivisorZero("division algorithm needs a >= 1")
    return divmod(b, a)


@dataclass(frozen=True)
class SuccessorModel:
    """A candidate set of natural numbers ``(E, e, S)`` over an opaque carrier."""

    zero: Any
    succ: Callable[[Any], Any]
    eq: Callable[[Any, Any], bool] = operator.eq

    def numeral(self, n: int, budget: int | None = None):
        """The element ``S^n(e)``, i.e. the image of ``n`` under the unique
        isomorphism ``phi`` with ``phi(0) = e`` and ``phi∘S = S∘phi``."""
        meter = StepBudget(budget) if budget is not None else None
        return recurse(self.zero, self.succ, n, meter)

    def index_of(self, x, bound: int = 10**5) -> int:
        """Inverse of :meth:`numeral`, found by walking the successor chain."""
        current = self.zero
        for k in range(bound + 1):
            if self.eq(current, x):
                return k
            current = self.succ(current)
        raise ArgumentOutOfRange(f"{x!r} not reached within {bound} successor steps")

    def transport(self, other: "SuccessorModel", x, bound: int = 10**5):
        """Carry ``x`` to ``other`` along the canonical isomorphism."""
        return other.numeral(self.index_of(x, bound))


def check_successor_model(model: SuccessorModel, samples: Iterable) -> tuple[bool, tuple | None]:
    """Check injectivity of ``succ`` and that ``zero`` is not a successor,
    on the given samples.  Returns ``(ok, witness)``."""
    samples = list(samples)
    images = [model.succ(x) for x in samples]
    for x, sx in zip(samples, images):
        if model.eq(sx, model.zero):
            return False, ("zero-is-successor", x)
    for (i, x), (j, y) in itertools.combinations(enumerate(samples), 2):
        if not model.eq(x, y) and model.eq(images[i], images[j]):
            return False, ("not-injective", x, y)
    return True, None


@dataclass(frozen=True)
class FinSet:
    """A finite set of naturals kept as a strictly increasing tuple."""

    elements: tuple[int, ...] = field(default=())

    def __post_init__(self):
        els = self.elements
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ArgumentOutOfRange("FinSet elements must be strictly increasing")

    @classmethod
    def of(cls, items: Iterable[int]) -> "FinSet":
        return cls(tuple(sorted(set(items))))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        i = bisect.bisect_left(self.elements, x)
        return i < len(self.elements) and self.elements[i] == x

    def union(self, other: "FinSet") -> "FinSet":
        return FinSet.of(self.elements + other.elements)

    def intersection(self, other: "FinSet") -> "FinSet":
        keep = set(other.elements)
        return FinSet(tuple(x for x in self.elements if x in keep))


@dataclass(frozen=True)
class FinSetSummary:
    card: int
    least: int | None
    greatest: int | None


def card(items: Sequence | FinSet) -> int:
    """Cardinality: the ``m`` with ``A ≈ [0, m)``; the empty set has 0."""
    return len(items)


def finset_ops(A: FinSet) -> FinSetSummary:
    if not A.elements:
        return FinSetSummary(card=0, least=None, greatest=None)
    return FinSetSummary(card=card(A), least=A.elements[0], greatest=A.elements[-1])


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int
    closed: bool = True

    def __post_init__(self):
        check_nat(self.lo, "lo")
        check_nat(self.hi, "hi")
        if self.lo > self.hi:
            raise ArgumentOutOfRange(f"interval needs lo <= hi, got [{self.lo}, {self.hi}]")

    def to_finset(self) -> FinSet:
        stop = self.hi + 1 if self.closed else self.hi
        return FinSet(tuple(range(self.lo, stop)))

    @property
    def card(self) -> int:
        return self.hi - self.lo + (1 if self.closed else 0)


def cartesian(A: Sequence, B: Sequence) -> list[tuple]:
    return list(itertools.product(A, B))


def all_maps(A: Sequence, B: Sequence) -> list[dict]:
    """Every map ``A -> B``, listed explicitly (``|B| ** |A|`` of them)."""
    A = list(A)
    return [dict(zip(A, values)) for values in itertools.product(list(B), repeat=len(A))]
