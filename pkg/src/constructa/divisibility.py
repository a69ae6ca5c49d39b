"""Divisibility on the positive naturals.

Euclid's algorithm, the gcd/lcm lattice, primes by a shared lazily grown
sieve, unique factorization, divisor sets and Goldbach decompositions.
"""

from __future__ import annotations

import bisect
import re
import threading
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .errors import ArgumentOutOfRange, DivisorZero, EmptySet, NoDecompositionFound
from .peano import FinSet, check_nat, div_algorithm


def _positive(x, name):
    check_nat(x, name)
    if x == 0:
        raise ArgumentOutOfRange(f"{name} must be >= 1")
    return x


def divides(a: int, b: int) -> bool:
    """True iff ``b`` is a multiple of ``a``, i.e. ``b = q*a + 0``."""
    check_nat(a, "a")
    check_nat(b, "b")
    if a == 0:
        raise DivisorZero("divides() needs a >= 1")
    return div_algorithm(b, a)[1] == 0


@dataclass(frozen=True)
class EuclidStep:
    b: int
    a: int
    q: int
    r: int


@dataclass(frozen=True)
class GcdTrace:
    steps: tuple[EuclidStep, ...]

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)


def _gcd(x, y):
    while y:
        x, y = y, x % y
    return x


def gcd_euclid(x: int, y: int, trace: bool = False):
    """Greatest common divisor by Euclid's algorithm.

    Returns ``g`` alone, or ``(g, GcdTrace)`` when ``trace`` is set.  The
    trace starts from ``(max, min)`` and each step ``(b, a, q, r)`` feeds
    ``(a, r)`` into the next; the last step has ``r == 0``.  When either
    argument is 1 the loop is skipped (``gcd = 1``) and the trace holds the
    single division by 1.
    """
    _positive(x, "x")
    _positive(y, "y")
    b, a = max(x, y), min(x, y)
    if not trace:
        return 1 if a == 1 else _gcd(b, a)
    if a == 1:
        return 1, GcdTrace((EuclidStep(b, 1, b, 0),))
    steps = []
    while True:
        q, r = div_algorithm(b, a)
        steps.append(EuclidStep(b, a, q, r))
        if r == 0:
            return a, GcdTrace(tuple(steps))
        b, a = a, r


def lcm(x: int, y: int) -> int:
    """``x*y / gcd(x, y)``."""
    g = gcd_euclid(x, y)
    return (x // g) * y


def lattice_fold(op: str, A: Iterable[int]) -> int:
    """Supremum (``"sup"``, the lcm) or infimum (``"inf"``, the gcd) of a
    nonempty finite set of positive naturals under divisibility."""
    items = list(A)
    if not items:
        raise EmptySet("lattice_fold needs a nonempty set")
    for x in items:
        _positive(x, "element")
    if op == "sup":
        return reduce(lcm, items)
    if op == "inf":
        return reduce(gcd_euclid, items)
    raise ArgumentOutOfRange(f"unknown lattice operation {op!r}; expected sup or inf")


class PrimeSieve:
    """Eratosthenes sieve grown on demand.

    Extension runs under a lock; readers see an immutable tuple snapshot,
    so reads of the already computed prefix never wait.
    """

    def __init__(self, initial_limit: int = 1 << 10):
        self._lock = threading.Lock()
        self._limit = 1
        self._primes: tuple[int, ...] = ()
        self.extend(initial_limit)

    @property
    def limit(self) -> int:
        return self._limit

    def extend(self, n: int) -> None:
        if n <= self._limit:
            return
        with self._lock:
            if n <= self._limit:
                return
            target = max(n, 2 * self._limit)
            flags = bytearray([1]) * (target + 1)
            flags[0] = flags[1] = 0
            for i in range(2, int(target**0.5) + 1):
                if flags[i]:
                    flags[i * i :: i] = bytes(len(range(i * i, target + 1, i)))
            self._primes = tuple(i for i, f in enumerate(flags) if f)
            self._limit = target

    def primes_up_to(self, n: int) -> tuple[int, ...]:
        self.extend(n)
        snapshot = self._primes
        return snapshot[: bisect.bisect_right(snapshot, n)]

    def nth(self, k: int) -> int:
        while len(self._primes) <= k:
            self.extend(2 * self._limit)
        return self._primes[k]


SIEVE = PrimeSieve()


def _trial_primes(n):
    """Primes ``p`` with ``p*p <= n``."""
    root = int(n**0.5)
    while (root + 1) * (root + 1) <= n:
        root += 1
    while root * root > n:
        root -= 1
    return SIEVE.primes_up_to(root)


def is_prime(n: int) -> bool:
    """Primality by trial division with the primes up to ``sqrt(n)``."""
    check_nat(n)
    if n < 2:
        raise ArgumentOutOfRange(f"is_prime is defined for n >= 2, got {n}")
    return all(n % p for p in _trial_primes(n))


def primes_up_to(N: int) -> list[int]:
    check_nat(N, "N")
    return list(SIEVE.primes_up_to(N))


def nth_prime(k: int) -> int:
    """The ``k``-th prime, 0-indexed: ``nth_prime(0) == 2``."""
    check_nat(k, "k")
    return SIEVE.nth(k)


def primes(task: str, value: int):
    """Dispatch for ``is_prime``, ``up_to`` and ``nth``."""
    if task == "is_prime":
        return is_prime(value)
    if task == "up_to":
        return primes_up_to(value)
    if task == "nth":
        return nth_prime(value)
    raise ArgumentOutOfRange(f"unknown primes task {task!r}")


_SEP = "·"


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition, primes strictly increasing, exponents >= 1."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ps = [p for p, _ in self.pairs]
        if any(a >= b for a, b in zip(ps, ps[1:])):
            raise ArgumentOutOfRange("factorization primes must be strictly increasing")
        for p, m in self.pairs:
            if m < 1 or p < 2 or not is_prime(p):
                raise ArgumentOutOfRange(f"bad factor {p}^{m}")

    def value(self) -> int:
        return reduce(lambda acc, pm: acc * pm[0] ** pm[1], self.pairs, 1)

    def __str__(self):
        return _SEP.join(str(p) if m == 1 else f"{p}^{m}" for p, m in self.pairs)

    @classmethod
    def parse(cls, text: str) -> "Factorization":
        pairs = []
        for part in text.strip().split(_SEP):
            match = re.fullmatch(r"(\d+)(?:\^(\d+))?", part)
            if not match:
                raise ArgumentOutOfRange(f"cannot parse factor {part!r}")
            pairs.append((int(match.group(1)), int(match.group(2) or 1)))
        return cls(tuple(pairs))


def factorize(n: int) -> Factorization:
    """Unique factorization by trial division.

    For each prime ``p`` the exponent is the ``m`` with ``p^m | n`` and
    ``p^(m+1)`` not dividing ``n``.
    """
    check_nat(n)
    if n < 2:
        raise ArgumentOutOfRange(f"factorize needs n >= 2, got {n}")
    pairs = []
    rest = n
    for p in _trial_primes(n):
        if p * p > rest:
            break
        if rest % p == 0:
            m = 0
            while rest % p == 0:
                rest //= p
                m += 1
            pairs.append((p, m))
    if rest > 1:
        pairs.append((rest, 1))
    return Factorization(tuple(pairs))


def divisors(n: int) -> FinSet:
    """The divisor set ``D(n)``, ascending."""
    _positive(n, "n")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return FinSet(tuple(small + large[::-1]))


def goldbach_pair(n: int, prefer: str = "least") -> tuple[int, int]:
    """A pair of primes ``p <= q`` with ``p + q = n``.

    ``prefer="least"`` returns the pair with ``p`` least; ``"balanced"``
    the pair with ``p`` greatest, i.e. closest to ``n/2``.
    """
    check_nat(n)
    if n < 4 or n % 2:
        raise ArgumentOutOfRange(f"goldbach_pair needs an even n >= 4, got {n}")
    if prefer not in ("least", "balanced"):
        raise ArgumentOutOfRange(f"unknown preference {prefer!r}; expected least or balanced")
    table = SIEVE.primes_up_to(n)
    members = set(table)
    candidates = [p for p in table if p <= n - p]
    if prefer == "balanced":
        candidates.reverse()
    for p in candidates:
        if n - p in members:
            return p, n - p
    raise NoDecompositionFound(f"no decomposition of {n} into two primes")
