"""The rings ``N_n = {0, ..., n-1}`` with reduced addition and multiplication.

Covers the CRT decomposition into prime-power factors, units and inverses,
Euler's totient, additive generators, cyclicity of the units group and the
decimal divisibility rules for 2 and 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from itertools import combinations
from typing import Sequence

import numpy as np

from .divisibility import _gcd, divides, factorize
from .errors import (ArgumentOutOfRange, ModuliNotCoprime, ModulusTooSmall, NotAUnit,
                     UnsupportedDigitRule)
from .peano import FinSet, check_nat, div_algorithm
from .rings import FiniteRing, ProductRing, RingIso, index_dtype, is_field

SCAN_LIMIT = 10**6


class ZnRing(FiniteRing):
    """``(N_n, +_n, *_n, 0, 1)``."""

    def __init__(self, n: int):
        check_nat(n, "n")
        if n < 2:
            raise ModulusTooSmall(f"modulus must be >= 2, got {n}")
        self.modulus = self.size = n
        self.zero, self.one = 0, 1

    def __repr__(self):
        return f"Z_{self.modulus}"

    def __eq__(self, other):
        return type(other) is type(self) and other.modulus == self.modulus

    def __hash__(self):
        return hash((type(self).__name__, self.modulus))

    def reduce(self, x: int) -> int:
        """``Phi_n(x)``: the remainder of ``x`` by ``n``."""
        if x < 0:
            # negative integers reduce through their additive inverse
            return (self.modulus - div_algorithm(-x, self.modulus)[1]) % self.modulus
        return div_algorithm(x, self.modulus)[1]

    def element(self, i):
        return i

    def index(self, x):
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < self.modulus:
            raise ValueError(f"{x!r} is not in {self!r}")
        return x

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.modulus

    def add(self, x, y):
        return (x + y) % self.modulus

    def mul(self, x, y):
        return (x * y) % self.modulus

    def neg(self, x):
        return (-x) % self.modulus

    def __call__(self, x: int) -> "ZnElem":
        return ZnElem(self, self.reduce(x))

    @cached_property
    def add_table(self):
        n = self.modulus
        r = np.arange(n, dtype=np.int64 if 2 * n > np.iinfo(np.int32).max else np.int32)
        s = r[:, None] + r[None, :]
        s[s >= n] -= n
        return s.astype(index_dtype(n))

    @cached_property
    def mul_table(self):
        n = self.modulus
        r = np.arange(n, dtype=np.int64 if n * n > np.iinfo(np.int32).max else np.int32)
        return ((r[:, None] * r[None, :]) % n).astype(index_dtype(n))


@dataclass(frozen=True)
class ZnElem:
    """A residue bound to its ring, with operator sugar."""

    ring: ZnRing
    value: int

    def __post_init__(self):
        if not self.ring.contains(self.value):
            raise ArgumentOutOfRange(f"{self.value} is not reduced modulo {self.ring.modulus}")

    def _coerce(self, other):
        if isinstance(other, ZnElem):
            if other.ring != self.ring:
                raise ArgumentOutOfRange("residues from different rings")
            return other.value
        return self.ring.reduce(other)

    def __add__(self, other):
        return ZnElem(self.ring, self.ring.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __mul__(self, other):
        return ZnElem(self.ring, self.ring.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return ZnElem(self.ring, self.ring.neg(self.value))

    def __sub__(self, other):
        return self + (-ZnElem(self.ring, self._coerce(other)))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.ring.modulus})"


def zn_make(n: int) -> ZnRing:
    return ZnRing(n)


# rings are immutable, so their (lazily built) tables can be shared
_cached_zn = lru_cache(maxsize=8)(ZnRing)


def iterate_closure(ring: FiniteRing, a) -> set:
    """``I(a)`` in the additive monoid: ``0, a, a+a, ...`` until it repeats."""
    member = set()
    x = ring.zero
    while x not in member:
        member.add(x)
        x = ring.add(a, x)
    return member


def additive_generators(n: int, method: str = "gcd") -> FinSet:
    """Generators of ``(N_n, +_n, 0)``.

    ``method="gcd"`` uses the coprimality description; ``method="closure"``
    tests every nonzero element by brute-force iterate closure.
    """
    R = ZnRing(n)
    if method == "gcd":
        return FinSet(tuple(k for k in range(1, n) if _gcd(k, n) == 1))
    if method == "closure":
        return FinSet(tuple(k for k in range(1, n) if len(iterate_closure(R, k)) == n))
    raise ArgumentOutOfRange(f"unknown method {method!r}")


def totient(n: int, mode: str = "formula") -> int:
    """Euler's totient: the number of ``k`` in ``[1, n]`` coprime to ``n``."""
    check_nat(n)
    if n < 2:
        raise ArgumentOutOfRange(f"totient is defined here for n >= 2, got {n}")
    if mode == "brute":
        return sum(1 for k in range(1, n + 1) if _gcd(k, n) == 1)
    if mode == "formula":
        return reduce(lambda acc, pm: acc * pm[0] ** (pm[1] - 1) * (pm[0] - 1), factorize(n).pairs, 1)
    raise ArgumentOutOfRange(f"unknown mode {mode!r}; expected formula or brute")


class UnitsGroup:
    """``(N_n, *_n, 1)^x``; inverses are found by exhaustive search and
    checked on both sides."""

    def __init__(self, n: int):
        self.ring = ZnRing(n)
        self.units = FinSet(tuple(k for k in range(1, n) if _gcd(k, n) == 1))
        self._members = frozenset(self.units.elements)
        self._inverses: dict[int, int] = {}

    def is_unit(self, x: int) -> bool:
        return self.ring.reduce(x) in self._members

    def inverse(self, x: int) -> int:
        x = self.ring.reduce(x)
        if x not in self._members:
            raise NotAUnit(f"{x} is not a unit modulo {self.ring.modulus}")
        cached = self._inverses.get(x)
        if cached is not None:
            return cached
        mul = self.ring.mul
        for y in self.units:
            if mul(x, y) == 1 and mul(y, x) == 1:
                self._inverses[x] = y
                self._inverses[y] = x
                return y
        raise AssertionError(f"unit {x} without inverse modulo {self.ring.modulus}")

    def order(self, x: int) -> int:
        """Multiplicative order of a unit."""
        if not self.is_unit(x):
            raise NotAUnit(f"{x} is not a unit modulo {self.ring.modulus}")
        n = self.ring.modulus
        k, y = 1, x % n
        while y != 1:
            y = (y * x) % n
            k += 1
        return k

    def __len__(self):
        return len(self.units)


def units_group(n: int) -> UnitsGroup:
    return UnitsGroup(n)


def _check_moduli(moduli):
    for m in moduli:
        check_nat(m, "modulus")
        if m < 2:
            raise ModulusTooSmall(f"modulus must be >= 2, got {m}")
    for a, b in combinations(moduli, 2):
        if _gcd(a, b) != 1:
            raise ModuliNotCoprime(f"moduli {a} and {b} are not coprime", pair=(a, b))


def _crt_scan(pairs, total):
    big = max(range(len(pairs)), key=lambda i: pairs[i][1])
    r_big, m_big = pairs[big]
    rest = pairs[:big] + pairs[big + 1:]
    for x in range(r_big, total, m_big):
        if all(x % m == r for r, m in rest):
            return x
    raise AssertionError("CRT scan found no solution for coprime moduli")


def _crt_pairwise(pairs):
    x, M = 0, 1
    for r, m in pairs:
        # x + M*t = r (mod m)
        t = ((r - x) * pow(M, -1, m)) % m
        x, M = x + M * t, M * m
    return x


def crt_solve(pairs: Sequence[tuple[int, int]], method: str = "auto") -> int:
    """The unique ``x`` in ``[0, prod m_i)`` with ``x = r_i (mod m_i)``.

    Products up to ``SCAN_LIMIT`` are solved by scanning the progression of
    the largest modulus; larger ones by pairwise reconstruction.
    """
    pairs = [(int(r), int(m)) for r, m in pairs]
    if not pairs:
        raise ArgumentOutOfRange("crt_solve needs at least one congruence")
    _check_moduli([m for _, m in pairs])
    for r, m in pairs:
        if not 0 <= r < m:
            raise ArgumentOutOfRange(f"residue {r} is not reduced modulo {m}")
    total = reduce(lambda a, b: a * b, (m for _, m in pairs))
    if method == "auto":
        method = "scan" if total <= SCAN_LIMIT else "pairwise"
    if method == "scan":
        return _crt_scan(pairs, total)
    if method == "pairwise":
        return _crt_pairwise(pairs)
    raise ArgumentOutOfRange(f"unknown method {method!r}")


def crt_iso(n: int, moduli: Sequence[int]) -> RingIso:
    """``Z_n -> Z_m1 x ... x Z_mk``, ``x -> (x mod m_i)``, for pairwise
    coprime ``m_i`` with product ``n``.

    The inverse is a combination of the CRT basis ``e_i`` (``e_i = 1`` mod
    ``m_i`` and ``0`` mod the others), each ``e_i`` found by ``crt_solve``.
    """
    moduli = list(moduli)
    _check_moduli(moduli)
    if reduce(lambda a, b: a * b, moduli, 1) != n:
        raise ArgumentOutOfRange(f"moduli {moduli} do not multiply to {n}")
    source = _cached_zn(n)
    target = ProductRing([_cached_zn(m) for m in moduli])
    basis = [crt_solve([(1 if j == i else 0, m) for j, m in enumerate(moduli)]) for i in range(len(moduli))]

    def forward(x):
        return tuple(x % m for m in moduli)

    def inverse(t):
        return sum(ti * ei for ti, ei in zip(t, basis)) % n

    def index_maps():
        x = np.arange(n, dtype=np.int64)
        fwd = np.zeros(n, dtype=np.int64)
        for m, w in zip(moduli, target._weights):
            fwd += (x % m) * w
        # target index j has digits (j // w) % m; recombine them with the basis
        back = np.zeros(n, dtype=np.int64)
        for m, w, e in zip(moduli, target._weights, basis):
            back += ((x // w) % m) * e
        return fwd, (back % n).astype(np.int64)

    return RingIso(source, target, forward, inverse, index_maps)


@dataclass
class Decomposition:
    modulus: int
    moduli: tuple[int, ...]
    iso: RingIso

    @property
    def indecomposable(self) -> bool:
        return len(self.moduli) == 1


def decompose(n: int) -> Decomposition:
    """Split ``N_n`` into its indecomposable prime-power factors."""
    if n < 2:
        raise ModulusTooSmall(f"modulus must be >= 2, got {n}")
    moduli = tuple(p**m for p, m in factorize(n).pairs)
    return Decomposition(n, moduli, crt_iso(n, moduli))


def cyclic_criterion(n: int) -> bool:
    """``n = 4``, ``p^k`` or ``2 p^k`` with ``p`` an odd prime."""
    if n == 4:
        return True
    odd = n // 2 if n % 2 == 0 else n
    if n % 2 == 0 and odd % 2 == 0:
        return False
    if odd < 3:
        return False
    pairs = factorize(odd).pairs
    return len(pairs) == 1


@dataclass(frozen=True)
class CyclicityReport:
    cyclic: bool
    generator: int | None
    criterion_match: bool


def units_cyclic(n: int) -> CyclicityReport:
    """Decide cyclicity of ``N_n^x`` by searching, in ascending order, for a
    unit whose powers exhaust the group; compare with :func:`cyclic_criterion`."""
    check_nat(n)
    if n < 3:
        raise ArgumentOutOfRange(f"units_cyclic needs n >= 3, got {n}")
    U = UnitsGroup(n)
    size = len(U)
    generator = None
    for x in U.units:
        if U.order(x) == size:
            generator = x
            break
    cyclic = generator is not None
    return CyclicityReport(cyclic, generator, cyclic == cyclic_criterion(n))


def decimal_digits(n: int) -> list[int]:
    """Base-10 digits, least significant first, by repeated division."""
    check_nat(n)
    digits = []
    while True:
        n, d = div_algorithm(n, 10)
        digits.append(d)
        if n == 0:
            return digits


def digit_rule(n: int, d: int) -> bool:
    """Divisibility by 2 (last digit even) or 3 (digit sum divisible by 3)."""
    check_nat(n)
    if n < 1:
        raise ArgumentOutOfRange("digit_rule needs n >= 1")
    digits = decimal_digits(n)
    if d == 2:
        return digits[0] % 2 == 0
    if d == 3:
        return divides(3, sum(digits))
    raise UnsupportedDigitRule(f"no digit rule for {d}; supported: 2, 3")


def zn_is_field(n: int) -> bool:
    return is_field(ZnRing(n))


__all__ = [
    "ZnRing", "ZnElem", "zn_make", "iterate_closure", "additive_generators", "totient",
    "UnitsGroup", "units_group", "crt_solve", "crt_iso", "Decomposition", "decompose",
    "cyclic_criterion", "CyclicityReport", "units_cyclic", "decimal_digits", "digit_rule",
    "zn_is_field",
]
