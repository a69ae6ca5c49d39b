"""Finite fields: prime fields ``N_p`` and Kronecker quotients ``K_a``.

Every finite field here labels its elements ``0..size-1``.  In ``K_a`` the
label of a remainder ``r`` of degree ``< n`` is the base-``q`` number whose
digits are the labels of ``r``'s coefficients, constant term least
significant (``q = #K``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Sequence

import numpy as np

from .divisibility import is_prime
from .errors import (ArgumentOutOfRange, CarrierCapExceeded, CharacteristicUndetermined, DivisorZero,
                     ElementNotInCarrier, FieldMismatch, NoGeneratorFound, NoRootFound, NotPrime,
                     OrderMismatch, ReducibleModulus, SplitCheckFailed)
from .modular import UnitsGroup, ZnRing
from .peano import check_nat
from .poly import Poly, _least_divisor, derivative, evaluate, find_irreducible, poly_divmod
from .rings import AxiomReport, FiniteRing, RingIso, SubRing

DEFAULT_CARRIER_CAP = 2**20
CHAR_BOUND = 10**4
TABLE_LIMIT = 1024
SPLIT_LIMIT = 512


class _FieldOps:
    """Shared field helpers for label-based finite fields."""

    def power(self, x, k: int):
        """``x^k`` by square-and-multiply; ``x^0 = 1``."""
        check_nat(k, "k")
        result, base = self.one, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def div(self, x, y):
        return self.mul(x, self.inv(y))


class PrimeField(_FieldOps, ZnRing):
    """``(N_p, +_p, *_p, 0, 1)`` for a prime ``p``."""

    def __init__(self, p: int):
        check_nat(p, "p")
        if p < 2 or not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        super().__init__(p)
        self.p = self.characteristic = p
        self._units: UnitsGroup | None = None

    def __repr__(self):
        return f"GF({self.p})"

    def inv(self, x):
        if x == 0:
            raise DivisorZero("0 has no inverse")
        if self._units is None:
            self._units = UnitsGroup(self.p)
        return self._units.inverse(x)


def make_prime_field(p: int) -> PrimeField:
    return PrimeField(p)


class QuotientField(_FieldOps, FiniteRing):
    """``K_a``: remainders modulo a monic irreducible ``a`` over a finite
    field ``K``, with ``u *_a v = P_a(u v)``."""

    def __init__(self, base, modulus: Poly, check: bool = True):
        if modulus.field != base:
            raise FieldMismatch("modulus is not over the base field")
        if modulus.is_zero() or modulus.degree < 1:
            raise ArgumentOutOfRange("modulus must have degree >= 1")
        if not modulus.is_monic():
            raise ArgumentOutOfRange("modulus must be monic")
        if check:
            factor = _least_divisor(modulus)
            if factor is not None:
                raise ReducibleModulus(f"modulus has the factor {factor.coeffs}", factor=factor)
        self.base = base
        self.modulus = modulus
        self.degree = modulus.degree
        self.q = base.size
        self.size = self.q**self.degree
        self.p = self.characteristic = base.characteristic
        self.zero = 0
        self.one = base.index(base.one)
        self._weights = [self.q**i for i in range(self.degree)]
        self.generator_class = self.from_poly(poly_divmod(Poly.monomial(base, 1), modulus)[1])
        lifted = self.lift(modulus)
        if evaluate(lifted, self.generator_class) != self.zero:
            raise AssertionError("the class of X is not a root of the lifted modulus")

    def __repr__(self):
        return f"GF({self.p}^{self.exponent})[{','.join(map(str, self.modulus_labels()))}]"

    @property
    def exponent(self) -> int:
        """``n`` with ``#F = p^n``."""
        e, s = 0, 1
        while s < self.size:
            s *= self.p
            e += 1
        return e

    def __eq__(self, other):
        return isinstance(other, QuotientField) and other.base == self.base and other.modulus == self.modulus

    def __hash__(self):
        return hash((self.base, self.modulus.coeffs))

    def modulus_labels(self) -> list[int]:
        return [self.base.index(c) for c in self.modulus.coeffs]

    # -- labels and polynomials
    def element(self, i):
        return i

    def index(self, x):
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)) or not 0 <= x < self.size:
            raise ValueError(f"{x!r} is not an element of {self!r}")
        return int(x)

    def contains(self, x):
        return isinstance(x, (int, np.integer)) and not isinstance(x, bool) and 0 <= x < self.size

    def elements(self) -> list[int]:
        return list(range(self.size))

    def digits(self, x) -> list[int]:
        out = []
        for _ in range(self.degree):
            x, d = divmod(x, self.q)
            out.append(d)
        return out

    def _compose(self, digits) -> int:
        return sum(d * w for d, w in zip(digits, self._weights))

    def to_poly(self, x) -> Poly:
        el = self.base.element
        return Poly(self.base, [el(d) for d in self.digits(self.index(x))])

    def from_poly(self, r: Poly) -> int:
        if r.field != self.base:
            raise FieldMismatch("remainder is not over the base field")
        if r.degree is not None and r.degree >= self.degree:
            raise ArgumentOutOfRange("polynomial is not reduced modulo the modulus")
        return self._compose([self.base.index(c) for c in r.coeffs])

    def embed(self, c):
        """``j: K -> K_a``, ``c -> class of the constant c``."""
        return self.base.index(c)

    def lift(self, b: Poly) -> Poly:
        """``ĵ``: apply ``j`` to every coefficient."""
        return Poly(self, [self.embed(c) for c in b.coeffs])

    # -- operations
    def add(self, x, y):
        if "add_table" in self.__dict__:
            return int(self.add_table[x, y])
        B, el = self.base, self.base.element
        return self._compose([B.index(B.add(el(a), el(b))) for a, b in zip(self.digits(x), self.digits(y))])

    def neg(self, x):
        B, el = self.base, self.base.element
        return self._compose([B.index(B.neg(el(a))) for a in self.digits(x)])

    def mul_poly(self, x, y):
        """The definition: ``P_a(u * v)``."""
        return self.from_poly(poly_divmod(self.to_poly(x) * self.to_poly(y), self.modulus)[1])

    def mul(self, x, y):
        if self.size <= TABLE_LIMIT:
            return int(self.mul_table[x, y])
        return self.mul_poly(x, y)

    def inv(self, x):
        """``x^(#F - 2)``."""
        if x == self.zero:
            raise DivisorZero("0 has no inverse")
        return self.power(x, self.size - 2)

    # -- vectorized tables, prime base only
    def _digit_array(self):
        idx = np.arange(self.size, dtype=np.int64)
        return np.stack([(idx // w) % self.q for w in self._weights], axis=1)

    @cached_property
    def add_table(self):
        if not isinstance(self.base, PrimeField):
            return self._table(self.add)
        D = self._digit_array()
        p = self.p
        T = np.zeros((self.size, self.size), dtype=np.int64)
        for i, w in enumerate(self._weights):
            T += ((D[:, None, i] + D[None, :, i]) % p) * w
        return T

    @cached_property
    def mul_table(self):
        if not isinstance(self.base, PrimeField):
            return self._table(self.mul_poly)
        D = self._digit_array()
        n, p, size = self.degree, self.p, self.size
        a = np.array(self.modulus_labels(), dtype=np.int64)
        T = np.empty((size, size), dtype=np.int64)
        block = max(1, (1 << 22) // (size * (2 * n - 1)))
        for start in range(0, size, block):
            rows = D[start:start + block]
            prod = np.zeros((len(rows), size, 2 * n - 1), dtype=np.int64)
            for i in range(n):
                for j in range(n):
                    prod[:, :, i + j] += rows[:, None, i] * D[None, :, j]
            prod %= p
            for k in range(2 * n - 2, n - 1, -1):
                c = prod[:, :, k].copy()
                for i in range(n + 1):
                    prod[:, :, k - n + i] = (prod[:, :, k - n + i] - c * a[i]) % p
            T[start:start + block] = sum(prod[:, :, i] * w for i, w in enumerate(self._weights))
        return T


def make_quotient_field(base, modulus: Poly) -> QuotientField:
    return QuotientField(base, modulus)


def make_gf(p: int, n: int, cap: int = DEFAULT_CARRIER_CAP) -> QuotientField:
    """``GF(p^n)`` as ``Z_p[X]`` modulo the canonical monic irreducible of degree ``n``."""
    check_nat(n, "n")
    if n < 1:
        raise ArgumentOutOfRange("n must be >= 1")
    K = make_prime_field(p)
    if p**n > cap:
        raise CarrierCapExceeded(f"{p}^{n} exceeds the carrier cap {cap}")
    # find_irreducible has just established irreducibility
    return QuotientField(K, find_irreducible(K, n), check=False)


@dataclass
class PrimeSubfieldReport:
    characteristic: int
    elements: tuple | None
    iso: RingIso | None
    report: AxiomReport | None


def characteristic_and_prime_subfield(F, bound: int = CHAR_BOUND) -> PrimeSubfieldReport:
    """Least ``n >= 1`` with ``n . 1 = 0``; the prime subfield is the set of
    iterates of ``1``, matched with ``Z_char`` by ``k -> k . 1``."""
    from .integers import RationalField

    acc, k = F.one, 1
    multiples = [F.zero]
    while acc != F.zero:
        if k >= bound:
            if isinstance(F, RationalField):
                return PrimeSubfieldReport(0, None, None, None)
            raise CharacteristicUndetermined(f"no characteristic found below {bound}")
        multiples.append(acc)
        acc = F.add(acc, F.one)
        k += 1
    char = k
    position = {x: i for i, x in enumerate(multiples)}
    sub = SubRing(F, multiples)
    iso = RingIso(ZnRing(char), sub, multiples.__getitem__, position.__getitem__)
    return PrimeSubfieldReport(char, tuple(multiples), iso, iso.verify())


@dataclass
class FrobeniusReport:
    power: int
    images: tuple
    fixed: tuple
    automorphism: AxiomReport
    subfield: AxiomReport

    @property
    def ok(self) -> bool:
        return self.automorphism.ok and self.subfield.ok


def frobenius_fixed(F, m: int) -> FrobeniusReport:
    """``x -> x^(p^m)``, verified to be an automorphism, and its fixed set,
    verified to be a subfield."""
    check_nat(m, "m")
    if m < 1:
        raise ArgumentOutOfRange("m must be >= 1")
    k = F.characteristic**m
    els = F.elements()
    images = [F.power(x, k) for x in els]
    back = {}
    for x, y in zip(els, images):
        back.setdefault(y, x)
    forward = dict(zip(els, images)).__getitem__
    iso = RingIso(F, F, forward, lambda y: back.get(y, F.zero))
    fixed = tuple(x for x, y in zip(els, images) if x == y)
    return FrobeniusReport(k, tuple(images), fixed, iso.verify(), SubRing(F, fixed).closure_report())


def mult_order(F, x) -> int:
    if x == F.zero:
        raise ArgumentOutOfRange("0 has no multiplicative order")
    k, y = 1, x
    while y != F.one:
        y = F.mul(y, x)
        k += 1
    return k


def mult_generator(F):
    """First element, in label order, of multiplicative order ``#F - 1``."""
    target = F.size - 1
    for x in F.elements():
        if x != F.zero and mult_order(F, x) == target:
            return x
    raise NoGeneratorFound(f"no generator of the multiplicative group of {F!r}")


@dataclass
class SplittingReport:
    product: Poly
    target: Poly
    derivative: Poly
    product_ok: bool
    derivative_ok: bool
    roots_ok: bool

    @property
    def ok(self) -> bool:
        return self.product_ok and self.derivative_ok and self.roots_ok


def verify_splitting(F, limit: int = SPLIT_LIMIT) -> SplittingReport:
    """``prod_{alpha in F} (X - alpha) = X^q - X`` in ``F[X]``, the derivative
    of ``X^q - X`` is ``-1`` and every element is a root."""
    if F.size > limit:
        raise ArgumentOutOfRange(f"splitting check is limited to {limit} elements")
    product = Poly.constant(F, F.one)
    for alpha in F.elements():
        product = product * Poly.x_minus(F, alpha)
    target = Poly.monomial(F, F.size) - Poly.monomial(F, 1)
    d = derivative(target)
    report = SplittingReport(
        product, target, d,
        product_ok=product == target,
        derivative_ok=d == Poly.constant(F, F.neg(F.one)),
        roots_ok=all(evaluate(target, a) == F.zero for a in F.elements()),
    )
    if not report.ok:
        raise SplitCheckFailed(f"splitting check failed for {F!r}")
    return report


@dataclass
class FieldIso:
    source: QuotientField
    target: QuotientField
    image_of_generator: Any
    iso: RingIso

    def __call__(self, x):
        return self.iso(x)

    def verify(self) -> AxiomReport:
        return self.iso.verify()


def find_isomorphism(F: QuotientField, F2: QuotientField) -> FieldIso:
    """Find the first root ``beta`` (label order) of ``F``'s modulus in
    ``F2`` and extend the class of ``X -> beta`` by evaluation."""
    if F.size != F2.size:
        raise OrderMismatch(f"{F!r} has {F.size} elements, {F2!r} has {F2.size}")
    if F.base != F2.base:
        raise FieldMismatch("fields over different base fields")
    lifted = F2.lift(F.modulus)
    beta = next((b for b in F2.elements() if evaluate(lifted, b) == F2.zero), None)
    if beta is None:
        raise NoRootFound(f"modulus of {F!r} has no root in {F2!r}")
    powers = [F2.power(beta, i) for i in range(F.degree)]

    def image(x):
        acc = F2.zero
        for d, b in zip(F.digits(x), powers):
            acc = F2.add(acc, F2.mul(F2.embed(F.base.element(d)), b))
        return acc

    images = [image(x) for x in F.elements()]
    back = {}
    for x, y in enumerate(images):
        back.setdefault(y, x)
    iso = RingIso(F, F2, images.__getitem__, lambda y: back.get(y, F.zero))
    return FieldIso(F, F2, beta, iso)


@dataclass
class SolveResult:
    status: str  # "unique" or "singular"
    solution: tuple | None = None
    column: int | None = None


def linear_solve(field, A: Sequence[Sequence], b: Sequence) -> SolveResult:
    """Gauss-Jordan elimination, pivoting on the first nonzero entry.

    A singular matrix is reported with the (0-based) column lacking a pivot.
    """
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ArgumentOutOfRange("linear_solve needs a square matrix and a matching vector")
    for v in [x for row in A for x in row] + list(b):
        if not field.contains(v):
            raise ElementNotInCarrier(f"{v!r} is not in {field!r}")
    zero, add, mul, neg = field.zero, field.add, field.mul, field.neg
    M = [list(row) + [bi] for row, bi in zip(A, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != zero), None)
        if pivot is None:
            return SolveResult("singular", column=col)
        M[col], M[pivot] = M[pivot], M[col]
        s = field.inv(M[col][col])
        M[col] = [mul(s, v) for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != zero:
                f = neg(M[r][col])
                M[r] = [add(v, mul(f, w)) for v, w in zip(M[r], M[col])]
    return SolveResult("unique", solution=tuple(row[n] for row in M))
