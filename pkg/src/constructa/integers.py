"""The integers and the rationals, obtained by formal differences.

``Z`` is the Grothendieck group of ``(N, +, 0)``; its multiplication is the
signed iterate ``m * n := m-th signed iterate of n`` in ``(Z, +, 0)``.

``Q`` is built along two routes:

* ``two_step``: the positive fractions are the Grothendieck group of
  ``(N*, *, 1)``; adjoining ``0`` gives the semifield ``Q>=0``, whose
  additive Grothendieck group is the field, with
  ``(x, y)(u, v) = (xu + yv, xv + yu)``;
* ``quotient_field``: the field of quotients of the domain ``Z``.

:func:`canonical_map` carries the first into the second and
:func:`verify_cross_route` checks it on a finite window of fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .divisibility import _gcd
from .errors import ArgumentOutOfRange, DivisorZero
from .monoid import NAT_ADD, NATSTAR_MUL, Diff, Monoid, grothendieck, signed_iterate
from .peano import check_nat


@dataclass(frozen=True)
class IntZ:
    """An integer as ``sign`` in ``{-1, 0, 1}`` and a natural ``magnitude``."""

    sign: int
    magnitude: int

    def __post_init__(self):
        check_nat(self.magnitude, "magnitude")
        if self.sign not in (-1, 0, 1) or (self.sign == 0) != (self.magnitude == 0):
            raise ArgumentOutOfRange(f"non-canonical integer ({self.sign}, {self.magnitude})")

    @classmethod
    def of(cls, value: int) -> "IntZ":
        return cls((value > 0) - (value < 0), abs(value))

    @classmethod
    def from_diff(cls, d: Diff) -> "IntZ":
        if d.minus == 0:
            return cls(1 if d.plus else 0, d.plus)
        return cls(-1, d.minus)

    def to_diff(self) -> Diff:
        return Diff(self.magnitude, 0) if self.sign >= 0 else Diff(0, self.magnitude)

    def __int__(self):
        return self.sign * self.magnitude

    def __repr__(self):
        return f"IntZ({int(self)})"

    def __str__(self):
        return str(int(self))


Z_ZERO = IntZ(0, 0)
Z_ONE = IntZ(1, 1)


class IntegerRing:
    """``(Z, +, *, 0, 1)``.

    Addition is the operation of the Grothendieck group of ``(N, +, 0)``.
    ``mode="iterate"`` multiplies by signed iterates; ``mode="fast"``
    multiplies magnitudes natively and applies the sign rule.
    """

    is_finite = False
    characteristic = 0

    def __init__(self, mode: str = "iterate"):
        if mode not in ("iterate", "fast"):
            raise ArgumentOutOfRange(f"unknown mode {mode!r}; expected iterate or fast")
        self.mode = mode
        self.differences = grothendieck(NAT_ADD)
        self.zero, self.one = Z_ZERO, Z_ONE
        self.additive = Monoid(self.add, Z_ZERO, self.contains, "(Z,+,0)", inverse=self.neg,
                               commutative=True, cancellative=True)

    def contains(self, x) -> bool:
        return isinstance(x, IntZ)

    def embed(self, n: int) -> IntZ:
        """The embedding ``N -> Z``, ``n -> (n, 0)``."""
        return IntZ.from_diff(self.differences.embed(n))

    def add(self, x: IntZ, y: IntZ) -> IntZ:
        return IntZ.from_diff(self.differences.op(x.to_diff(), y.to_diff()))

    def neg(self, x: IntZ) -> IntZ:
        return IntZ(-x.sign, x.magnitude)

    def sub(self, x: IntZ, y: IntZ) -> IntZ:
        return self.add(x, self.neg(y))

    def mul(self, x: IntZ, y: IntZ) -> IntZ:
        if self.mode == "fast":
            return IntZ(x.sign * y.sign, x.magnitude * y.magnitude)
        return signed_iterate(self.additive, y, x)

    def lt(self, x: IntZ, y: IntZ) -> bool:
        return self.sub(y, x).sign > 0


def build_integers(mode: str = "iterate") -> IntegerRing:
    return IntegerRing(mode)


# -- rationals, quotient-field route -----------------------------------------

@dataclass(frozen=True)
class RatQ:
    """A reduced fraction ``num / den`` with ``den >= 1``; zero is ``0/1``."""

    num: IntZ
    den: int

    def __post_init__(self):
        check_nat(self.den, "den")
        if self.den < 1 or _gcd(self.num.magnitude, self.den) != 1:
            raise ArgumentOutOfRange(f"non-canonical fraction {self.num}/{self.den}")

    def __str__(self):
        return f"{self.num}/{self.den}"


def _reduced(num: IntZ, den: int) -> RatQ:
    g = _gcd(num.magnitude, den)
    return RatQ(IntZ(num.sign, num.magnitude // g), den // g)


class QuotientFieldQ:
    """Pairs ``(a, b)`` of integers with ``b != 0`` modulo ``ad = cb``."""

    route = "quotient_field"

    def __init__(self, Z: IntegerRing | None = None):
        self.Z = Z or IntegerRing("fast")
        self.zero = RatQ(Z_ZERO, 1)
        self.one = RatQ(Z_ONE, 1)

    def make(self, num: IntZ, den: IntZ) -> RatQ:
        if den.sign == 0:
            raise DivisorZero("fraction with zero denominator")
        if den.sign < 0:
            num, den = self.Z.neg(num), self.Z.neg(den)
        return _reduced(num, den.magnitude)

    def _den(self, x: RatQ) -> IntZ:
        return IntZ(1, x.den)

    def add(self, x: RatQ, y: RatQ) -> RatQ:
        Z = self.Z
        num = Z.add(Z.mul(x.num, self._den(y)), Z.mul(y.num, self._den(x)))
        return self.make(num, Z.mul(self._den(x), self._den(y)))

    def mul(self, x: RatQ, y: RatQ) -> RatQ:
        Z = self.Z
        return self.make(Z.mul(x.num, y.num), Z.mul(self._den(x), self._den(y)))

    def neg(self, x: RatQ) -> RatQ:
        return RatQ(self.Z.neg(x.num), x.den)

    def inv(self, x: RatQ) -> RatQ:
        if x.num.sign == 0:
            raise DivisorZero("0 has no inverse")
        return self.make(self._den(x), x.num)

    def sign(self, x: RatQ) -> int:
        return x.num.sign

    def from_fraction(self, num: int, den: int) -> RatQ:
        return self.make(IntZ.of(num), IntZ.of(den))

    def to_fraction(self, x: RatQ) -> tuple[int, int]:
        return int(x.num), x.den


# -- rationals, two-step route -----------------------------------------------

@dataclass(frozen=True)
class QNonneg:
    """An element of ``Q>=0``: ``ZERO`` or a positive fraction held as the
    canonical difference ``(a, b)`` in the Grothendieck group of ``(N*, *, 1)``."""

    ratio: Diff | None

    @property
    def is_zero(self) -> bool:
        return self.ratio is None

    def pair(self) -> tuple[int, int]:
        return (0, 1) if self.ratio is None else (self.ratio.plus, self.ratio.minus)


class NonnegRationals:
    """The semifield ``(Q>=0, +, *, 0, 1)``."""

    def __init__(self):
        self.positive = grothendieck(NATSTAR_MUL)
        self.zero = QNonneg(None)
        self.one = QNonneg(self.positive.identity)

    def make(self, a: int, b: int) -> QNonneg:
        return self.zero if a == 0 else QNonneg(self.positive.make(a, b))

    def add(self, x: QNonneg, y: QNonneg) -> QNonneg:
        if x.is_zero:
            return y
        if y.is_zero:
            return x
        (a, b), (c, d) = x.pair(), y.pair()
        return self.make(a * d + c * b, b * d)

    def mul(self, x: QNonneg, y: QNonneg) -> QNonneg:
        if x.is_zero or y.is_zero:
            return self.zero
        return QNonneg(self.positive.op(x.ratio, y.ratio))

    def le(self, x: QNonneg, y: QNonneg) -> bool:
        (a, b), (c, d) = x.pair(), y.pair()
        return a * d <= c * b

    def monus(self, x: QNonneg, y: QNonneg) -> QNonneg:
        """``x - y`` for ``y <= x``."""
        (a, b), (c, d) = x.pair(), y.pair()
        return self.make(a * d - c * b, b * d)

    def inv(self, x: QNonneg) -> QNonneg:
        return QNonneg(self.positive.inverse(x.ratio))

    def as_monoid(self) -> Monoid:
        def reduce_pair(x, y):
            return (self.monus(x, y), self.zero) if self.le(y, x) else (self.zero, self.monus(y, x))

        return Monoid(self.add, self.zero, lambda x: isinstance(x, QNonneg), "(Q>=0,+,0)",
                      commutative=True, cancellative=True, reduce_pair=reduce_pair)


class TwoStepQ:
    """The additive Grothendieck group of ``Q>=0`` with the induced product."""

    route = "two_step"

    def __init__(self):
        self.half = NonnegRationals()
        self.group = grothendieck(self.half.as_monoid())
        self.zero = self.group.identity
        self.one = self.group.embed(self.half.one)

    def add(self, x: Diff, y: Diff) -> Diff:
        return self.group.op(x, y)

    def mul(self, x: Diff, y: Diff) -> Diff:
        H = self.half
        plus = H.add(H.mul(x.plus, y.plus), H.mul(x.minus, y.minus))
        minus = H.add(H.mul(x.plus, y.minus), H.mul(x.minus, y.plus))
        return self.group.make(plus, minus)

    def neg(self, x: Diff) -> Diff:
        return self.group.inverse(x)

    def inv(self, x: Diff) -> Diff:
        if not x.plus.is_zero:
            return self.group.embed(self.half.inv(x.plus))
        if not x.minus.is_zero:
            return self.group.make(self.half.zero, self.half.inv(x.minus))
        raise DivisorZero("0 has no inverse")

    def sign(self, x: Diff) -> int:
        return 1 if not x.plus.is_zero else (-1 if not x.minus.is_zero else 0)

    def from_fraction(self, num: int, den: int) -> Diff:
        if den == 0:
            raise DivisorZero("fraction with zero denominator")
        if den < 0:
            num, den = -num, -den
        part = self.half.make(abs(num), den)
        return self.group.embed(part) if num >= 0 else self.group.make(self.half.zero, part)

    def to_fraction(self, x: Diff) -> tuple[int, int]:
        if not x.minus.is_zero:
            a, b = x.minus.pair()
            return -a, b
        return x.plus.pair()


class RationalField:
    """Handle for ``Q`` along one construction route.

    An infinite field: ``is_finite`` is false and there is no enumeration.
    """

    is_finite = False

    def __init__(self, route: str = "quotient_field"):
        if route == "two_step":
            self.impl = TwoStepQ()
        elif route == "quotient_field":
            self.impl = QuotientFieldQ()
        else:
            raise ArgumentOutOfRange(f"unknown route {route!r}; expected two_step or quotient_field")
        self.route = route
        self.zero, self.one = self.impl.zero, self.impl.one

    def __repr__(self):
        return f"Q[{self.route}]"

    def add(self, x, y):
        return self.impl.add(x, y)

    def mul(self, x, y):
        return self.impl.mul(x, y)

    def neg(self, x):
        return self.impl.neg(x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def inv(self, x):
        return self.impl.inv(x)

    def from_fraction(self, num: int, den: int = 1):
        return self.impl.from_fraction(num, den)

    def to_fraction(self, x) -> tuple[int, int]:
        return self.impl.to_fraction(x)

    def compare(self, x, y) -> str:
        s = self.impl.sign(self.sub(y, x))
        return "lt" if s > 0 else ("eq" if s == 0 else "gt")

    def lt(self, x, y) -> bool:
        return self.compare(x, y) == "lt"

    def additive(self) -> Monoid:
        return Monoid(self.add, self.zero, lambda x: True, f"({self!r},+,0)", inverse=self.neg)


def build_rationals(route: str = "two_step") -> RationalField:
    return RationalField(route)


def canonical_map(x: Diff, source: RationalField, target: RationalField) -> RatQ:
    """``(x, y) -> x - y``: the class of a formal difference of nonnegative
    fractions, written as a quotient of integers."""
    if source.route != "two_step" or target.route != "quotient_field":
        raise ArgumentOutOfRange("canonical_map goes from the two_step route to the quotient_field route")
    Q = target.impl

    def frac(h: QNonneg) -> RatQ:
        a, b = h.pair()
        return Q.make(IntZ.of(a), IntZ.of(b))

    return Q.add(frac(x.plus), Q.neg(frac(x.minus)))


def reduced_fractions(bound: int) -> Iterator[tuple[int, int]]:
    """All reduced ``(num, den)`` with ``|num| <= bound`` and ``1 <= den <= bound``."""
    for den in range(1, bound + 1):
        for num in range(-bound, bound + 1):
            if _gcd(abs(num), den) == 1:
                yield num, den


@dataclass
class CrossRouteReport:
    elements: int
    pairs: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_cross_route(bound: int = 20, pair_bound: int | None = None) -> CrossRouteReport:
    """Check that :func:`canonical_map` is an injective map preserving
    ``0``, ``1``, ``+`` and ``*`` on the reduced fractions within ``bound``.
    Pairs are drawn from the fractions within ``pair_bound`` (default:
    ``bound``)."""
    A, B = RationalField("two_step"), RationalField("quotient_field")
    failures = []
    fracs = list(reduced_fractions(bound))
    image = {}
    for f in fracs:
        x = A.from_fraction(*f)
        y = canonical_map(x, A, B)
        if y != B.from_fraction(*f) or A.to_fraction(x) != f:
            failures.append(("value", f))
        image[f] = (x, y)
    if len(set(y for _, y in image.values())) != len(fracs):
        failures.append(("injective", None))
    if canonical_map(A.zero, A, B) != B.zero or canonical_map(A.one, A, B) != B.one:
        failures.append(("identities", None))
    limit = bound if pair_bound is None else pair_bound
    small = [f for f in fracs if abs(f[0]) <= limit and f[1] <= limit]
    pairs = 0
    for f in small:
        x, y = image[f]
        for g in small:
            u, v = image[g]
            pairs += 1
            if canonical_map(A.add(x, u), A, B) != B.add(y, v):
                failures.append(("add", f, g))
            if canonical_map(A.mul(x, u), A, B) != B.mul(y, v):
                failures.append(("mul", f, g))
    return CrossRouteReport(len(fracs), pairs, failures)


def archimedean_witness(x, y, Q: RationalField | None = None, limit: int = 10**7) -> int:
    """Least ``n`` with ``n*x > y``, for ``x > 0``, found by a linear scan
    over the iterates of ``x`` in ``(Q, +, 0)``.  ``x`` and ``y`` may be
    field elements or ``(num, den)`` pairs."""
    Q = Q or RationalField("quotient_field")
    if isinstance(x, tuple):
        x = Q.from_fraction(*x)
    if isinstance(y, tuple):
        y = Q.from_fraction(*y)
    if not Q.lt(Q.zero, x):
        raise ArgumentOutOfRange("archimedean_witness needs x > 0")
    n, acc = 0, Q.zero
    add = Q.add
    while not Q.lt(y, acc):
        if n >= limit:
            raise ArgumentOutOfRange(f"no witness below {limit}")
        acc = add(acc, x)
        n += 1
    return n
