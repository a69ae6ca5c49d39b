"""Monoids, their iterates, homomorphisms and Grothendieck groups.

A :class:`Monoid` is any associative operation with identity, described by
callables (``(N, +, 0)`` and ``(N*, *, 1)`` are provided).  A
:class:`FiniteMonoid` is given by its operation table over element indices,
which makes every law exhaustively checkable.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from .divisibility import _gcd
from .errors import ArgumentOutOfRange, ElementNotInCarrier, NotCancellative
from .peano import check_nat, recurse


class Monoid:
    """``(M, op, identity)``.

    ``contains`` decides carrier membership; ``inverse`` is set for groups
    and ``reduce_pair`` gives the canonical representative of a formal
    difference in the Grothendieck group (if one is known).
    """

    def __init__(self, op: Callable[[Any, Any], Any], identity, contains: Callable[[Any], bool] = lambda x: True,
                 name: str = "M", *, inverse: Callable[[Any], Any] | None = None,
                 commutative: bool | None = None, cancellative: bool | None = None,
                 reduce_pair: Callable[[Any, Any], tuple] | None = None):
        self.op = op
        self.identity = identity
        self.contains = contains
        self.name = name
        self.inverse = inverse
        self.commutative = commutative
        self.cancellative = cancellative
        self.reduce_pair = reduce_pair

    def __repr__(self):
        return f"<Monoid {self.name}>"

    @property
    def is_group(self) -> bool:
        return self.inverse is not None


def _is_nat(x):
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


def _reduce_additive(a, b):
    return (a - b, 0) if a >= b else (0, b - a)


def _reduce_multiplicative(a, b):
    g = _gcd(a, b)
    return a // g, b // g


NAT_ADD = Monoid(operator.add, 0, _is_nat, "(N,+,0)", commutative=True, cancellative=True,
                 reduce_pair=_reduce_additive)
NAT_MUL = Monoid(operator.mul, 1, _is_nat, "(N,*,1)", commutative=True, cancellative=False)
NATSTAR_MUL = Monoid(operator.mul, 1, lambda x: _is_nat(x) and x > 0, "(N*,*,1)", commutative=True,
                     cancellative=True, reduce_pair=_reduce_multiplicative)


class FiniteMonoid(Monoid):
    """A monoid over the indices ``0..k-1`` with a row-major operation table."""

    def __init__(self, table: Sequence[Sequence[int]], identity: int = 0, labels: Sequence | None = None,
                 name: str = "M", validate: bool = True):
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        k = len(self.table)
        if k == 0 or any(len(row) != k for row in self.table):
            raise ArgumentOutOfRange("operation table must be square and nonempty")
        if any(not 0 <= v < k for row in self.table for v in row):
            raise ArgumentOutOfRange("operation table entries must be carrier indices")
        self.order = k
        self.labels = tuple(labels) if labels is not None else tuple(range(k))
        super().__init__(self._op, identity, lambda x: _is_nat(x) and x < k, name)
        if validate:
            if any(self.table[identity][a] != a or self.table[a][identity] != a for a in range(k)):
                raise ArgumentOutOfRange(f"index {identity} is not an identity")
            if not self.is_associative():
                raise ArgumentOutOfRange("operation is not associative")
        self.commutative = all(self.table[a][b] == self.table[b][a] for a in range(k) for b in range(a))

    def _op(self, a, b):
        return self.table[a][b]

    @property
    def carrier(self) -> range:
        return range(self.order)

    def is_associative(self) -> bool:
        T = np.array(self.table, dtype=np.int64)
        return bool((T[T] == T[:, T]).all())

    @classmethod
    def from_operation(cls, elements: Sequence, op: Callable, identity, name: str = "M") -> "FiniteMonoid":
        """Tabulate ``op`` on ``elements``; the identity is moved to index 0
        so the table fits the corpus format."""
        els = [identity] + [x for x in elements if x != identity]
        pos = {x: i for i, x in enumerate(els)}
        try:
            table = [[pos[op(x, y)] for y in els] for x in els]
        except KeyError as exc:
            raise ArgumentOutOfRange(f"operation leaves the carrier: {exc}") from None
        return cls(table, 0, labels=els, name=name)

    def label(self, a):
        return self.labels[a]


def product_monoid(M1: FiniteMonoid, M2: FiniteMonoid) -> FiniteMonoid:
    """``M1 x M2`` with the componentwise operation; index ``i*|M2| + j``."""
    k1, k2 = M1.order, M2.order

    def idx(a, b):
        return a * k2 + b

    table = [[idx(M1.table[a1][b1], M2.table[a2][b2]) for b1 in range(k1) for b2 in range(k2)]
             for a1 in range(k1) for a2 in range(k2)]
    labels = [(M1.labels[a], M2.labels[b]) for a in range(k1) for b in range(k2)]
    return FiniteMonoid(table, idx(M1.identity, M2.identity), labels, f"{M1.name}x{M2.name}")


def _require(M, a):
    if not M.contains(a):
        raise ElementNotInCarrier(f"{a!r} is not in {M.name}")


def mon_iterate(M: Monoid, a, n: int):
    """``n``-fold iterate of ``a``: ``phi_a(0) = e``, ``phi_a(S(n)) = a op phi_a(n)``."""
    _require(M, a)
    check_nat(n)
    op = M.op
    return recurse(M.identity, lambda x: op(a, x), n)


def closure(M: FiniteMonoid, a) -> list:
    """``I(a)``, in order of first appearance: ``e, a, a op a, ...``."""
    _require(M, a)
    seen, out = set(), []
    x = M.identity
    while x not in seen:
        seen.add(x)
        out.append(x)
        x = M.op(a, x)
    return out


@dataclass(frozen=True)
class HomCheck:
    kind: str  # "hom", "iso" or "neither"
    witness: tuple | None = None
    reason: str = ""


def check_homomorphism(f: Callable, M: FiniteMonoid, M2: FiniteMonoid) -> HomCheck:
    """Classify ``f: M -> M2``.  A failure carries the offending pair
    (or the identity, if ``f(e) != e'``)."""
    images = {a: f(a) for a in M.carrier}
    for a, fa in images.items():
        if not M2.contains(fa):
            return HomCheck("neither", (a,), "image outside the target carrier")
    if images[M.identity] != M2.identity:
        return HomCheck("neither", (M.identity,), "identity not preserved")
    for a, b in itertools.product(M.carrier, repeat=2):
        if images[M.op(a, b)] != M2.op(images[a], images[b]):
            return HomCheck("neither", (a, b), "product not preserved")
    hit = set(images.values())
    if len(hit) == M.order and hit == set(M2.carrier):
        return HomCheck("iso")
    if len(hit) != M.order:
        a, b = next((a, b) for a, b in itertools.combinations(M.carrier, 2) if images[a] == images[b])
        return HomCheck("hom", (a, b), "not injective")
    missing = min(set(M2.carrier) - hit)
    return HomCheck("hom", (missing,), "not surjective")


@dataclass(frozen=True)
class MonoidClassification:
    commutative: bool
    cancellative: bool
    positive: bool
    units: frozenset
    generators: frozenset
    primitive: bool
    group: bool
    cancellation_witness: tuple | None = None


def units(M: FiniteMonoid) -> frozenset:
    e = M.identity
    T = M.table
    return frozenset(a for a in M.carrier if any(T[a][b] == e and T[b][a] == e for b in M.carrier))


def inverse_in(M: FiniteMonoid, a):
    e = M.identity
    for b in M.carrier:
        if M.table[a][b] == e and M.table[b][a] == e:
            return b
    raise ArgumentOutOfRange(f"{a} is not invertible in {M.name}")


def monoid_classify(M: FiniteMonoid) -> MonoidClassification:
    """Exhaustive classification of a finite monoid."""
    T = M.table
    k = M.order
    e = M.identity
    witness = None
    for a, b, c in itertools.product(range(k), repeat=3):
        if a != b and (T[a][c] == T[b][c] or T[c][a] == T[c][b]):
            witness = (a, b, c)
            break
    positive = all(not (T[a][b] == e) or (a == e and b == e) for a in range(k) for b in range(k))
    unit_set = units(M)
    gens = frozenset(a for a in range(k) if a != e and len(closure(M, a)) == k)
    return MonoidClassification(
        commutative=M.commutative,
        cancellative=witness is None,
        positive=positive,
        units=unit_set,
        generators=gens,
        primitive=bool(gens),
        group=len(unit_set) == k,
        cancellation_witness=witness,
    )


def as_group(M: FiniteMonoid) -> FiniteMonoid:
    """Attach the inverse map to a finite monoid that is a group."""
    if len(units(M)) != M.order:
        raise ArgumentOutOfRange(f"{M.name} is not a group")
    inv = {a: inverse_in(M, a) for a in M.carrier}
    M.inverse = inv.__getitem__
    return M


def signed_iterate(G: Monoid, a, z):
    """``z``-th signed iterate: ``mon_iterate(a, z)`` for ``z >= 0``, the
    inverse of ``mon_iterate(a, -z)`` otherwise.  ``z`` may be an ``int`` or
    an :class:`~constructa.integers.IntZ`."""
    if G.inverse is None:
        raise ArgumentOutOfRange(f"{G.name} is not a group handle")
    _require(G, a)
    sign, magnitude = _sign_magnitude(z)
    value = mon_iterate(G, a, magnitude)
    return G.inverse(value) if sign < 0 else value


def _sign_magnitude(z):
    if hasattr(z, "sign") and hasattr(z, "magnitude"):
        return z.sign, z.magnitude
    if isinstance(z, bool) or not isinstance(z, int):
        raise TypeError(f"signed iterate count must be an integer, got {type(z).__name__}")
    return (1 if z > 0 else -1 if z < 0 else 0), abs(z)


@dataclass(frozen=True)
class Diff:
    """A formal difference ``plus - minus``, kept in canonical form."""

    plus: Any
    minus: Any


class GrothendieckGroup(Monoid):
    """Group of formal differences of a commutative cancellative monoid.

    ``(a, b) ~ (c, d)`` iff ``a op d = c op b``.  Representatives are
    canonical when the monoid supplies ``reduce_pair``; for a finite monoid
    (already a group) ``(a, b)`` reduces to ``(a op b^-1, e)``.
    """

    def __init__(self, base: Monoid):
        self.base = base
        if isinstance(base, FiniteMonoid):
            info = monoid_classify(base)
            if not info.commutative:
                raise NotCancellative(f"{base.name} is not commutative")
            if not info.cancellative:
                raise NotCancellative(f"{base.name} is not cancellative: witness {info.cancellation_witness}",
                                      witness=info.cancellation_witness)
            inv = {a: inverse_in(base, a) for a in base.carrier}
            self._reduce = lambda a, b: (base.op(a, inv[b]), base.identity)
        else:
            if base.commutative is not True or base.cancellative is not True:
                raise NotCancellative(f"{base.name} is not known to be commutative and cancellative")
            if base.reduce_pair is None:
                raise ArgumentOutOfRange(f"{base.name} has no canonical reduction of differences")
            self._reduce = base.reduce_pair
        super().__init__(self._op, self.make(base.identity, base.identity), self._contains,
                         f"K({base.name})", inverse=self._inverse, commutative=True, cancellative=True)

    def make(self, plus, minus) -> Diff:
        _require(self.base, plus)
        _require(self.base, minus)
        return Diff(*self._reduce(plus, minus))

    def embed(self, a) -> Diff:
        return self.make(a, self.base.identity)

    def _contains(self, x):
        return isinstance(x, Diff) and self.base.contains(x.plus) and self.base.contains(x.minus)

    def _op(self, x: Diff, y: Diff) -> Diff:
        op = self.base.op
        return Diff(*self._reduce(op(x.plus, y.plus), op(x.minus, y.minus)))

    def _inverse(self, x: Diff) -> Diff:
        return Diff(*self._reduce(x.minus, x.plus))

    def equivalent(self, a, b, c, d) -> bool:
        op = self.base.op
        return op(a, d) == op(c, b)


def grothendieck(M: Monoid) -> GrothendieckGroup:
    return GrothendieckGroup(M)


# -- corpus file format ------------------------------------------------------

def dump_corpus(monoids: Iterable[FiniteMonoid]) -> str:
    """``order k`` followed by ``k`` table rows per monoid, identity at index 0."""
    lines = []
    for M in monoids:
        if M.identity != 0:
            raise ArgumentOutOfRange("corpus format requires the identity at index 0")
        lines.append(f"order {M.order}")
        lines.extend(" ".join(str(v) for v in row) for row in M.table)
    return "".join(line + "\n" for line in lines)


def parse_corpus(text: str) -> list[FiniteMonoid]:
    lines = text.splitlines()
    out = []
    i = 0
    while i < len(lines):
        header = lines[i].split()
        if not header:
            i += 1
            continue
        if len(header) != 2 or header[0] != "order":
            raise ArgumentOutOfRange(f"line {i + 1}: expected 'order k', got {lines[i]!r}")
        k = int(header[1])
        rows = [[int(v) for v in lines[i + 1 + r].split()] for r in range(k)]
        out.append(FiniteMonoid(rows, 0, name=f"corpus[{len(out)}]"))
        i += 1 + k
    return out


def cyclic_monoid(n: int) -> FiniteMonoid:
    """``(N_n, +_n, 0)``."""
    return FiniteMonoid([[(a + b) % n for b in range(n)] for a in range(n)], 0, name=f"(N_{n},+)")


def multiplicative_monoid(n: int) -> FiniteMonoid:
    """``(N_n, *_n, 1)`` with ``1`` moved to index 0 (labels keep the residues)."""
    return FiniteMonoid.from_operation(range(n), lambda x, y: (x * y) % n, 1, name=f"(N_{n},*)")


def generated_corpus(max_order: int = 8) -> list[FiniteMonoid]:
    """A deterministic mix of groups and non-groups of order <= ``max_order``:
    cyclic groups, multiplicative monoids, their units groups, saturating
    counters, max/min semilattices and all small direct products."""
    base = []
    for n in range(1, max_order + 1):
        base.append(cyclic_monoid(n) if n > 1 else FiniteMonoid([[0]], name="trivial"))
        if n >= 2:
            base.append(multiplicative_monoid(n))
            us = [u for u in range(1, n) if _gcd(u, n) == 1]
            base.append(FiniteMonoid.from_operation(us, lambda x, y, n=n: (x * y) % n, 1, name=f"U({n})"))
            base.append(FiniteMonoid.from_operation(range(n), lambda x, y, c=n - 1: min(x + y, c), 0,
                                                    name=f"sat{n}"))
            base.append(FiniteMonoid.from_operation(range(n), max, 0, name=f"max{n}"))
            base.append(FiniteMonoid.from_operation(range(n), min, n - 1, name=f"min{n}"))
    small = [M for M in base if 2 <= M.order <= max_order // 2]
    products = [product_monoid(A, B) for A, B in itertools.combinations_with_replacement(small, 2)
                if A.order * B.order <= max_order]
    return base + products
