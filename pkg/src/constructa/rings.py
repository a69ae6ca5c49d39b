"""Finite commutative rings with unity, given by their operations.

Elements are addressed by an index in ``range(size)``.  Exhaustive law
checks run on the operation tables with numpy, one slab of the cube
``size**3`` at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Sequence

import numpy as np


def index_dtype(size: int):
    """Smallest signed integer dtype holding every index below ``size``."""
    for dt in (np.int16, np.int32):
        if size <= np.iinfo(dt).max:
            return dt
    return np.int64


class FiniteRing:
    """Base class: subclasses provide ``size``, ``element``, ``index``,
    ``add``, ``mul``, ``neg``, ``zero`` and ``one``."""

    size: int
    zero: Any
    one: Any
    is_finite = True

    def element(self, i: int):
        raise NotImplementedError

    def index(self, x) -> int:
        raise NotImplementedError

    def elements(self) -> list:
        return [self.element(i) for i in range(self.size)]

    def contains(self, x) -> bool:
        try:
            return 0 <= self.index(x) < self.size
        except (TypeError, ValueError):
            return False

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def _table(self, op) -> np.ndarray:
        els = self.elements()
        index = self.index
        table = np.empty((self.size, self.size), dtype=index_dtype(self.size))
        for i, x in enumerate(els):
            table[i] = [index(op(x, y)) for y in els]
        return table

    @cached_property
    def add_table(self) -> np.ndarray:
        return self._table(self.add)

    def pair_table(self, name: str, I: np.ndarray) -> np.ndarray:
        """``table[I[i], I[j]]`` for the ``add_table`` or ``mul_table``."""
        return _gather2(getattr(self, name), I, I)

    @cached_property
    def mul_table(self) -> np.ndarray:
        return self._table(self.mul)


@dataclass
class AxiomReport:
    """Outcome of an exhaustive law check; ``failures`` maps a law name to
    its first counterexample (as element indices)."""

    checked: tuple[str, ...] = ()
    failures: dict[str, tuple] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def _first(mask: np.ndarray):
    if mask.all():
        return None
    return tuple(int(v) for v in np.argwhere(~mask)[0])


def _gather2(T: np.ndarray, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """``T[rows[i], cols[j]]`` for all ``i, j``."""
    return np.take(np.take(T, rows, axis=0), cols, axis=1)


def _check_assoc(T):
    for a in range(T.shape[0]):
        lhs = T[T[a]]  # [b, c] -> (a*b)*c
        rhs = T[a][T]  # [b, c] -> a*(b*c)
        w = _first(lhs == rhs)
        if w is not None:
            return (a,) + w
    return None


def ring_axioms(R: FiniteRing) -> AxiomReport:
    """Check the commutative-ring-with-unity laws exhaustively.

    Both additive and multiplicative monoids must be abelian, ``0`` must
    annihilate, both distributive laws must hold and every element needs
    an additive inverse.
    """
    A, M = R.add_table, R.mul_table
    n = R.size
    z, u = R.index(R.zero), R.index(R.one)
    report = AxiomReport()
    checks = {}
    checks["add-associative"] = lambda: _check_assoc(A)
    checks["mul-associative"] = lambda: _check_assoc(M)
    checks["add-commutative"] = lambda: _first(A == A.T)
    checks["mul-commutative"] = lambda: _first(M == M.T)
    ar = np.arange(n)
    checks["add-identity"] = lambda: _first((A[z] == ar) & (A[:, z] == ar))
    checks["mul-identity"] = lambda: _first((M[u] == ar) & (M[:, u] == ar))
    checks["add-inverse"] = lambda: _first((A == z).any(axis=1))
    checks["annihilation"] = lambda: _first((M[z] == z) & (M[:, z] == z))

    def left_distributive():
        for a in range(n):
            w = _first(M[a][A] == A[M[a][:, None], M[a][None, :]])
            if w is not None:
                return (a,) + w
        return None

    def right_distributive():
        for a in range(n):
            w = _first(M[A[a]] == A[M[a][None, :], M])
            if w is not None:
                return (a,) + w
        return None

    checks["left-distributive"] = left_distributive
    checks["right-distributive"] = right_distributive
    for name, run in checks.items():
        witness = run()
        if witness is not None:
            report.failures[name] = witness
    report.checked = tuple(checks)
    return report


def field_axioms(R: FiniteRing) -> AxiomReport:
    """Ring laws plus ``0 != 1`` and a two-sided inverse for every nonzero element."""
    report = ring_axioms(R)
    M = R.mul_table
    z, u = R.index(R.zero), R.index(R.one)
    extra = ["nontrivial", "mul-inverse"]
    if z == u:
        report.failures["nontrivial"] = (z,)
    has_inverse = ((M == u) & (M.T == u)).any(axis=1)
    has_inverse[z] = True
    w = _first(has_inverse)
    if w is not None:
        report.failures["mul-inverse"] = w
    report.checked = report.checked + tuple(extra)
    return report


def is_field(R: FiniteRing) -> bool:
    """Every nonzero element is a unit (and ``0 != 1``)."""
    M = R.mul_table
    z, u = R.index(R.zero), R.index(R.one)
    if z == u:
        return False
    has_inverse = (M == u).any(axis=1)
    has_inverse[z] = True
    return bool(has_inverse.all())


class ProductRing(FiniteRing):
    """Direct product of finite rings; elements are tuples, indexed in
    mixed radix with the last factor varying fastest."""

    def __init__(self, factors: Sequence[FiniteRing]):
        self.factors = tuple(factors)
        self.size = 1
        for f in self.factors:
            self.size *= f.size
        self.zero = tuple(f.zero for f in self.factors)
        self.one = tuple(f.one for f in self.factors)
        self._weights = []
        w = 1
        for f in reversed(self.factors):
            self._weights.append(w)
            w *= f.size
        self._weights.reverse()

    def __repr__(self):
        return " x ".join(repr(f) for f in self.factors)

    def element(self, i):
        return tuple(f.element((i // w) % f.size) for f, w in zip(self.factors, self._weights))

    def index(self, x):
        if len(x) != len(self.factors):
            raise ValueError("wrong arity")
        return sum(f.index(c) * w for f, c, w in zip(self.factors, x, self._weights))

    def add(self, x, y):
        return tuple(f.add(a, b) for f, a, b in zip(self.factors, x, y))

    def mul(self, x, y):
        return tuple(f.mul(a, b) for f, a, b in zip(self.factors, x, y))

    def neg(self, x):
        return tuple(f.neg(a) for f, a in zip(self.factors, x))

    def _product_table(self, name):
        dt = index_dtype(self.size)
        idx = np.arange(self.size, dtype=dt)
        table = np.zeros((self.size, self.size), dtype=dt)
        for f, w in zip(self.factors, self._weights):
            digit = (idx // w) % f.size
            part = _gather2(getattr(f, name), digit, digit)
            table += part if w == 1 else part * dt(w)
        return table

    def pair_table(self, name, I):
        # componentwise, without materializing the product table
        dt = index_dtype(self.size)
        out = np.zeros((len(I), len(I)), dtype=dt)
        for f, w in zip(self.factors, self._weights):
            digit = ((I // w) % f.size).astype(index_dtype(f.size))
            part = _gather2(getattr(f, name), digit, digit).astype(dt, copy=False)
            out += part if w == 1 else part * dt(w)
        return out

    @cached_property
    def add_table(self):
        return self._product_table("add_table")

    @cached_property
    def mul_table(self):
        return self._product_table("mul_table")


class SubRing(FiniteRing):
    """A subset of a finite ring closed under its operations, re-indexed."""

    def __init__(self, parent: FiniteRing, members: Sequence):
        self.parent = parent
        self.members = sorted(members, key=parent.index)
        self._pos = {parent.index(x): i for i, x in enumerate(self.members)}
        self.size = len(self.members)
        self.zero, self.one = parent.zero, parent.one

    def element(self, i):
        return self.members[i]

    def index(self, x):
        try:
            return self._pos[self.parent.index(x)]
        except KeyError:
            raise ValueError(f"{x!r} is not in the subring") from None

    def add(self, x, y):
        return self.parent.add(x, y)

    def mul(self, x, y):
        return self.parent.mul(x, y)

    def neg(self, x):
        return self.parent.neg(x)

    def closure_report(self) -> AxiomReport:
        """Closure under +, *, negation; contains 0 and 1.  For a field also
        closure under inversion of nonzero elements."""
        report = AxiomReport(checked=("contains-zero", "contains-one", "add-closed", "mul-closed", "neg-closed"))
        pidx = np.array([self.parent.index(x) for x in self.members])
        member = np.zeros(self.parent.size, dtype=bool)
        member[pidx] = True
        if not member[self.parent.index(self.parent.zero)]:
            report.failures["contains-zero"] = ()
        if not member[self.parent.index(self.parent.one)]:
            report.failures["contains-one"] = ()
        for name, T in (("add-closed", self.parent.add_table), ("mul-closed", self.parent.mul_table)):
            w = _first(member[T[np.ix_(pidx, pidx)]])
            if w is not None:
                report.failures[name] = w
        negs = [self.parent.index(self.parent.neg(x)) for x in self.members]
        w = _first(member[np.array(negs)])
        if w is not None:
            report.failures["neg-closed"] = w
        if hasattr(self.parent, "inv"):
            report.checked += ("inv-closed",)
            z = self.parent.zero
            invs = [self.parent.index(self.parent.inv(x)) for x in self.members if x != z]
            if invs:
                w = _first(member[np.array(invs)])
                if w is not None:
                    report.failures["inv-closed"] = w
        return report


@dataclass
class RingIso:
    """A candidate ring isomorphism with an explicit inverse.

    ``index_maps`` optionally computes both maps on index arrays at once
    (``(forward, inverse)`` as arrays over ``range(size)``); it must agree
    with the scalar callables and only exists for speed.
    """

    source: FiniteRing
    target: FiniteRing
    forward: Callable[[Any], Any]
    inverse: Callable[[Any], Any]
    index_maps: Callable[[], tuple[np.ndarray, np.ndarray]] | None = None

    def __call__(self, x):
        return self.forward(x)

    def forward_indices(self) -> np.ndarray:
        s, t = self.source, self.target
        if self.index_maps is not None:
            return self.index_maps()[0].astype(index_dtype(t.size))
        return np.array([t.index(self.forward(s.element(i))) for i in range(s.size)], dtype=index_dtype(t.size))

    def inverse_indices(self) -> np.ndarray:
        s, t = self.source, self.target
        if self.index_maps is not None:
            return self.index_maps()[1].astype(index_dtype(s.size))
        return np.array([s.index(self.inverse(t.element(j))) for j in range(t.size)], dtype=index_dtype(s.size))

    def verify(self) -> AxiomReport:
        """Exhaustive check: bijective, inverse on both sides, preserves
        ``+``, ``*``, ``0`` and ``1``."""
        s, t = self.source, self.target
        report = AxiomReport(checked=("bijective", "left-inverse", "right-inverse", "zero", "one", "add", "mul"))
        if s.size != t.size:
            report.failures["bijective"] = (s.size, t.size)
            return report
        F = self.forward_indices()
        if len(np.unique(F)) != s.size:
            report.failures["bijective"] = ()
        back = self.inverse_indices()
        w = _first(back[F] == np.arange(s.size))
        if w is not None:
            report.failures["left-inverse"] = w
        w = _first(F[back] == np.arange(t.size))
        if w is not None:
            report.failures["right-inverse"] = w
        if F[s.index(s.zero)] != t.index(t.zero):
            report.failures["zero"] = ()
        if F[s.index(s.one)] != t.index(t.one):
            report.failures["one"] = ()
        for name in ("add", "mul"):
            table = f"{name}_table"
            w = _first(np.take(F, getattr(s, table)) == t.pair_table(table, F))
            if w is not None:
                report.failures[name] = w
        return report
