"""Formal polynomials ``K[X]`` over a field handle.

A field handle provides ``add``, ``mul``, ``neg``, ``inv``, ``zero`` and
``one``; finite fields additionally provide ``size`` and ``elements()`` with
elements labelled ``0..size-1`` (see :mod:`constructa.fields`).

Coefficients are stored densely, constant term first, with trailing zeros
stripped; the zero polynomial has no coefficients and ``degree is None``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterator, Sequence

from .errors import (ArgumentOutOfRange, DivisionByZeroPoly, FieldMismatch, NoIrreducibleFound,
                     ZeroPolynomial)
from .monoid import Monoid, mon_iterate
from .peano import check_nat


def _strip(field, coeffs) -> tuple:
    coeffs = list(coeffs)
    zero = field.zero
    while coeffs and coeffs[-1] == zero:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True, eq=False)
class Poly:
    field: Any
    coeffs: tuple

    def __init__(self, field, coeffs: Sequence = ()):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", _strip(field, coeffs))

    # -- constructors
    @classmethod
    def zero(cls, field) -> "Poly":
        return cls(field, ())

    @classmethod
    def constant(cls, field, c) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, k: int, c=None) -> "Poly":
        """``c * X^k`` (``epsilon_k`` when ``c`` is omitted)."""
        check_nat(k, "k")
        c = field.one if c is None else c
        return cls(field, (field.zero,) * k + (c,))

    @classmethod
    def x_minus(cls, field, alpha) -> "Poly":
        return cls(field, (field.neg(alpha), field.one))

    # -- structure
    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        return self.coeffs[i] if i < len(self.coeffs) else self.field.zero

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c != self.field.zero]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({pretty_poly(self)} over {self.field!r})"

    def _same(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"expected a Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"polynomials over {self.field!r} and {other.field!r}")

    # -- arithmetic
    def __add__(self, other: "Poly") -> "Poly":
        self._same(other)
        add, z = self.field.add, self.field.zero
        return Poly(self.field, [add(a, b) for a, b in
                                 itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=z)])

    def __neg__(self) -> "Poly":
        neg = self.field.neg
        return Poly(self.field, [neg(a) for a in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._same(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.field)
        F = self.field
        add, mul = F.add, F.mul
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == F.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = add(out[i + j], mul(a, b))
        return Poly(F, out)

    def scale(self, c) -> "Poly":
        mul = self.field.mul
        return Poly(self.field, [mul(c, a) for a in self.coeffs])

    def __divmod__(self, other: "Poly"):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __pow__(self, k: int) -> "Poly":
        check_nat(k, "k")
        result, base = Poly.constant(self.field, self.field.one), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, alpha):
        return evaluate(self, alpha)

    def monic(self) -> "Poly":
        return self.scale(self.field.inv(self.lead()))


def poly_arith(op: str, a: Poly, b) -> Poly:
    """``add``, ``sub`` and ``mul`` of two polynomials, ``scale`` by a scalar."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ArgumentOutOfRange(f"unknown polynomial operation {op!r}")


def poly_divmod(b: Poly, a: Poly) -> tuple[Poly, Poly]:
    """``(q, r)`` with ``b = q*a + r`` and ``r = 0`` or ``deg r < deg a``."""
    b._same(a)
    if a.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    F = b.field
    da = a.degree
    inv_lead = F.inv(a.lead())
    rem = list(b.coeffs)
    quot = [F.zero] * max(len(rem) - da, 0)
    add, mul, neg = F.add, F.mul, F.neg
    for k in range(len(rem) - 1, da - 1, -1):
        c = rem[k]
        if c == F.zero:
            continue
        t = mul(c, inv_lead)
        quot[k - da] = t
        nt = neg(t)
        for i, ai in enumerate(a.coeffs):
            rem[k - da + i] = add(rem[k - da + i], mul(nt, ai))
    return Poly(F, quot), Poly(F, rem[:da])


def remainder_projection(a: Poly):
    """``P_a``: the map ``b -> b mod a``."""
    if a.is_zero():
        raise DivisionByZeroPoly("P_0 is undefined")
    return lambda b: poly_divmod(b, a)[1]


def evaluate(b: Poly, alpha):
    """``sum b_i alpha^i`` by Horner's rule."""
    F = b.field
    acc = F.zero
    for c in reversed(b.coeffs):
        acc = F.add(F.mul(acc, alpha), c)
    return acc


def roots(b: Poly) -> list:
    """All roots of ``b`` in its finite field, in label order."""
    if b.is_zero():
        raise ZeroPolynomial("every element is a root of the zero polynomial")
    return [alpha for alpha in b.field.elements() if evaluate(b, alpha) == b.field.zero]


def field_multiple(field, k: int, c):
    """``k . c``: the ``k``-fold iterate of ``c`` in ``(K, +, 0)``."""
    additive = Monoid(field.add, field.zero, lambda x: True, "(K,+,0)")
    return mon_iterate(additive, c, k)


def derivative(b: Poly) -> Poly:
    """Formal derivative: coefficient ``i`` is ``(i+1) . b_{i+1}``."""
    F = b.field
    return Poly(F, [field_multiple(F, i, c) for i, c in enumerate(b.coeffs) if i >= 1])


def monic_polys(field, n: int) -> Iterator[Poly]:
    """Monic polynomials of degree ``n`` in ascending order of the base-``q``
    number formed by their lower coefficients, constant term least
    significant."""
    q = field.size
    els = field.elements()
    for value in range(q**n):
        digits = []
        for _ in range(n):
            value, d = divmod(value, q)
            digits.append(els[d])
        yield Poly(field, digits + [field.one])


def _least_divisor(b: Poly) -> Poly | None:
    """The first monic candidate of degree ``1..deg(b)//2`` dividing ``b``."""
    for d in range(1, b.degree // 2 + 1):
        for c in monic_polys(b.field, d):
            if poly_divmod(b, c)[1].is_zero():
                return c
    return None


def is_irreducible(a: Poly) -> bool:
    """Trial division by every monic polynomial of degree ``1..deg(a)//2``."""
    if a.is_zero() or a.degree < 1:
        raise ArgumentOutOfRange("irreducibility is tested for polynomials of degree >= 1")
    return _least_divisor(a) is None


def find_irreducible(field, n: int) -> Poly:
    """The first irreducible among :func:`monic_polys` of degree ``n``.

    ``field`` may be a field handle or a prime ``p``."""
    if isinstance(field, int):
        from .fields import make_prime_field
        field = make_prime_field(field)
    check_nat(n, "n")
    if n < 1:
        raise ArgumentOutOfRange("degree must be >= 1")
    for c in monic_polys(field, n):
        if is_irreducible(c):
            return c
    raise NoIrreducibleFound(f"no monic irreducible of degree {n} over {field!r}")


def irreducible(task: str, *args):
    """``irreducible("test", a)`` or ``irreducible("find", p, n)``."""
    if task == "test":
        return is_irreducible(*args)
    if task == "find":
        return find_irreducible(*args)
    raise ArgumentOutOfRange(f"unknown task {task!r}; expected test or find")


def factor_split(b: Poly) -> tuple[Poly, Poly]:
    """``b = a*c`` with ``a`` the least monic irreducible divisor of ``b``
    (candidates ordered by degree, then as in :func:`monic_polys`)."""
    if b.is_zero() or b.degree < 2:
        raise ArgumentOutOfRange("factor_split needs deg(b) >= 2")
    a = _least_divisor(b)
    if a is None:
        return b.monic(), Poly.constant(b.field, b.lead())
    q, r = poly_divmod(b, a)
    assert r.is_zero()
    return a, q


# -- text formats -------------------------------------------------------------

def format_poly(b: Poly) -> str:
    """Ascending comma-separated coefficient labels; ``0`` for the zero polynomial."""
    if b.is_zero():
        return "0"
    return ",".join(str(_label(b.field, c)) for c in b.coeffs)


def parse_poly(text: str, field) -> Poly:
    """Inverse of :func:`format_poly`."""
    parts = text.strip().split(",")
    try:
        labels = [int(p) for p in parts]
    except ValueError:
        raise ArgumentOutOfRange(f"cannot parse polynomial {text!r}") from None
    size = getattr(field, "size", None)
    for v in labels:
        if v < 0 or (size is not None and v >= size):
            raise ArgumentOutOfRange(f"coefficient {v} is not an element label of {field!r}")
    return Poly(field, [field.element(v) for v in labels])


def _label(field, c):
    return field.index(c) if hasattr(field, "index") else c


def pretty_poly(b: Poly, var: str = "x") -> str:
    """``1 + x + x^2``; other coefficients print as ``2x^2``."""
    if b.is_zero():
        return "0"
    terms = []
    one = b.field.one
    for i, c in enumerate(b.coeffs):
        if c == b.field.zero:
            continue
        power = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        coef = str(_label(b.field, c))
        if i == 0:
            terms.append(coef)
        else:
            terms.append(power if c == one else coef + power)
    return " + ".join(terms)
