"""Command-line front end.

Each subcommand parses its arguments, calls the library and formats the
result.  Exit status: 0 on success, 1 on a domain error (one diagnostic
line; ``error <code>`` with ``--machine``), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import divisibility as dv
from . import fields as ff
from . import modular as md
from . import poly as pl
from .errors import ConstructaError
from .peano import DEFAULT_ITER_BUDGET, nat_arith
from .rings import field_axioms

# -- argument types -------------------------------------------------------------


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {value}")
    return value


# -- formatting -----------------------------------------------------------------


def format_table(table, symbol: str) -> list[str]:
    """Header row of column labels led by the operation symbol, then one
    labelled row per element."""
    n = len(table)
    lines = [" ".join([symbol] + [str(j) for j in range(n)])]
    for i, row in enumerate(table):
        lines.append(" ".join([str(i)] + [str(int(v)) for v in row]))
    return lines


def format_triples(table) -> list[str]:
    return [f"{i} {j} {int(v)}" for i, row in enumerate(table) for j, v in enumerate(row)]


def _table_lines(ring, which: str, machine: bool) -> list[str]:
    T = ring.add_table if which == "add" else ring.mul_table
    return format_triples(T) if machine else format_table(T, "+" if which == "add" else "*")


def _poly_out(b: pl.Poly, machine: bool) -> str:
    return pl.format_poly(b) if machine else pl.pretty_poly(b)


# -- subcommands ----------------------------------------------------------------


def cmd_nat(args) -> list[str]:
    return [str(nat_arith(args.op, args.m, args.n, mode=args.mode))]


def cmd_factor(args) -> list[str]:
    f = dv.factorize(args.n)
    if args.machine:
        return [f"{p} {m}" for p, m in f.pairs]
    return [f"{args.n} = {f}"]


def cmd_gcd(args) -> list[str]:
    if not args.steps:
        return [str(dv.gcd_euclid(args.x, args.y))]
    g, trace = dv.gcd_euclid(args.x, args.y, trace=True)
    rows = [f"{s.b} {s.a} {s.q} {s.r}" for s in trace]
    return [str(g)] + ([] if args.machine else ["b a q r"]) + rows


def cmd_lcm(args) -> list[str]:
    return [str(dv.lcm(args.x, args.y))]


def cmd_primes(args) -> list[str]:
    result = dv.primes(args.task, args.value)
    if isinstance(result, bool):
        return ["true" if result else "false"]
    if isinstance(result, list):
        return [str(p) for p in result] if args.machine else [" ".join(map(str, result))]
    return [str(result)]


def cmd_goldbach(args) -> list[str]:
    p, q = dv.goldbach_pair(args.n, args.prefer)
    return [f"{p} {q}"] if args.machine else [f"{args.n} = {p} + {q}"]


def cmd_crt(args) -> list[str]:
    values = args.pairs
    if len(values) % 2:
        raise _Usage("crt expects residue/modulus pairs")
    pairs = list(zip(values[::2], values[1::2]))
    x = md.crt_solve(pairs)
    total = 1
    for _, m in pairs:
        total *= m
    return [f"{x} {total}"] if args.machine else [f"x = {x} (mod {total})"]


def cmd_zn(args) -> list[str]:
    R = md.zn_make(args.n)
    if args.table:
        return _table_lines(R, args.table, args.machine)
    U = md.units_group(args.n)
    dec = md.decompose(args.n)
    units = ",".join(map(str, U.units))
    parts = "x".join(map(str, dec.moduli))
    field = "yes" if md.zn_is_field(args.n) else "no"
    if args.machine:
        return [f"units {units}", f"totient {len(U)}", f"field {field}", f"decomposition {parts}"]
    return [f"Z_{args.n} units={units} totient={len(U)} field={field} decomposition={parts}"]


def cmd_poly(args) -> list[str]:
    K = ff.make_prime_field(args.field)
    op = args.op
    if op in ("find", "eval"):
        expected = 1 if op == "find" else 2
        if len(args.operands) != expected:
            raise _Usage("poly find expects the degree" if op == "find" else
                         "poly eval expects a polynomial and a field element")
        try:
            value = int(args.operands[-1])
        except ValueError:
            raise _Usage(f"not an integer: {args.operands[-1]!r}") from None
        if op == "find":
            return [_poly_out(pl.find_irreducible(K, value), args.machine)]
        return [str(pl.evaluate(pl.parse_poly(args.operands[0], K), K.reduce(value)))]
    need = 2 if op in ("add", "sub", "mul", "divmod") else 1
    if len(args.operands) != need:
        raise _Usage(f"poly {op} expects {need} polynomial(s)")
    operands = [pl.parse_poly(t, K) for t in args.operands]
    if op in ("add", "sub", "mul"):
        return [_poly_out(pl.poly_arith(op, *operands), args.machine)]
    if op == "divmod":
        q, r = pl.poly_divmod(*operands)
        return [_poly_out(q, args.machine), _poly_out(r, args.machine)] if args.machine else \
            [f"q = {_poly_out(q, False)}", f"r = {_poly_out(r, False)}"]
    if op == "roots":
        return [" ".join(map(str, pl.roots(operands[0])))]
    if op == "deriv":
        return [_poly_out(pl.derivative(operands[0]), args.machine)]
    if op == "irreducible":
        return ["true" if pl.is_irreducible(operands[0]) else "false"]
    a, c = pl.factor_split(operands[0])
    return [_poly_out(a, args.machine), _poly_out(c, args.machine)]


def cmd_gf(args) -> list[str]:
    F = ff.make_gf(args.p, args.n)
    modulus = ",".join(map(str, F.modulus_labels()))
    lines = [f"{modulus}" if args.machine else f"GF({args.p}^{args.n}) modulus={modulus}"]
    if args.table:
        lines += _table_lines(F, args.table, args.machine)
    if args.verify:
        lines.append(" ".join(f"{k}:{v}" for k, v in _gf_verdicts(F)))
    return lines


def _gf_verdicts(F):
    small = F.size <= ff.SPLIT_LIMIT
    split = "skipped"
    if small:
        split = "ok" if ff.verify_splitting(F).ok else "fail"
    gen = ff.mult_generator(F)
    cyclic = "ok" if ff.mult_order(F, gen) == F.size - 1 else "fail"
    axioms = ("ok" if field_axioms(F).ok else "fail") if small else "skipped"
    return [("split", split), ("cyclic", cyclic), ("axioms", axioms)]


def cmd_iso(args) -> list[str]:
    K = ff.make_prime_field(args.p)
    F = ff.make_quotient_field(K, pl.parse_poly(args.modulus1, K))
    G = ff.make_quotient_field(K, pl.parse_poly(args.modulus2, K))
    iso = ff.find_isomorphism(F, G)
    verdict = "ok" if iso.verify().ok else "fail"
    if args.machine:
        return [f"beta {iso.image_of_generator}", f"verified {verdict}"] + \
            [f"{x} {iso(x)}" for x in F.elements()]
    return [f"X -> {iso.image_of_generator}", f"verified:{verdict}"]


def cmd_solve(args) -> list[str]:
    K = ff.make_prime_field(args.field)
    try:
        A = [[K.reduce(int(v)) for v in row.split(",")] for row in args.matrix.split(";")]
        b = [K.reduce(int(v)) for v in args.vector.split(",")]
    except ValueError:
        raise _Usage("matrix rows are ';'-separated, entries ','-separated integers") from None
    result = ff.linear_solve(K, A, b)
    if result.status == "singular":
        return [f"singular {result.column}"] if args.machine else [f"singular (no pivot in column {result.column})"]
    values = ",".join(map(str, result.solution))
    return [values] if args.machine else [f"x = {values}"]


class _Usage(Exception):
    pass


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="constructa", description=__doc__.splitlines()[0])
    parser.add_argument("--machine", action="store_true", help="line-oriented machine-readable output")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", default=argparse.SUPPRESS,
                        help="line-oriented machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(func=func)
        return p

    p = add("nat", cmd_nat, "add, mul or pow of naturals")
    p.add_argument("op", choices=["add", "mul", "pow"])
    p.add_argument("m", type=_natural)
    p.add_argument("n", type=_natural)
    p.add_argument("--mode", choices=["iterate", "fast"], default="fast",
                   help=f"iterate follows the successor-iterate definitions and is capped at "
                        f"{DEFAULT_ITER_BUDGET} step applications (CONSTRUCTA_ITER_BUDGET overrides); "
                        f"e.g. mul needs m steps, pow needs n")

    p = add("factor", cmd_factor, "prime factorization, e.g. 12 = 2^2·3")
    p.add_argument("n", type=_natural)

    for name, func, text in (("gcd", cmd_gcd, "greatest common divisor"), ("lcm", cmd_lcm, "least common multiple")):
        p = add(name, func, text)
        p.add_argument("x", type=_natural)
        p.add_argument("y", type=_natural)
        if name == "gcd":
            p.add_argument("--steps", action="store_true", help="print the Euclid trace (b a q r)")

    p = add("primes", cmd_primes, "primality test, primes up to N, or the k-th prime (0-indexed)")
    p.add_argument("task", choices=["is_prime", "up_to", "nth"])
    p.add_argument("value", type=_natural)

    p = add("goldbach", cmd_goldbach, "primes p <= q with n = p + q (p least by default)")
    p.add_argument("n", type=_natural)
    p.add_argument("--prefer", choices=["least", "balanced"], default="least")

    p = add("crt", cmd_crt, "solve x = r_i (mod m_i); arguments r1 m1 r2 m2 ...")
    p.add_argument("pairs", type=_natural, nargs="+")

    p = add("zn", cmd_zn, "the ring Z_n: summary or operation table")
    p.add_argument("n", type=_natural)
    p.add_argument("--table", choices=["add", "mul"])

    p = add("poly", cmd_poly, "polynomials over Z_p, written as ascending coefficients (1,1,1 = 1 + x + x^2)")
    p.add_argument("op", choices=["add", "sub", "mul", "divmod", "eval", "roots", "deriv",
                                  "irreducible", "split", "find"])
    p.add_argument("operands", nargs="+")
    p.add_argument("--field", type=_natural, required=True, metavar="p")

    p = add("gf", cmd_gf, "the field GF(p^n) with its canonical modulus")
    p.add_argument("p", type=_natural)
    p.add_argument("n", type=_natural)
    p.add_argument("--table", choices=["add", "mul"])
    p.add_argument("--verify", action="store_true", help="splitting, cyclicity and field-axiom checks")

    p = add("iso", cmd_iso, "isomorphism between Z_p[X]/(a) and Z_p[X]/(b)")
    p.add_argument("p", type=_natural)
    p.add_argument("modulus1")
    p.add_argument("modulus2")

    p = add("solve", cmd_solve, "solve A x = b over Z_p; A as 'a,b;c,d', b as 'e,f'")
    p.add_argument("matrix")
    p.add_argument("vector")
    p.add_argument("--field", type=_natural, required=True, metavar="p")
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        lines = args.func(args)
    except _Usage as exc:
        parser.print_usage(err)
        print(f"constructa: error: {exc}", file=err)
        return 2
    except ConstructaError as exc:
        if args.machine:
            print(f"error {exc.code}", file=out)
        else:
            print(f"error: {exc.code}: {exc}", file=err)
        return 1
    for line in lines:
        print(line, file=out)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    # the factorization separator is non-ASCII; keep output bytes locale-independent
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
