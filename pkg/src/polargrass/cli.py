"""Command-line front end.

    polargrass params   --variant orth --q 3 --n 2
    polargrass rank     --line "0,1,0,0,0;0,0,0,1,0" --q 3 --n 2
    polargrass unrank   --index 7 --q 3 --n 2
    polargrass count    --prefix "1,0;0,1" --q 3 --n 2
    polargrass encode   --message msg.txt --q 3 --n 2
    polargrass decode   --codeword cw.txt --q 3 --n 2
    polargrass correct  --received rx.txt --position 12 --q 3 --n 3
    polargrass selftest --q 2 --n 2
    polargrass tables

Exit status: 0 on success, 1 on a domain error (printed as
``error: <ErrorClass>: message``) or a failed selftest, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys
from typing import Callable, Sequence

from .codec import CorrectionPolicy, PolarCode, code_params, format_symbols, read_symbols
from .counting import CountContext
from .enumerator import Enumerator
from .errors import PolarError
from .geometry import GeometrySpec, Variant
from .gf import field_of_order
from .oracle import oracle, weight_enumerate
from .rref import all_columns, format_matrix, parse_matrix, parse_prefix
from .tables import compare


def _modulus(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"modulus must be comma-separated integers: {text!r}")


def _geometry_args(p: argparse.ArgumentParser, n_default: int | None = None) -> None:
    p.add_argument("--variant", choices=[v.value for v in Variant], default="orth")
    p.add_argument("--q", type=int, required=True, help="field order p^k")
    p.add_argument("--n", type=int, required=n_default is None, default=n_default)
    p.add_argument("--modulus", type=_modulus, default=None,
                   help="irreducible modulus, ascending coefficients (e.g. 1,1,1 for x^2+x+1)")


def _spec(args) -> GeometrySpec:
    return GeometrySpec(Variant(args.variant), args.n, field_of_order(args.q, args.modulus))


def _code(args) -> PolarCode:
    return PolarCode(_spec(args))


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


# --- subcommands ------------------------------------------------------------------

def cmd_params(args) -> int:
    field_of_order(args.q, args.modulus)  # validates q
    print(code_params(args.variant, args.q, args.n))
    return 0


def cmd_rank(args) -> int:
    print(Enumerator(_spec(args)).rank(parse_matrix(args.line)))
    return 0


def cmd_unrank(args) -> int:
    print(format_matrix(Enumerator(_spec(args)).unrank(args.index)))
    return 0


def cmd_count(args) -> int:
    spec = _spec(args)
    print(CountContext.for_spec(spec).count(parse_prefix(args.prefix), spec.n))
    return 0


def cmd_encode(args) -> int:
    code = _code(args)
    m = read_symbols(_read(args.message), code.params.K, code.field.q)
    print(format_symbols(code.encode(m)))
    return 0


def cmd_decode(args) -> int:
    code = _code(args)
    c = read_symbols(_read(args.codeword), code.params.N, code.field.q)
    print(format_symbols(code.decode(c)))
    return 0


def cmd_correct(args) -> int:
    code = _code(args)
    r = read_symbols(_read(args.received), code.params.N, code.field.q)
    policy = CorrectionPolicy(max_planes=args.max_planes, vote_threshold=args.threshold)
    report = code.correct_component(r, args.position, policy)
    print(report.value)
    print(report.summary())
    return 0


def _suites(spec: GeometrySpec) -> list[tuple[str, Callable[[], bool]]]:
    orc = oracle(spec)
    ctx = CountContext.for_spec(spec, memo=True)
    n = spec.n
    cols = all_columns(spec.field)

    def counting() -> bool:
        seen = {()}
        for g in orc.lines:
            pre = tuple(zip(*g))
            seen.update(pre[:t] for t in range(len(pre) + 1))
        probes = set(seen)
        for S in seen:
            if len(S) < spec.D:
                probes.update(S + (X,) for X in cols)
        return all(ctx.count(S, n) == orc.count(S) for S in probes)

    def partition() -> bool:
        for t in range(min(spec.D, 3)):
            for S in itertools.product(cols, repeat=t):
                if ctx.count(S, n) != sum(ctx.count(S + (X,), n) for X in cols):
                    return False
        return True

    def bijection() -> bool:
        E = Enumerator(spec)
        return (E.N == len(orc.lines)
                and all(E.rank(g) == i for i, g in enumerate(orc.lines))
                and all(E.unrank(i) == g for i, g in enumerate(orc.lines)))

    suites = [("counting-vs-oracle", counting), ("partition", partition), ("rank-unrank", bijection)]
    if n >= 2:
        code = PolarCode(spec)

        def distance() -> bool:
            d = code.params.d
            return d is None or weight_enumerate(code) == d

        if code.field.q ** code.params.K <= 2 ** 20:
            suites.append(("minimum-distance", distance))
        if spec.orthogonal and spec.q % 2:
            def decode() -> bool:
                rng = random.Random(0)
                return all(code.decode(code.encode(m)) == m
                           for m in (code.random_message(rng) for _ in range(50)))

            suites.append(("decode-round-trip", decode))
    return suites


def cmd_selftest(args) -> int:
    failed = 0
    for name, check in _suites(_spec(args)):
        try:
            ok = check()
        except PolarError as exc:
            ok = False
            print(f"  {type(exc).__name__}: {exc}")
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    return 1 if failed else 0


def cmd_tables(args) -> int:
    print("# code parameters")
    for variant, q, n in [("orth", 2, 2), ("orth", 3, 2), ("orth", 4, 2), ("orth", 5, 2), ("orth", 3, 3),
                          ("symp", 2, 2), ("symp", 3, 2), ("symp", 2, 3), ("symp", 3, 3)]:
        print(f"{variant} q={q} n={n}: {code_params(variant, q, n)}")
    print("# tabulated point/line counts vs enumeration")
    bad = 0
    for row in compare():
        bad += not row.agrees
        print(row)
    print(f"# {bad} discrepancies")
    return 0


# --- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polargrass", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="code parameters N, K, d")
    _geometry_args(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("rank", help="index of a line given as RREF matrix text")
    _geometry_args(p)
    p.add_argument("--line", required=True, help='rows separated by ";", entries by ","')
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("unrank", help="line with a given index")
    _geometry_args(p)
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(func=cmd_unrank)

    p = sub.add_parser("count", help="number of lines with a given prefix")
    _geometry_args(p)
    p.add_argument("--prefix", required=True, help='2 x t matrix text, "" for the empty prefix')
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("encode", help="encode a message file ('-' for stdin)")
    _geometry_args(p)
    p.add_argument("--message", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode an error-free codeword file")
    _geometry_args(p)
    p.add_argument("--codeword", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("correct", help="locally correct one component of a received word")
    _geometry_args(p)
    p.add_argument("--received", required=True)
    p.add_argument("--position", type=int, required=True)
    p.add_argument("--max-planes", type=int, default=None)
    p.add_argument("--threshold", type=float, default=0.5, help="per-plane vote share needed")
    p.set_defaults(func=cmd_correct)

    p = sub.add_parser("selftest", help="oracle equivalence suites")
    _geometry_args(p)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("tables", help="parameter values and tabulated-count discrepancies")
    p.set_defaults(func=cmd_tables)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        return args.func(args)
    except (PolarError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
