"""Command-line front end.

Exit status is 0 on success, 1 when a ``--check`` cross-check or a
verification suite fails, and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
import time
from typing import Sequence

from . import changebasis as cb
from . import verify
from .lrrule import CoeffTable, lr_coefficient, lr_expand, oracle_expand, specialize, specialize_poly
from .polyring import Polynomial
from .tableaux import (
    MultiShape,
    TableauError,
    as_partition,
    enumerate_barred,
    enumerate_yamanouchi,
    is_partition,
    render,
    tableau_to_json,
    unbarred_content,
)

log = logging.getLogger("factschur")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_partition(text: str):
    try:
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(p, int) for p in data):
            raise ValueError
        return as_partition(data)
    except (ValueError, TableauError) as exc:
        raise UsageError(f"malformed partition {text!r}") from exc


def parse_shape(text: str) -> MultiShape:
    try:
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(lam, list) for lam in data):
            raise ValueError
        if not all(isinstance(p, int) for lam in data for p in lam):
            raise ValueError
        return MultiShape(tuple(tuple(lam) for lam in data))
    except (ValueError, TableauError) as exc:
        raise UsageError(f"malformed shape {text!r}; expected e.g. '[[2,1],[1,1]]'") from exc


_SPECIALIZATION = re.compile(r"^y(\d+)(?:_(\d+))?=(-?\d+)$")


def parse_specializations(items: Sequence[str]) -> dict:
    """``y2=0`` sets a whole family; ``y1_3=5`` sets one variable."""
    out: dict = {}
    for item in items:
        m = _SPECIALIZATION.match(item.replace(" ", ""))
        if not m:
            raise UsageError(f"malformed specialization {item!r}")
        family, index, value = int(m[1]), m[2], int(m[3])
        if index is None:
            out[family] = value
        else:
            slot = out.setdefault(family, {})
            if isinstance(slot, int):
                raise UsageError(f"family y{family} is already fixed")
            slot[int(index)] = value
    return out


def _check_n(shape: MultiShape, n: int) -> None:
    if n < 1:
        raise UsageError("--n must be >= 1")
    for lam in shape.diagrams:
        if len(lam) > n:
            raise UsageError(f"diagram {list(lam)} has more than n={n} rows")


def emit_table(table: CoeffTable, fmt: str) -> str:
    if fmt == "json":
        return table.dumps()
    if fmt == "latex":
        return table.to_latex()
    return table.to_text()


def emit_poly(p: Polynomial, fmt: str) -> str:
    if fmt == "json":
        return p.dumps()
    if fmt == "latex":
        return p.to_latex()
    return p.to_text()


# -- subcommands -------------------------------------------------------------------

def cmd_expand(args) -> int:
    shape = parse_shape(args.shape)
    _check_n(shape, args.n)
    table = lr_expand(shape, args.n)
    status = EXIT_OK
    if args.check and table != oracle_expand(shape, args.n):
        log.error("barred-tableau expansion disagrees with the alternant oracle")
        status = EXIT_FAIL
    if args.specialize:
        table = specialize(table, parse_specializations(args.specialize))
    print(emit_table(table, args.format))
    return status


def cmd_coeff(args) -> int:
    shape = parse_shape(args.shape)
    _check_n(shape, args.n)
    if args.mu is None:
        raise UsageError("coeff needs --mu")
    mu = parse_partition(args.mu)
    if len(mu) > args.n:
        raise UsageError(f"mu={list(mu)} has more than n={args.n} parts")
    value = lr_coefficient(shape, mu, args.n)
    status = EXIT_OK
    if args.check and value != oracle_expand(shape, args.n)[mu]:
        log.error("coefficient disagrees with the alternant oracle")
        status = EXIT_FAIL
    if args.specialize:
        value = specialize_poly(value, parse_specializations(args.specialize))
    print(emit_poly(value, args.format))
    return status


def cmd_tableaux(args) -> int:
    shape = parse_shape(args.shape)
    _check_n(shape, args.n)
    mu = parse_partition(args.mu) if args.mu is not None else None
    if args.lr:
        stream = enumerate_yamanouchi(shape, args.n, mu)
    else:
        stream = (t for t in enumerate_barred(shape, args.n) if mu is None or _content_is(t, mu))
    for t in stream:
        if args.render:
            print(render(t))
            print()
        else:
            print(json.dumps(tableau_to_json(t), separators=(",", ":")))
    return EXIT_OK


def _content_is(t, mu) -> bool:
    vec = unbarred_content(t)
    return is_partition(vec) and as_partition(vec) == mu


def cmd_change_basis(args) -> int:
    if args.lam is not None:
        lam = parse_partition(args.lam)
    else:
        shape = parse_shape(args.shape)
        if shape.r != 1:
            raise UsageError("change-basis takes a single partition")
        lam = shape.diagrams[0]
    if len(lam) > args.n:
        raise UsageError(f"{list(lam)} has more than n={args.n} parts")
    status = EXIT_OK
    if args.direction == "factorial-to-schur":
        if args.method == "tableau":
            table = cb.tableau_factorial_in_schur(lam, args.n)
        elif args.method == "det":
            table = cb.expand_factorial_in_schur(lam, args.n)
        else:
            raise UsageError("factorial-to-schur supports --method det or tableau")
        if args.check:
            other = cb.tableau_factorial_in_schur(lam, args.n) if args.method == "det" else cb.expand_factorial_in_schur(lam, args.n)
            if other != table:
                log.error("determinant and tableau expansions disagree")
                status = EXIT_FAIL
    else:
        if args.method == "tableau":
            raise UsageError("schur-to-factorial supports --method det or dual")
        try:
            table = cb.expand_schur_in_factorial(lam, args.n, method=args.method, m=args.m)
        except cb.ChangeBasisError as exc:
            log.error("%s", exc)
            return EXIT_FAIL
        if args.check:
            other_method = "dual" if args.method == "det" else "det"
            other = cb.expand_schur_in_factorial(lam, args.n, method=other_method, m=args.m if other_method == "dual" else None)
            if other != table:
                log.error("det and dual expansions disagree")
                status = EXIT_FAIL
    print(emit_table(table, args.format))
    return status


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        start = time.perf_counter()
        if name in ("involutions", "badguys", "cancellation", "lemma3", "theorem"):
            res = verify.SUITES[name](args.max_boxes, args.n, args.max_r)
        elif name == "basis":
            res = verify.SUITES[name](args.max_size, args.n)
        else:
            res = verify.SUITES[name](args.max_boxes, args.n)
        log.info("%s took %.1fs", name, time.perf_counter() - start)
        results.append(res)
        print(res.line())
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


# -- argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="number of x variables")
    common.add_argument("--shape", default="[]", help="JSON list of partitions, first diagram first")
    common.add_argument("--mu", default=None, help="JSON partition")
    common.add_argument("--format", choices=("json", "latex", "plain"), default="plain")
    common.add_argument("--check", action="store_true", help="re-derive results by an independent route")
    common.add_argument("--specialize", action="append", default=[], metavar="yF[_J]=V")
    common.add_argument("--seed", type=int, default=0, help="accepted for scripting; every suite is exhaustive, so it has no effect")
    common.add_argument("--max-boxes", type=int, default=6)
    common.add_argument("--max-size", type=int, default=4)
    common.add_argument("--max-r", type=int, default=3)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="factschur", description="Factorial Schur function expansions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="Schur expansion of a product of factorial Schur functions")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("coeff", parents=[common], help="one coefficient of the Schur expansion")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("tableaux", parents=[common], help="list barred tableaux as JSON lines")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="every barred tableau (default)")
    group.add_argument("--lr", action="store_true", help="only Yamanouchi tableaux")
    p.add_argument("--render", action="store_true", help="ASCII pictures instead of JSON")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("change-basis", parents=[common], help="Schur <-> factorial Schur coefficients")
    p.add_argument("--lambda", dest="lam", default=None, help="JSON partition (alternative to a one-diagram --shape)")
    p.add_argument("--direction", choices=("factorial-to-schur", "schur-to-factorial"), default="factorial-to-schur")
    p.add_argument("--method", choices=("det", "dual", "tableau"), default="det")
    p.add_argument("--m", type=int, default=None, help="rectangle width for the dual method")
    p.set_defaults(func=cmd_change_basis)

    p = sub.add_parser("verify", parents=[common], help="run identity suites over an envelope")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    if args.n is None:
        args.n = 3 if args.command == "verify" else None
    if args.n is None:
        parser.error("--n is required")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
