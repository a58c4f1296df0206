"""Command-line interface.

    frob number 6 10 15            largest non-representable integer
    frob test --t 30 6 10 15       representability with a witness
    frob gb 6 10 15                reduced basis, one binomial per line
    frob decomp 6 10 15            irreducible components of the head ideal
    frob hilbert --t 25 6 10 15    weighted Hilbert value at t
    frob regularity 6 10 15        index of regularity

Weights may come from a file (--file, whitespace-separated tokens, # starts
a comment).  --json switches to a machine-readable report with big integers
as decimal strings; --time writes per-phase wall times to standard error;
--no-lll skips basis reduction.  Exit codes: 0 on success, 1 when a test
verdict is "no", 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .arith import Weights, kernel_basis, lll_reduce
from .frobenius import compute_mp, is_representable
from .grobner import format_binomial, lattice_groebner
from .hilbert import HilbertContext, hilbert_value, index_of_regularity
from .monideal import format_component, initial_ideal, irreducible_decomposition
from .order import OrderConfig
from .arith import pdegree

__all__ = ["main", "run", "RunReport"]

PHASES = ("basis", "reduction", "groebner", "extraction")


class _CLIError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep diagnostics to one line and our exit codes
        raise _CLIError(message)


@dataclass
class RunReport:
    """What a CLI invocation computed, plus wall time per phase."""

    command: str
    weights: tuple[int, ...]
    payload: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "p": [str(w) for w in self.weights],
            **self.payload,
            "elapsed": {k: round(v, 6) for k, v in self.timings.items()},
        }
        return json.dumps(doc)


def _build_parser() -> _Parser:
    parser = _Parser(prog="frob", description="Frobenius numbers via lattice bases")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("weights", nargs="*", metavar="p", help="positive coprime integers")
    common.add_argument("--file", help="read weights from a file instead")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--time", dest="timing", action="store_true",
                        help="print per-phase wall times to stderr")
    common.add_argument("--no-lll", dest="no_lll", action="store_true",
                        help="skip basis reduction")

    sub.add_parser("number", parents=[common], help="largest non-representable integer")
    t = sub.add_parser("test", parents=[common], help="test one integer")
    t.add_argument("--t", required=True, metavar="T", help="integer to test")
    sub.add_parser("gb", parents=[common], help="print the reduced basis")
    sub.add_parser("decomp", parents=[common], help="irreducible components")
    h = sub.add_parser("hilbert", parents=[common], help="Hilbert value at a degree")
    h.add_argument("--t", required=True, metavar="T", help="degree to evaluate")
    sub.add_parser("regularity", parents=[common], help="index of regularity")
    return parser


def _read_weights(args) -> Weights:
    if args.file is not None:
        try:
            text = open(args.file, encoding="utf-8").read()
        except OSError as e:
            raise _CLIError(str(e))
        tokens = []
        for line in text.splitlines():
            tokens.extend(line.split("#", 1)[0].split())
    else:
        tokens = args.weights
    if not tokens:
        raise _CLIError("no weights given")
    entries = []
    for tok in tokens:
        try:
            entries.append(int(tok, 10))
        except ValueError:
            raise _CLIError(f"not an integer: {tok!r}")
    return Weights(tuple(entries))


def _parse_t(args) -> int:
    try:
        return int(args.t, 10)
    except ValueError:
        raise _CLIError(f"not an integer: {args.t!r}")


class _Timed:
    def __init__(self):
        self.timings = {k: 0.0 for k in PHASES}

    def run(self, phase, fn, *fargs):
        start = time.perf_counter()
        out = fn(*fargs)
        self.timings[phase] += time.perf_counter() - start
        return out


def _pipeline(p: Weights, timed: _Timed, use_lll: bool):
    basis = timed.run("basis", kernel_basis, p)
    if use_lll:
        basis = timed.run("reduction", lll_reduce, basis)
    return timed.run("groebner", lattice_groebner, p, basis, OrderConfig(p))


def _corners_max(p, G, timed) -> int:
    comps = timed.run("extraction", irreducible_decomposition, initial_ideal(G), p)
    return max(pdegree(tuple(x - 1 for x in v), p) for v in comps)


def run(argv, stdout=None, stderr=None) -> int:
    """Execute one CLI invocation; returns the exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    total_start = time.perf_counter()
    try:
        args = _build_parser().parse_args(argv)
        p = _read_weights(args)
        timed = _Timed()
        report = RunReport(args.command, p.entries, timings=timed.timings)
        code = 0
        lines: list[str] = []

        if args.command == "number":
            if p.n == 1 or any(w == 1 for w in p.entries):
                fstar = -1
            else:
                G = _pipeline(p, timed, not args.no_lll)
                fstar = _corners_max(p, G, timed)
            report.payload["frobenius"] = str(fstar)
            lines.append(str(fstar))

        elif args.command == "test":
            t = _parse_t(args)
            G = _pipeline(p, timed, not args.no_lll)
            res = timed.run("extraction", is_representable, p, t, G)
            report.payload["t"] = str(t)
            report.payload["representable"] = res.representable
            report.payload["witness"] = (
                [str(x) for x in res.witness] if res.representable else None
            )
            if res.representable:
                lines.append("yes " + " ".join(str(x) for x in res.witness))
            else:
                lines.append("no")
                code = 1

        elif args.command == "gb":
            G = _pipeline(p, timed, not args.no_lll)
            report.payload["basis"] = [
                {
                    "head": [str(x) for x in g.head],
                    "tail": [str(x) for x in g.tail],
                    "text": format_binomial(g),
                }
                for g in G.elements
            ]
            lines.extend(format_binomial(g) for g in G.elements)

        elif args.command == "decomp":
            G = _pipeline(p, timed, not args.no_lll)
            comps = timed.run(
                "extraction", irreducible_decomposition, initial_ideal(G), p
            )
            ordered = sorted(comps)
            report.payload["components"] = [[str(x) for x in v] for v in ordered]
            lines.extend(format_component(v) for v in ordered)

        elif args.command == "hilbert":
            t = _parse_t(args)
            G = _pipeline(p, timed, not args.no_lll)
            ctx = HilbertContext(initial_ideal(G), p)
            value = timed.run("extraction", hilbert_value, ctx, t)
            report.payload["t"] = str(t)
            report.payload["value"] = str(value)
            lines.append(str(value))

        elif args.command == "regularity":
            G = _pipeline(p, timed, not args.no_lll)
            ctx = HilbertContext(initial_ideal(G), p)
            reg = timed.run("extraction", index_of_regularity, ctx)
            report.payload["index_of_regularity"] = str(reg)
            lines.append(str(reg))

        timed.timings["total"] = time.perf_counter() - total_start
        if args.json:
            print(report.to_json(), file=out)
        else:
            for line in lines:
                print(line, file=out)
        if args.timing:
            for phase in (*PHASES, "total"):
                print(f"{phase:<11} {timed.timings[phase]:.6f}s", file=err)
        return code
    except (_CLIError, ValueError) as e:
        print(str(e), file=err)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
