"""Command-line entry point: one subcommand per computation"""

from __future__ import annotations

__all__ = [
    "COMMANDS",
    "build_parser",
    "parse_word",
    "run",
    "main",
]

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction
from typing import Any

from level4_braids.braids import BraidWord, PureBraidWord
from level4_braids.config import check_bound
from level4_braids.covers import CoverIndex, all_covers, psi_base, psi_cover
from level4_braids.errors import Level4Error, ParseError, UnknownSuite
from level4_braids.formulas import albanese_range, betti_tables, closed_forms
from level4_braids.homology import (
    H1Vector,
    ModuleExpression,
    act,
    dim_h1,
    enumerate_basis,
    reduce,
    word_matrix,
)
from level4_braids.oracle import OracleH1
from level4_braids.reps import decomposition, multiplicity_full, torsion_report
from level4_braids.utils import fraction_rows
from level4_braids.cli.report import CommandRequest, configure_logging, emit
from level4_braids.cli.verify import run_suite, suite_names

logger = logging.getLogger(__name__)

PROG = "level4-braids"

Handler = Callable[[CommandRequest], tuple[Any, bool]]


def parse_word(text: str, n: int) -> BraidWord | PureBraidWord:
    """A braid word "s1 S2" or a pure braid word "A(1,2)^2 A(1,3)"."""
    try:
        return BraidWord.parse(text, n)
    except ParseError:
        return PureBraidWord.parse(text, n)


def _exact(x: Fraction) -> int | Fraction:
    return x.numerator if x.denominator == 1 else x


def _cmd_dim(req: CommandRequest) -> tuple[Any, bool]:
    n = req.params["n"]
    return {"n": n, "dim": dim_h1(n)}, True


def _cmd_basis(req: CommandRequest) -> tuple[Any, bool]:
    n = req.params["n"]
    basis = enumerate_basis(n)
    rows = [{"index": k, "symbol": str(sym)} for k, sym in enumerate(basis)]
    return {"n": n, "dim": len(basis), "basis": rows}, True


def _cmd_reduce(req: CommandRequest) -> tuple[Any, bool]:
    n, text = req.params["n"], req.params["expr"]
    v = reduce(ModuleExpression.parse(text, n))
    return {"n": n, "expression": text, "vector": v.to_dict(), "text": str(v)}, True


def _cmd_act(req: CommandRequest) -> tuple[Any, bool]:
    n = req.params["n"]
    w = parse_word(req.params["word"], n)
    v = act(w, H1Vector.parse(req.params["vector"], n))
    return {"n": n, "word": str(w), "vector": v.to_dict(), "text": str(v)}, True


def _cmd_matrix(req: CommandRequest) -> tuple[Any, bool]:
    n = req.params["n"]
    w = parse_word(req.params["word"], n)
    rows = [[_exact(x) for x in row] for row in fraction_rows(word_matrix(w, n))]
    return {"n": n, "word": str(w), "dim": len(rows), "matrix": rows}, True


def _cmd_psi(req: CommandRequest) -> tuple[Any, bool]:
    n, cover = req.params["n"], req.params["cover"]
    v = H1Vector.parse(req.params["vector"], n)
    if cover is None:
        images = [psi_base(v)]
    elif cover == "all":
        images = [psi_cover(c, v) for c in all_covers(n)]
    else:
        images = [psi_cover(CoverIndex.parse(cover, n), v)]
    return {"n": n, "vector": str(v), "images": images}, True


def _cmd_decompose(req: CommandRequest) -> tuple[Any, bool]:
    n = req.params["n"]
    rows = decomposition(n, limits=req.limits, progress=req.progress)
    out = [row.to_dict() for row in rows]
    if req.params["full"]:
        for row, d in zip(rows, out):
            d["full_multiplicity"] = multiplicity_full(row.label, n=n, limits=req.limits)
    total = sum(row.dim * row.multiplicity for row in rows)
    return {"n": n, "dim": dim_h1(n), "covered": total, "rows": out}, total == dim_h1(n)


def _cmd_torsion(req: CommandRequest) -> tuple[Any, bool]:
    n, d = req.params["n"], req.params["d"]
    points = torsion_report(n, d, limits=req.limits, progress=req.progress)
    return {"n": n, "d": d, "count": len(points), "points": points}, True


def _cmd_oracle(req: CommandRequest) -> tuple[Any, bool]:
    oracle = OracleH1(req.params["n"], limits=req.limits, smith=not req.params["no_smith"],
                      progress=req.progress)
    return oracle, True


def _cmd_formulas(req: CommandRequest) -> tuple[Any, bool]:
    p = req.params
    if p["betti"]:
        return betti_tables(), True
    if p["albanese"]:
        start = p["g"] if p["g"] is not None else 7
        witnesses = albanese_range(start, p["to"])
        return {"witnesses": witnesses}, all(w.holds for w in witnesses if w.in_range)
    if p["g"] is not None:
        return closed_forms(p["g"]), True
    return closed_forms(n=p["n"]), True


def _cmd_verify(req: CommandRequest) -> tuple[Any, bool]:
    n, suite = req.params["n"], req.params["suite"]
    results = run_suite(suite, n, limits=req.limits, seed=req.seed, progress=req.progress)
    passed = not any(r.passed is False for r in results)
    skipped = [r.name for r in results if r.skipped]
    return {"suite": suite, "n": n, "seed": req.seed, "passed": passed, "results": results,
            "skipped": skipped}, passed


COMMANDS: dict[str, Handler] = {
    "dim": _cmd_dim,
    "basis": _cmd_basis,
    "reduce": _cmd_reduce,
    "act": _cmd_act,
    "matrix": _cmd_matrix,
    "psi": _cmd_psi,
    "decompose": _cmd_decompose,
    "torsion": _cmd_torsion,
    "oracle": _cmd_oracle,
    "formulas": _cmd_formulas,
    "verify": _cmd_verify,
}

# which Limits field bounds n for each command
_BOUNDS = {
    "decompose": "enumeration",
    "torsion": "enumeration",
    "oracle": "oracle",
}


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive, default=3, help="Strand count. Defaults to 3.")
    common.add_argument("--g", type=_positive, default=None, help="Genus, for formulas.")
    common.add_argument("--d", type=_positive, default=1, help="Depth of the characteristic variety.")
    common.add_argument("--seed", type=int, default=0, help="Seed for random checks. Defaults to 0.")
    common.add_argument("--format", choices=("json", "csv"), default="json", help="Output format.")
    common.add_argument("--out", default=None, help="Output path; stdout when omitted.")
    common.add_argument("--bound", type=_positive, default=None,
                        help="Largest n for enumerations and the oracle.")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for INFO, -vv for DEBUG logging on stderr.")
    common.add_argument("--progress", action="store_true", help="Show progress bars on stderr.")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog=PROG, description="Level-4 braid group homology")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, summary: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, parents=[common], help=summary)

    add("dim", "Dimension of H_1(B_n[4]; Q).")
    add("basis", "The basis symbols in order.")
    add("reduce", "Reduce a module expression to the basis.").add_argument(
        "--expr", required=True, help='Expression such as "(1-T(1,3))*t(1,2)".')
    act_parser = add("act", "Act on a vector by a braid word.")
    act_parser.add_argument("--word", required=True, help='"s1 S2" or "A(1,2)^2".')
    act_parser.add_argument("--vector", required=True, help='Vector such as "t(1,2) - T(1,3)*t(1,2)".')
    add("matrix", "Matrix of a braid word on H_1.").add_argument("--word", required=True)
    psi_parser = add("psi", "Double-cover detection images of a vector.")
    psi_parser.add_argument("--vector", required=True)
    psi_parser.add_argument("--cover", default=None,
                            help='Cover "(i,j)" or "(i,inf)", or "all"; the base map when omitted.')
    add("decompose", "Irreducible decomposition of H_1.").add_argument(
        "--full", action="store_true", help="Also take inner products over all of Z_n.")
    add("torsion", "2-torsion points of the characteristic varieties.")
    add("oracle", "H_1 of the level-4 subgroup from its presentation.").add_argument(
        "--no-smith", action="store_true", help="Skip the elementary divisors.")
    formulas = add("formulas", "Closed formulas for a genus or strand count.")
    formulas.add_argument("--betti", action="store_true", help="Betti tables of small groups.")
    formulas.add_argument("--albanese", action="store_true",
                          help="Albanese inequality for g (default 7) through --to.")
    formulas.add_argument("--to", type=_positive, default=20, help="Last genus for --albanese.")
    add("verify", "Run a verification suite.").add_argument(
        "--suite", default="all", help=f"One of {', '.join(suite_names())}. Defaults to all.")
    return parser


def _usage_error(req: CommandRequest, e: Exception) -> tuple[int, str]:
    print(f"{PROG} {req.command}: error: {e}", file=sys.stderr)
    return 2, ""


def run(request: CommandRequest) -> tuple[int, str]:
    """
    Dispatch a request, emit its report and return the exit status with the text.

    Exit status is 0 on success, 1 when the computation fails or a check does not
    pass, 2 for invalid arguments.
    """
    handler = COMMANDS.get(request.command)
    if handler is None:
        return _usage_error(request, ValueError(f"unknown command {request.command!r}"))
    try:
        bound = _BOUNDS.get(request.command)
        if bound is not None:
            check_bound("n", request.params["n"], getattr(request.limits, bound))
        payload, ok = handler(request)
    except (ValueError, UnknownSuite) as e:
        return _usage_error(request, e)
    except (Level4Error, ArithmeticError) as e:
        logger.debug("%s failed", request.command, exc_info=True)
        print(f"{PROG} {request.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return 1, ""
    text = emit(payload, request)
    return (0 if ok else 1), text


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    configure_logging(ns.verbose)
    try:
        request = CommandRequest.from_namespace(ns)
    except (TypeError, ValueError) as e:
        print(f"{PROG} {ns.command}: error: {e}", file=sys.stderr)
        return 2
    return run(request)[0]


if __name__ == "__main__":
    raise SystemExit(main())
