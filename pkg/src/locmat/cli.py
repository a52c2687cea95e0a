"""
Command-line front end.

Exit codes: 0 success (a "false" / "not-member" answer is a success),
1 domain errors (singular matrix, non-divisibility, failed verification),
2 usage and parse errors (bad flags, malformed expressions, literals or files).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from functools import reduce
from typing import Any, Dict, Optional, Sequence

from locmat.__version__ import APP_DESCRIPTION, APP_NAME, __version__
from locmat.constants import DEFAULT_SEED, DEFAULT_TRIALS, ENV_SEED, SUITE_NAMES
from locmat.errors import (
    FieldError,
    FileFormatError,
    LiteralSyntaxError,
    LocmatError,
    SteinitzSyntaxError,
)
from locmat.io import file_formats
from locmat.io.literals import format_element, parse_descriptor, parse_element
from locmat.io.steinitz_parser import format_steinitz, parse_steinitz
from locmat.models import permatrix
from locmat.models.fields import RootTower
from locmat.models.steinitz import divides, gcd, lcm, quotient
from locmat.processors import autos, groups, homothety
from locmat.utils.timer import measure_time
from locmat.validation.suites import run_suites

logger = logging.getLogger(__name__)

USAGE_ERRORS = (SteinitzSyntaxError, LiteralSyntaxError, FileFormatError, FileNotFoundError)


class CommandError(Exception):
    """Usage error detected after argparse (exit code 2)."""


class _Output:
    """Writes either the human form or the JSON object of a result."""

    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, human: str, payload: Dict[str, Any]) -> None:
        if self.as_json:
            print(json.dumps(payload, indent=2))
        else:
            print(human)

    def matrix(self, A: permatrix.PeriodicMatrix) -> None:
        text = file_formats.matrix_to_json(A)
        print(text, end="")


def _matrix_payload(A: permatrix.PeriodicMatrix) -> Dict[str, Any]:
    return json.loads(file_formats.matrix_to_json(A))


def _seed_default() -> int:
    raw = os.environ.get(ENV_SEED)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {ENV_SEED}={raw!r}")
        return DEFAULT_SEED


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=APP_NAME, description=APP_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {__version__}")
    parser.add_argument("--json", action="store_true", help="emit JSON objects")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    st = sub.add_parser("steinitz", help="Steinitz number arithmetic")
    st.add_argument("op", choices=("eval", "divides", "lcm", "gcd", "quotient"))
    st.add_argument("exprs", nargs="+", metavar="EXPR")

    mx = sub.add_parser("matrix", help="periodic matrix arithmetic")
    mx.add_argument("op", choices=("mul", "add", "sub", "inv", "transpose", "det", "canon", "pow"))
    mx.add_argument("files", nargs="+", metavar="FILE")
    mx.add_argument("--at", type=int, help="level for det (defaults to the minimal period)")
    mx.add_argument("--exp", type=int, help="exponent for pow")

    gr = sub.add_parser("group", help="GL/SL membership, words and decompositions")
    gsub = gr.add_subparsers(dest="group_op", required=True)
    for name in ("sl-member", "gl-member"):
        p = gsub.add_parser(name)
        p.add_argument("--s", required=True, metavar="EXPR", help="Steinitz number")
        p.add_argument("file")
    dec = gsub.add_parser("decompose")
    dec.add_argument("--mode", choices=("sl", "gl"), default="sl")
    dec.add_argument("--at", type=int, help="level m (defaults to the minimal period)")
    dec.add_argument("file")
    lem = gsub.add_parser("lemma1", help="rewrite t_ij(alpha) in M_q as block transvections of M_n")
    lem.add_argument("--n", type=int, required=True)
    lem.add_argument("--q", type=int, required=True)
    lem.add_argument("--i", type=int, required=True)
    lem.add_argument("--j", type=int, required=True)
    lem.add_argument("--alpha", required=True, help="element literal, e.g. GF(5):3")
    lem.add_argument("--field", help="field for a bare --alpha payload")
    ev = gsub.add_parser("evaluate")
    ev.add_argument("file", help="group word file")

    dr = sub.add_parser("detr", help="relative determinant")
    dr.add_argument("--s", required=True, metavar="EXPR")
    dr.add_argument("file")

    au = sub.add_parser("auto", help="automorphism descriptors")
    au.add_argument("op", choices=("apply", "compose", "anti"))
    au.add_argument("files", nargs="+", metavar="FILE")

    ve = sub.add_parser("verify", help="run the property suites")
    ve.add_argument("--suite", nargs="+", default=["all"], choices=(*SUITE_NAMES, "all"))
    ve.add_argument("--seed", type=int, default=None)
    ve.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    return parser


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------


def _steinitz(text: str):
    try:
        return parse_steinitz(text)
    except SteinitzSyntaxError as e:
        raise CommandError(f"in {text!r}: {e}") from e


def _level(at: Optional[int], A: permatrix.PeriodicMatrix) -> int:
    if at is None:
        return A.period
    if at < 1:
        raise CommandError(f"--at must be a positive level, got {at}")
    return at


def _element(text: str, field_text: Optional[str]):
    try:
        field = parse_descriptor(field_text) if field_text else None
        return parse_element(text, field)
    except FieldError as e:
        raise CommandError(f"in {text!r}: {e}") from e


def _has_block(path: str) -> bool:
    """True when the JSON file at path is a matrix document."""
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
    except (OSError, ValueError):
        return False
    return isinstance(doc, dict) and "block" in doc


def _cmd_steinitz(args, out: _Output) -> int:
    values = [_steinitz(e) for e in args.exprs]
    if args.op in ("eval", "lcm", "gcd"):
        if args.op == "eval" and len(values) != 1:
            raise CommandError("steinitz eval takes exactly one expression")
        result = values[0] if args.op == "eval" else (lcm if args.op == "lcm" else gcd)(values)
        text = format_steinitz(result)
        out.emit(text, {"value": text})
        return 0
    if len(values) != 2:
        raise CommandError(f"steinitz {args.op} takes exactly two expressions")
    a, b = values
    if args.op == "divides":
        answer = divides(a, b)
        out.emit("true" if answer else "false", {"divides": answer})
        return 0
    text = format_steinitz(quotient(a, b))
    out.emit(text, {"value": text})
    return 0


def _cmd_matrix(args, out: _Output) -> int:
    matrices = [file_formats.load_matrix(f) for f in args.files]
    op = args.op
    if op in ("mul", "add", "sub"):
        if len(matrices) < 2:
            raise CommandError(f"matrix {op} needs at least two files")
        combine = {"mul": permatrix.mul, "add": permatrix.add, "sub": permatrix.sub}[op]
        out.matrix(reduce(combine, matrices))
        return 0
    if len(matrices) != 1:
        raise CommandError(f"matrix {op} takes exactly one file")
    A = matrices[0]
    if op == "inv":
        out.matrix(permatrix.inverse(A))
    elif op == "transpose":
        out.matrix(permatrix.transpose(A))
    elif op == "pow":
        if args.exp is None:
            raise CommandError("matrix pow needs --exp")
        out.matrix(permatrix.power(A, args.exp))
    elif op == "det":
        m = _level(args.at, A)
        d = permatrix.det_at(A, m)
        out.emit(format_element(d), {"det": format_element(d), "level": m})
    else:
        if out.as_json:
            out.emit("", {"period": A.period, "matrix": _matrix_payload(A)})
        else:
            print(f"period={A.period}")
            out.matrix(A)
    return 0


def _cmd_group(args, out: _Output) -> int:
    op = args.group_op
    if op == "lemma1":
        alpha = _element(args.alpha, args.field)
        word = groups.lemma1_rewrite(args.i, args.j, alpha, args.q, args.n)
        print(file_formats.word_to_json(word), end="")
        return 0
    if op == "evaluate":
        out.matrix(groups.evaluate(file_formats.load_word(args.file)))
        return 0

    A = file_formats.load_matrix(args.file)
    if op == "decompose":
        m = _level(args.at, A)
        decompose = groups.decompose_transvections if args.mode == "sl" else groups.decompose_gl
        print(file_formats.word_to_json(decompose(A, m)), end="")
        return 0

    s = _steinitz(args.s)
    if op == "sl-member":
        result = groups.sl_membership(A, s)
        out.emit(str(result), {"member": result.member, "level": result.level})
    else:
        answer = groups.gl_membership(A, s)
        out.emit("true" if answer else "false", {"member": answer})
    return 0


def _cmd_detr(args, out: _Output) -> int:
    A = file_formats.load_matrix(args.file)
    rd = homothety.RelativeDeterminant(RootTower(A.field, _steinitz(args.s)))
    value = homothety.det_r(rd, A)
    out.emit(format_element(value), {"detr": format_element(value)})
    return 0


def _cmd_auto(args, out: _Output) -> int:
    files = args.files
    if args.op == "compose":
        if len(files) < 2:
            raise CommandError("auto compose needs at least two descriptor files")
        # A trailing matrix file is applied to the composite
        if _has_block(files[-1]):
            A = file_formats.load_matrix(files[-1])
            descriptor_files = files[:-1]
        else:
            A = None
            descriptor_files = files
        if len(descriptor_files) < 2:
            raise CommandError("auto compose needs at least two descriptor files")
        field = A.field if A is not None else None
        descriptors = [file_formats.load_descriptor(f, field) for f in descriptor_files]
        composite = reduce(autos.compose, descriptors)
        if A is None:
            print(file_formats.descriptor_to_json(composite), end="")
        else:
            out.matrix(autos.apply(composite, A))
        return 0

    if len(files) != 2:
        raise CommandError(f"auto {args.op} takes a descriptor file and a matrix file")
    A = file_formats.load_matrix(files[1])
    d = file_formats.load_descriptor(files[0], A.field)
    out.matrix(autos.apply(d, A) if args.op == "apply" else autos.apply_anti(d, A))
    return 0


def _cmd_verify(args, out: _Output) -> int:
    seed = args.seed if args.seed is not None else _seed_default()
    if args.trials < 1:
        raise CommandError("--trials must be positive")
    report = run_suites(args.suite, seed, args.trials)
    if out.as_json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print("\n".join(report.lines()))
    return 0 if report.ok else 1


COMMANDS = {
    "steinitz": _cmd_steinitz,
    "matrix": _cmd_matrix,
    "group": _cmd_group,
    "detr": _cmd_detr,
    "auto": _cmd_auto,
    "verify": _cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, dispatch, print the result and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return int(e.code or 0)

    out = _Output(args.json)
    try:
        with measure_time(f"command {args.command}"):
            return COMMANDS[args.command](args, out)
    except (CommandError, *USAGE_ERRORS) as e:
        print(f"{APP_NAME}: error: {e}", file=sys.stderr)
        return 2
    except (LocmatError, ArithmeticError, ValueError) as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"{APP_NAME}: error: {e}", file=sys.stderr)
        return 1
