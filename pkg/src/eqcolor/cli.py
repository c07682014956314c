"""Command-line front end.

    eqcolor feasible --r R SIZES...
    eqcolor p --q Q SIZES...
    eqcolor threshold SIZES...
    eqcolor spectrum [--max M] SIZES...
    eqcolor color --r R SIZES...
    eqcolor check --coloring FILE SIZES...

Sizes come as positional integers or from ``--file PATH`` (one integer per
line, ``#`` starts a comment).  Exit status is 0 on success, 1 when the
query has no equitable answer, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .construction import coloring_problems, construct_coloring
from .core import EquitableColoring, InfeasibleError, Instance, InvalidInstance, make_instance
from .feasibility import feasible, spectrum
from .oracle import OracleBudgetExceeded, oracle_feasible, oracle_threshold
from .threshold import equitable_chromatic_threshold, p_of_q

SCHEMA = 1

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def read_sizes_file(path: str) -> list[int]:
    sizes = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                sizes.append(int(text))
            except ValueError:
                raise UsageError(f"{path}:{lineno}: not an integer: {text!r}") from None
    return sizes


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _size(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def format_ranges(values: Sequence[int]) -> str:
    """Compress sorted integers: [2, 4, 8, 9, 10] -> '2,4,8-10'."""
    if not values:
        return "none"
    runs = []
    start = prev = values[0]
    for v in values[1:]:
        if v == prev + 1:
            prev = v
            continue
        runs.append((start, prev))
        start = prev = v
    runs.append((start, prev))
    return ",".join(str(a) if a == b else f"{a}-{b}" for a, b in runs)


def coloring_document(instance: Instance, coloring: EquitableColoring) -> dict:
    return {
        "schema": SCHEMA,
        "instance": _instance_doc(instance),
        "r": coloring.num_classes,
        "classes": [list(part) for part in coloring.classes],
        "empty_classes": coloring.empty_classes,
    }


def load_coloring(path: str) -> tuple[int, EquitableColoring]:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read coloring {path}: {exc}") from None
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise UsageError(f"{path}: expected a coloring document with schema {SCHEMA}")
    try:
        classes = doc["classes"]
        empty = doc.get("empty_classes", 0)
        if not isinstance(classes, list) or not all(isinstance(p, list) for p in classes):
            raise TypeError("classes must be a list of lists")
        if not all(isinstance(c, int) and not isinstance(c, bool) for p in classes for c in p):
            raise TypeError("class sizes must be integers")
        if not isinstance(empty, int) or isinstance(empty, bool):
            raise TypeError("empty_classes must be an integer")
        coloring = EquitableColoring(classes=classes, empty_classes=empty)
        r = doc.get("r", coloring.num_classes)
        if not isinstance(r, int) or isinstance(r, bool):
            raise TypeError("r must be an integer")
    except (KeyError, TypeError) as exc:
        raise UsageError(f"{path}: malformed coloring document: {exc}") from None
    return r, coloring


def _instance_doc(instance: Instance) -> dict:
    return {"sizes": list(instance.sizes), "total": instance.total}


def _emit(args, payload: dict, text: str, out) -> None:
    if args.format == "json":
        doc = {"schema": SCHEMA, "instance": _instance_doc(args.instance)}
        doc.update(payload)
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def cmd_feasible(args, out, err) -> int:
    inst, r = args.instance, args.r
    answer = feasible(inst, r)
    payload = {"r": r, "feasible": answer}
    if args.oracle:
        check = oracle_feasible(inst, r)
        payload["oracle"] = check
        if check != answer:
            err.write(f"oracle mismatch for r={r}: feasible={answer} oracle={check}\n")
            return EXIT_INFEASIBLE
    _emit(args, payload, f"r={r} {'feasible' if answer else 'infeasible'}", out)
    return EXIT_OK if answer else EXIT_INFEASIBLE


def cmd_p(args, out, err) -> int:
    res = p_of_q(args.instance, args.q)
    _emit(args, {"q": res.q, "p": res.p, "d": res.d}, f"p={res.p} d={res.d}", out)
    return EXIT_OK


def cmd_threshold(args, out, err) -> int:
    res = equitable_chromatic_threshold(args.instance)
    payload = {"q": res.q, "p": res.p, "d": res.d}
    if args.oracle:
        check = oracle_threshold(args.instance)
        payload["oracle"] = check
        if check != res.p:
            err.write(f"oracle mismatch: threshold p={res.p} oracle={check}\n")
            return EXIT_INFEASIBLE
    _emit(args, payload, f"p={res.p} d={res.d}", out)
    return EXIT_OK


def cmd_spectrum(args, out, err) -> int:
    report = spectrum(args.instance, args.max)
    ok, bad = report.feasible, report.infeasible
    payload = {"r_max": max(report.entries), "feasible": ok, "infeasible": bad}
    text = f"feasible: {format_ranges(ok)}; infeasible: {format_ranges(bad)}"
    _emit(args, payload, text, out)
    return EXIT_OK


def cmd_color(args, out, err) -> int:
    coloring = construct_coloring(args.instance, args.r)
    if args.format == "json":
        doc = coloring_document(args.instance, coloring)
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return EXIT_OK
    lines = [
        f"X{i + 1} (n={n}): " + " ".join(map(str, part))
        for i, (n, part) in enumerate(zip(args.instance.sizes, coloring.classes))
    ]
    if coloring.empty_classes:
        lines.append(f"empty classes: {coloring.empty_classes}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_check(args, out, err) -> int:
    r, coloring = load_coloring(args.coloring)
    problems = coloring_problems(args.instance, coloring)
    if r != coloring.num_classes:
        problems.append(f"class_count: document says r={r}, found {coloring.num_classes}")
    _emit(
        args,
        {"r": r, "valid": not problems, "problems": problems},
        "valid" if not problems else "invalid: " + "; ".join(problems),
        out,
    )
    return EXIT_OK if not problems else EXIT_INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("sizes", nargs="*", type=_size, help="partite-set sizes")
    common.add_argument("--file", help="read sizes from PATH, one per line")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="eqcolor",
        description="Equitable colourings of complete multipartite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("feasible", parents=[common], help="is there an equitable r-coloring?")
    p.add_argument("--r", type=_positive_int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("p", parents=[common], help="interval anchor p(q) and witness d")
    p.add_argument("--q", type=_positive_int, required=True)
    p.set_defaults(func=cmd_p)

    p = sub.add_parser("threshold", parents=[common], help="equitable chromatic threshold")
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("spectrum", parents=[common], help="feasible r in [1, max]")
    p.add_argument("--max", type=_positive_int, default=None, help="largest r (default N)")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("color", parents=[common], help="construct an equitable r-coloring")
    p.add_argument("--r", type=_positive_int, required=True)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("check", parents=[common], help="verify a JSON coloring document")
    p.add_argument("--coloring", required=True, metavar="FILE")
    p.set_defaults(func=cmd_check)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    stderr, sys.stderr = sys.stderr, err
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    finally:
        sys.stderr = stderr
    try:
        if args.file and args.sizes:
            raise UsageError("give sizes either positionally or with --file, not both")
        raw = read_sizes_file(args.file) if args.file else args.sizes
        args.instance = make_instance(raw)
        return args.func(args, out, err)
    except InfeasibleError as exc:
        err.write(f"eqcolor: {exc}\n")
        return EXIT_INFEASIBLE
    except (UsageError, InvalidInstance, OracleBudgetExceeded, OSError) as exc:
        err.write(f"eqcolor: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
