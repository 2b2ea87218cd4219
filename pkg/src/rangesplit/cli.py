"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import algorithms, checks, intdiv, tables
from .errors import RangeSplitError
from .intdiv import Bindings, DivMode
from .ranges import check_index
from .splitter import ALL_POLICIES, SplitPolicy, split_based, split_be, split_n

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(RangeSplitError):
    pass


def _index(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    try:
        return check_index(value)
    except RangeSplitError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _int_list(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [check_index(int(part)) for part in text.split(",")]
    except (ValueError, RangeSplitError) as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {exc}")


def _policy(text: str) -> SplitPolicy:
    try:
        return SplitPolicy.parse(text)
    except RangeSplitError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _emit_records(records: Sequence[dict], fmt: str, columns: Sequence[str]) -> str:
    if fmt == "json":
        return json.dumps(list(records), indent=2)
    rows = [[_cell(rec.get(c)) for c in columns] for rec in records]
    if fmt == "tsv":
        return "\n".join(["\t".join(columns)] + ["\t".join(r) for r in rows])
    return tables.render_text(list(columns), rows)


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, list) and len(value) == 2:
        return f"[{value[0]}, {value[1]})"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


# -- commands ----------------------------------------------------------------


def cmd_tabulate(args) -> int:
    print(tables.render(tables.tabulate(args.which), args.format))
    return EXIT_OK


def cmd_split(args) -> int:
    given = [name for name in ("n", "b", "e") if getattr(args, name) is not None]
    if given == ["n"]:
        part = split_n(args.n, args.policy)
    elif given == ["n", "b"]:
        part = split_based(args.b, args.n, args.policy)
    elif given == ["b", "e"]:
        part = split_be(args.b, args.e, args.policy)
    else:
        raise UsageError("give exactly one coordinate form: --n, --b with --n, or --b with --e")
    record = part.to_record()
    print(_emit_records([record], args.format, ["policy", "left", "excluded", "right"]))
    return EXIT_OK


def cmd_verify(args) -> int:
    policies = args.policy or list(ALL_POLICIES)
    mode = DivMode(args.div_mode) if args.div_mode else None
    reports = checks.run_all(args.max_n, policies, mode, args.seed)
    if args.format == "json":
        print(json.dumps({"seed": args.seed, "checks": [r.to_record() for r in reports]}, indent=2))
    else:
        records = [r.to_record() for r in reports]
        for rec in records:
            rec["status"] = "PASS" if rec["passed"] else "FAIL"
        print(f"seed {args.seed}")
        print(_emit_records(records, args.format, ["check", "status", "checked", "failures", "elapsed_s"]))
        for r in reports:
            for f in r.failures[:10]:
                print(f"  {r.name}: {f}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _modes(args) -> List[DivMode]:
    return [DivMode(args.div_mode)] if args.div_mode else list(DivMode)


def cmd_expr_eval(args) -> int:
    env = Bindings(args.n, args.b)
    is_range = "<" in args.expression
    records = []
    for mode in _modes(args):
        if is_range:
            r = intdiv.eval_range(args.expression, env, mode)
            records.append({"mode": mode.value, "n": args.n, "b": args.b, "value": r.as_list(), "length": len(r)})
        else:
            value = intdiv.eval_expr(args.expression, env, mode)
            records.append({"mode": mode.value, "n": args.n, "b": args.b, "value": value})
    columns = ["mode", "n", "b", "value"] + (["length"] if is_range else [])
    print(_emit_records(records, args.format, columns))
    return EXIT_OK


def cmd_expr_equiv(args) -> int:
    records = []
    for mode in _modes(args):
        rep = intdiv.check_equiv(args.left, args.right, range(args.min_n, args.max_n + 1), mode, args.b)
        rec = rep.to_record()
        rec["mode"] = mode.value
        records.append(rec)
    _print_sweeps(records, args.format)
    return EXIT_OK if all(r["holds"] for r in records) else EXIT_FAILED


def cmd_expr_identity(args) -> int:
    k_domain = range(args.min_k, args.max_k + 1)
    rep = intdiv.check_identity(args.name, range(args.min_n, args.max_n + 1), k_domain)
    rec = rep.to_record()
    rec["identity"] = intdiv.IDENTITIES[args.name]
    _print_sweeps([rec], args.format)
    return EXIT_OK if rep.holds else EXIT_FAILED


def _print_sweeps(records: List[dict], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(records, indent=2))
        return
    flat = []
    for rec in records:
        row = dict(rec)
        row["counterexamples"] = "; ".join(
            f"n={c['binding'].get('n')}: {_cell(c['left'])} vs {_cell(c['right'])}" for c in rec["counterexamples"]
        )
        flat.append(row)
    columns = [c for c in ("identity", "mode", "holds", "checked", "failures", "counterexamples") if c in flat[0]]
    print(_emit_records(flat, fmt, columns))


def cmd_search(args) -> int:
    variant = algorithms.SearchVariant(args.variant)
    r = algorithms.binary_search(args.array, args.target, variant, check_sorted=args.check_sorted)
    if args.format == "json":
        print(json.dumps({"variant": variant.value, "target": args.target, "index": r}))
    elif r is None:
        print(-1)
    else:
        print(f"found at {r}")
    return EXIT_OK


def cmd_chop(args) -> int:
    points = algorithms.chop_points(args.array)
    if args.format == "json":
        print(json.dumps({"indices": points, "values": [args.array[j] for j in points]}))
    else:
        print(",".join(str(j) for j in points))
    return EXIT_OK


def cmd_cross(args) -> int:
    result = algorithms.word_crosses_center(args.text)
    if args.format == "json":
        print(json.dumps({"text": args.text, "crosses": result}))
    else:
        print("true" if result else "false")
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=tables.FORMATS, default="table")
    mode = argparse.ArgumentParser(add_help=False)
    mode.add_argument("--div-mode", choices=[m.value for m in DivMode],
                      help="integer division semantics (default: report both)")

    parser = argparse.ArgumentParser(prog="rangesplit", description="Index-range algebra and array splitting.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tabulate", parents=[fmt], help="print a reference table computed live")
    p.add_argument("which", choices=tables.TABLE_IDS)
    p.set_defaults(func=cmd_tabulate)

    p = sub.add_parser("split", parents=[fmt], help="split a frame given by n, (b, n) or (b, e)")
    p.add_argument("--n", type=_index)
    p.add_argument("--b", type=_index)
    p.add_argument("--e", type=_index)
    p.add_argument("--policy", type=_policy, default=SplitPolicy.NATURAL,
                   help="natural|leftplus|rightplus|cutleft|cutright")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("verify", parents=[fmt, mode], help="run the exhaustive oracle checks")
    p.add_argument("--max-n", type=int, default=10000)
    p.add_argument("--policy", type=_policy, action="append", help="repeatable; default all")
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expr", help="evaluate and compare range expressions")
    esub = p.add_subparsers(dest="expr_command", required=True)
    q = esub.add_parser("eval", parents=[fmt, mode])
    q.add_argument("expression")
    q.add_argument("--n", type=_index, required=True)
    q.add_argument("--b", type=_index, default=0)
    q.set_defaults(func=cmd_expr_eval)
    q = esub.add_parser("equiv", parents=[fmt, mode])
    q.add_argument("left")
    q.add_argument("right")
    q.add_argument("--min-n", type=int, default=0)
    q.add_argument("--max-n", type=int, default=100)
    q.add_argument("--b", type=_index, default=0)
    q.set_defaults(func=cmd_expr_equiv)
    q = esub.add_parser("identity", parents=[fmt])
    q.add_argument("name", choices=sorted(intdiv.IDENTITIES))
    q.add_argument("--min-n", type=int, default=0)
    q.add_argument("--max-n", type=int, default=1000)
    q.add_argument("--min-k", type=int, default=1)
    q.add_argument("--max-k", type=int, default=64)
    q.set_defaults(func=cmd_expr_identity)

    p = sub.add_parser("search", parents=[fmt], help="binary search a sorted array")
    p.add_argument("--array", type=_int_list, required=True)
    p.add_argument("--target", type=_index, required=True)
    p.add_argument("--variant", choices=[v.value for v in algorithms.SearchVariant], default="rightplus")
    p.add_argument("--check-sorted", action="store_true", help="verify the input is sorted first")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("chop", parents=[fmt], help="in-sorted positions of a chop-sorted array")
    p.add_argument("--array", type=_int_list, required=True)
    p.set_defaults(func=cmd_chop)

    p = sub.add_parser("cross", parents=[fmt], help="does a word cross the center of the text")
    p.add_argument("--text", required=True)
    p.set_defaults(func=cmd_cross)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RangeSplitError as exc:
        print(f"rangesplit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
