from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from avoidance.construct import (
    build_avoider,
    build_simultaneous_avoider,
    one_occurrence_perm_to_string,
    one_occurrence_strings,
    string_to_one_occurrence_perm,
    witness_n_occurrences,
)
from avoidance.rank import classify, minimum_cover
from enumeration.distribution import (
    DistributionTable,
    distribution_marked,
    distribution_mesh,
    distribution_smp,
)
from enumeration.engine import EnumerationEngine
from enumeration.reductions import (
    count_max_occurrence_R,
    hyperplane_reduction_count,
    projective_lift_check,
)
from errors import MeshPermError, UsageError
from patterns.pattern_text import format_marked, format_mesh, format_smp, parse_marked, parse_mesh, parse_smp
from perms.multiperm import MultiPerm, inflate, inflate_all
from perms.perm_text import format_multiperm, parse_multiperm, to_dict
from run_log import FeatureLog
from series.reconcile import VERIFY_CASES, verify
from settings import OUTPUT_FORMATS, RunConfig, load_settings
from table_store import TableStore


class Context:
    def __init__(self, config: RunConfig, log: FeatureLog) -> None:
        self.config = config
        self.log = log
        self.engine = EnumerationEngine(
            budget=config.budget,
            workers=config.workers,
            logger=log.for_feature("enumerate"),
        )
        self.store = TableStore(config.cache_dir, logger=log.for_feature("cache"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, help="max elementary occurrence checks")
    common.add_argument("--workers", type=int, help="worker processes for enumeration")
    common.add_argument("--cache-dir", help="directory of cached distribution tables")
    common.add_argument("--format", choices=OUTPUT_FORMATS, dest="output", help="output format")

    parser = argparse.ArgumentParser(prog="meshperm", description="Singleton mesh patterns in d-dimensional permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("classify", "rank"):
        cmd = sub.add_parser(name, parents=[common])
        cmd.add_argument("-p", "--pattern", required=True)
        cmd.add_argument("--d", type=int, help="dimension, needed for the empty pattern")

    cmd = sub.add_parser("avoider", parents=[common], help="construct an avoider; repeat -p for a common avoider")
    cmd.add_argument("-p", "--pattern", action="append", required=True)
    cmd.add_argument("--d", type=int)
    cmd.add_argument("--length", type=int, required=True)

    cmd = sub.add_parser("witness", parents=[common])
    cmd.add_argument("-p", "--pattern", required=True)
    cmd.add_argument("--d", type=int)
    cmd.add_argument("--length", type=int, required=True)

    cmd = sub.add_parser("inflate", parents=[common])
    cmd.add_argument("--perm", required=True)
    cmd.add_argument("--by", required=True)
    target = cmd.add_mutually_exclusive_group(required=True)
    target.add_argument("--index", type=int)
    target.add_argument("--all", action="store_true")

    for name in ("enumerate", "distribution"):
        cmd = sub.add_parser(name, parents=[common])
        cmd.add_argument("-p", "--pattern", required=True)
        cmd.add_argument("--kind", choices=("smp", "mesh", "marked"), default="smp")
        cmd.add_argument("--d", type=int)
        cmd.add_argument("--n", type=int, required=True)
        cmd.add_argument("--no-cache", action="store_true")

    cmd = sub.add_parser("verify", parents=[common])
    cmd.add_argument("--case", required=True, choices=VERIFY_CASES)
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--n", type=int, default=3)

    cmd = sub.add_parser("reduce", parents=[common])
    cmd.add_argument("check", choices=("projective", "hyperplane", "R"))
    cmd.add_argument("-p", "--pattern")
    cmd.add_argument("--dir", type=int, default=1, help="row index of the projective/hyperplane direction")
    cmd.add_argument("--d", type=int)
    cmd.add_argument("--n", type=int, required=True)

    cmd = sub.add_parser("bijection", parents=[common])
    source = cmd.add_mutually_exclusive_group(required=True)
    source.add_argument("--string")
    source.add_argument("--perm")
    source.add_argument("--list", action="store_true")
    cmd.add_argument("--d", type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = load_settings().with_overrides(
            budget=args.budget,
            workers=args.workers,
            cache_dir=args.cache_dir,
            output=args.output,
        )
        log = FeatureLog(config.log_dir, enabled=config.log_enabled, max_bytes=config.log_max_bytes)
        context = Context(config, log)
        log.feature("cli", " ".join(argv if argv is not None else sys.argv[1:]))
        payload = COMMANDS[args.command](args, context)
    except json.JSONDecodeError as exc:
        _error(f"malformed JSON input: {exc}")
        return UsageError.exit_code
    except MeshPermError as exc:
        _error(f"{type(exc).__name__}: {exc}")
        return exc.exit_code
    out.write(render(payload, config.output))
    if isinstance(payload, dict) and payload.get("passed") is False:
        return 1
    return 0


def render(payload: Any, output: str) -> str:
    if output == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for row in _rows(payload):
            writer.writerow(row)
        return buffer.getvalue()
    if output == "text":
        return "\n".join(" ".join(row) for row in _rows(payload)) + "\n"
    return json.dumps(payload, sort_keys=True) + "\n"


def _rows(payload: Any) -> List[List[str]]:
    if isinstance(payload, dict) and "counts" in payload:
        return [["k", "count"]] + [[str(k), count] for k, count in enumerate(payload["counts"])]
    if isinstance(payload, dict) and "tables" in payload:
        rows = [["n", "k", "count"]]
        for table in payload["tables"]:
            rows.extend([str(table["n"]), str(k), count] for k, count in enumerate(table["counts"]))
        return rows
    if isinstance(payload, dict) and "perm" in payload:
        return [[payload["perm"]]]
    if isinstance(payload, dict):
        return [[key, json.dumps(value, sort_keys=True)] for key, value in sorted(payload.items())]
    return [[str(item)] for item in payload]


def _error(message: str) -> None:
    sys.stderr.write(json.dumps({"error": message}, sort_keys=True) + "\n")


def _perm_payload(perm: MultiPerm) -> Dict[str, Any]:
    payload = to_dict(perm)
    payload["perm"] = format_multiperm(perm)
    return payload


def cmd_classify(args: argparse.Namespace, context: Context) -> Dict[str, Any]:
    return classify(parse_smp(args.pattern, d=args.d)).to_dict()


def cmd_rank(args: argparse.Namespace, context: Context) -> Dict[str, Any]:
    pattern = parse_smp(args.pattern, d=args.d)
    cover = minimum_cover(pattern)
    payload = classify(pattern).to_dict()
    payload["cover"] = None if cover is None else [str(column) for column in cover]
    return payload


def cmd_avoider(args: argparse.Namespace, context: Context) -> Dict[str, Any]:
    patterns = [parse_smp(text, d=args.d) for text in args.pattern]
    logger = context.log.for_feature("construct")
    if len(patterns) == 1:
        return _perm_payload(build_avoider(patterns[0], args.length, logger))
    return _perm_payload(build_simultaneous_avoider(patterns, args.length, logger))


def cmd_witness(args: argparse.Namespace, context: Context) -> Dict[str, Any]:
    pattern = parse_smp(args.pattern, d=args.d)
    perm = witness_n_occurrences(pattern, args.length, context.log.for_feature("construct"))
    return _perm_payload(perm)


def cmd_inflate(args: argparse.Namespace, context: Context) -> Dict[str, Any]:
    perm = parse_multiperm(args.perm)
    sigma = parse_multiperm(args.by)
    if args.all:
        return _perm_payload(inflate_all(perm, sigma))
    return _perm_payload(inflate(perm, args.index, sigma))


def _table(args: argparse.Namespace, context: Context, n: int) -> DistributionTable:
    if args.kind == "mesh":
        mesh = parse_mesh(args.pattern)
        kind, pattern_id, d = "mesh", format_mesh(mesh), mesh.d
        compute: Callable[[], DistributionTable] = lambda: distribution_mesh(mesh, n, context.engine)
    elif args.kind == "marked":
        marked = parse_marked(args.pattern)
        kind, pattern_id, d = "marked", format_marked(marked), marked.d
        compute = lambda: distribution_marked(marked, n, context.engine)
    else:
        smp = parse_smp(args.pattern, d=args.d)
        kind, pattern_id, d = "smp", format_smp(smp), smp.d
        compute = lambda: distribution_smp(smp, n, context.engine)
    if args.no_cache:
        return compute()
    return context.store.get_or_compute(kind, pattern_id, d, n, compute)


def cmd_enumerate(args: argparse.Namespace, context: Context) -> Dict[str, Any]:
    table = _table(args, context, args.n)
    return {"d": table.d, "n": table.n, "counts": [str(count) for count in table.counts]}


def cmd_distribution(args: argparse.Namespace, context: Context) -> Dict[str, Any]:
    tables = [_table(args, context, n) for n in range(args.n + 1)]
    return {"tables": [table.to_dict() for table in tables]}


def cmd_verify(args: argparse.Namespace, context: Context) -> Dict[str, Any]:
    report = verify(args.case, args.d, args.n, context.engine, context.log.for_feature("verify"))
    return report.to_dict()


def cmd_reduce(args: argparse.Namespace, context: Context) -> Dict[str, Any]:
    logger = context.log.for_feature("verify")
    if args.check == "R":
        if args.d is None:
            raise UsageError("reduce R needs --d")
        return {"d": args.d, "n": args.n, "R": str(count_max_occurrence_R(args.d, args.n, context.engine))}
    if not args.pattern:
        raise UsageError(f"reduce {args.check} needs -p/--pattern")
    pattern = parse_smp(args.pattern, d=args.d)
    if args.check == "projective":
        ok = projective_lift_check(pattern, args.dir, args.n, context.engine, logger)
        return {"pattern": format_smp(pattern), "dir": args.dir, "n": args.n, "passed": ok}
    formula, direct = hyperplane_reduction_count(pattern, args.dir, args.n, context.engine, logger)
    return {
        "pattern": format_smp(pattern),
        "dir": args.dir,
        "n": args.n,
        "formula": str(formula),
        "direct": str(direct),
        "passed": formula == direct,
    }


def cmd_bijection(args: argparse.Namespace, context: Context) -> Any:
    if args.list:
        if args.d is None:
            raise UsageError("bijection --list needs --d")
        return one_occurrence_strings(args.d)
    if args.string is not None:
        return _perm_payload(string_to_one_occurrence_perm(args.string, args.d))
    return {"string": one_occurrence_perm_to_string(parse_multiperm(args.perm))}


COMMANDS: Dict[str, Callable[[argparse.Namespace, Context], Any]] = {
    "classify": cmd_classify,
    "rank": cmd_rank,
    "avoider": cmd_avoider,
    "witness": cmd_witness,
    "inflate": cmd_inflate,
    "enumerate": cmd_enumerate,
    "distribution": cmd_distribution,
    "verify": cmd_verify,
    "reduce": cmd_reduce,
    "bijection": cmd_bijection,
}


if __name__ == "__main__":
    raise SystemExit(main())
