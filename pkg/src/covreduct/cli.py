"""Command-line interface.

Commands::

    covreduct validate <file>
    covreduct reduce   <file> [--cache <out>] [--verify]
    covreduct update   <file> (--add <covering-file> | --del <name>) --cache <cache> [-o <out>]
    covreduct bench    <config> [--out <csv>]
    covreduct coverize <csv> --spec <spec> -o <out>

Exit codes: 0 success, 1 validation/parse error, 2 engine error,
3 verification mismatch.  Set COVREDUCT_LOG_LEVEL to adjust verbosity.
"""

import argparse
import csv
import logging
import os
import sys
from pathlib import Path

from .approximation import classify_consistency, Consistency
from .bench import BenchConfig, BenchMismatch, run_bench
from .engine import add_covering, batch_reducts, delete_covering, oracle_reducts
from .errors import EngineError, ValidationError
from .io import (
    coverize,
    load_cache,
    load_system,
    parse_covering,
    parse_coverization_spec,
    serialize_cache,
    serialize_system,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ENGINE = 2
EXIT_MISMATCH = 3

log = logging.getLogger(__name__)


def _print_reducts(reduct_set) -> None:
    for names in reduct_set.sorted_name_lists():
        print(",".join(names))


def _cmd_validate(args) -> int:
    system = load_system(Path(args.file).read_text())
    verdict = classify_consistency(system).value
    print(
        f"ok: {system.universe_size} objects, {len(system.coverings)} coverings, "
        f"{len(system.decision.classes)} decision classes, {verdict}"
    )
    return EXIT_OK


def _cmd_reduce(args) -> int:
    system = load_system(Path(args.file).read_text())
    reducts, cache = batch_reducts(system)
    if classify_consistency(system) is Consistency.INCONSISTENT:
        print("inconsistent (POS != U)")
    _print_reducts(reducts)
    if args.cache:
        Path(args.cache).write_text(serialize_cache(cache))
    if args.verify:
        oracle = oracle_reducts(system)
        if oracle.as_name_sets() != reducts.as_name_sets():
            print("verification: MISMATCH against brute-force enumeration", file=sys.stderr)
            return EXIT_MISMATCH
        print("verification: OK")
    return EXIT_OK


def _cmd_update(args) -> int:
    system = load_system(Path(args.file).read_text())
    cache = load_cache(Path(args.cache).read_text())
    if args.add:
        covering = parse_covering(Path(args.add).read_text(), system.universe_size)
        reducts, new_cache = add_covering(system, cache, covering)
        updated = system.with_covering(covering)
    else:
        reducts, new_cache = delete_covering(system, cache, args.delete)
        updated = system.without_covering(args.delete)
    _print_reducts(reducts)
    Path(args.cache).write_text(serialize_cache(new_cache))
    if args.out:
        Path(args.out).write_text(serialize_system(updated))
    return EXIT_OK


def _cmd_bench(args) -> int:
    config = BenchConfig.from_json(Path(args.config).read_text())
    if args.out:
        with open(args.out, "w") as fh:
            run_bench(config, fh)
    else:
        run_bench(config, sys.stdout)
    return EXIT_OK


def _cmd_coverize(args) -> int:
    spec = parse_coverization_spec(Path(args.spec).read_text())
    with open(args.csv, newline="") as fh:
        reader = csv.reader(fh)
        rows = list(reader)
    if not rows:
        raise ValidationError("CSV file is empty")
    header, data = rows[0], rows[1:]
    columns = {name: [row[i] for row in data] for i, name in enumerate(header)}
    system = coverize(columns, spec)
    Path(args.out).write_text(serialize_system(system))
    print(f"wrote {args.out}: {system.universe_size} objects, {len(system.coverings)} coverings")
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covreduct",
        description="Attribute reducts of covering decision systems via related families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a system document")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("reduce", help="compute all reducts (batch)")
    p.add_argument("file")
    p.add_argument("--cache", help="write the reduction cache here")
    p.add_argument("--verify", action="store_true", help="cross-check against brute force")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("update", help="incrementally update reducts after add/delete")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--add", help="file with the covering to add")
    group.add_argument("--del", dest="delete", help="name of the covering to delete")
    p.add_argument("--cache", required=True, help="cache file (read and rewritten)")
    p.add_argument("-o", "--out", help="also write the updated system document")
    p.set_defaults(fn=_cmd_update)

    p = sub.add_parser("bench", help="run the incremental-vs-batch benchmark grid")
    p.add_argument("config")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("coverize", help="turn a CSV table into a system document")
    p.add_argument("csv")
    p.add_argument("--spec", required=True, help="coverization spec file")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(fn=_cmd_coverize)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("COVREDUCT_LOG_LEVEL", "WARNING"))
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except BenchMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
