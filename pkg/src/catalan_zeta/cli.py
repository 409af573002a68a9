"""Command-line interface: ``catalan-zeta <command> ...``.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import verify as verify_mod
from .dyck import enumerate_paths, statistics, validate_path
from .errors import CatalanError
from .pipeline import trace_path_to_word, trace_word_to_path
from .trees import (
    PlantedTree,
    area_sequence_from_tree,
    crucial_vertices,
    speyer_step,
    speyer_step_inverse,
    tree_from_area_sequence,
    tutte_polynomial,
)
from .words import Word, classify, enumerate_words_A
from .zeta import zeta, zeta_inverse


def _use_color(stream) -> bool:
    mode = os.environ.get("CATALAN_ZETA_COLOR", "auto")
    return mode != "never" and hasattr(stream, "isatty") and stream.isatty()


def _error(message: str) -> int:
    text = f"error: {message}"
    if _use_color(sys.stderr):
        text = f"\033[31m{text}\033[0m"
    print(text, file=sys.stderr)
    return 1


def _dump(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _parse_word(text: str) -> Word:
    return Word.parse(text)


def _emit(args, plain: str, payload) -> None:
    if args.format == "json":
        _dump(payload)
    else:
        print(plain)


def cmd_enumerate(args) -> int:
    if args.kind == "words":
        if args.size < 1:
            args.parser.error("word length must be at least 1")
        items = [str(w) for w in enumerate_words_A(args.size)]
    else:
        if args.size < 0:
            args.parser.error("semilength must be nonnegative")
        items = [str(p) for p in enumerate_paths(args.size)]
    if args.format == "json":
        _dump(items)
        print(f"count={len(items)}", file=sys.stderr)
    else:
        for item in items:
            print(item)
        print(f"count={len(items)}")
    return 0


def _trace_records(stages) -> list:
    return [{"stage": name, "value": str(value)} for name, value in stages]


def cmd_map(args) -> int:
    if args.direction == "word-to-path":
        stages = trace_word_to_path(_parse_word(args.input))
    else:
        stages = trace_path_to_word(validate_path(args.input))
    result = str(stages[-1][1])
    if args.trace:
        _dump(_trace_records(stages))
    else:
        _emit(args, result, {"input": str(stages[0][1]), "output": result})
    return 0


def cmd_classify(args) -> int:
    report = classify(_parse_word(args.input))
    flags = report.as_dict()
    plain = " ".join(f"{tag}={'yes' if flags[tag] else 'no'}" for tag in "ABCD")
    if report.violations:
        plain += "\n" + report.describe()
    _emit(args, plain, flags)
    return 0


def cmd_stats(args) -> int:
    stats = statistics(validate_path(args.path))
    if args.format == "plain":
        for key, value in stats.items():
            if key == "area_sequence":
                value = ",".join(map(str, value))
            print(f"{key}={value}")
    else:
        _dump(stats)
    return 0


def _path_command(forward, backward):
    def run(args) -> int:
        path = validate_path(args.path)
        image = (backward if args.inverse else forward)(path)
        _emit(args, str(image), {"input": str(path), "output": str(image)})
        return 0

    return run


def _tree_payload(tree: PlantedTree) -> dict:
    return {
        "parens": tree.to_parens(),
        "parents": tree.parents(),
        "crucial": sorted(crucial_vertices(tree)),
        "root_degree": tree.root_degree,
    }


def cmd_tree(args) -> int:
    if args.action == "from-word":
        tree = tree_from_area_sequence(_parse_word(args.input).entries)
        payload = _tree_payload(tree)
        plain = f"{payload['parens']}\n{json.dumps(payload['parents'])}"
    elif args.action == "to-word":
        tree = PlantedTree.parse(args.input)
        a = area_sequence_from_tree(tree)
        payload, plain = {"area_sequence": list(a)}, str(a)
    else:
        tree = PlantedTree.parse(args.input)
        payload = _tree_payload(tree)
        plain = ",".join(map(str, payload["crucial"]))
    _emit(args, plain, payload)
    return 0


def cmd_tutte(args) -> int:
    if args.n < 0:
        args.parser.error("n must be nonnegative")
    table = tutte_polynomial(args.n)
    _emit(args, table.polynomial(), table.as_dict())
    return 0


def cmd_verify(args) -> int:
    if args.max_n < 1:
        args.parser.error("--max-n must be at least 1")
    maps = verify_mod.mutant_maps(args.mutant) if args.mutant else None
    started = time.perf_counter()
    results = verify_mod.run_all(args.max_n, args.seed, maps)
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        _dump(
            [
                {
                    "suite": r.name,
                    "max_n": r.bound,
                    "cases": r.cases,
                    "passed": r.passed,
                    "counterexample": None if r.passed else vars(r.counterexample),
                }
                for r in results
            ]
        )
    else:
        width = max(len(r.name) for r in results)
        print(f"{'suite':<{width}}  max_n    cases  status")
        for r in results:
            status = "pass" if r.passed else "FAIL"
            print(f"{r.name:<{width}}  {r.bound:>5}  {r.cases:>7}  {status}")
        for r in failed:
            c = r.counterexample
            print(f"counterexample [{r.name}] n={c.n} case={c.case}: {c.message}")
        print("all suites passed" if not failed else f"{len(failed)} suite(s) failed")
    for r in results:
        print(f"{r.name}: {r.seconds:.2f}s", file=sys.stderr)
    print(f"total: {time.perf_counter() - started:.2f}s", file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "json"), default="plain")

    parser = argparse.ArgumentParser(
        prog="catalan-zeta",
        description="Bijections between Property (A) words, Dyck paths and planted trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[fmt], help="list words or paths of a size")
    p.add_argument("kind", choices=("words", "paths"))
    p.add_argument("size", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", parents=[fmt], help="apply the word/path bijection")
    p.add_argument("direction", choices=("word-to-path", "path-to-word"))
    p.add_argument("input")
    p.add_argument("--trace", action="store_true", help="print every stage as JSON")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("classify", parents=[fmt], help="check Properties (A)-(D) of a word")
    p.add_argument("input")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("stats", help="statistics of a Dyck path")
    p.add_argument("path")
    p.add_argument("--format", choices=("plain", "json"), default="json")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("zeta", parents=[fmt], help="apply the zeta map")
    p.add_argument("path")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=_path_command(zeta, zeta_inverse))

    p = sub.add_parser("speyer", parents=[fmt], help="trade a return for an initial rise")
    p.add_argument("path")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=_path_command(speyer_step, speyer_step_inverse))

    p = sub.add_parser("tree", parents=[fmt], help="planted tree conversions")
    p.add_argument("action", choices=("from-word", "to-word", "crucial"))
    p.add_argument("input", help="area sequence, or a tree as parentheses or parent array")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("tutte", parents=[fmt], help="returns/rises generating polynomial")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("verify", parents=[fmt], help="run the exhaustive invariant suites")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--mutant",
        choices=sorted(verify_mod.MUTANTS),
        help="run against a deliberately broken map (harness self-test)",
    )
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.parser = parser
    try:
        return args.func(args)
    except CatalanError as exc:
        return _error(f"{type(exc).__name__}: {exc}")
    except ValueError as exc:
        return _error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
