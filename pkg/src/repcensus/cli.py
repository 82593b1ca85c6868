"""Command-line interface.

Exit codes: 0 success, 1 property violation, 2 usage or input error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import constructions
from .census import PowerClass, census, enumerate_all, independent_prefix_from_c
from .lemmas import CHECKS, random_corpus, run_checks
from .search import (
    CUBE_RICH_TABLE,
    SearchConfig,
    SearchIncomplete,
    ratio_report,
    search_max_cubes,
    truncate2,
    verify_witness,
)
from .simulation import SimTrace, SimulationError, explore_traces, normalize_c, sim_run, trace_from_sequence
from .words import WordError, check_word

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def ratio_dict(r: Fraction) -> dict:
    return {"num": r.numerator, "den": r.denominator, "display": truncate2(r)}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def emit(args, command: str, inp: dict, result: dict, status: int = EXIT_OK) -> None:
    if args.format == "json":
        print(dumps({"command": command, "input": inp, "result": result, "status": status}))
        return
    for key, value in result.items():
        if isinstance(value, (dict, list)):
            value = dumps(value)
        print(f"{key}={value}")


def read_words(args) -> list[str]:
    words = []
    if getattr(args, "word", None) is not None:
        words.append(args.word)
    if getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    words.append(line)
    for w in words:
        if not w:
            raise UsageError("empty word")
        check_word(w, getattr(args, "alphabet", None))
    return words


def parse_classes(text: str) -> list[PowerClass]:
    try:
        return [PowerClass.parse(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------


def cmd_count(args) -> int:
    words = read_words(args)
    if not words:
        raise UsageError("no input word given")
    classes = parse_classes(args.classes)
    for w in words:
        per_class = enumerate_all(w, method=args.method)
        result = {cls.value: len(per_class[cls]) for cls in classes}
        emit(args, "count", {"word": w, "classes": [c.value for c in classes]}, result)
    return EXIT_OK


def cmd_census(args) -> int:
    words = read_words(args)
    if not words:
        raise UsageError("no input word given")
    for w in words:
        rep = census(w, method=args.method)
        result = rep.to_dict()
        result["independent_prefix"] = independent_prefix_from_c(rep.c_sequence)
        emit(args, "census", {"word": w}, result)
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        w = constructions.construct(args.family, args.n, symbol=args.symbol)
    except WordError as exc:
        raise UsageError(str(exc)) from None
    result = {"word": w, "length": len(w)}
    if args.family == "qn":
        result["expected_len"] = constructions.expected_q_length(args.n)
        result["expected_cubes"] = constructions.expected_qn_cubes(args.n)
    emit(args, "construct", {"family": args.family, "n": args.n}, result)
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.explore:
        rep = explore_traces(args.max_p, args.max_steps, args.max_alpha)
        result = rep.to_dict()
        result["max_ratio"] = ratio_dict(rep.max_ratio)
        inp = {"max_p0": args.max_p, "max_steps": args.max_steps, "max_alpha": args.max_alpha}
        status = EXIT_VIOLATION if rep.violations else EXIT_OK
        emit(args, "simulate", inp, result, status)
        return status
    if args.p is None:
        raise UsageError("simulate needs --p (with optional --steps) or --explore")
    try:
        trace = SimTrace.parse(args.p, args.steps or "")
        run = sim_run(trace)
    except SimulationError as exc:
        raise UsageError(str(exc)) from None
    verdicts = [s for s in run.states if 5 * s.occ > 4 * s.len + 2 * s.p]
    result = {
        "state": {"p": run.state.p, "occ": run.state.occ, "len": run.state.len},
        "total_len": run.total_len,
        "positives": run.positives,
        "ratio": ratio_dict(run.ratio),
        "invariant_ok": not verdicts,
    }
    if args.emit:
        result["sequence"] = run.sequence
    emit(args, "simulate", {"p": args.p, "steps": args.steps or ""}, result)
    return EXIT_OK if not verdicts else EXIT_VIOLATION


def cmd_search(args) -> int:
    try:
        cfg = SearchConfig(
            length=args.n,
            alphabet_size=args.alphabet_size,
            mode=args.mode,
            prune_slack=args.slack,
            threads=args.threads,
            incumbent=args.incumbent,
            witness_cap=args.witness_cap,
            max_nodes=args.max_nodes,
            split_depth=args.split_depth,
            checkpoint=args.checkpoint,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    inp = {"n": args.n, "mode": cfg.mode.value, "slack": cfg.prune_slack, "alphabet_size": cfg.alphabet_size}
    try:
        res = search_max_cubes(cfg)
    except SearchIncomplete as exc:
        emit(args, "search", inp, exc.result.to_dict(), EXIT_CAP)
        return EXIT_CAP
    emit(args, "search", inp, res.to_dict())
    return EXIT_OK


def cmd_check_lemmas(args) -> int:
    words = read_words(args)
    if args.random:
        words.extend(random_corpus(args.random, args.max_len, args.seed))
    checks = args.checks.split(",") if args.checks else None
    if checks:
        unknown = set(checks) - set(CHECKS)
        if unknown:
            raise UsageError(f"unknown checks: {', '.join(sorted(unknown))}")
    rep = run_checks(words, checks, oracle=args.oracle)
    result = rep.to_dict()
    result["violation_count"] = len(rep.violations)
    # trace-shape diagnostic; never changes the exit status
    mismatches = []
    for w in words:
        c = census(w).c_sequence
        v = independent_prefix_from_c(c)
        if v > 1:
            trace, why = trace_from_sequence(normalize_c(c[:v]))
            if trace is None:
                mismatches.append({"word": w, "reason": why})
    result["trace_shape_mismatches"] = mismatches
    status = EXIT_OK if rep.ok else EXIT_VIOLATION
    inp = {"random": args.random, "max_len": args.max_len, "seed": args.seed, "words": len(words)}
    emit(args, "check-lemmas", inp, result, status)
    if rep.violations and args.format != "json":
        for v in rep.violations:
            print(dumps(v), file=sys.stderr)
    return status


def cmd_table(args) -> int:
    rows = []
    ok = True
    for (n, w, claimed), (length, cubes, r) in zip(CUBE_RICH_TABLE, ratio_report(w for _, w, _ in CUBE_RICH_TABLE)):
        good = verify_witness(w, claimed)
        ok = ok and good
        rows.append({"n": n, "word": w, "claimed": claimed, "cubes": cubes, "ratio": ratio_dict(r), "verified": good})
    if args.format == "json":
        emit(args, "table", {}, {"rows": rows}, EXIT_OK if ok else EXIT_VIOLATION)
    else:
        for row in rows:
            mark = "ok" if row["verified"] else "MISMATCH"
            print(f"{row['n']:>4} {row['cubes']:>3} {row['ratio']['display']}  {mark}  {row['word']}")
    return EXIT_OK if ok else EXIT_VIOLATION


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="repcensus", description="Distinct cubes, squares and powers in words.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, words=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if words:
            p.add_argument("--word")
            p.add_argument("--file", help="one word per line; lines starting with '#' are ignored")
            p.add_argument("--alphabet", help="allowed symbols, e.g. 01")
        return p

    p = common(sub.add_parser("count", help="count distinct powers"))
    p.add_argument("--classes", default="cube,square,np_square,hr")
    p.add_argument("--method", choices=("fast", "naive"), default="fast")
    p.set_defaults(func=cmd_count)

    p = common(sub.add_parser("census", help="c-sequence, cube occurrences, independent prefix"))
    p.add_argument("--method", choices=("fast", "naive"), default="fast")
    p.set_defaults(func=cmd_census)

    p = common(sub.add_parser("construct", help="generate qn, uniform or fs_prime words"), words=False)
    p.add_argument("family", choices=constructions.FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--symbol", default="a")
    p.set_defaults(func=cmd_construct)

    p = common(sub.add_parser("simulate", help="run or explore the abstract simulation"), words=False)
    p.add_argument("--p", type=int)
    p.add_argument("--steps", help="l:alpha,l:alpha,...")
    p.add_argument("--emit", action="store_true", help="include the emitted sequence")
    p.add_argument("--explore", action="store_true")
    p.add_argument("--max-p", type=int, default=6)
    p.add_argument("--max-steps", type=int, default=4)
    p.add_argument("--max-alpha", type=int, default=6)
    p.set_defaults(func=cmd_simulate)

    p = common(sub.add_parser("search", help="words with the most distinct cubes"), words=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "pruned"), default="exhaustive")
    p.add_argument("--slack", type=int, default=2, help="per-letter bound used by pruning (1 or 2)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--alphabet-size", type=int, default=2)
    p.add_argument("--incumbent", help="seed word of length n")
    p.add_argument("--witness-cap", type=int, default=64)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--split-depth", type=int)
    p.add_argument("--checkpoint", help="resumable record file (prefix,best_count per line)")
    p.set_defaults(func=cmd_search)

    p = common(sub.add_parser("check-lemmas", help="falsification harness"))
    p.add_argument("--random", type=int, default=0)
    p.add_argument("--max-len", type=int, default=60)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--checks", help=f"comma list from: {', '.join(CHECKS)}")
    p.add_argument("--oracle", action="store_true", help="also compare fast and naive enumeration")
    p.set_defaults(func=cmd_check_lemmas)

    p = common(sub.add_parser("table", help="verify the reference table of cube-rich words"), words=False)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (UsageError, WordError) as exc:
        print(f"repcensus {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"repcensus {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
