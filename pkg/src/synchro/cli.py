"""Command-line interface.

Subcommands:
  run    one automaton (from a file, the Cerny family, or a random seed),
         one algorithm, printed report
  bench  the benchmark matrix, CSV rows plus a summary block

Exit codes for `run`: 0 found, 3 no word within maxlen, 4 not synchronizing,
1 input/parse errors (argparse usage errors exit 2).
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .automaton import (
    Automaton,
    AutomatonFormatError,
    START_MODES,
    cerny,
    parse_automaton,
    random_automaton,
)
from .baselines import eppstein_greedy, exact_shortest
from .bench import ExperimentConfig, format_summary, run_experiment, write_csv
from .results import InstanceTooLarge, NotSynchronizing, SearchResult
from .search import SearchParams, UNBOUNDED, cutoff_ibfs, synchronize

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_FOUND = 3
EXIT_NOT_SYNCHRONIZING = 4

JOBS_ENV = "SYNCHRO_JOBS"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="synchro",
        description="Find short reset words of deterministic finite automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one algorithm on one automaton")
    src = run.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", type=Path, help="automaton in the text format")
    src.add_argument("--cerny", type=int, metavar="N", help="Cerny automaton C_N")
    src.add_argument(
        "--random", type=int, nargs=2, metavar=("N", "K"),
        help="uniformly random automaton (see --seed)",
    )
    run.add_argument("--seed", type=int, default=0, help="seed for --random")
    run.add_argument(
        "--algo", default="cutoff-ibfs",
        choices=("eppstein", "cutoff-ibfs", "exact"),
    )
    run.add_argument(
        "--maxsize", default="n",
        help="frontier cap for cutoff-ibfs: log, n, unbounded, or an integer",
    )
    run.add_argument(
        "--maxlen", type=int, default=None,
        help="run cutoff-ibfs standalone up to this length instead of using "
        "the Eppstein bound",
    )
    run.add_argument("--word", action="store_true", help="print the found word")
    run.add_argument("--start-mode", default="all", choices=START_MODES)
    run.add_argument("--permute-indegree", action="store_true")

    bench = sub.add_parser("bench", help="benchmark a matrix of algorithms")
    bench.add_argument(
        "--n", type=int, nargs="+", default=[50, 100, 200], help="state counts"
    )
    bench.add_argument("--k", type=int, default=2)
    bench.add_argument("--trials", type=int, default=200)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument(
        "--algos", nargs="+", default=["eppstein", "cutoff-ibfs:log", "cutoff-ibfs:n"],
        help="algorithm tags: eppstein, exact, cutoff-ibfs:{log|n|unbounded|<int>}",
    )
    bench.add_argument("--out", type=Path, default=None, help="CSV output path")
    bench.add_argument("--start-mode", default="all", choices=START_MODES)
    bench.add_argument("--permute-indegree", action="store_true")
    return parser


def _load_automaton(args) -> Automaton:
    if args.file is not None:
        return parse_automaton(args.file.read_text())
    if args.cerny is not None:
        return cerny(args.cerny)
    n, k = args.random
    return random_automaton(n, k, args.seed)


def _resolve_maxsize(spec: str, n: int) -> Optional[int]:
    from .bench import resolve_maxsize

    if spec not in ("log", "n", "unbounded") and not spec.isdigit():
        raise ValueError(f"bad --maxsize {spec!r}")
    return resolve_maxsize(spec, n)


def _print_report(res: SearchResult, show_word: bool) -> None:
    print(f"algorithm: {res.algorithm}")
    print(f"length: {res.length}")
    if show_word:
        print(f"word: {' '.join(map(str, res.word))}")
    if res.frontier_sizes:
        print(f"frontier sizes: {res.frontier_sizes}")
        print(f"frontier peak: {res.frontier_peak()}")
    print(f"time_s: {res.elapsed:.6f}")


def _cmd_run(args) -> int:
    try:
        a = _load_automaton(args)
    except (OSError, AutomatonFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    try:
        maxsize = _resolve_maxsize(args.maxsize, a.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    print(f"n: {a.n}  k: {a.k}")
    try:
        if args.algo == "eppstein":
            res = eppstein_greedy(a)
        elif args.algo == "exact":
            t0 = time.perf_counter()
            length, word = exact_shortest(a)
            res = SearchResult(
                length, word, "exact", elapsed=time.perf_counter() - t0
            )
        elif args.maxlen is not None:
            res = cutoff_ibfs(
                a,
                SearchParams(
                    maxlen=args.maxlen,
                    maxsize=maxsize,
                    start_mode=args.start_mode,
                    permute_by_indegree=args.permute_indegree,
                ),
            )
            if res is None:
                print(f"no reset word of length <= {args.maxlen} found")
                return EXIT_NOT_FOUND
        else:
            res = synchronize(
                a,
                maxsize,
                start_mode=args.start_mode,
                permute_by_indegree=args.permute_indegree,
            )
    except NotSynchronizing:
        print("not synchronizing")
        return EXIT_NOT_SYNCHRONIZING
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    _print_report(res, args.word)
    return EXIT_OK


def _cmd_bench(args) -> int:
    jobs = int(os.environ.get(JOBS_ENV, "1"))
    try:
        cfg = ExperimentConfig(
            ns=tuple(args.n),
            k=args.k,
            trials=args.trials,
            seed=args.seed,
            algorithms=tuple(args.algos),
            start_mode=args.start_mode,
            permute_by_indegree=args.permute_indegree,
            jobs=jobs,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    rows = run_experiment(cfg)
    if args.out is not None:
        try:
            with open(args.out, "w") as fh:
                write_csv(rows, fh)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
    else:
        write_csv(rows, sys.stdout)
    print(f"# seed={cfg.seed} jobs={cfg.jobs}")
    print(format_summary(rows), end="")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    return _cmd_bench(args)


if __name__ == "__main__":
    sys.exit(main())
