"""Benchmark harness: the same random automata across a matrix of algorithms.

Every (n, trial) pair gets one automaton, generated from a seed derived
deterministically from the experiment seed, and every configured algorithm
runs on that same automaton. Cutoff-search timings include the preceding
Eppstein run. Non-synchronizing samples are recorded with length -1 and
excluded from mean-length summaries.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, TextIO

from .automaton import random_automaton
from .baselines import eppstein_greedy, exact_shortest
from .results import NotSynchronizing
from .search import UNBOUNDED, log_cap, synchronize

CSV_COLUMNS = ("n", "k", "trial", "seed", "algorithm", "length", "time_s", "frontier_peak")

KNOWN_ALGORITHMS = ("eppstein", "exact", "cutoff-ibfs")


def parse_algorithm(tag: str) -> tuple[str, Optional[str]]:
    """Split an algorithm tag into (name, maxsize spec). Valid tags:
    "eppstein", "exact", "cutoff-ibfs:log", "cutoff-ibfs:n",
    "cutoff-ibfs:unbounded", "cutoff-ibfs:<int>"."""
    name, _, spec = tag.partition(":")
    if name not in KNOWN_ALGORITHMS:
        raise ValueError(f"unknown algorithm {tag!r}")
    if name != "cutoff-ibfs":
        if spec:
            raise ValueError(f"{name} takes no maxsize spec: {tag!r}")
        return name, None
    if not spec:
        raise ValueError(f"cutoff-ibfs needs a maxsize spec, e.g. {tag}:n")
    if spec not in ("log", "n", "unbounded") and not spec.isdigit():
        raise ValueError(f"bad maxsize spec {spec!r} in {tag!r}")
    if spec.isdigit() and int(spec) < 1:
        raise ValueError(f"explicit maxsize must be >= 1: {tag!r}")
    return name, spec


def resolve_maxsize(spec: str, n: int) -> Optional[int]:
    if spec == "log":
        return log_cap(n)
    if spec == "n":
        return n
    if spec == "unbounded":
        return UNBOUNDED
    return int(spec)


@dataclass
class ExperimentConfig:
    ns: tuple[int, ...]
    k: int = 2
    trials: int = 200
    seed: int = 0
    algorithms: tuple[str, ...] = ("eppstein", "cutoff-ibfs:n")
    start_mode: str = "all"
    permute_by_indegree: bool = False
    jobs: int = 1

    def __post_init__(self):
        self.ns = tuple(self.ns)
        self.algorithms = tuple(self.algorithms)
        if not self.ns or any(n < 1 for n in self.ns):
            raise ValueError("need at least one n >= 1")
        if self.k < 1:
            raise ValueError("need k >= 1")
        if self.trials < 1:
            raise ValueError("need trials >= 1")
        if self.jobs < 1:
            raise ValueError("need jobs >= 1")
        for tag in self.algorithms:
            parse_algorithm(tag)


def trial_seed(base: int, n: int, trial: int) -> int:
    """Deterministic per-trial automaton seed."""
    return (base * 1_000_003 + n) * 1_000_003 + trial


@dataclass
class TrialRow:
    n: int
    k: int
    trial: int
    seed: int
    algorithm: str
    length: int  # -1 = not synchronizing
    time_s: float
    frontier_peak: int

    def as_csv(self) -> list[str]:
        return [
            str(self.n),
            str(self.k),
            str(self.trial),
            str(self.seed),
            self.algorithm,
            str(self.length),
            f"{self.time_s:.6f}",
            str(self.frontier_peak),
        ]


def run_trial(cfg: ExperimentConfig, n: int, trial: int) -> list[TrialRow]:
    seed = trial_seed(cfg.seed, n, trial)
    a = random_automaton(n, cfg.k, seed)
    rows = []
    for tag in cfg.algorithms:
        name, spec = parse_algorithm(tag)
        t0 = time.perf_counter()
        length = -1
        peak = 0
        try:
            if name == "eppstein":
                res = eppstein_greedy(a)
                length = res.length
            elif name == "exact":
                length, _ = exact_shortest(a)
            else:
                res = synchronize(
                    a,
                    resolve_maxsize(spec, n),  # type: ignore[arg-type]
                    start_mode=cfg.start_mode,
                    permute_by_indegree=cfg.permute_by_indegree,
                )
                length = res.length
                peak = res.frontier_peak()
        except NotSynchronizing:
            pass
        rows.append(
            TrialRow(n, cfg.k, trial, seed, tag, length, time.perf_counter() - t0, peak)
        )
    return rows


def _trial_worker(args: tuple[ExperimentConfig, int, int]) -> list[TrialRow]:
    cfg, n, trial = args
    return run_trial(cfg, n, trial)


def run_experiment(cfg: ExperimentConfig) -> list[TrialRow]:
    """All trial rows, ordered by (position of n in cfg.ns, trial, algorithm
    position) regardless of execution order."""
    tasks = [(cfg, n, trial) for n in cfg.ns for trial in range(cfg.trials)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_trial_worker, tasks, chunksize=4))
    else:
        chunks = [run_trial(cfg, n, trial) for cfg, n, trial in tasks]
    return [row for chunk in chunks for row in chunk]


def write_csv(rows: list[TrialRow], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv())


def rows_to_csv(rows: list[TrialRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


@dataclass
class SummaryLine:
    n: int
    algorithm: str
    trials: int
    synchronizing: int
    mean_length: Optional[float]
    mean_time_s: float


def summarize(rows: list[TrialRow]) -> list[SummaryLine]:
    """Per-(n, algorithm) means, in first-appearance order. Mean length is
    over synchronizing samples only; mean time is over all samples."""
    order: list[tuple[int, str]] = []
    groups: dict[tuple[int, str], list[TrialRow]] = {}
    for row in rows:
        key = (row.n, row.algorithm)
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(row)
    out = []
    for n, algorithm in order:
        grp = groups[(n, algorithm)]
        sync = [r for r in grp if r.length >= 0]
        out.append(
            SummaryLine(
                n=n,
                algorithm=algorithm,
                trials=len(grp),
                synchronizing=len(sync),
                mean_length=sum(r.length for r in sync) / len(sync) if sync else None,
                mean_time_s=sum(r.time_s for r in grp) / len(grp),
            )
        )
    return out


def format_summary(rows: list[TrialRow]) -> str:
    lines = ["# summary (non-synchronizing samples excluded from mean_length)"]
    for s in summarize(rows):
        mean_len = "n/a" if s.mean_length is None else f"{s.mean_length:.3f}"
        lines.append(
            f"n={s.n} algorithm={s.algorithm} trials={s.trials} "
            f"synchronizing={s.synchronizing} mean_length={mean_len} "
            f"mean_time_s={s.mean_time_s:.6f}"
        )
    return "\n".join(lines) + "\n"
