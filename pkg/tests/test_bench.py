import pytest

from synchro.bench import (
    CSV_COLUMNS,
    ExperimentConfig,
    parse_algorithm,
    resolve_maxsize,
    rows_to_csv,
    run_experiment,
    summarize,
    trial_seed,
)
from synchro.search import UNBOUNDED


class TestAlgorithmTags:
    def test_valid_tags(self):
        assert parse_algorithm("eppstein") == ("eppstein", None)
        assert parse_algorithm("exact") == ("exact", None)
        assert parse_algorithm("cutoff-ibfs:log") == ("cutoff-ibfs", "log")
        assert parse_algorithm("cutoff-ibfs:17") == ("cutoff-ibfs", "17")

    @pytest.mark.parametrize(
        "tag",
        ["cycle", "cutoff-ibfs", "cutoff-ibfs:zero", "cutoff-ibfs:0", "eppstein:3"],
    )
    def test_invalid_tags(self, tag):
        with pytest.raises(ValueError):
            parse_algorithm(tag)

    def test_resolve_maxsize(self):
        assert resolve_maxsize("log", 100) == 7
        assert resolve_maxsize("n", 100) == 100
        assert resolve_maxsize("unbounded", 100) is UNBOUNDED
        assert resolve_maxsize("12", 100) == 12


class TestExperiment:
    def test_row_accounting_and_shared_seeds(self):
        cfg = ExperimentConfig(
            ns=(4,), trials=2, seed=3, algorithms=("eppstein", "cutoff-ibfs:n")
        )
        rows = run_experiment(cfg)
        assert len(rows) == 4
        for trial in (0, 1):
            seeds = {r.seed for r in rows if r.trial == trial}
            assert len(seeds) == 1
            assert seeds == {trial_seed(3, 4, trial)}

    def test_csv_deterministic_except_time(self):
        cfg = ExperimentConfig(
            ns=(6,), trials=5, seed=1, algorithms=("eppstein", "cutoff-ibfs:log")
        )
        def strip_time(csv_text):
            lines = csv_text.splitlines()
            assert lines[0] == ",".join(CSV_COLUMNS)
            return [
                ",".join(f for i, f in enumerate(l.split(",")) if i != 6)
                for l in lines
            ]
        a = strip_time(rows_to_csv(run_experiment(cfg)))
        b = strip_time(rows_to_csv(run_experiment(cfg)))
        assert a == b

    def test_summary_means_match_rows(self):
        cfg = ExperimentConfig(
            ns=(8,), trials=10, seed=7, algorithms=("eppstein", "exact")
        )
        rows = run_experiment(cfg)
        for line in summarize(rows):
            grp = [r for r in rows if r.n == line.n and r.algorithm == line.algorithm]
            sync = [r for r in grp if r.length >= 0]
            assert line.trials == len(grp)
            assert line.synchronizing == len(sync)
            if sync:
                assert line.mean_length == pytest.approx(
                    sum(r.length for r in sync) / len(sync)
                )
            assert line.mean_time_s == pytest.approx(
                sum(r.time_s for r in grp) / len(grp)
            )

    def test_exact_and_cutoff_agree_per_row(self):
        cfg = ExperimentConfig(
            ns=(6,), trials=20, seed=5,
            algorithms=("exact", "cutoff-ibfs:unbounded"),
        )
        rows = run_experiment(cfg)
        by_trial = {}
        for r in rows:
            by_trial.setdefault(r.trial, {})[r.algorithm] = r.length
        for lengths in by_trial.values():
            assert lengths["exact"] == lengths["cutoff-ibfs:unbounded"]

    def test_cutoff_time_includes_eppstein_on_average(self):
        cfg = ExperimentConfig(
            ns=(40,), trials=20, seed=2, algorithms=("eppstein", "cutoff-ibfs:n")
        )
        lines = {s.algorithm: s for s in summarize(run_experiment(cfg))}
        assert (
            lines["cutoff-ibfs:n"].mean_time_s >= lines["eppstein"].mean_time_s
        )

    def test_parallel_jobs_match_serial(self):
        serial = ExperimentConfig(
            ns=(5, 6), trials=4, seed=9, algorithms=("eppstein",), jobs=1
        )
        parallel = ExperimentConfig(
            ns=(5, 6), trials=4, seed=9, algorithms=("eppstein",), jobs=2
        )
        key = lambda rows: [(r.n, r.trial, r.algorithm, r.length, r.seed) for r in rows]
        assert key(run_experiment(serial)) == key(run_experiment(parallel))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            ExperimentConfig(ns=(), trials=1)
        with pytest.raises(ValueError):
            ExperimentConfig(ns=(4,), trials=0)
        with pytest.raises(ValueError):
            ExperimentConfig(ns=(4,), algorithms=("bogus",))
