"""
Convergence experiment: power-law sequences versus their approximations.

For each length, draw non-graphic even-sum power-law sequences, repair
them with :func:`approximate`, and record how far the degree distribution
moved. Each trial's seed depends only on ``(base_seed, n, trial_index)``,
so trials can run in any order or in parallel and still give the same
records.
"""

import csv
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .approximate import approximate
from .errors import SamplingExhausted
from .metrics import degree_pmf, discrepancy, total_variation, total_variation_l1
from .sampling import derive_seed, draw_nongraphic_even

__all__ = [
    "ExperimentConfig",
    "TrialRecord",
    "LengthSummary",
    "RECORD_COLUMNS",
    "SUMMARY_COLUMNS",
    "run_trial",
    "run_experiment",
    "run_records",
    "summarize",
    "write_csv",
    "write_records_csv",
    "read_records_csv",
    "emit_plot",
]

METRICS = ("tv-sup", "tv-l1")
RECORD_COLUMNS = ("n", "trial", "seed", "s", "attempts", "tv", "discrepancy", "bound")
SUMMARY_COLUMNS = ("n", "mean_tv", "std_tv", "mean_discrepancy", "trials")


@dataclass(frozen=True)
class ExperimentConfig:
    lengths: tuple = (100, 1_000, 10_000, 100_000)
    trials_per_length: int = 30
    exponent: float = 2.0
    base_seed: int = 0
    metric: str = "tv-sup"
    max_attempts: int = 1000
    skip_zero_bin: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(int(n) for n in self.lengths))
        if not self.lengths:
            raise ValueError("lengths must be nonempty")
        if min(self.lengths) < 3:
            raise ValueError("every length must be >= 3")
        if self.trials_per_length < 1:
            raise ValueError("trials_per_length must be >= 1")
        if self.metric not in METRICS:
            raise ValueError(f"metric must be one of {METRICS}, got {self.metric!r}")


@dataclass(frozen=True)
class TrialRecord:
    n: int
    trial_index: int
    seed_used: int
    s: int
    attempts: int
    tv: Fraction
    discrepancy: int
    bound: Fraction

    def row(self):
        return (
            self.n,
            self.trial_index,
            self.seed_used,
            self.s,
            self.attempts,
            repr(float(self.tv)),
            self.discrepancy,
            repr(float(self.bound)),
        )


@dataclass(frozen=True)
class LengthSummary:
    n: int
    mean_tv: float
    std_tv: float
    mean_discrepancy: float
    mean_attempts: float
    trials: int
    max_bound: float = field(default=math.nan)

    def row(self):
        return (self.n, repr(self.mean_tv), repr(self.std_tv), repr(self.mean_discrepancy), self.trials)


def trial_seed(base_seed, n, trial_index):
    return derive_seed(base_seed, n, trial_index)


def run_trial(config, n, trial_index):
    seed = trial_seed(config.base_seed, n, trial_index)
    try:
        alpha, attempts = draw_nongraphic_even(n, config.exponent, seed, config.max_attempts)
    except SamplingExhausted as exc:
        raise SamplingExhausted(f"n={n}, trial={trial_index}: {exc}", exc.attempts) from exc
    beta = approximate(alpha)
    distance = total_variation if config.metric == "tv-sup" else total_variation_l1
    tv = distance(degree_pmf(alpha), degree_pmf(beta), skip_zero=config.skip_zero_bin)
    return TrialRecord(
        n=n,
        trial_index=trial_index,
        seed_used=seed,
        s=alpha.s,
        attempts=attempts,
        tv=tv,
        discrepancy=discrepancy(alpha, beta),
        bound=Fraction(math.isqrt(alpha.s) + 2, n),
    )


def _run_task(task):
    config, n, trial_index = task
    return run_trial(config, n, trial_index)


def run_records(config, workers=1):
    """All trial records, ordered by length then trial index."""
    tasks = [(config, n, t) for n in config.lengths for t in range(config.trials_per_length)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_task, tasks))
    return [_run_task(task) for task in tasks]


def summarize(records):
    """Per-length mean and sample standard deviation, ordered by length."""
    by_length = {}
    for r in records:
        by_length.setdefault(r.n, []).append(r)
    out = []
    for n in sorted(by_length):
        group = by_length[n]
        tvs = [float(r.tv) for r in group]
        out.append(
            LengthSummary(
                n=n,
                mean_tv=statistics.fmean(tvs),
                std_tv=statistics.stdev(tvs) if len(tvs) > 1 else 0.0,
                mean_discrepancy=statistics.fmean(float(r.discrepancy) for r in group),
                mean_attempts=statistics.fmean(float(r.attempts) for r in group),
                trials=len(group),
                max_bound=max(float(r.bound) for r in group),
            )
        )
    return out


def run_experiment(config, workers=1):
    return summarize(run_records(config, workers=workers))


def _write_rows(header, rows, destination):
    if hasattr(destination, "write"):
        writer = csv.writer(destination, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return
    with open(destination, "w", newline="") as fh:
        _write_rows(header, rows, fh)


def write_csv(results, destination):
    """Write summaries, or raw records if given TrialRecords, as CSV."""
    results = list(results)
    if results and isinstance(results[0], TrialRecord):
        write_records_csv(results, destination)
    else:
        _write_rows(SUMMARY_COLUMNS, [r.row() for r in results], destination)


def write_records_csv(records, destination):
    _write_rows(RECORD_COLUMNS, [r.row() for r in records], destination)


def read_records_csv(source):
    """Read a raw-record CSV back; tv and bound come back as exact Fractions of the written floats."""
    with open(source, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [
        TrialRecord(
            n=int(row["n"]),
            trial_index=int(row["trial"]),
            seed_used=int(row["seed"]),
            s=int(row["s"]),
            attempts=int(row["attempts"]),
            tv=Fraction(float(row["tv"])),
            discrepancy=int(row["discrepancy"]),
            bound=Fraction(float(row["bound"])),
        )
        for row in rows
    ]


def emit_plot(results, destination, metric="tv-sup"):
    """Mean distance against length on a log x axis, with one-sigma error bars, as SVG."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    results = list(results)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.errorbar(
        [r.n for r in results],
        [r.mean_tv for r in results],
        yerr=[r.std_tv for r in results],
        marker="o",
        capsize=3,
        linestyle="-",
    )
    ax.set_xscale("log")
    ax.set_xlabel("sequence length n")
    ax.set_ylabel("mean total variation" + (" (half L1)" if metric == "tv-l1" else ""))
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    try:
        fig.savefig(destination, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
