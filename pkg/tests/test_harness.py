import io
import xml.etree.ElementTree as ET
from fractions import Fraction
from math import isqrt

import pytest

from graphicseq import SamplingExhausted
from graphicseq.harness import (
    RECORD_COLUMNS,
    SUMMARY_COLUMNS,
    ExperimentConfig,
    emit_plot,
    read_records_csv,
    run_experiment,
    run_records,
    run_trial,
    summarize,
    write_csv,
    write_records_csv,
)


@pytest.fixture(scope="module")
def small_config():
    return ExperimentConfig(lengths=(50, 200), trials_per_length=4, base_seed=9)


@pytest.fixture(scope="module")
def small_records(small_config):
    return run_records(small_config)


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(lengths=())
    with pytest.raises(ValueError):
        ExperimentConfig(lengths=(2,))
    with pytest.raises(ValueError):
        ExperimentConfig(trials_per_length=0)
    with pytest.raises(ValueError):
        ExperimentConfig(metric="kl")


def test_defaults():
    c = ExperimentConfig()
    assert c.exponent == 2.0 and c.trials_per_length == 30
    assert c.lengths == (100, 1_000, 10_000, 100_000)


def test_trial_within_bound(small_records):
    for r in small_records:
        assert 0 <= r.tv <= r.bound
        assert r.bound == Fraction(isqrt(r.s) + 2, r.n)
        assert r.s % 2 == 0 and r.attempts >= 1


def test_trial_deterministic():
    config = ExperimentConfig(lengths=(100,), base_seed=1)
    assert run_trial(config, 100, 0) == run_trial(config, 100, 0)


def test_trial_order_independent(small_config, small_records):
    reversed_run = [run_trial(small_config, r.n, r.trial_index) for r in reversed(small_records)]
    assert list(reversed(reversed_run)) == small_records


def test_parallel_matches_serial(small_config, small_records):
    assert run_records(small_config, workers=2) == small_records


def test_trial_typical_scale():
    config = ExperimentConfig(lengths=(10_000,), base_seed=3)
    r = run_trial(config, 10_000, 0)
    # s for an exponent-2 draw at this n is a few multiples of n
    assert 2 * 10_000 < r.s < 20 * 10_000
    assert r.tv <= r.bound < Fraction(3, 100)


def test_sampling_exhausted_has_context():
    config = ExperimentConfig(lengths=(3,), max_attempts=1, exponent=50.0)
    with pytest.raises(SamplingExhausted, match=r"n=3, trial=0"):
        run_trial(config, 3, 0)


def test_single_trial_std_zero():
    summary = run_experiment(ExperimentConfig(lengths=(100,), trials_per_length=1))
    assert summary[0].std_tv == 0.0
    assert summary[0].trials == 1


def test_summary_ordered_and_bounded(small_records):
    summary = summarize(small_records)
    assert [s.n for s in summary] == [50, 200]
    for s in summary:
        assert s.mean_tv <= s.max_bound


def test_summary_csv_shape(tmp_path):
    summary = run_experiment(ExperimentConfig(lengths=(60,), trials_per_length=2))
    path = tmp_path / "summary.csv"
    write_csv(summary, path)
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(SUMMARY_COLUMNS)
    assert len(lines) == 2


def test_record_csv_round_trip(tmp_path, small_records):
    path = tmp_path / "raw.csv"
    write_records_csv(small_records, path)
    assert path.read_text().splitlines()[0] == ",".join(RECORD_COLUMNS)
    again = read_records_csv(path)
    assert summarize(again) == summarize(small_records)
    buf1, buf2 = io.StringIO(), io.StringIO()
    write_csv(summarize(again), buf1)
    write_csv(summarize(small_records), buf2)
    assert buf1.getvalue() == buf2.getvalue()


def test_csv_byte_identical(tmp_path, small_config):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    write_records_csv(run_records(small_config), a)
    write_records_csv(run_records(small_config), b)
    assert a.read_bytes() == b.read_bytes()


def test_unwritable_destination(tmp_path, small_records):
    with pytest.raises(OSError):
        write_csv(summarize(small_records), tmp_path / "missing" / "x.csv")


def test_plot_is_svg_with_one_errorbar_series(tmp_path, small_records):
    path = tmp_path / "fig.svg"
    emit_plot(summarize(small_records), path)
    root = ET.parse(path).getroot()
    assert root.tag.endswith("svg")
    ids = [el.get("id", "") for el in root.iter()]
    # matplotlib groups the connecting line and the error bar collection separately
    assert sum(1 for i in ids if i.startswith("LineCollection")) == 1
    assert any(i.startswith("line2d") for i in ids)


def test_l1_metric_also_bounded():
    config = ExperimentConfig(lengths=(300,), trials_per_length=3, metric="tv-l1")
    for r in run_records(config):
        assert r.tv <= r.bound
