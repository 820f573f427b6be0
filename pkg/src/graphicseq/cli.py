"""Command-line interface.

Exit codes: 0 success, 1 negative ``check`` result, 2 invalid input,
3 sampling exhausted, 4 I/O failure.
"""

import argparse
import sys

from . import harness
from .approximate import approximate
from .errors import GraphicSeqError, NonGraphic, SamplingExhausted
from .metrics import degree_pmf, discrepancy, total_variation, total_variation_l1
from .realize import format_edges, havel_hakimi
from .sampling import sample_nongraphic_even, sample_power_law
from .sequence import format_sequence, is_graphic, is_potentially_graphic, parse_sequence
from .threshold import threshold_graph, threshold_sequence

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2
EXIT_EXHAUSTED = 3
EXIT_IO = 4


def _read(path):
    if path in (None, "-"):
        return parse_sequence(sys.stdin.read())
    with open(path) as fh:
        return parse_sequence(fh.read())


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_check(args):
    a = _read(args.input)
    graphic = is_graphic(a)
    potential = is_potentially_graphic(a)
    print(f"n={a.n} s={a.s} potentially_graphic={str(potential).lower()} graphic={str(graphic).lower()}")
    return EXIT_OK if graphic else EXIT_NEGATIVE


def cmd_threshold(args):
    if args.graph:
        _write(format_edges(threshold_graph(args.n, args.sum)), args.out)
    else:
        _write(format_sequence(threshold_sequence(args.n, args.sum)), args.out)
    return EXIT_OK


def cmd_approximate(args):
    a = _read(args.input)
    # graphic input is passed through untouched
    b = a if is_graphic(a) else approximate(a)
    _write(format_sequence(b), args.out)
    return EXIT_OK


def cmd_realize(args):
    a = _read(args.input)
    _write(format_edges(havel_hakimi(a)), args.out)
    return EXIT_OK


def cmd_sample(args):
    if args.require_nongraphic:
        a = sample_nongraphic_even(args.n, args.exponent, args.seed, args.max_attempts)
    else:
        a = sample_power_law(args.n, args.exponent, args.seed)
    _write(format_sequence(a), args.out)
    return EXIT_OK


def cmd_distance(args):
    a, b = _read(args.file_a), _read(args.file_b)
    if args.metric == "discrepancy":
        print(discrepancy(a, b))
        return EXIT_OK
    tv = total_variation if args.metric == "tv" else total_variation_l1
    print(repr(float(tv(degree_pmf(a), degree_pmf(b), skip_zero=args.skip_zero_bin))))
    return EXIT_OK


def cmd_experiment(args):
    config = harness.ExperimentConfig(
        lengths=args.lengths,
        trials_per_length=args.trials,
        exponent=args.exponent,
        base_seed=args.seed,
        metric="tv-sup" if args.metric == "tv" else "tv-l1",
        max_attempts=args.max_attempts,
        skip_zero_bin=args.skip_zero_bin,
    )
    records = harness.run_records(config, workers=args.workers)
    summaries = harness.summarize(records)
    if args.raw:
        harness.write_records_csv(records, args.raw)
    if args.csv:
        harness.write_csv(summaries, args.csv)
    else:
        harness.write_csv(summaries, sys.stdout)
    if args.plot:
        harness.emit_plot(summaries, args.plot, metric=config.metric)
    return EXIT_OK


def _lengths(text):
    try:
        return [int(float(x)) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad length list {text!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(prog="graphicseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="report whether a sequence is graphic")
    p.add_argument("--in", dest="input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("threshold", help="emit T(n, s)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sum", type=int, required=True)
    p.add_argument("--graph", action="store_true", help="emit the threshold graph's edge list")
    p.add_argument("--out")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("approximate", help="repair a sequence into a graphic one")
    p.add_argument("--in", dest="input")
    p.add_argument("--out")
    p.set_defaults(func=cmd_approximate)

    p = sub.add_parser("realize", help="Havel-Hakimi edge list of a graphic sequence")
    p.add_argument("--in", dest="input")
    p.add_argument("--out")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("sample", help="draw a power-law degree sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exponent", type=float, default=2.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--require-nongraphic", action="store_true")
    p.add_argument("--max-attempts", type=int, default=1000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("distance", help="distance between two sequences")
    p.add_argument("--metric", choices=("tv", "tv-l1", "discrepancy"), default="tv")
    p.add_argument("--skip-zero-bin", action="store_true")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("experiment", help="run the convergence experiment")
    p.add_argument("--lengths", type=_lengths, default=list(harness.ExperimentConfig.lengths))
    p.add_argument("--trials", type=int, default=30)
    p.add_argument("--exponent", type=float, default=2.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--metric", choices=("tv", "tv-l1"), default="tv")
    p.add_argument("--max-attempts", type=int, default=1000)
    p.add_argument("--skip-zero-bin", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", help="summary CSV (stdout if omitted)")
    p.add_argument("--raw", help="per-trial CSV")
    p.add_argument("--plot", help="SVG plot of mean distance against length")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SamplingExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except NonGraphic as exc:
        print(f"error: not graphic: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (GraphicSeqError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
