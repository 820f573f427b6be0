"""
Distances between degree sequences.

``discrepancy`` compares sequences position by position. The total
variation functions compare their empirical degree distributions, using
exact rationals throughout.
"""

from fractions import Fraction

import numpy as np

from .errors import EmptySequence, LengthMismatch, PopulationMismatch

__all__ = [
    "DegreePmf",
    "degree_pmf",
    "discrepancy",
    "total_variation",
    "total_variation_l1",
]


class DegreePmf:
    """Empirical distribution of degree values in a sequence.

    ``counts[d]`` is the number of entries equal to ``d``. The support
    always covers ``0 .. n-1`` and extends further if the sequence holds
    larger values.
    """

    def __init__(self, counts, n):
        counts = np.asarray(counts, dtype=np.int64)
        if n <= 0:
            raise EmptySequence("distribution of an empty sequence is undefined")
        if int(counts.sum()) != n:
            raise ValueError(f"counts sum to {int(counts.sum())}, expected {n}")
        counts.flags.writeable = False
        self.counts = counts
        self.n = n

    def mass(self, d):
        if 0 <= d < self.counts.size:
            return Fraction(int(self.counts[d]), self.n)
        return Fraction(0)

    def as_dict(self):
        """Non-zero masses keyed by degree value."""
        return {int(d): Fraction(int(c), self.n) for d, c in enumerate(self.counts) if c}

    def __repr__(self):
        body = ", ".join(f"{d}: {m}" for d, m in self.as_dict().items())
        return f"DegreePmf({{{body}}})"


def degree_pmf(a):
    if a.n == 0:
        raise EmptySequence("distribution of an empty sequence is undefined")
    return DegreePmf(np.bincount(a.values, minlength=a.n), a.n)


def discrepancy(a, b):
    """Sum of absolute positional differences."""
    if a.n != b.n:
        raise LengthMismatch(f"lengths differ: {a.n} vs {b.n}")
    return int(np.abs(a.values - b.values).sum())


def _count_diffs(P, Q, skip_zero):
    if P.n != Q.n:
        raise PopulationMismatch(f"population sizes differ: {P.n} vs {Q.n}")
    size = max(P.counts.size, Q.counts.size)
    diff = np.zeros(size, dtype=np.int64)
    diff[: P.counts.size] += P.counts
    diff[: Q.counts.size] -= Q.counts
    diff = np.abs(diff)
    if skip_zero:
        diff = diff[1:]
    return diff


def total_variation(P, Q, skip_zero=False):
    """Largest per-value probability difference, as a Fraction.

    With ``skip_zero`` the degree-0 bin is ignored.
    """
    diff = _count_diffs(P, Q, skip_zero)
    return Fraction(int(diff.max()) if diff.size else 0, P.n)


def total_variation_l1(P, Q, skip_zero=False):
    """Half the L1 distance between the distributions, as a Fraction."""
    diff = _count_diffs(P, Q, skip_zero)
    return Fraction(int(diff.sum()), 2 * P.n)
