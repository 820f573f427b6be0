"""Majorization order and the prefix-minimum meet.

All operations require operands of equal length; pad with
``DegreeSequence.padded`` first.
"""

import numpy as np

from .errors import LengthMismatch
from .sequence import DegreeSequence

__all__ = ["majorizes", "strictly_majorizes", "meet"]


def _check_lengths(a, b):
    if a.n != b.n:
        raise LengthMismatch(f"lengths differ: {a.n} vs {b.n}")


def majorizes(a, b):
    """True if ``a`` dominates ``b``: equal sums and every prefix of ``a`` is at least ``b``'s."""
    _check_lengths(a, b)
    return a.s == b.s and bool(np.all(a.prefix >= b.prefix))


def strictly_majorizes(a, b):
    _check_lengths(a, b)
    return majorizes(a, b) and bool(np.any(a.prefix > b.prefix))


def meet(a, b):
    """Greatest lower bound of ``a`` and ``b``.

    The result's prefix sums are the pointwise minimum of the operands'
    prefix sums. Operands may have different totals, in which case the
    result carries the smaller one.
    """
    _check_lengths(a, b)
    prefix = np.minimum(a.prefix, b.prefix)
    # min of two concave curves is concave, so the differences are nonincreasing
    return DegreeSequence(np.diff(prefix), _trusted=True)
