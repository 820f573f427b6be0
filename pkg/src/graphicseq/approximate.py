"""One-pass graphic approximation of a degree sequence."""

import numpy as np
from numba import njit

from .errors import NotPotentiallyGraphic
from .sequence import DegreeSequence
from .threshold import threshold_params

__all__ = ["approximate", "target_sum"]


@njit(cache=True)
def _one_pass(alpha, p, q, beta):
    n = alpha.shape[0]
    a_sum = 0
    t_sum = 0
    b_sum = 0
    for i in range(1, n + 1):
        a_sum += alpha[i - 1]
        if i <= q:
            ti = p + 1
        elif i <= p + 1:
            ti = p
        elif i == p + 2:
            ti = q
        else:
            ti = 0
        t_sum += ti
        b = min(a_sum, t_sum) - b_sum
        beta[i - 1] = b
        b_sum += b
    return beta


def target_sum(s):
    """Even sum the approximation aims for: ``s`` itself, or ``s - 1`` when odd."""
    return s - (s % 2)


def approximate(a):
    """Return the meet of ``a`` with T(n, s'), computed in a single pass.

    ``s'`` is the sum of ``a`` rounded down to even. The result is graphic,
    has the same length as ``a`` and sums to ``s'``. ``T`` itself is never
    built; each entry is evaluated from ``(p, q)`` as the loop advances.

    Raises:
        NotSorted: ``a`` is a raw array that is not nonincreasing.
        NotPotentiallyGraphic: ``s' > n(n-1)``.
    """
    if not isinstance(a, DegreeSequence):
        a = DegreeSequence(a)
    n = a.n
    s = target_sum(a.s)
    if s > n * (n - 1):
        raise NotPotentiallyGraphic(
            f"even-adjusted sum {s} exceeds n(n-1) = {n * (n - 1)}; "
            "no same-length approximation exists"
        )
    t = threshold_params(n, s)
    # numpy's allocator is cheaper than numba's for large outputs
    beta = np.empty(n, dtype=np.int64)
    _one_pass(a.values, t.p, t.q, beta)
    return DegreeSequence(beta, _trusted=True)
