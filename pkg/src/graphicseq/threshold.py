"""
The maximal graphic threshold sequence T(n, s).

T(n, s) has length n, even sum s and the fewest non-zero entries of any
graphic sequence with that length and sum. In closed form it is::

    <(p+1)^q, p^(p+1-q), q, 0, ..., 0>

with p the largest integer such that p(p+1) <= s and q = (s - p(p+1)) / 2.
The q entry is present only when q > 0.
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import NotPotentiallyGraphic, OddSum
from .realize import Graph
from .sequence import DegreeSequence

__all__ = [
    "ThresholdParams",
    "threshold_params",
    "threshold_value",
    "threshold_sequence",
    "threshold_sequence_recursive",
    "threshold_graph",
    "min_clique_order",
]


@dataclass(frozen=True)
class ThresholdParams:
    n: int
    s: int
    p: int
    q: int
    m: int


def _check(n, s):
    if n < 0 or s < 0:
        raise ValueError(f"n and s must be non-negative, got n={n}, s={s}")
    if s % 2:
        raise OddSum(f"sum {s} is odd")
    if s > n * (n - 1):
        raise NotPotentiallyGraphic(f"sum {s} exceeds n(n-1) = {n * (n - 1)}")


def min_clique_order(s):
    """Smallest k with s <= k(k-1); 0 when s == 0."""
    k = (1 + isqrt(4 * s + 1)) // 2
    while k * (k - 1) < s:
        k += 1
    while k > 0 and (k - 1) * (k - 2) >= s:
        k -= 1
    return k


def threshold_params(n, s):
    n, s = int(n), int(s)
    _check(n, s)
    p = (isqrt(4 * s + 1) - 1) // 2
    # isqrt is exact; the loops only guard the invariant
    while p * (p + 1) > s:
        p -= 1
    while (p + 1) * (p + 2) <= s:
        p += 1
    q = (s - p * (p + 1)) // 2
    if s == 0:
        m = 0
    else:
        m = p + 1 if q == 0 else p + 2
    return ThresholdParams(n=n, s=s, p=p, q=q, m=m)


def threshold_value(params, i):
    """Entry ``i`` (1-based) of T(n, s) in O(1)."""
    if not 1 <= i <= params.n:
        raise IndexError(f"index {i} outside 1..{params.n}")
    p, q = params.p, params.q
    if i <= q:
        return p + 1
    if i <= p + 1:
        return p
    if i == p + 2:
        return q
    return 0


def threshold_sequence(n, s):
    t = threshold_params(n, s)
    out = np.zeros(t.n, dtype=np.int64)
    out[: t.q] = t.p + 1
    out[t.q : t.p + 1] = t.p
    if t.q > 0:
        out[t.p + 1] = t.q
    return DegreeSequence(out, _trusted=True)


def threshold_sequence_recursive(n, s):
    """Evaluate T(n, s) from its three-case recursive definition.

    Kept deliberately literal; it is the reference the closed form is
    checked against.
    """
    _check(n, s)
    return DegreeSequence(_recurse(n, s))


def _recurse(n, s):
    if s == 0:
        return [0] * n
    m = min_clique_order(s)
    if n > m:
        return _recurse(m, s) + [0] * (n - m)
    gamma = _recurse(n - 1, s - 2 * (n - 1))
    return [n - 1] + [g + 1 for g in gamma]


def threshold_graph(n, s):
    """Build the threshold graph realizing T(n, s).

    Follows the recursion: while the active block is longer than m its tail
    vertices stay isolated, otherwise its first vertex dominates the rest of
    the block. Vertex ``i`` ends up with degree ``T(n, s)[i]``.
    """
    _check(n, s)
    edges = []
    first, length = 0, n
    while s > 0:
        m = min_clique_order(s)
        if length > m:
            length = m
            continue
        edges.extend((first, v) for v in range(first + 1, first + length))
        s -= 2 * (length - 1)
        first += 1
        length -= 1
    return Graph(n, tuple(edges))
