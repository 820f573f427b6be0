"""
Degree sequences and graphicality predicates.

A degree sequence is stored as a read-only ``int64`` numpy array in
nonincreasing order. Zeros are kept, so ``<1,1>`` and ``<1,1,0>`` are
different sequences.
"""

from functools import cached_property

import numpy as np

from .errors import InvalidDegree, NotSorted

__all__ = [
    "DegreeSequence",
    "from_unsorted",
    "is_potentially_graphic",
    "is_graphic",
    "parse_sequence",
    "format_sequence",
]


class DegreeSequence:
    """Immutable nonincreasing sequence of non-negative integers.

    ``prefix`` has ``n + 1`` entries with ``prefix[0] == 0`` and
    ``prefix[k]`` the sum of the first ``k`` values, so ``prefix[n] == s``.
    """

    def __init__(self, values, *, _trusted=False):
        if _trusted:
            # internal callers hand over a fresh array; skip the copy
            arr = np.asarray(values, dtype=np.int64).reshape(-1)
        else:
            arr = np.array(values, dtype=np.int64, copy=True).reshape(-1)
        if not _trusted and arr.size:
            if arr.min() < 0:
                raise InvalidDegree(f"negative degree {int(arr.min())}")
            if np.any(arr[1:] > arr[:-1]):
                raise NotSorted("degree sequence must be nonincreasing")
        arr.flags.writeable = False
        self._values = arr

    @classmethod
    def from_unsorted(cls, raw):
        return from_unsorted(raw)

    @property
    def values(self):
        return self._values

    @property
    def n(self):
        return int(self._values.size)

    @cached_property
    def prefix(self):
        out = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(self._values, out=out[1:])
        out.flags.writeable = False
        return out

    @cached_property
    def s(self):
        return int(self.prefix[-1])

    def padded(self, length):
        """Return a copy extended with zeros to ``length`` entries."""
        if length < self.n:
            raise ValueError(f"cannot pad length {self.n} down to {length}")
        out = np.zeros(length, dtype=np.int64)
        out[: self.n] = self._values
        return DegreeSequence(out, _trusted=True)

    def tolist(self):
        return self._values.tolist()

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.tolist())

    def __getitem__(self, item):
        return self._values[item]

    def __eq__(self, other):
        if isinstance(other, DegreeSequence):
            return np.array_equal(self._values, other._values)
        if isinstance(other, (list, tuple)):
            return self.tolist() == list(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._values.tobytes())

    def __repr__(self):
        if self.n > 20:
            head = ", ".join(map(str, self._values[:10].tolist()))
            return f"DegreeSequence(<{head}, ...>, n={self.n}, s={self.s})"
        return f"DegreeSequence(<{', '.join(map(str, self.tolist()))}>)"


def from_unsorted(raw):
    """Sort ``raw`` into a DegreeSequence with a counting sort.

    Runs in O(n + max value).
    """
    arr = np.asarray(raw, dtype=np.int64).reshape(-1)
    if arr.size == 0:
        return DegreeSequence(arr, _trusted=True)
    if arr.min() < 0:
        raise InvalidDegree(f"negative degree {int(arr.min())}")
    counts = np.bincount(arr)
    values = np.repeat(np.arange(counts.size - 1, -1, -1, dtype=np.int64), counts[::-1])
    return DegreeSequence(values, _trusted=True)


def is_potentially_graphic(a):
    n = a.n
    return a.s % 2 == 0 and a.s <= n * (n - 1)


def is_graphic(a):
    """Erdős–Gallai test in O(n).

    For each k the tail term ``sum(min(d_i, k) for i > k)`` is read off a
    crossing index ``c_k = #{i : d_i >= k}`` and the prefix sums.
    """
    n, s = a.n, a.s
    if s % 2:
        return False
    if n == 0 or s == 0:
        return True
    d = a.values
    if d[0] > n - 1:
        return False
    prefix = a.prefix
    # d[0] <= n - 1 here, so bincount has at most n bins
    below = np.cumsum(np.bincount(d, minlength=n))[: n]  # below[j] = #{d_i <= j}
    k = np.arange(1, n + 1, dtype=np.int64)
    crossing = n - below[k - 1]  # #{d_i >= k}
    split = np.maximum(k, crossing)
    rhs = k * (k - 1) + k * (split - k) + (s - prefix[split])
    return bool(np.all(prefix[1:] <= rhs))


def parse_sequence(text):
    """Parse whitespace-separated integers into a sorted DegreeSequence."""
    tokens = text.split()
    try:
        raw = [int(t) for t in tokens]
    except ValueError as exc:
        raise InvalidDegree(f"not an integer: {exc}") from None
    return from_unsorted(raw)


def format_sequence(a):
    return " ".join(map(str, a.tolist())) + "\n"
