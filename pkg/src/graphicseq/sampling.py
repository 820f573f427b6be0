"""
Seeded sampling of heavy-tailed degree sequences.

Every draw uses numpy's PCG64 bit generator. Derived seeds come from
``numpy.random.SeedSequence`` keyed on the parent seed plus integer
indices, so the same inputs give the same sequence on every platform.
"""

from functools import lru_cache

import numpy as np

from .errors import InvalidParameter, SamplingExhausted
from .sequence import from_unsorted, is_graphic, is_potentially_graphic

__all__ = [
    "BIT_GENERATOR",
    "derive_seed",
    "power_law_cdf",
    "sample_from_cdf",
    "sample_power_law",
    "draw_nongraphic_even",
    "sample_nongraphic_even",
]

BIT_GENERATOR = np.random.PCG64
_SEED_MASK = (1 << 64) - 1


def derive_seed(seed, *key):
    """Hash ``seed`` and integer ``key`` entries into a new 64-bit seed."""
    ss = np.random.SeedSequence([int(seed) & _SEED_MASK, *(int(k) for k in key)])
    return int(ss.generate_state(1, np.uint64)[0])


def _rng(seed):
    return np.random.Generator(BIT_GENERATOR(int(seed) & _SEED_MASK))


@lru_cache(maxsize=32)
def power_law_cdf(n, exponent):
    """Cumulative table of P(k) proportional to k**-exponent on 1..n-1."""
    k = np.arange(1, n, dtype=np.float64)
    w = k ** (-exponent)
    cdf = np.cumsum(w)
    cdf /= cdf[-1]
    cdf[-1] = 1.0
    cdf.flags.writeable = False
    return cdf


def sample_from_cdf(cdf, size, rng):
    """Inverse-CDF draws; value ``j + 1`` is returned for table slot ``j``."""
    u = rng.random(size)
    idx = np.searchsorted(cdf, u, side="right")
    np.minimum(idx, cdf.size - 1, out=idx)
    return idx.astype(np.int64) + 1


def _validate(n, exponent):
    if int(n) != n or n < 2:
        raise InvalidParameter(f"n must be an integer >= 2, got {n!r}")
    if not exponent > 1:
        raise InvalidParameter(f"exponent must be > 1, got {exponent!r}")


def sample_power_law(n, exponent, seed):
    """Draw ``n`` i.i.d. power-law degrees on ``1..n-1``, sorted nonincreasing."""
    _validate(n, exponent)
    n = int(n)
    values = sample_from_cdf(power_law_cdf(n, float(exponent)), n, _rng(seed))
    return from_unsorted(values)


def draw_nongraphic_even(n, exponent, seed, max_attempts):
    """Like :func:`sample_nongraphic_even` but also return the attempt count."""
    _validate(n, exponent)
    if max_attempts < 1:
        raise InvalidParameter(f"max_attempts must be >= 1, got {max_attempts!r}")
    for attempt in range(1, max_attempts + 1):
        a = sample_power_law(n, exponent, derive_seed(seed, attempt))
        if is_potentially_graphic(a) and not is_graphic(a):
            return a, attempt
    raise SamplingExhausted(
        f"no non-graphic even-sum draw for n={n}, exponent={exponent} "
        f"after {max_attempts} attempts",
        attempts=max_attempts,
    )


def sample_nongraphic_even(n, exponent, seed, max_attempts=1000):
    """Redraw whole sequences until one has even sum but is not graphic."""
    return draw_nongraphic_even(n, exponent, seed, max_attempts)[0]
