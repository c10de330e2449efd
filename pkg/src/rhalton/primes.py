"""Prime bases for Halton columns.

Column j of a Halton point set uses the j-th prime as its radix, so we
need fast 1-indexed access to the first several hundred primes.  A sieve
of Eratosthenes up to the Rosser bound d*(log d + log log d) is plenty:
the bound dominates the d-th prime for every d >= 6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

DEFAULT_CAP = 1000


def sieve_upper_bound(d: int) -> int:
    """Integer D guaranteed to satisfy D >= (d-th prime).

    Rosser's theorem gives p_d < d*(ln d + ln ln d) for d >= 6; below
    that the bound is hardcoded to 13 = p_6.
    """
    if d < 6:
        return 13
    return math.ceil(d * math.log(d) + d * math.log(math.log(d)))


def _sieve(limit: int) -> np.ndarray:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


@dataclass(frozen=True)
class PrimeTable:
    """The first ``cap`` primes, in increasing order.

    ``primes[0] == 2``; access through :func:`nth_prime` is 1-indexed to
    match the usual "j-th prime" convention for Halton bases.
    """

    primes: np.ndarray = field(repr=False)
    cap: int = DEFAULT_CAP

    @classmethod
    def from_cap(cls, cap: int = DEFAULT_CAP) -> "PrimeTable":
        if cap < 1:
            raise ValueError(f"prime table cap must be >= 1, got {cap}")
        primes = _sieve(sieve_upper_bound(cap))[:cap]
        # Rosser guarantees the sieve range holds at least cap primes.
        assert len(primes) == cap
        return cls(primes=primes, cap=cap)

    def nth(self, j: int) -> int:
        if j < 1:
            raise ValueError(f"prime index must be >= 1, got {j}")
        if j > self.cap:
            raise ValueError(
                f"prime index {j} exceeds the table cap {self.cap}; "
                f"build a larger table with PrimeTable.from_cap({j})"
            )
        return int(self.primes[j - 1])


@lru_cache(maxsize=None)
def default_table(cap: int = DEFAULT_CAP) -> PrimeTable:
    return PrimeTable.from_cap(cap)


def nth_prime(j: int, table: PrimeTable | None = None) -> int:
    """1-indexed prime lookup: nth_prime(1) == 2."""
    if table is None:
        table = default_table()
    return table.nth(j)
