"""Seeded, extensible blocks of scrambled Halton points.

Conceptually there is one doubly-infinite random matrix per seed spec:
row i, column j holds the digit-scrambled radical inverse of index i-1
in the j-th prime base.  A block request reads the finite window of n
rows and d columns starting after n0 skipped rows and d0 skipped
columns.  Because entry (i, j) depends only on (i, column seed of j),
any two requests agree bit-for-bit wherever their windows overlap: all
extension identities (more rows, more columns, sub-blocks) hold by
construction rather than by bookkeeping.

Seeding comes in two modes.  A single seed s gives column j the seed
s + j - 1 (wrapping modulo 2**64), so one integer pins down every
column, including columns beyond any window generated so far.  A seed
vector pins column j to its j-th entry and must cover all d0 + d
columns the request touches: supplying only d seeds when d0 > 0 would
silently shift which column gets which seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .primes import PrimeTable, default_table
from .radical import MAX_INDEX, make_permutation_stream, scrambled_radical_inverse

_SEED_BOUND = 2**64


def _check_seed(value: int, what: str) -> int:
    if not isinstance(value, (int, np.integer)):
        raise ValueError(f"{what} must be an integer, got {type(value).__name__}")
    if not 0 <= value < _SEED_BOUND:
        raise ValueError(f"{what} must be in [0, 2**64), got {value}")
    return int(value)


@dataclass(frozen=True)
class SeedSpec:
    """Either one seed for the whole matrix or one per absolute column."""

    single: int | None = None
    vector: tuple[int, ...] | None = None

    def __post_init__(self):
        if (self.single is None) == (self.vector is None):
            raise ValueError("provide exactly one of a single seed or a seed vector")
        if self.single is not None:
            _check_seed(self.single, "seed")
        else:
            object.__setattr__(
                self,
                "vector",
                tuple(_check_seed(s, "seed vector entry") for s in self.vector),
            )

    @classmethod
    def from_single(cls, seed: int) -> "SeedSpec":
        return cls(single=seed)

    @classmethod
    def from_vector(cls, seeds) -> "SeedSpec":
        return cls(vector=tuple(seeds))


def column_seed(seeds: SeedSpec, absolute_column: int) -> int:
    """Seed of absolute column j >= 1 under either seeding mode."""
    if absolute_column < 1:
        raise ValueError(f"column index must be >= 1, got {absolute_column}")
    if seeds.single is not None:
        return (seeds.single + absolute_column - 1) % _SEED_BOUND
    if absolute_column > len(seeds.vector):
        raise ValueError(
            f"column {absolute_column} has no seed: the vector supplies "
            f"only {len(seeds.vector)} columns"
        )
    return seeds.vector[absolute_column - 1]


@dataclass(frozen=True)
class BlockRequest:
    """Window of a seeded point matrix: n rows by d columns after (n0, d0).

    ``index_offset`` shifts the underlying integer index of every row;
    it exists for parity experiments and defaults to 0.
    """

    n: int
    d: int
    seeds: SeedSpec
    n0: int = 0
    d0: int = 0
    index_offset: int = 0

    def __post_init__(self):
        for name in ("n", "d", "n0", "d0", "index_offset"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or value < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {value}")
        if self.index_offset + self.n0 + self.n - 1 > MAX_INDEX:
            raise ValueError(
                f"rows reach index {self.index_offset + self.n0 + self.n - 1}, "
                f"beyond the exact-integer limit {MAX_INDEX}"
            )
        if self.seeds.vector is not None and len(self.seeds.vector) != self.d0 + self.d:
            raise ValueError(
                f"seed vector must cover all d0 + d = {self.d0 + self.d} columns, "
                f"got {len(self.seeds.vector)} seeds"
            )


def rhalton(request: BlockRequest, primes: PrimeTable | None = None) -> np.ndarray:
    """Generate the requested block as an (n, d) float array in [0, 1).

    Entries are a pure function of (row index, column seed, column
    base); repeating or enlarging a request reproduces / extends the
    same values bit-for-bit.
    """
    if primes is None:
        primes = default_table()
    if request.d0 + request.d > primes.cap:
        raise ValueError(
            f"request touches column {request.d0 + request.d} but the prime "
            f"table caps at {primes.cap}; build a larger PrimeTable"
        )
    out = np.empty((request.n, request.d), dtype=np.float64)
    if 0 in out.shape:
        return out
    first = request.index_offset + request.n0
    indices = np.arange(first, first + request.n, dtype=np.int64)
    for local in range(request.d):
        j = request.d0 + local + 1
        base = primes.nth(j)
        stream = make_permutation_stream(base, column_seed(request.seeds, j))
        out[:, local] = scrambled_radical_inverse(indices, base, stream)
    return out
