"""Radical inverse and its digit-scrambled randomization.

The radical inverse of index i in base b writes i's digits
(least-significant first) and mirrors them about the radix point:

    i = sum_k a_k b^(k-1)   ->   phi_b(i) = sum_k a_k b^(-k).

The scrambled variant pushes each digit through an independent uniform
random permutation pi_k of {0, ..., b-1} before mirroring.  Permutations
are drawn from a deterministic keyed stream so that any (seed, base,
digit) triple always yields the same permutation, on any platform and
Python version.  That stability is load-bearing: point sets must be
reproducible and extensible bit-for-bit from their seeds alone, so the
derivation below is part of the public contract and must not change.

Permutation derivation (fixed):

* key bytes = LE64(column_seed) || LE64(base) || LE64(k), with k the
  1-based digit index;
* an unsigned 64-bit word stream u_0, u_1, ... is read off 64-byte
  BLAKE2b digests in counter mode:
  ``blake2b(key || LE64(block), digest_size=64, person=b"rhalton.perm.v1")``
  with block = 0, 1, ... and words taken little-endian, 8 per digest;
* pi_k is built by a Fisher-Yates shuffle of (0, ..., b-1) walking
  i = b-1 down to 1, swapping position i with position (u mod (i+1));
  words with u >= floor(2^64/(i+1))*(i+1) are rejected and redrawn, so
  every swap target is exactly uniform (no modulo bias).

Each permutation costs O(b) and is keyed directly by its digit index,
so digit k never requires generating digits 1..k-1.

Digits are emitted for k = 1..K_b where K_b is the largest k with
b^k < 2^54, i.e. while the weight b^(-k) still moves a binary64 value
away from 1.0.  Indices up to 2^53 - 1 are accepted.  Accumulated
rounding in near-all-max digit streams can land the digit sum exactly
on 1.0, so outputs are clamped to the largest double below 1 to keep
every value inside [0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from hashlib import blake2b

import numpy as np

MAX_INDEX = 2**53 - 1

_PERSON = b"rhalton.perm.v1"
_WORD_LIMIT = 1 << 64
_BELOW_ONE = float(np.nextafter(1.0, 0.0))


def digit_depth(base: int) -> int:
    """Number of emitted digits: the largest K with base**K < 2**54."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    k, power = 0, 1
    while power * base < 2**54:
        power *= base
        k += 1
    return k


def _word_stream(key: bytes):
    """Unsigned 64-bit words from BLAKE2b in counter mode."""
    block = 0
    while True:
        digest = blake2b(
            key + block.to_bytes(8, "little"), digest_size=64, person=_PERSON
        ).digest()
        for off in range(0, 64, 8):
            yield int.from_bytes(digest[off : off + 8], "little")
        block += 1


def digit_permutation(base: int, column_seed: int, k: int) -> np.ndarray:
    """The digit-k permutation of the (column_seed, base) stream.

    Pure function of its arguments; see the module docstring for the
    exact byte-level derivation.
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if not 0 <= column_seed < 2**64:
        raise ValueError(f"column seed must be in [0, 2**64), got {column_seed}")
    if k < 1:
        raise ValueError(f"digit index must be >= 1, got {k}")
    key = (
        column_seed.to_bytes(8, "little")
        + base.to_bytes(8, "little")
        + k.to_bytes(8, "little")
    )
    words = _word_stream(key)
    perm = list(range(base))
    for i in range(base - 1, 0, -1):
        m = i + 1
        limit = (_WORD_LIMIT // m) * m
        u = next(words)
        while u >= limit:
            u = next(words)
        j = u % m
        perm[i], perm[j] = perm[j], perm[i]
    return np.asarray(perm, dtype=np.int64)


@dataclass(frozen=True)
class PermutationStream:
    """One permutation per emitted digit of a fixed base.

    ``perms`` has shape (digit_depth(base), base); row k-1 holds pi_k.
    ``column_seed`` is None for hand-built streams (tests, diagnostics).
    """

    base: int
    perms: np.ndarray = field(repr=False)
    column_seed: int | None = None

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        perms = np.asarray(self.perms, dtype=np.int64)
        if perms.ndim != 2 or perms.shape[1] != self.base:
            raise ValueError(
                f"perms must have shape (depth, {self.base}), got {perms.shape}"
            )
        expect = np.arange(self.base, dtype=np.int64)
        if not (np.sort(perms, axis=1) == expect).all():
            raise ValueError("every row of perms must permute 0..base-1")
        object.__setattr__(self, "perms", perms)

    @property
    def depth(self) -> int:
        return self.perms.shape[0]


def make_permutation_stream(base: int, column_seed: int) -> PermutationStream:
    """All digit_depth(base) permutations for one scrambled column."""
    depth = digit_depth(base)
    perms = np.stack(
        [digit_permutation(base, column_seed, k) for k in range(1, depth + 1)]
    )
    return PermutationStream(base=base, perms=perms, column_seed=column_seed)


def _checked_indices(indices) -> tuple[np.ndarray, bool]:
    idx = np.asarray(indices)
    scalar = idx.ndim == 0
    idx = np.atleast_1d(idx)
    if idx.size and not np.issubdtype(idx.dtype, np.integer):
        raise ValueError(f"indices must be integers, got dtype {idx.dtype}")
    idx = idx.astype(np.int64, copy=True)
    if idx.size and (idx.min() < 0 or idx.max() > MAX_INDEX):
        raise ValueError(f"indices must lie in [0, {MAX_INDEX}]")
    return idx, scalar


def radical_inverse(indices, base: int):
    """Plain van der Corput / Halton radical inverse, vectorized.

    Exact in binary64 for base 2; other bases round as usual.
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    res, scalar = _checked_indices(indices)
    out = np.zeros(res.shape, dtype=np.float64)
    weight = 1.0 / base
    for _ in range(digit_depth(base)):
        out += (res % base) * weight
        weight /= base
        res //= base
        if not res.any():
            break
    out = np.minimum(out, _BELOW_ONE)
    return float(out[0]) if scalar else out


def scrambled_radical_inverse(indices, base: int, stream: PermutationStream):
    """Radical inverse with each digit pushed through its stream permutation.

    Zero digits scramble to pi_k(0), generally nonzero, so all
    digit_depth(base) digits contribute: index 0 maps to a uniformly
    distributed point, not to 0.
    """
    if base != stream.base:
        raise ValueError(f"stream built for base {stream.base}, asked for {base}")
    res, scalar = _checked_indices(indices)
    out = np.zeros(res.shape, dtype=np.float64)
    weight = 1.0 / base
    for k in range(stream.depth):
        out += stream.perms[k][res % base] * weight
        weight /= base
        res //= base
    out = np.minimum(out, _BELOW_ONE)
    return float(out[0]) if scalar else out
