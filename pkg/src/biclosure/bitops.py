"""Small bitmask helpers used throughout the package.

Subsets of a finite carrier {0, ..., m-1} are plain ints with bit i set
iff element i is in the subset. Intersection, union and complement are
then single word operations, which is what makes the exhaustive sweeps
elsewhere affordable.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out
