"""Vertex sets as integer bitmasks.

Every vertex subset in this package is an ``int`` whose bit ``v`` is set
when vertex ``v`` is a member.  Masks are hashable, compare equal exactly
when the sets are equal, and make subset/intersection tests single
operations, which matters in the solver inner loops.  The canonical
encoding of a set is its ascending member tuple (see :func:`vertices_of`).
"""

from __future__ import annotations

from typing import Iterable, Iterator


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Ascending member tuple; the canonical encoding of a vertex set."""
    return tuple(iter_bits(mask))


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def as_mask(value, n: int) -> int:
    """Normalize an int mask or an iterable of vertex indices to a mask.

    Raises ValueError when a member falls outside ``0..n-1``.
    """
    if isinstance(value, int):
        m = value
    else:
        m = mask_of(value)
    if m < 0 or m >> n:
        raise ValueError(f"vertex set {vertices_of(m & ((1 << max(n, m.bit_length())) - 1))!r} "
                         f"has members outside 0..{n - 1}")
    return m
