"""Exhaustive enumeration of vertex subsets and set partitions.

Both enumerators are guarded: subset scans refuse n beyond
``SUBSET_LIMIT`` and partition scans refuse ground sets beyond
``PARTITION_LIMIT`` (Bell numbers blow up fast; Bell(12) is about 4.2M).
Orders are deterministic so that reported witnesses are reproducible.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .errors import LimitExceededError
from .multigraph import Multigraph, Partition

SUBSET_LIMIT = 16
PARTITION_LIMIT = 12


def enumerate_vertex_subsets(
    G: Multigraph, min_size: int = 0, *, max_n: int | None = None
) -> Iterator[frozenset]:
    """All subsets of V(G) with at least ``min_size`` vertices.

    Order: decreasing size, lexicographic within a size, so the whole
    vertex set comes first.
    """
    limit = SUBSET_LIMIT if max_n is None else max_n
    if G.n > limit:
        raise LimitExceededError(
            f"subset enumeration is limited to n <= {limit} vertices (got n={G.n})"
        )
    verts = range(G.n)
    for size in range(G.n, min_size - 1, -1):
        if size < 0:
            break
        for combo in itertools.combinations(verts, size):
            yield frozenset(combo)


def _restricted_growth_strings(n: int) -> Iterator[list[int]]:
    # Lexicographic restricted-growth strings; the yielded list is reused.
    if n == 0:
        yield []
        return
    a = [0] * n
    b = [1] * n  # b[i] = 1 + max(a[:i]), the largest value allowed at i
    while True:
        yield a
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        nxt = b[i] + 1 if a[i] == b[i] else b[i]
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = nxt


def enumerate_partitions(
    S: Iterable[int], *, max_size: int | None = None
) -> Iterator[Partition]:
    """All set partitions of ``S`` in restricted-growth-string order.

    The single-block partition comes first and the all-singletons
    partition last; blocks are ordered by first appearance.
    """
    items = sorted(S)
    limit = PARTITION_LIMIT if max_size is None else max_size
    if len(items) > limit:
        raise LimitExceededError(
            f"partition enumeration is limited to {limit} elements (got {len(items)})"
        )
    for rgs in _restricted_growth_strings(len(items)):
        nblocks = max(rgs) + 1 if rgs else 0
        blocks: list[list[int]] = [[] for _ in range(nblocks)]
        for item, label in zip(items, rgs):
            blocks[label].append(item)
        yield Partition(tuple(frozenset(b) for b in blocks))


def bell_number(n: int) -> int:
    """Number of set partitions of an n-element set (triangle recurrence)."""
    if n == 0:
        return 1
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for val in row:
            nxt.append(nxt[-1] + val)
        row = nxt
    return row[-1]
