"""Subset and partition condition checkers, plus the fractional density
parameters and connectivity notions built from them.

Every checker scans its full quantifier range exhaustively (under the
enumeration guardrails) and reports the first violator in enumeration
order, together with the two sides of the violated inequality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .enumeration import SUBSET_LIMIT, enumerate_partitions, enumerate_vertex_subsets
from .errors import GraphInputError, LimitExceededError
from .multigraph import (
    Multigraph,
    Partition,
    adjacent_number,
    cross_edge_count,
    induced_edge_count,
)


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a condition check.

    ``witness_kind`` is one of ``vertex-set``, ``partition``,
    ``z-partition``, ``deficiency-edges`` or None; ``lhs``/``rhs`` record
    the two sides of the checked inequality at the witness.
    """

    condition: str
    parameters: tuple[tuple[str, object], ...]
    holds: bool
    witness: object = None
    witness_kind: str | None = None
    lhs: object = None
    rhs: object = None
    note: str | None = None

    def __post_init__(self) -> None:
        params = self.parameters
        if isinstance(params, dict):
            params = sorted(params.items())
        object.__setattr__(self, "parameters", tuple(params))

    @property
    def params(self) -> dict:
        return dict(self.parameters)


class GammaResult(NamedTuple):
    value: Fraction
    argmax: frozenset


def check_cover_condition(
    G: Multigraph, k: int, *, max_n: int | None = None
) -> ConditionReport:
    """Does every X with |X| >= 2 satisfy i(X) <= k(2|X| - 3)?"""
    if k < 0:
        raise GraphInputError("need k >= 0")
    for X in enumerate_vertex_subsets(G, 2, max_n=max_n):
        lhs = induced_edge_count(G, X)
        rhs = k * (2 * len(X) - 3)
        if lhs > rhs:
            return ConditionReport("cover", {"k": k}, False, X, "vertex-set", lhs, rhs)
    return ConditionReport("cover", {"k": k}, True)


def check_tree_packing_condition(
    G: Multigraph, l: int, *, max_partition_n: int | None = None
) -> ConditionReport:
    """Does every partition p of V satisfy cross(p) >= l(|p| - 1)?"""
    if l < 0:
        raise GraphInputError("need l >= 0")
    for pi in enumerate_partitions(G.vertices(), max_size=max_partition_n):
        lhs = cross_edge_count(G, pi)
        rhs = l * (len(pi) - 1)
        if lhs < rhs:
            return ConditionReport("tree-packing", {"l": l}, False, pi, "partition", lhs, rhs)
    return ConditionReport("tree-packing", {"l": l}, True)


def _proper_subsets(G: Multigraph, *, max_n: int | None = None):
    # All proper subsets of V (empty included), smallest first so the
    # Z = empty-set cases are scanned before any vertex deletions.
    limit = SUBSET_LIMIT if max_n is None else max_n
    if G.n > limit:
        raise LimitExceededError(
            f"subset enumeration is limited to n <= {limit} vertices (got n={G.n})"
        )
    verts = range(G.n)
    for size in range(G.n):
        for combo in itertools.combinations(verts, size):
            yield frozenset(combo)


def check_parthm_condition(
    G: Multigraph, k: int, l: int, *, max_partition_n: int | None = None
) -> ConditionReport:
    """Sufficient packing condition: for every proper subset Z and every
    partition p of V - Z,

        cross_{G-Z}(p) >= (3k + l)(|p| - 1) - k*n0 - k*nZ

    where n0 counts trivial parts and nZ is the adjacent number of p with
    respect to Z.
    """
    if k < 0 or l < 0:
        raise GraphInputError("need k >= 0 and l >= 0")
    params = {"k": k, "l": l}
    vertices = frozenset(G.vertices())
    for Z in _proper_subsets(G, max_n=max_partition_n):
        rest = vertices - Z
        for pi in enumerate_partitions(rest, max_size=max_partition_n):
            lhs = cross_edge_count(G, pi)
            rhs = (3 * k + l) * (len(pi) - 1) - k * pi.trivial_count - k * adjacent_number(G, Z, pi)
            if lhs < rhs:
                return ConditionReport(
                    "parthm", params, False, (Z, pi), "z-partition", lhs, rhs
                )
    return ConditionReport("parthm", params, True)


def check_necessary_condition(
    G: Multigraph, k: int, l: int, *, max_partition_n: int | None = None
) -> ConditionReport:
    """Necessary packing condition: every partition p of V satisfies
    cross(p) >= (3k + l)(|p| - 1) - k*n0."""
    if k < 0 or l < 0:
        raise GraphInputError("need k >= 0 and l >= 0")
    params = {"k": k, "l": l}
    for pi in enumerate_partitions(G.vertices(), max_size=max_partition_n):
        lhs = cross_edge_count(G, pi)
        rhs = (3 * k + l) * (len(pi) - 1) - k * pi.trivial_count
        if lhs < rhs:
            return ConditionReport("necessary", params, False, pi, "partition", lhs, rhs)
    return ConditionReport("necessary", params, True)


def gamma(G: Multigraph, *, max_n: int | None = None) -> GammaResult:
    """Fractional arboricity: max of i(X) / (|X| - 1) over |X| >= 2,
    as an exact fraction with the first maximizer in enumeration order."""
    return _density_max(G, lambda x: x - 1, max_n=max_n)


def gamma2(G: Multigraph, *, max_n: int | None = None) -> GammaResult:
    """Sparse-cover density: max of i(X) / (2|X| - 3) over |X| >= 2."""
    return _density_max(G, lambda x: 2 * x - 3, max_n=max_n)


def _density_max(G: Multigraph, denominator, *, max_n: int | None) -> GammaResult:
    if G.n < 2:
        raise GraphInputError("density parameters need at least 2 vertices")
    best: Fraction | None = None
    arg: frozenset | None = None
    for X in enumerate_vertex_subsets(G, 2, max_n=max_n):
        val = Fraction(induced_edge_count(G, X), denominator(len(X)))
        if best is None or val > best:
            best, arg = val, X
    assert best is not None and arg is not None
    return GammaResult(best, arg)


def _min_cut_within(G: Multigraph, W: frozenset) -> int | None:
    """Edge connectivity of the subgraph induced by W; None when |W| <= 1
    (vacuously as connected as required)."""
    verts = sorted(W)
    if len(verts) <= 1:
        return None
    inside = [(u, v) for u, v in G.edges if u in W and v in W]
    anchor = verts[0]
    rest = verts[1:]
    best: int | None = None
    for size in range(len(rest) + 1):
        for combo in itertools.combinations(rest, size):
            side = set(combo)
            side.add(anchor)
            if len(side) == len(verts):
                continue
            cut = sum(1 for u, v in inside if (u in side) != (v in side))
            if best is None or cut < best:
                best = cut
                if best == 0:
                    return 0
    return best


def edge_connectivity(G: Multigraph, *, max_n: int | None = None) -> int | None:
    """Global edge connectivity by scanning all bipartitions; None for
    graphs with fewer than 2 vertices."""
    limit = SUBSET_LIMIT if max_n is None else max_n
    if G.n > limit:
        raise LimitExceededError(
            f"edge connectivity scan is limited to n <= {limit} vertices (got n={G.n})"
        )
    return _min_cut_within(G, frozenset(G.vertices()))


def is_pq_connected(G: Multigraph, p: int, q: int, *, max_n: int | None = None) -> bool:
    """|V| > p/q and G - X is (p - q|X|)-edge-connected for every proper X."""
    if p < 1 or q < 1:
        raise GraphInputError("need p >= 1 and q >= 1")
    if G.n * q <= p:
        return False
    vertices = frozenset(G.vertices())
    for X in _proper_subsets(G, max_n=max_n):
        need = p - q * len(X)
        if need <= 0:
            continue
        cut = _min_cut_within(G, vertices - X)
        if cut is not None and cut < need:
            return False
    return True


def is_bracket_partition_connected(
    G: Multigraph, p: int, q: int, *, max_partition_n: int | None = None
) -> bool:
    """|V| > p/q and cross_{G-Z}(pi) >= p(|pi| - 1) - q*nZ(pi) for every
    proper subset Z and partition pi of V - Z."""
    if p < 1 or q < 1:
        raise GraphInputError("need p >= 1 and q >= 1")
    if G.n * q <= p:
        return False
    vertices = frozenset(G.vertices())
    for Z in _proper_subsets(G, max_n=max_partition_n):
        rest = vertices - Z
        for pi in enumerate_partitions(rest, max_size=max_partition_n):
            if cross_edge_count(G, pi) < p * (len(pi) - 1) - q * adjacent_number(G, Z, pi):
                return False
    return True


def essential_edge_connectivity(G: Multigraph, *, max_n: int | None = None) -> int | None:
    """Minimum number of edges crossing a bipartition with both sides of
    size >= 2; None ("unbounded") when no such bipartition exists."""
    limit = SUBSET_LIMIT if max_n is None else max_n
    if G.n > limit:
        raise LimitExceededError(
            f"essential connectivity scan is limited to n <= {limit} vertices (got n={G.n})"
        )
    if G.n <= 3:
        return None
    best: int | None = None
    rest = range(1, G.n)
    for size in range(1, G.n - 2):
        for combo in itertools.combinations(rest, size):
            side = frozenset(combo) | {0}
            if len(side) < 2:
                continue
            pi = Partition((side, frozenset(G.vertices()) - side))
            cut = cross_edge_count(G, pi)
            if best is None or cut < best:
                best = cut
    return best


def is_essentially_edge_connected(G: Multigraph, p: int, *, max_n: int | None = None) -> bool:
    cut = essential_edge_connectivity(G, max_n=max_n)
    return cut is None or cut >= p
