"""Multigraph values, partitions, and the counting primitives everything
else is built on.

Vertices are the integers ``0..n-1``.  Edges carry stable dense ids (their
position in the edge tuple), so parallel edges remain distinguishable when
they are assigned to different classes of a decomposition.  Loops are
rejected outright.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GraphInputError

VertexSet = frozenset
EdgeSet = frozenset


@dataclass(frozen=True)
class Multigraph:
    """An undirected multigraph with no loops.

    ``edges`` is a tuple of endpoint pairs; each pair is normalized to
    ``(min, max)`` on construction.  The index of a pair is its edge id.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphInputError("vertex count must be non-negative")
        norm = []
        for idx, pair in enumerate(self.edges):
            try:
                u, v = pair
            except (TypeError, ValueError):
                raise GraphInputError(f"edge {idx}: expected an endpoint pair") from None
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphInputError(
                    f"edge {idx}: endpoint out of range 0..{self.n - 1}: ({u}, {v})"
                )
            if u == v:
                raise GraphInputError(f"edge {idx}: loops are not allowed")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def endpoints(self, eid: int) -> tuple[int, int]:
        if not 0 <= eid < self.m:
            raise GraphInputError(f"edge id {eid} out of range 0..{self.m - 1}")
        return self.edges[eid]

    def multiplicity(self) -> int:
        """Largest number of parallel edges between any vertex pair."""
        if not self.edges:
            return 0
        counts: dict[tuple[int, int], int] = {}
        for pair in self.edges:
            counts[pair] = counts.get(pair, 0) + 1
        return max(counts.values())

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[set[int]]:
        """Neighbour sets; parallel edges collapse to one entry."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    def subgraph_of(self, F: Iterable[int]) -> "Multigraph":
        """Spanning subgraph keeping only edge ids ``F`` (ids are remapped
        to ``0..|F|-1`` in ascending order of the original ids)."""
        ids = check_edge_subset(self, F)
        return Multigraph(self.n, tuple(self.edges[e] for e in ids))


def check_vertex_subset(G: Multigraph, X: Iterable[int]) -> frozenset:
    X = frozenset(X)
    for v in X:
        if not (isinstance(v, int) and 0 <= v < G.n):
            raise GraphInputError(f"vertex {v!r} out of range 0..{G.n - 1}")
    return X


def check_edge_subset(G: Multigraph, F: Iterable[int]) -> list[int]:
    ids = sorted(set(F))
    for e in ids:
        if not (isinstance(e, int) and 0 <= e < G.m):
            raise GraphInputError(f"edge id {e!r} out of range 0..{G.m - 1}")
    return ids


@dataclass(frozen=True)
class Partition:
    """A partition of some vertex set into disjoint nonempty blocks."""

    blocks: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        norm = tuple(frozenset(b) for b in self.blocks)
        seen: set[int] = set()
        for b in norm:
            if not b:
                raise GraphInputError("partition blocks must be nonempty")
            if seen & b:
                raise GraphInputError("partition blocks overlap")
            seen |= b
        object.__setattr__(self, "blocks", norm)

    @property
    def ground(self) -> frozenset:
        return frozenset().union(*self.blocks) if self.blocks else frozenset()

    @property
    def trivial_count(self) -> int:
        """Number of singleton blocks."""
        return sum(1 for b in self.blocks if len(b) == 1)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self.blocks)

    def block_of(self) -> dict[int, int]:
        """Vertex -> block index lookup."""
        lookup: dict[int, int] = {}
        for i, b in enumerate(self.blocks):
            for v in b:
                lookup[v] = i
        return lookup


def induced_edge_count(G: Multigraph, X: Iterable[int]) -> int:
    """Number of edges with both endpoints in ``X`` (parallel edges count)."""
    X = check_vertex_subset(G, X)
    return sum(1 for u, v in G.edges if u in X and v in X)


def cross_edge_count(G: Multigraph, pi: Partition) -> int:
    """Number of edges whose endpoints lie in two different blocks of ``pi``.

    Edges with an endpoint outside the partition's ground set are ignored,
    so for a partition of ``V(G) - Z`` this is the cross count in ``G - Z``.
    """
    lookup = pi.block_of()
    for v in lookup:
        if not 0 <= v < G.n:
            raise GraphInputError(f"partition vertex {v} out of range 0..{G.n - 1}")
    count = 0
    for u, v in G.edges:
        bu = lookup.get(u)
        bv = lookup.get(v)
        if bu is not None and bv is not None and bu != bv:
            count += 1
    return count


def adjacent_number(G: Multigraph, Z: Iterable[int], pi: Partition) -> int:
    """Sum over the blocks of ``pi`` of how many vertices of ``Z`` have a
    neighbour in that block.

    A vertex of ``Z`` counts once per block it touches, regardless of how
    many parallel edges realize the adjacency.  ``pi`` must partition
    exactly ``V(G) - Z``.
    """
    Z = check_vertex_subset(G, Z)
    ground = pi.ground
    if Z & ground:
        raise GraphInputError("Z intersects the partition's ground set")
    if Z | ground != frozenset(G.vertices()):
        raise GraphInputError("partition must cover exactly V(G) - Z")
    adj = G.adjacency()
    total = 0
    for block in pi.blocks:
        total += sum(1 for z in Z if adj[z] & block)
    return total


def random_multigraph(n: int, m: int, max_multiplicity: int = 1, seed: int = 0) -> Multigraph:
    """A random multigraph with exactly ``m`` edges and no vertex pair
    carrying more than ``max_multiplicity`` parallel edges.

    Deterministic for a fixed seed: edges are sampled without replacement
    from the multiset of available slots, then sorted.
    """
    if n < 0 or m < 0:
        raise GraphInputError("n and m must be non-negative")
    if max_multiplicity < 1:
        raise GraphInputError("max_multiplicity must be at least 1")
    pairs = list(itertools.combinations(range(n), 2))
    if m > len(pairs) * max_multiplicity:
        raise GraphInputError(
            f"cannot place {m} edges on {n} vertices with multiplicity <= {max_multiplicity}"
        )
    rng = random.Random(seed)
    slots = [p for p in pairs for _ in range(max_multiplicity)]
    return Multigraph(n, tuple(sorted(rng.sample(slots, m))))


def parse_graph(text: str) -> Multigraph:
    """Parse the plain text format: first line ``n m``, then ``m`` lines
    ``u v`` (0-based).  Parallel edges repeat lines; ids follow file order."""
    lines = text.splitlines()
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if stripped:
            rows.append((lineno, stripped.split()))
    if not rows:
        raise GraphInputError("line 1: empty graph file")
    lineno, header = rows[0]
    if len(header) != 2:
        raise GraphInputError(f"line {lineno}: expected header 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphInputError(f"line {lineno}: expected integers in header") from None
    if len(rows) - 1 != m:
        raise GraphInputError(
            f"line {lineno}: header promises {m} edges, file has {len(rows) - 1} edge lines"
        )
    edges = []
    for lineno, fields in rows[1:]:
        if len(fields) != 2:
            raise GraphInputError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphInputError(f"line {lineno}: expected integer endpoints") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"line {lineno}: endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"line {lineno}: loops are not allowed")
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def format_graph(G: Multigraph) -> str:
    body = "\n".join(f"{u} {v}" for u, v in G.edges)
    return f"{G.n} {G.m}\n{body}\n" if body else f"{G.n} {G.m}\n"


def load_graph(path) -> Multigraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise GraphInputError(f"cannot read graph file {path}: {exc}") from None


def write_graph(path, G: Multigraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(G))
