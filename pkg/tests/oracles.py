"""Independent definitional oracles.

Everything here is written directly from the definitions with itertools
and plain dictionaries: no pebble game, no union-find, no matroid union.
The main implementation is tested against these, so they must not share
code paths with it.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def iter_subsets(items, min_size=0):
    items = sorted(items)
    for r in range(min_size, len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def set_partitions(items):
    """All set partitions, as lists of lists (recursive construction)."""
    items = sorted(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def induced(G, F, X):
    return sum(1 for e in F if G.edges[e][0] in X and G.edges[e][1] in X)


def cross(G, blocks):
    lookup = {}
    for i, b in enumerate(blocks):
        for v in b:
            lookup[v] = i
    return sum(
        1
        for u, v in G.edges
        if u in lookup and v in lookup and lookup[u] != lookup[v]
    )


def adjacent_number_def(G, Z, blocks):
    neighbours = {v: set() for v in range(G.n)}
    for u, v in G.edges:
        neighbours[u].add(v)
        neighbours[v].add(u)
    return sum(sum(1 for z in Z if neighbours[z] & set(b)) for b in blocks)


def sparse_by_def(G, F):
    return all(
        induced(G, F, X) <= 2 * len(X) - 3 for X in iter_subsets(range(G.n), 2)
    )


def forest_by_def(G, F):
    """Acyclic iff every vertex subset induces at most |X| - 1 edges of F."""
    return all(
        induced(G, F, X) <= len(X) - 1 for X in iter_subsets(range(G.n), 2)
    )


def max_sparse_subset_size(G, F):
    F = sorted(F)
    for r in range(len(F), 0, -1):
        for combo in itertools.combinations(F, r):
            if sparse_by_def(G, combo):
                return r
    return 0


def graphic_rank_def(G, F):
    adj = {v: [] for v in range(G.n)}
    for e in F:
        u, v = G.edges[e]
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    comps = 0
    for s in range(G.n):
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return G.n - comps


def union_rank_def(G, k, l):
    """Rank formula evaluated with the definitional ranks (tiny m only)."""
    best = None
    for F in iter_subsets(range(G.m)):
        val = (
            k * max_sparse_subset_size(G, F)
            + l * graphic_rank_def(G, F)
            + (G.m - len(F))
        )
        if best is None or val < best:
            best = val
    return best


def collection_rank_min(G, F):
    """Minimum of sum(2|X| - 3) over collections whose induced edge sets
    partition F (the closed-form rigidity rank, for tiny F)."""
    F = sorted(F)
    if not F:
        return 0
    best = None
    for part in set_partitions(F):
        total = 0
        ok = True
        for group in part:
            supp = set()
            for e in group:
                supp.update(G.edges[e])
            if sorted(e for e in F if G.edges[e][0] in supp and G.edges[e][1] in supp) != sorted(group):
                ok = False
                break
            total += 2 * len(supp) - 3
        if ok and (best is None or total < best):
            best = total
    return best


def sparse_cover_def(G, k):
    return all(
        induced(G, range(G.m), X) <= k * (2 * len(X) - 3)
        for X in iter_subsets(range(G.n), 2)
    )


def forest_cover_def(G, l):
    return all(
        induced(G, range(G.m), X) <= l * (len(X) - 1)
        for X in iter_subsets(range(G.n), 1)
    )


def tree_packing_def(G, l):
    return all(
        cross(G, part) >= l * (len(part) - 1)
        for part in set_partitions(range(G.n))
    )


def parthm_def(G, k, l):
    vertices = set(range(G.n))
    for Z in iter_subsets(vertices):
        if len(Z) == G.n:
            continue
        for part in set_partitions(vertices - Z):
            n0 = sum(1 for b in part if len(b) == 1)
            nz = adjacent_number_def(G, Z, part)
            if cross(G, part) < (3 * k + l) * (len(part) - 1) - k * n0 - k * nz:
                return False
    return True


def necessary_def(G, k, l):
    for part in set_partitions(range(G.n)):
        n0 = sum(1 for b in part if len(b) == 1)
        if cross(G, part) < (3 * k + l) * (len(part) - 1) - k * n0:
            return False
    return True


def gamma_def(G):
    return max(
        Fraction(induced(G, range(G.m), X), len(X) - 1)
        for X in iter_subsets(range(G.n), 2)
    )


def gamma2_def(G):
    return max(
        Fraction(induced(G, range(G.m), X), 2 * len(X) - 3)
        for X in iter_subsets(range(G.n), 2)
    )


def edge_conn_within_def(G, W):
    W = sorted(W)
    if len(W) <= 1:
        return None
    inside = [(u, v) for u, v in G.edges if u in W and v in W]
    best = None
    for r in range(len(W) - 1):
        for combo in itertools.combinations(W[1:], r):
            S = set(combo) | {W[0]}
            cut = sum(1 for u, v in inside if (u in S) != (v in S))
            if best is None or cut < best:
                best = cut
    return best


def pq_connected_def(G, p, q):
    if G.n * q <= p:
        return False
    vertices = set(range(G.n))
    for X in iter_subsets(vertices):
        if len(X) == G.n:
            continue
        need = p - q * len(X)
        if need <= 0:
            continue
        lam = edge_conn_within_def(G, vertices - X)
        if lam is not None and lam < need:
            return False
    return True


def bracket_pc_def(G, p, q):
    if G.n * q <= p:
        return False
    vertices = set(range(G.n))
    for Z in iter_subsets(vertices):
        if len(Z) == G.n:
            continue
        for part in set_partitions(vertices - Z):
            if cross(G, part) < p * (len(part) - 1) - q * adjacent_number_def(G, Z, part):
                return False
    return True


def essential_def(G):
    if G.n <= 3:
        return None
    vals = []
    for S in iter_subsets(range(G.n), 2):
        if 0 not in S or G.n - len(S) < 2:
            continue
        vals.append(cross(G, [sorted(S), sorted(set(range(G.n)) - S)]))
    return min(vals)


def kwz_def(G, k, d):
    d = Fraction(d)
    return all(
        (k + 1) * (k + d) * len(X) - (k + d + 1) * induced(G, range(G.m), X) - k * k >= 0
        for X in iter_subsets(range(G.n), 1)
    )


def two_connected_def(G):
    """Connected, n >= 3, and still connected after removing any vertex."""
    if G.n < 3 or not _connected_def(G, set(range(G.n))):
        return False
    return all(_connected_def(G, set(range(G.n)) - {v}) for v in range(G.n))


def _connected_def(G, W):
    if not W:
        return True
    adj = {v: set() for v in W}
    for u, v in G.edges:
        if u in W and v in W:
            adj[u].add(v)
            adj[v].add(u)
    start = next(iter(W))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == W


def bounded_split_exists_def(G, d):
    """Is there an acyclic T with the remaining edges of max degree <= d?"""
    for T in iter_subsets(range(G.m)):
        if not forest_by_def(G, T):
            continue
        deg = [0] * G.n
        for e in range(G.m):
            if e not in T:
                u, v = G.edges[e]
                deg[u] += 1
                deg[v] += 1
        if not deg or max(deg) <= d:
            return True
    return False
