"""Maximum matchings, deficiency, Konig covers, and Edmonds-Gallai structure.

Every algorithm scans vertices and neighbors in ascending id order so that
returned witnesses are reproducible. Small-instance oracles (brute_matching,
enumerate_maximum_matchings) back the fast paths in tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import SizeGuardError
from .graphs import Graph, TwoColoring, induced, opposite

BRUTE_VERTEX_GUARD = 24


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, normalized and sorted."""

    edges: tuple[tuple[int, int], ...]

    def __init__(self, edges: Iterable[tuple[int, int]]):
        normalized = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
        object.__setattr__(self, "edges", normalized)

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def validate(self, g: Graph) -> None:
        seen: set[int] = set()
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise ValueError(f"matching edge ({u}, {v}) not in graph")
            if u in seen or v in seen:
                raise ValueError(f"matching edge ({u}, {v}) shares a vertex")
            seen.add(u)
            seen.add(v)


@dataclass(frozen=True)
class VertexCover:
    """Vertex set covering every edge of a host bipartite graph."""

    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class EGPartition:
    """Edmonds-Gallai sets: A (cut), C (even side), D_1..D_p (odd components)."""

    A: frozenset[int]
    C: frozenset[int]
    D: tuple[frozenset[int], ...]
    p: int
    deficiency: int
    nu: int

    def to_json_dict(self) -> dict:
        return {
            "A": sorted(self.A),
            "C": sorted(self.C),
            "D": [sorted(d) for d in self.D],
            "p": self.p,
            "deficiency": self.deficiency,
            "nu": self.nu,
        }


# ---------------------------------------------------------------------------
# Maximum matching (blossom contraction)
# ---------------------------------------------------------------------------

def _find_augmenting_path(g: Graph, match: list[int], parent: list[int], root: int) -> int:
    """BFS for an augmenting path from root, contracting blossoms via base[].

    Returns the free endpoint of the path, or -1 when none exists.
    """
    n = g.n
    used = [False] * n
    parent[:] = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        on_path = set()
        x = a
        while True:
            x = base[x]
            on_path.add(x)
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if y in on_path:
                return y
            y = parent[match[y]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in g.neighbors(v):
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                curbase = lca(v, to)
                blossom = [False] * n
                mark_path(v, curbase, to, blossom)
                mark_path(to, curbase, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = curbase
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to
                used[match[to]] = True
                queue.append(match[to])
    return -1


def max_matching(g: Graph) -> Matching:
    """Maximum matching in a general graph, deterministic ascending-id scans."""
    n = g.n
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in g.neighbors(v):
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    parent = [-1] * n
    for v in range(n):
        if match[v] == -1:
            end = _find_augmenting_path(g, match, parent, v)
            while end != -1:
                prev = parent[end]
                after = match[prev]
                match[end] = prev
                match[prev] = end
                end = after
    return Matching((v, match[v]) for v in range(n) if match[v] > v)


def matching_number(g: Graph) -> int:
    return max_matching(g).size


# ---------------------------------------------------------------------------
# Exhaustive oracles
# ---------------------------------------------------------------------------

def brute_matching(g: Graph) -> Matching:
    """Maximum matching by bitmask DP; guard keeps the state space honest."""
    if g.n > BRUTE_VERTEX_GUARD:
        raise SizeGuardError(f"brute_matching limited to {BRUTE_VERTEX_GUARD} vertices, got {g.n}")
    adj = [0] * g.n
    for v in range(g.n):
        for u in g.neighbors(v):
            adj[v] |= 1 << u

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        v = (mask & -mask).bit_length() - 1
        result = best(mask & ~(1 << v))
        avail = adj[v] & mask
        while avail:
            u = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            result = max(result, 1 + best(mask & ~(1 << v) & ~(1 << u)))
        return result

    edges: list[tuple[int, int]] = []
    mask = (1 << g.n) - 1
    while mask:
        v = (mask & -mask).bit_length() - 1
        target = best(mask)
        if best(mask & ~(1 << v)) == target:
            mask &= ~(1 << v)
            continue
        avail = adj[v] & mask
        while avail:
            u = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            if 1 + best(mask & ~(1 << v) & ~(1 << u)) == target:
                edges.append((v, u))
                mask &= ~(1 << v) & ~(1 << u)
                break
    best.cache_clear()
    return Matching(edges)


def enumerate_maximum_matchings(g: Graph) -> list[Matching]:
    """All maximum matchings, by branching on the lowest undecided vertex."""
    if g.n > 16:
        raise SizeGuardError(f"enumeration limited to 16 vertices, got {g.n}")
    target = brute_matching(g).size
    adj = [0] * g.n
    for v in range(g.n):
        for u in g.neighbors(v):
            adj[v] |= 1 << u
    out: list[Matching] = []

    def rec(mask: int, acc: list[tuple[int, int]]) -> None:
        if len(acc) + bin(mask).count("1") // 2 < target:
            return
        if mask == 0:
            if len(acc) == target:
                out.append(Matching(acc))
            return
        v = (mask & -mask).bit_length() - 1
        rec(mask & ~(1 << v), acc)
        avail = adj[v] & mask
        while avail:
            u = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            acc.append((v, u))
            rec(mask & ~(1 << v) & ~(1 << u), acc)
            acc.pop()

    rec((1 << g.n) - 1, [])
    return sorted(out, key=lambda m: m.edges)


# ---------------------------------------------------------------------------
# Edmonds-Gallai decomposition
# ---------------------------------------------------------------------------

def _components(g: Graph, vertices: Iterable[int]) -> list[frozenset[int]]:
    pool = set(vertices)
    comps = []
    while pool:
        start = min(pool)
        comp = {start}
        queue = deque([start])
        pool.remove(start)
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u in pool:
                    pool.remove(u)
                    comp.add(u)
                    queue.append(u)
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


def edmonds_gallai(g: Graph) -> EGPartition:
    """Decompose via the essential-vertex characterization.

    D is the set of vertices some maximum matching misses, detected as
    nu(G - v) = nu(G); A = N(D) - D; C is the rest. The odd components are
    the components of G - A that meet D.
    """
    nu = max_matching(g).size
    d_set = set()
    for v in range(g.n):
        rest = list(range(g.n))
        rest.remove(v)
        sub, _ = induced(g, rest)
        if max_matching(sub).size == nu:
            d_set.add(v)
    a_set = set()
    for v in d_set:
        a_set.update(u for u in g.neighbors(v) if u not in d_set)
    c_set = set(range(g.n)) - d_set - a_set
    comps = _components(g, set(range(g.n)) - a_set)
    d_comps = []
    for comp in comps:
        inter = comp & d_set
        if inter:
            if inter != comp:
                raise AssertionError("component of G - A mixes D and C vertices")
            d_comps.append(comp)
    deficiency = g.n - 2 * nu
    return EGPartition(
        A=frozenset(a_set),
        C=frozenset(c_set),
        D=tuple(d_comps),
        p=len(d_comps),
        deficiency=deficiency,
        nu=nu,
    )


# ---------------------------------------------------------------------------
# Konig cover
# ---------------------------------------------------------------------------

def konig_cover(g: Graph, sides: tuple[Iterable[int], Iterable[int]], m: Matching) -> VertexCover:
    """Minimum vertex cover from a maximum matching in a bipartite graph.

    Alternating reachability from the unmatched left vertices: the cover is
    (L minus reached) union (R intersect reached), and it meets every
    matching edge exactly once.
    """
    left = frozenset(sides[0])
    right = frozenset(sides[1])
    if left & right or left | right != frozenset(range(g.n)):
        raise ValueError("sides must partition the vertex set")
    for u, v in g.edges():
        if (u in left) == (v in left):
            raise ValueError(f"edge ({u}, {v}) does not cross the bipartition")
    m.validate(g)
    if m.size != max_matching(g).size:
        raise ValueError("matching is not maximum")

    mate = {}
    for u, v in m.edges:
        mate[u] = v
        mate[v] = u
    reached = {v for v in sorted(left) if v not in mate}
    queue = deque(sorted(reached))
    while queue:
        v = queue.popleft()
        if v in left:
            for u in g.neighbors(v):
                if u not in reached and mate.get(v) != u:
                    reached.add(u)
                    queue.append(u)
        else:
            u = mate.get(v)
            if u is not None and u not in reached:
                reached.add(u)
                queue.append(u)
    cover = frozenset((left - reached) | (right & reached))

    if len(cover) != m.size:
        raise AssertionError("cover size differs from matching size")
    for u, v in g.edges():
        if u not in cover and v not in cover:
            raise AssertionError(f"edge ({u}, {v}) uncovered")
    for u, v in m.edges:
        if (u in cover) + (v in cover) != 1:
            raise AssertionError(f"matching edge ({u}, {v}) not covered exactly once")
    return VertexCover(cover)


# ---------------------------------------------------------------------------
# Neighborhood structure in a coloring
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EGNeighborhoodReport:
    """Edmonds-Gallai view of one color class inside a colored neighborhood.

    ``applicable`` is False when the matching inside the neighborhood is
    already large enough to finish a fan, in which case only ``nu`` is
    meaningful. The partition sets carry original vertex ids.
    """

    vertex: int
    color: str
    n: int
    neighborhood: tuple[int, ...]
    nu: int
    applicable: bool
    window_ok: bool
    partition: EGPartition | None = None
    identity_ok: bool | None = None
    component_bound_ok: bool | None = None
    cross_color_ok: bool | None = None

    def to_json_dict(self) -> dict:
        data = {
            "vertex": self.vertex,
            "color": self.color,
            "n": self.n,
            "neighborhood_size": len(self.neighborhood),
            "nu": self.nu,
            "applicable": self.applicable,
            "window_ok": self.window_ok,
        }
        if self.partition is not None:
            data["partition"] = self.partition.to_json_dict()
            data["identity_ok"] = self.identity_ok
            data["component_bound_ok"] = self.component_bound_ok
            data["cross_color_ok"] = self.cross_color_ok
        return data


def eg_neighborhood_structure(k: TwoColoring, v: int, color: str, n: int) -> EGNeighborhoodReport:
    """Decompose G_color restricted to N_color(v) and check the structure facts.

    The hard gate is nu <= n-1; a larger matching makes the report
    inapplicable (that is data, not an error). The order window
    2n <= |N_color(v)| < 3n of the neighborhood the theorem is applied to
    is reported informationally as window_ok.
    """
    if n < 1:
        raise ValueError("n must be positive")
    hood = k.neighbors(v, color)
    window_ok = 2 * n <= len(hood) < 3 * n
    sub, mapping = induced(k.graph(color), hood)
    nu = max_matching(sub).size
    if nu > n - 1:
        return EGNeighborhoodReport(
            vertex=v, color=color, n=n, neighborhood=hood, nu=nu,
            applicable=False, window_ok=window_ok,
        )
    local = edmonds_gallai(sub)
    relabel = lambda s: frozenset(mapping[i] for i in s)
    partition = EGPartition(
        A=relabel(local.A),
        C=relabel(local.C),
        D=tuple(sorted((relabel(d) for d in local.D), key=min)),
        p=local.p,
        deficiency=local.deficiency,
        nu=local.nu,
    )
    half = sum(len(d) - 1 for d in partition.D) + len(partition.C)
    identity_ok = (2 * len(partition.A) + half == 2 * nu) and nu <= n - 1
    component_bound_ok = partition.p >= len(partition.A) + len(hood) - (2 * n - 2)
    other = opposite(color)
    cross_color_ok = True
    blocks = list(partition.D) + [partition.C]
    for i, di in enumerate(partition.D):
        for block in blocks[i + 1:]:
            for x in di:
                for y in block:
                    if k.color_of(x, y) != other:
                        cross_color_ok = False
    return EGNeighborhoodReport(
        vertex=v, color=color, n=n, neighborhood=hood, nu=nu,
        applicable=True, window_ok=window_ok, partition=partition,
        identity_ok=identity_ok, component_bound_ok=component_bound_ok,
        cross_color_ok=cross_color_ok,
    )
