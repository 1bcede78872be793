"""Fan and star detection, multipartite matchings, and constructive fan extension.

A fan F_k is a center joined to every vertex of a k-edge matching, so fan
detection reduces to matching numbers of neighborhoods. find_fan is exact
but certifies most vertices cheaply: a greedy matching witnesses presence,
and a bipartition side count or a greedy vertex cover witnesses absence,
with the blossom matcher as the fallback arbiter.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FanExtensionError, SizeGuardError
from .graphs import (
    BLUE,
    RED,
    Graph,
    MultipartiteSpec,
    TwoColoring,
    induced,
    opposite,
)
from .matching import Matching, max_matching


@dataclass(frozen=True)
class FanWitness:
    """A fan certificate: center vertex plus the spoke matching."""

    center: int
    spokes: tuple[tuple[int, int], ...]

    def __init__(self, center: int, spokes: Iterable[tuple[int, int]]):
        normalized = tuple(sorted((min(u, v), max(u, v)) for u, v in spokes))
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "spokes", normalized)

    @property
    def k(self) -> int:
        return len(self.spokes)

    def to_json_dict(self) -> dict:
        return {"center": self.center, "spokes": [list(e) for e in self.spokes]}


def validate_fan_witness(g: Graph, w: FanWitness, k: int | None = None) -> None:
    """Check distinctness, center adjacency, spoke adjacency, and disjointness."""
    if k is not None and w.k != k:
        raise ValueError(f"witness has {w.k} spokes, expected {k}")
    vertices = [w.center]
    for u, v in w.spokes:
        vertices.append(u)
        vertices.append(v)
    if len(set(vertices)) != len(vertices):
        raise ValueError("fan vertices are not distinct")
    for u, v in w.spokes:
        if not g.has_edge(u, v):
            raise ValueError(f"spoke pair ({u}, {v}) not adjacent")
        if not g.has_edge(w.center, u) or not g.has_edge(w.center, v):
            raise ValueError(f"center {w.center} not adjacent to spoke ({u}, {v})")


def _map_witness(w: FanWitness, mapping: Sequence[int]) -> FanWitness:
    return FanWitness(mapping[w.center],
                      [(mapping[u], mapping[v]) for u, v in w.spokes])


# ---------------------------------------------------------------------------
# Fan detection
# ---------------------------------------------------------------------------

def _fan_at(g: Graph, v: int, k: int) -> FanWitness | None:
    """Exact test for a k-edge matching inside N(v), cheap certificates first."""
    hood = g.neighbors(v)
    hood_set = g.neighbor_set(v)
    local = {u: g.neighbor_set(u) & hood_set for u in hood}

    used: set[int] = set()
    greedy: list[tuple[int, int]] = []
    for u in hood:
        if u in used:
            continue
        for w in sorted(local[u]):
            if w > u and w not in used:
                greedy.append((u, w))
                used.add(u)
                used.add(w)
                break
        if len(greedy) >= k:
            return FanWitness(v, greedy[:k])

    # Absence certificate 1: per-component bipartition side counts.
    side = {}
    bipartite = True
    bound = 0
    for s in hood:
        if s in side or not local[s]:
            continue
        side[s] = 0
        counts = [1, 0]
        stack = [s]
        while stack and bipartite:
            x = stack.pop()
            for y in local[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    counts[side[y]] += 1
                    stack.append(y)
                elif side[y] == side[x]:
                    bipartite = False
                    break
        if not bipartite:
            break
        bound += min(counts)
    if bipartite:
        if bound < k:
            return None
    else:
        # Absence certificate 2: a vertex cover of size < k bounds the matching.
        work = {u: set(nb) for u, nb in local.items() if nb}
        cover = 0
        while work and cover < k:
            u = max(work, key=lambda x: (len(work[x]), -x))
            for y in work[u]:
                work[y].discard(u)
                if not work[y]:
                    del work[y]
            del work[u]
            cover += 1
        if cover < k:
            return None

    sub, mapping = induced(g, hood)
    mm = max_matching(sub)
    if mm.size >= k:
        # the matching lives in subgraph ids; v is already an original id
        return FanWitness(v, [(mapping[a], mapping[b]) for a, b in mm.edges[:k]])
    return None


def find_fan(g: Graph, k: int) -> FanWitness | None:
    """Witness for F_k in g, or None when no vertex neighborhood holds k disjoint edges.

    Vertices are scanned in descending degree order and a center needs
    degree at least 2k, so the scan stops at the first small degree.
    """
    if k < 1:
        raise ValueError("fan size must be positive")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for v in order:
        if g.degree(v) < 2 * k:
            break
        w = _fan_at(g, v, k)
        if w is not None:
            validate_fan_witness(g, w, k)
            return w
    return None


def find_mono_fan(k: TwoColoring, n: int) -> tuple[str, FanWitness] | None:
    """First monochromatic F_n over both color graphs, red scanned first."""
    if n < 1:
        raise ValueError("fan size must be positive")
    w = find_fan(k.red, n)
    if w is not None:
        return RED, w
    w = find_fan(k.blue, n)
    if w is not None:
        return BLUE, w
    return None


def max_blue_star(k: TwoColoring) -> tuple[int, int]:
    """Vertex of maximum blue degree; a blue K_{1,m} exists iff that degree >= m."""
    best_v = 0
    best_d = -1
    for v in range(k.n):
        d = k.degree(v, BLUE)
        if d > best_d:
            best_v, best_d = v, d
    return best_v, max(best_d, 0)


# ---------------------------------------------------------------------------
# Matchings in complete multipartite graphs
# ---------------------------------------------------------------------------

def multipartite_matching_bound(spec: MultipartiteSpec) -> int:
    """Vertices covered by a maximum matching of the complete multipartite graph."""
    if spec.t < 2:
        raise ValueError("need at least two parts")
    sizes = spec.part_sizes
    total = spec.total
    if spec.t == 2:
        return 2 * sizes[0]
    if 2 * sizes[-1] <= total:
        return 2 * (total // 2)
    return 2 * (total - sizes[-1])


def multipartite_matching(parts: Sequence[Iterable[int]]) -> list[tuple[int, int]]:
    """Maximum matching between given parts, pairing the two largest each round."""
    pools = [deque(sorted(p)) for p in parts]
    sizes = sorted(len(p) for p in pools)
    edges: list[tuple[int, int]] = []
    while True:
        order = sorted(range(len(pools)), key=lambda i: (-len(pools[i]), i))
        if len(order) < 2 or not pools[order[1]]:
            break
        u = pools[order[0]].popleft()
        w = pools[order[1]].popleft()
        edges.append((min(u, w), max(u, w)))
    total = sum(sizes)
    expect = min(total // 2, total - sizes[-1]) if sizes else 0
    if len(edges) != expect:
        raise AssertionError("multipartite pairing fell short of the matching number")
    return edges


# ---------------------------------------------------------------------------
# Fan extension
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FanExtensionInstance:
    """Host graph with blocks X_1..X_p, Y, Z; X u Y induces a complete multipartite graph.

    q = 2n - (|X| + |Y|) measures how many spokes must come from Z.
    """

    host: Graph
    x_parts: tuple[frozenset[int], ...]
    y: frozenset[int]
    z: frozenset[int]
    lam: float
    n: int

    def __init__(self, host: Graph, x_parts: Sequence[Iterable[int]],
                 y: Iterable[int], z: Iterable[int], lam: float, n: int):
        x_parts = tuple(frozenset(p) for p in x_parts)
        y = frozenset(y)
        z = frozenset(z)
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "x_parts", x_parts)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "lam", float(lam))
        object.__setattr__(self, "n", int(n))
        self._validate()

    def _validate(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.lam < 1:
            raise ValueError("lambda must be at least 1")
        if not self.x_parts or any(not p for p in self.x_parts):
            raise ValueError("every X part must be non-empty")
        blocks = list(self.x_parts) + [self.y, self.z]
        union: set[int] = set()
        total = 0
        for b in blocks:
            union |= b
            total += len(b)
        if total != len(union) or union != set(range(self.host.n)):
            raise ValueError("blocks must be disjoint and cover the vertex set")
        for p in self.x_parts:
            if len(p) > self.lam:
                raise ValueError(f"part of size {len(p)} exceeds lambda={self.lam}")
        if len(self.x) + len(self.y) <= self.n:
            raise ValueError("|X| + |Y| must exceed n")
        parts = list(self.x_parts) + ([self.y] if self.y else [])
        member = {}
        for idx, p in enumerate(parts):
            for u in p:
                member[u] = idx
        for u in sorted(member):
            for w in sorted(member):
                if u < w:
                    expect = member[u] != member[w]
                    if self.host.has_edge(u, w) != expect:
                        raise ValueError(
                            f"X u Y not complete multipartite at pair ({u}, {w})")

    @property
    def x(self) -> frozenset[int]:
        out: set[int] = set()
        for p in self.x_parts:
            out |= p
        return frozenset(out)

    @property
    def q(self) -> int:
        return 2 * self.n - (len(self.x) + len(self.y))


def _coverage(m: Matching, block: frozenset[int]) -> int:
    return sum(1 for e in m.edges for u in e if u in block)


def _audit_extension(inst: FanExtensionInstance, case: str, v: int, m: Matching) -> int:
    """Check every case hypothesis, collecting one message per failure."""
    failures = []
    part_index = next((i for i, p in enumerate(inst.x_parts) if v in p), None)
    if part_index is None:
        failures.append(f"v={v} does not lie in X")
        raise FanExtensionError(failures)
    try:
        m.validate(inst.host)
    except ValueError as exc:
        failures.append(f"matching invalid: {exc}")
    nv_z = inst.host.neighbor_set(v) & inst.z
    cross_block = (inst.x | inst.y) if case == "i" else inst.y
    for u, w in m.edges:
        if u in nv_z and w in nv_z:
            continue
        if (u in nv_z and w in cross_block) or (w in nv_z and u in cross_block):
            continue
        failures.append(f"edge ({u}, {w}) outside G[N(v) cap Z, "
                        f"{'X u Y' if case == 'i' else 'Y'}] u G[N(v) cap Z]")
    q = inst.q
    lam = inst.lam
    x_size = len(inst.x)
    y_size = len(inst.y)
    if case == "i":
        if not x_size > inst.n + lam:
            failures.append(f"case (i) needs |X| > n + lambda: {x_size} <= {inst.n + lam}")
        zc = _coverage(m, inst.z)
        if not zc > q + 2 * lam:
            failures.append(f"case (i) needs Z coverage > q + 2*lambda: {zc} <= {q + 2 * lam}")
    elif case == "ii":
        if not y_size <= inst.n:
            failures.append(f"case (ii) needs |Y| <= n: {y_size} > {inst.n}")
        yzc = _coverage(m, inst.y | inst.z)
        if not yzc > 2 * (q + lam):
            failures.append(f"case (ii) needs Y u Z coverage > 2(q + lambda): "
                            f"{yzc} <= {2 * (q + lam)}")
    elif case == "iii":
        if not y_size >= inst.n:
            failures.append(f"case (iii) needs |Y| >= n: {y_size} < {inst.n}")
        yzc = _coverage(m, inst.y | inst.z)
        if not yzc >= 2 * (inst.n - x_size + lam):
            failures.append(f"case (iii) needs Y u Z coverage >= 2(n - |X| + lambda): "
                            f"{yzc} < {2 * (inst.n - x_size + lam)}")
    else:
        raise ValueError(f"case must be 'i', 'ii', or 'iii', got {case!r}")
    if failures:
        raise FanExtensionError(failures)
    return part_index


def _fan_within_multipartite(inst: FanExtensionInstance) -> FanWitness | None:
    """Fan inside the complete multipartite graph on X u Y, if one fits."""
    parts = [sorted(p) for p in inst.x_parts]
    if inst.y:
        parts.append(sorted(inst.y))
    sizes = [len(p) for p in parts]
    total = sum(sizes)
    for idx, part in enumerate(parts):
        rest = total - sizes[idx]
        largest = max(s for i, s in enumerate(sizes) if i != idx) if len(sizes) > 1 else 0
        if min(rest // 2, rest - largest) >= inst.n:
            center = part[0]
            spokes = multipartite_matching([p for i, p in enumerate(parts) if i != idx])
            return FanWitness(center, spokes[:inst.n])
    return None


def _take_by_z_coverage(edges: Sequence[tuple[int, int]], z: frozenset[int],
                        target: int) -> list[tuple[int, int]]:
    """Internal-first prefix reaching the requested Z coverage."""
    internal = sorted(e for e in edges if e[0] in z and e[1] in z)
    cross = sorted(e for e in edges if (e[0] in z) != (e[1] in z))
    taken = []
    covered = 0
    for e in internal + cross:
        if covered >= target:
            break
        taken.append(e)
        covered += (e[0] in z) + (e[1] in z)
    return taken


def _take_count(edges: Sequence[tuple[int, int]], z: frozenset[int],
                count: int) -> list[tuple[int, int]]:
    internal = sorted(e for e in edges if e[0] in z and e[1] in z)
    cross = sorted(e for e in edges if not (e[0] in z and e[1] in z))
    picked = (internal + cross)[:count]
    if len(picked) < count:
        raise AssertionError(f"matching too small: need {count} edges, have {len(edges)}")
    return picked


def fan_extend(inst: FanExtensionInstance, case: str, v: int, m: Matching) -> FanWitness:
    """Assemble an F_n witness from a qualifying matching, following the proof.

    The matching is trimmed to the case's prescribed size, v's own part is
    removed, and the spokes are completed by a matching in the residual
    complete multipartite graph. The result is validated structurally.
    """
    part_index = _audit_extension(inst, case, v, m)
    xi = inst.x_parts[part_index]
    q = inst.q
    n = inst.n

    taken: list[tuple[int, int]]
    if case == "i":
        usable = [e for e in m.edges if e[0] not in xi and e[1] not in xi]
        if q < 0:
            w = _fan_within_multipartite(inst)
            if w is not None:
                validate_fan_witness(inst.host, w, n)
                return w
        taken = _take_by_z_coverage(usable, inst.z, max(0, q + len(xi) + 1))
        taken_set = set(taken)
        leftovers = [e for e in usable if e not in taken_set]
    elif case == "ii":
        taken = _take_count(m.edges, inst.z, max(0, q + len(xi) + 1))
        taken_set = set(taken)
        leftovers = [e for e in m.edges if e not in taken_set]
    else:
        taken = _take_count(m.edges, inst.z, max(0, n - len(inst.x) + len(xi)))
        taken_set = set(taken)
        leftovers = [e for e in m.edges if e not in taken_set]

    used = {v} | {x for e in taken for x in e}
    residual_parts = [sorted(p - used) for i, p in enumerate(inst.x_parts) if i != part_index]
    residual_parts.append(sorted(inst.y - used))
    spokes = list(taken)
    spokes.extend(multipartite_matching(residual_parts))
    used.update(x for e in spokes for x in e)
    for e in leftovers:
        if len(spokes) >= n:
            break
        if e[0] not in used and e[1] not in used:
            spokes.append(e)
            used.add(e[0])
            used.add(e[1])
    if len(spokes) < n:
        raise FanExtensionError(
            [f"assembled only {len(spokes)} of {n} spokes; hypotheses too tight"])
    w = FanWitness(v, spokes[:n])
    validate_fan_witness(inst.host, w, n)
    return w


def find_extension_matching(inst: FanExtensionInstance, case: str, v: int) -> Matching:
    """Convenience search for a candidate M: maximum matching of the allowed edges."""
    if case not in ("i", "ii", "iii"):
        raise ValueError(f"case must be 'i', 'ii', or 'iii', got {case!r}")
    nv_z = inst.host.neighbor_set(v) & inst.z
    cross_block = (inst.x | inst.y) if case == "i" else inst.y
    edges = []
    for u in sorted(nv_z):
        for w in inst.host.neighbors(u):
            if w in nv_z and w > u:
                edges.append((u, w))
            elif w in cross_block:
                edges.append((u, w))
    allowed = Graph(inst.host.n, edges)
    return max_matching(allowed)


# ---------------------------------------------------------------------------
# High-degree fans and the cycle oracle
# ---------------------------------------------------------------------------

def high_degree_fan(k: TwoColoring, n: int) -> tuple[str, FanWitness] | None:
    """Monochromatic F_n found through a vertex of monochromatic degree >= 3n.

    Returns None when no vertex qualifies (the precondition is data). When
    one qualifies, a fan must exist; exhausting every search path without
    one would disprove the guarantee, so that raises.
    """
    if n < 1:
        raise ValueError("fan size must be positive")
    qualifying = [(v, color) for v in range(k.n) for color in (RED, BLUE)
                  if k.degree(v, color) >= 3 * n]
    if not qualifying:
        return None
    for v, color in qualifying:
        hood = k.neighbors(v, color)
        sub, mapping = induced(k.graph(color), hood)
        mm = max_matching(sub)
        if mm.size >= n:
            w = FanWitness(v, [(mapping[a], mapping[b]) for a, b in mm.edges[:n]])
            validate_fan_witness(k.graph(color), w, n)
            return color, w
        other = opposite(color)
        osub, omapping = induced(k.graph(other), hood)
        w = find_fan(osub, n)
        if w is not None:
            mapped = _map_witness(w, omapping)
            validate_fan_witness(k.graph(other), mapped, n)
            return other, mapped
    result = find_mono_fan(k, n)
    if result is None:
        raise RuntimeError("degree 3n vertex present but no monochromatic fan found")
    return result


CYCLE_VERTEX_GUARD = 12


def cycle_oracle(g: Graph, length: int) -> bool:
    """Exhaustive test for a cycle of the given length."""
    if g.n > CYCLE_VERTEX_GUARD:
        raise SizeGuardError(f"cycle oracle limited to {CYCLE_VERTEX_GUARD} vertices, got {g.n}")
    if length < 3 or length > g.n:
        return False

    def dfs(start: int, v: int, depth: int, visited: set[int]) -> bool:
        if depth == length:
            return g.has_edge(v, start)
        for u in g.neighbors(v):
            if u > start and u not in visited:
                visited.add(u)
                if dfs(start, u, depth + 1, visited):
                    return True
                visited.remove(u)
        return False

    for start in range(g.n):
        if dfs(start, start, 1, {start}):
            return True
    return False
