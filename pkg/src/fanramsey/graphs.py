"""Graph, two-coloring, and multipartite primitives shared by the rest of the package."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError

RED = "red"
BLUE = "blue"
COLORS = (RED, BLUE)

EDGELIST = "edgelist"
GRAPH6 = "graph6"
FORMATS = (EDGELIST, GRAPH6)

# graph6 long form tops out at 2^18 - 1 vertices; plenty for desk scale.
_GRAPH6_MAX_N = 258047


def opposite(color: str) -> str:
    """The other color of a 2-coloring."""
    if color == RED:
        return BLUE
    if color == BLUE:
        return RED
    raise ValueError(f"unknown color {color!r}")


class Graph:
    """Simple undirected graph on dense vertex ids 0..n-1.

    Immutable after construction. Neighbor queries return sorted tuples so
    every scan over a graph is deterministic.
    """

    __slots__ = ("n", "_sets", "_sorted")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self._sets = tuple(frozenset(s) for s in sets)
        self._sorted = tuple(tuple(sorted(s)) for s in sets)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._sorted[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self._sets[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._sets)

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        return min(self.degrees())

    def max_degree(self) -> int:
        if self.n == 0:
            return 0
        return max(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._sorted[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self._sets) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._sets == other._sets

    def __hash__(self) -> int:
        return hash((self.n, self._sets))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def validate_graph(g: Graph) -> None:
    """Assert adjacency symmetry, loop-freeness, and id range; used by tests."""
    for v in range(g.n):
        for u in g.neighbors(v):
            if not 0 <= u < g.n:
                raise AssertionError(f"neighbor {u} of {v} out of range")
            if u == v:
                raise AssertionError(f"self-loop at {v}")
            if v not in g.neighbor_set(u):
                raise AssertionError(f"asymmetric edge ({v}, {u})")


def complement(g: Graph) -> Graph:
    """Graph with an edge exactly where g has none."""
    edges = []
    for u in range(g.n):
        s = g.neighbor_set(u)
        edges.extend((u, v) for v in range(u + 1, g.n) if v not in s)
    return Graph(g.n, edges)


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph relabeled to 0..|S|-1.

    Returns the subgraph together with the relabeling map: entry i is the
    original id of new vertex i. Vertices are taken in ascending order.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for {g.n} vertices")
    index = {v: i for i, v in enumerate(keep)}
    member = set(keep)
    edges = []
    for v in keep:
        for u in g.neighbors(v):
            if u > v and u in member:
                edges.append((index[v], index[u]))
    return Graph(len(keep), edges), tuple(keep)


@dataclass(frozen=True)
class MultipartiteSpec:
    """Part sizes of a complete multipartite graph, kept sorted ascending."""

    part_sizes: tuple[int, ...]

    def __init__(self, part_sizes: Sequence[int]):
        sizes = tuple(sorted(part_sizes))
        if not sizes:
            raise ValueError("at least one part required")
        if any(s < 1 for s in sizes):
            raise ValueError("all part sizes must be positive")
        object.__setattr__(self, "part_sizes", sizes)

    @property
    def t(self) -> int:
        return len(self.part_sizes)

    @property
    def total(self) -> int:
        return sum(self.part_sizes)

    def part_ranges(self) -> list[range]:
        """Vertex blocks in part order: part i occupies the i-th range."""
        ranges = []
        start = 0
        for s in self.part_sizes:
            ranges.append(range(start, start + s))
            start += s
        return ranges


def build_complete_multipartite(spec: MultipartiteSpec) -> Graph:
    """Complete multipartite graph with vertex blocks laid out in part order."""
    ranges = spec.part_ranges()
    edges = []
    for i, ri in enumerate(ranges):
        for rj in ranges[i + 1:]:
            edges.extend((u, v) for u in ri for v in rj)
    return Graph(spec.total, edges)


class TwoColoring:
    """Red/blue edge coloring of a complete graph, stored as the red graph.

    The blue graph is the complement view, computed once on demand, so the
    two colors can never disagree.
    """

    __slots__ = ("n", "red", "_blue")

    def __init__(self, n: int, red: Graph):
        if red.n != n:
            raise ValueError(f"red graph has {red.n} vertices, expected {n}")
        self.n = n
        self.red = red
        self._blue: Graph | None = None

    @classmethod
    def from_red_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "TwoColoring":
        return cls(n, Graph(n, edges))

    @property
    def blue(self) -> Graph:
        if self._blue is None:
            self._blue = complement(self.red)
        return self._blue

    def graph(self, color: str) -> Graph:
        if color == RED:
            return self.red
        if color == BLUE:
            return self.blue
        raise ValueError(f"unknown color {color!r}")

    def color_of(self, u: int, v: int) -> str:
        if u == v:
            raise ValueError("no color on a vertex pair (u, u)")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"pair ({u}, {v}) out of range")
        return RED if self.red.has_edge(u, v) else BLUE

    def neighbors(self, v: int, color: str) -> tuple[int, ...]:
        return self.graph(color).neighbors(v)

    def degree(self, v: int, color: str) -> int:
        if color == RED:
            return self.red.degree(v)
        if color == BLUE:
            return self.n - 1 - self.red.degree(v)
        raise ValueError(f"unknown color {color!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoColoring):
            return NotImplemented
        return self.n == other.n and self.red == other.red

    def __hash__(self) -> int:
        return hash((self.n, self.red))

    def __repr__(self) -> str:
        return f"TwoColoring(n={self.n}, red_edges={self.red.edge_count()})"


# ---------------------------------------------------------------------------
# graph6 codec (standard ASCII encoding, one graph per line)
# ---------------------------------------------------------------------------

def graph6_encode(g: Graph) -> str:
    if g.n > _GRAPH6_MAX_N:
        raise ValueError(f"graph6 supports at most {_GRAPH6_MAX_N} vertices")
    if g.n <= 62:
        header = [g.n + 63]
    else:
        header = [126,
                  ((g.n >> 12) & 63) + 63,
                  ((g.n >> 6) & 63) + 63,
                  (g.n & 63) + 63]
    bits = []
    for v in range(1, g.n):
        row = g.neighbor_set(v)
        bits.extend(1 if u in row else 0 for u in range(v))
    body = []
    for i in range(0, len(bits), 6):
        group = bits[i:i + 6]
        group += [0] * (6 - len(group))
        value = 0
        for bit in group:
            value = (value << 1) | bit
        body.append(value + 63)
    return "".join(chr(c) for c in header + body)


def graph6_decode(text: str) -> Graph:
    data = [ord(c) - 63 for c in text.strip()]
    for pos, value in enumerate(data):
        if not 0 <= value <= 63:
            raise ParseError(f"invalid graph6 byte at position {pos}")
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] == 63:
        if len(data) < 4:
            raise ParseError("truncated graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = n * (n - 1) // 2
    if len(body) * 6 < need:
        raise ParseError(f"graph6 body too short: {len(body) * 6} bits, need {need}")
    bits = []
    for value in body:
        for shift in range(5, -1, -1):
            bits.append((value >> shift) & 1)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# File I/O
# ---------------------------------------------------------------------------

def write_graph(g: Graph, path: str | os.PathLike, fmt: str = EDGELIST) -> None:
    """Write a graph file; edge list carries '# n=K' so order round-trips."""
    if fmt == EDGELIST:
        lines = [f"# n={g.n}"]
        lines.extend(f"{u} {v}" for u, v in g.edges())
        text = "\n".join(lines) + "\n"
    elif fmt == GRAPH6:
        text = graph6_encode(g) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def read_graph(path: str | os.PathLike, fmt: str = EDGELIST) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if fmt == EDGELIST:
        return _parse_edgelist(text, str(path))
    if fmt == GRAPH6:
        line = text.strip()
        if not line:
            raise ParseError(f"{path}: empty graph6 file")
        return graph6_decode(line.splitlines()[0])
    raise ValueError(f"unknown format {fmt!r}")


def _parse_edgelist(text: str, origin: str) -> Graph:
    declared_n: int | None = None
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comment = line[1:].strip()
            if comment.startswith("n=") and declared_n is None:
                try:
                    declared_n = int(comment[2:])
                except ValueError:
                    raise ParseError(f"{origin}:{lineno}: bad vertex count {comment!r}") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"{origin}:{lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"{origin}:{lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"{origin}:{lineno}: negative vertex id in {raw!r}")
        if u == v:
            raise ParseError(f"{origin}:{lineno}: loop {u} {v} rejected")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"{origin}:{lineno}: duplicate edge {u} {v}")
        seen.add(key)
        pairs.append(key)
        max_id = max(max_id, u, v)
    n = declared_n if declared_n is not None else max_id + 1
    if max_id >= n:
        raise ParseError(f"{origin}: vertex {max_id} exceeds declared n={n}")
    return Graph(n, pairs)


def write_coloring(k: TwoColoring, path: str | os.PathLike, fmt: str = EDGELIST) -> None:
    """Store a coloring as its red graph; blue is implied by complement."""
    write_graph(k.red, path, fmt)


def read_coloring(path: str | os.PathLike, fmt: str = EDGELIST) -> TwoColoring:
    red = read_graph(path, fmt)
    return TwoColoring(red.n, red)
