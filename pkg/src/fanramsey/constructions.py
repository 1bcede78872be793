"""Builders for the extremal colorings and fan-free graphs behind the lower bounds.

Every builder verifies its own output before returning: degree audits are
recomputed from the finished graph and fan-freeness is established by the
exact search in the fans module, never assumed from the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, sqrt

from .bigraphic import IntervalRealizationParams, realize_interval
from .errors import UnsupportedRangeError
from .fans import find_fan
from .graphs import Graph, MultipartiteSpec, TwoColoring, build_complete_multipartite


def _block_sizes(m: int, n: int) -> tuple[int, int]:
    """Integer-exact evaluation of the two floor expressions in a, b.

    With s = isqrt(D): floor((x + sqrt(D))/t) = (x + s)//t, and
    floor((x - sqrt(D))/t) = (x - s)//t when D is a perfect square,
    (x - s - 1)//t otherwise.
    """
    d_val = m * m + 8 * n * n
    s = isqrt(d_val)
    a = (m - 2 * n + s) // 2 - 1
    if s * s == d_val:
        b = (4 * n + m - s) // 4 - 1
    else:
        b = (4 * n + m - s - 1) // 4 - 1
    return a, b


@dataclass(frozen=True)
class ConstructionParams:
    """Derived constants and block layout of a star-fan lower-bound coloring."""

    m: int
    n: int
    a: int
    b: int
    sigma: int
    N: int
    x1: range
    x2: range
    y1: range
    y2: range

    def __post_init__(self):
        a, b = _block_sizes(self.m, self.n)
        if (a, b) != (self.a, self.b):
            raise ValueError(f"block sizes ({self.a}, {self.b}) do not match "
                             f"the derived values ({a}, {b})")
        if self.N != 2 * self.a + 2 * self.b:
            raise ValueError("N must equal 2a + 2b")
        if self.sigma != self.m + self.n - 1 - self.a - 2 * self.b:
            raise ValueError("sigma must equal m + n - 1 - a - 2b")
        if not 2 <= self.sigma <= 4:
            raise ValueError(f"sigma={self.sigma} outside [2, 4]")
        blocks = (self.x1, self.x2, self.y1, self.y2)
        expected = (range(0, self.a), range(self.a, 2 * self.a),
                    range(2 * self.a, 2 * self.a + self.b),
                    range(2 * self.a + self.b, self.N))
        if blocks != expected:
            raise ValueError("block ranges inconsistent with a, b, N")

    def to_json_dict(self) -> dict:
        return {
            "m": self.m, "n": self.n, "a": self.a, "b": self.b,
            "sigma": self.sigma, "N": self.N,
            "X1": [self.x1.start, self.x1.stop],
            "X2": [self.x2.start, self.x2.stop],
            "Y1": [self.y1.start, self.y1.stop],
            "Y2": [self.y2.start, self.y2.stop],
        }


def _assemble_star_fan(m: int, n: int, a: int, b: int, sigma: int,
                       sigma_realize: int) -> tuple[TwoColoring, ConstructionParams]:
    if not 2 <= sigma <= 4:
        raise RuntimeError(f"sigma={sigma} outside [2, 4]; derivation bug")
    c = n - 1 - b
    d = n - 1
    try:
        partial = realize_interval(IntervalRealizationParams(a, b, c, d, sigma_realize))
    except ValueError as exc:
        raise RuntimeError(f"interval realization infeasible: {exc}") from exc

    big_n = 2 * a + 2 * b
    x1 = range(0, a)
    x2 = range(a, 2 * a)
    y1 = range(2 * a, 2 * a + b)
    y2 = range(2 * a + b, big_n)
    edges = [(u, w) for u in x1 for w in x2]
    edges += [(u, w) for u in x1 for w in y2]
    edges += [(u, w) for u in x2 for w in y1]
    for u, w in partial.edges():
        i, j = (u, w - a) if u < a else (w, u - a)
        edges.append((x1[i], y1[j]))
        edges.append((x2[i], y2[j]))
    red = Graph(big_n, edges)
    coloring = TwoColoring(big_n, red)

    if red.min_degree() < big_n - m:
        raise RuntimeError(f"red minimum degree {red.min_degree()} "
                           f"below required {big_n - m}")
    witness = find_fan(red, n)
    if witness is not None:
        raise RuntimeError(f"red fan at center {witness.center}; construction bug")
    params = ConstructionParams(m, n, a, b, sigma, big_n, x1, x2, y1, y2)
    return coloring, params


def star_fan_lower(m: int, n: int) -> tuple[TwoColoring, ConstructionParams]:
    """Coloring of K_N with no blue K_{1,m} and no red F_n, N = 2a + 2b.

    Red is complete between X1-X2, X1-Y2, X2-Y1; the partial X_i-Y_i red
    bipartite graphs come from the interval realization with window sigma.
    """
    if not m > n >= 2:
        raise UnsupportedRangeError(f"need m > n >= 2, got m={m}, n={n}")
    a, b = _block_sizes(m, n)
    if a < 1 or b < 1:
        raise UnsupportedRangeError(
            f"degenerate block sizes a={a}, b={b} for m={m}, n={n}")
    sigma = m + n - 1 - a - 2 * b
    return _assemble_star_fan(m, n, a, b, sigma, sigma)


def star_fan_lower_special(n: int) -> tuple[TwoColoring, ConstructionParams]:
    """The m = 2n instance with the fixed degree window of width 3.

    Block sizes reduce to a = floor(sqrt(3)*n) - 1 and
    b = floor((3 - sqrt(3))*n/2) - 1; X_i-Y_i degrees land in
    [n-4-b, n-1-b] and the Y side in [n-4, n-1].
    """
    if n < 2:
        raise UnsupportedRangeError(f"need n >= 2, got n={n}")
    m = 2 * n
    a, b = _block_sizes(m, n)
    if a < 1 or b < 1:
        raise UnsupportedRangeError(f"degenerate block sizes a={a}, b={b} for n={n}")
    sigma = m + n - 1 - a - 2 * b
    return _assemble_star_fan(m, n, a, b, sigma, 3)


def chromatic_lower(n: int) -> TwoColoring:
    """Two disjoint red 2n-cliques with all blue edges between: no mono F_n on 4n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    big_n = 4 * n
    edges = [(u, w) for base in (0, 2 * n)
             for w in range(base + 1, base + 2 * n) for u in range(base, w)]
    red = Graph(big_n, edges)
    for v in range(big_n):
        block = 0 if v < 2 * n else 1
        if red.degree(v) != 2 * n - 1:
            raise RuntimeError("red component not a 2n-clique")
        if any((u < 2 * n) != (block == 0) for u in red.neighbors(v)):
            raise RuntimeError("red edge crosses the bipartition")
    return TwoColoring(big_n, red)


def turan_lower(n: int, k: int) -> Graph:
    """Dense F_k-free graph on n vertices; the shape depends on alpha = k/n."""
    if not (1 <= k and 2 * k < n):
        raise UnsupportedRangeError(f"need 1 <= k < n/2, got k={k}, n={n}")
    if 4 * k <= n:
        half = n // 2
        edges = [(u, w) for u in range(half) for w in range(half, n)]
        for base in (0, k - 1):
            edges += [(u, w) for w in range(base + 1, base + k - 1)
                      for u in range(base, w)]
        g = Graph(n, edges)
    elif 3 * k <= n:
        sizes = [s for s in (k - 1, k - 1, n - 2 * k + 2) if s > 0]
        g = build_complete_multipartite(MultipartiteSpec(sizes))
    else:
        edges = []
        for off in range(1, k):
            edges += [tuple(sorted((i, (i + off) % n))) for i in range(n)]
        edges += [(i, i + n // 2) for i in range(n // 2)]
        g = Graph(n, edges)
    if find_fan(g, k) is not None:
        raise RuntimeError("fan found in a construction that must avoid it")
    return g


def fan_turan_number(n: int, k: int) -> int:
    """Extremal edge count for F_k-free graphs: floor(n^2/4) + k^2 - k for odd k,
    floor(n^2/4) + k^2 - 3k/2 for even k (asymptotic formula, no threshold gate)."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    base = (n * n) // 4
    if k % 2 == 1:
        return base + k * k - k
    return base + k * k - (3 * k) // 2


@dataclass(frozen=True)
class DiracThreshold:
    """Evaluated minimum-degree threshold forcing F_k, with its case label."""

    case: int
    label: str
    threshold: float
    theta_unresolved: bool

    def to_json_dict(self) -> dict:
        return {"case": self.case, "label": self.label,
                "threshold": self.threshold,
                "theta_unresolved": self.theta_unresolved}


def dirac_threshold(n: int, k: int) -> DiracThreshold:
    """Three-regime degree threshold; the middle case carries an unresolved
    additive constant and is flagged as such."""
    if k < 1 or 2 * k + 1 > n:
        raise UnsupportedRangeError(f"need 1 <= k and 2k+1 <= n, got k={k}, n={n}")
    if k * k < n:
        return DiracThreshold(1, "k < sqrt(n)", (n + 1) / 2, False)
    if 3 * k < n:
        alpha = k / n
        value = (1 + sqrt(1 + 16 * alpha * alpha)) / 4 * n
        return DiracThreshold(2, "sqrt(n) <= k < n/3", value, True)
    return DiracThreshold(3, "n/3 <= k < n/2", float(2 * k), False)
