"""Ramsey bound evaluators, witness verification, and an exhaustive small-case oracle.

Witness verification never trusts the construction that produced a coloring:
star absence is read off the maximum blue degree and fan absence comes from
the exact fan search. The brute-force oracle decides tiny Ramsey numbers by
backtracking over edge colorings with incremental forbidden-subgraph checks.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from math import sqrt

from .errors import SizeGuardError
from .fans import find_fan, max_blue_star
from .graphs import TwoColoring

Target = tuple[str, int]


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    prop: str
    holds: bool
    certificate: dict | None = None

    def to_json_dict(self) -> dict:
        return {"property": self.prop, "holds": self.holds,
                "certificate": self.certificate}


@dataclass(frozen=True)
class WitnessReport:
    """Verification outcome for a candidate lower-bound coloring."""

    n: int
    kind: str
    claims: tuple[Claim, ...]
    bound_implied: str | None

    def __post_init__(self):
        if self.bound_implied is not None and not self.all_hold:
            raise ValueError("bound_implied requires every claim to hold")

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.claims)

    def to_json_dict(self) -> dict:
        return {"N": self.n, "kind": self.kind,
                "claims": [c.to_json_dict() for c in self.claims],
                "bound_implied": self.bound_implied}


def verify_star_fan_witness(k: TwoColoring, m: int, n: int) -> WitnessReport:
    """Check a coloring against blue K_{1,m} and red F_n; certify R >= N+1."""
    if k.n < 1:
        raise ValueError("empty coloring")
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    claims = []
    v, d = max_blue_star(k)
    claims.append(Claim(f"no blue K_{{1,{m}}}", d <= m - 1,
                        {"vertex": v, "blue_degree": d}))
    required = k.n - m
    min_v = min(range(k.n), key=lambda u: (k.red.degree(u), u))
    min_red = k.red.degree(min_v)
    claims.append(Claim(f"red min degree >= {required}", min_red >= required,
                        {"vertex": min_v, "red_degree": min_red,
                         "required": required}))
    w = find_fan(k.red, n)
    claims.append(Claim(f"no red F_{n}", w is None,
                        w.to_json_dict() if w is not None else None))
    bound = None
    if all(c.holds for c in claims):
        bound = f"R(K_{{1,{m}}}, F_{n}) >= {k.n + 1}"
    return WitnessReport(k.n, "star-fan", tuple(claims), bound)


def verify_fan_fan_witness(k: TwoColoring, n: int) -> WitnessReport:
    """Check a coloring for monochromatic F_n in both colors; certify R(F_n) >= N+1."""
    if k.n < 1:
        raise ValueError("empty coloring")
    if n < 1:
        raise ValueError("n must be positive")
    claims = []
    for color, g in (("red", k.red), ("blue", k.blue)):
        w = find_fan(g, n)
        claims.append(Claim(f"no {color} F_{n}", w is None,
                            w.to_json_dict() if w is not None else None))
    bound = f"R(F_{n}) >= {k.n + 1}" if all(c.holds for c in claims) else None
    return WitnessReport(k.n, "fan-fan", tuple(claims), bound)


# ---------------------------------------------------------------------------
# Formula evaluators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FormulaResult:
    """Regime-labelled bound pair; exact means lower == upper is the value."""

    regime: str
    lower: float
    upper: float
    exact: bool
    upper_valid: bool = True
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")

    def to_json_dict(self) -> dict:
        return {"regime": self.regime, "lower": self.lower,
                "upper": self.upper, "exact": self.exact,
                "upper_valid": self.upper_valid, "notes": list(self.notes)}


def star_fan_formula(m: int, n: int) -> FormulaResult:
    """R(K_{1,m}, F_n) by regime: exact for m <= n and m >= n(n-1), a bound
    pair with additive slack (-8, +1) around (3m + sqrt(m^2+8n^2))/2 between."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if m <= n:
        value = float(m + 2 * n - (1 + (-1) ** m) // 2)
        return FormulaResult("m <= n", value, value, True)
    if m >= n * (n - 1):
        value = float(2 * m + 1)
        return FormulaResult("m >= n(n-1)", value, value, True)
    base = (3 * m + sqrt(m * m + 8.0 * n * n)) / 2
    return FormulaResult("n < m < n(n-1)", base - 8, base + 1, False)


def fan_ramsey_bounds(n: int, epsilon: float) -> FormulaResult:
    """Bounds for R(F_n): lower (3+sqrt(3))n - 8 always, upper (5+eps)n only
    once n >= 384/eps^2; the gate is reported on the result, never dropped."""
    if n < 1:
        raise ValueError("n must be positive")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    lower = (3 + sqrt(3)) * n - 8
    upper = (5 + epsilon) * n
    gate = 384 / (epsilon * epsilon)
    ok = n >= gate
    note = (f"upper bound requires n >= 384/epsilon^2 = {gate:g}: "
            f"{'satisfied' if ok else 'NOT satisfied'}")
    return FormulaResult("fan-fan", lower, upper, False,
                         upper_valid=ok, notes=(note,))


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

def _check_target(t: Target) -> Target:
    kind, size = t
    if kind not in ("star", "fan") or int(size) < 1:
        raise ValueError(f"target must be ('star'|'fan', positive int), got {t!r}")
    return kind, int(size)


def target_name(t: Target) -> str:
    kind, size = t
    return f"K_{{1,{size}}}" if kind == "star" else f"F_{size}"


@dataclass(frozen=True)
class RamseySearchResult:
    blue_target: Target
    red_target: Target
    n_cap: int
    value: int | None

    @property
    def exact(self) -> bool:
        return self.value is not None

    @property
    def lower(self) -> int:
        return self.value if self.value is not None else self.n_cap + 1

    def describe(self) -> str:
        name = f"R({target_name(self.blue_target)}, {target_name(self.red_target)})"
        if self.exact:
            return f"{name} = {self.value}"
        return f"{name} >= {self.n_cap + 1}"

    def to_json_dict(self) -> dict:
        return {"blue_target": list(self.blue_target),
                "red_target": list(self.red_target),
                "cap": self.n_cap, "value": self.value,
                "lower": self.lower, "exact": self.exact,
                "statement": self.describe()}


def _nu_at_least(mask: int, adj: list[int], k: int) -> bool:
    """Matching of size >= k inside the vertex-set bitmask, exact backtracking."""
    while True:
        if k <= 0:
            return True
        if mask.bit_count() < 2 * k:
            return False
        v = (mask & -mask).bit_length() - 1
        if adj[v] & mask:
            break
        mask &= mask - 1
    rest = mask & (mask - 1)
    nbrs = adj[v] & mask
    while nbrs:
        u_bit = nbrs & -nbrs
        if _nu_at_least(rest & ~u_bit, adj, k - 1):
            return True
        nbrs &= nbrs - 1
    return _nu_at_least(rest, adj, k)


def _violates(adj: list[int], i: int, j: int, target: Target) -> bool:
    """Forbidden-subgraph test through the just-colored edge (i, j) only."""
    kind, size = target
    if kind == "star":
        return adj[i].bit_count() >= size or adj[j].bit_count() >= size
    if _nu_at_least(adj[i], adj, size) or _nu_at_least(adj[j], adj, size):
        return True
    common = adj[i] & adj[j]
    while common:
        c = (common & -common).bit_length() - 1
        if _nu_at_least(adj[c], adj, size):
            return True
        common &= common - 1
    return False


def _edge_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(i)]


def _search(n: int, blue_t: Target, red_t: Target,
            order: list[tuple[int, int]], idx: int,
            blue: list[int], red: list[int]) -> bool:
    """True iff some completion of the partial coloring avoids both targets.

    Blue is tried before red; edges to vertex 0 are forced non-increasing
    (blue block first) since permuting vertices 1..n-1 preserves avoidance.
    """
    if idx == len(order):
        return True
    i, j = order[idx]
    for is_blue in (True, False):
        if is_blue and j == 0 and i > 1 and not (blue[i - 1] & 1):
            continue
        adj, target = (blue, blue_t) if is_blue else (red, red_t)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        ok = not _violates(adj, i, j, target)
        if ok and _search(n, blue_t, red_t, order, idx + 1, blue, red):
            return True
        adj[i] &= ~(1 << j)
        adj[j] &= ~(1 << i)
    return False


def _prefixes(n: int, blue_t: Target, red_t: Target,
              order: list[tuple[int, int]], depth: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    blue = [0] * n
    red = [0] * n

    def rec(idx: int, acc: list[int]) -> None:
        if idx == depth:
            out.append(tuple(acc))
            return
        i, j = order[idx]
        for is_blue in (1, 0):
            if is_blue and j == 0 and i > 1 and not (blue[i - 1] & 1):
                continue
            adj, target = (blue, blue_t) if is_blue else (red, red_t)
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            if not _violates(adj, i, j, target):
                acc.append(is_blue)
                rec(idx + 1, acc)
                acc.pop()
            adj[i] &= ~(1 << j)
            adj[j] &= ~(1 << i)

    rec(0, [])
    return out


def _run_prefix_batch(args) -> bool:
    n, blue_t, red_t, depth, batch = args
    order = _edge_order(n)
    for prefix in batch:
        blue = [0] * n
        red = [0] * n
        for idx, is_blue in enumerate(prefix):
            i, j = order[idx]
            adj = blue if is_blue else red
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        if _search(n, blue_t, red_t, order, depth, blue, red):
            return True
    return False


def _avoiding_exists(n: int, blue_t: Target, red_t: Target, workers: int) -> bool:
    order = _edge_order(n)
    if workers <= 1 or n < 4:
        return _search(n, blue_t, red_t, order, 0, [0] * n, [0] * n)
    depth = 3
    prefixes = _prefixes(n, blue_t, red_t, order, depth)
    if not prefixes:
        return False
    batches = [prefixes[i::workers] for i in range(workers)]
    batches = [b for b in batches if b]
    args = [(n, blue_t, red_t, depth, b) for b in batches]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(len(batches)) as pool:
        return any(pool.map(_run_prefix_batch, args))


def brute_force_ramsey(blue_target: Target, red_target: Target, n_cap: int,
                       workers: int = 1) -> RamseySearchResult:
    """Least N forcing the blue target or the red target in every 2-coloring
    of K_N, or a first-class ">= n_cap + 1" when the cap is reached."""
    blue_t = _check_target(blue_target)
    red_t = _check_target(red_target)
    limit = 8 if blue_t[0] == "fan" and red_t[0] == "fan" else 9
    if not 1 <= n_cap <= limit:
        raise SizeGuardError(
            f"cap {n_cap} outside 1..{limit} for {blue_t[0]}-{red_t[0]} search")
    workers = max(1, int(workers))
    for n in range(1, n_cap + 1):
        if not _avoiding_exists(n, blue_t, red_t, workers):
            return RamseySearchResult(blue_t, red_t, n_cap, n)
    return RamseySearchResult(blue_t, red_t, n_cap, None)
