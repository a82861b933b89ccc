"""Exact minimum piercing density for 1D ship families.

The computation runs on the graph of valid length-s windows, where s is
the span of the (scale-reduced) family.  A window is an s-bit word,
most significant bit oldest, that hits every ship translate lying fully
inside it.  Sliding one cell to the right drops the oldest bit and
appends a fresh one, so every node has at most two successors and the
appended bit is the edge weight.  Bi-infinite piercing patterns are
exactly the bi-infinite walks through valid windows, so the minimum
density equals the minimum mean weight over directed cycles.

The minimum mean is found with Karp's length-indexed dynamic program
(integer arithmetic only, run twice to keep memory linear in the node
count), and an optimal cycle is then extracted from the subgraph of
edges that are tight for the shortest-walk potentials under weights
reweighted by the optimum.  Ties are broken deterministically: shortest
cycle first, then the lexicographically smallest node sequence.  The
pattern read off the cycle is re-checked against the input family
before it is returned.
"""

from __future__ import annotations

import bisect
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import Family, scale_reduce, span
from .verifier import Pattern1D, scale_pattern, verify_pattern_1d

DEFAULT_SPAN_CAP = 22

# Refuse window enumerations whose working arrays would exceed this.
MEMORY_GUARD_BYTES = 2 << 30

_INF = 1 << 40


class SpanCapError(RuntimeError):
    """The reduced family needs a longer window than the caller allows."""

    def __init__(self, required_span: int, span_cap: int):
        self.required_span = required_span
        self.span_cap = span_cap
        super().__init__(
            f"family requires window length {required_span}, above the span cap "
            f"{span_cap}; rerun with span_cap >= {required_span}"
        )


class MemoryGuardError(RuntimeError):
    """Estimated working-set size exceeds the memory guard."""


@dataclass(frozen=True)
class WindowGraph:
    """Directed graph of valid s-bit windows.

    Nodes are sorted integer-encoded windows (MSB = oldest cell, so
    integer order is lexicographic order on the 01-strings).  Edges go
    from w to ((w << 1) & mask) | b for b in {0, 1} whenever the target
    is also a node; the weight of an edge is the appended bit b.
    """

    s: int
    nodes: tuple[int, ...]

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("window length must be positive")
        if tuple(sorted(set(self.nodes))) != self.nodes:
            raise ValueError("nodes must be sorted and duplicate-free")
        if self.nodes and not (0 <= self.nodes[0] and self.nodes[-1] < (1 << self.s)):
            raise ValueError("node words must fit in s bits")

    @classmethod
    def from_family(cls, family: Family) -> "WindowGraph":
        """Enumerate all valid windows of length span(family).

        Validity is checked against one bitmask per (ship, translate)
        pair: a window w is valid iff w AND mask != 0 for every mask.
        """
        s = span(family)
        estimate = (1 << s) * 9  # int64 word array + bool validity array
        if estimate > MEMORY_GUARD_BYTES:
            raise MemoryGuardError(
                f"window enumeration for span {s} needs ~{estimate} bytes, "
                f"above the guard of {MEMORY_GUARD_BYTES}"
            )
        masks = translate_masks(family, s)
        words = np.arange(1 << s, dtype=np.int64)
        ok = np.ones(1 << s, dtype=bool)
        for m in masks:
            ok &= (words & m) != 0
        return cls(s, tuple(int(w) for w in words[ok]))

    def successors(self, word: int) -> list[tuple[int, int]]:
        """(target, weight) pairs, ascending by target."""
        full = (1 << self.s) - 1
        out = []
        base = (word << 1) & full
        for b in (0, 1):
            if _contains(self.nodes, base | b):
                out.append((base | b, b))
        return out


def translate_masks(family: Family, s: int) -> list[int]:
    """One bitmask per ship translate that fits inside an s-window."""
    masks = []
    for ship in family.ships:
        t = ship.span
        if t > s:
            raise ValueError(f"ship span {t} exceeds window length {s}")
        for j in range(s - t + 1):
            m = 0
            for a in ship.offsets:
                m |= 1 << (s - 1 - (j + a))
            masks.append(m)
    return masks


def _contains(sorted_tuple: tuple[int, ...], x: int) -> bool:
    i = bisect.bisect_left(sorted_tuple, x)
    return i < len(sorted_tuple) and sorted_tuple[i] == x


@dataclass(frozen=True)
class SolveResult:
    density: Fraction
    pattern: Pattern1D
    node_count: int
    cycle_length: int
    window_length: int
    scale: int


def _lookup(words: np.ndarray, queries: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Indices of queries in the sorted word array, plus a found mask."""
    idx = np.searchsorted(words, queries)
    idx = np.minimum(idx, len(words) - 1)
    found = words[idx] == queries
    return idx, found


def min_mean_cycle(graph: WindowGraph) -> tuple[Fraction, list[int]]:
    """Exact minimum cycle mean and one witness cycle.

    The witness is the shortest optimal cycle; among equally short ones,
    the one whose node sequence (rotated to start at its smallest node)
    is lexicographically smallest.

    Raises ValueError if the graph has no cycle.
    """
    words = np.asarray(graph.nodes, dtype=np.int64)
    n = len(words)
    if n == 0:
        raise ValueError("graph has no nodes")
    s = graph.s

    # All edges into a node carry the same weight: the node's newest bit.
    w_in = (words & 1).astype(np.int64)
    hi_idx, hi_ok = _lookup(words, (words >> 1) | (1 << (s - 1)))
    lo_idx, lo_ok = _lookup(words, words >> 1)

    def step(dist: np.ndarray) -> np.ndarray:
        """One round of the exactly-k-edge walk recurrence."""
        best = np.minimum(
            np.where(hi_ok, dist[hi_idx], _INF),
            np.where(lo_ok, dist[lo_idx], _INF),
        )
        return np.minimum(best + w_in, _INF)

    # Pass 1: minimum weight of an exactly-n-edge walk ending at v,
    # starting anywhere (virtual zero-weight source).
    dist = np.zeros(n, dtype=np.int64)
    for _ in range(n):
        dist = step(dist)
    dist_n = dist

    # Pass 2: Karp's formula.  For each v, max over 0 <= k < n of
    # (dist_n[v] - dist_k[v]) / (n - k), maintained with exact integer
    # cross-multiplication; then the minimum over v of those maxima.
    has_cycle = dist_n < _INF
    if not has_cycle.any():
        raise ValueError("graph has no cycle")
    best_num = np.where(has_cycle, dist_n, _INF)  # k = 0, dist_0 = 0
    best_den = np.full(n, n, dtype=np.int64)
    dist = np.zeros(n, dtype=np.int64)
    for k in range(1, n):
        dist = step(dist)
        finite = has_cycle & (dist < _INF)
        num = dist_n - np.where(finite, dist, 0)
        den = n - k
        better = finite & (num * best_den > best_num * den)
        best_num = np.where(better, num, best_num)
        best_den = np.where(better, den, best_den)

    lam_n = lam_d = None
    for v in np.flatnonzero(has_cycle):
        p, q = int(best_num[v]), int(best_den[v])
        if lam_n is None or p * lam_d < lam_n * q:
            lam_n, lam_d = p, q
    mean = Fraction(lam_n, lam_d)

    cycle = _extract_cycle(graph, words, hi_idx, hi_ok, lo_idx, lo_ok, w_in, mean)
    return mean, cycle


def _extract_cycle(graph, words, hi_idx, hi_ok, lo_idx, lo_ok, w_in, mean):
    """Deterministic optimal cycle via the tight subgraph.

    Reweight each edge into v by q*w(v) - p where mean = p/q.  No cycle
    is negative, optimal cycles have weight 0, and shortest-walk
    potentials make exactly the edges of optimal cycles tight.  Inside
    the tight subgraph, any closed walk whose length equals the minimum
    cycle length is automatically a simple optimal cycle, which reduces
    the tie-break to breadth-first searches plus one greedy descent.
    """
    n = len(words)
    p, q = mean.numerator, mean.denominator
    wprime = q * w_in - p

    # Shortest-walk potentials: d[v] = min reweighted walk ending at v.
    d = np.zeros(n, dtype=np.int64)
    for _ in range(n):
        better = np.minimum(
            np.where(hi_ok, d[hi_idx], _INF),
            np.where(lo_ok, d[lo_idx], _INF),
        ) + wprime
        new = np.minimum(d, better)
        if np.array_equal(new, d):
            break
        d = new

    # Tight successor lists (ascending by target, hence lexicographic).
    full = (1 << graph.s) - 1
    index_of = {int(w): i for i, w in enumerate(words)}
    tight: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        base = (int(words[u]) << 1) & full
        for b in (0, 1):
            v = index_of.get(base | b)
            if v is not None and d[u] + wprime[v] == d[v]:
                tight[u].append(v)

    # Smallest node carrying a shortest tight closed walk.
    best_len = None
    start = None
    for v in range(n):
        if not tight[v]:
            continue
        cap = best_len if best_len is not None else n + 1
        length = _closed_walk_length(tight, v, cap)
        if length is not None and (best_len is None or length < best_len):
            best_len = length
            start = v
    if best_len is None:
        raise ValueError("tight subgraph has no cycle")  # cannot happen

    # Exact-length feasibility, then greedy lexicographic descent.
    feasible = [set() for _ in range(best_len + 1)]
    feasible[0] = {start}
    for r in range(1, best_len + 1):
        prev = feasible[r - 1]
        feasible[r] = {u for u in range(n) if any(v in prev for v in tight[u])}

    cycle_idx = [start]
    u = start
    for step_no in range(best_len - 1):
        remaining = best_len - step_no - 1
        u = next(v for v in tight[u] if v in feasible[remaining])
        cycle_idx.append(u)
    assert start in tight[cycle_idx[-1]]
    assert len(set(cycle_idx)) == len(cycle_idx)

    cycle = [int(words[i]) for i in cycle_idx]
    assert q * sum(w & 1 for w in cycle) == p * len(cycle)
    return cycle


def _closed_walk_length(tight: list[list[int]], v: int, cap: int) -> int | None:
    """Length of the shortest tight closed walk through v, if < cap."""
    seen = {u: 1 for u in tight[v]}
    if v in seen:
        return 1
    queue = deque(tight[v])
    while queue:
        u = queue.popleft()
        depth = seen[u]
        if depth + 1 >= cap:
            continue
        for t in tight[u]:
            if t == v:
                return depth + 1
            if t not in seen:
                seen[t] = depth + 1
                queue.append(t)
    return None


def exact_density(f: Family, span_cap: int = DEFAULT_SPAN_CAP) -> SolveResult:
    """Exact minimum density of a periodic pattern piercing f.

    The family is scale-reduced first; the window graph is built from
    the reduced family and must fit within span_cap.  The returned
    pattern is scaled back so that it pierces f itself, which is
    re-verified before returning.
    """
    if any(ship.size == 1 for ship in f.ships):
        # A single-cell ship forces every cell to be shot.
        return SolveResult(Fraction(1), Pattern1D(1, {0}), 1, 1, 1, 1)

    reduced, d = scale_reduce(f)
    s = span(reduced)
    if s > span_cap:
        raise SpanCapError(s, span_cap)

    graph = WindowGraph.from_family(reduced)
    density, cycle = min_mean_cycle(graph)

    length = len(cycle)
    residues = {i for i in range(length) if cycle[(i + 1) % length] & 1}
    pattern = scale_pattern(Pattern1D(length, residues), d)

    if pattern.density != density:
        raise AssertionError("optimal cycle density mismatch")
    witness = verify_pattern_1d(pattern, f)
    if witness is not None:
        raise AssertionError(f"optimal pattern failed verification at {witness}")

    return SolveResult(
        density=density,
        pattern=pattern,
        node_count=len(graph.nodes),
        cycle_length=length,
        window_length=s,
        scale=d,
    )
