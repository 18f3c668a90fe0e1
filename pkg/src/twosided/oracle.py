"""Brute-force reference implementations.

These exist to validate the solvers and to pin down expected values for small
instances.  They enumerate subsets directly against the problem definitions
and deliberately share no code with the dynamic programs.  Size guards keep
the exponential enumeration honest.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .model import (
    IntervalSet,
    LayoutInstance,
    Solution,
    TwoSidedAssignment,
    _alternate,
)
from .transform import EdgeWeightMode

MAX_ORACLE_INTERVALS = 20
MAX_ORACLE_EDGES = 16
MAX_ORACLE_NODES = 20


class OracleSizeError(ValueError):
    """Raised when an instance exceeds the brute-force size guard."""


def brute_force_k_overlap(s: IntervalSet, k: int) -> Solution:
    """Max-weight subset with overlap degree at most k, by full enumeration.

    Ties are broken toward the lexicographically smallest sorted id tuple.
    """
    n = len(s)
    if n > MAX_ORACLE_INTERVALS:
        raise OracleSizeError(f"{n} intervals exceed the oracle guard of {MAX_ORACLE_INTERVALS}")
    masks = [0] * n
    for (i, j) in s.pair_weights:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    weights = [iv.weight for iv in s.intervals]

    best_weight = 0
    best_ids: tuple[int, ...] = ()
    for size in range(0, n + 1):
        for ids in combinations(range(n), size):
            mask = 0
            for i in ids:
                mask |= 1 << i
            if any(bin(masks[i] & mask).count("1") > k for i in ids):
                continue
            total = sum(weights[i] for i in ids)
            for a in range(len(ids)):
                for b in range(a + 1, len(ids)):
                    key = (ids[a], ids[b])
                    if key in s.pair_weights:
                        total -= s.pair_weights[key]
            if total > best_weight or (total == best_weight and ids < best_ids):
                best_weight = total
                best_ids = ids
    return Solution.from_chosen(best_ids, s, k)


def brute_force_two_sided(
    instance: LayoutInstance, k: int, mode: EdgeWeightMode
) -> tuple[TwoSidedAssignment, int, int]:
    """Optimal exterior edge set by enumerating all outer-k-plane subsets.

    Minimizes interior crossings under COUNT_SHIFTED, total crossings under
    IGNORE_SHIFTED.  Returns (assignment, interior crossings, total
    crossings); ties go to the lexicographically smallest exterior id set.
    """
    m = instance.n_edges
    if m > MAX_ORACLE_EDGES:
        raise OracleSizeError(f"{m} edges exceed the oracle guard of {MAX_ORACLE_EDGES}")
    pos = instance.positions
    n = instance.n_vertices
    edges = instance.edges
    cross_mask = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if _alternate(pos, n, edges[i], edges[j]):
                cross_mask[i] |= 1 << j
                cross_mask[j] |= 1 << i

    best: tuple[int, tuple[int, ...]] | None = None
    best_counts = (0, 0)
    for size in range(0, m + 1):
        for ext in combinations(range(m), size):
            ext_mask = 0
            for i in ext:
                ext_mask |= 1 << i
            if any(bin(cross_mask[i] & ext_mask).count("1") > k for i in ext):
                continue
            exterior_crossings = sum(bin(cross_mask[i] & ext_mask).count("1") for i in ext) // 2
            interior_ids = [i for i in range(m) if not (ext_mask >> i) & 1]
            interior_crossings = 0
            for a in range(len(interior_ids)):
                for b in range(a + 1, len(interior_ids)):
                    if (cross_mask[interior_ids[a]] >> interior_ids[b]) & 1:
                        interior_crossings += 1
            objective = (
                interior_crossings
                if mode is EdgeWeightMode.COUNT_SHIFTED
                else interior_crossings + exterior_crossings
            )
            key = (objective, ext)
            if best is None or key < best:
                best = key
                best_counts = (interior_crossings, interior_crossings + exterior_crossings)
    assert best is not None
    assignment = TwoSidedAssignment.from_exterior(instance, best[1])
    return assignment, best_counts[0], best_counts[1]


def brute_force_min_dominating_set(
    n_nodes: int, links: Iterable[Sequence[int]]
) -> frozenset[int]:
    """Smallest dominating set, ties broken lexicographically.

    A set D dominates when every node outside D has a neighbor in D.
    """
    if n_nodes > MAX_ORACLE_NODES:
        raise OracleSizeError(f"{n_nodes} nodes exceed the oracle guard of {MAX_ORACLE_NODES}")
    closed = [1 << i for i in range(n_nodes)]
    for u, v in links:
        closed[u] |= 1 << v
        closed[v] |= 1 << u
    full = (1 << n_nodes) - 1
    if n_nodes == 0:
        return frozenset()
    for size in range(0, n_nodes + 1):
        for ids in combinations(range(n_nodes), size):
            covered = 0
            for i in ids:
                covered |= closed[i]
            if covered == full:
                return frozenset(ids)
    return frozenset(range(n_nodes))
