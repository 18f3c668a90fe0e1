"""Core domain model for crossing minimization in two-sided circular layouts.

A graph drawn with every vertex on a circle (in a fixed cyclic order) has its
crossings determined entirely by that order: two chords cross exactly when
their four endpoints alternate around the circle.  A *two-sided* layout keeps
the vertices in place but routes a subset of the edges outside the circle.

This module holds the vocabulary shared by everything else in the package:

* :class:`LayoutInstance`      -- input graph plus cyclic vertex order
* :class:`TwoSidedAssignment`  -- partition of the edges into interior chords
  and exterior curves
* :class:`WeightedCircleGraph` -- the chord intersection graph, weighted for
  the crossing-minimization objective
* :class:`Interval` / :class:`IntervalSet` -- the normalized interval view of
  the circle graph that the dynamic programs run on
* :class:`Solution`            -- a selected subset and its objective value

plus the small interval-set operators (overlap, nesting, span, fit, window
restriction) the solvers are built from.  All types are immutable after
construction and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]
Pair = tuple[int, int]

DISJOINT = "disjoint"
OVERLAP = "overlap"
A_NESTS_B = "a_nests_b"
B_NESTS_A = "b_nests_a"


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


# ---------------------------------------------------------------------------
# Layout-level types
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LayoutInstance:
    """A graph together with a cyclic order of its vertices.

    Edges are identified by their index in ``edges``; every other type in the
    pipeline refers to edges through these stable integer ids.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    order: tuple[int, ...]

    def __post_init__(self) -> None:
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        if sorted(self.order) != sorted(self.vertices):
            raise ValueError("order must be a permutation of the vertices")
        seen: set[Edge] = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u},{v}) uses unknown vertex")
            e = canonical_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(e)

    @classmethod
    def build(
        cls,
        vertices: Iterable[int],
        edges: Iterable[Sequence[int]],
        order: Iterable[int] | None = None,
    ) -> "LayoutInstance":
        vs = tuple(vertices)
        es = tuple(canonical_edge(u, v) for u, v in edges)
        od = tuple(order) if order is not None else vs
        return cls(vs, es, od)

    @cached_property
    def positions(self) -> dict[int, int]:
        """Rank of each vertex in the cyclic order (0-based)."""
        return {v: i for i, v in enumerate(self.order)}

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> range:
        return range(len(self.edges))


@dataclass(frozen=True, eq=False)
class TwoSidedAssignment:
    """Partition of the edge ids into interior (chords) and exterior (curves)."""

    interior: frozenset[int]
    exterior: frozenset[int]

    @classmethod
    def from_exterior(cls, instance: LayoutInstance, exterior: Iterable[int]) -> "TwoSidedAssignment":
        ext = frozenset(exterior)
        return cls(frozenset(instance.edge_ids()) - ext, ext)

    def validate_for(self, instance: LayoutInstance) -> None:
        if self.interior & self.exterior:
            raise ValueError("interior and exterior overlap")
        if self.interior | self.exterior != set(instance.edge_ids()):
            raise ValueError("assignment does not cover the edge set")


@dataclass(frozen=True, eq=False)
class WeightedCircleGraph:
    """Intersection graph of the chords of a one-sided layout.

    One node per edge of the source graph; a link for every crossing chord
    pair.  Node weights equal the node degree (the number of crossings the
    chord is involved in) when built by the standard transform; link weights
    are uniform in {1, 2} depending on the crossing-accounting mode.
    """

    node_weights: tuple[int, ...]
    link_weights: Mapping[Pair, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        n = len(self.node_weights)
        for (u, v) in self.link_weights:
            if not (0 <= u < v < n):
                raise ValueError(f"bad link ({u},{v})")

    @property
    def n_nodes(self) -> int:
        return len(self.node_weights)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbr: list[list[int]] = [[] for _ in range(self.n_nodes)]
        for u, v in self.link_weights:
            nbr[u].append(v)
            nbr[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbr)

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])

    @cached_property
    def max_degree(self) -> int:
        if self.n_nodes == 0:
            return 0
        return max(len(a) for a in self.adjacency)


# ---------------------------------------------------------------------------
# Chord crossing predicates
# ---------------------------------------------------------------------------


def chords_cross(edge_a: Sequence[int], edge_b: Sequence[int], order: Sequence[int]) -> bool:
    """True iff the two chords cross, i.e. their endpoints alternate in the
    cyclic order.  Edges sharing a vertex never cross."""
    pos = {v: i for i, v in enumerate(order)}
    return _alternate(pos, len(order), edge_a, edge_b)


def _alternate(pos: Mapping[int, int], n: int, edge_a: Sequence[int], edge_b: Sequence[int]) -> bool:
    a1, a2 = edge_a
    b1, b2 = edge_b
    if len({a1, a2, b1, b2}) < 4:
        return False
    p = pos[a1]
    arc = (pos[a2] - p) % n
    in1 = 0 < (pos[b1] - p) % n < arc
    in2 = 0 < (pos[b2] - p) % n < arc
    return in1 != in2


def count_crossings(instance: LayoutInstance, assignment: TwoSidedAssignment) -> tuple[int, int]:
    """Crossing counts (interior, exterior) of a two-sided drawing.

    Interior counts alternating pairs drawn as chords, exterior counts
    alternating pairs routed outside; a pair split across the two sides never
    crosses.
    """
    assignment.validate_for(instance)
    pos = instance.positions
    n = instance.n_vertices
    edges = instance.edges
    interior = sorted(assignment.interior)
    exterior = sorted(assignment.exterior)
    counts = []
    for side in (interior, exterior):
        c = 0
        for i in range(len(side)):
            for j in range(i + 1, len(side)):
                if _alternate(pos, n, edges[side[i]], edges[side[j]]):
                    c += 1
        counts.append(c)
    return counts[0], counts[1]


# ---------------------------------------------------------------------------
# Intervals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """Closed interval with integer endpoints; represents one chord.

    ``source_node`` is the id of the circle-graph node (equivalently the edge
    of the layout graph) the interval stands for.
    """

    left: int
    right: int
    weight: int = 0
    source_node: int = -1

    def __post_init__(self) -> None:
        if self.left >= self.right:
            raise ValueError(f"interval needs left < right, got [{self.left},{self.right}]")
        if self.weight < 0:
            raise ValueError("interval weights must be non-negative")

    @property
    def length(self) -> int:
        return self.right - self.left


def overlap_kind(a: Interval, b: Interval) -> str:
    """Classify two intervals as disjoint / overlap / one-nests-the-other.

    Requires all four endpoints to be distinct; shared endpoints violate the
    normalized-representation invariant and are rejected.
    """
    if len({a.left, a.right, b.left, b.right}) < 4:
        raise ValueError("intervals with shared endpoints are not allowed")
    if a.right < b.left or b.right < a.left:
        return DISJOINT
    if a.left < b.left and b.right < a.right:
        return A_NESTS_B
    if b.left < a.left and a.right < b.right:
        return B_NESTS_A
    return OVERLAP


def intervals_overlap(a: Interval, b: Interval) -> bool:
    return overlap_kind(a, b) == OVERLAP


def _same_span(a: Interval, b: Interval) -> bool:
    return a.left == b.left and a.right == b.right


def overlap_set(interval: Interval, subset: Iterable[Interval]) -> list[Interval]:
    """All intervals of ``subset`` that properly overlap ``interval``.

    The interval itself may appear in ``subset``; it never overlaps itself.
    """
    return [
        j
        for j in subset
        if not _same_span(interval, j) and overlap_kind(interval, j) == OVERLAP
    ]


def forward_overlap_set(interval: Interval, subset: Iterable[Interval]) -> list[Interval]:
    """The overlapping intervals that stick out to the right of ``interval``:
    those [c,d] with c < interval.right < d."""
    return [
        j
        for j in overlap_set(interval, subset)
        if j.left < interval.right < j.right
    ]


def nested_set(interval: Interval, subset: Iterable[Interval]) -> list[Interval]:
    """All intervals of ``subset`` strictly nested inside ``interval``."""
    return [
        j
        for j in subset
        if not _same_span(interval, j) and overlap_kind(interval, j) == A_NESTS_B
    ]


def _endpoints(subset: Sequence[Interval]) -> list[int]:
    pts: list[int] = []
    for i in subset:
        pts.append(i.left)
        pts.append(i.right)
    return sorted(pts)


def _is_connected(subset: Sequence[Interval]) -> bool:
    # Connectivity of the overlap graph induced by the subset.
    n = len(subset)
    if n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j not in seen and overlap_kind(subset[i], subset[j]) == OVERLAP:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def span(subset: Sequence[Interval]) -> int:
    """Distance between the extreme endpoints of a connected interval set."""
    subset = list(subset)
    if not subset:
        raise ValueError("span is undefined for the empty set")
    if not _is_connected(subset):
        raise ValueError("span is only defined for connected interval sets")
    pts = _endpoints(subset)
    return pts[-1] - pts[0]


def fit(subset: Sequence[Interval]) -> int:
    """Largest gap between consecutive sorted endpoints of a connected set."""
    subset = list(subset)
    if not subset:
        raise ValueError("fit is undefined for the empty set")
    if not _is_connected(subset):
        raise ValueError("fit is only defined for connected interval sets")
    pts = _endpoints(subset)
    return max(pts[i + 1] - pts[i] for i in range(len(pts) - 1))


@dataclass(frozen=True, eq=False)
class IntervalSet:
    """A normalized interval representation of a weighted circle graph.

    The 2n endpoints are exactly {1, ..., 2n}; ``pair_weights`` carries one
    entry per properly overlapping pair (keyed by the interval indices in
    ``intervals``, smaller index first).  Interval ids are positions in
    ``intervals``.
    """

    intervals: tuple[Interval, ...]
    pair_weights: Mapping[Pair, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        n = len(self.intervals)
        pts = sorted(p for i in self.intervals for p in (i.left, i.right))
        if pts != list(range(1, 2 * n + 1)):
            raise ValueError("endpoints must be exactly {1..2n} with no repeats")
        expected = set()
        for i in range(n):
            for j in range(i + 1, n):
                if overlap_kind(self.intervals[i], self.intervals[j]) == OVERLAP:
                    expected.add((i, j))
        got = set(self.pair_weights)
        if got != expected:
            raise ValueError(
                f"pair_weights must cover exactly the overlapping pairs; "
                f"missing={sorted(expected - got)} spurious={sorted(got - expected)}"
            )
        for w in self.pair_weights.values():
            if w < 0:
                raise ValueError("pair weights must be non-negative")

    @classmethod
    def build(
        cls,
        spans: Sequence[tuple[int, int]],
        weights: Sequence[int] | None = None,
        pair_weights: Mapping[Pair, int] | int = 0,
    ) -> "IntervalSet":
        """Convenience constructor from raw (left, right) spans.

        ``pair_weights`` may be a full mapping or a single integer applied to
        every overlapping pair.
        """
        ws = list(weights) if weights is not None else [0] * len(spans)
        ivs = tuple(
            Interval(l, r, w, source_node=i) for i, ((l, r), w) in enumerate(zip(spans, ws))
        )
        if isinstance(pair_weights, int):
            pw = {}
            for i in range(len(ivs)):
                for j in range(i + 1, len(ivs)):
                    if overlap_kind(ivs[i], ivs[j]) == OVERLAP:
                        pw[(i, j)] = pair_weights
        else:
            pw = {canonical_edge(*k): v for k, v in pair_weights.items()}
        return cls(ivs, pw)

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def pair_weight(self, i: int, j: int) -> int:
        return self.pair_weights[canonical_edge(i, j)]

    @cached_property
    def overlap_pairs(self) -> frozenset[Pair]:
        return frozenset(self.pair_weights)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Ids of the intervals overlapping each interval, ascending."""
        nbr: list[list[int]] = [[] for _ in self.intervals]
        for (i, j) in self.pair_weights:
            nbr[i].append(j)
            nbr[j].append(i)
        return tuple(tuple(sorted(x)) for x in nbr)

    @cached_property
    def max_degree(self) -> int:
        if not self.intervals:
            return 0
        return max(len(x) for x in self.neighbors)

    @cached_property
    def total_length(self) -> int:
        return sum(i.length for i in self.intervals)


def restrict(s: IntervalSet | Sequence[Interval], x: float, y: float) -> list[Interval]:
    """The window restriction: all intervals contained in [x, y].

    Accepts +/- infinity sentinels; restrict(S, -inf, inf) is S itself.
    """
    source = s.intervals if isinstance(s, IntervalSet) else s
    return [i for i in source if x <= i.left and i.right <= y]


def solution_weight(chosen: Iterable[int], s: IntervalSet) -> int:
    """Objective value of a chosen interval subset: the sum of its interval
    weights minus the weights of the overlapping pairs inside it."""
    ids = sorted(set(chosen))
    total = sum(s.intervals[i].weight for i in ids)
    for a in range(len(ids)):
        for b in range(a + 1, len(ids)):
            key = (ids[a], ids[b])
            if key in s.pair_weights:
                total -= s.pair_weights[key]
    return total


def overlap_pairs_within(chosen: Iterable[int], s: IntervalSet) -> frozenset[Pair]:
    ids = sorted(set(chosen))
    out = set()
    for a in range(len(ids)):
        for b in range(a + 1, len(ids)):
            key = (ids[a], ids[b])
            if key in s.pair_weights:
                out.add(key)
    return frozenset(out)


def overlap_degrees(chosen: Iterable[int], s: IntervalSet) -> dict[int, int]:
    ids = set(chosen)
    deg = {i: 0 for i in ids}
    for (a, b) in overlap_pairs_within(ids, s):
        deg[a] += 1
        deg[b] += 1
    return deg


@dataclass(frozen=True)
class Solution:
    """A feasible subset for the bounded-overlap selection problem.

    ``chosen`` holds interval ids (equivalently circle-graph node ids /
    layout edge ids), ``weight`` the objective value, ``overlap_pairs`` the
    overlapping pairs inside the chosen set, and ``k`` the overlap bound the
    solution was computed for.
    """

    chosen: frozenset[int]
    weight: int
    overlap_pairs: frozenset[Pair]
    k: int

    @classmethod
    def from_chosen(cls, chosen: Iterable[int], s: IntervalSet, k: int) -> "Solution":
        ids = frozenset(chosen)
        return cls(ids, solution_weight(ids, s), overlap_pairs_within(ids, s), k)

    def max_overlap_degree(self) -> int:
        if not self.chosen:
            return 0
        deg: dict[int, int] = {i: 0 for i in self.chosen}
        for a, b in self.overlap_pairs:
            deg[a] += 1
            deg[b] += 1
        return max(deg.values())
