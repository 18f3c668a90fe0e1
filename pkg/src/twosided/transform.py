"""Build the weighted circle graph of a layout and project it to intervals.

The circle graph has one node per edge of the layout graph and a link for
every crossing chord pair.  Routing an edge outside the circle removes as
many interior crossings as its node degree, so node weights are set to the
degree; link weights encode how a crossing that moves outside is accounted
for (see :class:`EdgeWeightMode`).

The interval projection cuts the circle between the last and the first vertex
of the cyclic order and reads the chords off as intervals over the endpoint
ranks 1..2m.  Chords sharing a vertex are first separated into per-edge slots
so that all endpoints are distinct; the slot order is chosen so that the
shared-vertex chords nest instead of crossing, which keeps the intersection
graph unchanged.  The projection is purely combinatorial; no geometry is
involved.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .model import (
    Interval,
    IntervalSet,
    LayoutInstance,
    WeightedCircleGraph,
    _alternate,
)


class EdgeWeightMode(enum.Enum):
    """Uniform link weight of the circle graph.

    COUNT_SHIFTED (weight 1): the objective counts every crossing removed
    from the interior, including crossings that merely move outside.
    Maximizing it minimizes the number of *interior* crossings.

    IGNORE_SHIFTED (weight 2): crossings that reappear between two exterior
    edges are not counted as savings.  Maximizing it minimizes the *total*
    number of crossings of the two-sided drawing.
    """

    COUNT_SHIFTED = 1
    IGNORE_SHIFTED = 2

    @classmethod
    def from_int(cls, value: int) -> "EdgeWeightMode":
        return cls(value)


def build_circle_graph(instance: LayoutInstance, mode: EdgeWeightMode) -> WeightedCircleGraph:
    """Circle graph of the one-sided layout with solver weights attached."""
    pos = instance.positions
    n = instance.n_vertices
    edges = instance.edges
    m = len(edges)
    links: dict[tuple[int, int], int] = {}
    degree = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if _alternate(pos, n, edges[i], edges[j]):
                links[(i, j)] = mode.value
                degree[i] += 1
                degree[j] += 1
    return WeightedCircleGraph(tuple(degree), links)


@dataclass(frozen=True)
class ProjectionResult:
    """Interval representation plus the node <-> interval correspondence.

    Interval ids coincide with circle-graph node ids (and therefore with the
    layout's edge ids); ``edge_for_interval[i]`` makes the mapping explicit so
    solutions can be translated back to edges exactly.
    """

    interval_set: IntervalSet
    edge_for_interval: tuple[int, ...]


def project_to_intervals(
    instance: LayoutInstance,
    mode: EdgeWeightMode = EdgeWeightMode.COUNT_SHIFTED,
) -> ProjectionResult:
    """Project the chords of the layout onto the line, one interval per edge.

    The cut point sits between the last and the first vertex of the cyclic
    order, so endpoint ranks grow in order direction starting at the first
    vertex.  At a vertex of degree d the d edge endpoints occupy consecutive
    slots, ordered so that the chord reaching farthest (in order direction)
    comes first; chords sharing the vertex then nest rather than cross.

    Two intervals overlap iff the corresponding chords cross; this is
    re-validated against the alternation test on every call.
    """
    pos = instance.positions
    n = instance.n_vertices
    edges = instance.edges
    m = len(edges)

    incident: dict[int, list[int]] = {v: [] for v in instance.vertices}
    for eid, (u, v) in enumerate(edges):
        incident[u].append(eid)
        incident[v].append(eid)

    # Assign one slot per edge endpoint, walking the circle in order
    # direction.  Sorting by decreasing forward distance of the other
    # endpoint makes chords sharing this vertex nest.
    slot_of: dict[tuple[int, int], int] = {}
    next_slot = 1
    for v in instance.order:
        def forward_distance(eid: int, _v: int = v) -> int:
            a, b = edges[eid]
            other = b if a == _v else a
            return (pos[other] - pos[_v]) % n

        for eid in sorted(incident[v], key=lambda e: (-forward_distance(e), e)):
            slot_of[(v, eid)] = next_slot
            next_slot += 1

    intervals = []
    for eid, (u, v) in enumerate(edges):
        a, b = slot_of[(u, eid)], slot_of[(v, eid)]
        intervals.append((min(a, b), max(a, b)))

    graph = build_circle_graph(instance, mode)
    ivs = tuple(
        Interval(l, r, weight=graph.degree(eid), source_node=eid)
        for eid, (l, r) in enumerate(intervals)
    )

    pair_weights: dict[tuple[int, int], int] = {}
    for i in range(m):
        for j in range(i + 1, m):
            a, b = ivs[i], ivs[j]
            overlaps = a.left < b.left < a.right < b.right or b.left < a.left < b.right < a.right
            crosses = (i, j) in graph.link_weights
            if overlaps != crosses:
                raise AssertionError(
                    f"projection broke the intersection graph at edges {i},{j}"
                )
            if overlaps:
                pair_weights[(i, j)] = mode.value

    return ProjectionResult(IntervalSet(ivs, pair_weights), tuple(range(m)))
