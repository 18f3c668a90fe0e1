import random

from conftest import random_layout
from twosided.graphio import dump_intervals, parse_intervals
from twosided.model import LayoutInstance, overlap_kind
from twosided.transform import EdgeWeightMode, build_circle_graph, project_to_intervals


def c4_with_diagonals() -> LayoutInstance:
    return LayoutInstance.build(
        range(1, 5), [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3), (2, 4)]
    )


def test_circle_graph_c4_with_diagonals():
    inst = c4_with_diagonals()
    for mode in EdgeWeightMode:
        g = build_circle_graph(inst, mode)
        assert g.n_nodes == 6
        assert set(g.link_weights) == {(4, 5)}  # only the two diagonals cross
        assert g.link_weights[(4, 5)] == mode.value
        assert g.node_weights == (0, 0, 0, 0, 1, 1)
        assert g.max_degree == 1


def test_circle_graph_star_has_no_links():
    star = LayoutInstance.build(range(1, 5), [(1, 2), (1, 3), (1, 4)])
    g = build_circle_graph(star, EdgeWeightMode.COUNT_SHIFTED)
    assert g.n_nodes == 3
    assert not g.link_weights
    assert g.node_weights == (0, 0, 0)


def test_circle_graph_single_edge():
    inst = LayoutInstance.build([1, 2], [(1, 2)])
    g = build_circle_graph(inst, EdgeWeightMode.IGNORE_SHIFTED)
    assert g.n_nodes == 1
    assert g.node_weights == (0,)
    assert not g.link_weights


def test_link_count_equals_all_interior_crossings(rng):
    from twosided.model import TwoSidedAssignment, count_crossings

    for _ in range(25):
        n = rng.randint(4, 8)
        m = rng.randint(n - 1, min(14, n * (n - 1) // 2))
        inst = random_layout(rng, n, m)
        g = build_circle_graph(inst, EdgeWeightMode.COUNT_SHIFTED)
        interior, _ = count_crossings(inst, TwoSidedAssignment.from_exterior(inst, ()))
        assert len(g.link_weights) == interior


def test_projection_star_is_overlap_free():
    star = LayoutInstance.build(range(1, 5), [(1, 2), (1, 3), (1, 4)])
    proj = project_to_intervals(star)
    ivs = proj.interval_set.intervals
    assert len(ivs) == 3
    for a in range(3):
        for b in range(a + 1, 3):
            assert overlap_kind(ivs[a], ivs[b]) != "overlap"
    assert not proj.interval_set.pair_weights


def test_projection_crossing_chords_overlap():
    inst = LayoutInstance.build(range(1, 5), [(1, 3), (2, 4)])
    proj = project_to_intervals(inst)
    assert set(proj.interval_set.pair_weights) == {(0, 1)}


def test_projection_empty_graph():
    inst = LayoutInstance.build(range(1, 4), [])
    proj = project_to_intervals(inst)
    assert len(proj.interval_set) == 0


def test_projection_fidelity_random(rng):
    """The overlap graph of the projection is the circle graph: same links,
    same weights, via the identity node mapping."""
    for _ in range(40):
        n = rng.randint(3, 9)
        m = rng.randint(0, min(16, n * (n - 1) // 2))
        inst = random_layout(rng, n, m)
        for mode in EdgeWeightMode:
            g = build_circle_graph(inst, mode)
            proj = project_to_intervals(inst, mode)
            s = proj.interval_set
            assert proj.edge_for_interval == tuple(range(m))
            assert set(s.pair_weights) == set(g.link_weights)
            assert all(s.pair_weights[k] == g.link_weights[k] for k in s.pair_weights)
            for i, iv in enumerate(s.intervals):
                assert iv.weight == g.node_weights[i]
            # endpoint completeness is enforced by the IntervalSet invariant;
            # recheck explicitly anyway
            pts = sorted(p for iv in s.intervals for p in (iv.left, iv.right))
            assert pts == list(range(1, 2 * m + 1))


def test_projection_determinism(rng):
    inst = random_layout(random.Random(7), 8, 13)
    a = project_to_intervals(inst)
    b = project_to_intervals(inst)
    assert a.interval_set.intervals == b.interval_set.intervals
    assert dict(a.interval_set.pair_weights) == dict(b.interval_set.pair_weights)


def test_interval_dump_round_trip():
    inst = c4_with_diagonals()
    s = project_to_intervals(inst, EdgeWeightMode.IGNORE_SHIFTED).interval_set
    text = dump_intervals(s)
    back = parse_intervals(text)
    assert back.intervals == s.intervals
    assert dict(back.pair_weights) == dict(s.pair_weights)
    lines = text.strip().splitlines()
    assert lines[0].split() == ["0"] + [str(x) for x in
                                        (s.intervals[0].left, s.intervals[0].right, s.intervals[0].weight)]
    assert lines[-1].startswith("pair ")
