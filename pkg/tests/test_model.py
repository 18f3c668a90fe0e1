import random

import pytest

from conftest import complete_graph, make_set, random_layout
from twosided.model import (
    A_NESTS_B,
    DISJOINT,
    OVERLAP,
    Interval,
    IntervalSet,
    LayoutInstance,
    TwoSidedAssignment,
    chords_cross,
    count_crossings,
    fit,
    forward_overlap_set,
    nested_set,
    overlap_kind,
    overlap_set,
    restrict,
    solution_weight,
    span,
)


# -- chords_cross -----------------------------------------------------------


def test_chords_cross_alternation():
    order = (1, 2, 3, 4)
    assert chords_cross((1, 3), (2, 4), order)
    assert not chords_cross((1, 2), (3, 4), order)
    assert not chords_cross((1, 4), (2, 3), order)  # nested arcs


def test_chords_sharing_a_vertex_never_cross():
    order = (1, 2, 3, 4)
    assert not chords_cross((1, 3), (1, 4), order)
    assert not chords_cross((1, 3), (3, 2), order)


def test_chords_cross_symmetry(rng):
    for _ in range(200):
        n = rng.randint(4, 9)
        order = list(range(1, n + 1))
        rng.shuffle(order)
        a = tuple(rng.sample(range(1, n + 1), 2))
        b = tuple(rng.sample(range(1, n + 1), 2))
        assert chords_cross(a, b, order) == chords_cross(b, a, order)


# -- count_crossings --------------------------------------------------------


def all_interior(instance: LayoutInstance) -> TwoSidedAssignment:
    return TwoSidedAssignment.from_exterior(instance, ())


def test_k5_all_interior_five_crossings():
    k5 = complete_graph(5)
    assert count_crossings(k5, all_interior(k5)) == (5, 0)


def test_k5_all_exterior_by_symmetry():
    k5 = complete_graph(5)
    a = TwoSidedAssignment.from_exterior(k5, k5.edge_ids())
    assert count_crossings(k5, a) == (0, 5)


def test_c4_all_interior_no_crossings():
    c4 = LayoutInstance.build(range(1, 5), [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert count_crossings(c4, all_interior(c4)) == (0, 0)


def test_count_crossings_rejects_malformed_partition():
    c4 = LayoutInstance.build(range(1, 5), [(1, 2), (2, 3), (3, 4), (1, 4)])
    with pytest.raises(ValueError):
        count_crossings(c4, TwoSidedAssignment(frozenset({0, 1}), frozenset({1, 2, 3})))
    with pytest.raises(ValueError):
        count_crossings(c4, TwoSidedAssignment(frozenset({0, 1}), frozenset({2})))


def test_count_crossings_rotation_and_reflection_invariance(rng):
    for _ in range(40):
        n = rng.randint(4, 8)
        m = rng.randint(n, min(12, n * (n - 1) // 2))
        inst = random_layout(rng, n, m)
        base = count_crossings(inst, all_interior(inst))
        shift = rng.randrange(n)
        rotated = LayoutInstance.build(
            inst.vertices, inst.edges, inst.order[shift:] + inst.order[:shift]
        )
        reflected = LayoutInstance.build(inst.vertices, inst.edges, inst.order[::-1])
        assert count_crossings(rotated, all_interior(rotated)) == base
        assert count_crossings(reflected, all_interior(reflected)) == base


# -- instance validation ----------------------------------------------------


def test_layout_instance_rejects_bad_input():
    with pytest.raises(ValueError):
        LayoutInstance.build([1, 2], [(1, 1)])
    with pytest.raises(ValueError):
        LayoutInstance.build([1, 2], [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        LayoutInstance.build([1, 2, 3], [(1, 2)], order=[1, 2, 2])


# -- interval classification ------------------------------------------------


def test_overlap_kind_cases():
    assert overlap_kind(Interval(1, 3), Interval(2, 4)) == OVERLAP
    assert overlap_kind(Interval(1, 4), Interval(2, 3)) == A_NESTS_B
    assert overlap_kind(Interval(1, 2), Interval(3, 4)) == DISJOINT


def test_overlap_kind_rejects_shared_endpoints():
    with pytest.raises(ValueError):
        overlap_kind(Interval(1, 3), Interval(3, 5))


def test_overlap_and_forward_sets():
    i = Interval(2, 5)
    s = [Interval(1, 3), Interval(4, 7)]
    assert overlap_set(i, s) == s
    assert forward_overlap_set(i, s) == [Interval(4, 7)]
    big = Interval(1, 8)
    assert nested_set(big, [Interval(2, 3)]) == [Interval(2, 3)]
    assert overlap_set(big, [Interval(2, 3)]) == []
    assert overlap_set(Interval(1, 4), []) == []
    assert forward_overlap_set(Interval(1, 4), []) == []
    assert nested_set(Interval(1, 4), []) == []


def test_overlap_set_symmetry_and_forward_partition(rng):
    from twosided.bench import random_interval_set

    for seed in range(30):
        s = random_interval_set(rng.randint(2, 10), random.Random(seed))
        ivs = s.intervals
        for a in range(len(ivs)):
            for b in range(len(ivs)):
                if a == b:
                    continue
                in_ab = ivs[b] in overlap_set(ivs[a], ivs)
                in_ba = ivs[a] in overlap_set(ivs[b], ivs)
                assert in_ab == in_ba
                if in_ab:
                    fwd_ab = ivs[b] in forward_overlap_set(ivs[a], ivs)
                    fwd_ba = ivs[a] in forward_overlap_set(ivs[b], ivs)
                    assert fwd_ab != fwd_ba
        for a in range(len(ivs)):
            fwd = forward_overlap_set(ivs[a], ivs)
            ovl = overlap_set(ivs[a], ivs)
            assert all(x in ovl for x in fwd)


def test_length_sum_bound(rng):
    from twosided.bench import random_interval_set

    for seed in range(20):
        s = random_interval_set(rng.randint(1, 10), random.Random(seed))
        ell = sum(iv.length for iv in s.intervals)
        assert ell == s.total_length
        double_sum = sum(
            s.intervals[i].length + s.intervals[j].length for (i, j) in s.pair_weights
        ) * 2  # each unordered pair appears twice in the double sum
        assert double_sum <= 2 * s.max_degree * ell


# -- span / fit -------------------------------------------------------------


def test_span_fit_single_interval():
    assert span([Interval(1, 4)]) == 3
    assert fit([Interval(1, 4)]) == 3


def test_span_fit_overlapping_pair():
    pair = [Interval(1, 3), Interval(2, 5)]
    assert span(pair) == 4
    assert fit(pair) == 2


def test_span_fit_rejects_empty_and_disconnected():
    with pytest.raises(ValueError):
        span([])
    with pytest.raises(ValueError):
        fit([])
    disconnected = [Interval(1, 2), Interval(3, 4)]
    with pytest.raises(ValueError):
        span(disconnected)
    with pytest.raises(ValueError):
        fit(disconnected)


# -- IntervalSet / restrict / solution_weight --------------------------------


def test_interval_set_validates_endpoints_and_pairs():
    with pytest.raises(ValueError):
        IntervalSet((Interval(1, 3), Interval(2, 5)), {(0, 1): 1})  # endpoints not 1..4
    with pytest.raises(ValueError):
        IntervalSet((Interval(1, 3), Interval(2, 4)), {})  # missing pair entry
    with pytest.raises(ValueError):
        IntervalSet((Interval(1, 2), Interval(3, 4)), {(0, 1): 1})  # spurious pair


def test_restrict_windows():
    s = make_set([(1, 4), (2, 3), (5, 6)])
    assert restrict(s, float("-inf"), float("inf")) == list(s.intervals)
    assert restrict(s, 1, 4) == [s.intervals[0], s.intervals[1]]
    assert restrict(s, 2, 3) == [s.intervals[1]]


def test_solution_weight():
    s = make_set([(1, 3), (2, 4)], [3, 4], 1)
    assert solution_weight([], s) == 0
    assert solution_weight([0], s) == 3
    assert solution_weight([0, 1], s) == 6
