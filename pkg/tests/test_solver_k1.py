import random
from itertools import combinations

import pytest

from conftest import make_set
from twosided.bench import random_interval_set
from twosided.model import restrict, solution_weight
from twosided.oracle import brute_force_k_overlap
from twosided.solver_k1 import (
    compute_dms1,
    dms1_pair,
    dms1_single,
    solve_k0,
    solve_k1,
)


# -- dms values on the worked examples ---------------------------------------


def test_dms1_single_leaf_interval():
    s = make_set([(1, 2), (3, 4)], [7, 1])
    table = compute_dms1(s)
    assert dms1_single(s.intervals[0], s, table) == 7


def test_dms1_single_two_disjoint_nested():
    # container w=0 nesting two disjoint intervals: both fit
    s = make_set([(1, 6), (2, 3), (4, 5)], [0, 5, 7])
    table = compute_dms1(s)
    assert dms1_single(s.intervals[0], s, table) == 12


def test_dms1_single_nested_overlapping_pair():
    # container w=0 nesting an overlapping pair (3, 3, pair weight 1): the
    # pair beats either single
    s = make_set([(1, 6), (2, 4), (3, 5)], [0, 3, 3], 1)
    table = compute_dms1(s)
    assert dms1_single(s.intervals[0], s, table) == 5


def test_dms1_pair_bare():
    s = make_set([(1, 3), (2, 4)], [2, 2], 1)
    table = compute_dms1(s)
    assert dms1_pair(s.intervals[0], s.intervals[1], s, table) == 3


def test_dms1_pair_with_left_middle_extra():
    # I=[1,5], J=[4,8]; [2,3] w=6 sits in the left region
    s = make_set([(1, 5), (4, 8), (2, 3), (6, 7)], [2, 3, 6, 0], 1)
    table = compute_dms1(s)
    assert dms1_pair(s.intervals[0], s.intervals[1], s, table) == 6 + 2 + 3 - 1


def test_dms1_pair_with_nested_single():
    # normalized form of I=[1,4], J=[3,8] with one extra [5,6] w=1 nested in J
    s = make_set([(1, 3), (2, 6), (4, 5)], [2, 2, 1], 1)
    table = compute_dms1(s)
    assert dms1_pair(s.intervals[0], s.intervals[1], s, table) == 2 + 2 - 1 + 1


def test_dms1_pair_rejects_backward_or_disjoint():
    s = make_set([(1, 3), (2, 4)], [2, 2], 1)
    table = compute_dms1(s)
    with pytest.raises(ValueError):
        dms1_pair(s.intervals[1], s.intervals[0], s, table)  # backward
    t = make_set([(1, 2), (3, 4)])
    with pytest.raises(ValueError):
        dms1_pair(t.intervals[0], t.intervals[1], t, compute_dms1(t))


# -- solve_k1 ----------------------------------------------------------------


def test_solve_k1_empty():
    sol = solve_k1(make_set([]))
    assert sol.weight == 0 and sol.chosen == frozenset()


def test_solve_k1_triangle():
    s = make_set([(1, 4), (2, 5), (3, 6)], [1, 1, 1], 1)
    sol = solve_k1(s)
    assert sol.weight == 1
    assert sol.max_overlap_degree() <= 1


def test_solve_k1_two_disjoint_pairs():
    s = make_set([(1, 3), (2, 4), (5, 7), (6, 8)], [2, 2, 2, 2], 1)
    sol = solve_k1(s)
    assert sol.weight == 6
    assert sol.chosen == frozenset({0, 1, 2, 3})


def test_solve_k0_examples():
    s = make_set([(1, 3), (2, 4)], [3, 5], 1)
    sol = solve_k0(s)
    assert sol.weight == 5 and sol.chosen == frozenset({1})
    assert not sol.overlap_pairs

    chain = make_set([(1, 3), (2, 5), (4, 6)], [1, 1, 1], 1)
    assert solve_k0(chain).weight == 2

    tower = make_set([(1, 8), (2, 7), (3, 6), (4, 5)], [1, 1, 1, 1], 1)
    assert solve_k0(tower).weight == 4


# -- oracle equivalence and feasibility --------------------------------------


def test_oracle_equivalence_small(rng):
    for trial in range(150):
        s = random_interval_set(rng.randint(1, 12), random.Random(trial))
        for k, solver in ((0, solve_k0), (1, solve_k1)):
            got = solver(s)
            want = brute_force_k_overlap(s, k)
            assert got.weight == want.weight, (trial, k)
            assert got.weight == solution_weight(got.chosen, s)
            assert got.max_overlap_degree() <= k


def test_python_kernel_parity(rng):
    for trial in range(25):
        s = random_interval_set(rng.randint(1, 10), random.Random(1000 + trial))
        fast = solve_k1(s)
        slow = solve_k1(s, kernel="python")
        assert fast.weight == slow.weight
        assert fast.chosen == slow.chosen


def test_k_monotonicity(rng):
    for trial in range(60):
        s = random_interval_set(rng.randint(1, 12), random.Random(2000 + trial))
        assert solve_k1(s).weight >= solve_k0(s).weight


def test_no_triple_at_common_stab_point(rng):
    """No three chosen intervals spanning a common point may carry two or
    more overlap edges among themselves."""
    for trial in range(50):
        s = random_interval_set(rng.randint(3, 12), random.Random(3000 + trial))
        sol = solve_k1(s)
        chosen = sorted(sol.chosen)
        n = len(s)
        for x in range(1, 2 * n + 1):
            at_x = [i for i in chosen if s.intervals[i].left <= x <= s.intervals[i].right]
            for triple in combinations(at_x, 3):
                edges = sum(
                    1
                    for a, b in combinations(triple, 2)
                    if (min(a, b), max(a, b)) in s.pair_weights
                )
                assert edges <= 1


def test_window_optimality_of_dms_pair(rng):
    """Each stored dms1 pair value equals the brute-force optimum of the
    pair's window with both intervals forced in."""
    for trial in range(15):
        s = random_interval_set(rng.randint(3, 8), random.Random(4500 + trial))
        table = compute_dms1(s)
        for (i, j), value in table.pair.items():
            lo = s.intervals[i].left
            hi = s.intervals[j].right
            window_ids = [
                w for w, iv in enumerate(s.intervals)
                if lo <= iv.left and iv.right <= hi
            ]
            others = [w for w in window_ids if w not in (i, j)]
            best = None
            for size in range(len(others) + 1):
                for extra in combinations(others, size):
                    ids = {i, j, *extra}
                    degs = {a: 0 for a in ids}
                    for a in ids:
                        for b in ids:
                            if a < b and (a, b) in s.pair_weights:
                                degs[a] += 1
                                degs[b] += 1
                    if max(degs.values()) > 1:
                        continue
                    w = solution_weight(ids, s)
                    if best is None or w > best:
                        best = w
            assert value == best, (trial, i, j)


def test_window_optimality_of_dms_single(rng):
    """Each stored dms1 single value equals the brute-force optimum of the
    restricted window with the interval forced in."""
    for trial in range(25):
        s = random_interval_set(rng.randint(2, 8), random.Random(4000 + trial))
        table = compute_dms1(s)
        for i, iv in enumerate(s.intervals):
            window_ids = [
                j for j, w in enumerate(s.intervals)
                if iv.left <= w.left and w.right <= iv.right
            ]
            assert set(window_ids) == {
                j for j, w in enumerate(s.intervals) if w in restrict(s, iv.left, iv.right)
            }
            best = None
            others = [j for j in window_ids if j != i]
            for size in range(len(others) + 1):
                for extra in combinations(others, size):
                    ids = {i, *extra}
                    degs = {a: 0 for a in ids}
                    for a in ids:
                        for b in ids:
                            if a < b and (a, b) in s.pair_weights:
                                degs[a] += 1
                                degs[b] += 1
                    if degs and max(degs.values()) > 1:
                        continue
                    w = solution_weight(ids, s)
                    if best is None or w > best:
                        best = w
            assert table.single[i] == best
