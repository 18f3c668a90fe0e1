"""Exact solver for max-weight 1-overlap sets (and the k=0 fast path).

A 1-overlap set decomposes into isolated intervals and isolated overlapping
pairs: no point of the line can be covered by three chosen, pairwise
connected intervals.  The dynamic program therefore tabulates two families of
subproblem values over windows of the line:

* ``dms1(I)``    -- best 1-overlap set on the window spanned by I that
                    contains I;
* ``dms1(I, J)`` -- best 1-overlap set on the window spanned by an
                    overlapping pair (I, J), J in the forward overlap set of
                    I, containing both.

A single value is its weight plus a sweep over the intervals nested in it; a
pair value adds three independent sweeps over the left, middle and right
regions the pair cuts out of its window.  Values are filled in increasing
order of window span, so each sweep only consults finished entries, and a
final sweep over the whole line assembles the optimum.  Solution recovery
re-runs the sweeps of the windows along the optimal decomposition and reads
off the recorded choices; all arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _sweep
from .model import (
    Interval,
    IntervalSet,
    Solution,
    forward_overlap_set,
    restrict,
)

__all__ = [
    "Dms1Table",
    "compute_dms1",
    "dms1_single",
    "dms1_pair",
    "restrict",
    "solve_k1",
    "solve_k0",
]

_NEG = -(1 << 60)  # sentinel for "not yet computed"


class _Engine:
    """Flat-array form of an IntervalSet plus the DP tables."""

    def __init__(self, s: IntervalSet, kernel: str = "auto"):
        self.s = s
        self.kernel = _sweep.get_kernel(kernel)
        n = len(s)
        self.n = n
        self.left = np.zeros(n, dtype=np.int64)
        self.right = np.zeros(n, dtype=np.int64)
        self.weight = np.zeros(n, dtype=np.int64)
        self.start_at = np.full(2 * n + 2, -1, dtype=np.int64)
        for i, iv in enumerate(s.intervals):
            self.left[i] = iv.left
            self.right[i] = iv.right
            self.weight[i] = iv.weight
            self.start_at[iv.left] = i

        # CSR over forward overlap pairs, partners ascending by id.
        fwd: list[list[int]] = [[] for _ in range(n)]
        for (i, j) in sorted(s.pair_weights):
            a, b = s.intervals[i], s.intervals[j]
            if a.left < b.left:
                fwd[i].append(j)
            else:
                fwd[j].append(i)
        self.ptr = np.zeros(n + 1, dtype=np.int64)
        flat: list[int] = []
        for i in range(n):
            self.ptr[i] = len(flat)
            flat.extend(fwd[i])
        self.ptr[n] = len(flat)
        self.partner = np.asarray(flat, dtype=np.int64) if flat else np.zeros(0, dtype=np.int64)
        self.pair_of = {}
        self.pair_w = np.zeros(len(flat), dtype=np.int64)
        for i in range(n):
            for t in range(int(self.ptr[i]), int(self.ptr[i + 1])):
                j = int(self.partner[t])
                self.pair_of[(i, j)] = t
                self.pair_w[t] = s.pair_weight(i, j)

        self.dms_single = np.full(n, _NEG, dtype=np.int64)
        self.pair_val = np.full(len(flat), _NEG, dtype=np.int64)
        self.s_buf = np.zeros(2 * n + 2, dtype=np.int64)
        self.choice_code = np.zeros(2 * n + 2, dtype=np.int64)
        self.choice_aux = np.zeros(2 * n + 2, dtype=np.int64)

    def sweep(self, lo: int, hi: int, use_pairs: bool) -> int:
        return int(
            self.kernel(
                lo,
                hi,
                self.start_at,
                self.right,
                self.dms_single,
                self.ptr,
                self.partner,
                self.pair_val,
                use_pairs,
                self.s_buf,
                self.choice_code,
                self.choice_aux,
            )
        )

    def tasks(self, use_pairs: bool) -> list[tuple[int, int, int, int]]:
        """(window span, kind, left endpoint, id) for every table entry,
        ascending; processing in this order satisfies the computation
        preconditions (all strictly smaller windows done first)."""
        out = []
        for i in range(self.n):
            out.append((int(self.right[i] - self.left[i]), 0, int(self.left[i]), i))
        if use_pairs:
            for (i, j), t in self.pair_of.items():
                out.append((int(self.right[j] - self.left[i]), 1, int(self.left[i]), t))
        out.sort()
        return out

    def fill_tables(self, use_pairs: bool) -> None:
        for _span, kind, _lft, ident in self.tasks(use_pairs):
            if kind == 0:
                i = ident
                inner = self.sweep(int(self.left[i]), int(self.right[i]), use_pairs)
                self.dms_single[i] = inner + int(self.weight[i])
            else:
                t = ident
                self.pair_val[t] = self._pair_value(t, use_pairs)

    def _pair_value(self, t: int, use_pairs: bool) -> int:
        i = int(np.searchsorted(self.ptr, t, side="right")) - 1
        j = int(self.partner[t])
        c, d = int(self.left[i]), int(self.right[i])
        e, f = int(self.left[j]), int(self.right[j])
        lreg = self.sweep(c, e, use_pairs)
        mreg = self.sweep(e, d, use_pairs)
        rreg = self.sweep(d, f, use_pairs)
        return (
            lreg + mreg + rreg + int(self.weight[i]) + int(self.weight[j]) - int(self.pair_w[t])
        )

    def solve(self, use_pairs: bool) -> tuple[int, list[int]]:
        self.fill_tables(use_pairs)
        best = self.sweep(0, 2 * self.n + 1, use_pairs)
        chosen = self._backtrack(use_pairs)
        return best, chosen

    def _backtrack(self, use_pairs: bool) -> list[int]:
        chosen: list[int] = []
        windows = [(0, 2 * self.n + 1)]
        while windows:
            lo, hi = windows.pop()
            self.sweep(lo, hi, use_pairs)
            x = lo + 1
            while x < hi:
                code = int(self.choice_code[x])
                if code == _sweep.CHOICE_COPY:
                    x += 1
                elif code == _sweep.CHOICE_SINGLE:
                    i = int(self.choice_aux[x])
                    chosen.append(i)
                    windows.append((int(self.left[i]), int(self.right[i])))
                    x = int(self.right[i]) + 1
                else:
                    t = int(self.choice_aux[x])
                    i = int(np.searchsorted(self.ptr, t, side="right")) - 1
                    j = int(self.partner[t])
                    chosen.append(i)
                    chosen.append(j)
                    c, d = int(self.left[i]), int(self.right[i])
                    e, f = int(self.left[j]), int(self.right[j])
                    windows.append((c, e))
                    windows.append((e, d))
                    windows.append((d, f))
                    x = f + 1
        return chosen


@dataclass(frozen=True)
class Dms1Table:
    """Finished subproblem values: ``single[i]`` per interval id, ``pair[(i,
    j)]`` per forward overlapping pair."""

    single: dict[int, int]
    pair: dict[tuple[int, int], int]


def compute_dms1(s: IntervalSet, include_pairs: bool = True, kernel: str = "auto") -> Dms1Table:
    """Fill both value families bottom-up for the whole instance."""
    eng = _Engine(s, kernel)
    eng.fill_tables(include_pairs)
    single = {i: int(eng.dms_single[i]) for i in range(eng.n)}
    pair = {}
    if include_pairs:
        for (i, j), t in eng.pair_of.items():
            pair[(i, j)] = int(eng.pair_val[t])
    return Dms1Table(single, pair)


def _interval_id(interval: Interval, s: IntervalSet) -> int:
    for i, iv in enumerate(s.intervals):
        if iv.left == interval.left and iv.right == interval.right:
            return i
    raise ValueError(f"interval [{interval.left},{interval.right}] is not in the set")


def _load_table(eng: _Engine, table: Dms1Table) -> None:
    for i, v in table.single.items():
        eng.dms_single[i] = v
    for (i, j), v in table.pair.items():
        eng.pair_val[eng.pair_of[(i, j)]] = v


def dms1_single(interval: Interval, s: IntervalSet, table: Dms1Table) -> int:
    """Best 1-overlap set on the window of ``interval`` forced to contain it.

    All values for strictly shorter windows must already be in ``table``; a
    violation is a programming error in the computation schedule.
    """
    i = _interval_id(interval, s)
    length = interval.length
    for j, iv in enumerate(s.intervals):
        if iv.length < length:
            assert j in table.single, f"missing dms1 single for interval {j}"
    for a in range(len(s)):
        for b in s.neighbors[a]:
            if a < b:
                ia, ib = s.intervals[a], s.intervals[b]
                pair_span = max(ia.right, ib.right) - min(ia.left, ib.left)
                if pair_span < length:
                    key = (a, b) if ia.left < ib.left else (b, a)
                    assert key in table.pair, f"missing dms1 pair for {key}"
    eng = _Engine(s)
    _load_table(eng, table)
    inner = eng.sweep(interval.left, interval.right, use_pairs=True)
    return inner + interval.weight


def dms1_pair(i_interval: Interval, j_interval: Interval, s: IntervalSet, table: Dms1Table) -> int:
    """Best 1-overlap set on the pair's window forced to contain both.

    ``j_interval`` must lie in the forward overlap set of ``i_interval``.
    """
    if j_interval not in forward_overlap_set(i_interval, s.intervals):
        raise ValueError("second interval must overlap the first on its right side")
    i = _interval_id(i_interval, s)
    j = _interval_id(j_interval, s)
    c, d = i_interval.left, i_interval.right
    e, f = j_interval.left, j_interval.right
    window_fit = max(e - c, d - e, f - d)
    for a, iv in enumerate(s.intervals):
        if iv.length < window_fit:
            assert a in table.single, f"missing dms1 single for interval {a}"
    for a in range(len(s)):
        for b in s.neighbors[a]:
            if a < b:
                ia, ib = s.intervals[a], s.intervals[b]
                pair_span = max(ia.right, ib.right) - min(ia.left, ib.left)
                if pair_span < window_fit:
                    key = (a, b) if ia.left < ib.left else (b, a)
                    assert key in table.pair, f"missing dms1 pair for {key}"
    eng = _Engine(s)
    _load_table(eng, table)
    lreg = eng.sweep(c, e, use_pairs=True)
    mreg = eng.sweep(e, d, use_pairs=True)
    rreg = eng.sweep(d, f, use_pairs=True)
    return lreg + mreg + rreg + i_interval.weight + j_interval.weight - s.pair_weight(i, j)


def solve_k1(s: IntervalSet, kernel: str = "auto") -> Solution:
    """Exact max-weight 1-overlap set with solution recovery."""
    eng = _Engine(s, kernel)
    weight, chosen = eng.solve(use_pairs=True)
    sol = Solution.from_chosen(chosen, s, k=1)
    assert sol.weight == weight, "recovered solution disagrees with DP value"
    return sol


def solve_k0(s: IntervalSet, kernel: str = "auto") -> Solution:
    """Exact max-weight independent (0-overlap) set: the same dynamic
    program with every pair option disabled."""
    eng = _Engine(s, kernel)
    weight, chosen = eng.solve(use_pairs=False)
    sol = Solution.from_chosen(chosen, s, k=0)
    assert sol.weight == weight, "recovered solution disagrees with DP value"
    return sol
