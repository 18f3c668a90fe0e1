"""Exact solver for max-weight k-overlap sets, any fixed k >= 0.

For k >= 2 a solution may contain arbitrarily long connected runs, so the
instance can no longer be split into independently solvable windows along the
chosen intervals.  Instead the dynamic program threads a *capacity vector*
through the sweep: one entry per interval endpoint recording how many further
overlaps that side of the interval may still accept.  An entry is undecided
(the interval has not been looked at), unlimited (the interval was rejected),
or a residual budget in {0..k}.

Committing an interval I fixes its whole neighborhood at once: a subset J of
its overlapping neighbors (at most k of them, and necessarily including every
neighbor that is already committed) joins the solution and every other
neighbor is rejected.  Freshly joining neighbors receive a budget of
k minus their already-materialized overlap count, split in all possible ways
between their two endpoints; the left share is consumable inside the window
being solved, the right share by the sweep continuation, which is what makes
the two regions independent.  Every already-committed interval stabbed by a
fresh joiner pays one unit of the stabbed side's budget, and a commit step is
legal only if no budget goes negative.

The weight of a commit step adds the weights of the fresh joiners and
subtracts the weight of every overlapping pair that becomes fully selected at
the step: pairs among the joiners themselves, and pairs between a joiner and
any previously committed interval.  Each selected pair is charged exactly
once, at the moment its later member joins.

Values dms^k(I, lambda) -- the best completion of I's window under basic
capacities lambda -- are memoized on (interval, vector restricted to the
overlapping neighbors of I); only those positions can influence the window.
Solution recovery replays the maximizing decisions.  The top-level call wraps
the instance in a zero-weight dummy interval covering everything.
"""

from __future__ import annotations

import math
import sys
from bisect import bisect_right
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Mapping, Sequence

from .model import Interval, IntervalSet, Solution
from .solver_k1 import solve_k0, solve_k1

__all__ = [
    "CapacityVector",
    "LegalSuccessor",
    "GeneralSolver",
    "basic_vector",
    "is_valid_for",
    "legal_successors",
    "transition_weight",
    "dms_k",
    "solve_k",
]

UNDECIDED = None  # the undecided capacity (no decision made about the interval)
UNLIMITED = math.inf  # the unlimited capacity (interval rejected)

_EXCL = "excluded"  # engine-internal rejection marker


# ---------------------------------------------------------------------------
# Public capacity-vector representation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CapacityVector:
    """Residual-overlap budgets per endpoint position 0 .. 2n+1.

    Positions 0 and 2n+1 belong to the implicit dummy interval wrapped around
    the instance.  Paired endpoints of one interval always carry the same
    state class: both undecided, both unlimited, or both numeric (the two
    numeric values may differ -- the budget is split between the sides).
    """

    entries: tuple

    @classmethod
    def initial(cls, s: IntervalSet) -> "CapacityVector":
        """The solve-entry vector: dummy endpoints at 0, everything else
        undecided."""
        n = len(s)
        ent = [UNDECIDED] * (2 * n + 2)
        ent[0] = 0
        ent[2 * n + 1] = 0
        return cls(tuple(ent))

    def state_of(self, interval: Interval):
        """State for one interval: UNDECIDED, UNLIMITED, or (left, right)."""
        a, b = self.entries[interval.left], self.entries[interval.right]
        if a is UNDECIDED and b is UNDECIDED:
            return UNDECIDED
        if a == UNLIMITED and b == UNLIMITED:
            return UNLIMITED
        if isinstance(a, int) and isinstance(b, int):
            return (a, b)
        raise ValueError(
            f"inconsistent endpoint states for [{interval.left},{interval.right}]: {a!r}/{b!r}"
        )

    def replace(self, interval: Interval, state) -> "CapacityVector":
        ent = list(self.entries)
        if state is UNDECIDED:
            ent[interval.left] = ent[interval.right] = UNDECIDED
        elif state == UNLIMITED:
            ent[interval.left] = ent[interval.right] = UNLIMITED
        else:
            ent[interval.left], ent[interval.right] = state
        return CapacityVector(tuple(ent))


@dataclass(frozen=True)
class LegalSuccessor:
    """One way of committing an interval: the updated vector, the chosen
    neighbor set, and the weight contributed by the step (fresh joiner
    weights minus newly selected pair weights)."""

    vector: CapacityVector
    chosen_neighbors: frozenset[int]
    weight_delta: int


# ---------------------------------------------------------------------------
# Engine
# ---------------------------------------------------------------------------


class GeneralSolver:
    """Capacity-vector dynamic program over one instance and one k.

    A solver owns its memo tables; distinct solves do not share state.  The
    dummy interval gets id n (= len(s)).
    """

    def __init__(self, s: IntervalSet, k: int):
        if k < 0:
            raise ValueError("k must be non-negative")
        self.s = s
        self.k = k
        n = len(s)
        self.n = n
        self.dummy = n
        self.left = [iv.left for iv in s.intervals] + [0]
        self.right = [iv.right for iv in s.intervals] + [2 * n + 1]
        self.weight = [iv.weight for iv in s.intervals] + [0]
        self.nb: list[tuple[int, ...]] = [s.neighbors[i] for i in range(n)] + [()]
        self.pw = dict(s.pair_weights)

        # Strictly nested members per owner, sorted by left endpoint.
        self.members: list[list[int]] = [[] for _ in range(n + 1)]
        for i in range(n):
            for j in range(n):
                if i != j and self.left[i] < self.left[j] and self.right[j] < self.right[i]:
                    self.members[i].append(j)
            self.members[self.dummy].append(i)
        for lst in self.members:
            lst.sort(key=lambda j: self.left[j])
        self.member_lefts = [[self.left[j] for j in lst] for lst in self.members]

        self.f_memo: dict = {}
        self.value: int | None = None
        self.chosen: frozenset[int] | None = None

    # -- state helpers ------------------------------------------------------

    def _pair_w(self, a: int, b: int) -> int:
        return self.pw[(a, b) if a < b else (b, a)]

    def _project(self, lam: Mapping[int, object], pos: int) -> tuple:
        """Memo key part: states that can still influence positions >= pos."""
        return tuple(sorted((i, st) for i, st in lam.items() if self.right[i] >= pos))

    def _charging_delta(self, lam: Mapping[int, object], owner: int, extras: Sequence[int]) -> int:
        """Weight contributed by committing ``owner`` with fresh joiners
        ``extras`` (the owner's own weight is added by the window value).

        Adds the fresh joiners' weights; subtracts every pair weight between
        a joiner and an already-committed interval, and every pair among the
        joiners themselves.  Each selected pair is charged exactly once, when
        its later member joins; an owner that joined earlier (already
        numeric) therefore charges no pairs of its own here.
        """
        owner_joins = lam.get(owner) is None
        joiners = (owner, *extras) if owner_joins else tuple(extras)
        delta = sum(self.weight[x] for x in extras)
        for x in joiners:
            for m in self.nb[x]:
                st = lam.get(m)
                if st is not None and st is not _EXCL:
                    delta -= self._pair_w(x, m)
        for a in range(len(joiners)):
            for b in range(a + 1, len(joiners)):
                x, y = joiners[a], joiners[b]
                key = (x, y) if x < y else (y, x)
                if key in self.pw:
                    delta -= self.pw[key]
        return delta

    def _successors(
        self, lam: Mapping[int, object], j: int
    ) -> Iterator[tuple[dict, int, tuple[int, ...]]]:
        """All legal ways of committing interval ``j`` under ``lam``.

        Yields (updated state dict, weight delta, chosen neighbor ids) in
        deterministic order: chosen sets by size then lexicographic ids,
        budget splits ascending.
        """
        k = self.k
        forced: list[int] = []
        fresh_avail: list[int] = []
        for m in self.nb[j]:
            st = lam.get(m)
            if st is None:
                fresh_avail.append(m)
            elif st is not _EXCL:
                forced.append(m)
        if len(forced) > k:
            return
        room = k - len(forced)
        for size in range(0, min(room, len(fresh_avail)) + 1):
            for extra in combinations(fresh_avail, size):
                yield from self._build_successors(lam, j, forced, extra)

    def _build_successors(
        self,
        lam: Mapping[int, object],
        j: int,
        forced: Sequence[int],
        extra: tuple[int, ...],
    ) -> Iterator[tuple[dict, int, tuple[int, ...]]]:
        k = self.k
        fresh_joiners = (j, *extra) if lam.get(j) is None else tuple(extra)

        # Budgets for the fresh joiners: k minus their overlap count after
        # this step (the committing interval, co-joining neighbors, and every
        # already-committed neighbor).
        budgets = []
        for x in extra:
            t = 1
            for m in self.nb[x]:
                if m != j and (m in extra or (lam.get(m) not in (None, _EXCL))):
                    t += 1
            b = k - t
            if b < 0:
                return
            budgets.append(b)

        # One budget unit per side of every committed interval stabbed by a
        # fresh joiner; a step that would drive a side negative is illegal.
        decs: dict[int, list[int]] = {}
        for f in fresh_joiners:
            for m in self.nb[f]:
                st = lam.get(m)
                if st is not None and st is not _EXCL:
                    side = 0 if self.left[f] < self.left[m] else 1
                    decs.setdefault(m, [0, 0])[side] += 1
        new_numeric: dict[int, tuple[int, int]] = {}
        for m, (dl, dr) in decs.items():
            lv, rv = lam[m]  # type: ignore[misc]
            if lv - dl < 0 or rv - dr < 0:
                return
            new_numeric[m] = (lv - dl, rv - dr)

        delta = self._charging_delta(lam, j, extra)

        base = dict(lam)
        base[j] = (0, 0)
        for m in self.nb[j]:
            if lam.get(m) is None and m not in extra:
                base[m] = _EXCL
        base.update(new_numeric)
        chosen = tuple(sorted(forced) + sorted(extra))

        if not extra:
            yield base, delta, chosen
            return
        for alphas in product(*(range(b + 1) for b in budgets)):
            lam2 = dict(base)
            for x, b, a in zip(extra, budgets, alphas):
                lam2[x] = (a, b - a)
            yield lam2, delta, chosen

    # -- value recursion ----------------------------------------------------

    def _window_value(self, owner: int, idx: int, lam: Mapping[int, object]) -> int:
        """Best completion of owner's window from member index ``idx`` on."""
        members = self.members[owner]
        if idx >= len(members):
            return 0
        pos = self.left[members[idx]]
        key = (owner, idx, self._project(lam, pos))
        hit = self.f_memo.get(key)
        if hit is not None:
            return hit
        value = self._options_best(owner, idx, lam)
        self.f_memo[key] = value
        return value

    def _options_best(self, owner: int, idx: int, lam: Mapping[int, object]) -> int:
        members = self.members[owner]
        j = members[idx]
        st = lam.get(j)
        assert st is None or st is _EXCL, "window member unexpectedly committed"
        if st is _EXCL:
            return self._window_value(owner, idx + 1, lam)
        lam_rej = dict(lam)
        lam_rej[j] = _EXCL
        best = self._window_value(owner, idx + 1, lam_rej)
        nidx = bisect_right(self.member_lefts[owner], self.right[j], lo=idx)
        for lam2, delta, _chosen in self._successors(lam, j):
            v = (
                delta
                + self.weight[j]
                + self._window_value(j, 0, self._basic(lam2, j))
                + self._window_value(owner, nidx, lam2)
            )
            if v > best:
                best = v
        return best

    def _basic(self, lam: Mapping[int, object], j: int) -> dict:
        """Restriction of the state to the overlapping neighbors of ``j``:
        the only positions that can influence its window."""
        return {m: lam[m] for m in self.nb[j] if m in lam}

    # -- public entry points ------------------------------------------------

    def dms(self, interval_id: int, lam: Mapping[int, object]) -> int:
        """dms^k of one interval under basic capacities ``lam`` (engine
        form): its weight plus the best selection among its nested set."""
        return self.weight[interval_id] + self._window_value(
            interval_id, 0, self._basic(lam, interval_id)
        )

    def solve(self) -> Solution:
        old_limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old_limit, 4 * self.n + 1000))
        try:
            value = self._window_value(self.dummy, 0, {})
            chosen: list[int] = []
            self._walk(self.dummy, 0, {}, chosen)
        finally:
            sys.setrecursionlimit(old_limit)
        sol = Solution.from_chosen(chosen, self.s, self.k)
        assert sol.weight == value, "recovered solution disagrees with DP value"
        assert sol.max_overlap_degree() <= self.k, "recovered solution infeasible"
        self.value, self.chosen = value, sol.chosen
        return sol

    def _walk(self, owner: int, idx: int, lam: dict, out: list[int]) -> None:
        """Replay the maximizing decisions, collecting chosen intervals."""
        members = self.members[owner]
        while idx < len(members):
            j = members[idx]
            st = lam.get(j)
            if st is _EXCL:
                idx += 1
                continue
            lam_rej = dict(lam)
            lam_rej[j] = _EXCL
            best = self._window_value(owner, idx + 1, lam_rej)
            action = None
            nidx = bisect_right(self.member_lefts[owner], self.right[j], lo=idx)
            for lam2, delta, chosen in self._successors(lam, j):
                v = (
                    delta
                    + self.weight[j]
                    + self._window_value(j, 0, self._basic(lam2, j))
                    + self._window_value(owner, nidx, lam2)
                )
                if v > best:
                    best = v
                    action = (lam2, chosen)
            if action is None:
                lam = lam_rej
                idx += 1
            else:
                lam2, chosen = action
                out.append(j)
                out.extend(x for x in chosen if lam.get(x) is None)
                self._walk(j, 0, self._basic(lam2, j), out)
                lam = lam2
                idx = nidx


# ---------------------------------------------------------------------------
# Public operations on capacity vectors
# ---------------------------------------------------------------------------


def _to_engine_state(lam: CapacityVector, s: IntervalSet) -> dict:
    out: dict = {}
    for i, iv in enumerate(s.intervals):
        st = lam.state_of(iv)
        if st is UNDECIDED:
            continue
        out[i] = _EXCL if st == UNLIMITED else st
    return out


def _to_vector(state: Mapping[int, object], s: IntervalSet) -> CapacityVector:
    n = len(s)
    ent: list = [UNDECIDED] * (2 * n + 2)
    ent[0] = 0
    ent[2 * n + 1] = 0
    for i, st in state.items():
        iv = s.intervals[i]
        if st is _EXCL:
            ent[iv.left] = ent[iv.right] = UNLIMITED
        else:
            ent[iv.left], ent[iv.right] = st  # type: ignore[misc]
    return CapacityVector(tuple(ent))


def _interval_id(interval: Interval | int, s: IntervalSet) -> int:
    if isinstance(interval, int):
        return interval
    for i, iv in enumerate(s.intervals):
        if iv.left == interval.left and iv.right == interval.right:
            return i
    raise ValueError(f"interval [{interval.left},{interval.right}] is not in the set")


def basic_vector(lam: CapacityVector, interval: Interval | int, s: IntervalSet) -> tuple:
    """Restriction of a vector to the positions that can influence the
    interval's window: its overlapping neighbors (plus the interval itself,
    whose state is fixed by the commit).  Two vectors agreeing here yield the
    same window optimum, which makes this the memoization key."""
    i = _interval_id(interval, s)
    out = []
    for m in sorted(s.neighbors[i]):
        st = lam.state_of(s.intervals[m])
        if st is not UNDECIDED:
            out.append((m, UNLIMITED if st == UNLIMITED else st))
    return tuple(out)


def is_valid_for(lam: CapacityVector, interval: Interval | int, s: IntervalSet, k: int) -> bool:
    """A vector is valid for an interval when the interval's own endpoints
    carry numeric budgets and at most k of its overlapping neighbors are
    committed (numeric).  Undecided neighbors do not count."""
    i = _interval_id(interval, s)
    iv = s.intervals[i]
    st = lam.state_of(iv)
    if st is UNDECIDED or st == UNLIMITED:
        return False
    committed = 0
    for m in s.neighbors[i]:
        mst = lam.state_of(s.intervals[m])
        if mst is not UNDECIDED and mst != UNLIMITED:
            committed += 1
    return committed <= k


def legal_successors(
    lam: CapacityVector, interval: Interval | int, s: IntervalSet, k: int
) -> list[LegalSuccessor]:
    """All legal commit steps for ``interval`` under ``lam``.

    The interval must not be rejected already.  Enumeration order is
    deterministic: neighbor subsets by size then lexicographic ids, budget
    splits ascending.
    """
    i = _interval_id(interval, s)
    iv = s.intervals[i]
    if lam.state_of(iv) == UNLIMITED:
        raise ValueError("cannot commit a rejected interval")
    eng = GeneralSolver(s, k)
    state = _to_engine_state(lam, s)
    out = []
    for lam2, delta, chosen in eng._successors(state, i):
        out.append(LegalSuccessor(_to_vector(lam2, s), frozenset(chosen), delta))
    return out


def transition_weight(
    lam_prime: CapacityVector,
    lam: CapacityVector,
    interval: Interval | int,
    s: IntervalSet,
) -> int:
    """Weight contributed by one commit step, reconstructed from the two
    vectors: fresh joiner weights minus the weights of every overlapping
    pair that becomes fully selected at the step (joiner-with-joiner pairs
    counted once, plus joiner-with-previously-committed pairs)."""
    i = _interval_id(interval, s)
    eng = GeneralSolver(s, 0)  # k is irrelevant for the charging rule
    state = _to_engine_state(lam, s)
    new = []
    for m in s.neighbors[i]:
        before = lam.state_of(s.intervals[m])
        after = lam_prime.state_of(s.intervals[m])
        if before is UNDECIDED and isinstance(after, tuple):
            new.append(m)
    return eng._charging_delta(state, i, sorted(new))


def dms_k(
    interval: Interval | int,
    lam: CapacityVector,
    s: IntervalSet,
    k: int,
    solver: GeneralSolver | None = None,
) -> int:
    """Best k-overlap-set weight on the interval's window, the interval
    included, under pre-set capacities.  Rejects vectors not valid for the
    interval.  Passing a solver reuses (and fills) its memo table."""
    i = _interval_id(interval, s)
    if not is_valid_for(lam, i, s, k):
        raise ValueError("capacity vector is not valid for the interval")
    eng = solver if solver is not None else GeneralSolver(s, k)
    return eng.dms(i, _to_engine_state(lam, s))


def solve_k(s: IntervalSet, k: int, force_general: bool = False) -> Solution:
    """Exact max-weight k-overlap set.

    Delegates to the specialized k<=1 solver unless ``force_general`` is set
    (the general path is asymptotically and practically slower there).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if not force_general:
        if k == 0:
            return solve_k0(s)
        if k == 1:
            return solve_k1(s)
    return GeneralSolver(s, k).solve()
