"""Array kernel for the interval sweeps of the bounded-overlap solvers.

One kernel serves every sweep in the k<=1 dynamic program: the per-interval
tables, the three regions of an overlapping pair, and the final global pass.
A sweep walks the integer positions of a window (lo, hi) from right to left;
at the start point of a window-contained interval it maximizes over skipping
the interval, taking it alone, or taking it together with one partner from
its forward overlap set.

The kernel is compiled with numba when available; the pure-Python twin below
computes byte-identical results and is kept importable for testing and for
environments without numba.
"""

from __future__ import annotations

CHOICE_COPY = 0
CHOICE_SINGLE = 1
CHOICE_PAIR = 2


def run_sweep_py(
    lo,
    hi,
    start_at,
    right,
    dms_single,
    ptr,
    partner,
    pair_val,
    use_pairs,
    s_buf,
    choice_code,
    choice_aux,
):
    """Evaluate one sweep over the open window (lo, hi); returns S[lo + 1].

    ``start_at[x]`` is the interval starting at position x (or -1).  Values
    for positions outside the window are stale leftovers from earlier calls
    and are never read.  Choice arrays record the maximizing decision at each
    position for solution recovery; ties keep the earliest option in the
    order copy < single < pair (partners ascending).
    """
    s_buf[hi] = 0
    for x in range(hi - 1, lo, -1):
        best = s_buf[x + 1]
        code = CHOICE_COPY
        aux = -1
        j = start_at[x]
        if j >= 0 and right[j] < hi:
            v = dms_single[j] + s_buf[right[j] + 1]
            if v > best:
                best = v
                code = CHOICE_SINGLE
                aux = j
            if use_pairs:
                for t in range(ptr[j], ptr[j + 1]):
                    f = right[partner[t]]
                    if f < hi:
                        v = pair_val[t] + s_buf[f + 1]
                        if v > best:
                            best = v
                            code = CHOICE_PAIR
                            aux = t
        s_buf[x] = best
        choice_code[x] = code
        choice_aux[x] = aux
    return s_buf[lo + 1]


try:  # pragma: no cover - exercised indirectly
    from numba import njit

    run_sweep_nb = njit(cache=True, nogil=True)(run_sweep_py)
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    run_sweep_nb = run_sweep_py
    HAVE_NUMBA = False


def get_kernel(name: str = "auto"):
    """Select the sweep implementation: "auto", "numba", or "python"."""
    if name == "python":
        return run_sweep_py
    if name == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not available")
        return run_sweep_nb
    if name == "auto":
        return run_sweep_nb if HAVE_NUMBA else run_sweep_py
    raise ValueError(f"unknown kernel {name!r}")
