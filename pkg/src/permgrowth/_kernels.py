"""Hot kernels for pattern containment and sum-indecomposability.

Both kernels operate on 1-based int64 numpy arrays and come in two
interchangeable flavors:

* ``numba``: ``@njit``-compiled (the default whenever numba imports cleanly),
* ``python``: plain interpreted fallback running the same array code.

Select explicitly with the environment variable ``PERMGROWTH_BACKEND``
(``numba`` or ``python``).  ``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import os

import numpy as np


def _contains_impl(pat: np.ndarray, text: np.ndarray) -> bool:
    """Backtracking embedding search: does some subsequence of ``text``
    realize the same relative order as ``pat``?"""
    k = pat.shape[0]
    n = text.shape[0]
    if k == 0:
        return True
    if k > n:
        return False
    choice = np.zeros(k, dtype=np.int64)
    i = 0
    pos = 0
    while True:
        placed = False
        # leftmost-feasible scan; there must be room for the k-i-1 later entries
        while pos <= n - (k - i):
            v = text[pos]
            ok = True
            for j in range(i):
                if (pat[j] < pat[i]) != (text[choice[j]] < v):
                    ok = False
                    break
            if ok:
                choice[i] = pos
                placed = True
                break
            pos += 1
        if placed:
            if i == k - 1:
                return True
            i += 1
            pos = choice[i - 1] + 1
        else:
            if i == 0:
                return False
            i -= 1
            pos = choice[i] + 1


def _is_si_impl(arr: np.ndarray) -> bool:
    """A permutation is sum decomposable iff some proper prefix of length k
    uses exactly the values 1..k, i.e. its running maximum equals k."""
    n = arr.shape[0]
    if n == 0:
        return False
    m = np.int64(0)
    for i in range(n - 1):
        if arr[i] > m:
            m = arr[i]
        if m == i + 1:
            return False
    return True


_requested = os.environ.get("PERMGROWTH_BACKEND", "").strip().lower()

if _requested not in ("", "numba", "python"):
    raise ValueError(
        "PERMGROWTH_BACKEND must be 'numba' or 'python', got %r" % _requested
    )

if _requested != "python":
    try:
        from numba import njit

        contains_arrays = njit(cache=True, nogil=True)(_contains_impl)
        is_si_array = njit(cache=True, nogil=True)(_is_si_impl)
        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        contains_arrays = _contains_impl
        is_si_array = _is_si_impl
        BACKEND = "python"
else:
    contains_arrays = _contains_impl
    is_si_array = _is_si_impl
    BACKEND = "python"
