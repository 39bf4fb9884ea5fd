"""Enumeration kernels behind the brute-force oracles.

Every kernel has a numba implementation (``_nb_*``) and a pure-numpy one
(``_np_*``).  The public names dispatch on ``BACKEND``, which is "numba"
unless numba is missing or ``ZASYM_PURE_NUMPY`` is set to a true value.

Fillings are int64 arrays with one row per filling and one column per cell,
cells in row-major order.  Odometer order: the last cell varies fastest.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

_PURE = os.environ.get("ZASYM_PURE_NUMPY", "").strip().lower() in {"1", "true", "yes", "on"}
BACKEND = "numba" if HAVE_NUMBA and not _PURE else "numpy"

CHUNK = 1 << 16


# --- odometer over independent per-cell ranges ------------------------------


def _np_odometer_block(lo, hi, start, count):
    k = lo.shape[0]
    out = np.empty((count, k), dtype=np.int64)
    idx = np.arange(start, start + count, dtype=np.int64)
    for c in range(k - 1, -1, -1):
        radix = hi[c] - lo[c] + 1
        idx, digit = np.divmod(idx, radix)
        out[:, c] = lo[c] + digit
    return out


def _np_odometer_rank(rows, lo, hi):
    rows = np.asarray(rows, dtype=np.int64)
    ranks = np.zeros(rows.shape[0], dtype=np.int64)
    ok = np.all((rows >= lo) & (rows <= hi), axis=1)
    for c in range(lo.shape[0]):
        ranks = ranks * (hi[c] - lo[c] + 1) + (rows[:, c] - lo[c])
    ranks[~ok] = -1
    return ranks


def _np_norm_histogram(lo, hi):
    size = int(np.sum(hi - lo)) + 1
    hist = np.zeros(size, dtype=np.int64)
    total = int(np.prod(hi - lo + 1))
    base = int(np.sum(lo))
    for start in range(0, total, CHUNK):
        block = _np_odometer_block(lo, hi, start, min(CHUNK, total - start))
        hist += np.bincount(block.sum(axis=1) - base, minlength=size)
    return hist


if HAVE_NUMBA:

    @njit(cache=True)
    def _nb_odometer_block(lo, hi, start, count):
        k = lo.shape[0]
        out = np.empty((count, k), dtype=np.int64)
        for r in range(count):
            idx = start + r
            for c in range(k - 1, -1, -1):
                radix = hi[c] - lo[c] + 1
                out[r, c] = lo[c] + idx % radix
                idx //= radix
        return out

    @njit(cache=True)
    def _nb_odometer_rank(rows, lo, hi):
        m, k = rows.shape
        ranks = np.empty(m, dtype=np.int64)
        for r in range(m):
            acc = 0
            for c in range(k):
                v = rows[r, c]
                if v < lo[c] or v > hi[c]:
                    acc = -1
                    break
                acc = acc * (hi[c] - lo[c] + 1) + (v - lo[c])
            ranks[r] = acc
        return ranks

    @njit(cache=True)
    def _nb_norm_histogram(lo, hi):
        k = lo.shape[0]
        size = 1
        for c in range(k):
            size += hi[c] - lo[c]
        hist = np.zeros(size, dtype=np.int64)
        cur = lo.copy()
        s = 0
        while True:
            hist[s] += 1
            c = k - 1
            while c >= 0 and cur[c] == hi[c]:
                s -= cur[c] - lo[c]
                cur[c] = lo[c]
                c -= 1
            if c < 0:
                break
            cur[c] += 1
            s += 1
        return hist


# --- semistandard tableaux --------------------------------------------------


def _ssyt_geometry(parts, n):
    """Per-cell left/up neighbour indices and the largest admissible entry."""
    parts = list(parts)
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0] if parts else 0)]
    index = {}
    cells = [(i, j) for i, p in enumerate(parts) for j in range(p)]
    for k, cell in enumerate(cells):
        index[cell] = k
    left = np.array([index.get((i, j - 1), -1) for i, j in cells], dtype=np.int64)
    up = np.array([index.get((i - 1, j), -1) for i, j in cells], dtype=np.int64)
    # the entry at row i must leave room for the strictly larger entries below it
    cap = np.array([n - (conj[j] - 1 - i) for i, j in cells], dtype=np.int64)
    return left, up, cap


def _np_ssyt_fillings(left, up, cap):
    k = left.shape[0]
    cur = np.zeros((1, 0), dtype=np.int64)
    for p in range(k):
        low = np.ones(cur.shape[0], dtype=np.int64)
        if left[p] >= 0:
            low = np.maximum(low, cur[:, left[p]])
        if up[p] >= 0:
            low = np.maximum(low, cur[:, up[p]] + 1)
        width = np.maximum(cap[p] - low + 1, 0)
        parent = np.repeat(np.arange(cur.shape[0]), width)
        # offsets 0..width-1 within each parent's block
        starts = np.cumsum(width) - width
        offs = np.arange(parent.shape[0]) - np.repeat(starts, width)
        nxt = np.empty((parent.shape[0], p + 1), dtype=np.int64)
        nxt[:, :p] = cur[parent]
        nxt[:, p] = low[parent] + offs
        cur = nxt
    return cur


def _np_ssyt_norm_histogram(left, up, cap):
    fill = _np_ssyt_fillings(left, up, cap)
    k = left.shape[0]
    size = int(np.sum(cap - 1)) + 1 if k else 1
    return np.bincount(fill.sum(axis=1) - k, minlength=size).astype(np.int64)


if HAVE_NUMBA:

    @njit(cache=True)
    def _nb_ssyt_walk(left, up, cap, out, hist):
        """Backtracking in row-major order; fills ``out`` rows and/or ``hist``.

        Returns the number of tableaux visited.
        """
        k = left.shape[0]
        if k == 0:
            if hist.shape[0] > 0:
                hist[0] += 1
            return 1
        fill = np.zeros(k, dtype=np.int64)
        found = 0
        p = 0
        fill[0] = 0
        while p >= 0:
            fill[p] += 1
            if fill[p] > cap[p]:
                p -= 1
                continue
            if p == k - 1:
                if out.shape[0] > 0:
                    for c in range(k):
                        out[found, c] = fill[c]
                if hist.shape[0] > 0:
                    s = 0
                    for c in range(k):
                        s += fill[c] - 1
                    hist[s] += 1
                found += 1
                continue
            p += 1
            low = 1
            if left[p] >= 0 and fill[left[p]] > low:
                low = fill[left[p]]
            if up[p] >= 0 and fill[up[p]] + 1 > low:
                low = fill[up[p]] + 1
            fill[p] = low - 1
        return found

    def _nb_ssyt_fillings(left, up, cap):
        k = left.shape[0]
        empty_hist = np.zeros(0, dtype=np.int64)
        total = _nb_ssyt_walk(left, up, cap, np.zeros((0, k), dtype=np.int64), empty_hist)
        out = np.empty((total, k), dtype=np.int64)
        if k and total:
            _nb_ssyt_walk(left, up, cap, out, empty_hist)
        return out

    def _nb_ssyt_norm_histogram(left, up, cap):
        k = left.shape[0]
        size = int(np.sum(cap - 1)) + 1 if k else 1
        hist = np.zeros(max(size, 1), dtype=np.int64)
        _nb_ssyt_walk(left, up, cap, np.zeros((0, k), dtype=np.int64), hist)
        return hist


# --- public dispatch --------------------------------------------------------


def _as_bounds(lo, hi):
    return np.ascontiguousarray(lo, dtype=np.int64), np.ascontiguousarray(hi, dtype=np.int64)


def odometer_block(lo, hi, start, count, backend=None):
    lo, hi = _as_bounds(lo, hi)
    fn = _nb_odometer_block if (backend or BACKEND) == "numba" else _np_odometer_block
    return fn(lo, hi, int(start), int(count))


def odometer_rank(rows, lo, hi, backend=None):
    lo, hi = _as_bounds(lo, hi)
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    if rows.ndim == 1:
        rows = rows[None, :]
    fn = _nb_odometer_rank if (backend or BACKEND) == "numba" else _np_odometer_rank
    return fn(rows, lo, hi)


def norm_histogram(lo, hi, backend=None):
    """Counts of fillings by norm; index k is norm sum(lo) + k."""
    lo, hi = _as_bounds(lo, hi)
    if lo.shape[0] == 0:
        return np.ones(1, dtype=np.int64)
    if np.any(hi < lo):
        return np.zeros(1, dtype=np.int64)
    fn = _nb_norm_histogram if (backend or BACKEND) == "numba" else _np_norm_histogram
    return fn(lo, hi)


def ssyt_fillings(parts, n, backend=None):
    left, up, cap = _ssyt_geometry(parts, n)
    fn = _nb_ssyt_fillings if (backend or BACKEND) == "numba" else _np_ssyt_fillings
    return fn(left, up, cap)


def ssyt_norm_histogram(parts, n, backend=None):
    """Counts of tableaux by sum(entry - 1)."""
    left, up, cap = _ssyt_geometry(parts, n)
    if left.shape[0] and np.any(cap < 1):
        return np.zeros(1, dtype=np.int64)
    fn = _nb_ssyt_norm_histogram if (backend or BACKEND) == "numba" else _np_ssyt_norm_histogram
    return fn(left, up, cap)
