"""Exhaustive edge-subset enumeration kernels.

Both kernels walk every subset of the edge set as a bitmask and measure
connectivity with a small union-find.  They are compiled with numba when
it is available; the pure-Python twins implement the identical iteration
order so results are bit-identical between the two backends.

The partition-function kernel accumulates per-component-count sums in
fixed blocks of 4096 masks.  Callers reduce the block sums pairwise,
which keeps the summation order deterministic and the rounding error
logarithmic in the number of blocks.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except Exception:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return wrap


BLOCK_BITS = 12


def _z_blocks_py(n, eu, ev, w, block_bits):
    m = len(eu)
    total = 1 << m
    bsize = 1 << block_bits
    nblocks = (total + bsize - 1) >> block_bits
    out = np.zeros((nblocks, n + 1), dtype=np.complex128)
    parent = list(range(n))
    for b in range(nblocks):
        lo = b << block_bits
        hi = min(total, lo + bsize)
        for mask in range(lo, hi):
            for i in range(n):
                parent[i] = i
            k = n
            pr = 1.0 + 0.0j
            mm = mask
            e = 0
            while mm:
                if mm & 1:
                    pr = pr * w[e]
                    ru = eu[e]
                    while parent[ru] != ru:
                        ru = parent[ru]
                    rv = ev[e]
                    while parent[rv] != rv:
                        rv = parent[rv]
                    if ru != rv:
                        parent[ru] = rv
                        k -= 1
                mm >>= 1
                e += 1
            out[b, k] += pr
    return out


def _csupp_py(n, eu, ev, w):
    m = len(eu)
    out = np.zeros(1 << n, dtype=np.complex128)
    parent = list(range(n))
    for mask in range(1, 1 << m):
        for i in range(n):
            parent[i] = i
        vmask = 0
        unions = 0
        pr = 1.0 + 0.0j
        mm = mask
        e = 0
        while mm:
            if mm & 1:
                pr = pr * w[e]
                u = eu[e]
                v = ev[e]
                vmask |= (1 << u) | (1 << v)
                ru = u
                while parent[ru] != ru:
                    ru = parent[ru]
                rv = v
                while parent[rv] != rv:
                    rv = parent[rv]
                if ru != rv:
                    parent[ru] = rv
                    unions += 1
            mm >>= 1
            e += 1
        touched = bin(vmask).count("1")
        if touched - unions == 1:
            out[vmask] += pr
    return out


@njit(cache=True)
def _z_blocks_numba(n, eu, ev, w, block_bits):  # pragma: no cover - numba path
    m = eu.shape[0]
    total = 1 << m
    bsize = 1 << block_bits
    nblocks = (total + bsize - 1) >> block_bits
    out = np.zeros((nblocks, n + 1), dtype=np.complex128)
    parent = np.empty(n, dtype=np.int64)
    for b in range(nblocks):
        lo = b << block_bits
        hi = lo + bsize
        if hi > total:
            hi = total
        for mask in range(lo, hi):
            for i in range(n):
                parent[i] = i
            k = n
            pr = 1.0 + 0.0j
            mm = mask
            e = 0
            while mm:
                if mm & 1:
                    pr = pr * w[e]
                    ru = eu[e]
                    while parent[ru] != ru:
                        ru = parent[ru]
                    rv = ev[e]
                    while parent[rv] != rv:
                        rv = parent[rv]
                    if ru != rv:
                        parent[ru] = rv
                        k -= 1
                mm >>= 1
                e += 1
            out[b, k] += pr
    return out


@njit(cache=True)
def _csupp_numba(n, eu, ev, w):  # pragma: no cover - numba path
    m = eu.shape[0]
    out = np.zeros(1 << n, dtype=np.complex128)
    parent = np.empty(n, dtype=np.int64)
    for mask in range(1, 1 << m):
        for i in range(n):
            parent[i] = i
        vmask = 0
        unions = 0
        pr = 1.0 + 0.0j
        mm = mask
        e = 0
        while mm:
            if mm & 1:
                pr = pr * w[e]
                u = eu[e]
                v = ev[e]
                vmask |= (1 << u) | (1 << v)
                ru = u
                while parent[ru] != ru:
                    ru = parent[ru]
                rv = v
                while parent[rv] != rv:
                    rv = parent[rv]
                if ru != rv:
                    parent[ru] = rv
                    unions += 1
            mm >>= 1
            e += 1
        touched = 0
        vv = vmask
        while vv:
            vv &= vv - 1
            touched += 1
        if touched - unions == 1:
            out[vmask] += pr
    return out


def _connflags_py(n, eu, ev):
    m = len(eu)
    out = np.zeros(1 << m, dtype=np.uint8)
    parent = list(range(n))
    for mask in range(1 << m):
        for i in range(n):
            parent[i] = i
        unions = 0
        mm = mask
        e = 0
        while mm:
            if mm & 1:
                ru = eu[e]
                while parent[ru] != ru:
                    ru = parent[ru]
                rv = ev[e]
                while parent[rv] != rv:
                    rv = parent[rv]
                if ru != rv:
                    parent[ru] = rv
                    unions += 1
            mm >>= 1
            e += 1
        if n - unions == 1:
            out[mask] = 1
    return out


@njit(cache=True)
def _connflags_numba(n, eu, ev):  # pragma: no cover - numba path
    m = eu.shape[0]
    out = np.zeros(1 << m, dtype=np.uint8)
    parent = np.empty(n, dtype=np.int64)
    for mask in range(1 << m):
        for i in range(n):
            parent[i] = i
        unions = 0
        mm = mask
        e = 0
        while mm:
            if mm & 1:
                ru = eu[e]
                while parent[ru] != ru:
                    ru = parent[ru]
                rv = ev[e]
                while parent[rv] != rv:
                    rv = parent[rv]
                if ru != rv:
                    parent[ru] = rv
                    unions += 1
            mm >>= 1
            e += 1
        if n - unions == 1:
            out[mask] = 1
    return out


def _edge_arrays(n, edges):
    m = len(edges)
    eu = np.empty(m, dtype=np.int64)
    ev = np.empty(m, dtype=np.int64)
    w = np.empty(m, dtype=np.complex128)
    for i, (u, v, wt) in enumerate(edges):
        eu[i] = u
        ev[i] = v
        w[i] = wt
    return eu, ev, w


def _pairwise_reduce(blocks: np.ndarray) -> np.ndarray:
    """Tree-order sum of block rows; deterministic regardless of count."""
    cur = blocks
    while cur.shape[0] > 1:
        half = cur.shape[0] // 2
        nxt = cur[: 2 * half : 2] + cur[1 : 2 * half : 2]
        if cur.shape[0] % 2:
            nxt = np.vstack([nxt, cur[-1:]])
        cur = nxt
    return cur[0]


def z_coefficients(n: int, edges, use_numba: bool | None = None) -> np.ndarray:
    """Coefficients (ascending in q) of sum_A q^{k(A)} prod_{e in A} w_e."""
    eu, ev, w = _edge_arrays(n, edges)
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba and HAVE_NUMBA:
        blocks = _z_blocks_numba(n, eu, ev, w, BLOCK_BITS)
    else:
        blocks = _z_blocks_py(n, eu.tolist(), ev.tolist(), w.tolist(), BLOCK_BITS)
    return _pairwise_reduce(np.asarray(blocks))


def connected_spanning_flags(n: int, pairs, use_numba: bool | None = None) -> np.ndarray:
    """Byte per edge mask: 1 iff the mask spans and connects all n vertices."""
    m = len(pairs)
    eu = np.empty(m, dtype=np.int64)
    ev = np.empty(m, dtype=np.int64)
    for i, (u, v) in enumerate(pairs):
        eu[i] = u
        ev[i] = v
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba and HAVE_NUMBA:
        return _connflags_numba(n, eu, ev)
    return _connflags_py(n, eu.tolist(), ev.tolist())


def connected_by_support(n: int, edges, use_numba: bool | None = None) -> np.ndarray:
    """For every vertex bitmask S, the sum of prod w_e over edge subsets
    whose endpoint support is exactly S and which connect S.

    Singleton supports get no entry (an edge always touches two vertices);
    the empty subset is skipped.  Index the result by vertex bitmask.
    """
    eu, ev, w = _edge_arrays(n, edges)
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba and HAVE_NUMBA:
        return _csupp_numba(n, eu, ev, w)
    return np.asarray(_csupp_py(n, eu.tolist(), ev.tolist(), w.tolist()))
