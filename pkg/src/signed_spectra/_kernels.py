"""Hot numeric kernels.

Each kernel has a numba @njit implementation and a pure-numpy fallback;
`backend.resolve_backend` picks which one runs (SIGNED_SPECTRA_BACKEND).
benchmarks/bench_backends.py times the two paths against each other.

Mask conventions: a signature of K_{r,s} is an integer whose bit i*s + j
(0-based) is 1 exactly when the edge v_{i+1} w_{j+1} is negative.
"""

import numpy as np

from .backend import HAVE_NUMBA, resolve_backend

_JACOBI_SWEEPS = 60
_JACOBI_RTOL = 1e-14


def _jacobi_py(a):
    """Cyclic Jacobi with threshold sweeps; returns descending eigenvalues.

    Shared source for the njit kernel and (indirectly) documentation of the
    algorithm; the numpy backend uses LAPACK instead of this loop.
    """
    n = a.shape[0]
    m = a.copy()
    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += m[i, j] * m[i, j]
    if fro == 0.0:
        return np.zeros(n)
    tol2 = (_JACOBI_RTOL * _JACOBI_RTOL) * fro
    for _ in range(_JACOBI_SWEEPS):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += 2.0 * m[i, j] * m[i, j]
        if off <= tol2:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if apq == 0.0:
                    continue
                tau = (m[q, q] - m[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = m[k, p]
                    akq = m[k, q]
                    m[k, p] = c * akp - s * akq
                    m[p, k] = m[k, p]
                    m[k, q] = s * akp + c * akq
                    m[q, k] = m[k, q]
                m[p, p] = m[p, p] - t * apq
                m[q, q] = m[q, q] + t * apq
                m[p, q] = 0.0
                m[q, p] = 0.0
    eigs = np.empty(n)
    for i in range(n):
        eigs[i] = m[i, i]
    return np.sort(eigs)[::-1]


def _parity_py(masks, r, s, out):
    for idx in range(masks.shape[0]):
        mask = masks[idx]
        b00 = mask & 1
        bal = 1
        for i in range(1, r):
            bi0 = (mask >> (i * s)) & 1
            for j in range(1, s):
                b0j = (mask >> j) & 1
                bij = (mask >> (i * s + j)) & 1
                if (bij ^ bi0 ^ b0j ^ b00) == 1:
                    bal = 0
                    break
            if bal == 0:
                break
        out[idx] = bal
    return out


def _structural_py(masks, r, s, out):
    full = (1 << s) - 1
    for idx in range(masks.shape[0]):
        mask = masks[idx]
        if mask == 0:
            out[idx] = 1
            continue
        union = 0
        nx = 0
        complete = True
        for i in range(r):
            row = (mask >> (i * s)) & full
            if row != 0:
                nx += 1
                union |= row
        for i in range(r):
            row = (mask >> (i * s)) & full
            if row != 0 and row != union:
                complete = False
                break
        ny = 0
        u = union
        while u:
            ny += u & 1
            u >>= 1
        nv = nx + ny
        if complete:
            if nv == r + s:
                out[idx] = 1
            elif r < nv < r + s and (nx == r or ny == s):
                out[idx] = 1
            else:
                out[idx] = 0
            continue
        if nx != r or union != full:
            out[idx] = 0
            continue
        a = (mask >> 0) & full
        b = -1
        ok = True
        for i in range(1, r):
            row = (mask >> (i * s)) & full
            if row == a:
                continue
            if b == -1:
                b = row
            elif row != b:
                ok = False
                break
        if ok and b != -1 and (a & b) == 0 and (a | b) == full:
            out[idx] = 1
        else:
            out[idx] = 0
    return out


if HAVE_NUMBA:
    from numba import njit

    _jacobi_numba = njit(cache=True, nogil=True)(_jacobi_py)
    _parity_numba = njit(cache=True, nogil=True)(_parity_py)
    _structural_numba = njit(cache=True, nogil=True)(_structural_py)


_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)


def eigvalsh_desc(a, backend=None):
    """Eigenvalues of a symmetric matrix, descending."""
    backend = resolve_backend(backend)
    a = np.ascontiguousarray(a, dtype=np.float64)
    if backend == "numba":
        return _jacobi_numba(a)
    return np.linalg.eigvalsh(a)[::-1].copy()


def krs_parity_balanced(masks, r, s, backend=None):
    """Balance of K_{r,s} signatures by fundamental 4-cycle parity.

    The fundamental cycles of the breadth-first spanning tree rooted at v1
    are the 4-cycles v_i w_j v_1 w_1 (i, j >= 2); a signature is balanced
    iff every one of them carries an even number of negative edges.
    """
    backend = resolve_backend(backend)
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if backend == "numba":
        out = np.empty(masks.shape[0], dtype=np.uint8)
        return _parity_numba(masks, r, s, out).astype(bool)
    b00 = masks & 1
    bal = np.ones(masks.shape[0], dtype=bool)
    for i in range(1, r):
        bi0 = (masks >> (i * s)) & 1
        for j in range(1, s):
            b0j = (masks >> j) & 1
            bij = (masks >> (i * s + j)) & 1
            bal &= (bij ^ bi0 ^ b0j ^ b00) == 0
    return bal


def krs_structural_balanced(masks, r, s, backend=None):
    """Balance of K_{r,s} signatures by the structure of the negative part.

    Balanced iff the negative subgraph H is empty, or H is complete
    bipartite covering all of one side with r < |V(H)| < r+s, or H spans
    all r+s vertices and is complete bipartite or a disjoint union of two
    complete bipartite graphs.
    """
    backend = resolve_backend(backend)
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if backend == "numba":
        out = np.empty(masks.shape[0], dtype=np.uint8)
        return _structural_numba(masks, r, s, out).astype(bool)
    full = (1 << s) - 1
    rows = (masks[:, None] >> (s * np.arange(r, dtype=np.int64))) & full
    nonzero = rows != 0
    union = np.bitwise_or.reduce(rows, axis=1)
    nx = nonzero.sum(axis=1)
    ny = _POP16[union]
    nv = nx + ny
    complete = ((rows == union[:, None]) | ~nonzero).all(axis=1)
    item2_complete = complete & (nv == r + s)
    item1 = complete & (r < nv) & (nv < r + s) & ((nx == r) | (ny == s))
    lo = rows.min(axis=1)
    hi = rows.max(axis=1)
    twoval = ((rows == lo[:, None]) | (rows == hi[:, None])).all(axis=1) & (lo != hi)
    item2_two = (
        (nx == r) & (union == full) & twoval & ((lo & hi) == 0) & ((lo | hi) == full)
    )
    return (masks == 0) | item1 | item2_complete | item2_two


def warmup(backend=None):
    """Force JIT compilation of the numba kernels (no-op on numpy)."""
    if resolve_backend(backend) != "numba":
        return
    a = np.array([[0.0, 1.0], [1.0, 0.0]])
    eigvalsh_desc(a, backend="numba")
    m = np.array([1, 2], dtype=np.int64)
    krs_parity_balanced(m, 2, 2, backend="numba")
    krs_structural_balanced(m, 2, 2, backend="numba")
