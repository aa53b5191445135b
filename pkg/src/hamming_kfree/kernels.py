"""Hot whole-cube kernels, each with a numba loop version and a numpy version.

The backend is chosen once from ``HAMMING_KFREE_BACKEND`` and can be switched
at runtime with :func:`set_backend` (tests and the benchmark use this to run
both paths on the same inputs).
"""

from __future__ import annotations

from contextlib import contextmanager

import numpy as np

from ._accel import HAVE_NUMBA, apply_thread_cap, default_backend, njit, prange

_backend = default_backend()
apply_thread_cap()


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    _backend = name


@contextmanager
def backend(name: str):
    previous = _backend
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


# -- popcount -----------------------------------------------------------------


@njit(cache=True)
def _popcount64(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@njit(cache=True)
def _popcount_array_nb(a):
    out = np.empty(a.shape[0], dtype=np.int64)
    for i in range(a.shape[0]):
        out[i] = _popcount64(np.uint64(a[i]))
    return out


def popcount(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    if _backend == "numba":
        return _popcount_array_nb(a)
    return np.bitwise_count(a).astype(np.int64)


# -- linear map over the whole cube ------------------------------------------


@njit(cache=True)
def _linear_keys_nb(basis):
    n = basis.shape[0]
    keys = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        size = 1 << i
        b = basis[i]
        for j in range(size):
            keys[size + j] = keys[j] ^ b
    return keys


def _linear_keys_np(basis):
    n = basis.shape[0]
    keys = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        size = 1 << i
        np.bitwise_xor(keys[:size], basis[i], out=keys[size : 2 * size])
    return keys


def linear_keys(basis) -> np.ndarray:
    """``keys[x]`` = XOR of ``basis[i]`` over the set bits i of x, for all x < 2^n."""
    basis = np.ascontiguousarray(basis, dtype=np.int64)
    if _backend == "numba":
        return _linear_keys_nb(basis)
    return _linear_keys_np(basis)


# -- elementary symmetric fingerprints ---------------------------------------


@njit(cache=True)
def _esym_keys_nb(n, t, q):
    total = 1 << n
    sig = np.zeros((total, t + 1), dtype=np.int64)
    sig[0, 0] = 1
    for i in range(n):
        size = 1 << i
        a = i % q
        for x in range(size):
            y = size + x
            sig[y, 0] = 1
            for j in range(1, t + 1):
                sig[y, j] = (sig[x, j] + a * sig[x, j - 1]) % q
    keys = np.zeros(total, dtype=np.int64)
    for x in range(total):
        k = 0
        for j in range(t, 0, -1):
            k = k * q + sig[x, j]
        keys[x] = k
    return keys


def _esym_keys_np(n, t, q):
    total = 1 << n
    sig = np.zeros((total, t + 1), dtype=np.int64)
    sig[0, 0] = 1
    for i in range(n):
        size = 1 << i
        a = i % q
        half = sig[:size]
        new = sig[size : 2 * size]
        new[:, 0] = 1
        new[:, 1:] = (half[:, 1:] + a * half[:, :-1]) % q
    keys = np.zeros(total, dtype=np.int64)
    for j in range(t, 0, -1):
        keys = keys * q + sig[:, j]
    return keys


def esym_keys(n: int, t: int, q: int) -> np.ndarray:
    """Packed (sigma_1..sigma_t) mod q of {i-1 : x_i = 1}, base-q digits, for all x."""
    if _backend == "numba":
        return _esym_keys_nb(n, t, q)
    return _esym_keys_np(n, t, q)


# -- edge scans ---------------------------------------------------------------


@njit(cache=True, parallel=True)
def _count_mono_edges_nb(colors, masks):
    total = colors.shape[0]
    count = 0
    for x in prange(total):
        c = colors[x]
        local = 0
        for m in masks:
            y = x ^ m
            if y > x and colors[y] == c:
                local += 1
        count += local
    return count


def _count_mono_edges_np(colors, masks):
    idx = np.arange(colors.shape[0], dtype=np.int64)
    count = 0
    for m in masks:
        y = idx ^ m
        count += int(np.count_nonzero((y > idx) & (colors == colors[y])))
    return count


def count_monochromatic_edges(colors, masks) -> int:
    """Number of pairs {x, x^mask} with equal color, over a full-cube color array."""
    colors = np.ascontiguousarray(colors, dtype=np.int64)
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if _backend == "numba":
        return int(_count_mono_edges_nb(colors, masks))
    return _count_mono_edges_np(colors, masks)


@njit(cache=True)
def _count_set_edges_nb(vertices, member, masks):
    count = 0
    for x in vertices:
        for m in masks:
            y = x ^ m
            if y > x and member[y]:
                count += 1
    return count


def _count_set_edges_np(vertices, member, masks):
    count = 0
    for m in masks:
        y = vertices ^ m
        count += int(np.count_nonzero((y > vertices) & member[y]))
    return count


def count_set_edges(vertices, n: int, masks) -> int:
    """Edges {x, x^mask} with both ends in ``vertices`` (subset of {0,1}^n)."""
    vertices = np.ascontiguousarray(vertices, dtype=np.int64)
    member = np.zeros(1 << n, dtype=np.bool_)
    member[vertices] = True
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if _backend == "numba":
        return int(_count_set_edges_nb(vertices, member, masks))
    return _count_set_edges_np(vertices, member, masks)


# -- minimum weight of a GF(2) span -------------------------------------------


@njit(cache=True)
def _span_min_weight_nb(basis):
    d = basis.shape[0]
    best = 64
    word = np.int64(0)
    for g in range(1, 1 << d):
        # Gray code step: flip the lowest set bit position of g
        i = 0
        while not (g >> i) & 1:
            i += 1
        word ^= basis[i]
        w = _popcount64(np.uint64(word))
        if w < best:
            best = w
    return best


def _span_min_weight_np(basis):
    return int(popcount(_linear_keys_np(basis)[1:]).min())


def span_min_weight(basis) -> int:
    """Minimum popcount over the nonzero GF(2) combinations of independent ``basis``."""
    basis = np.ascontiguousarray(basis, dtype=np.int64)
    if basis.shape[0] == 0:
        raise ValueError("empty basis spans only the zero word")
    if _backend == "numba":
        return int(_span_min_weight_nb(basis))
    return _span_min_weight_np(basis)


# -- intra-class distance histogram -------------------------------------------


@njit(cache=True)
def _intraclass_hist_nb(vertices, starts, nbins):
    hist = np.zeros(nbins, dtype=np.int64)
    for c in range(starts.shape[0] - 1):
        lo = starts[c]
        hi = starts[c + 1]
        for a in range(lo, hi):
            va = vertices[a]
            for b in range(a + 1, hi):
                hist[_popcount64(np.uint64(va ^ vertices[b]))] += 1
    return hist


def _intraclass_hist_np(vertices, starts, nbins, chunk=2048):
    hist = np.zeros(nbins, dtype=np.int64)
    for c in range(starts.shape[0] - 1):
        members = vertices[starts[c] : starts[c + 1]]
        size = members.shape[0]
        for lo in range(0, size, chunk):
            block = members[lo : lo + chunk]
            d = np.bitwise_count(block[:, None] ^ members[None, :])
            rows = np.arange(lo, lo + block.shape[0])[:, None]
            upper = rows < np.arange(size)[None, :]
            hist += np.bincount(d[upper], minlength=nbins)[:nbins]
    return hist


def intraclass_distance_histogram(vertices, classes, n: int) -> np.ndarray:
    """Histogram over 0..n of d_H(x, y) for unordered pairs x != y sharing a class label."""
    vertices = np.asarray(vertices, dtype=np.int64)
    classes = np.asarray(classes, dtype=np.int64)
    order = np.lexsort((vertices, classes))
    v = np.ascontiguousarray(vertices[order])
    c = classes[order]
    boundaries = np.flatnonzero(np.diff(c)) + 1
    starts = np.concatenate(([0], boundaries, [c.shape[0]])).astype(np.int64)
    if _backend == "numba":
        return _intraclass_hist_nb(v, starts, n + 1)
    return _intraclass_hist_np(v, starts, n + 1)
