"""Fiber coloring of the cube by odd power sums over GF(2^m).

A vertex x of {0,1}^n is read as a subset of GF(2^m), N = 2^m >= n, and
colored by Phi(x) = (S_1(x), S_3(x), ..., S_{2t-1}(x)) with
S_j(x) = sum of gamma^j over the chosen elements. Two vertices with equal
Phi differ by a nonzero word whose first 2t power sums vanish, which forces
distance >= 2t+1 on the nonzero elements, so no class contains an edge of
H_{2t}(n).

Cube coordinate i is placed on element code ``i mod N``: the cube uses the
nonzero elements first and only reaches the zero element when n = N. For
n = N - 1 the classes are exactly the cosets of the binary BCH code of
length 2^m - 1. The zero element contributes nothing to any power sum, so
when n = N its coordinate lies in the kernel by itself (a weight-1 kernel
word); classes then contain distance-1 pairs, which are still not edges.
"""

from __future__ import annotations

from math import ceil, log2

import numpy as np

from . import kernels
from .cube import CubeParams, check_cap, subset_masks
from .field import FieldTable
from .sets import INDEPENDENT, CertifiedSet, Coloring, dense_reindex

PAIR_CHECK_CAP = 10**8
KERNEL_DIM_CAP = 24


def field_degree(n: int) -> int:
    """m = ceil(log2 n), but at least 1 so the field exists."""
    return max(1, ceil(log2(n))) if n > 1 else 1


def embed(x: int, n: int, N: int) -> int:
    """Map a cube vertex to an N-bit vector indexed by the labels gamma_1..gamma_N."""
    if n > N:
        raise ValueError(f"cannot embed {n} coordinates into GF({N})")
    if n < N:
        return x << 1
    top = x >> (N - 1) & 1
    return ((x << 1) & ((1 << N) - 1)) | top


def power_sums(x: int, field: FieldTable, t: int) -> tuple[int, ...]:
    """(S_1, S_3, ..., S_{2t-1}) of an N-bit vector whose bit i-1 selects gamma_i."""
    N = field.order
    if x >> N:
        raise ValueError(f"vector {x:#x} longer than N={N}")
    sums = [0] * t
    for i in range(N):
        if x >> i & 1:
            g = field.gamma(i + 1)
            for ell in range(t):
                sums[ell] ^= field.pow(g, 2 * ell + 1)
    return tuple(sums)


def power_sum(x: int, field: FieldTable, j: int) -> int:
    """S_j for any j >= 1 (used to check S_{2j} = S_j^2)."""
    total = 0
    for i in range(field.order):
        if x >> i & 1:
            total ^= field.pow(field.gamma(i + 1), j)
    return total


def pack(vector, m: int) -> int:
    key = 0
    for ell, c in enumerate(vector):
        key |= int(c) << (ell * m)
    return key


def unpack(key: int, m: int, t: int) -> tuple[int, ...]:
    mask = (1 << m) - 1
    return tuple((key >> (ell * m)) & mask for ell in range(t))


def coordinate_keys(field: FieldTable, t: int, length: int) -> np.ndarray:
    """Packed Phi(e_i) for cube coordinates i = 1..length."""
    if t * field.m > 63:
        raise ValueError(f"t*m = {t * field.m} does not fit a 63-bit color key")
    powers = field.power_table(range(1, 2 * t, 2))
    N = field.order
    return np.array([pack(powers[i % N], field.m) for i in range(1, length + 1)], dtype=np.int64)


def build_fiber_coloring(params: CubeParams) -> Coloring:
    n, t = params.n, params.t
    check_cap(n)
    field = FieldTable(field_degree(n))
    keys = kernels.linear_keys(coordinate_keys(field, t, n))
    colors, class_keys = dense_reindex(keys)
    return Coloring(
        n=n,
        r=params.r,
        colors=colors,
        class_keys=class_keys,
        engine="bch",
        color_bound=field.order**t,
    )


def kernel_basis(keys) -> list[int]:
    """Basis of {y : XOR of keys[i] over bits i of y == 0}, by elimination."""
    pivots: dict[int, tuple[int, int]] = {}
    basis = []
    for i, key in enumerate(int(k) for k in keys):
        combo = 1 << i
        while key:
            top = key.bit_length() - 1
            if top not in pivots:
                pivots[top] = (key, combo)
                break
            pk, pc = pivots[top]
            key ^= pk
            combo ^= pc
        if key == 0:
            basis.append(combo)
    return basis


def kernel_min_weight(field: FieldTable, t: int, length: int | None = None) -> int:
    """Minimum weight of a nonzero word y with Phi(y) = 0 on the first ``length`` coordinates.

    The default length N-1 covers exactly the nonzero field elements (the BCH
    code proper). ``length=N`` adds the zero element, whose unit vector is a
    weight-1 kernel word.
    """
    N = field.order
    length = N - 1 if length is None else length
    if not 1 <= length <= N:
        raise ValueError(f"length must be in 1..{N}")
    basis = kernel_basis(coordinate_keys(field, t, length))
    if len(basis) > KERNEL_DIM_CAP:
        raise ValueError(f"kernel dimension {len(basis)} exceeds enumeration cap {KERNEL_DIM_CAP}")
    if not basis:
        raise ValueError("kernel is trivial")
    return kernels.span_min_weight(np.array(basis, dtype=np.int64))


def fiber_distance_histogram(coloring: Coloring, color: int) -> np.ndarray:
    members = coloring.members(color)
    return kernels.intraclass_distance_histogram(
        members, np.zeros(members.shape[0], dtype=np.int64), coloring.n
    )


def independent_set_from_fiber(coloring: Coloring, color: int, verify: bool = True) -> CertifiedSet:
    members = coloring.members(color)
    verified = False
    if verify and members.shape[0] * max(1, len(subset_masks(coloring.n, coloring.r))) <= PAIR_CHECK_CAP:
        edges = kernels.count_set_edges(members, coloring.n, subset_masks(coloring.n, coloring.r))
        if edges:
            raise AssertionError(f"fiber {color} spans {edges} edges; coloring is not proper")
        verified = True
    return CertifiedSet(
        n=coloring.n,
        r=coloring.r,
        s=2,
        vertices=members,
        kind=INDEPENDENT,
        method=f"{coloring.engine}-fiber",
        verified=verified,
    )
