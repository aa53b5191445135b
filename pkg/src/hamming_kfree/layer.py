"""Layer colorings by elementary symmetric fingerprints, and their assembly
into a proper coloring of the whole cube.

A k-set A of [n] is sent into GF(q), q prime >= n, as the residues {i-1 : i in A},
and colored by (sigma_1(A), ..., sigma_t(A)) mod q. If two distinct k-sets share
this fingerprint, their polynomials prod(z - a) agree in the top t+1
coefficients, so their difference has degree <= k-t-1 yet is divisible by the
common factor of degree |A & B|. Hence |A - B| >= t+1 and |A ^ B| >= 2t+2,
strictly above the adjacency distance 2t.

Layers are then grouped into t+1 classes so that two layers of one class are
either neighbours (odd distance apart) or more than 2t apart; a cube color is
(layer class, fingerprint).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import kernels
from .cube import CubeParams, check_cap, layer
from .field import is_prime, next_prime
from .sets import INDEPENDENT, KS_FREE, CertifiedSet, Coloring, dense_reindex

LAYER_CAP = 10**6


def layer_class_index(k: int, t: int) -> int:
    """Class i in 1..t+1 with k = 2i or 2i+1 (mod 2t+2)."""
    i = (k % (2 * t + 2)) // 2
    return i if i else t + 1


@dataclass(frozen=True)
class LayerPartition:
    n: int
    t: int
    classes: tuple[tuple[int, ...], ...]

    def class_of(self, k: int) -> int:
        return layer_class_index(k, self.t)


def build_layer_partition(n: int, t: int) -> LayerPartition:
    if n < 1 or t < 1:
        raise ValueError("need n >= 1 and t >= 1")
    classes = tuple(
        tuple(k for k in range(n + 1) if layer_class_index(k, t) == i) for i in range(1, t + 2)
    )
    return LayerPartition(n=n, t=t, classes=classes)


def elementary_symmetric(values, t: int, q: int) -> tuple[int, ...]:
    e = [1] + [0] * t
    for a in values:
        for j in range(t, 0, -1):
            e[j] = (e[j] + a * e[j - 1]) % q
    return tuple(e[1:])


def gs_layer_color(A, t: int, q: int, n: int | None = None) -> tuple[int, ...]:
    """Fingerprint (sigma_1, ..., sigma_t) mod q of the 1-based subset A."""
    A = sorted(A)
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    bound = n if n is not None else (A[-1] if A else 0)
    if q < bound:
        raise ValueError(f"q={q} < n={bound}: coordinates would collide in GF(q)")
    return elementary_symmetric([i - 1 for i in A], t, q)


def _layer_fingerprints(n: int, k: int, t: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    members = layer(n, k)
    if n <= 20:
        keys = kernels.esym_keys(n, t, q)[members]
    else:
        keys = np.array(
            [_pack_digits(elementary_symmetric(_residues(int(x)), t, q), q) for x in members],
            dtype=np.int64,
        )
    return members, keys


def _residues(x: int) -> list[int]:
    return [i for i in range(x.bit_length()) if x >> i & 1]


def _pack_digits(digits, q: int) -> int:
    key = 0
    for d in reversed(digits):
        key = key * q + d
    return key


def layer_class_min_distance(n: int, k: int, t: int, q: int) -> int | None:
    """Least |A ^ B| over distinct equal-fingerprint k-sets, or None if all fingerprints differ."""
    if comb(n, k) > LAYER_CAP:
        raise ValueError(f"layer C({n},{k}) too large to enumerate")
    if not is_prime(q) or q < n:
        raise ValueError(f"q={q} must be a prime >= n={n}")
    members, keys = _layer_fingerprints(n, k, t, q)
    hist = kernels.intraclass_distance_histogram(members, keys, n)
    nz = np.flatnonzero(hist)
    return int(nz[0]) if nz.size else None


def verify_layer_class_distance(n: int, k: int, t: int, q: int) -> bool:
    d = layer_class_min_distance(n, k, t, q)
    return d is None or d >= 2 * t + 2


def build_cube_coloring(n: int, t: int, q: int | None = None) -> Coloring:
    check_cap(n)
    q = next_prime(n) if q is None else q
    if not is_prime(q) or q < n:
        raise ValueError(f"q={q} must be a prime >= n={n}")
    fp = kernels.esym_keys(n, t, q)
    weights = kernels.popcount(np.arange(1 << n, dtype=np.int64))
    cls = np.array([layer_class_index(k, t) for k in range(n + 1)], dtype=np.int64)
    keys = cls[weights] * q**t + fp
    colors, class_keys = dense_reindex(keys)
    return Coloring(
        n=n,
        r=2 * t,
        colors=colors,
        class_keys=class_keys,
        engine="layer",
        color_bound=(t + 1) * q**t,
    )


def ks_free_from_coloring(coloring: Coloring, s: int) -> CertifiedSet:
    """Union of the s-1 largest classes; K_s-free because any s of its vertices repeat a color."""
    if s < 2:
        raise ValueError("s must be >= 2")
    chosen = coloring.largest_classes(s - 1)
    members = np.concatenate([coloring.members(c) for c in chosen])
    return CertifiedSet(
        n=coloring.n,
        r=coloring.r,
        s=s,
        vertices=members,
        kind=INDEPENDENT if s == 2 else KS_FREE,
        method=f"{coloring.engine}-largest-{s - 1}-classes",
        meta={"classes": chosen},
    )


def cube_params_coloring(params: CubeParams, engine: str) -> Coloring:
    if engine == "layer":
        return build_cube_coloring(params.n, params.t)
    from .bch import build_fiber_coloring

    if engine == "bch":
        return build_fiber_coloring(params)
    raise ValueError(f"unknown coloring engine {engine!r}")
