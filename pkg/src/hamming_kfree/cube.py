"""The Boolean cube {0,1}^n, Hamming geometry and the distance graphs H_r(n).

Vertices are Python/numpy integers: coordinate i (1-based) is bit i-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

ENUM_CAP = 30


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class CubeParams:
    n: int
    r: int
    s: int = 2
    allow_odd: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension n must be >= 1, got {self.n}")
        if self.r < 1 or (self.r % 2 and not self.allow_odd):
            raise ValueError(f"distance r must be even and >= 2, got {self.r}")
        if self.s < 2:
            raise ValueError(f"clique parameter s must be >= 2, got {self.s}")

    @property
    def t(self) -> int:
        return self.r // 2

    def as_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "s": self.s}


def check_cap(n: int, cap: int = ENUM_CAP) -> None:
    if n > cap:
        raise DimensionError(f"n={n} exceeds the whole-cube enumeration cap {cap}")


def _check_vertex(x: int, n: int | None) -> None:
    if x < 0 or (n is not None and x >> n):
        raise DimensionError(f"vertex {x:#x} does not fit in {n} coordinates")


def hamming_distance(x: int, y: int, n: int | None = None) -> int:
    _check_vertex(x, n)
    _check_vertex(y, n)
    return int(x ^ y).bit_count()


def are_adjacent(x: int, y: int, params: CubeParams) -> bool:
    return hamming_distance(x, y, params.n) == params.r


def weight(x: int) -> int:
    return int(x).bit_count()


def from_bitstring(bits: str) -> int:
    """Parse ``x_1 x_2 ... x_n`` written left to right (coordinate 1 first)."""
    return sum(1 << i for i, b in enumerate(bits) if b == "1")


def to_bitstring(x: int, n: int) -> str:
    return "".join("1" if x >> i & 1 else "0" for i in range(n))


def hex_width(n: int) -> int:
    return max(1, (n + 3) // 4)


def to_hex(x: int, n: int) -> str:
    return format(int(x), f"0{hex_width(n)}x")


def from_hex(text: str, n: int) -> int:
    x = int(text, 16)
    _check_vertex(x, n)
    return x


def subset_masks(n: int, r: int) -> np.ndarray:
    """All n-bit masks of weight r, ascending."""
    if not 0 <= r <= n:
        return np.zeros(0, dtype=np.int64)
    masks = [sum(1 << i for i in c) for c in combinations(range(n), r)]
    return np.array(sorted(masks), dtype=np.int64)


def neighbors_at_distance_r(x: int, params: CubeParams):
    """Yield the C(n, r) vertices at distance exactly r from x, ascending."""
    check_cap(params.n)
    _check_vertex(x, params.n)
    yield from sorted(int(x ^ m) for m in subset_masks(params.n, params.r))


def translate(vertices, u: int, n: int | None = None) -> frozenset[int]:
    _check_vertex(u, n)
    out = set()
    for x in vertices:
        _check_vertex(x, n)
        out.add(int(x) ^ u)
    return frozenset(out)


def layer(n: int, k: int) -> np.ndarray:
    """All weight-k vertices of {0,1}^n, ascending."""
    return subset_masks(n, k)


def layer_size(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def support(x: int) -> list[int]:
    """1-based coordinates where x is 1."""
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i + 1)
        x >>= 1
        i += 1
    return out
