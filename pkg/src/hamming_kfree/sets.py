"""Colorings of the cube and vertex sets carrying a certificate."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .cube import subset_masks

INDEPENDENT = "independent"
KS_FREE = "ks_free"
UNVERIFIED = "unverified"


def dense_reindex(keys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Relabel raw color keys as 0..C-1 in first-seen order.

    Returns ``(colors, class_keys)`` with ``class_keys[c]`` the raw key of color c.
    """
    uniq, first, inverse = np.unique(keys, return_index=True, return_inverse=True)
    order = np.argsort(first, kind="stable")
    rank = np.empty_like(order)
    rank[order] = np.arange(order.shape[0])
    return rank[inverse].astype(np.int64), uniq[order]


@dataclass(frozen=True)
class Coloring:
    """A total coloring of {0,1}^n: ``colors[x]`` is the class index of vertex x."""

    n: int
    r: int
    colors: np.ndarray
    class_keys: np.ndarray
    engine: str
    color_bound: int

    @property
    def num_classes(self) -> int:
        return int(self.class_keys.shape[0])

    def class_sizes(self) -> np.ndarray:
        return np.bincount(self.colors, minlength=self.num_classes)

    def members(self, color: int) -> np.ndarray:
        if not 0 <= color < self.num_classes:
            raise KeyError(f"unknown color {color}")
        return np.flatnonzero(self.colors == color).astype(np.int64)

    def size_spectrum(self) -> dict[int, int]:
        sizes, counts = np.unique(self.class_sizes(), return_counts=True)
        return {int(a): int(b) for a, b in zip(sizes, counts)}

    def monochromatic_edges(self) -> int:
        """Edges of H_r(n) whose ends share a color; zero iff the coloring is proper."""
        return kernels.count_monochromatic_edges(self.colors, subset_masks(self.n, self.r))

    def largest_classes(self, count: int) -> list[int]:
        sizes = self.class_sizes()
        # descending size, ties by lower color index
        order = np.lexsort((np.arange(sizes.shape[0]), -sizes))
        return [int(c) for c in order[:count]]


@dataclass(frozen=True)
class CertifiedSet:
    """A set of cube vertices plus what is known about it.

    ``kind`` is ``independent`` (no H_r(n) edge inside), ``ks_free`` (no K_s
    inside) or ``unverified``. ``verified`` says whether an exhaustive check
    ran, as opposed to the guarantee resting on the construction.
    """

    n: int
    r: int
    s: int
    vertices: tuple[int, ...]
    kind: str = UNVERIFIED
    method: str = ""
    verified: bool = False
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(int(v) for v in set(self.vertices))))

    def __len__(self):
        return len(self.vertices)

    def as_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=np.int64)

    def certificate(self) -> dict:
        return {
            "kind": self.kind,
            "params": {"n": self.n, "r": self.r, "s": self.s},
            "verified": self.verified,
            "method": self.method,
            "size": len(self),
        }
