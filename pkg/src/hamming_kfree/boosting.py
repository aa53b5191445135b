"""Random-translate boosting of an independent set into a K_s-free set.

S = I | (I^u_1) | ... | (I^u_{s-2}) with u_0 = 0. Every translate of an
independent set is independent because adjacency only depends on the XOR of
two vertices, so S is covered by s-1 independent sets and cannot hold a K_s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .sets import INDEPENDENT, KS_FREE, CertifiedSet


def first_moment_bound(size: int, n: int, s: int) -> Fraction:
    """(s-1)|I| (1 - (s-2)/2 * |I|/2^n)."""
    return (s - 1) * size * (1 - Fraction(s - 2, 2) * Fraction(size, 1 << n))


@dataclass(frozen=True)
class BoostResult:
    translates: tuple[int, ...]
    set: CertifiedSet
    size: int
    bound: Fraction
    trials: int
    seed: int
    below_bound: bool

    def as_dict(self) -> dict:
        return {
            "translates": list(self.translates),
            "size": self.size,
            "bound": str(self.bound),
            "bound_float": float(self.bound),
            "below_bound": self.below_bound,
            "trials": self.trials,
            "seed": self.seed,
            "certificate": self.set.certificate(),
        }


def trial_generator(seed: int, trial: int) -> np.random.Generator:
    """Counter-based stream for one trial, independent of how many trials run."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, trial])))


def draw_translates(n: int, count: int, seed: int, trial: int) -> tuple[int, ...]:
    rng = trial_generator(seed, trial)
    # two 32-bit halves keep n up to 62 exact on every platform
    hi = rng.integers(0, 1 << 31, size=count, dtype=np.int64)
    lo = rng.integers(0, 1 << 31, size=count, dtype=np.int64)
    mask = (1 << n) - 1
    return tuple(int(((h << 31) | l) & mask) for h, l in zip(hi, lo))


def union_of_translates(base: np.ndarray, translates) -> np.ndarray:
    parts = [base] + [base ^ np.int64(u) for u in translates]
    return np.unique(np.concatenate(parts))


def boost(I: CertifiedSet, s: int, trials: int = 1, seed: int = 0) -> BoostResult:
    if I.kind != INDEPENDENT:
        raise ValueError(f"boost needs an independent set, got kind={I.kind!r}")
    if s < 2:
        raise ValueError("s must be >= 2")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    base = I.as_array()
    bound = first_moment_bound(len(I), I.n, s)
    if s == 2:
        return BoostResult((), I, len(I), bound, trials, seed, len(I) < bound)

    best_size, best_u, best_members = -1, (), base
    for trial in range(trials):
        us = draw_translates(I.n, s - 2, seed, trial)
        members = union_of_translates(base, us)
        if members.shape[0] > best_size:
            best_size, best_u, best_members = members.shape[0], us, members
    out = CertifiedSet(
        n=I.n,
        r=I.r,
        s=s,
        vertices=best_members,
        kind=KS_FREE,
        method=f"boost-{s - 1}-translates",
        meta={"translates": list(best_u)},
    )
    return BoostResult(best_u, out, best_size, bound, trials, seed, best_size < bound)


@dataclass(frozen=True)
class ExpectedSize:
    exact: Fraction
    pairwise_lower: Fraction
    closed_form_bound: Fraction


def expected_size_exact(size: int, n: int, s: int) -> ExpectedSize:
    """E|S| over independent uniform translates u_1..u_{s-2}.

    Each point lies in a given translate with probability p = |I|/2^n, and
    the s-1 events are independent, so E|S| = 2^n (1 - (1-p)^(s-1)).
    Truncating inclusion-exclusion after the pair terms gives the
    first-moment lower bound (s-1)|I| - C(s-1, 2)|I|^2/2^n.
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    total = 1 << n
    p = Fraction(size, total)
    exact = total * (1 - (1 - p) ** (s - 1))
    pairwise = (s - 1) * size - comb(s - 1, 2) * Fraction(size * size, total)
    return ExpectedSize(exact, pairwise, first_moment_bound(size, n, s))

