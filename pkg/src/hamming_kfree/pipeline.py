"""End-to-end flows shared by the CLI: construct, verify, report."""

from __future__ import annotations

from .bch import build_fiber_coloring, independent_set_from_fiber
from .boosting import boost
from .bounds import BoundsReport, assemble_report
from .cube import CubeParams, subset_masks
from .exact import BudgetExceeded, SearchBudget, contains_ks, max_ks_free, transfer_bounds
from .layer import build_cube_coloring, ks_free_from_coloring
from .sets import INDEPENDENT, KS_FREE, CertifiedSet
from . import kernels

ENGINES = ("bch", "layer", "boost")
VERIFY_PAIR_CAP = 10**8


class VerificationFailed(Exception):
    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


def largest_fiber(params: CubeParams) -> CertifiedSet:
    coloring = build_fiber_coloring(params)
    return independent_set_from_fiber(coloring, coloring.largest_classes(1)[0])


def construct(engine: str, params: CubeParams, seed: int = 0, trials: int = 100) -> CertifiedSet:
    """A K_s-free set of H_r(n) from one engine (independent when s = 2)."""
    if engine == "bch":
        return ks_free_from_coloring(build_fiber_coloring(params), params.s)
    if engine == "layer":
        return ks_free_from_coloring(build_cube_coloring(params.n, params.t), params.s)
    if engine == "boost":
        return boost(largest_fiber(params), params.s, trials=trials, seed=seed).set
    raise ValueError(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")


def verify(cs: CertifiedSet, budget: SearchBudget | None = None) -> CertifiedSet:
    """Exhaustively re-check a set; returns it with an upgraded certificate.

    Raises VerificationFailed with the offending clique, or BudgetExceeded.
    """
    n, r, s = cs.n, cs.r, cs.s
    budget = budget or SearchBudget(max_pairs=VERIFY_PAIR_CAP)
    if s == 2:
        if len(cs) * len(subset_masks(n, r)) > budget.max_pairs:
            raise BudgetExceeded("edge scan exceeds budget")
        if kernels.count_set_edges(cs.as_array(), n, subset_masks(n, r)):
            raise VerificationFailed("adjacent pair found", contains_ks(cs.vertices, n, r, 2, budget))
        kind = INDEPENDENT
    else:
        witness = contains_ks(cs.vertices, n, r, s, budget)
        if witness is not None:
            raise VerificationFailed(f"K_{s} found", witness)
        kind = KS_FREE
    return CertifiedSet(
        n=n,
        r=r,
        s=s,
        vertices=cs.vertices,
        kind=kind,
        method=cs.method or "exhaustive",
        verified=True,
        meta=cs.meta,
    )


def build_report(
    params: CubeParams,
    engines=("bch", "layer"),
    with_exact: bool = False,
    budget: SearchBudget | None = None,
    seed: int = 0,
    trials: int = 100,
) -> BoundsReport:
    constructions = {e: len(construct(e, params, seed, trials)) for e in engines}
    exact_value = None
    complete = True
    transfer = {}
    if with_exact:
        budget = budget or SearchBudget()
        try:
            res = max_ks_free(params.n, params.r, params.s, budget)
            exact_value, complete = res.value, res.exact
        except BudgetExceeded:
            pass
        transfer = transfer_bounds(params.n, params.t, params.s, budget)
    return assemble_report(params, constructions, exact_value, complete, transfer)
