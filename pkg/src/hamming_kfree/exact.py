"""Exhaustive oracles for tiny instances.

Graphs are lists of adjacency bitmasks (Python ints). The solver for the
largest K_s-free vertex set is a branch and bound in the style of colouring
based max-clique search: candidates are greedily partitioned into cliques, a
clique can hold at most s-1 vertices of a K_s-free set, and the running sum of
those capacities bounds every branch. Components are solved separately, and
for vertex-transitive graphs the first vertex of each component is fixed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .cube import ENUM_CAP, CubeParams, layer, subset_masks


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class SearchBudget:
    max_vertices: int = 1 << 12
    max_pairs: int = 10**8
    max_nodes: int = 5 * 10**7
    time_cap: float = 600.0

    def __post_init__(self):
        if min(self.max_vertices, self.max_pairs, self.max_nodes) <= 0 or self.time_cap <= 0:
            raise ValueError("budget entries must be positive")


@dataclass(frozen=True)
class SunflowerSpec:
    k: int
    ell: int
    s: int

    def __post_init__(self):
        if not 0 <= self.ell <= self.k - 1 or self.s < 2:
            raise ValueError(f"invalid sunflower shape k={self.k} l={self.ell} s={self.s}")


@dataclass
class SearchResult:
    value: int
    witness: list[int]
    exact: bool
    nodes: int
    meta: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"value": self.value, "witness": self.witness, "exact": self.exact, "nodes": self.nodes}


# -- graphs -------------------------------------------------------------------


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def cube_graph(n: int, r: int) -> list[int]:
    """Adjacency masks of H_r(n); vertex x is bit x."""
    masks = [int(m) for m in subset_masks(n, r)]
    return [sum(1 << (x ^ m) for m in masks) for x in range(1 << n)]


def induced_graph(vertices, n: int, r: int) -> list[int]:
    """Adjacency masks of the subgraph of H_r(n) induced on ``vertices`` (by position)."""
    verts = [int(v) for v in vertices]
    if (1 << n) <= (1 << 22):
        pos = {v: i for i, v in enumerate(verts)}
        masks = [int(m) for m in subset_masks(n, r)]
        adj = []
        for v in verts:
            a = 0
            for m in masks:
                j = pos.get(v ^ m)
                if j is not None:
                    a |= 1 << j
            adj.append(a)
        return adj
    adj = [0] * len(verts)
    for i, j in combinations(range(len(verts)), 2):
        if (verts[i] ^ verts[j]).bit_count() == r:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def intersection_graph(n: int, k: int, ell: int) -> tuple[list[int], list[int]]:
    """k-subsets of [n] (as bitmasks, ascending) joined when they meet in exactly ell points."""
    sets = [int(x) for x in layer(n, k)]
    adj = [0] * len(sets)
    for i, j in combinations(range(len(sets)), 2):
        if (sets[i] & sets[j]).bit_count() == ell:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return sets, adj


def components(adj: list[int]) -> list[int]:
    """Vertex masks of the connected components, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(len(adj)):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def find_clique(adj: list[int], mask: int, size: int) -> list[int] | None:
    """Some clique of ``size`` vertices inside ``mask``, or None."""
    if size <= 0:
        return []
    if mask.bit_count() < size:
        return None
    for v in _bits(mask):
        rest = mask & adj[v] & ~((2 << v) - 1)
        sub = find_clique(adj, rest, size - 1)
        if sub is not None:
            return [v] + sub
    return None


# -- branch and bound ---------------------------------------------------------


class _Search:
    def __init__(self, adj, s, budget, pool=None):
        self.adj = adj
        self.pool = pool or []
        self.s = s
        self.cap = s - 1
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_cap
        self.best = 0
        self.best_set = 0
        self.aborted = False

    def _prune_after_adding(self, chosen: int, v: int, cand: int) -> int:
        adj = self.adj
        cand &= ~(1 << v)
        if self.s == 2:
            return cand & ~adj[v]
        if self.s == 3:
            common = adj[v] & chosen
            if not common:
                return cand
            for u in _bits(cand & adj[v]):
                if adj[u] & common:
                    cand &= ~(1 << u)
            return cand
        for u in _bits(cand & adj[v]):
            if find_clique(adj, adj[u] & adj[v] & chosen, self.s - 2) is not None:
                cand &= ~(1 << u)
        return cand

    def _clique_saturation(self, chosen: int, common: int) -> int:
        """Largest clique (capped at s-1) inside the chosen vertices adjacent to a whole clique."""
        inside = chosen & common
        if not inside:
            return 0
        w = 1
        while w < self.cap and find_clique(self.adj, inside, w + 1) is not None:
            w += 1
        return w

    def _partition(self, chosen: int, cand: int):
        """Greedy clique partition of cand; returns vertices with cumulative bounds."""
        adj = self.adj
        cliques = []  # [members, common-neighbourhood mask]
        rem = cand
        while rem and self.pool:
            best_q, best_c = 0, 1
            for q in self.pool:
                c = (q & rem).bit_count()
                if c > best_c:
                    best_q, best_c = q, c
            if not best_q:
                break
            members = list(_bits(best_q & rem))
            common = -1
            for v in members:
                common &= adj[v]
            cliques.append([members, common])
            rem &= ~best_q
        for v in _bits(rem):
            for q in cliques:
                if q[1] >> v & 1:
                    q[0].append(v)
                    q[1] &= adj[v]
                    break
            else:
                cliques.append([[v], adj[v]])
        order = []
        total = 0
        for members, common in cliques:
            room = self.cap - self._clique_saturation(chosen, common) if self.s > 2 else self.cap
            for i, v in enumerate(members):
                order.append((v, total + min(i + 1, room)))
            total += min(len(members), room)
        return order

    def expand(self, chosen: int, size: int, cand: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes or (
            self.nodes % 4096 == 0 and time.monotonic() > self.deadline
        ):
            self.aborted = True
            return
        if size > self.best:
            self.best = size
            self.best_set = chosen
        if not cand:
            return
        order = self._partition(chosen, cand)
        for v, bound in reversed(order):
            if size + bound <= self.best or self.aborted:
                return
            new_chosen = chosen | (1 << v)
            self.expand(new_chosen, size + 1, self._prune_after_adding(new_chosen, v, cand))
            cand &= ~(1 << v)


def greedy_clique_pool(adj: list[int]) -> list[int]:
    """One maximal clique per vertex, grown by most neighbours among the remaining candidates."""
    pool = set()
    for v in range(len(adj)):
        clique = 1 << v
        cand = adj[v]
        while cand:
            u = max(_bits(cand), key=lambda w: (adj[w] & cand).bit_count())
            clique |= 1 << u
            cand &= adj[u]
        if clique.bit_count() > 1:
            pool.add(clique)
    return sorted(pool)


def _stacked_independent_sets(adj, comp, layers, pool, node_cap=20000):
    """Union of ``layers`` successively found large independent sets; K_{layers+1}-free."""
    union = 0
    rest = comp
    for _ in range(layers):
        if not rest:
            break
        search = _Search(adj, 2, SearchBudget(max_nodes=node_cap), pool)
        search.expand(0, 0, rest)
        union |= search.best_set
        rest &= ~search.best_set
    return union


def max_ks_free_graph(
    adj: list[int],
    s: int,
    budget: SearchBudget | None = None,
    vertex_transitive: bool = False,
) -> SearchResult:
    """Largest vertex set of the graph spanning no K_s, with a witness (vertex indices)."""
    budget = budget or SearchBudget()
    if s < 2:
        raise ValueError("s must be >= 2")
    if len(adj) > budget.max_vertices:
        raise BudgetExceeded(f"{len(adj)} vertices exceeds budget {budget.max_vertices}")
    total = 0
    witness = 0
    nodes = 0
    exact = True
    pool = greedy_clique_pool(adj)
    for comp in components(adj):
        comp_pool = [q for q in pool if q & comp]
        search = _Search(adj, s, budget, comp_pool)
        if s > 2:
            seed = _stacked_independent_sets(adj, comp, s - 1, comp_pool)
            search.best, search.best_set = seed.bit_count(), seed
        if vertex_transitive:
            v0 = (comp & -comp).bit_length() - 1
            chosen = 1 << v0
            search.expand(chosen, 1, search._prune_after_adding(chosen, v0, comp))
        else:
            search.expand(0, 0, comp)
        nodes += search.nodes
        exact &= not search.aborted
        total += search.best
        witness |= search.best_set
        budget = SearchBudget(
            budget.max_vertices,
            budget.max_pairs,
            max(1, budget.max_nodes - search.nodes),
            max(1e-3, search.deadline - time.monotonic()),
        )
    return SearchResult(total, list(_bits(witness)), exact, nodes)


def max_ks_free(n: int, r: int, s: int, budget: SearchBudget | None = None) -> SearchResult:
    """Exact alpha_s(H_r(n)) with a witness set of vertices."""
    budget = budget or SearchBudget()
    if n < 1 or r < 1 or s < 2:
        raise ValueError("need n >= 1, r >= 1, s >= 2")
    if n > ENUM_CAP or (1 << n) > budget.max_vertices:
        raise BudgetExceeded(f"2^{n} vertices exceeds budget {budget.max_vertices}")
    if r > n:
        return SearchResult(1 << n, list(range(1 << n)), True, 0, {"shortcut": "edgeless"})
    if r % 2 and s >= 3:
        # odd r: edges join opposite parities, so the graph is bipartite and triangle-free
        return SearchResult(1 << n, list(range(1 << n)), True, 0, {"shortcut": "bipartite"})
    # translations by the span of weight-r vectors act transitively on each component
    res = max_ks_free_graph(cube_graph(n, r), s, budget, vertex_transitive=True)
    if contains_ks(res.witness, n, r, s) is not None:  # pragma: no cover - solver bug guard
        raise AssertionError("solver witness contains a K_s")
    return res


def m_s_exact(n: int, k: int, ell: int, s: int, budget: SearchBudget | None = None) -> SearchResult:
    """Exact m_s(n, k, ell): largest family of k-subsets of [n] with no s members
    pairwise meeting in exactly ell points. The witness lists sets as bitmasks."""
    budget = budget or SearchBudget()
    if not 0 <= k <= n or s < 2:
        raise ValueError("need 0 <= k <= n and s >= 2")
    if comb(n, k) > budget.max_vertices:
        raise BudgetExceeded(f"C({n},{k}) exceeds budget {budget.max_vertices}")
    sets, adj = intersection_graph(n, k, ell)
    # coordinate permutations act transitively on the k-sets
    res = max_ks_free_graph(adj, s, budget, vertex_transitive=True)
    res.witness = [sets[i] for i in res.witness]
    if find_pairwise_intersecting(res.witness, ell, s) is not None:  # pragma: no cover
        raise AssertionError("solver witness contains a forbidden configuration")
    return res


# -- detectors -----------------------------------------------------------------


def contains_ks(vertices, n: int, r: int, s: int, budget: SearchBudget | None = None):
    """Some s vertices pairwise at distance exactly r, or None."""
    verts = sorted({int(v) for v in vertices})
    if len(verts) < s:
        return None
    budget = budget or SearchBudget()
    if len(verts) * min(len(verts), comb(n, r)) > budget.max_pairs:
        raise BudgetExceeded("pair scan exceeds budget")
    adj = induced_graph(verts, n, r)
    clique = find_clique(adj, (1 << len(verts)) - 1, s)
    return None if clique is None else [verts[i] for i in clique]


def is_ks_free(vertices, params: CubeParams) -> bool:
    return contains_ks(vertices, params.n, params.r, params.s) is None


def find_pairwise_intersecting(family, ell: int, s: int):
    """s members pairwise meeting in exactly ell points (the m_s forbidden pattern), or None."""
    fam = sorted({int(f) for f in family})
    adj = [0] * len(fam)
    for i, j in combinations(range(len(fam)), 2):
        if (fam[i] & fam[j]).bit_count() == ell:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    clique = find_clique(adj, (1 << len(fam)) - 1, s)
    return None if clique is None else [fam[i] for i in clique]


def _disjoint_pick(petals: list[int], s: int, start: int = 0, used: int = 0):
    if s == 0:
        return []
    for i in range(start, len(petals) - s + 1):
        if petals[i] & used == 0:
            rest = _disjoint_pick(petals, s - 1, i + 1, used | petals[i])
            if rest is not None:
                return [i] + rest
    return None


def find_sunflower(family, spec: SunflowerSpec, budget: SearchBudget | None = None):
    """A sunflower with spec.s petals and kernel of exactly spec.ell points, or None.

    Members are bitmasks of equal weight spec.k. Returns ``(kernel, members)``.
    """
    fam = sorted({int(f) for f in family})
    if any(f.bit_count() != spec.k for f in fam):
        raise ValueError(f"family is not {spec.k}-uniform")
    budget = budget or SearchBudget()
    if len(fam) > budget.max_vertices:
        raise BudgetExceeded("family too large")
    union = 0
    for f in fam:
        union |= f
    points = list(_bits(union))
    for kernel_pts in combinations(points, spec.ell):
        kernel = sum(1 << p for p in kernel_pts)
        holders = [f for f in fam if f & kernel == kernel]
        if len(holders) < spec.s:
            continue
        pick = _disjoint_pick([f & ~kernel for f in holders], spec.s)
        if pick is not None:
            return kernel, [holders[i] for i in pick]
    return None


def is_sunflower(sets, ell: int) -> bool:
    """Definition check: distinct sets, common kernel of size ell, pairwise disjoint petals."""
    sets = [int(a) for a in sets]
    if len(set(sets)) != len(sets) or not sets:
        return False
    kernel = sets[0]
    for a in sets[1:]:
        kernel &= a
    if kernel.bit_count() != ell:
        return False
    petals = [a & ~kernel for a in sets]
    return all(p & q == 0 for p, q in combinations(petals, 2))


# -- transfer inequality ------------------------------------------------------


def transfer_upper_bound(n: int, k: int, t: int, s: int, m_value: int) -> Fraction:
    """2^n * m_s(n, k, k-t) / C(n, k), an upper bound on alpha_s(H_{2t}(n))."""
    if not 0 <= k <= n:
        raise ValueError(f"layer k={k} outside 0..{n}")
    if m_value < 0:
        raise ValueError("m_value must be nonnegative")
    return Fraction((1 << n) * m_value, comb(n, k))


def transfer_bounds(n: int, t: int, s: int, budget: SearchBudget | None = None) -> dict[int, Fraction]:
    """Transfer bound for every layer whose m_s is exactly solvable within budget."""
    out = {}
    for k in range(n + 1):
        ell = k - t
        if ell < 0:
            # no two k-sets are at distance 2t: the whole layer is admissible
            out[k] = transfer_upper_bound(n, k, t, s, comb(n, k))
            continue
        try:
            res = m_s_exact(n, k, ell, s, budget)
        except BudgetExceeded:
            continue
        if res.exact:
            out[k] = transfer_upper_bound(n, k, t, s, res.value)
    return out


def layer_alpha(n: int, k: int, t: int, s: int, budget: SearchBudget | None = None) -> SearchResult:
    """alpha_s of the subgraph of H_{2t}(n) induced on layer k, searched in the cube graph."""
    verts = layer(n, k)
    adj = induced_graph(verts, n, 2 * t)
    res = max_ks_free_graph(adj, s, budget, vertex_transitive=True)
    res.witness = [int(verts[i]) for i in res.witness]
    return res


def brute_force_max_ks_free(adj: list[int], s: int) -> int:
    """Subset enumeration; only for graphs with <= 20 vertices."""
    nv = len(adj)
    if nv > 20:
        raise BudgetExceeded("brute force limited to 20 vertices")
    best = 0
    for mask in range(1 << nv):
        size = mask.bit_count()
        if size > best and find_clique(adj, mask, s) is None:
            best = size
    return best


def vertices_array(result: SearchResult) -> np.ndarray:
    return np.array(result.witness, dtype=np.int64)
