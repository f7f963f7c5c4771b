"""Exact computation of the k-distance mutual-visibility number.

``mu_k_exact`` is a depth-first include/exclude search over vertex bitsets.
Because the property is hereditary, a vertex that cannot be added to the
current set can never be added to any superset, so candidates are filtered
on every insertion. Candidates must also be pairwise within distance ``k``,
which gives a greedy-colouring upper bound on the distance-``k`` graph.

The reported witness is the first maximum set in depth-first order (or the
greedy seed when the seed is already optimal). Parallel runs split the
root's branches into independent tasks and pick the earliest task reaching
the maximum, which reproduces the sequential witness exactly.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded, ParameterError, SizeLimitError
from .graph import DistanceMatrix, Graph, VertexSet, all_pairs, iter_bits
from .visibility import is_k_mv_set, is_mv_set

BRUTEFORCE_LIMIT = 20
ENUMERATE_LIMIT = 14
PARALLEL_MIN_N = 16


@dataclass(frozen=True)
class SolveResult:
    mu: int
    witness: VertexSet
    k_effective: int
    clamped: bool
    nodes_explored: int
    elapsed: float
    method: str = "bb"


def _prepare(g: Graph, k: int, dm: DistanceMatrix | None):
    if k < 1:
        raise ParameterError("k must be at least 1")
    g.require_connected()
    dm = dm if dm is not None else all_pairs(g)
    if dm.diameter >= 1 and k > dm.diameter:
        return dm, dm.diameter, True
    return dm, k, False


def mu_k_bruteforce(g: Graph, k: int, dm: DistanceMatrix | None = None) -> SolveResult:
    """Reference oracle: subsets by decreasing size, lexicographic within a size.

    The witness is the lexicographically least maximum set.
    """
    if g.n > BRUTEFORCE_LIMIT:
        raise SizeLimitError(f"brute force is capped at {BRUTEFORCE_LIMIT} vertices (got {g.n})")
    start = time.perf_counter()
    dm, k_eff, clamped = _prepare(g, k, dm)
    tried = 0
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            tried += 1
            if is_k_mv_set(g, dm, subset, k_eff):
                return SolveResult(size, VertexSet(subset), k_eff, clamped, tried,
                                   time.perf_counter() - start, "brute")
    return SolveResult(0, VertexSet(), k_eff, clamped, tried, time.perf_counter() - start, "brute")


def mu_bruteforce(g: Graph, dm: DistanceMatrix | None = None) -> int:
    """Plain mutual-visibility number (no length cap), by exhaustive search."""
    if g.n > BRUTEFORCE_LIMIT:
        raise SizeLimitError(f"brute force is capped at {BRUTEFORCE_LIMIT} vertices (got {g.n})")
    g.require_connected()
    dm = dm if dm is not None else all_pairs(g)
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            if is_mv_set(g, dm, subset):
                return size
    return 0


def enumerate_maximum_sets(g: Graph, k: int, dm: DistanceMatrix | None = None
                           ) -> list[VertexSet]:
    """All maximum k-distance mutual-visibility sets, in lexicographic order."""
    if g.n > ENUMERATE_LIMIT:
        raise SizeLimitError(f"enumeration is capped at {ENUMERATE_LIMIT} vertices (got {g.n})")
    dm, k_eff, _ = _prepare(g, k, dm)
    mu = mu_k_bruteforce(g, k_eff, dm).mu
    return [VertexSet(s) for s in combinations(range(g.n), mu)
            if is_k_mv_set(g, dm, s, k_eff)]


class PairTable:
    """Bitset tables for S_k-visibility tests on one graph and one ``k``.

    ``layers[a][b]`` lists, for ``d(a,b) <= k``, the interior layers of the
    a-to-b shortest-path interval; ``through[v][a]`` is the mask of every
    ``b`` whose a,b-interval passes through ``v``.
    """

    def __init__(self, g: Graph, dm: DistanceMatrix, k: int):
        n = g.n
        self.n = n
        self.k = k
        self.nbr = g.neighbor_masks()
        dist = dm.dist
        self.compat = [0] * n
        self.layers: list[list[tuple[int, ...] | None]] = [[None] * n for _ in range(n)]
        self.through = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                d = dist[a][b]
                if a == b or d > k:
                    continue
                self.compat[a] |= 1 << b
                layer_masks = [0] * (d - 1)
                for w in range(n):
                    dw = dist[a][w]
                    if 0 < dw < d and dw + dist[w][b] == d:
                        layer_masks[dw - 1] |= 1 << w
                        self.through[w][a] |= 1 << b
                self.layers[a][b] = tuple(layer_masks)

    def visible(self, a: int, b: int, blocked: int) -> bool:
        layers = self.layers[a][b]
        if not layers:
            return True
        if len(layers) == 1:
            return bool(layers[0] & ~blocked)
        nbr = self.nbr
        front = 1 << a
        for layer in layers:
            avail = layer & ~blocked
            if not avail:
                return False
            reach = 0
            f = front
            while f:
                low = f & -f
                reach |= nbr[low.bit_length() - 1]
                f ^= low
            front = reach & avail
            if not front:
                return False
        return True

    def can_add(self, s_mask: int, members: list[int], v: int) -> bool:
        """Whether ``members + [v]`` is valid, given ``members`` is valid."""
        if s_mask & ~self.compat[v]:
            return False
        blocked = s_mask | (1 << v)
        visible = self.visible
        for s in members:
            if not visible(s, v, blocked):
                return False
        through = self.through[v]
        for a in members:
            m = through[a] & s_mask
            while m:
                low = m & -m
                b = low.bit_length() - 1
                m ^= low
                if b > a and not visible(a, b, blocked):
                    return False
        return True

    def is_valid(self, vertices) -> bool:
        members: list[int] = []
        mask = 0
        for v in vertices:
            if not self.can_add(mask, members, v):
                return False
            members.append(v)
            mask |= 1 << v
        return True


def branching_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


class _Budget(Exception):
    pass


class _Search:
    def __init__(self, table: PairTable, order: list[int], best: list[int],
                 deadline: float | None):
        self.table = table
        self.order = order
        self.best = list(best)
        self.best_size = len(best)
        self.deadline = deadline
        self.nodes = 0

    def suffix_bounds(self, cands: list[int]) -> list[int]:
        """``bounds[i]`` caps how many of ``cands[i:]`` fit in one valid set."""
        compat = self.table.compat
        classes: list[int] = []
        bounds = [0] * (len(cands) + 1)
        for i in range(len(cands) - 1, -1, -1):
            v = cands[i]
            bit = 1 << v
            cv = compat[v]
            for j, cls in enumerate(classes):
                if not cls & cv:
                    classes[j] = cls | bit
                    break
            else:
                classes.append(bit)
            bounds[i] = len(classes)
        return bounds

    def expand(self, members: list[int], mask: int, cands: list[int]) -> None:
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 255 and time.monotonic() > self.deadline:
            raise _Budget
        size = len(members)
        if size > self.best_size:
            self.best = list(members)
            self.best_size = size
        if not cands:
            return
        bounds = self.suffix_bounds(cands)
        can_add = self.table.can_add
        for i, v in enumerate(cands):
            if size + bounds[i] <= self.best_size:
                return
            child_members = members + [v]
            child_mask = mask | (1 << v)
            child = [c for c in cands[i + 1:] if can_add(child_mask, child_members, c)]
            self.expand(child_members, child_mask, child)

    def root_branch(self, i: int) -> None:
        """Explore the root branch that includes ``order[i]`` and excludes earlier ones."""
        self.nodes += 1
        bounds = self.suffix_bounds(self.order)
        if bounds[i] <= self.best_size:
            return
        v = self.order[i]
        child = [c for c in self.order[i + 1:] if self.table.can_add(1 << v, [v], c)]
        self.expand([v], 1 << v, child)


def greedy_seed(table: PairTable, order: list[int]) -> list[int]:
    members: list[int] = []
    mask = 0
    for v in order:
        if table.can_add(mask, members, v):
            members.append(v)
            mask |= 1 << v
    return members


def _worker_count(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("KVIS_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ParameterError(f"KVIS_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


_WORKER_STATE: dict = {}


def _init_worker(table, order, seed, deadline):
    _WORKER_STATE.update(table=table, order=order, seed=seed, deadline=deadline)


def _run_root_branch(i: int):
    st = _WORKER_STATE
    search = _Search(st["table"], st["order"], st["seed"], st["deadline"])
    try:
        search.root_branch(i)
    except _Budget:
        return i, search.best, search.nodes, True
    return i, search.best, search.nodes, False


def mu_k_exact(g: Graph, k: int, dm: DistanceMatrix | None = None, *,
               budget: float | None = None, workers: int | None = None,
               parallel_min_n: int = PARALLEL_MIN_N) -> SolveResult:
    """Exact k-distance mutual-visibility number by branch and bound.

    ``k`` above the diameter is clamped (the value no longer changes there).
    ``budget`` is an optional wall-clock limit in seconds; when it runs out a
    :class:`BudgetExceeded` carrying the best set so far is raised. Worker
    count defaults to ``KVIS_THREADS`` or all cores; the result does not
    depend on it.
    """
    start = time.perf_counter()
    dm, k_eff, clamped = _prepare(g, k, dm)
    if g.n == 0:
        return SolveResult(0, VertexSet(), k_eff, clamped, 0, 0.0)
    deadline = time.monotonic() + budget if budget is not None else None
    table = PairTable(g, dm, k_eff)
    order = branching_order(g)
    seed = greedy_seed(table, order)
    n_workers = _worker_count(workers)

    if n_workers > 1 and g.n >= parallel_min_n:
        best, nodes, exhausted = _solve_parallel(table, order, seed, deadline, n_workers)
    else:
        search = _Search(table, order, seed, deadline)
        exhausted = False
        try:
            search.expand([], 0, order)
        except _Budget:
            exhausted = True
        best, nodes = search.best, search.nodes

    elapsed = time.perf_counter() - start
    if exhausted:
        raise BudgetExceeded(len(best), VertexSet(best), nodes, elapsed)
    return SolveResult(len(best), VertexSet(best), k_eff, clamped, nodes, elapsed)


def _solve_parallel(table, order, seed, deadline, n_workers):
    with ProcessPoolExecutor(max_workers=n_workers, initializer=_init_worker,
                             initargs=(table, order, seed, deadline)) as pool:
        results = sorted(pool.map(_run_root_branch, range(len(order))))
    best = list(seed)
    nodes = 1
    exhausted = False
    for _, branch_best, branch_nodes, branch_exhausted in results:
        nodes += branch_nodes
        exhausted = exhausted or branch_exhausted
        # strict improvement keeps the earliest branch among equals
        if len(branch_best) > len(best):
            best = branch_best
    return best, nodes, exhausted


def solve(g: Graph, k: int, method: str = "bb", **kwargs) -> SolveResult:
    if method == "bb":
        return mu_k_exact(g, k, **kwargs)
    if method == "brute":
        return mu_k_bruteforce(g, k, kwargs.get("dm"))
    raise ParameterError(f"unknown method {method!r}")
