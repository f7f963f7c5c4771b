"""S_k-visibility between vertex pairs and k-distance mutual-visibility sets.

Two vertices ``u, v`` are visible with respect to a set ``S`` when some
shortest ``u,v``-path has no internal vertex in ``S``; with a length cap
``k`` the path must also have length at most ``k``, which for a shortest
path is simply ``dist(u, v) <= k``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .errors import ConnectivityError, ParameterError
from .graph import DistanceMatrix, Graph


def geodesic_exists_avoiding(g: Graph, dm: DistanceMatrix, u: int, v: int,
                             blocked: Iterable[int]) -> bool:
    """True iff some shortest u,v-path has all internal vertices outside ``blocked``.

    Walks the layered shortest-path DAG from ``u`` towards ``v``, keeping only
    vertices ``w`` with ``d(u,w) + d(w,v) = d(u,v)`` that are not blocked.
    """
    d = dm.dist[u][v]
    if d is None:
        raise ConnectivityError(f"vertices {u} and {v} are not connected")
    if d <= 1:
        return True
    blocked = blocked if isinstance(blocked, (set, frozenset)) else set(blocked)
    row_u, row_v = dm.dist[u], dm.dist[v]
    frontier = {u}
    for layer in range(1, d):
        nxt = set()
        for x in frontier:
            for w in g.adj[x]:
                if row_u[w] == layer and row_v[w] == d - layer and w not in blocked:
                    nxt.add(w)
        if not nxt:
            return False
        frontier = nxt
    # every vertex on layer d-1 of the interval is adjacent to v
    return True


def is_sk_visible(g: Graph, dm: DistanceMatrix, u: int, v: int,
                  s: Iterable[int], k: int) -> bool:
    if k < 1:
        raise ParameterError("k must be at least 1")
    d = dm.dist[u][v]
    if d is None:
        raise ConnectivityError(f"vertices {u} and {v} are not connected")
    if d > k:
        return False
    return geodesic_exists_avoiding(g, dm, u, v, s)


def invisible_pairs(g: Graph, dm: DistanceMatrix, s: Iterable[int], k: int
                    ) -> list[tuple[int, int]]:
    """Pairs of ``s`` that are not S_k-visible, in lexicographic order."""
    members = sorted(set(s))
    blocked = frozenset(members)
    return [(a, b) for a, b in combinations(members, 2)
            if not is_sk_visible(g, dm, a, b, blocked, k)]


def is_k_mv_set(g: Graph, dm: DistanceMatrix, s: Iterable[int], k: int) -> bool:
    """True iff every two vertices of ``s`` are S_k-visible."""
    if k < 1:
        raise ParameterError("k must be at least 1")
    if not dm.connected:
        raise ConnectivityError("graph is not connected")
    members = sorted(set(s))
    blocked = frozenset(members)
    for a, b in combinations(members, 2):
        if not is_sk_visible(g, dm, a, b, blocked, k):
            return False
    return True


def is_mv_set(g: Graph, dm: DistanceMatrix, s: Iterable[int]) -> bool:
    """Mutual-visibility without a length cap."""
    if not dm.connected:
        raise ConnectivityError("graph is not connected")
    members = sorted(set(s))
    blocked = frozenset(members)
    return all(geodesic_exists_avoiding(g, dm, a, b, blocked)
               for a, b in combinations(members, 2))
