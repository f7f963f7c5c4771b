"""Gadget graph reducing maximum independent set to the k-distance MV problem.

From a connected base graph ``G`` (order n, size m, diameter d >= 3) the
gadget adds a hub ``w`` adjacent to everything of ``G``, an n-clique ``A_e``
per edge ``e = ij`` joined to ``i``, ``j`` and ``w``, and a chain of n-cliques
``B_1 .. B_{d-1}`` hanging off ``V(G)``. For ``2 <= k <= d-1`` its
k-distance MV number is ``n(m+k-1) + alpha(G) - k + 2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .graph import Graph, VertexSet, all_pairs, independence_number, is_independent


@dataclass(frozen=True)
class GPrimeLayout:
    base: Graph
    base_diameter: int
    gprime: Graph
    roles: tuple[str, ...]
    hub: int
    edge_cliques: tuple[tuple[int, ...], ...]
    layer_cliques: tuple[tuple[int, ...], ...]

    @property
    def base_edges(self) -> list[tuple[int, int]]:
        return self.base.edges()

    def role_table(self) -> str:
        return "".join(f"{v} {role}\n" for v, role in enumerate(self.roles))


def build_gprime(g: Graph) -> GPrimeLayout:
    """Build the gadget; vertex ids are originals, hub, A_e blocks, B_j blocks."""
    g.require_connected()
    if g.n < 3:
        raise ParameterError("the reduction needs a base graph of order >= 3")
    d = all_pairs(g).diameter
    if d < 3:
        raise ParameterError(f"the reduction needs base diameter >= 3 (got {d})")
    n = g.n
    roles = [f"original({g.label(i)})" for i in range(n)]
    edges = list(g.edges())
    hub = n
    roles.append("hub_w")
    for i in range(n):
        edges.append((i, hub))

    def clique(tag: str) -> tuple[int, ...]:
        start = len(roles)
        for idx in range(n):
            roles.append(f"{tag},{idx})")
        block = tuple(range(start, start + n))
        for a in range(len(block)):
            for b in range(a):
                edges.append((block[b], block[a]))
        return block

    edge_cliques = []
    for i, j in g.edges():
        block = clique(f"edge_clique({g.label(i)}-{g.label(j)}")
        for x in block:
            edges.extend([(i, x), (j, x), (hub, x)])
        edge_cliques.append(block)

    layer_cliques = []
    for j in range(1, d):
        block = clique(f"layer_clique({j}")
        if j == 1:
            edges.extend((i, x) for i in range(n) for x in block)
        else:
            edges.extend((y, x) for y in layer_cliques[-1] for x in block)
        layer_cliques.append(block)

    gprime = Graph.from_edges(len(roles), edges)
    return GPrimeLayout(g, d, gprime, tuple(roles), hub, tuple(edge_cliques),
                        tuple(layer_cliques))


def _check_k(layout: GPrimeLayout, k: int) -> None:
    if not 2 <= k <= layout.base_diameter - 1:
        raise ParameterError(
            f"k must satisfy 2 <= k <= {layout.base_diameter - 1} for this gadget (got {k})")


def proof_witness_set(layout: GPrimeLayout, k: int, independent_set) -> VertexSet:
    """The explicit lower-bound set: I, every A_e, B_1..B_{k-2} minus one vertex, and B_{k-1}.

    The withheld vertex of each B_j is its least id.
    """
    _check_k(layout, k)
    ind = set(independent_set)
    if not ind <= set(range(layout.base.n)):
        raise ParameterError("independent set contains vertices outside the base graph")
    if not is_independent(layout.base, ind):
        raise ParameterError("the given vertex set is not independent in the base graph")
    members = set(ind)
    for block in layout.edge_cliques:
        members.update(block)
    for block in layout.layer_cliques[:k - 2]:
        members.update(block[1:])
    members.update(layout.layer_cliques[k - 2])
    return VertexSet(members)


def witness_size(layout: GPrimeLayout, k: int, independent_size: int) -> int:
    n, m = layout.base.n, layout.base.m
    return n * (m + k - 1) + independent_size - k + 2


def expected_mu_gprime(layout: GPrimeLayout, k: int) -> int:
    _check_k(layout, k)
    return witness_size(layout, k, independence_number(layout.base))
