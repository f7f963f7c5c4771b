"""Graph representation, edge-list parsing and exact classical metrics."""

from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, TextIO

from .errors import ConnectivityError, GraphFormatError, SizeLimitError

#: Default vertex cap for the exact clique / independence searches.
EXACT_SEARCH_LIMIT = 64


class VertexSet(frozenset):
    """Immutable vertex subset that iterates in increasing id order."""

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(frozenset.__iter__(self)))

    def __repr__(self) -> str:
        return "VertexSet({%s})" % ", ".join(map(str, self))

    @property
    def mask(self) -> int:
        m = 0
        for v in frozenset.__iter__(self):
            m |= 1 << v
        return m

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        return cls(iter_bits(mask))

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``labels`` optionally maps each dense id back to the label it had in an
    input file; it is ignored by equality.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for u, nb in enumerate(self.adj):
            for v in nb:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if u not in self.adj[v]:
                    raise ValueError(f"asymmetric adjacency {u}-{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[int] | None = None) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj),
                   tuple(labels) if labels is not None else None)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbor_masks(self) -> list[int]:
        masks = []
        for nb in self.adj:
            m = 0
            for v in nb:
                m |= 1 << v
            masks.append(m)
        return masks

    def label(self, v: int) -> int:
        return self.labels[v] if self.labels is not None else v

    def complement(self) -> "Graph":
        full = set(range(self.n))
        return Graph(self.n, tuple(frozenset(full - a - {u}) for u, a in enumerate(self.adj)),
                     self.labels)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, reindexed densely in increasing id order.

        ``labels`` of the result hold the host ids.
        """
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        adj = tuple(frozenset(index[w] for w in self.adj[v] if w in index) for v in vs)
        return Graph(len(vs), adj, tuple(vs))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(bfs_distances(self, 0)) == self.n

    def require_connected(self) -> None:
        if not self.is_connected():
            raise ConnectivityError("graph is not connected")

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()


def from_edge_list(text: str | TextIO) -> Graph:
    """Parse a whitespace-separated edge list.

    Blank lines and lines starting with ``#`` or ``c`` are skipped. Labels may
    be any nonnegative integers; they are reindexed densely in order of first
    appearance and kept in ``Graph.labels``.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    index: dict[int, int] = {}
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line[0] in "#c":
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two vertex labels, got {len(tokens)} tokens", lineno)
        try:
            a, b = (int(t) for t in tokens)
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None
        if a < 0 or b < 0:
            raise GraphFormatError("negative vertex label", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop on vertex {a}", lineno)
        for x in (a, b):
            if x not in index:
                index[x] = len(index)
        u, v = index[a], index[b]
        edges.add((min(u, v), max(u, v)))
    labels = sorted(index, key=index.__getitem__)
    return Graph.from_edges(len(index), sorted(edges), labels)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return from_edge_list(fh)


def to_edge_list(g: Graph, use_labels: bool = True) -> str:
    name = g.label if use_labels else (lambda v: v)
    return "".join(f"{name(u)} {name(v)}\n" for u, v in g.edges())


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances plus derived metrics.

    ``dist[u][v]`` is ``None`` for unreachable pairs and ``girth`` is ``None``
    for forests; bound code reads ``None`` girth as infinite.
    """

    dist: tuple[tuple[int | None, ...], ...]
    diameter: int
    girth: int | None
    min_degree: int
    max_degree: int

    @property
    def n(self) -> int:
        return len(self.dist)

    def __call__(self, u: int, v: int) -> int | None:
        return self.dist[u][v]

    @property
    def connected(self) -> bool:
        return all(d is not None for row in self.dist for d in row)


def all_pairs(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; girth from the shortest non-tree edge closure."""
    n = g.n
    rows = []
    girth = None
    for s in range(n):
        dist = [None] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] is None:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cycle = dist[u] + dist[w] + 1
                    if girth is None or cycle < girth:
                        girth = cycle
        rows.append(tuple(dist))
    finite = [d for row in rows for d in row if d is not None]
    degrees = [len(a) for a in g.adj]
    return DistanceMatrix(
        dist=tuple(rows),
        diameter=max(finite, default=0),
        girth=girth,
        min_degree=min(degrees, default=0),
        max_degree=max(degrees, default=0),
    )


def _max_clique(nbr: list[int], candidates: int) -> int:
    """Mask of a maximum clique inside ``candidates`` (greedy-colouring bound)."""
    best = 0
    best_size = 0

    def colour_order(p: int) -> list[tuple[int, int]]:
        # vertices with their colour number, in increasing colour order
        order = []
        colour = 0
        uncoloured = p
        while uncoloured:
            colour += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~nbr[v] & ~low
                uncoloured &= ~low
                order.append((v, colour))
        return order

    def expand(clique: int, size: int, p: int) -> None:
        nonlocal best, best_size
        for v, colour in reversed(colour_order(p)):
            if size + colour <= best_size:
                return
            bit = 1 << v
            np_ = p & nbr[v]
            if np_:
                expand(clique | bit, size + 1, np_)
            elif size + 1 > best_size:
                best, best_size = clique | bit, size + 1
            p &= ~bit

    expand(0, 0, candidates)
    return best


def max_clique(g: Graph, limit: int = EXACT_SEARCH_LIMIT) -> VertexSet:
    """A maximum clique, found by branch-and-bound over neighbour bitsets."""
    if g.n > limit:
        raise SizeLimitError(f"graph has {g.n} vertices; exact clique search limit is {limit}")
    if g.n == 0:
        return VertexSet()
    return VertexSet.from_mask(_max_clique(g.neighbor_masks(), (1 << g.n) - 1))


def clique_number(g: Graph, limit: int = EXACT_SEARCH_LIMIT) -> int:
    return len(max_clique(g, limit))


def max_independent_set(g: Graph, limit: int = EXACT_SEARCH_LIMIT) -> VertexSet:
    return max_clique(g.complement(), limit)


def independence_number(g: Graph, limit: int = EXACT_SEARCH_LIMIT) -> int:
    return len(max_independent_set(g, limit))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return not any(g.adj[v] & vs for v in vs)
