import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from kvis.graph import Graph

ACCEPTANCE_LINES: list[str] = []
REPORT_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    for title, lines in (("empirical checks", REPORT_LINES),
                         ("acceptance criteria", ACCEPTANCE_LINES)):
        if lines:
            terminalreporter.section(title)
            for line in lines:
                terminalreporter.write_line(line)


# -- independent oracles -----------------------------------------------------

def floyd_warshall(g: Graph):
    inf = float("inf")
    d = [[0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(g.n)]
         for i in range(g.n)]
    for w in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][w] + d[w][j] < d[i][j]:
                    d[i][j] = d[i][w] + d[w][j]
    return d


def shortest_paths(g: Graph, u: int, v: int):
    """Every shortest u,v-path as a vertex tuple, by exhaustive simple-path search."""
    d = floyd_warshall(g)[u][v]
    out = []

    def walk(path):
        x = path[-1]
        if len(path) - 1 == d:
            if x == v:
                out.append(tuple(path))
            return
        for w in sorted(g.adj[x]):
            if w not in path:
                walk(path + [w])

    walk([u])
    return out


def oracle_visible(g, u, v, s, k=None):
    if u == v:
        return True
    paths = shortest_paths(g, u, v)
    if k is not None and len(paths[0]) - 1 > k:
        return False
    return any(not set(p[1:-1]) & set(s) for p in paths)


def oracle_is_kmv(g, s, k=None):
    return all(oracle_visible(g, a, b, s, k) for a, b in combinations(sorted(s), 2))


def brute_clique_number(g: Graph) -> int:
    for size in range(g.n, 0, -1):
        for sub in combinations(range(g.n), size):
            if all(g.has_edge(a, b) for a, b in combinations(sub, 2)):
                return size
    return 0


# -- random graph corpora ----------------------------------------------------

def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    for a, b in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((a, b))
    return Graph.from_edges(n, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(i, rng.randrange(i)) for i in range(1, n)])


def connected_corpus(count=200, max_n=9, seed=20240611):
    rng = random.Random(seed)
    graphs = []
    while len(graphs) < count:
        n = rng.randint(2, max_n)
        p = rng.choice([0.1, 0.2, 0.35, 0.5])
        graphs.append(random_connected_graph(rng, n, p))
    return graphs


def tree_corpus(count=100, max_n=14, seed=7):
    rng = random.Random(seed)
    return [random_tree(rng, rng.randint(2, max_n)) for _ in range(count)]


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.sampled_from([0.0, 0.15, 0.3, 0.5, 0.8]))
    return random_connected_graph(random.Random(seed), n, p)


@pytest.fixture(scope="session")
def corpus():
    return connected_corpus()


@pytest.fixture(scope="session")
def trees():
    return tree_corpus()
