"""Generators for the graph families with known k-distance MV numbers.

Each family is described by a :class:`FamilySpec`; :func:`generate` builds
the graph and :func:`expected_mu` returns the closed-form value (``None``
when no formula covers the requested ``k``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import ParameterError, ShapeError
from .graph import DistanceMatrix, Graph, all_pairs, clique_number

FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "star": ("n",),
    "bistar": ("n", "m"),
    "caterpillar_uniform": ("r", "q"),
    "perfect_tree": ("delta", "diam"),
    "corona_path": ("r",),
    "strong_path_path2": ("r",),
    "strong_path_complete": ("r", "s"),
    "sun": ("t", "r"),
    "petersen": (),
    "heawood": (),
}

HEAWOOD_LCF = (5, -5) * 7


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: Mapping[str, int] = field(default_factory=dict)
    inner: "FamilySpec | None" = None

    @classmethod
    def of(cls, name: str, inner: "FamilySpec | None" = None, **params: int) -> "FamilySpec":
        return cls(normalize_name(name), dict(params), inner)

    def __getitem__(self, key: str) -> int:
        try:
            return self.params[key]
        except KeyError:
            raise ParameterError(f"family {self.name!r} needs parameter {key!r}") from None

    def describe(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        inner = f";inner={self.inner.describe()}" if self.inner else ""
        return f"{self.name}({args}{inner})"


def normalize_name(name: str) -> str:
    key = name.strip().lower().replace("-", "_")
    if key not in FAMILY_PARAMS:
        raise ParameterError(f"unknown family {name!r}; known: {', '.join(FAMILY_PARAMS)}")
    return key


class _Builder:
    def __init__(self):
        self.roles: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, role: str) -> int:
        self.roles.append(role)
        return len(self.roles) - 1

    def join(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def build(self) -> tuple[Graph, list[str]]:
        return Graph.from_edges(len(self.roles), self.edges), self.roles


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


def _check_params(spec: FamilySpec) -> None:
    expected = set(FAMILY_PARAMS[spec.name])
    unknown = set(spec.params) - expected
    if unknown:
        raise ParameterError(f"family {spec.name!r} does not take {sorted(unknown)}")
    missing = expected - set(spec.params)
    if missing:
        raise ParameterError(f"family {spec.name!r} needs {sorted(missing)}")
    if spec.name == "corona_path" and spec.inner is None:
        raise ParameterError("corona_path needs an inner family")
    if spec.name != "corona_path" and spec.inner is not None:
        raise ParameterError(f"family {spec.name!r} takes no inner family")


def generate_annotated(spec: FamilySpec) -> tuple[Graph, list[str]]:
    """Build the family graph together with a role tag per vertex."""
    _check_params(spec)
    b = _Builder()
    name = spec.name

    if name == "path":
        n = spec["n"]
        _need(n >= 1, "path needs n >= 1")
        for i in range(n):
            b.add(f"path:{i}")
            if i:
                b.join(i - 1, i)
    elif name == "cycle":
        n = spec["n"]
        _need(n >= 3, "cycle needs n >= 3")
        for i in range(n):
            b.add(f"cycle:{i}")
        for i in range(n):
            b.join(i, (i + 1) % n)
    elif name == "complete":
        n = spec["n"]
        _need(n >= 1, "complete needs n >= 1")
        for i in range(n):
            b.add(f"clique:{i}")
            for j in range(i):
                b.join(j, i)
    elif name == "star":
        n = spec["n"]
        _need(n >= 1, "star needs n >= 1")
        c = b.add("center")
        for i in range(n):
            b.join(c, b.add(f"leaf:{i}"))
    elif name == "bistar":
        n, m = spec["n"], spec["m"]
        _need(m >= n >= 1, "bistar needs m >= n >= 1")
        x = b.add("center:m")
        y = b.add("center:n")
        b.join(x, y)
        for i in range(m):
            b.join(x, b.add(f"leaf:m:{i}"))
        for i in range(n):
            b.join(y, b.add(f"leaf:n:{i}"))
    elif name == "caterpillar_uniform":
        r, q = spec["r"], spec["q"]
        _need(r >= 3 and q >= 2, "caterpillar_uniform needs r >= 3 and q >= 2")
        spine = [b.add(f"spine:{i}") for i in range(r)]
        for i in range(1, r):
            b.join(spine[i - 1], spine[i])
        for i, s in enumerate(spine):
            leaves = q - 1 if i in (0, r - 1) else q - 2
            for j in range(leaves):
                b.join(s, b.add(f"leaf:{i}:{j}"))
    elif name == "perfect_tree":
        delta, diam = spec["delta"], spec["diam"]
        _need(delta >= 3 and diam >= 2, "perfect_tree needs delta >= 3 and diam >= 2")
        if diam % 2 == 0:
            roots = [b.add("center")]
            depth = diam // 2
            frontier = [(roots[0], delta)]
        else:
            roots = [b.add("center:0"), b.add("center:1")]
            b.join(*roots)
            depth = (diam - 1) // 2
            frontier = [(r, delta - 1) for r in roots]
        for level in range(1, depth + 1):
            tag = "leaf" if level == depth else "internal"
            nxt = []
            for parent, children in frontier:
                for _ in range(children):
                    v = b.add(f"{tag}:{level}")
                    b.join(parent, v)
                    nxt.append((v, delta - 1))
            frontier = nxt
    elif name == "corona_path":
        r = spec["r"]
        _need(r >= 2, "corona_path needs r >= 2")
        inner = generate(spec.inner)
        _need(inner.n >= 1, "corona_path needs an inner graph of order >= 1")
        spine = [b.add(f"spine:{i}") for i in range(r)]
        for i in range(1, r):
            b.join(spine[i - 1], spine[i])
        for i, s in enumerate(spine):
            copy = [b.add(f"copy:{i}:{j}") for j in range(inner.n)]
            for j in range(inner.n):
                b.join(s, copy[j])
            for u, v in inner.edges():
                b.join(copy[u], copy[v])
    elif name in ("strong_path_path2", "strong_path_complete"):
        r = spec["r"]
        s = 2 if name == "strong_path_path2" else spec["s"]
        _need(r >= 2 and s >= 2, f"{name} needs r >= 2 and s >= 2")
        for i in range(r):
            for j in range(s):
                b.add(f"cell:{i}:{j}")
        idx = lambda i, j: i * s + j  # noqa: E731
        for i in range(r):
            for j in range(s):
                for jj in range(j + 1, s):
                    b.join(idx(i, j), idx(i, jj))
                if i + 1 < r:
                    for jj in range(s):
                        b.join(idx(i, j), idx(i + 1, jj))
    elif name == "sun":
        t, r = spec["t"], spec["r"]
        _need(t >= 3 and r >= 2, "sun needs t >= 3 and r >= 2")
        clique = [b.add(f"clique:{i}") for i in range(t)]
        for i in range(t):
            for j in range(i):
                b.join(clique[j], clique[i])
        for i in range(t):
            prev = clique[i]
            for j in range(r):
                v = b.add(f"path:{i}:{j}")
                b.join(prev, v)
                prev = v
    elif name == "petersen":
        for i in range(5):
            b.add(f"outer:{i}")
        for i in range(5):
            b.add(f"inner:{i}")
        for i in range(5):
            b.join(i, (i + 1) % 5)
            b.join(i, i + 5)
            b.join(5 + i, 5 + (i + 2) % 5)
    elif name == "heawood":
        n = len(HEAWOOD_LCF)
        for i in range(n):
            b.add(f"cycle:{i}")
        for i in range(n):
            b.join(i, (i + 1) % n)
            b.join(i, (i + HEAWOOD_LCF[i]) % n)
    else:  # pragma: no cover - guarded by normalize_name
        raise ParameterError(f"unknown family {name!r}")

    # duplicate edges (LCF chords are listed from both ends) collapse here
    return b.build()


def generate(spec: FamilySpec) -> Graph:
    return generate_annotated(spec)[0]


def expected_mu(spec: FamilySpec, k: int) -> int | None:
    """Closed-form k-distance MV number of the family, or ``None``.

    ``k = 1`` always evaluates to the clique number. Values are only
    returned for ``1 <= k <= diameter``.
    """
    g = generate(spec)
    diam = all_pairs(g).diameter
    if not 1 <= k <= diam:
        return None
    if k == 1:
        return clique_number(g)

    name = spec.name
    p = spec.params
    if name == "path":
        return 2
    if name == "cycle":
        return 3 if p["n"] <= 3 * k else 2
    if name == "star":
        return p["n"]
    if name == "bistar":
        return p["m"] + 1 if k == 2 else p["n"] + p["m"]
    if name == "caterpillar_uniform":
        q = p["q"]
        return k * (q - 2) - q + 4
    if name == "perfect_tree":
        delta = p["delta"]
        if k % 2 == 0:
            return delta * (delta - 1) ** ((k - 2) // 2)
        return 2 * (delta - 1) ** ((k - 1) // 2)
    if name == "corona_path":
        r = p["r"]
        n = generate(spec.inner).n
        if r == 2:
            return n + 1 if k == 2 else 2 * n
        if n < 2:
            return None
        if k <= r - 1:
            return (k - 1) * n + 2
        if k == r:
            return (r - 1) * n + 1
        return r * n
    if name == "strong_path_path2":
        return k + 3
    if name == "strong_path_complete":
        return (k + 1) * (p["s"] - 1) + 2
    if name == "sun":
        return p["t"]
    if name == "petersen":
        return 6
    if name == "heawood":
        # tight case of the girth-6 upper bound on the 2-distance number
        return 7 if k == 2 else None
    return None


def mu_k_tree(t: Graph, k: int, dm: DistanceMatrix | None = None) -> int:
    """Exact k-distance MV number of a tree in polynomial time.

    A maximum set is the leaf set of a subtree of diameter at most ``k``, and
    leaf counts only grow when a subtree is enlarged, so it suffices to scan
    the maximal such subtrees: radius-``k/2`` balls around vertices (even
    ``k``) or radius-``(k-1)/2`` balls around edges (odd ``k``).
    """
    if not t.is_tree():
        raise ShapeError("mu_k_tree needs a tree")
    if k < 2:
        raise ParameterError("mu_k_tree needs k >= 2")
    if t.n <= 2:
        return t.n
    dm = dm if dm is not None else all_pairs(t)
    k = min(k, dm.diameter)
    dist = dm.dist

    def leaf_count(ball: set[int]) -> int:
        return sum(1 for v in ball if len(t.adj[v] & ball) <= 1)

    best = 0
    if k % 2 == 0:
        radius = k // 2
        for c in range(t.n):
            best = max(best, leaf_count({w for w in range(t.n) if dist[c][w] <= radius}))
    else:
        radius = (k - 1) // 2
        for a, b in t.edges():
            best = max(best, leaf_count(
                {w for w in range(t.n) if min(dist[a][w], dist[b][w]) <= radius}))
    return max(best, 2)
