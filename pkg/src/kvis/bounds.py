"""General bounds on the k-distance MV number and checks against exact values.

Girth is ``None`` for forests and is read as infinite everywhere below.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import isqrt

from .errors import BoundNotApplicable, InvariantViolation, SizeLimitError
from .graph import DistanceMatrix, Graph, all_pairs, clique_number
from .solver import ENUMERATE_LIMIT, enumerate_maximum_sets, mu_k_bruteforce, mu_k_exact

ISOMETRIC_LIMIT = 12


def bound_cota2(max_degree: int) -> int:
    """Upper bound on the 2-distance number when girth >= 6."""
    if max_degree < 3:
        raise BoundNotApplicable(f"needs maximum degree >= 3 (got {max_degree})")
    return 1 + max_degree * (max_degree - 1)


def bound_gen(max_degree: int, min_degree: int, girth: int | None) -> tuple[int, int]:
    """``(threshold_k, value)``: mu_k >= value for every k >= threshold_k."""
    if girth is None:
        raise BoundNotApplicable("graph is acyclic")
    if min_degree < 2:
        raise BoundNotApplicable(f"needs minimum degree >= 2 (got {min_degree})")
    if girth < 4:
        raise BoundNotApplicable(f"needs girth >= 4 (got {girth})")
    t = (girth - 1) // 3
    return 1 + 2 * t, (max_degree + min_degree - 2) * (min_degree - 1) ** (t - 1)


def bound_oddg(max_degree: int, girth: int | None) -> int:
    """Upper bound on (g-1)/2-distance MV sets that induce an edge."""
    if girth is None:
        raise BoundNotApplicable("graph is acyclic")
    if girth % 2 == 0 or girth < 5:
        raise BoundNotApplicable(f"needs odd girth >= 5 (got {girth})")
    if max_degree < 2:
        raise BoundNotApplicable(f"needs maximum degree >= 2 (got {max_degree})")
    return 2 + (max_degree - 1) ** ((girth - 1) // 2)


def _ceil_half_sqrt_minus(disc: int, p: int) -> int:
    """Exact ``ceil((sqrt(disc) - p) / 2)`` for integers ``disc >= 0``."""
    c = (isqrt(disc) - p) // 2 - 1
    # smallest c with 2c + p >= sqrt(disc)
    while 2 * c + p < 0 or (2 * c + p) ** 2 < disc:
        c += 1
    return c


def bound_eveng(n: int, girth: int | None) -> int:
    """Upper bound on largest g/2-distance MV sets that induce an edge."""
    if girth is None:
        raise BoundNotApplicable("graph is acyclic")
    if girth % 2 or girth < 6:
        raise BoundNotApplicable(f"needs even girth >= 6 (got {girth})")
    p = (girth - 2) * (girth - 4)
    disc = p * p + (4 * n - 8) * p
    return n - _ceil_half_sqrt_minus(disc, p)


def induces_edge(g: Graph, s) -> bool:
    members = set(s)
    return any(g.adj[v] & members for v in members)


def independence_lemma_holds(g: Graph, s, k: int, girth: int | None) -> bool | None:
    """Whether ``s`` is independent when the lemma's hypotheses hold; ``None`` otherwise."""
    if len(set(s)) < 3:
        return None
    if girth is not None and k >= girth // 2:
        return None
    return not induces_edge(g, s)


def check_chain(g: Graph, dm: DistanceMatrix | None = None, **solver_kwargs) -> list[tuple[int, int]]:
    """``(k, mu_k)`` for k = 1..diameter, checked to be nondecreasing from omega."""
    g.require_connected()
    dm = dm if dm is not None else all_pairs(g)
    chain = [(k, mu_k_exact(g, k, dm, **solver_kwargs).mu) for k in range(1, max(dm.diameter, 1) + 1)]
    omega = clique_number(g)
    if chain[0][1] != omega:
        raise InvariantViolation(f"mu_1 = {chain[0][1]} differs from clique number {omega}")
    for (k0, a), (k1, b) in zip(chain, chain[1:]):
        if b < a:
            raise InvariantViolation(f"chain decreases: mu_{k0} = {a} > mu_{k1} = {b}")
    return chain


def isometric_subgraph_lower_bound(g: Graph, k: int, dm: DistanceMatrix | None = None) -> int:
    """Largest mutual-visibility number over induced isometric subgraphs of diameter k.

    Returns 0 when there is no such subgraph.
    """
    if g.n > ISOMETRIC_LIMIT:
        raise SizeLimitError(f"isometric subgraph search is capped at {ISOMETRIC_LIMIT} vertices")
    dm = dm if dm is not None else all_pairs(g)
    dist = dm.dist
    best = 0
    for size in range(g.n, 1, -1):
        if size <= best:
            break
        for subset in combinations(range(g.n), size):
            if max(dist[a][b] for a, b in combinations(subset, 2)) != k:
                continue
            h = g.induced_subgraph(subset)
            hdm = all_pairs(h)
            if not hdm.connected:
                continue
            if any(hdm.dist[i][j] != dist[a][b]
                   for (i, a), (j, b) in combinations(enumerate(subset), 2)):
                continue
            best = max(best, mu_k_bruteforce(h, k, hdm).mu)
            if best == size:
                break
    return best


@dataclass
class BoundRecord:
    name: str
    direction: str
    applicable: bool
    value: int | None
    conditions: str
    k: str
    reason: str = ""
    status: str = "not checked"
    observed: int | None = None


@dataclass
class BoundReport:
    n: int
    m: int
    diameter: int
    girth: int | None
    min_degree: int
    max_degree: int
    k: int | None
    mu: int | None = None
    records: list[BoundRecord] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def failures(self) -> list[BoundRecord]:
        return [r for r in self.records if r.status == "fail"]

    def format(self) -> str:
        girth = "inf" if self.girth is None else self.girth
        lines = [f"n={self.n} m={self.m} diameter={self.diameter} girth={girth} "
                 f"delta={self.min_degree} Delta={self.max_degree}"]
        if self.k is not None:
            lines.append(f"k={self.k} mu_k={self.mu if self.mu is not None else '?'}")
        for r in self.records:
            if r.applicable:
                value = "-" if r.value is None else r.value
                lines.append(f"{r.name:<10} {r.direction:<8} {value:>6}  [{r.k}] {r.status}"
                             + (f" ({r.reason})" if r.reason else ""))
            else:
                lines.append(f"{r.name:<10} not applicable: {r.reason}")
        return "\n".join(lines)


def _edge_regime_status(g: Graph, dm: DistanceMatrix, k: int, mu: int, witness, bound: int):
    """Status of an upper bound restricted to maximum sets that induce an edge."""
    if g.n <= ENUMERATE_LIMIT:
        sets = enumerate_maximum_sets(g, k, dm)
        if any(induces_edge(g, s) for s in sets):
            return ("pass" if mu <= bound else "fail"), ""
        return "conditionally inapplicable", "every maximum set is independent"
    if induces_edge(g, witness):
        return ("pass" if mu <= bound else "fail"), "checked on the solver witness"
    return "undetermined", "solver witness is independent; other maximum sets not enumerated"


def bound_report(g: Graph, k: int | None = None, dm: DistanceMatrix | None = None,
                 solve: bool = True, **solver_kwargs) -> BoundReport:
    """Evaluate every bound for ``g`` and, when ``k`` is given, check it against mu_k."""
    g.require_connected()
    dm = dm if dm is not None else all_pairs(g)
    gi = dm.girth
    girth_txt = "inf" if gi is None else str(gi)
    report = BoundReport(g.n, g.m, dm.diameter, gi, dm.min_degree, dm.max_degree, k)

    result = None
    if k is not None and solve:
        result = mu_k_exact(g, k, dm, **solver_kwargs)
        report.mu = result.mu
    k_eff = result.k_effective if result is not None else None

    def record(name, direction, conditions, k_txt, fn):
        try:
            value = fn()
        except BoundNotApplicable as exc:
            report.records.append(BoundRecord(name, direction, False, None, conditions, k_txt,
                                              reason=str(exc)))
            return None
        rec = BoundRecord(name, direction, True, value, conditions, k_txt)
        report.records.append(rec)
        return rec

    def needs_girth_6():
        if gi is not None and gi < 6:
            raise BoundNotApplicable(f"needs girth >= 6 (got {gi})")
        return bound_cota2(dm.max_degree)

    rec = record("cota2", "upper", f"girth {girth_txt} >= 6, Delta {dm.max_degree} >= 3",
                 "k=2", needs_girth_6)
    if rec and k_eff == 2:
        rec.observed = result.mu
        rec.status = "pass" if result.mu <= rec.value else "fail"

    gen = None
    try:
        gen = bound_gen(dm.max_degree, dm.min_degree, gi)
    except BoundNotApplicable as exc:
        report.records.append(BoundRecord("gen", "lower", False, None,
                                          "delta >= 2, girth >= 4", "", reason=str(exc)))
    if gen is not None:
        threshold, value = gen
        rec = BoundRecord("gen", "lower", True, value,
                          f"delta {dm.min_degree} >= 2, girth {girth_txt} >= 4",
                          f"k>={threshold}")
        report.records.append(rec)
        if result is not None:
            if k >= threshold:
                rec.observed = result.mu
                rec.status = "pass" if result.mu >= value else "fail"
            else:
                rec.status = "not applicable at this k"

    odd_k = (gi - 1) // 2 if gi is not None else None
    rec = record("oddg", "upper", f"odd girth {girth_txt} >= 5, G[S] has an edge",
                 f"k={odd_k}" if odd_k else "", lambda: bound_oddg(dm.max_degree, gi))
    if rec and result is not None and k_eff == odd_k:
        rec.observed = result.mu
        rec.status, rec.reason = _edge_regime_status(g, dm, k_eff, result.mu, result.witness,
                                                     rec.value)

    even_k = gi // 2 if gi is not None else None
    rec = record("eveng", "upper", f"even girth {girth_txt} >= 6, largest S has an edge",
                 f"k={even_k}" if even_k else "", lambda: bound_eveng(g.n, gi))
    if rec and result is not None and k_eff == even_k:
        rec.observed = result.mu
        rec.status, rec.reason = _edge_regime_status(g, dm, k_eff, result.mu, result.witness,
                                                     rec.value)

    if result is not None:
        holds = independence_lemma_holds(g, result.witness, k_eff, gi)
        report.records.append(BoundRecord(
            "indepe", "property", holds is not None, None,
            "|S| >= 3 and k < floor(girth/2) imply S independent", f"k<{girth_txt}//2",
            reason="" if holds is not None else "hypotheses not met by the witness",
            status={True: "pass", False: "fail", None: "not checked"}[holds]))
        if g.n <= ISOMETRIC_LIMIT:
            lb = isometric_subgraph_lower_bound(g, k_eff, dm)
            report.records.append(BoundRecord(
                "isometric", "lower", True, lb, "isometric subgraphs of diameter k",
                f"k={k_eff}", observed=result.mu,
                status="pass" if lb <= result.mu else "fail"))
    return report
