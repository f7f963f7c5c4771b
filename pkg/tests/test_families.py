import random
from itertools import combinations, product

import pytest

from conftest import random_tree
from kvis.errors import ParameterError, ShapeError
from kvis.families import FamilySpec, expected_mu, generate, generate_annotated, mu_k_tree
from kvis.graph import all_pairs
from kvis.solver import mu_k_bruteforce, mu_k_exact


def spec(name, inner=None, **params):
    return FamilySpec.of(name, inner=inner, **params)


def metrics(s):
    g = generate(s)
    dm = all_pairs(g)
    return g, dm


def strong_product_edges(r, s_edges, s_n):
    """Edge count of P_r x H under the strong-product rule, by direct pair scan."""
    path = {(i, i + 1) for i in range(r - 1)}
    adj_p = lambda a, b: a == b or (min(a, b), max(a, b)) in path
    adj_h = lambda a, b: a == b or (min(a, b), max(a, b)) in s_edges
    verts = list(product(range(r), range(s_n)))
    return sum(1 for x, y in combinations(verts, 2) if adj_p(x[0], y[0]) and adj_h(x[1], y[1]))


class TestGenerators:
    def test_strong_path_path2_edges(self):
        g, dm = metrics(spec("strong_path_path2", r=4))
        assert g.n == 8
        assert g.m == strong_product_edges(4, {(0, 1)}, 2) == 16
        assert dm.diameter == 3

    @pytest.mark.parametrize("r,s", [(3, 2), (4, 3), (5, 3)])
    def test_strong_path_complete(self, r, s):
        g, dm = metrics(spec("strong_path_complete", r=r, s=s))
        assert g.n == r * s
        assert g.m == strong_product_edges(r, set(combinations(range(s), 2)), s)
        assert dm.diameter == r - 1

    def test_sun(self):
        g, dm = metrics(spec("sun", t=3, r=2))
        assert g.n == 9
        assert dm.diameter == 5

    def test_petersen(self):
        g, dm = metrics(spec("petersen"))
        assert (g.n, g.m, dm.girth, dm.min_degree, dm.max_degree) == (10, 15, 5, 3, 3)

    def test_heawood(self):
        g, dm = metrics(spec("heawood"))
        assert (g.n, g.m, dm.girth, dm.diameter, dm.min_degree, dm.max_degree) == (14, 21, 6, 3, 3, 3)

    @pytest.mark.parametrize("n,m", [(1, 1), (2, 3), (3, 3)])
    def test_bistar(self, n, m):
        g, dm = metrics(spec("bistar", n=n, m=m))
        assert g.n == n + m + 2 and dm.diameter == 3 and g.is_tree()

    @pytest.mark.parametrize("r,q", [(3, 3), (4, 3), (3, 4)])
    def test_caterpillar(self, r, q):
        g, dm = metrics(spec("caterpillar_uniform", r=r, q=q))
        assert g.is_tree()
        spine = [v for v in range(g.n) if g.degree(v) > 1]
        assert len(spine) == r
        assert all(g.degree(v) == q for v in spine)
        assert dm.diameter == r + 1

    @pytest.mark.parametrize("delta,diam", [(3, 2), (3, 4), (3, 5), (4, 3)])
    def test_perfect_tree(self, delta, diam):
        g, dm = metrics(spec("perfect_tree", delta=delta, diam=diam))
        assert g.is_tree() and dm.diameter == diam
        assert {g.degree(v) for v in range(g.n)} == {1, delta}
        leaves = [v for v in range(g.n) if g.degree(v) == 1]
        assert all(any(dm.dist[a][b] == diam for b in leaves) for a in leaves)

    @pytest.mark.parametrize("r,inner", [(2, 2), (3, 2), (4, 2), (3, 3), (3, 1)])
    def test_corona(self, r, inner):
        g, dm = metrics(spec("corona_path", inner=spec("complete", n=inner), r=r))
        assert g.n == r * (inner + 1)
        assert g.m == (r - 1) + r * (inner * (inner - 1) // 2 + inner)
        assert dm.diameter == r + 1

    def test_roles(self):
        g, roles = generate_annotated(spec("star", n=3))
        assert len(roles) == g.n == 4
        assert generate_annotated(spec("star", n=3))[1] == roles

    def test_name_normalisation(self):
        assert spec("corona-path", inner=spec("complete", n=2), r=3).name == "corona_path"

    @pytest.mark.parametrize("name,params", [
        ("cycle", {"n": 2}), ("bistar", {"n": 3, "m": 2}), ("caterpillar_uniform", {"r": 2, "q": 3}),
        ("perfect_tree", {"delta": 2, "diam": 3}), ("sun", {"t": 2, "r": 2}),
        ("strong_path_complete", {"r": 3, "s": 1}), ("path", {}), ("petersen", {"n": 3}),
    ])
    def test_bad_params(self, name, params):
        with pytest.raises(ParameterError):
            generate(spec(name, **params))

    def test_unknown_family(self):
        with pytest.raises(ParameterError):
            generate(spec("wheel", n=5))

    def test_corona_needs_inner(self):
        with pytest.raises(ParameterError):
            generate(spec("corona_path", r=3))


class TestExpectedMu:
    def test_bistar(self):
        s = spec("bistar", n=2, m=3)
        assert [expected_mu(s, k) for k in (1, 2, 3)] == [2, 4, 5]

    def test_corona(self):
        s = spec("corona_path", inner=spec("complete", n=2), r=4)
        assert [expected_mu(s, k) for k in (2, 3, 4, 5)] == [4, 6, 7, 8]

    def test_perfect_tree(self):
        s = spec("perfect_tree", delta=3, diam=4)
        assert [expected_mu(s, k) for k in (2, 3)] == [3, 4]

    def test_out_of_range(self):
        assert expected_mu(spec("path", n=4), 4) is None
        assert expected_mu(spec("petersen"), 1) == 2
        assert expected_mu(spec("heawood"), 3) is None

    @pytest.mark.parametrize("s", [
        spec("path", n=6), spec("cycle", n=8), spec("star", n=5), spec("bistar", n=3, m=3),
        spec("caterpillar_uniform", r=4, q=3), spec("perfect_tree", delta=3, diam=5),
        spec("corona_path", inner=spec("complete", n=3), r=3),
        spec("corona_path", inner=spec("complete", n=2), r=2),
        spec("strong_path_path2", r=4), spec("strong_path_complete", r=4, s=3),
        spec("sun", t=4, r=2), spec("petersen"), spec("heawood"),
    ], ids=lambda s: s.describe())
    def test_formula_agrees_with_solver(self, s):
        g, dm = metrics(s)
        for k in range(1, dm.diameter + 1):
            exp = expected_mu(s, k)
            if exp is not None:
                assert mu_k_exact(g, k, dm).mu == exp, k


class TestTreeAlgorithm:
    def test_caterpillar(self):
        assert mu_k_tree(generate(spec("caterpillar_uniform", r=4, q=3)), 3) == 4

    def test_star(self):
        assert mu_k_tree(generate(spec("star", n=5)), 2) == 5

    def test_not_a_tree(self):
        with pytest.raises(ShapeError):
            mu_k_tree(generate(spec("cycle", n=5)), 2)

    def test_k_too_small(self):
        with pytest.raises(ParameterError):
            mu_k_tree(generate(spec("path", n=4)), 1)

    def test_tiny(self):
        assert mu_k_tree(generate(spec("path", n=1)), 2) == 1
        assert mu_k_tree(generate(spec("path", n=2)), 5) == 2

    @pytest.mark.parametrize("seed", range(30))
    def test_random_against_bruteforce(self, seed):
        rng = random.Random(1000 + seed)
        t = random_tree(rng, rng.randint(2, 11))
        dm = all_pairs(t)
        for k in range(2, dm.diameter + 2):
            assert mu_k_tree(t, k, dm) == mu_k_bruteforce(t, k, dm).mu
