import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce as bf
from classgraph.constructions import (
    cyclic,
    dihedral,
    direct_product,
    extraspecial_times_s3,
    fp324,
    sl25_frobenius_example,
    symmetric,
)
from classgraph.core import center, conjugacy_classes_in, normal_subgroups
from classgraph.errors import GraphEmptyOrDisconnected, NotDisconnected
from classgraph.graphs import (
    INF,
    PrimeGraph,
    build_class_graph,
    build_prime_graph,
    class_product,
    generated_by_quotients,
    graph_metrics,
    split_subgroups,
    far_subgroups,
    set_product,
)
from conftest import brute_elements, brute_gens

S4 = symmetric(4)
A4 = next(N for N in normal_subgroups(S4) if N.order == 12)
V4 = next(N for N in normal_subgroups(S4) if N.order == 4)


@pytest.fixture(scope="module")
def heis_s3():
    return extraspecial_times_s3(3)


@pytest.fixture(scope="module")
def sl25():
    return sl25_frobenius_example()


def floyd(adj: np.ndarray) -> np.ndarray:
    n = len(adj)
    d = np.where(adj, 1.0, math.inf)
    np.fill_diagonal(d, 0)
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


# -- examples -------------------------------------------------------------------------


def test_abelian_or_central_gives_empty_graph():
    C = cyclic(6)
    g = build_class_graph(C, C.whole())
    assert g.n_vertices == 0 and g.n_components == 0 and g.diameter is None
    D = dihedral(4)
    g = build_class_graph(D, center(D))
    assert g.n_vertices == 0 and g.diameters == [] and g.to_json()["vertices"] == []
    assert build_prime_graph(C, C.whole()).n_vertices == 0


def test_s4_a4():
    g = build_class_graph(S4, A4)
    assert g.sizes == [3, 8]
    assert g.n_components == 2 and g.complete == [True, True]
    assert g.diameters == [0, 0]
    assert g.distance(0, 1) == math.inf
    assert g.distances[0, 1] == INF


def test_heis_s3_diameter_two(heis_s3):
    G, N = heis_s3
    g = build_class_graph(G, N)
    assert set(g.sizes) == {2, 3, 6}
    assert g.is_connected and g.diameter == 2
    m = graph_metrics(g)
    assert m.n_components == 1 and m.diameters == [2] and m.complete == [False]


def test_single_vertex():
    S3 = symmetric(3)
    A3 = next(N for N in normal_subgroups(S3) if N.order == 3)
    g = build_class_graph(S3, A3)
    assert g.sizes == [2] and g.n_components == 1 and g.diameter == 0 and g.complete == [True]


def test_prime_graph_example_sizes():
    pg = PrimeGraph([1, 20, 242])
    assert pg.vertices == [2, 5, 11]
    assert pg.edges() == [(0, 1), (0, 2)]
    assert pg.is_connected and pg.diameter == 2
    assert PrimeGraph([]).n_vertices == 0


def test_prime_graph_sl25(sl25):
    pg = build_prime_graph(sl25.group, sl25.N)
    assert pg.vertices == [2, 5, 11] and pg.diameter == 2


def test_class_product_identity():
    cls = conjugacy_classes_in(S4, A4)
    e = next(c for c in cls if c.size == 1)
    for c in cls:
        assert class_product(S4, e, c).elements == c.elements


def test_coprime_class_product_s4():
    cls = conjugacy_classes_in(S4, A4)
    B = next(c for c in cls if c.size == 3)
    C = next(c for c in cls if c.size == 8)
    prod = class_product(S4, B, C)
    assert prod.single_class and 24 % len(prod.elements) == 0
    assert prod.commutes


def test_coprime_class_product_sl25(sl25):
    G, N = sl25.group, sl25.N
    cls = conjugacy_classes_in(G, N)
    B = next(c for c in cls if c.size == 20)
    C = next(c for c in cls if c.size == 242)
    prod = class_product(G, B, C)
    assert prod.single_class and 4840 % len(prod.elements) == 0


def test_generated_by_quotients():
    cls = conjugacy_classes_in(S4, A4)
    e = next(c for c in cls if c.size == 1)
    assert generated_by_quotients(S4, e).order == 1
    three_cycles = next(c for c in cls if c.size == 8)
    assert generated_by_quotients(S4, three_cycles) == A4
    double_transpositions = next(c for c in cls if c.size == 3)
    assert generated_by_quotients(S4, double_transpositions) == V4


def test_split_subgroups_s4():
    g = build_class_graph(S4, A4)
    split = split_subgroups(S4, A4, g)
    assert [c.size for c in split.X1] == [3] and split.B0.size == 8
    assert split.S == V4 and split.T == V4
    assert split.S.is_abelian()
    assert all(c.passed for c in split.checks)


def test_split_subgroups_324():
    G, subs = fp324()
    N = subs["N"]
    g = build_class_graph(G, N)
    split = split_subgroups(G, N, g)
    assert {c.size for c in split.X1} == {2}
    assert split.S.is_abelian()
    assert center(G).intersection(N).elements <= split.S.elements
    by_name = {c.name: c for c in split.checks}
    for name in ("split_S_normal_and_small", "split_T_divides_outside", "split_T_commutator_central",
                 "split_S_abelian_primes"):
        assert by_name[name].passed


def test_split_requires_two_components(heis_s3):
    G, N = heis_s3
    with pytest.raises(NotDisconnected):
        split_subgroups(G, N, build_class_graph(G, N))


def test_far_subgroups_vacuous_at_diameter_one(sl25):
    G, N = sl25.group, sl25.N
    g = build_class_graph(G, N)
    assert g.diameter == 1
    far = far_subgroups(G, N, g)
    assert far.far == [] and far.M.order == 1 and far.K.order == 1
    assert all(c.passed and not c.applicable for c in far.checks)
    assert {c.as_dict()["status"] for c in far.checks} == {"vacuous"}


def test_far_subgroups_heis(heis_s3):
    # B0 has size 6 and meets both 2 and 3, so nothing is far from it
    G, N = heis_s3
    g = build_class_graph(G, N)
    assert g.eccentricity(g.b0()) == 1
    far = far_subgroups(G, N, g)
    assert far.far == [] and far.M.order == 1
    assert all(c.passed and not c.applicable for c in far.checks)


def test_far_subgroups_s4():
    g = build_class_graph(S4, S4.whole())
    assert g.sizes == [3, 6, 6, 8]
    far = far_subgroups(S4, S4.whole(), g)
    assert far.B0.size == 8
    assert [c.size for c in far.far] == [3]
    assert all(g.distance(g.b0(), g.index_of(c)) == 2 for c in far.far)
    assert far.M == V4 and far.K == V4 and far.M.is_abelian()
    assert all(c.passed and c.applicable for c in far.checks)


def test_far_subgroups_errors():
    with pytest.raises(GraphEmptyOrDisconnected):
        far_subgroups(S4, A4, build_class_graph(S4, A4))
    C = cyclic(4)
    with pytest.raises(GraphEmptyOrDisconnected):
        far_subgroups(C, C.whole(), build_class_graph(C, C.whole()))


def test_b0_tie_break():
    G = symmetric(3)
    g = build_class_graph(G, G.whole())
    assert g.sizes == [2, 3] and g.b0() == 1
    D = dihedral(5)  # two classes of rotations of size 2, one of reflections of size 5
    g = build_class_graph(D, D.whole())
    assert g.sizes == [2, 2, 5] and g.maximal_vertices() == [2]
    G2 = direct_product(symmetric(3), cyclic(2))
    g = build_class_graph(G2, G2.whole())
    top = g.maximal_vertices()
    assert len(top) == 2
    assert g.vertices[g.b0()].representative == min(g.vertices[i].representative for i in top)


def test_json_and_dot(heis_s3):
    G, N = heis_s3
    g = build_class_graph(G, N)
    js = g.to_json()
    assert set(js) == {"vertices", "edges", "components", "diameters", "complete"}
    assert js["diameters"] == [2]
    dot = g.to_dot()
    assert dot.startswith("graph class_graph {") and "size=6 rep=(" in dot
    assert dot.count(" -- ") == len(js["edges"])
    pdot = build_prime_graph(G, N).to_dot()
    assert 'label="2"' in pdot and 'label="3"' in pdot


# -- oracle and invariants --------------------------------------------------------------

SMALL = [symmetric(3), symmetric(4), dihedral(4), dihedral(6), direct_product(symmetric(3), symmetric(3)),
         direct_product(symmetric(3), cyclic(2))]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_class_graph_matches_oracle(G, data):
    N = data.draw(st.sampled_from(normal_subgroups(G)))
    idx = brute_elements(G)
    E = bf.elements(brute_gens(G), G.degree)
    Nb = frozenset(p for p, x in idx.items() if x in N)
    sizes, edges = bf.class_graph(E, Nb)
    g = build_class_graph(G, N)
    assert g.sizes == sizes
    assert set(g.edges()) == edges
    assert g.n_components == bf.n_components(len(sizes), edges)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_graph_invariants(G, data):
    N = data.draw(st.sampled_from(normal_subgroups(G)))
    g = build_class_graph(G, N)
    classes = conjugacy_classes_in(G, N)
    assert len(g.vertices) == sum(1 for c in classes if c.size > 1)
    for i, j in combinations(range(g.n_vertices), 2):
        shared = bool(g.vertices[i].prime_support & g.vertices[j].prime_support)
        assert g.adjacency[i, j] == shared == (math.gcd(g.sizes[i], g.sizes[j]) > 1)
    assert sorted(v for comp in g.components for v in comp) == list(range(g.n_vertices))
    d = floyd(g.adjacency)
    for comp, diam in zip(g.components, g.diameters):
        assert diam == int(max(d[u, v] for u in comp for v in comp))
    pg = build_prime_graph(G, N)
    assert set(pg.vertices) == set().union(*(c.prime_support for c in classes))
    for i, j in combinations(range(pg.n_vertices), 2):
        p, q = pg.vertices[i], pg.vertices[j]
        assert pg.adjacency[i, j] == any(c.size % (p * q) == 0 for c in classes)


@given(st.lists(st.integers(1, 400), max_size=12))
def test_prime_graph_definition(sizes):
    pg = PrimeGraph(sizes)
    primes = sorted({p for s in sizes for p in range(2, s + 1) if s % p == 0 and all(p % r for r in range(2, p))})
    assert pg.vertices == primes
    d = floyd(pg.adjacency)
    for comp, diam in zip(pg.components, pg.diameters):
        assert diam == int(max(d[u, v] for u in comp for v in comp))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_set_product_matches_definition(G, data):
    N = data.draw(st.sampled_from(normal_subgroups(G)))
    classes = conjugacy_classes_in(G, N)
    B = data.draw(st.sampled_from(classes))
    C = data.draw(st.sampled_from(classes))
    naive = sorted({G.mul(b, c) for b in B.elements for c in C.elements})
    assert set_product(G, B.elements, C.elements).tolist() == naive
    assert class_product(G, B, C).commutes  # BC = CB for normal subsets
