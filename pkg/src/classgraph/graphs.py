"""The class-size graph Gamma_G(N), its prime dual, and the structural
subgroups attached to them (class products, <BB^-1>, S, T, M, K)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterable

import numpy as np

from .core import (
    GClass,
    center,
    centralizer,
    class_ids,
    commutator_subgroup,
    conjugacy_classes,
    conjugacy_classes_in,
    is_prime_power,
    primes_of,
)
from .errors import GraphEmptyOrDisconnected, NotDisconnected
from .group import FiniteGroup, Subgroup

INF = -1  # distance marker for different components


@dataclass
class Check:
    """Outcome of one verified statement; ``witness`` is JSON-ready."""

    name: str
    passed: bool
    applicable: bool = True
    witness: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        status = "pass" if self.passed and self.applicable else "vacuous" if self.passed else "fail"
        return {"check": self.name, "status": status, "witness": self.witness}


def _components(adj: np.ndarray) -> list[list[int]]:
    n = adj.shape[0]
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            u = stack.pop()
            for v in np.flatnonzero(adj[u]).tolist():
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def _all_pairs_bfs(adj: np.ndarray) -> np.ndarray:
    n = adj.shape[0]
    dist = np.full((n, n), INF, dtype=np.int64)
    nbrs = [np.flatnonzero(adj[u]).tolist() for u in range(n)]
    for s in range(n):
        dist[s, s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for v in nbrs[u]:
                    if dist[s, v] == INF:
                        dist[s, v] = d
                        nxt.append(v)
            frontier = nxt
    return dist


@dataclass(frozen=True)
class GraphMetrics:
    n_components: int
    diameters: list[int]
    complete: list[bool]


class _Graph:
    adjacency: np.ndarray

    def _analyse(self) -> None:
        adj = self.adjacency
        self.components = _components(adj)
        self.distances = _all_pairs_bfs(adj)
        self.diameters = [
            int(self.distances[np.ix_(c, c)].max()) if c else 0 for c in self.components
        ]
        self.complete = [
            bool(all(adj[u, v] for u in c for v in c if u != v)) for c in self.components
        ]

    @property
    def n_vertices(self) -> int:
        return int(self.adjacency.shape[0])

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def is_connected(self) -> bool:
        return self.n_components == 1

    @property
    def diameter(self) -> int | None:
        """Diameter when connected, otherwise ``None``."""
        return self.diameters[0] if self.n_components == 1 else None

    def distance(self, u: int, v: int) -> float:
        d = int(self.distances[u, v])
        return math.inf if d == INF else d

    def component_index(self, u: int) -> int:
        for k, c in enumerate(self.components):
            if u in c:
                return k
        raise IndexError(u)

    def edges(self) -> list[tuple[int, int]]:
        n = self.n_vertices
        return [(u, v) for u in range(n) for v in range(u + 1, n) if self.adjacency[u, v]]

    def metrics(self) -> GraphMetrics:
        return graph_metrics(self)


def graph_metrics(graph: _Graph) -> GraphMetrics:
    return GraphMetrics(graph.n_components, list(graph.diameters), list(graph.complete))


class ClassGraph(_Graph):
    """Gamma_G(N): non-central classes of Con_G(N), joined when sizes share a prime."""

    def __init__(self, group: FiniteGroup, normal: Subgroup, classes: list[GClass], adjacency: np.ndarray | None = None):
        self.group = group
        self.normal = normal
        self.classes = classes
        self.vertices = sorted((c for c in classes if c.size > 1), key=lambda c: (c.size, c.representative))
        if adjacency is None:
            n = len(self.vertices)
            sizes = [c.size for c in self.vertices]
            adjacency = np.zeros((n, n), dtype=bool)
            for i in range(n):
                for j in range(i + 1, n):
                    adjacency[i, j] = adjacency[j, i] = math.gcd(sizes[i], sizes[j]) > 1
        self.adjacency = adjacency
        self._analyse()

    def with_adjacency(self, adjacency: np.ndarray) -> "ClassGraph":
        """Same vertices, different edges (used to inject faults in tests)."""
        return ClassGraph(self.group, self.normal, self.classes, np.array(adjacency, dtype=bool))

    @property
    def sizes(self) -> list[int]:
        return [c.size for c in self.vertices]

    def index_of(self, cls: GClass) -> int:
        return self.vertices.index(cls)

    def maximal_vertices(self) -> list[int]:
        top = max(self.sizes)
        return [i for i, s in enumerate(self.sizes) if s == top]

    def b0(self) -> int:
        """Maximal-size vertex with the least representative."""
        return min(self.maximal_vertices(), key=lambda i: self.vertices[i].representative)

    def eccentricity(self, u: int) -> float:
        row = self.distances[u]
        return math.inf if (row == INF).any() else int(row.max())

    def component_split(self) -> tuple[list[int], list[int]]:
        """(X1, X2) as vertex lists, X2 holding the classes of maximal size."""
        if self.n_components != 2:
            raise NotDisconnected(f"graph has {self.n_components} components, not 2")
        b0 = self.b0()
        c0, c1 = self.components
        return (c1, c0) if b0 in c0 else (c0, c1)

    def to_json(self) -> dict[str, Any]:
        G = self.group
        return {
            "vertices": [
                {"size": c.size, "representative": int(c.representative), "rep": G.element_name(c.representative)}
                for c in self.vertices
            ],
            "edges": [list(e) for e in self.edges()],
            "components": [list(c) for c in self.components],
            "diameters": list(self.diameters),
            "complete": list(self.complete),
        }

    def to_dot(self) -> str:
        G = self.group
        lines = ["graph class_graph {"]
        for i, c in enumerate(self.vertices):
            lines.append(f'  v{i} [label="size={c.size} rep={G.element_name(c.representative)}"];')
        for u, v in self.edges():
            lines.append(f"  v{u} -- v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class PrimeGraph(_Graph):
    """Gamma*_G(N): primes dividing class sizes, p~q when pq divides one size."""

    def __init__(self, class_sizes: Iterable[int]):
        sizes = sorted(set(int(s) for s in class_sizes))
        self.class_sizes = sizes
        self.vertices = sorted(set().union(*(primes_of(s) for s in sizes)) if sizes else set())
        n = len(self.vertices)
        adj = np.zeros((n, n), dtype=bool)
        for i, p in enumerate(self.vertices):
            for j in range(i + 1, n):
                q = self.vertices[j]
                adj[i, j] = adj[j, i] = any(s % (p * q) == 0 for s in sizes)
        self.adjacency = adj
        self._analyse()

    def to_json(self) -> dict[str, Any]:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges()],
            "components": [list(c) for c in self.components],
            "diameters": list(self.diameters),
            "complete": list(self.complete),
        }

    def to_dot(self) -> str:
        lines = ["graph prime_graph {"]
        for i, p in enumerate(self.vertices):
            lines.append(f'  p{i} [label="{p}"];')
        for u, v in self.edges():
            lines.append(f"  p{u} -- p{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_class_graph(G: FiniteGroup, N: Subgroup) -> ClassGraph:
    return ClassGraph(G, N, conjugacy_classes_in(G, N))


def build_prime_graph(G: FiniteGroup, N: Subgroup) -> PrimeGraph:
    return PrimeGraph(c.size for c in conjugacy_classes_in(G, N))


# -- class products ---------------------------------------------------------


@dataclass(frozen=True)
class ClassProduct:
    elements: frozenset[int]
    single_class: bool
    product_class: GClass | None
    commutes: bool


def set_product(G: FiniteGroup, A: Iterable[int], B: Iterable[int]) -> np.ndarray:
    a = np.fromiter(A, dtype=np.int64)
    b = np.fromiter(B, dtype=np.int64)
    return np.unique(G.table[a[:, None], b[None, :]])


def class_product(G: FiniteGroup, B: GClass, C: GClass) -> ClassProduct:
    """BC = {bc}, whether it is one G-class, and whether BC = CB."""
    bc = set_product(G, B.sorted, C.sorted)
    cb = set_product(G, C.sorted, B.sorted)
    ids = class_ids(G)[bc]
    single = bool((ids == ids[0]).all()) and bc.size == conjugacy_classes(G)[ids[0]].size
    cls = conjugacy_classes(G)[ids[0]] if single else None
    return ClassProduct(frozenset(bc.tolist()), single, cls, bool(np.array_equal(bc, cb)))


def generated_by_quotients(G: FiniteGroup, B: GClass) -> Subgroup:
    """<BB^-1>, generated by b b0^-1 for b in B (a fixed b0 suffices)."""
    b = B.sorted
    return G.generate(G.table[b, G.inverse[b[0]]])


def _left_quotients(G: FiniteGroup, D: GClass) -> np.ndarray:
    """d0^-1 d for d in D; these generate <D^-1 D>."""
    d = D.sorted
    return G.table[G.inverse[d[0]], d]


def _pi(n: int) -> list[int]:
    return sorted(primes_of(n))


def _class_witness(c: GClass) -> dict[str, int]:
    return {"size": c.size, "representative": int(c.representative)}


# -- two components: S and T -------------------------------------------------------


@dataclass
class SplitSubgroups:
    S: Subgroup
    T: Subgroup
    B0: GClass
    X1: list[GClass]
    X2: list[GClass]
    checks: list[Check]


def split_subgroups(G: FiniteGroup, N: Subgroup, graph: ClassGraph, b0: int | None = None) -> SplitSubgroups:
    if graph.n_components != 2:
        raise NotDisconnected(f"Gamma_G(N) has {graph.n_components} components")
    b0 = graph.b0() if b0 is None else b0
    comp = graph.component_index(b0)
    x2_idx = graph.components[comp]
    x1_idx = graph.components[1 - comp]
    X1 = [graph.vertices[i] for i in x1_idx]
    X2 = [graph.vertices[i] for i in x2_idx]
    B0 = graph.vertices[b0]
    pi_b0 = set(B0.prime_support)

    S = G.generate(np.concatenate([c.sorted for c in X1]))
    T = G.generate(np.concatenate([G.table[c.sorted, G.inverse[c.representative]] for c in X1]))
    ZN = center(G).intersection(N)
    ids = class_ids(G)
    classes = conjugacy_classes(G)
    x1_sets = {c.elements for c in X1}
    checks = []

    # (1) S normal; its elements are central or have class in X1
    bad = [int(s) for s in S.sorted if classes[ids[s]].size > 1 and classes[ids[s]].elements not in x1_sets]
    checks.append(Check("split_S_normal_and_small", S.is_normal and not bad,
                        witness={"S_order": S.order, "S_normal": S.is_normal, "offending_elements": bad[:5]}))

    # (2) |T| divides every class of N outside S
    outside = [c for c in graph.classes if not c.elements <= S.elements]
    bad2 = [_class_witness(c) for c in outside if c.size % T.order]
    checks.append(Check("split_T_divides_outside", not bad2, witness={"T_order": T.order, "offending_classes": bad2[:5]}))

    # (3) T = [S, G], normal, central in S
    comm = commutator_subgroup(S, G)
    t_central = bool(all((G.table[T.sorted, s] == G.table[s, T.sorted]).all() for s in S.generators))
    checks.append(Check("split_T_commutator_central", comm == T and T.is_normal and t_central,
                        witness={"T_order": T.order, "commutator_order": comm.order, "T_central_in_S": t_central}))

    # (4) Z(G) cap N <= S; pi(S/(Z(G) cap N)) <= pi(T) <= pi(B0); S abelian
    zn_in_s = ZN.elements <= S.elements
    pi_quot = set(primes_of(S.order // S.intersection(ZN).order))
    pi_t = set(primes_of(T.order))
    ok4 = zn_in_s and pi_quot <= pi_t <= pi_b0 and S.is_abelian()
    checks.append(Check("split_S_abelian_primes", ok4, witness={
        "ZN_in_S": zn_in_s, "pi_S_mod_ZN": sorted(pi_quot), "pi_T": sorted(pi_t),
        "pi_B0": sorted(pi_b0), "S_abelian": S.is_abelian()}))

    # (5) C_G(b)/S is a q-group, q in pi(B0). The witness also records the
    # same test for C_N(b)/S and C_G(b)/SZ(G), which is where a failure of
    # the G-version usually comes from.
    def q_index(index: int) -> bool:
        return index == 1 or (is_prime_power(index) and primes_of(index) <= pi_b0)

    SZ = S.join(center(G))
    bad5 = []
    within_n = modulo_center = True
    for c in X1:
        C = centralizer(G, c.representative)
        CN = C.intersection(N)
        within_n &= q_index(CN.order // S.order)
        modulo_center &= q_index(C.order // SZ.order)
        if not (S.elements <= C.elements and q_index(C.order // S.order)):
            bad5.append({**_class_witness(c), "centralizer_order": C.order, "S_order": S.order,
                         "centralizer_in_N_order": CN.order, "SZ_order": SZ.order})
    checks.append(Check("split_centralizer_quotient", not bad5, witness={
        "offending_classes": bad5[:5], "pi_B0": sorted(pi_b0),
        "holds_for_C_N": within_n, "holds_modulo_Z_G": modulo_center}))
    return SplitSubgroups(S, T, B0, X1, X2, checks)


# -- connected: M and K from the classes far from B0 -----------------------------------


@dataclass
class FarSubgroups:
    M: Subgroup
    K: Subgroup
    B0: GClass
    far: list[GClass]
    checks: list[Check]


def far_subgroups(G: FiniteGroup, N: Subgroup, graph: ClassGraph, b0: int | None = None) -> FarSubgroups:
    if graph.n_vertices == 0 or graph.n_components != 1:
        raise GraphEmptyOrDisconnected("M and K need a connected, nonempty class graph")
    b0 = graph.b0() if b0 is None else b0
    B0 = graph.vertices[b0]
    pi_b0 = set(B0.prime_support)
    far = [graph.vertices[i] for i in range(graph.n_vertices) if graph.distances[b0, i] >= 2]
    if far:
        M = G.generate(np.concatenate([c.sorted for c in far]))
        K = G.generate(np.concatenate([_left_quotients(G, c) for c in far]))
    else:
        M = K = G.trivial()
    comm = commutator_subgroup(M, G)
    k_central = bool(all((G.table[K.sorted, m] == G.table[m, K.sorted]).all() for m in M.generators))
    checks = [Check(
        "far_M_K_commutator_central",
        M.is_normal and K.is_normal and comm == K and k_central,
        applicable=bool(far),
        witness={"M_order": M.order, "K_order": K.order, "commutator_order": comm.order,
                 "K_central_in_M": k_central, "B0": _class_witness(B0)},
    )]
    ZN = center(G).intersection(N)
    zn_in_m = ZN.elements <= M.elements
    pi_quot = set(primes_of(M.order // M.intersection(ZN).order))
    pi_k = set(primes_of(K.order))
    ok2 = (zn_in_m and pi_quot <= pi_k <= pi_b0 and M.is_abelian()) if far else True
    checks.append(Check("far_M_abelian_primes", ok2, applicable=bool(far), witness={
        "ZN_in_M": zn_in_m, "pi_M_mod_ZN": sorted(pi_quot), "pi_K": sorted(pi_k),
        "pi_B0": sorted(pi_b0), "M_abelian": M.is_abelian(), "B0": _class_witness(B0)}))
    return FarSubgroups(M, K, B0, far, checks)
