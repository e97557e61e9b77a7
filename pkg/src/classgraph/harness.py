"""Corpus generation and per-pair verification of the class-graph structure results."""

from __future__ import annotations

import itertools
import json
import math
import signal
import threading
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable

from .constructions import construct, direct_product_parts
from .core import (
    GClass,
    centralizer,
    conjugacy_classes,
    conjugacy_classes_in,
    normal_subgroups,
)
from .errors import CapExceeded, ClassGraphError, InputError, NotNormal
from .fp import DEFAULT_MAX_COSETS, realize_text
from .graphs import (
    INF,
    Check,
    ClassGraph,
    PrimeGraph,
    build_class_graph,
    class_product,
    generated_by_quotients,
    split_subgroups,
    far_subgroups,
    set_product,
)
from .group import FiniteGroup, Subgroup, as_group
from .perm import DEFAULT_ORDER_CAP
from .structure import QuasiFrobenius, StructureReport, classify_disconnected, is_quasi_frobenius_abelian

CHECK_NAMES = (
    "class_graph_definition",
    "prime_graph_definition",
    "at_most_two_components",
    "connected_diameter",
    "components_complete",
    "max_class_eccentricity",
    "small_component_uniform_size",
    "prime_graph_component_count",
    "prime_graph_diameter",
    "prime_graph_components",
    "coprime_centralizer_product",
    "coprime_class_product",
    "distant_class_quotients",
    "split_S_normal_and_small",
    "split_T_divides_outside",
    "split_T_commutator_central",
    "split_S_abelian_primes",
    "split_centralizer_quotient",
    "far_M_K_commutator_central",
    "far_M_abelian_primes",
    "all_maximal_class_choices",
    "disconnected_structure",
    "frobenius_detection",
)


# -- corpus ------------------------------------------------------------------------


@dataclass
class CorpusSpec:
    """What to verify.

    ``families`` entries are ``{"name": family, "params": {key: [values]}}``
    and expand to the cartesian product of the listed values. ``sources`` are
    explicit group sources: ``{"family": name, **params}``,
    ``{"direct": [source, source]}``, ``{"presentation": text}`` or
    ``{"file": path}``.
    """

    families: list[dict] = field(default_factory=list)
    sources: list[dict] = field(default_factory=list)
    imported: list[str] = field(default_factory=list)
    pair_policy: str = "all-normal-subgroups"
    order_cap: int = DEFAULT_ORDER_CAP
    time_budget: float = 30.0
    b0_order_limit: int = 5000

    @classmethod
    def from_json(cls, data: dict) -> "CorpusSpec":
        if not isinstance(data, dict):
            raise InputError("corpus spec must be a JSON object")
        known = {"families", "sources", "imported", "pair_policy", "caps"}
        unknown = set(data) - known
        if unknown:
            raise InputError(f"unknown corpus spec keys: {sorted(unknown)}")
        caps = data.get("caps", {})
        spec = cls(
            families=list(data.get("families", [])),
            sources=list(data.get("sources", [])),
            imported=list(data.get("imported", [])),
            pair_policy=data.get("pair_policy", "all-normal-subgroups"),
            order_cap=int(caps.get("order", DEFAULT_ORDER_CAP)),
            time_budget=float(caps.get("time_budget", 30.0)),
        )
        spec.validate()
        return spec

    def validate(self) -> None:
        if self.pair_policy not in ("all-normal-subgroups", "named-pairs"):
            raise InputError(f"unknown pair policy {self.pair_policy!r}")
        if self.order_cap <= 0 or self.time_budget <= 0:
            raise InputError("caps must be positive")

    def expanded_sources(self) -> list[dict]:
        out = []
        for fam in self.families:
            name = fam["name"]
            params = fam.get("params", {})
            keys = sorted(params)
            for values in itertools.product(*(params[k] for k in keys)):
                out.append({"family": name, **dict(zip(keys, values))})
        out.extend(self.sources)
        out.extend({"file": path} for path in self.imported)
        return out


def default_spec() -> CorpusSpec:
    fam = lambda name, **params: {"name": name, "params": params}  # noqa: E731
    src = lambda name, **params: {"family": name, **params}  # noqa: E731
    return CorpusSpec(
        families=[
            fam("cyclic", n=list(range(1, 65))),
            fam("dihedral", n=list(range(1, 33))),
            fam("symmetric", n=list(range(1, 7))),
            fam("alternating", n=list(range(1, 7))),
            fam("extraspecial", p=[3, 5, 7]),
        ],
        sources=[
            src("elementary_abelian", p=2, s=3),
            src("elementary_abelian", p=3, s=2),
            src("frobenius_cyclic", p=5, m=4),
            src("frobenius_cyclic", p=7, m=3),
            src("frobenius_cyclic", p=7, m=6),
            src("frobenius_cyclic", p=11, m=5),
            src("frobenius_cyclic", p=13, m=4),
            src("semilinear", p=2, n=2),
            src("semilinear", p=2, n=3),
            src("semilinear", p=2, n=4),
            src("semilinear", p=3, n=2),
            src("semilinear", p=3, n=3),
            src("semilinear", p=5, n=2),
            src("semilinear", p=7, n=2),
            src("holomorph", p=2, s=2),
            src("holomorph", p=2, s=3),
            src("holomorph", p=3, s=1),
            src("holomorph", p=3, s=2),
            src("holomorph", p=5, s=1),
            src("holomorph", p=7, s=1),
            src("extraspecial_x_s3", p=3),
            {"direct": [src("symmetric", n=3), src("cyclic", n=2)]},
            {"direct": [src("symmetric", n=3), src("symmetric", n=3)]},
            {"direct": [src("alternating", n=4), src("cyclic", n=2)]},
            {"direct": [src("alternating", n=4), src("cyclic", n=3)]},
            {"direct": [src("dihedral", n=4), src("cyclic", n=3)]},
            {"direct": [src("frobenius_cyclic", p=7, m=3), src("cyclic", n=2)]},
            {"direct": [src("frobenius_cyclic", p=5, m=4), src("cyclic", n=3)]},
            {"direct": [src("symmetric", n=4), src("cyclic", n=2)]},
            {"direct": [src("extraspecial", p=3), src("cyclic", n=2)]},
            src("sl25"),
            src("fp324"),
        ],
    )


def source_key(source: dict) -> str:
    return json.dumps(source, sort_keys=True)


@lru_cache(maxsize=64)
def _resolve_cached(key: str) -> tuple[FiniteGroup, dict[str, Subgroup]]:
    return _resolve(json.loads(key))


def resolve_source(source: dict) -> tuple[FiniteGroup, dict[str, Subgroup]]:
    return _resolve_cached(source_key(source))


def _resolve(source: dict) -> tuple[FiniteGroup, dict[str, Subgroup]]:
    if not isinstance(source, dict):
        raise InputError(f"bad group source {source!r}")
    if "family" in source:
        params = {k: v for k, v in source.items() if k != "family"}
        return construct(source["family"], **params)
    if "direct" in source:
        a, b = source["direct"]
        A, _ = resolve_source(a)
        B, _ = resolve_source(b)
        G, left, right = direct_product_parts(A, B)
        return G, {}
    if "presentation" in source:
        G = realize_text(source["presentation"], source.get("max_cosets", DEFAULT_MAX_COSETS), source.get("label", "fp"))
        return G, {}
    if "file" in source:
        from .io import load_group

        return load_group(source["file"]), {}
    raise InputError(f"bad group source {source!r}")


def conjugation_stable(G: FiniteGroup, N: Subgroup) -> bool:
    """Fresh normality test, independent of cached flags."""
    mask = N.mask
    return all(mask[G.conjugation_action(g)[N.sorted]].all() for g in G.generators)


@dataclass
class CorpusPair:
    source: dict
    group: FiniteGroup
    normal: Subgroup
    normal_index: int | str

    @property
    def pair_id(self) -> str:
        return f"{self.group.label}/N{self.normal_index}"


@dataclass
class Corpus:
    pairs: list[CorpusPair]
    skipped: list[dict]


def _pairs_for(source: dict, spec: CorpusSpec) -> list[CorpusPair]:
    G, named = resolve_source(source)
    if G.order > spec.order_cap:
        raise CapExceeded(f"{G.label} has order {G.order} above cap {spec.order_cap}")
    if spec.pair_policy == "named-pairs":
        chosen = [(name, H) for name, H in sorted(named.items()) if conjugation_stable(G, H)]
    else:
        chosen = list(enumerate(normal_subgroups(G)))
    out = []
    for idx, N in chosen:
        if not conjugation_stable(G, N):
            raise NotNormal(f"{G.label}: subgroup {idx} is not normal")
        out.append(CorpusPair(source, G, N, idx))
    return out


def generate_corpus(spec: CorpusSpec | None = None) -> Corpus:
    spec = spec or default_spec()
    spec.validate()
    pairs, skipped = [], []
    for source in spec.expanded_sources():
        try:
            pairs.extend(_pairs_for(source, spec))
        except CapExceeded as exc:
            skipped.append({"source": source, "reason": str(exc)})
    return Corpus(pairs, skipped)


# -- verification ------------------------------------------------------------------


class PairTimeout(Exception):
    pass


def _vacuous(name: str, **witness) -> Check:
    return Check(name, True, applicable=False, witness=witness)


def _sizes(classes: list[GClass]) -> list[int]:
    return [c.size for c in classes]


def _graph_summary(graph: ClassGraph) -> dict[str, Any]:
    return {
        "sizes": graph.sizes,
        "n_components": graph.n_components,
        "components": [list(c) for c in graph.components],
        "diameters": list(graph.diameters),
        "complete": list(graph.complete),
    }


def _check_class_graph(G: FiniteGroup, N: Subgroup, graph: ClassGraph) -> Check:
    truth = sorted((c for c in conjugacy_classes_in(G, N) if c.size > 1), key=lambda c: (c.size, c.representative))
    if [c.elements for c in truth] != [c.elements for c in graph.vertices]:
        return Check("class_graph_definition", False, witness={
            "expected_sizes": _sizes(truth), "graph_sizes": graph.sizes})
    adj = graph.adjacency
    for i in range(graph.n_vertices):
        for j in range(graph.n_vertices):
            want = i != j and math.gcd(truth[i].size, truth[j].size) > 1
            if bool(adj[i, j]) != want:
                return Check("class_graph_definition", False, witness={
                    "vertices": [i, j],
                    "sizes": [truth[i].size, truth[j].size],
                    "representatives": [truth[i].representative, truth[j].representative],
                    "edge_in_graph": bool(adj[i, j]),
                    "edge_expected": want,
                })
    return Check("class_graph_definition", True, witness={"n_vertices": graph.n_vertices})


def _check_prime_graph(classes: list[GClass], prime_graph: PrimeGraph) -> Check:
    sizes = [c.size for c in classes]
    primes = sorted(set().union(*(c.prime_support for c in classes)))
    if primes != list(prime_graph.vertices):
        return Check("prime_graph_definition", False, witness={"expected": primes, "graph": list(prime_graph.vertices)})
    for i, p in enumerate(primes):
        for j, q in enumerate(primes):
            want = i != j and any(s % (p * q) == 0 for s in sizes)
            if bool(prime_graph.adjacency[i, j]) != want:
                return Check("prime_graph_definition", False, witness={"primes": [p, q], "edge_expected": want})
    return Check("prime_graph_definition", True, witness={"primes": primes})


def _graph_shape_checks(graph: ClassGraph, pg: PrimeGraph) -> list[Check]:
    n = graph.n_components
    out = [Check("at_most_two_components", n <= 2, witness={"n_components": n, "components": [list(c) for c in graph.components]})]
    if n == 1:
        out.append(Check("connected_diameter", graph.diameters[0] <= 3, witness={"diameter": graph.diameters[0]}))
    else:
        out.append(_vacuous("connected_diameter", n_components=n))
    if n == 2:
        out.append(Check("components_complete", all(graph.complete), witness={"complete": list(graph.complete)}))
    else:
        out.append(_vacuous("components_complete", n_components=n))
    if n == 1:
        ecc = {i: graph.eccentricity(i) for i in graph.maximal_vertices()}
        bad = {str(i): e for i, e in ecc.items() if e > 2}
        out.append(Check("max_class_eccentricity", not bad, witness={
            "eccentricities": {str(i): e for i, e in ecc.items()}, "violations": bad}))
    else:
        out.append(_vacuous("max_class_eccentricity", n_components=n))
    if n == 2:
        x1, x2 = graph.component_split()
        s1 = sorted({graph.sizes[i] for i in x1})
        s2 = sorted({graph.sizes[i] for i in x2})
        out.append(Check("small_component_uniform_size", len(s1) == 1 and s1[0] < s2[0], witness={"X1_sizes": s1, "X2_sizes": s2}))
    else:
        out.append(_vacuous("small_component_uniform_size", n_components=n))
    out.append(Check("prime_graph_component_count", pg.n_components <= 2 and pg.n_components == n, witness={
        "prime_components": pg.n_components, "class_components": n}))
    if pg.n_components == 1:
        out.append(Check("prime_graph_diameter", pg.diameters[0] <= 3, witness={"diameter": pg.diameters[0]}))
    else:
        out.append(_vacuous("prime_graph_diameter", prime_components=pg.n_components))
    if pg.n_components >= 2:
        prime_sets = sorted(sorted(pg.vertices[i] for i in c) for c in pg.components)
        class_sets = sorted(
            sorted(set().union(*(graph.vertices[i].prime_support for i in c))) for c in graph.components
        )
        ok = all(pg.complete) and prime_sets == class_sets
        out.append(Check("prime_graph_components", ok, witness={
            "prime_components": prime_sets, "class_component_primes": class_sets, "complete": list(pg.complete)}))
    else:
        out.append(_vacuous("prime_graph_components", prime_components=pg.n_components))
    return out


def _coprime_pair_checks(G: FiniteGroup, N: Subgroup, graph: ClassGraph) -> list[Check]:
    V = graph.vertices
    pairs = [(i, j) for i in range(len(V)) for j in range(i + 1, len(V)) if math.gcd(V[i].size, V[j].size) == 1]
    if not pairs:
        return [_vacuous(name, coprime_pairs=0) for name in CHECK_NAMES[10:13]]
    cents: dict[int, Subgroup] = {}
    quots: dict[int, Subgroup] = {}

    def cent(i: int) -> Subgroup:
        if i not in cents:
            cents[i] = centralizer(G, V[i].representative)
        return cents[i]

    def quot(i: int) -> Subgroup:
        if i not in quots:
            quots[i] = generated_by_quotients(G, V[i])
        return quots[i]

    bad1, bad2, bad3 = [], [], []
    far = 0
    for i, j in pairs:
        B, C = V[i], V[j]
        Cb, Cc = cent(i), cent(j)
        prod = Cb.order * Cc.order // Cb.intersection(Cc).order
        if prod != G.order:
            bad1.append({"vertices": [i, j], "centralizer_product_size": prod})
        cp = class_product(G, B, C)
        pc = cp.product_class
        ok2 = (
            cp.single_class and cp.commutes and pc is not None and pc.size > 1
            and pc.representative in N.elements and (B.size * C.size) % pc.size == 0
        )
        if not ok2:
            bad2.append({"vertices": [i, j], "single_class": cp.single_class, "commutes": cp.commutes,
                         "product_size": len(cp.elements)})
        d = int(graph.distances[i, j])
        if d == INF or d >= 3:
            far += 1
            (s, small), (b, big) = sorted([(i, B), (j, C)], key=lambda t: t[1].size)
            inv_small = G.inverse[small.sorted]
            cbb = set_product(G, set_product(G, big.sorted, small.sorted), inv_small)
            cq = set_product(G, big.sorted, quot(s).sorted)
            res = {
                "BC_size_is_C": len(cp.elements) == big.size,
                "CBB_is_C": set(cbb.tolist()) == big.elements,
                "C_times_quotients_is_C": set(cq.tolist()) == big.elements,
                "quotients_nested": quot(s).elements <= quot(b).elements,
                "quotient_order_divides_C": big.size % quot(s).order == 0,
            }
            if not all(res.values()):
                bad3.append({"small": s, "big": b, **res})
    return [
        Check("coprime_centralizer_product", not bad1, witness={"coprime_pairs": len(pairs), "violations": bad1[:5]}),
        Check("coprime_class_product", not bad2, witness={"coprime_pairs": len(pairs), "violations": bad2[:5]}),
        Check("distant_class_quotients", not bad3, applicable=far > 0, witness={"far_pairs": far, "violations": bad3[:5]}),
    ]


def _structural_subgroup_checks(G: FiniteGroup, N: Subgroup, graph: ClassGraph) -> list[Check]:
    n = graph.n_components
    out = []
    if n == 2:
        out.extend(split_subgroups(G, N, graph).checks)
    else:
        out.extend(_vacuous(name, n_components=n) for name in CHECK_NAMES[13:18])
    if n == 1:
        out.extend(far_subgroups(G, N, graph).checks)
    else:
        out.extend(_vacuous(name, n_components=n) for name in CHECK_NAMES[18:20])
    return out


def _b0_choices(G: FiniteGroup, N: Subgroup, graph: ClassGraph, limit: int) -> Check:
    n = graph.n_components
    if n not in (1, 2):
        return _vacuous("all_maximal_class_choices", n_components=n)
    maxima = graph.maximal_vertices()
    if len(maxima) < 2:
        return _vacuous("all_maximal_class_choices", maximal_classes=len(maxima))
    if G.order > limit:
        return _vacuous("all_maximal_class_choices", maximal_classes=len(maxima), skipped=f"group order above {limit}")
    failures = []
    for b0 in maxima:
        subgroups = split_subgroups if n == 2 else far_subgroups
        for c in subgroups(G, N, graph, b0=b0).checks:
            if not c.passed:
                failures.append({"b0": b0, "check": c.name, "witness": c.witness})
    return Check("all_maximal_class_choices", not failures, witness={"maximal_classes": maxima, "failures": failures[:5]})


def _frobenius_check(qf: QuasiFrobenius) -> Check:
    if not qf.holds:
        return _vacuous("frobenius_detection", **qf.witnesses)
    w = qf.witnesses
    fr = w["quotient_frobenius"]
    ok = (
        fr["coprime"] and fr["kernel_matches_centralizer_set"] and fr["fixed_point_free"]
        and w["kernel_times_complement_is_N"] and w["kernel_meet_complement_is_center"]
    )
    return Check("frobenius_detection", ok, witness=w)


@dataclass
class VerificationReport:
    pair_id: str
    group_label: str
    group_order: int
    normal_order: int
    fingerprint: list
    checks: list[Check]
    status: str
    class_graph: dict[str, Any] | None = None
    prime_graph: dict[str, Any] | None = None
    own_graph: dict[str, Any] | None = None
    quasi_frobenius_abelian: bool | None = None
    structure: StructureReport | None = None
    seconds: float | None = None
    note: str | None = None

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self, timings: bool = False) -> dict[str, Any]:
        out = {
            "pair": self.pair_id,
            "group": self.group_label,
            "group_order": self.group_order,
            "normal_order": self.normal_order,
            "fingerprint": self.fingerprint,
            "status": self.status,
            "checks": [c.as_dict() for c in self.checks],
            "class_graph": self.class_graph,
            "prime_graph": self.prime_graph,
            "own_class_graph": self.own_graph,
            "quasi_frobenius_abelian": self.quasi_frobenius_abelian,
            "structure": self.structure.to_json() if self.structure else None,
        }
        if self.note:
            out["note"] = self.note
        if timings:
            out["seconds"] = self.seconds
        return out


class _Budget:
    """SIGALRM-based wall-clock limit; a no-op off the main thread."""

    def __init__(self, seconds: float | None):
        self.seconds = seconds
        self.active = bool(seconds) and threading.current_thread() is threading.main_thread() and hasattr(signal, "setitimer")

    def __enter__(self):
        if self.active:
            self.previous = signal.signal(signal.SIGALRM, self._fire)
            signal.setitimer(signal.ITIMER_REAL, self.seconds)
        return self

    @staticmethod
    def _fire(signum, frame):
        raise PairTimeout()

    def __exit__(self, *exc):
        if self.active:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, self.previous)
        return False


def verify_pair(
    G: FiniteGroup,
    N: Subgroup,
    graph: ClassGraph | None = None,
    *,
    pair_id: str | None = None,
    time_budget: float | None = None,
    b0_order_limit: int = 5000,
) -> VerificationReport:
    """Run every check on (G, N). Failures and exceptions become data.

    ``graph`` may be supplied (for instance a deliberately corrupted one);
    the checks then run against it while the definitions are checked
    against the true classes.
    """
    if N.parent is not G or not conjugation_stable(G, N):
        raise NotNormal("N must be a normal subgroup of G")
    start = time.perf_counter()
    classes = conjugacy_classes_in(G, N)
    fingerprint = [G.order, N.order, sorted(_sizes(classes))]
    report = VerificationReport(
        pair_id or f"{G.label}/N{N.order}", G.label, G.order, N.order, fingerprint, [], "pass"
    )
    checks: dict[str, Check] = {}

    def run(names: tuple[str, ...], fn: Callable[[], list[Check] | Check]) -> None:
        try:
            got = fn()
            got = [got] if isinstance(got, Check) else got
            for c in got:
                checks[c.name] = c
        except PairTimeout:
            raise
        except Exception as exc:  # fail-soft: an exception is a failed check
            for name in names:
                checks.setdefault(name, Check(name, False, witness={"error": f"{type(exc).__name__}: {exc}"}))

    try:
        with _Budget(time_budget):
            graph = graph if graph is not None else build_class_graph(G, N)
            pg = PrimeGraph(c.size for c in classes)
            report.class_graph = _graph_summary(graph)
            report.prime_graph = pg.to_json()
            NG = as_group(N)
            own = build_class_graph(NG, NG.whole())
            report.own_graph = _graph_summary(own)
            run(("class_graph_definition",), lambda: _check_class_graph(G, N, graph))
            run(("prime_graph_definition",), lambda: _check_prime_graph(classes, pg))
            run(CHECK_NAMES[2:10], lambda: _graph_shape_checks(graph, pg))
            run(CHECK_NAMES[10:13], lambda: _coprime_pair_checks(G, N, graph))
            run(CHECK_NAMES[13:20], lambda: _structural_subgroup_checks(G, N, graph))
            run(("all_maximal_class_choices",), lambda: _b0_choices(G, N, graph, b0_order_limit))
            qf = None
            try:
                qf = is_quasi_frobenius_abelian(N, G)
                report.quasi_frobenius_abelian = qf.abelian_kernel_and_complement
            except PairTimeout:
                raise
            except Exception as exc:
                checks["frobenius_detection"] = Check("frobenius_detection", False, witness={"error": repr(exc)})
            if qf is not None:
                run(("frobenius_detection",), lambda: _frobenius_check(qf))

            def structure_check() -> Check:
                if graph.n_components != 2:
                    return _vacuous("disconnected_structure", n_components=graph.n_components)
                report.structure = classify_disconnected(G, N, graph, qf)
                return Check("disconnected_structure", report.structure.verdict != "neither",
                             witness={"verdict": report.structure.verdict})

            run(("disconnected_structure",), structure_check)
    except PairTimeout:
        report.status = "skipped"
        report.note = f"time budget of {time_budget} s exceeded"
        report.checks = []
        report.seconds = time.perf_counter() - start
        return report
    report.checks = [checks[name] for name in CHECK_NAMES]
    report.status = "fail" if report.failures else "pass"
    report.seconds = time.perf_counter() - start
    return report


# -- corpus runs -------------------------------------------------------------------


def _verify_task(args: tuple[dict, Any, float, int, bool]) -> dict:
    source, index, budget, b0_limit, timings = args
    G, named = resolve_source(source)
    N = named[index] if isinstance(index, str) else normal_subgroups(G)[index]
    rep = verify_pair(G, N, pair_id=f"{G.label}/N{index}", time_budget=budget, b0_order_limit=b0_limit)
    return rep.to_json(timings)


def summarize(pairs: list[dict], skipped: list[dict]) -> dict[str, Any]:
    status = {"pass": 0, "fail": 0, "skipped": 0}
    for p in pairs:
        status[p["status"]] += 1
    failing_checks: dict[str, int] = {}
    for p in pairs:
        for c in p["checks"]:
            if c["status"] == "fail":
                failing_checks[c["check"]] = failing_checks.get(c["check"], 0) + 1
    disconnected_own = []
    diameters_differ = []
    converse = []
    verdicts: dict[str, int] = {}
    max_diam, max_diam_pairs = None, []
    for p in pairs:
        cg, own = p.get("class_graph"), p.get("own_class_graph")
        if p["status"] == "skipped" or cg is None:
            continue
        if cg["n_components"] == 1:
            d = cg["diameters"][0]
            if max_diam is None or d > max_diam:
                max_diam, max_diam_pairs = d, [p["pair"]]
            elif d == max_diam:
                max_diam_pairs.append(p["pair"])
            if own["n_components"] == 2:
                disconnected_own.append(p["pair"])
            if own["n_components"] == 1 and own["diameters"] != cg["diameters"]:
                diameters_differ.append(p["pair"])
            if p["quasi_frobenius_abelian"]:
                converse.append(p["pair"])
        if p["structure"]:
            v = p["structure"]["verdict"]
            verdicts[v] = verdicts.get(v, 0) + 1
    corpus_checks = [
        {"check": "relative_connected_own_disconnected", "status": "pass" if disconnected_own else "fail",
         "witness": disconnected_own[:10]},
        {"check": "diameters_differ", "status": "pass" if diameters_differ else "fail",
         "witness": diameters_differ[:10]},
        {"check": "converse_of_quasi_frobenius_fails", "status": "pass" if converse else "fail", "witness": converse[:10]},
    ]
    return {
        "n_pairs": len(pairs),
        "status": status,
        "failing_checks": dict(sorted(failing_checks.items())),
        "skipped_sources": skipped,
        "verdicts": dict(sorted(verdicts.items())),
        "max_connected_diameter": max_diam,
        "max_connected_diameter_pairs": max_diam_pairs[:10],
        "corpus_checks": corpus_checks,
    }


def run_corpus(spec: CorpusSpec | None = None, jobs: int = 1, timings: bool = False) -> dict[str, Any]:
    """Verify every pair of the corpus; the result is deterministic unless ``timings``."""
    spec = spec or default_spec()
    corpus = generate_corpus(spec)
    if jobs > 1:
        tasks = [(p.source, p.normal_index, spec.time_budget, spec.b0_order_limit, timings) for p in corpus.pairs]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pairs = list(pool.map(_verify_task, tasks, chunksize=1))
    else:
        pairs = [
            verify_pair(p.group, p.normal, pair_id=p.pair_id, time_budget=spec.time_budget,
                        b0_order_limit=spec.b0_order_limit).to_json(timings)
            for p in corpus.pairs
        ]
    return {"pairs": pairs, "summary": summarize(pairs, corpus.skipped)}


def corpus_ok(report: dict) -> bool:
    s = report["summary"]
    return s["status"]["fail"] == 0 and all(c["status"] == "pass" for c in s["corpus_checks"])


# -- golden examples ---------------------------------------------------------------


@dataclass
class GoldenResult:
    name: str
    passed: bool
    details: dict[str, Any]


def _size_counts(classes: list[GClass]) -> dict[int, int]:
    out: dict[int, int] = {}
    for c in classes:
        out[c.size] = out.get(c.size, 0) + 1
    return dict(sorted(out.items()))


def golden_frobenius_sl25() -> GoldenResult:
    G, subs = construct("sl25")
    N, K = subs["N"], subs["K"]
    NG = as_group(N)
    own = _size_counts(conjugacy_classes(NG))
    rel_classes = conjugacy_classes_in(G, N)
    rel = _size_counts(rel_classes)
    twenty = [c for c in rel_classes if c.size == 20]
    covers_k = set().union(*(c.elements for c in twenty)) == K.elements - {G.identity}
    graph = build_class_graph(G, N)
    ok = (
        set(own) == {1, 5, 121} and set(rel) == {1, 20, 242} and len(twenty) == 6 and covers_k
        and rel.get(242) == 2 and graph.is_connected
    )
    return GoldenResult("frobenius_sl25", ok, {
        "N_class_sizes": own, "G_class_sizes": rel, "size20_cover_K": covers_k,
        "connected": graph.is_connected, "group_order": G.order, "N_order": N.order})


def golden_fp324() -> GoldenResult:
    G, subs = construct("fp324")
    N = subs["N"]
    rel = _size_counts(conjugacy_classes_in(G, N))
    graph = build_class_graph(G, N)
    rep = classify_disconnected(G, N, graph) if graph.n_components == 2 else None
    ok = (
        G.order == 324 and set(rel) == {1, 2, 3} and graph.n_components == 2
        and rep is not None and rep.verdict == "p_group_times_central" and rep.p == 3
    )
    return GoldenResult("fp324", ok, {
        "order": G.order, "G_class_sizes": rel, "components": graph.n_components,
        "verdict": rep.verdict if rep else None, "p": rep.p if rep else None})


def golden_semilinear() -> GoldenResult:
    G, subs = construct("semilinear", p=5, n=2, s=3)
    N = subs["N"]
    rel = _size_counts(conjugacy_classes_in(G, N))
    graph = build_class_graph(G, N)
    NG = as_group(N)
    own = build_class_graph(NG, NG.whole())
    ok = rel == {1: 1, 24: 1, 50: 1} and graph.is_connected and own.n_components == 2
    return GoldenResult("semilinear_5_2_3", ok, {
        "G_class_sizes": rel, "connected": graph.is_connected, "own_components": own.n_components})


def golden_extraspecial() -> GoldenResult:
    G, subs = construct("extraspecial_x_s3", p=3)
    N = subs["N"]
    graph = build_class_graph(G, N)
    NG = as_group(N)
    own = build_class_graph(NG, NG.whole())
    sizes = set(graph.sizes)
    own_complete = own.n_components == 1 and own.complete[0]
    ok = sizes == {2, 3, 6} and graph.diameter == 2 and own_complete
    return GoldenResult("extraspecial_x_s3", ok, {
        "nontrivial_sizes": sorted(sizes), "diameter": graph.diameter, "own_complete": own_complete})


def golden_single_vertex() -> GoldenResult:
    from .constructions import s3_a3

    G, N = s3_a3()
    H, subs = construct("holomorph", p=2, s=2)
    g1 = build_class_graph(G, N)
    g2 = build_class_graph(H, subs["N"])
    ok = g1.n_vertices == 1 and g2.n_vertices == 1
    return GoldenResult("single_vertex", ok, {"S3_A3_sizes": g1.sizes, "holomorph_sizes": g2.sizes})


GOLDEN = (golden_frobenius_sl25, golden_fp324, golden_semilinear, golden_extraspecial, golden_single_vertex)


def run_golden_examples() -> list[GoldenResult]:
    out = []
    for fn in GOLDEN:
        try:
            out.append(fn())
        except ClassGraphError as exc:
            out.append(GoldenResult(fn.__name__.removeprefix("golden_"), False, {"error": str(exc)}))
    return out
