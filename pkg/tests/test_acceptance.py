"""End-to-end acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line, shown in the terminal summary and with ``-s``.
"""

import subprocess
import sys

import pytest

import bruteforce as bf
from classgraph.constructions import construct, s3_a3
from classgraph.core import center, centralizer, conjugacy_classes, conjugacy_classes_in, normal_subgroups
from classgraph.errors import CosetLimitExceeded
from classgraph.fp import EXAMPLE_324, parse_presentation, realize_text, unparse
from classgraph.graphs import build_class_graph
from classgraph.group import as_group
from classgraph.harness import CHECK_NAMES, default_spec, run_corpus
from classgraph.io import dumps
from classgraph.structure import classify_disconnected
from conftest import brute_elements, brute_gens, to_indices

ORACLE_ORDER_LIMIT = 200


def sizes_of(classes) -> list[int]:
    return sorted(c.size for c in classes)


def test_criterion_1_sl25_frobenius(acceptance):
    G, subs = construct("sl25")
    N, K = subs["N"], subs["K"]
    own = sizes_of(conjugacy_classes(as_group(N)))
    rel_classes = conjugacy_classes_in(G, N)
    rel = sizes_of(rel_classes)
    twenty = [c for c in rel_classes if c.size == 20]
    cover = set().union(*(c.elements for c in twenty))
    ok = (
        set(own) == {1, 5, 121}
        and set(rel) == {1, 20, 242}
        and len(twenty) == 6
        and cover == K.elements - {G.identity}
        and len(cover) == 120
        and rel.count(242) == 2
    )
    acceptance(1, ok, f"|G|={G.order} |N|={N.order} N-sizes={sorted(set(own))} G-sizes={sorted(set(rel))} "
                      f"size20={len(twenty)} size242={rel.count(242)}")
    assert ok


def test_criterion_2_fp324(acceptance):
    G, subs = construct("fp324")
    N = subs["N"]
    rel = sizes_of(conjugacy_classes_in(G, N))
    graph = build_class_graph(G, N)
    rep = classify_disconnected(G, N, graph)
    ok = (G.order == 324 and set(rel) == {1, 2, 3} and graph.n_components == 2
          and rep.verdict == "p_group_times_central" and rep.p == 3)
    acceptance(2, ok, f"|G|={G.order} |N|={N.order} sizes={sorted(set(rel))} "
                      f"components={graph.n_components} verdict={rep.verdict} p={rep.p}")
    assert ok


def test_criterion_3_semilinear(acceptance):
    G, subs = construct("semilinear", p=5, n=2, s=3)
    N = subs["N"]
    nontrivial = [s for s in sizes_of(conjugacy_classes_in(G, N)) if s > 1]
    graph = build_class_graph(G, N)
    NG = as_group(N)
    own = build_class_graph(NG, NG.whole())
    ok = nontrivial == [24, 50] and graph.is_connected and not own.is_connected
    acceptance(3, ok, f"nontrivial={nontrivial} relative_components={graph.n_components} "
                      f"own_components={own.n_components}")
    assert ok


def test_criterion_4_extraspecial(acceptance):
    G, subs = construct("extraspecial_x_s3", p=3)
    N = subs["N"]
    graph = build_class_graph(G, N)
    NG = as_group(N)
    own = build_class_graph(NG, NG.whole())
    ok = (set(graph.sizes) == {2, 3, 6} and graph.diameter == 2
          and own.n_components == 1 and own.complete == [True])
    acceptance(4, ok, f"sizes={sorted(set(graph.sizes))} diameter={graph.diameter} own_complete={own.complete}")
    assert ok


def test_criterion_5_single_vertex(acceptance):
    G, N = s3_a3()
    H, subs = construct("holomorph", p=2, s=2)
    g1, g2 = build_class_graph(G, N), build_class_graph(H, subs["N"])
    ok = g1.n_vertices == 1 and g2.n_vertices == 1
    acceptance(5, ok, f"S3/A3 sizes={g1.sizes} Hol(2^2) sizes={g2.sizes}")
    assert ok


def test_criterion_6_no_failures_on_corpus(acceptance, corpus_report):
    summary = corpus_report["summary"]
    checked = {c["check"] for p in corpus_report["pairs"] for c in p["checks"]}
    failing = summary["failing_checks"]
    ok = (summary["n_pairs"] > 200 and checked == set(CHECK_NAMES)
          and summary["status"]["fail"] == 0 and summary["status"]["skipped"] == 0)
    acceptance(6, ok, f"pairs={summary['n_pairs']} status={summary['status']} failing_checks={failing}")
    assert ok, failing


def test_criterion_7_oracle_agreement(acceptance, default_corpus):
    groups = {}
    for p in default_corpus.pairs:
        if p.group.order <= ORACLE_ORDER_LIMIT:
            groups.setdefault(id(p.group), p.group)
    mismatches = []
    for G in groups.values():
        idx = brute_elements(G)
        E = bf.elements(brute_gens(G), G.degree)
        if set(idx) != E:
            mismatches.append((G.label, "elements"))
            continue
        ours = {frozenset(int(x) for x in c.elements) for c in conjugacy_classes(G)}
        if ours != {to_indices(idx, c) for c in bf.classes(E)}:
            mismatches.append((G.label, "classes"))
        if any(set(centralizer(G, x).sorted.tolist()) != to_indices(idx, bf.centralizer(q, E))
               for q, x in idx.items()):
            mismatches.append((G.label, "centralizers"))
        if set(center(G).sorted.tolist()) != to_indices(idx, bf.center(E)):
            mismatches.append((G.label, "center"))
        normals = {frozenset(N.sorted.tolist()) for N in normal_subgroups(G)}
        if normals != {to_indices(idx, N) for N in bf.normal_subgroups(E)}:
            mismatches.append((G.label, "normal_subgroups"))
    ok = bool(groups) and not mismatches
    acceptance(7, ok, f"groups={len(groups)} mismatches={mismatches}")
    assert ok


def test_criterion_8_presentations(acceptance):
    texts = ["<x | x^3>", "<a,b | a^2, b^3, (ab)^2>", EXAMPLE_324]
    orders = [realize_text(t).order for t in texts]
    round_trip = all(parse_presentation(unparse(parse_presentation(t))) == parse_presentation(t) for t in texts)
    try:
        realize_text("<x,y | >")
        free_raises = False
    except CosetLimitExceeded:
        free_raises = True
    ok = orders == [3, 6, 324] and round_trip and free_raises
    acceptance(8, ok, f"orders={orders} round_trip={round_trip} free_group_limit={free_raises}")
    assert ok


@pytest.mark.slow
def test_criterion_9_reproducible(acceptance, corpus_report, tmp_path):
    in_process = dumps(corpus_report) == dumps(run_corpus(default_spec()))
    outs = []
    for k in range(2):
        path = tmp_path / f"run{k}.json"
        subprocess.run([sys.executable, "-m", "classgraph", "corpus", "run", "--json", str(path)],
                       capture_output=True, timeout=600)
        outs.append(path.read_bytes())
    cli = outs[0] == outs[1] and len(outs[0]) > 0
    ok = in_process and cli
    acceptance(9, ok, f"in_process_identical={in_process} cli_identical={cli} bytes={len(outs[0])}")
    assert ok
