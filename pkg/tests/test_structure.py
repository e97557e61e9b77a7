import math

import pytest

import bruteforce as bf
from classgraph.constructions import (
    cyclic,
    cyclic_power_action,
    dihedral,
    elementary_abelian,
    fp324,
    frobenius_cyclic,
    semidirect_product_parts,
    semilinear_example,
    sl25_frobenius_example,
    symmetric,
)
from classgraph.core import center, normal_subgroups
from classgraph.errors import KernelInvalid, NotDisconnected
from classgraph.graphs import build_class_graph
from classgraph.structure import (
    VERDICTS,
    classify_disconnected,
    frobenius_complement,
    frobenius_cross_check,
    frobenius_kernel,
    is_pgroup_times_central,
    is_quasi_frobenius_abelian,
)
from conftest import brute_elements, brute_gens

S4 = symmetric(4)
A4 = next(N for N in normal_subgroups(S4) if N.order == 12)


@pytest.fixture(scope="module")
def f21():
    K, H = cyclic(7), cyclic(3)
    return semidirect_product_parts(K, H, cyclic_power_action(K, H, 2))


def brute_kernel_candidates(G):
    """Normal subgroups K with C(x) <= K for all x in K minus 1, by definition."""
    idx = brute_elements(G)
    E = bf.elements(brute_gens(G), G.degree)
    e = bf.identity(G.degree)
    out = []
    for K in bf.normal_subgroups(E):
        if 1 < len(K) < len(E) and all(bf.centralizer(x, E) <= K for x in K if x != e):
            out.append(frozenset(idx[x] for x in K))
    return out


def test_kernel_abelian_absent():
    assert frobenius_kernel(cyclic(6)) is None
    assert frobenius_kernel(elementary_abelian(2, 2)) is None


def test_kernel_s3():
    S3 = symmetric(3)
    K = frobenius_kernel(S3)
    assert K.order == 3
    assert brute_kernel_candidates(S3) == [frozenset(K.sorted.tolist())]
    assert frobenius_complement(S3, K).order == 2


def test_kernel_f21(f21):
    G, K, H = f21
    assert frobenius_kernel(G) == K
    found = frobenius_complement(G, K)
    assert found.order == 3
    assert brute_kernel_candidates(G) == [frozenset(K.sorted.tolist())]


@pytest.mark.parametrize("G", [symmetric(4), dihedral(4), dihedral(6), symmetric(5)], ids=lambda G: G.label)
def test_non_frobenius_agrees_with_oracle(G):
    assert frobenius_kernel(G) is None
    assert brute_kernel_candidates(G) == []


@pytest.mark.parametrize("p,m", [(5, 4), (7, 6), (11, 5), (13, 4)])
def test_frobenius_detection_properties(p, m):
    G, K, H = frobenius_cyclic(p, m)
    Kf = frobenius_kernel(G)
    assert Kf == K
    Hf = frobenius_complement(G, Kf)
    cc = frobenius_cross_check(G, Kf, Hf)
    assert math.gcd(Kf.order, G.order // Kf.order) == 1
    assert cc["coprime"] and cc["fixed_point_free"] and cc["kernel_matches_centralizer_set"]
    assert Hf.order == m and Hf.intersection(Kf).order == 1


def test_complement_rejects_bad_kernel():
    S3 = symmetric(3)
    with pytest.raises(KernelInvalid):
        frobenius_complement(S3, S3.whole())
    with pytest.raises(KernelInvalid):
        frobenius_complement(S4, next(N for N in normal_subgroups(S4) if N.order == 4))
    other = symmetric(3)
    with pytest.raises(KernelInvalid):
        frobenius_complement(S3, frobenius_kernel(other))


def test_quasi_frobenius_a4():
    qf = is_quasi_frobenius_abelian(A4, S4)
    assert qf.holds and qf.abelian
    assert len(qf.kernel) == 4 and len(qf.complement) == 3
    w = qf.witnesses
    assert w["kernel_times_complement_is_N"] and w["kernel_meet_complement_is_center"]
    assert w["quotient_frobenius"]["fixed_point_free"]
    V4 = next(N for N in normal_subgroups(S4) if N.order == 4)
    assert set(qf.kernel) == set(V4.sorted.tolist())


def test_quasi_frobenius_abelian_n():
    C = cyclic(6)
    qf = is_quasi_frobenius_abelian(C.whole(), C)
    assert not qf.holds and not qf.abelian_kernel_and_complement


def test_quasi_frobenius_with_center():
    # D12 = Z2 x S3: quotient by the centre is S3, which is Frobenius
    D = dihedral(6)
    qf = is_quasi_frobenius_abelian(D.whole(), D)
    assert qf.holds and qf.abelian
    assert qf.witnesses["center_order"] == 2
    assert len(qf.kernel) == 6 and len(qf.complement) == 4


def test_quasi_frobenius_sl25():
    ex = sl25_frobenius_example()
    qf = is_quasi_frobenius_abelian(ex.N, ex.group)
    assert qf.abelian_kernel_and_complement
    assert set(qf.kernel) == set(ex.K.sorted.tolist())
    assert len(qf.complement) == 5
    # the graph is connected anyway
    assert build_class_graph(ex.group, ex.N).is_connected


def test_pgroup_times_central_324():
    G, subs = fp324()
    res = is_pgroup_times_central(subs["N"], G)
    assert res.holds and res.p == 3 and len(res.P) == 9 and len(res.A) == 1


def test_pgroup_times_central_abelian():
    C = cyclic(6)
    res = is_pgroup_times_central(C.whole(), C)
    assert res.holds and res.p == 2 and len(res.A) == 3
    assert set(res.A) <= set(center(C).sorted.tolist())


def test_pgroup_times_central_a4_fails():
    res = is_pgroup_times_central(A4, S4)
    assert not res.holds
    assert is_pgroup_times_central(S4.trivial(), S4).holds is False


def test_classify_s4_a4():
    rep = classify_disconnected(S4, A4)
    assert rep.verdict == "quasi_frobenius_abelian"
    assert len(rep.kernel) == 4 and len(rep.complement) == 3
    assert rep.to_json()["verdict"] in VERDICTS


def test_classify_324():
    G, subs = fp324()
    rep = classify_disconnected(G, subs["N"])
    assert rep.verdict == "p_group_times_central" and rep.p == 3


def test_classify_s3_on_itself():
    S3 = symmetric(3)
    A3 = next(N for N in normal_subgroups(S3) if N.order == 3)
    rep = classify_disconnected(S3, S3.whole())
    assert rep.verdict == "quasi_frobenius_abelian"
    with pytest.raises(NotDisconnected):
        classify_disconnected(S3, A3)  # a single vertex


def test_branches_exclusive_on_pgroup_quotient():
    # N = P x A with A central forces N/Z(N) to be a p-group, never Frobenius
    G, subs = fp324()
    N = subs["N"]
    assert is_pgroup_times_central(N, G).holds
    assert not is_quasi_frobenius_abelian(N, G).holds


def test_classify_semilinear_p2_disconnected():
    ex = semilinear_example(2, 2, 3)
    rep = classify_disconnected(ex.group, ex.N)
    assert rep.verdict != "neither"
