"""Frobenius and quasi-Frobenius detection, and the classifier for pairs
(G, N) whose class graph has two components."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .core import center, normal_subgroups, pi_elements, primes_of, quotient, sylow_subgroup
from .errors import KernelInvalid, NotDisconnected
from .graphs import ClassGraph, build_class_graph
from .group import FiniteGroup, Subgroup, as_group

VERDICTS = ("quasi_frobenius_abelian", "p_group_times_central", "both", "neither")


def _kernel_condition(F: FiniteGroup, K: Subgroup) -> int | None:
    """None if C_F(x) <= K for all x in K minus 1, else a violating x."""
    t = F.table
    outside = ~K.mask
    for x in K.sorted:
        if x == F.identity:
            continue
        if (outside & (t[:, x] == t[x, :])).any():
            return int(x)
    return None


def frobenius_kernel(F: FiniteGroup) -> Subgroup | None:
    """The Frobenius kernel of F, or None when F is not a Frobenius group."""
    for K in normal_subgroups(F):
        if 1 < K.order < F.order and _kernel_condition(F, K) is None:
            return K
    return None


def frobenius_complement(F: FiniteGroup, K: Subgroup) -> Subgroup:
    """A complement to the Frobenius kernel K.

    Depth-first over elements whose order divides |F:K|, largest orders first.
    Any subgroup of order |F:K| meets K trivially since the orders are coprime.
    """
    if K.parent is not F or not (1 < K.order < F.order) or not K.is_normal or _kernel_condition(F, K) is not None:
        raise KernelInvalid("subgroup is not a Frobenius kernel")
    m = F.order // K.order
    if math.gcd(m, K.order) != 1:
        raise KernelInvalid("kernel order is not coprime to its index")
    orders = F.element_orders
    cands = [int(x) for x in np.flatnonzero(m % orders == 0) if x != F.identity]
    cands.sort(key=lambda x: (-int(orders[x]), x))
    seen: set[frozenset[int]] = set()

    def search(H: Subgroup) -> Subgroup | None:
        if H.order == m:
            return H
        for x in cands:
            if x in H.elements:
                continue
            J = F.generate([x], start=H, limit=m)
            if J is None or m % J.order or J.elements in seen:
                continue
            seen.add(J.elements)
            found = search(J)
            if found is not None:
                return found
        return None

    H = search(F.trivial())
    if H is None:
        raise KernelInvalid("no complement found")
    return H


def frobenius_cross_check(F: FiniteGroup, K: Subgroup, H: Subgroup) -> dict[str, Any]:
    """Element-level evidence for a detected Frobenius structure."""
    t = F.table
    kmask = K.mask
    via_centralizers = [F.identity] + [
        int(x) for x in range(F.order) if x != F.identity and not (~kmask & (t[:, x] == t[x, :])).any()
    ]
    fixed = []
    for h in H.sorted:
        if h == F.identity:
            continue
        act = F.conjugation_action(int(h))
        moved = act[K.sorted] != K.sorted
        if not moved[K.sorted != F.identity].all():
            fixed.append(int(h))
    return {
        "coprime": math.gcd(K.order, F.order // K.order) == 1,
        "kernel_matches_centralizer_set": sorted(via_centralizers) == K.sorted.tolist(),
        "fixed_point_free": not fixed,
        "fixing_elements": fixed[:5],
    }


def _embedding(H: FiniteGroup, parent: FiniteGroup) -> np.ndarray:
    return getattr(H, "embedding", None) if H is not parent else np.arange(parent.order)


@dataclass
class QuasiFrobenius:
    holds: bool
    abelian: bool
    kernel: list[int] | None = None
    complement: list[int] | None = None
    witnesses: dict[str, Any] = field(default_factory=dict)

    @property
    def abelian_kernel_and_complement(self) -> bool:
        return self.holds and self.abelian


def is_quasi_frobenius_abelian(N: Subgroup, G: FiniteGroup) -> QuasiFrobenius:
    """Is N/Z(N) Frobenius, and are the preimages of kernel and complement abelian?"""
    NG = as_group(N)
    emb = _embedding(NG, G)
    Z = center(NG)
    Q = quotient(NG, Z)
    Kbar = frobenius_kernel(Q) if Q.order > 1 else None
    if Kbar is None:
        return QuasiFrobenius(False, False, witnesses={"center_order": Z.order, "quotient_order": Q.order})
    Hbar = frobenius_complement(Q, Kbar)
    K = Subgroup(NG, np.flatnonzero(Kbar.mask[Q.projection]))
    H = Subgroup(NG, np.flatnonzero(Hbar.mask[Q.projection]))
    cover = np.unique(NG.table[K.sorted[:, None], H.sorted[None, :]]).size == NG.order
    meet = K.intersection(H) == Z
    abelian = K.is_abelian() and H.is_abelian()
    return QuasiFrobenius(
        True,
        abelian,
        kernel=sorted(int(x) for x in emb[K.sorted]),
        complement=sorted(int(x) for x in emb[H.sorted]),
        witnesses={
            "center_order": Z.order,
            "quotient_order": Q.order,
            "kernel_order": K.order,
            "complement_order": H.order,
            "kernel_abelian": K.is_abelian(),
            "complement_abelian": H.is_abelian(),
            "kernel_times_complement_is_N": cover,
            "kernel_meet_complement_is_center": meet,
            "quotient_frobenius": frobenius_cross_check(Q, Kbar, Hbar),
        },
    )


@dataclass
class PTimesCentral:
    holds: bool
    p: int | None = None
    P: list[int] | None = None
    A: list[int] | None = None
    witnesses: dict[str, Any] = field(default_factory=dict)


def is_pgroup_times_central(N: Subgroup, G: FiniteGroup) -> PTimesCentral:
    """N = P x A with P a Sylow p-subgroup and A inside Z(G), first prime that works."""
    if N.order == 1:
        return PTimesCentral(False, witnesses={"reason": "trivial N"})
    zmask = center(G).mask
    tried = {}
    for p in sorted(primes_of(N.order)):
        P = sylow_subgroup(G, p, within=N)
        p_normal = bool(all(P.mask[G.conjugation_action(g)[P.sorted]].all() for g in N.generators))
        rest = [q for q in primes_of(N.order) if q != p]
        A_elems = pi_elements(G, rest, N) if rest else np.array([G.identity])
        A = Subgroup(G, A_elems)
        ok_A = A.order * P.order == N.order and A.is_closed()
        central = bool(zmask[A_elems].all())
        tried[p] = {"P_order": P.order, "P_normal_in_N": p_normal, "A_order": A.order,
                    "A_is_complement": ok_A, "A_central": central}
        if p_normal and ok_A and central:
            return PTimesCentral(True, p, P.sorted.tolist(), A.sorted.tolist(), witnesses=tried)
    return PTimesCentral(False, witnesses=tried)


@dataclass
class StructureReport:
    verdict: str
    kernel: list[int] | None = None
    complement: list[int] | None = None
    p: int | None = None
    A: list[int] | None = None
    witnesses: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "kernel": self.kernel,
            "complement": self.complement,
            "p": self.p,
            "A": self.A,
            "witnesses": self.witnesses,
        }


def classify_disconnected(
    G: FiniteGroup, N: Subgroup, graph: ClassGraph | None = None, qf: QuasiFrobenius | None = None
) -> StructureReport:
    graph = graph if graph is not None else build_class_graph(G, N)
    if graph.n_components != 2:
        raise NotDisconnected(f"class graph has {graph.n_components} components, expected 2")
    qf = qf if qf is not None else is_quasi_frobenius_abelian(N, G)
    pa = is_pgroup_times_central(N, G)
    a, b = qf.abelian_kernel_and_complement, pa.holds
    verdict = "both" if a and b else VERDICTS[0] if a else VERDICTS[1] if b else "neither"
    return StructureReport(
        verdict,
        kernel=qf.kernel if a else None,
        complement=qf.complement if a else None,
        p=pa.p,
        A=pa.A,
        witnesses={"quasi_frobenius": qf.witnesses, "p_times_central": pa.witnesses},
    )
