"""Group-theoretic operations on :class:`FiniteGroup`: classes, centralizers,
normal subgroups, quotients, commutators, primary parts and Sylow subgroups."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np
from sympy import factorint, isprime

from .errors import CapExceeded, NotNormal, PrimeNotDividing
from .group import FiniteGroup, Subgroup, orbits
from .perm import order_cap


@lru_cache(maxsize=None)
def primes_of(n: int) -> frozenset[int]:
    """pi(n): the primes dividing ``n``."""
    return frozenset(factorint(n)) if n > 1 else frozenset()


def is_prime_power(n: int) -> bool:
    return n == 1 or len(primes_of(n)) == 1


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


@dataclass(frozen=True)
class GClass:
    """A conjugacy class; equality is by element set."""

    representative: int
    elements: frozenset[int] = field(compare=True)
    size: int = field(compare=False)
    prime_support: frozenset[int] = field(compare=False)

    @classmethod
    def from_elements(cls, elements: Iterable[int]) -> "GClass":
        elems = frozenset(int(e) for e in elements)
        return cls(min(elems), elems, len(elems), primes_of(len(elems)))

    def __hash__(self) -> int:
        return hash(self.elements)

    @property
    def is_central(self) -> bool:
        return self.size == 1

    @property
    def sorted(self) -> np.ndarray:
        return np.array(sorted(self.elements), dtype=np.int64)


def _require_normal(G: FiniteGroup, N: Subgroup) -> None:
    if N.parent is not G:
        raise NotNormal("subgroup belongs to a different group")
    if not N.is_normal:
        raise NotNormal(f"subgroup of order {N.order} is not normal in {G.label}")


def center(G: FiniteGroup) -> Subgroup:
    t = G.table
    mask = np.ones(G.order, dtype=bool)
    for g in G.generators:
        mask &= t[:, g] == t[g, :]
    return Subgroup(G, np.flatnonzero(mask))


def centralizer(G: FiniteGroup, x: int) -> Subgroup:
    x = G.check_element(x)
    t = G.table
    return Subgroup(G, np.flatnonzero(t[:, x] == t[x, :]))


def centralizer_of_set(G: FiniteGroup, xs: Iterable[int]) -> Subgroup:
    t = G.table
    mask = np.ones(G.order, dtype=bool)
    for x in xs:
        mask &= t[:, x] == t[x, :]
    return Subgroup(G, np.flatnonzero(mask))


def classes_under(G: FiniteGroup, acting: Subgroup, domain: Subgroup) -> list[GClass]:
    """Orbits of ``acting`` on ``domain`` by conjugation, by least element."""
    actions = [G.conjugation_action(g) for g in acting.generators]
    return [GClass.from_elements(o) for o in orbits(G.order, actions, domain.mask)]


def conjugacy_classes(G: FiniteGroup) -> list[GClass]:
    cached = getattr(G, "_classes", None)
    if cached is None:
        cached = classes_under(G, G.whole(), G.whole())
        G._classes = cached
    return cached


def class_ids(G: FiniteGroup) -> np.ndarray:
    """``ids[x]`` = position of x's class in :func:`conjugacy_classes`."""
    cached = getattr(G, "_class_ids", None)
    if cached is None:
        cached = np.empty(G.order, dtype=np.int64)
        for k, c in enumerate(conjugacy_classes(G)):
            cached[c.sorted] = k
        G._class_ids = cached
    return cached


def conjugacy_classes_in(G: FiniteGroup, N: Subgroup) -> list[GClass]:
    """Con_G(N): the G-classes contained in the normal subgroup N."""
    _require_normal(G, N)
    return [c for c in conjugacy_classes(G) if c.representative in N.elements]


def normal_closure(G: FiniteGroup, elements: Iterable[int], start: Subgroup | None = None) -> Subgroup:
    ids = class_ids(G)
    classes = conjugacy_classes(G)
    gens: list[int] = []
    for x in elements:
        gens.extend(classes[ids[int(x)]].sorted.tolist())
    return G.generate(gens, start=start)


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, ordered by (order, sorted elements).

    Built as the join-closure of the normal closures of single classes: every
    normal subgroup is a union of classes, hence the join of those closures.
    """
    cached = getattr(G, "_normals", None)
    if cached is not None:
        return cached
    atoms: list[Subgroup] = []
    seen_atoms = set()
    for c in conjugacy_classes(G):
        a = G.generate(c.sorted)
        if a.elements not in seen_atoms:
            seen_atoms.add(a.elements)
            atoms.append(a)
    found = {G.trivial().elements: G.trivial()}
    queue = [G.trivial()]
    cap = order_cap()
    while queue:
        A = queue.pop()
        for atom in atoms:
            if atom.elements <= A.elements:
                continue
            J = A.join(atom)
            if J.elements not in found:
                found[J.elements] = J
                if len(found) > cap:
                    raise CapExceeded("too many normal subgroups")
                queue.append(J)
    out = sorted(found.values(), key=lambda s: (s.order, s.sorted.tolist()))
    for s in out:
        s.__dict__["is_normal"] = True
    G._normals = out
    return out


def quotient(G: FiniteGroup, K: Subgroup, label: str | None = None) -> FiniteGroup:
    """G/K as a Cayley-table group; ``Q.projection[g]`` is the coset of g."""
    _require_normal(G, K)
    t = G.table
    coset_min = t[:, K.sorted].min(axis=1)
    reps, projection = np.unique(coset_min, return_inverse=True)
    projection = projection.astype(np.int64).reshape(-1)
    qtable = projection[t[reps[:, None], reps[None, :]]]
    # projection must be a homomorphism on every pair
    if not np.array_equal(projection[t], qtable[projection[:, None], projection[None, :]]):
        raise NotNormal("coset multiplication is not well defined")
    Q = FiniteGroup(
        label or f"{G.label}/{K.order}",
        table=qtable,
        identity=int(projection[G.identity]),
        generators=[int(projection[g]) for g in G.generators if projection[g] != projection[G.identity]],
    )
    Q.projection = projection
    Q.coset_representatives = reps
    return Q


def preimage(Q: FiniteGroup, sub: Subgroup) -> np.ndarray:
    """Parent elements mapping into ``sub`` under ``Q.projection``."""
    return np.flatnonzero(sub.mask[Q.projection])


def commutator_subgroup(A: Subgroup, G: FiniteGroup) -> Subgroup:
    """[A, G], generated by all a^-1 g^-1 a g."""
    t, inv = G.table, G.inverse
    if A.is_normal:
        # [A,G] is the normal closure of commutators of generators
        a = np.array(A.generators, dtype=np.int64)
        g = np.array(G.generators, dtype=np.int64)
        if a.size == 0 or g.size == 0:
            return G.trivial()
        comms = t[t[t[inv[a][:, None], inv[g][None, :]], a[:, None]], g[None, :]].ravel()
        return normal_closure(G, np.unique(comms))
    a = A.sorted
    g = np.arange(G.order)
    comms = t[t[t[inv[a][:, None], inv[g][None, :]], a[:, None]], g[None, :]]
    return G.generate(np.unique(comms))


def element_primary_parts(x: int, G: FiniteGroup) -> dict[int, int]:
    """q-parts of x: for each prime q | o(x), the power of x of q-power order."""
    x = G.check_element(x)
    m = G.element_order(x)
    parts = {}
    for q, e in sorted(factorint(m).items()):
        qe = q**e
        rest = m // qe
        # u = 1 mod q^e and u = 0 mod rest
        u = rest * pow(rest, -1, qe)
        parts[q] = G.power(x, u % m)
    return parts


def sylow_subgroup(G: FiniteGroup, p: int, within: Subgroup | None = None) -> Subgroup:
    """A Sylow p-subgroup of G (or of the subgroup ``within``).

    Greedy extension over p-elements in index order. No backtracking is
    required: an element rejected at some p-subgroup H cannot extend any
    larger p-subgroup containing H, and a p-subgroup that no p-element
    extends is maximal, hence Sylow.
    """
    if not isprime(p):
        raise PrimeNotDividing(f"{p} is not prime")
    domain = within if within is not None else G.whole()
    target = p_part(domain.order, p)
    if target == 1:
        raise PrimeNotDividing(f"{p} does not divide {domain.order}")
    orders = G.element_orders
    H = G.trivial()
    for x in domain.sorted:
        if H.order == target:
            break
        o = int(orders[x])
        if o == 1 or not is_prime_power(o) or o % p or x in H.elements:
            continue
        cand = G.generate([x], start=H, limit=target)
        if cand is not None and is_prime_power(cand.order) and cand.order % p == 0:
            H = cand
    if H.order != target:
        raise AssertionError(f"Sylow search ended at order {H.order}, expected {target}")
    return H


def pi_elements(G: FiniteGroup, primes: Iterable[int], domain: Subgroup | None = None) -> np.ndarray:
    """Elements of ``domain`` whose order is a product of the given primes."""
    ps = frozenset(primes)
    dom = domain.sorted if domain is not None else np.arange(G.order)
    orders = G.element_orders[dom]
    keep = [primes_of(int(o)) <= ps for o in orders]
    return dom[np.array(keep, dtype=bool)] if len(keep) else dom
