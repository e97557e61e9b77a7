"""Definition-chasing reference implementations over permutation tuples.

Nothing here touches the engine's tables; elements are image tuples and the
product is composition left to right, ``(a*b)[i] = b[a[i]]``.
"""

from __future__ import annotations

from itertools import product
from math import gcd

Perm = tuple[int, ...]


def mul(a: Perm, b: Perm) -> Perm:
    return tuple(b[i] for i in a)


def inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, ai in enumerate(a):
        out[ai] = i
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(n))


def elements(gens: list[Perm], degree: int) -> set[Perm]:
    seen = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def conj(x: Perm, g: Perm) -> Perm:
    return mul(mul(inv(g), x), g)


def conjugacy_class(x: Perm, G: set[Perm]) -> frozenset[Perm]:
    return frozenset(conj(x, g) for g in G)


def classes(G: set[Perm]) -> set[frozenset[Perm]]:
    left = set(G)
    out = set()
    while left:
        x = next(iter(left))
        c = conjugacy_class(x, G)
        out.add(c)
        left -= c
    return out


def centralizer(x: Perm, G: set[Perm]) -> frozenset[Perm]:
    return frozenset(g for g in G if mul(g, x) == mul(x, g))


def center(G: set[Perm]) -> frozenset[Perm]:
    return frozenset(z for z in G if all(mul(z, g) == mul(g, z) for g in G))


def closure_of(gens: list[Perm], degree: int) -> frozenset[Perm]:
    return frozenset(elements(gens, degree))


def normal_subgroups(G: set[Perm]) -> set[frozenset[Perm]]:
    """Every normal subgroup is reached from 1 by repeatedly adding a class
    and closing; the subgroup generated by normal subsets is normal."""
    cls = classes(G)
    n = len(next(iter(G)))
    trivial = frozenset([identity(n)])
    found = {trivial}
    stack: list[tuple[frozenset[Perm], list[Perm]]] = [(trivial, [])]
    while stack:
        M, gens = stack.pop()
        for c in cls:
            if c <= M:
                continue
            new_gens = gens + sorted(c)
            J = closure_of(new_gens, n)
            if J not in found:
                found.add(J)
                stack.append((J, new_gens))
    return found


def is_normal(H: frozenset[Perm], G: set[Perm]) -> bool:
    return all(conj(h, g) in H for h in H for g in G)


def commutator_subgroup(A: frozenset[Perm], G: set[Perm]) -> frozenset[Perm]:
    n = len(next(iter(G)))
    comms = {mul(mul(inv(a), inv(g)), mul(a, g)) for a in A for g in G}
    return closure_of(sorted(comms), n)


def order(x: Perm) -> int:
    k, y, e = 1, x, identity(len(x))
    while y != e:
        y = mul(y, x)
        k += 1
    return k


def class_graph(G: set[Perm], N: frozenset[Perm]) -> tuple[list[int], set[tuple[int, int]]]:
    """Sorted non-central class sizes of G-classes in N, with gcd edges."""
    sizes = sorted(len(c) for c in classes(G) if next(iter(c)) in N and len(c) > 1)
    edges = {(i, j) for i, j in product(range(len(sizes)), repeat=2) if i < j and gcd(sizes[i], sizes[j]) > 1}
    return sizes, edges


def n_components(n: int, edges: set[tuple[int, int]]) -> int:
    parent = list(range(n))

    def find(u: int) -> int:
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(u) for u in range(n)})
