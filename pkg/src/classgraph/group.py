"""Finite groups as indexed element sets with a multiplication table.

Every group, whatever its origin, exposes elements as integers ``0..order-1``
and a Cayley table ``table[a, b] = index(a * b)``. Permutation-backed groups
sort their elements lexicographically by image tuple (so the identity is 0)
and build the table lazily; quotients and subgroup-as-group views are born
with a table.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceeded, ElementNotInGroup, MalformedGroup
from .perm import Permutation, closure, order_cap

# Cayley tables are n*n int32; beyond this many elements we refuse to build one.
TABLE_LIMIT = 12_000


class FiniteGroup:
    def __init__(
        self,
        label: str,
        *,
        table: np.ndarray | None = None,
        perms: np.ndarray | None = None,
        identity: int = 0,
        generators: Sequence[int] | None = None,
    ):
        if table is None and perms is None:
            raise MalformedGroup("a group needs a table or permutations")
        self.label = label
        self.perms = perms
        self.identity = int(identity)
        if table is not None:
            self._table = np.ascontiguousarray(table, dtype=np.int32)
            self.order = int(self._table.shape[0])
        else:
            self._table = None
            self.order = int(perms.shape[0])
        if perms is not None and perms.shape[0] != self.order:
            raise MalformedGroup("permutation list and table disagree on the order")
        self._generators = tuple(int(g) for g in generators) if generators is not None else None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_permutations(
        cls,
        generators: Iterable[Permutation | Sequence[int]],
        label: str = "G",
        degree: int | None = None,
        cap: int | None = None,
    ) -> "FiniteGroup":
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if not gens:
            if degree is None:
                raise MalformedGroup("need a degree for a group without generators")
            gens = [Permutation.identity(degree)]
        deg = gens[0].degree
        ident = Permutation.identity(deg)
        elements = sorted(closure([ident, *gens], cap=cap))
        perms = np.array([p.images for p in elements], dtype=np.int32).reshape(len(elements), deg)
        group = cls(label, perms=perms, identity=0)
        group._generators = tuple(dict.fromkeys(group.index_of(g) for g in gens if not g.is_identity()))
        return group

    @classmethod
    def from_table(cls, table, label: str = "G", identity: int = 0) -> "FiniteGroup":
        return cls(label, table=np.asarray(table), identity=identity)

    # -- element access ---------------------------------------------------

    @property
    def degree(self) -> int | None:
        return None if self.perms is None else int(self.perms.shape[1])

    @property
    def is_permutation_group(self) -> bool:
        return self.perms is not None

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def perm(self, x: int) -> Permutation:
        if self.perms is None:
            raise TypeError(f"{self.label} is not a permutation group")
        return Permutation._trusted(tuple(int(i) for i in self.perms[x]))

    @cached_property
    def _index(self) -> dict[tuple, int]:
        return {tuple(int(i) for i in row): k for k, row in enumerate(self.perms)}

    def index_of(self, p: Permutation | Sequence[int]) -> int:
        images = p.images if isinstance(p, Permutation) else tuple(int(i) for i in p)
        try:
            return self._index[images]
        except KeyError:
            raise ElementNotInGroup(f"{images} is not an element of {self.label}") from None

    def element_name(self, x: int) -> str:
        if self.perms is not None:
            return self.perm(x).cycle_notation()
        return f"e{x}"

    def check_element(self, x: int) -> int:
        x = int(x)
        if not 0 <= x < self.order:
            raise ElementNotInGroup(f"{x} is not an element index of {self.label}")
        return x

    # -- multiplication ---------------------------------------------------

    @property
    def table(self) -> np.ndarray:
        if self._table is None:
            self._table = self._build_table()
        return self._table

    def _base(self) -> list[int]:
        """Points whose images determine an element uniquely."""
        P = self.perms
        stab = np.ones(self.order, dtype=bool)
        base: list[int] = []
        for point in range(P.shape[1]):
            if stab.sum() == 1:
                break
            narrowed = stab & (P[:, point] == point)
            if narrowed.sum() < stab.sum():
                base.append(point)
                stab = narrowed
        return base

    def _build_table(self) -> np.ndarray:
        n = self.order
        if n > TABLE_LIMIT:
            raise CapExceeded(f"refusing to build a {n}x{n} Cayley table (limit {TABLE_LIMIT})")
        P = self.perms.astype(np.int64)
        deg = P.shape[1]
        base = self._base() or [0]
        weights = np.array([deg**j for j in range(len(base))], dtype=np.int64)
        if deg ** len(base) >= 2**62:
            return self._build_table_slow()
        keys = P[:, base] @ weights
        order = np.argsort(keys)
        sorted_keys = keys[order]
        table = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            # (a*b)[beta] = b[a[beta]] for every b at once
            prod_keys = P[:, P[a, base]] @ weights
            table[a] = order[np.searchsorted(sorted_keys, prod_keys)]
        return table

    def _build_table_slow(self) -> np.ndarray:
        n = self.order
        table = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            prods = self.perms[:, self.perms[a]]
            table[a] = [self._index[tuple(int(i) for i in row)] for row in prods]
        return table

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def inverse(self) -> np.ndarray:
        return np.argmax(self.table == self.identity, axis=1).astype(np.int32)

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, x: int, g: int) -> int:
        """``x^g = g^-1 x g``."""
        t = self.table
        return int(t[t[self.inverse[g], x], g])

    def commutator(self, a: int, b: int) -> int:
        """``[a, b] = a^-1 b^-1 a b``."""
        t, inv = self.table, self.inverse
        return int(t[t[t[inv[a], inv[b]], a], b])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = int(self.inverse[x]), -k
        result = self.identity
        base = x
        while k:
            if k & 1:
                result = int(self.table[result, base])
            base = int(self.table[base, base])
            k >>= 1
        return result

    def conjugation_action(self, g: int) -> np.ndarray:
        """Array ``c`` with ``c[x] = g^-1 x g`` for every element ``x``."""
        t = self.table
        return t[t[self.inverse[g]], g]

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        idx = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        cur = idx.copy()
        k = 1
        while (orders == 0).any():
            done = (cur == self.identity) & (orders == 0)
            orders[done] = k
            cur = self.table[cur, idx]
            k += 1
        return orders

    def element_order(self, x: int) -> int:
        return int(self.element_orders[x])

    # -- generators and subgroups -----------------------------------------

    @property
    def generators(self) -> tuple[int, ...]:
        if self._generators is None:
            self._generators = self.whole().generators
        return self._generators

    def generate(
        self,
        elements: Iterable[int],
        start: "Subgroup | None" = None,
        limit: int | None = None,
    ) -> "Subgroup | None":
        """Subgroup generated by ``elements`` (together with ``start``).

        Returns ``None`` when the subgroup would exceed ``limit`` elements.
        """
        t = self.table
        mask = np.zeros(self.order, dtype=bool)
        if start is not None:
            mask[start.sorted] = True
            gens = list(start.generators)
        else:
            mask[self.identity] = True
            gens = []
        count = int(mask.sum())
        for x in elements:
            x = int(x)
            if mask[x]:
                continue
            gens.append(x)
            gen_arr = np.array(gens, dtype=np.int64)
            frontier = np.flatnonzero(mask)
            while frontier.size:
                prods = np.unique(t[frontier[:, None], gen_arr[None, :]])
                new = prods[~mask[prods]]
                mask[new] = True
                count += new.size
                if limit is not None and count > limit:
                    return None
                frontier = new
        return Subgroup(self, np.flatnonzero(mask), generators=gens)

    def whole(self) -> "Subgroup":
        if self._generators is not None:
            return Subgroup(self, range(self.order), generators=self._generators)
        return self.generate(range(self.order))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, [self.identity], generators=[])

    def subgroup(self, elements: Iterable[int], check: bool = True) -> "Subgroup":
        """Wrap an explicit element set, verifying closure when ``check``."""
        sub = Subgroup(self, elements)
        if check and not sub.is_closed():
            raise MalformedGroup("element set is not a subgroup")
        return sub

    def verify(self) -> None:
        """Check the group axioms on the stored table (and generators)."""
        t = self.table
        n = self.order
        e = self.identity
        if not (np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n))):
            raise MalformedGroup("identity row/column is wrong")
        srt = np.sort(t, axis=1)
        if not (srt == np.arange(n)).all() or not (np.sort(t, axis=0) == np.arange(n)[:, None]).all():
            raise MalformedGroup("table is not a Latin square")
        # Light's test: associativity against a generating set suffices.
        for g in self.generate(range(n)).generators:
            if not np.array_equal(t[t, g], t[:, t[:, g]]):
                raise MalformedGroup("table is not associative")
        if self._generators is not None and self.generate(self._generators).order != n:
            raise MalformedGroup("generators do not generate the stored element set")


class Subgroup:
    """A subset of a parent group's element indices that forms a subgroup."""

    def __init__(self, parent: FiniteGroup, elements: Iterable[int], generators: Sequence[int] | None = None):
        self.parent = parent
        arr = np.unique(np.fromiter((int(e) for e in elements), dtype=np.int64))
        self.sorted = arr
        self.elements = frozenset(arr.tolist())
        self._generators = tuple(int(g) for g in generators) if generators is not None else None

    @property
    def order(self) -> int:
        return int(self.sorted.size)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, x: int) -> bool:
        return int(x) in self.elements

    def __iter__(self):
        return iter(self.sorted.tolist())

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and other.parent is self.parent and other.elements == self.elements

    def __hash__(self) -> int:
        return hash((id(self.parent), self.elements))

    def __le__(self, other: "Subgroup") -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: "Subgroup") -> bool:
        return self.elements < other.elements

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, of {self.parent.label})"

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.sorted] = True
        return m

    @property
    def generators(self) -> tuple[int, ...]:
        if self._generators is None:
            self._generators = self.parent.generate(self.sorted).generators
        return self._generators

    def is_closed(self) -> bool:
        if self.parent.identity not in self.elements:
            return False
        prods = self.parent.table[self.sorted[:, None], self.sorted[None, :]]
        return bool(self.mask[prods].all())

    @cached_property
    def is_normal(self) -> bool:
        G = self.parent
        return all(self.mask[G.conjugation_action(g)[self.sorted]].all() for g in G.generators)

    def is_abelian(self) -> bool:
        t = self.parent.table
        s = self.sorted
        block = t[s[:, None], s[None, :]]
        return bool(np.array_equal(block, block.T))

    def is_trivial(self) -> bool:
        return self.order == 1

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.elements & other.elements)

    def join(self, other: "Subgroup") -> "Subgroup":
        return self.parent.generate(other.generators, start=self)


def orbits(n: int, actions: Sequence[np.ndarray], domain: np.ndarray | None = None) -> list[list[int]]:
    """Orbits of the group generated by ``actions`` (arrays on 0..n-1).

    Orbits are listed by least point; each orbit is sorted. Only points of
    ``domain`` (a boolean mask, default everything) are visited, so the domain
    must be invariant.
    """
    seen = np.zeros(n, dtype=bool) if domain is None else ~domain
    acts = [a.tolist() for a in actions]
    out = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for a in acts:
                y = a[x]
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
                    queue.append(y)
        orbit.sort()
        out.append(orbit)
    return out


def as_group(sub: Subgroup, label: str | None = None) -> FiniteGroup:
    """Re-index a subgroup as a group in its own right.

    The result carries ``embedding`` (local index -> parent index). Permutation
    data is kept when the parent has it, so elements still print as cycles.
    """
    G = sub.parent
    if sub.order == G.order:
        return G
    elems = sub.sorted
    local = np.full(G.order, -1, dtype=np.int64)
    local[elems] = np.arange(elems.size)
    table = local[G.table[elems[:, None], elems[None, :]]]
    perms = G.perms[elems] if G.perms is not None else None
    H = FiniteGroup(
        label or f"sub({G.label},{sub.order})",
        table=table,
        perms=perms,
        identity=int(local[G.identity]),
        generators=[int(local[g]) for g in sub.generators],
    )
    H.embedding = elems
    return H


def cap_check(order: int, what: str = "group") -> None:
    cap = order_cap()
    if order > cap:
        raise CapExceeded(f"{what} of order {order} exceeds cap {cap}")
