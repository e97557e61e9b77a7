"""Permutations on {0, ..., n-1} and breadth-first closure.

Products act left to right: ``(a * b)[i] == b[a[i]]``, i.e. apply ``a`` first.
This matches right actions (coset tables, row vectors times matrices).
"""

from __future__ import annotations

import math
import os
from collections import deque
from typing import Callable, Hashable, Iterable, Sequence, TypeVar

from .errors import CapExceeded, IncompatibleDegrees, MalformedGroup

DEFAULT_ORDER_CAP = 100_000


def order_cap() -> int:
    """Order cap, overridable with ``CLASSGRAPH_ORDER_CAP``."""
    raw = os.environ.get("CLASSGRAPH_ORDER_CAP")
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise MalformedGroup(f"CLASSGRAPH_ORDER_CAP must be an integer, got {raw!r}")
    if cap < 1:
        raise MalformedGroup("CLASSGRAPH_ORDER_CAP must be positive")
    return cap


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise MalformedGroup(f"not a bijection on 0..{len(images) - 1}: {list(images)}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(other.images) != len(self.images):
            raise IncompatibleDegrees(f"degrees {self.degree} and {other.degree}")
        o = other.images
        return Permutation._trusted(tuple(o[i] for i in self.images))

    def __invert__(self) -> "Permutation":
        return self.inverse()

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_notation()}, degree={self.degree})"


T = TypeVar("T", bound=Hashable)


def closure(
    generators: Iterable[T],
    multiply: Callable[[T, T], T] | None = None,
    cap: int | None = None,
) -> set[T]:
    """Smallest set containing ``generators`` closed under ``multiply``.

    For a finite group, closure under products alone already contains all
    inverses and the identity. Raises ``CapExceeded`` once the set grows past
    ``cap`` (default: the order cap).
    """
    gens = list(dict.fromkeys(generators))
    if not gens:
        raise ValueError("closure needs at least one generator")
    if multiply is None:
        multiply = _mul
        degrees = {g.degree for g in gens}
        if len(degrees) > 1:
            raise IncompatibleDegrees(f"generators of mixed degrees {sorted(degrees)}")
    cap = order_cap() if cap is None else cap
    seen = set(gens)
    queue = deque(gens)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = multiply(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceeded(f"closure exceeded cap of {cap} elements")
                queue.append(y)
    return seen


def _mul(a, b):
    return a * b
