"""Small finite fields GF(p^n) in polynomial representation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from sympy import isprime

from .errors import InputError


def _polymulmod(a: tuple[int, ...], b: tuple[int, ...], modulus: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Product of two residues (low degree first) modulo a monic polynomial."""
    n = len(modulus) - 1
    prod = [0] * (2 * n - 1 if n else 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            for j in range(n + 1):
                prod[k - n + j] = (prod[k - n + j] - c * modulus[j]) % p
    return tuple(prod[:n]) if n else ()


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p) by trial division."""
    n = len(poly) - 1
    if n <= 0:
        return False
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if _divides((*low, 1), poly, p):
                return False
    return True


def _divides(d: tuple[int, ...], f: tuple[int, ...], p: int) -> bool:
    rem = list(f)
    dd = len(d) - 1
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            for j in range(dd + 1):
                rem[k - dd + j] = (rem[k - dd + j] - c * d[j]) % p
    return not any(rem[:dd])


def least_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Least monic irreducible of degree n, coefficients compared low degree first."""
    for low in itertools.product(range(p), repeat=n):
        poly = (*low, 1)
        if is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")


class GaloisField:
    """GF(p^n) with elements encoded as integers ``sum c_i p^i``."""

    def __init__(self, p: int, n: int = 1):
        if not isprime(p) or n < 1:
            raise InputError(f"GF({p}^{n}) is not a field")
        self.p = p
        self.n = n
        self.size = p**n
        self.modulus = least_irreducible(p, n) if n > 1 else (0, 1)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.n})"

    def element(self, coefficients) -> "FieldElement":
        return FieldElement(self, tuple(int(c) % self.p for c in coefficients))

    def from_int(self, k: int) -> "FieldElement":
        coeffs = []
        for _ in range(self.n):
            coeffs.append(k % self.p)
            k //= self.p
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> list["FieldElement"]:
        return [self.from_int(k) for k in range(self.size)]

    @property
    def zero(self) -> "FieldElement":
        return self.from_int(0)

    @property
    def one(self) -> "FieldElement":
        return self.from_int(1)

    @cached_property
    def primitive_element(self) -> "FieldElement":
        """Least (by integer code) generator of the multiplicative group."""
        for k in range(1, self.size):
            x = self.from_int(k)
            if x.multiplicative_order() == self.size - 1:
                return x
        raise AssertionError("multiplicative group is not cyclic")


@dataclass(frozen=True)
class FieldElement:
    field: GaloisField
    coefficients: tuple[int, ...]

    def __int__(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coefficients))

    def __add__(self, other: "FieldElement") -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.coefficients))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        F = self.field
        if F.n == 1:
            return FieldElement(F, ((self.coefficients[0] * other.coefficients[0]) % F.p,))
        return FieldElement(F, _polymulmod(self.coefficients, other.coefficients, F.modulus, F.p))

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.field.size - 2)

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative order")
        x, k = self, 1
        while x != self.field.one:
            x = x * self
            k += 1
        return k

    def frobenius(self) -> "FieldElement":
        return self ** self.field.p

    def __repr__(self) -> str:
        return f"{self.field}[{int(self)}]"
