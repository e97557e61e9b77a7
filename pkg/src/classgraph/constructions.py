"""Builders for the group families used as examples and corpus members."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from sympy import isprime

from .core import center, conjugacy_classes_in, normal_subgroups
from .errors import ActionNotAutomorphism, InputError
from .field import GaloisField
from .fp import EXAMPLE_324, realize_text
from .group import FiniteGroup, Subgroup, cap_check
from .perm import Permutation


def _perm_group(label: str, degree: int, gens: Sequence[Sequence[int]]) -> FiniteGroup:
    return FiniteGroup.from_permutations([Permutation(g) for g in gens], label, degree=degree)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError("cyclic(n) needs n >= 1")
    cap_check(n)
    return _perm_group(f"C{n}", n, [[(i + 1) % n for i in range(n)]])


def elementary_abelian(p: int, s: int) -> FiniteGroup:
    if not isprime(p) or s < 1:
        raise InputError(f"elementary_abelian({p}, {s}) needs a prime and s >= 1")
    cap_check(p**s)
    n = p**s
    gens = []
    for i in range(s):
        step = p**i
        gens.append([_add_digit(x, step, p, i) for x in range(n)])
    return _perm_group(f"E{p}^{s}", n, gens)


def _add_digit(x: int, step: int, p: int, i: int) -> int:
    digit = (x // step) % p
    return x - digit * step + ((digit + 1) % p) * step


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n."""
    if n < 1:
        raise InputError("dihedral(n) needs n >= 1")
    cap_check(2 * n)
    if n == 1:
        G = cyclic(2)
    elif n == 2:
        G = elementary_abelian(2, 2)
    else:
        rot = [(i + 1) % n for i in range(n)]
        ref = [(-i) % n for i in range(n)]
        G = _perm_group(f"D{2 * n}", n, [rot, ref])
    G.label = f"D{2 * n}"
    return G


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError("symmetric(n) needs n >= 1")
    cap_check(math.factorial(n))
    gens = []
    if n >= 2:
        gens.append([1, 0] + list(range(2, n)))
    if n >= 3:
        gens.append([(i + 1) % n for i in range(n)])
    return _perm_group(f"S{n}", n, gens)


def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError("alternating(n) needs n >= 1")
    cap_check(max(1, math.factorial(n) // 2))
    gens = [Permutation.from_cycles(n, (0, 1, i)).images for i in range(2, n)]
    return _perm_group(f"A{n}", n, gens)


def extraspecial_p3(p: int) -> FiniteGroup:
    """Heisenberg group of upper unitriangular 3x3 matrices mod p (exponent p).

    Realized on row vectors of GF(p)^3: (a, b, c) -> (a, ax + b, az + by + c).
    """
    if p == 2 or not isprime(p):
        raise InputError(f"extraspecial_p3 needs an odd prime, got {p}")
    cap_check(p**3)
    vecs = list(itertools.product(range(p), repeat=3))
    code = {v: i for i, v in enumerate(vecs)}

    def act(x, y, z):
        return [code[(a, (a * x + b) % p, (a * z + b * y + c) % p)] for a, b, c in vecs]

    return _perm_group(f"Heis({p})", len(vecs), [act(1, 0, 0), act(0, 1, 0)])


# -- products ---------------------------------------------------------------


class Product(NamedTuple):
    group: FiniteGroup
    left: Subgroup
    right: Subgroup


def direct_product_parts(A: FiniteGroup, B: FiniteGroup, label: str | None = None) -> Product:
    """A x B together with the embedded factors."""
    cap_check(A.order * B.order)
    label = label or f"{A.label}x{B.label}"
    if A.is_permutation_group and B.is_permutation_group:
        da, db = A.degree, B.degree
        left = [list(A.perm(g).images) + list(range(da, da + db)) for g in A.generators]
        right = [list(range(da)) + [da + i for i in B.perm(g).images] for g in B.generators]
        G = _perm_group(label, da + db, left + right)
        left_sub = G.generate([G.index_of(g) for g in left])
        right_sub = G.generate([G.index_of(g) for g in right])
        return Product(G, left_sub, right_sub)
    # Cayley-table product, element (a, b) -> a * |B| + b
    ta, tb = A.table, B.table
    na, nb = A.order, B.order
    a = np.repeat(np.arange(na), nb)
    b = np.tile(np.arange(nb), na)
    table = ta[a[:, None], a[None, :]] * nb + tb[b[:, None], b[None, :]]
    G = FiniteGroup(label, table=table, identity=A.identity * nb + B.identity)
    left_sub = G.generate([g * nb + B.identity for g in A.generators])
    right_sub = G.generate([A.identity * nb + g for g in B.generators])
    return Product(G, left_sub, right_sub)


def direct_product(A: FiniteGroup, B: FiniteGroup, label: str | None = None) -> FiniteGroup:
    return direct_product_parts(A, B, label).group


@dataclass
class GroupAction:
    """Right action of a group on ``target`` by automorphisms.

    ``actors[i]`` is an element index of the acting group and ``images[i]``
    maps each generator of ``target`` to its image under that actor.
    """

    target: FiniteGroup
    actors: list[int]
    images: list[dict[int, int]]

    def automorphism(self, i: int) -> np.ndarray:
        """Extend the i-th generator-image map to an array on all of target."""
        K = self.target
        gens = list(K.generators)
        img = self.images[i]
        if set(img) != set(gens):
            raise ActionNotAutomorphism("images must be given for exactly the target's generators")
        phi = np.full(K.order, -1, dtype=np.int64)
        phi[K.identity] = K.identity
        frontier = [K.identity]
        t = K.table
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(t[x, g])
                    val = int(t[phi[x], img[g]])
                    if phi[y] == -1:
                        phi[y] = val
                        nxt.append(y)
                    elif phi[y] != val:
                        raise ActionNotAutomorphism(f"actor {i} is not a homomorphism of {K.label}")
            frontier = nxt
        if len(set(phi.tolist())) != K.order:
            raise ActionNotAutomorphism(f"actor {i} is not bijective on {K.label}")
        # homomorphism on every pair, not only along the generator tree
        if not np.array_equal(phi[t], t[phi[:, None], phi[None, :]]):
            raise ActionNotAutomorphism(f"actor {i} is not a homomorphism of {K.label}")
        return phi


def semidirect_product_parts(
    K: FiniteGroup, H: FiniteGroup, action: GroupAction, label: str | None = None
) -> Product:
    """K x| H on the points K (right regular, twisted by H) plus H's own domain."""
    cap_check(K.order * H.order)
    label = label or f"{K.label}:{H.label}"
    if sorted(action.actors) != sorted(H.generators):
        raise ActionNotAutomorphism("actors must be exactly the generators of the acting group")
    nk = K.order
    if H.is_permutation_group:
        dh = H.degree
        h_images = {h: H.perm(h).images for h in H.generators}
    else:
        dh = H.order
        h_images = {h: tuple(int(v) for v in H.table[:, h]) for h in H.generators}
    k_gens = []
    for g in K.generators:
        k_gens.append([int(K.table[x, g]) for x in range(nk)] + [nk + i for i in range(dh)])
    h_gens = []
    for i, h in enumerate(action.actors):
        phi = action.automorphism(i)
        h_gens.append(phi.tolist() + [nk + j for j in h_images[h]])
    G = _perm_group(label, nk + dh, k_gens + h_gens)
    if G.order != K.order * H.order:
        raise ActionNotAutomorphism(
            f"action does not respect the relations of {H.label} (got order {G.order})"
        )
    left = G.generate([G.index_of(g) for g in k_gens])
    right = G.generate([G.index_of(g) for g in h_gens])
    return Product(G, left, right)


def semidirect_product(K: FiniteGroup, H: FiniteGroup, action: GroupAction, label: str | None = None) -> FiniteGroup:
    return semidirect_product_parts(K, H, action, label).group


def cyclic_power_action(K: FiniteGroup, H: FiniteGroup, exponent: int) -> GroupAction:
    """Cyclic H (one generator) acting on cyclic K by x -> x^exponent."""
    (h,) = H.generators
    (g,) = K.generators
    return GroupAction(K, [h], [{g: K.power(g, exponent)}])


# -- affine and semilinear groups --------------------------------------------


def _vector_codes(p: int, s: int) -> list[tuple[int, ...]]:
    # vector (v0, ..., v_{s-1}) has code sum v_i p^i
    return [tuple((k // p**i) % p for i in range(s)) for k in range(p**s)]


def _vec_code(v: Sequence[int], p: int) -> int:
    return sum(int(c) * p**i for i, c in enumerate(v))


def _matrix_action(M: Sequence[Sequence[int]], p: int, s: int) -> list[int]:
    """Permutation v -> v M on row vectors of GF(p)^s."""
    out = []
    for v in _vector_codes(p, s):
        w = [sum(v[i] * M[i][j] for i in range(s)) % p for j in range(s)]
        out.append(_vec_code(w, p))
    return out


def _translation(b: Sequence[int], p: int, s: int) -> list[int]:
    return [_vec_code([(x + y) % p for x, y in zip(v, b)], p) for v in _vector_codes(p, s)]


class SemilinearAffine(NamedTuple):
    group: FiniteGroup
    K: Subgroup
    H: Subgroup
    alpha: int
    field: GaloisField


def semilinear_affine(p: int, n: int) -> SemilinearAffine:
    """Gamma(p^n) = K (H <alpha>) acting on the points of GF(p^n)."""
    if not isprime(p) or n < 1:
        raise InputError(f"semilinear_affine({p}, {n}) needs a prime and n >= 1")
    q = p**n
    cap_check(q * (q - 1) * n)
    F = GaloisField(p, n)
    elems = F.elements()
    translations = [[int(x + F.from_int(p**i)) for x in elems] for i in range(n)]
    omega = F.primitive_element
    mult = [int(x * omega) for x in elems]
    frob = [int(x.frobenius()) for x in elems]
    gens = translations + [mult] + ([frob] if n > 1 else [])
    G = _perm_group(f"GammaL1({p}^{n})", q, gens)
    if G.order != q * (q - 1) * n:
        raise AssertionError(f"semilinear group has order {G.order}")
    K = G.generate([G.index_of(t) for t in translations])
    H = G.generate([G.index_of(mult)])
    alpha = G.index_of(frob)
    return SemilinearAffine(G, K, H, alpha, F)


class SemilinearPair(NamedTuple):
    group: FiniteGroup
    N: Subgroup
    K: Subgroup
    S: Subgroup


def semilinear_example(p: int = 5, n: int = 2, s: int = 3) -> SemilinearPair:
    """G = Gamma(p^n) and N = K S with S the order-s subgroup of H.

    With s = 3 and n = 2 the non-trivial G-classes of N have sizes p^2 - 1
    and 2 p^2; for p = 2 these (3 and 8) are coprime and Gamma_G(N) splits.
    """
    q = p**n
    if (q - 1) % s:
        raise InputError(f"s = {s} does not divide {q} - 1")
    built = semilinear_affine(p, n)
    G = built.group
    (m,) = built.H.generators
    S = G.generate([G.power(m, (q - 1) // s)])
    N = G.generate(S.generators, start=built.K)
    return SemilinearPair(G, N, built.K, S)


class HolomorphPair(NamedTuple):
    group: FiniteGroup
    N: Subgroup


def gl_order(s: int, p: int) -> int:
    return math.prod(p**s - p**i for i in range(s))


def _gl_generators(p: int, s: int) -> list[list[list[int]]]:
    F = GaloisField(p)
    omega = int(F.primitive_element)
    gens = []
    diag = [[int(i == j) for j in range(s)] for i in range(s)]
    diag[0][0] = omega
    if omega != 1:
        gens.append(diag)
    for i in range(s):
        for j in range(s):
            if i != j:
                M = [[int(a == b) for b in range(s)] for a in range(s)]
                M[i][j] = 1
                gens.append(M)
    return gens


def holomorph_elementary_abelian(p: int, s: int) -> HolomorphPair:
    """Hol(E) = E x| GL(s, p) for E elementary abelian of order p^s."""
    if not isprime(p) or s < 1:
        raise InputError(f"holomorph({p}, {s}) needs a prime and s >= 1")
    order = p**s * gl_order(s, p)
    cap_check(order)
    basis = [[int(i == j) for j in range(s)] for i in range(s)]
    translations = [_translation(b, p, s) for b in basis]
    linear = [_matrix_action(M, p, s) for M in _gl_generators(p, s)]
    G = _perm_group(f"Hol(E{p}^{s})", p**s, translations + linear)
    if G.order != order:
        raise AssertionError(f"holomorph has order {G.order}, expected {order}")
    N = G.generate([G.index_of(t) for t in translations])
    return HolomorphPair(G, N)


# -- SL(2,5) acting on Z_11^2 -------------------------------------------------

Mat2 = tuple[int, int, int, int]


def _m2mul(a: Mat2, b: Mat2, q: int) -> Mat2:
    return (
        (a[0] * b[0] + a[1] * b[2]) % q,
        (a[0] * b[1] + a[1] * b[3]) % q,
        (a[2] * b[0] + a[3] * b[2]) % q,
        (a[2] * b[1] + a[3] * b[3]) % q,
    )


def _m2pow(a: Mat2, k: int, q: int) -> Mat2:
    out: Mat2 = (1, 0, 0, 1)
    for _ in range(k):
        out = _m2mul(out, a, q)
    return out


def _m2inv(a: Mat2, q: int) -> Mat2:
    det = (a[0] * a[3] - a[1] * a[2]) % q
    d = pow(det, -1, q)
    return ((a[3] * d) % q, (-a[1] * d) % q, (-a[2] * d) % q, (a[0] * d) % q)


def binary_icosahedral(q: int = 11) -> list[Mat2]:
    """SL(2,5) inside SL(2,q), from the lexicographically first pair (s, t)
    with s^3 = t^5 = (st)^2 = -I, s != -I != t, generating 120 elements."""
    ident: Mat2 = (1, 0, 0, 1)
    minus: Mat2 = (q - 1, 0, 0, q - 1)
    sl = [m for m in itertools.product(range(q), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % q == 1]
    sixes = [m for m in sl if m != minus and _m2pow(m, 3, q) == minus]
    tens = [m for m in sl if m != minus and _m2pow(m, 5, q) == minus]
    for s in sixes:
        for t in tens:
            st = _m2mul(s, t, q)
            if _m2mul(st, st, q) != minus:
                continue
            group = {ident}
            frontier = [ident]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in (s, t):
                        y = _m2mul(x, g, q)
                        if y not in group:
                            group.add(y)
                            nxt.append(y)
                frontier = nxt
            if len(group) == 120:
                return sorted(group)
    raise AssertionError(f"no binary icosahedral subgroup found in SL(2,{q})")


class FrobeniusExample(NamedTuple):
    group: FiniteGroup
    N: Subgroup
    K: Subgroup
    P: Subgroup
    normalizer_order: int
    sl25_order: int


def sl25_frobenius_example(q: int = 11) -> FrobeniusExample:
    """K = Z_q^2 with N = K P and G = K N_H(P), H = SL(2,5) <= SL(2,q), P Sylow-5."""
    H = binary_icosahedral(q)
    ident: Mat2 = (1, 0, 0, 1)
    fives = [m for m in H if m != ident and _m2pow(m, 5, q) == ident]
    gen_p = min(fives)
    P = {_m2pow(gen_p, k, q) for k in range(5)}
    normalizer = sorted(
        h for h in H if {_m2mul(_m2mul(_m2inv(h, q), x, q), h, q) for x in P} == P
    )

    def as_perm(m: Mat2) -> list[int]:
        return _matrix_action([[m[0], m[1]], [m[2], m[3]]], q, 2)

    translations = [_translation(b, q, 2) for b in ([1, 0], [0, 1])]
    G = _perm_group(f"Z{q}^2:N(P)", q * q, translations + [as_perm(h) for h in normalizer if h != ident])
    if G.order != q * q * len(normalizer):
        raise AssertionError(f"affine group has order {G.order}")
    K = G.generate([G.index_of(t) for t in translations])
    Psub = G.generate([G.index_of(as_perm(gen_p))])
    N = G.generate(Psub.generators, start=K)
    return FrobeniusExample(G, N, K, Psub, len(normalizer), len(H))


class NamedPair(NamedTuple):
    group: FiniteGroup
    N: Subgroup


def extraspecial_times_s3(p: int = 3) -> NamedPair:
    """G = P x S_3 and N = P x A_3 with P extraspecial of order p^3."""
    P = extraspecial_p3(p)
    S3 = symmetric(3)
    G, left, right = direct_product_parts(P, S3, f"Heis({p})xS3")
    rot = [x for x in right if G.element_order(x) == 3]
    N = G.generate(rot, start=left)
    return NamedPair(G, N)


def s3_a3() -> NamedPair:
    G = symmetric(3)
    (A3,) = [M for M in normal_subgroups(G) if M.order == 3]
    return NamedPair(G, A3)


def frobenius_cyclic(p: int, m: int) -> Product:
    """Z_p x| Z_m with Z_m acting faithfully by powers (m | p - 1)."""
    if not isprime(p) or m < 1 or (p - 1) % m:
        raise InputError(f"frobenius_cyclic({p}, {m}) needs a prime p with m | p - 1")
    F = GaloisField(p)
    r = int(F.primitive_element ** ((p - 1) // m))
    K, H = cyclic(p), cyclic(m)
    G, Ksub, Hsub = semidirect_product_parts(K, H, cyclic_power_action(K, H, r), f"F{p}:{m}")
    return Product(G, Ksub, Hsub)


def order9_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Normal subgroups of order 9 and exponent 3 whose G-classes have sizes {1, 2, 3}."""
    orders = G.element_orders
    return [
        M
        for M in normal_subgroups(G)
        if M.order == 9
        and M.is_abelian()
        and set(orders[M.sorted].tolist()) <= {1, 3}
        and {c.size for c in conjugacy_classes_in(G, M)} == {1, 2, 3}
    ]


def fp324() -> tuple[FiniteGroup, dict[str, Subgroup]]:
    """The order-324 presented group with its distinguished Z_3 x Z_3."""
    G = realize_text(EXAMPLE_324, label="fp324")
    found = order9_normal_subgroups(G)
    if len(found) != 1:
        raise AssertionError(f"expected one distinguished subgroup of order 9, found {len(found)}")
    return G, {"N": found[0]}


def _whole(G: FiniteGroup) -> tuple[FiniteGroup, dict[str, Subgroup]]:
    return G, {}


def _semilinear(p: int, n: int, s: int | None = None):
    if s is None:
        b = semilinear_affine(p, n)
        return b.group, {"K": b.K, "H": b.H}
    b = semilinear_example(p, n, s)
    return b.group, {"K": b.K, "S": b.S, "N": b.N}


def _sl25():
    b = sl25_frobenius_example()
    return b.group, {"K": b.K, "P": b.P, "N": b.N}


def _holomorph(p: int, s: int):
    b = holomorph_elementary_abelian(p, s)
    return b.group, {"N": b.N}


def _extraspecial(p: int):
    G = extraspecial_p3(p)
    return G, {"Z": center(G)}


def _extraspecial_x_s3(p: int):
    b = extraspecial_times_s3(p)
    return b.group, {"N": b.N}


def _frobenius(p: int, m: int):
    b = frobenius_cyclic(p, m)
    return b.group, {"K": b.left, "H": b.right}


# name -> (required parameters, optional parameters, builder)
FAMILIES = {
    "cyclic": (("n",), (), lambda n: _whole(cyclic(n))),
    "elementary_abelian": (("p", "s"), (), lambda p, s: _whole(elementary_abelian(p, s))),
    "dihedral": (("n",), (), lambda n: _whole(dihedral(n))),
    "symmetric": (("n",), (), lambda n: _whole(symmetric(n))),
    "alternating": (("n",), (), lambda n: _whole(alternating(n))),
    "extraspecial": (("p",), (), _extraspecial),
    "semilinear": (("p", "n"), ("s",), _semilinear),
    "holomorph": (("p", "s"), (), _holomorph),
    "sl25": ((), (), _sl25),
    "extraspecial_x_s3": (("p",), (), _extraspecial_x_s3),
    "frobenius_cyclic": (("p", "m"), (), _frobenius),
    "fp324": ((), (), fp324),
}


def construct(name: str, **params) -> tuple[FiniteGroup, dict[str, Subgroup]]:
    """Build a named family member with its distinguished subgroups."""
    try:
        required, optional, builder = FAMILIES[name]
    except KeyError:
        raise InputError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}") from None
    missing = [k for k in required if params.get(k) is None]
    if missing:
        raise InputError(f"family {name!r} needs parameters {missing}")
    kwargs = {k: int(params[k]) for k in required}
    kwargs.update({k: int(params[k]) for k in optional if params.get(k) is not None})
    return builder(**kwargs)


def build_family(name: str, **params) -> FiniteGroup:
    return construct(name, **params)[0]
