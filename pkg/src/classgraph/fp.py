"""Finite presentations: parsing, HLT coset enumeration, realization.

Accepted syntax (angle brackets optional)::

    < x, y, z | x^3 = y^4 = z^9 = 1, [x,y] = 1, z^y = z^-1, z^2 = xzxzx >

Words are juxtapositions (``*`` allowed) of generators, ``1``, parenthesized
words and commutators ``[u,v] = u^-1 v^-1 u v``. ``w^k`` is a power (negative
allowed, optionally braced as ``^{-1}``) and ``w^v`` for a word ``v`` is the
conjugate ``v^-1 w v``. A chain ``a = b = c`` becomes the relators ``a b^-1``
and ``b c^-1``; when a chain contains the empty word ``1`` every other member
becomes a relator by itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CosetLimitExceeded, InputError, PresentationSyntaxError, UnknownGenerator
from .group import FiniteGroup
from .perm import Permutation

DEFAULT_MAX_COSETS = 50_000

Letter = tuple[int, int]  # (generator index, +1 or -1)
Word = tuple[Letter, ...]


def free_reduce(word: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for g, e in word:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def inverse_word(word: Sequence[Letter]) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def power_word(word: Word, k: int) -> Word:
    base = word if k >= 0 else inverse_word(word)
    return free_reduce(base * abs(k))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        n = len(self.generators)
        for rel in self.relators:
            for g, e in rel:
                if not 0 <= g < n or e not in (1, -1):
                    raise UnknownGenerator(f"letter {(g, e)} references no declared generator")

    def word_str(self, word: Word) -> str:
        return unparse_word(word, self.generators)


# -- parsing ------------------------------------------------------------------

_OPEN = ("\\langle", "⟨", "<")
_CLOSE = ("\\rangle", "⟩", ">")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.names: list[str] = []

    def error(self, msg: str):
        raise PresentationSyntaxError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, *tokens: str) -> str | None:
        self.skip_ws()
        for tok in tokens:
            if self.text.startswith(tok, self.pos):
                self.pos += len(tok)
                return tok
        return None

    def expect(self, tok: str):
        if self.accept(tok) is None:
            self.error(f"expected {tok!r}")

    def identifier(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        name = self.text[start:self.pos]
        if not name or not (name[0].isalpha() or name[0] == "_"):
            self.pos = start
            self.error("expected a generator name")
        return name

    def presentation(self) -> Presentation:
        opened = self.accept(*_OPEN)
        self.names.append(self.identifier())
        while self.accept(","):
            self.names.append(self.identifier())
        if len(set(self.names)) != len(self.names):
            self.error("duplicate generator name")
        relators: list[Word] = []
        if self.accept("|", "\\mid"):
            if self.peek() not in ("", ">", "⟩", "\\"):
                relators.extend(self.relation())
                while self.accept(","):
                    relators.extend(self.relation())
        if opened:
            if self.accept(*_CLOSE) is None:
                self.error("expected closing bracket")
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing text")
        return Presentation(tuple(self.names), tuple(r for r in relators if r))

    def relation(self) -> list[Word]:
        chain = [self.word()]
        while self.accept("="):
            chain.append(self.word())
        if len(chain) == 1:
            return [chain[0]]
        if any(len(w) == 0 for w in chain):
            return [w for w in chain if w]
        return [free_reduce(a + inverse_word(b)) for a, b in zip(chain, chain[1:])]

    def word(self) -> Word:
        letters: list[Letter] = []
        got_any = False
        while True:
            self.accept("*")
            c = self.peek()
            if c == "" or c in ",=|]})>⟩" or self.text.startswith("\\rangle", self.pos):
                break
            letters.extend(self.term())
            got_any = True
        if not got_any:
            self.error("expected a word")
        return free_reduce(letters)

    def term(self) -> Word:
        base = self.atom()
        while self.accept("^"):
            base = self.exponent(base)
        return base

    def exponent(self, base: Word) -> Word:
        braced = self.accept("{") is not None
        self.skip_ws()
        start = self.pos
        sign = self.accept("-", "+")
        self.skip_ws()
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos > digits_start:
            k = int(self.text[digits_start:self.pos])
            result = power_word(base, -k if sign == "-" else k)
        elif sign is not None:
            self.pos = start
            self.error("expected an integer exponent")
        else:
            conj = self.word() if braced else self.atom()
            result = free_reduce(inverse_word(conj) + base + conj)
        if braced:
            self.expect("}")
        return result

    def atom(self) -> Word:
        if self.accept("("):
            w = self.word()
            self.expect(")")
            return w
        if self.accept("{"):
            w = self.word()
            self.expect("}")
            return w
        if self.accept("["):
            u = self.word()
            self.expect(",")
            v = self.word()
            self.expect("]")
            return free_reduce(inverse_word(u) + inverse_word(v) + u + v)
        self.skip_ws()
        if self.text.startswith("1", self.pos) and not self.text[self.pos + 1:self.pos + 2].isdigit():
            self.pos += 1
            return ()
        return self.generator_letters()

    def generator_letters(self) -> Word:
        """A run of juxtaposed generator names, split by longest match."""
        start = self.pos
        ident = self.identifier()
        letters: list[Letter] = []
        i = 0
        by_length = sorted(self.names, key=len, reverse=True)
        while i < len(ident):
            for name in by_length:
                if ident.startswith(name, i):
                    letters.append((self.names.index(name), 1))
                    i += len(name)
                    break
            else:
                self.pos = start + i
                raise UnknownGenerator(f"unknown generator at position {self.pos} in {ident!r}")
        # exponents bind to the last letter only: xz^2 = x z z
        if len(letters) > 1 and self.peek() == "^":
            tail = (letters.pop(),)
            self.pos = start + len(ident)
            rest = tuple(letters)
            while self.accept("^"):
                tail = self.exponent(tail)
            return rest + tail
        return tuple(letters)


def parse_presentation(text: str) -> Presentation:
    return _Parser(text.strip()).presentation()


def unparse_word(word: Word, names: Sequence[str]) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        g, e = word[i]
        j = i
        while j < len(word) and word[j] == (g, e):
            j += 1
        k = (j - i) * e
        parts.append(names[g] if k == 1 else f"{names[g]}^{k}")
        i = j
    return "*".join(parts)


def unparse(P: Presentation) -> str:
    rels = ", ".join(unparse_word(r, P.generators) for r in P.relators)
    return f"<{', '.join(P.generators)} | {rels}>"


# -- coset enumeration ----------------------------------------------------------


@dataclass
class CosetTable:
    """Closed coset table: ``rows[c][2*g]`` is c.g and ``rows[c][2*g+1]`` is c.g^-1."""

    rows: list[list[int]]
    n_generators: int

    @property
    def index(self) -> int:
        return len(self.rows)

    def action(self, g: int, inverse: bool = False) -> list[int]:
        col = 2 * g + int(inverse)
        return [row[col] for row in self.rows]

    def trace(self, coset: int, word: Word) -> int:
        for g, e in word:
            coset = self.rows[coset][2 * g + (e < 0)]
        return coset


class _Enumerator:
    """HLT enumeration with coincidence processing (Holt et al., ch. 5)."""

    def __init__(self, n_gens: int, max_cosets: int):
        self.ncols = 2 * n_gens
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]

    @staticmethod
    def col(letter: Letter) -> int:
        g, e = letter
        return 2 * g + (e < 0)

    def define(self, c: int, x: int):
        if len(self.table) >= self.max_cosets:
            raise CosetLimitExceeded(
                f"coset enumeration exceeded {self.max_cosets} cosets (group may be infinite)"
            )
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(d)
        self.table[c][x] = d
        self.table[d][x ^ 1] = c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def merge(self, a: int, b: int, queue: list[int]):
        ra, rb = self.rep(a), self.rep(b)
        if ra != rb:
            lo, hi = min(ra, rb), max(ra, rb)
            self.parent[hi] = lo
            queue.append(hi)

    def coincidence(self, a: int, b: int):
        queue: list[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            c = queue[i]
            i += 1
            row = self.table[c]
            for x in range(self.ncols):
                d = row[x]
                if d is None:
                    continue
                self.table[d][x ^ 1] = None
                mu, nu = self.rep(c), self.rep(d)
                if self.table[mu][x] is not None:
                    self.merge(nu, self.table[mu][x], queue)
                elif self.table[nu][x ^ 1] is not None:
                    self.merge(mu, self.table[nu][x ^ 1], queue)
                else:
                    self.table[mu][x] = nu
                    self.table[nu][x ^ 1] = mu

    def scan_and_fill(self, c: int, word: list[int]):
        t = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and t[f][word[i]] is not None:
                f = t[f][word[i]]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return
            while j >= i and t[b][word[j] ^ 1] is not None:
                b = t[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][word[i]] = b
                t[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])

    def live(self, c: int) -> bool:
        return self.parent[c] == c

    def run(self, relators: list[list[int]], subgroup: list[list[int]]) -> CosetTable:
        for w in subgroup:
            self.scan_and_fill(0, w)
        c = 0
        while c < len(self.table):
            for w in relators:
                if not self.live(c):
                    break
                self.scan_and_fill(c, w)
            if self.live(c):
                for x in range(self.ncols):
                    if self.table[c][x] is None:
                        self.define(c, x)
            c += 1
        return self.compact()

    def compact(self) -> CosetTable:
        live = [c for c in range(len(self.table)) if self.live(c)]
        renumber = {c: k for k, c in enumerate(live)}
        rows = [[renumber[self.rep(self.table[c][x])] for x in range(self.ncols)] for c in live]
        return CosetTable(rows, self.ncols // 2)


def todd_coxeter(
    P: Presentation,
    subgroup_words: Sequence[Word] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetTable:
    """Closed coset table of the subgroup generated by ``subgroup_words``."""
    if max_cosets < 1:
        raise InputError("max_cosets must be positive")
    enum = _Enumerator(len(P.generators), max_cosets)
    rels = [[enum.col(l) for l in r] for r in P.relators if r]
    subs = [[enum.col(l) for l in w] for w in subgroup_words if w]
    return enum.run(rels, subs)


def realize(P: Presentation, table: CosetTable, label: str = "fp") -> FiniteGroup:
    """Permutation group generated by the generators' actions on the cosets."""
    gens = [Permutation(table.action(g)) for g in range(len(P.generators))]
    G = FiniteGroup.from_permutations(gens, label, degree=table.index)
    G.presentation = P
    G.generator_elements = [G.index_of(g) for g in gens]
    return G


def evaluate(G: FiniteGroup, word: Word) -> int:
    """Value of a word in a realized group (needs ``generator_elements``)."""
    x = G.identity
    for g, e in word:
        y = G.generator_elements[g]
        x = G.mul(x, y if e > 0 else G.inv(y))
    return x


def realize_text(text: str, max_cosets: int = DEFAULT_MAX_COSETS, label: str = "fp") -> FiniteGroup:
    P = parse_presentation(text)
    return realize(P, todd_coxeter(P, max_cosets=max_cosets), label)


EXAMPLE_324 = (
    "<x,y,z | x^3=y^4=z^9=1, [x,y]=1, z^y=z^{-1}, "
    "z^2=xzxzx=x^{-1}zx^{-1}zx^{-1}>"
)
