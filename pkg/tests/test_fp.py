import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce as bf
from classgraph.constructions import fp324, order9_normal_subgroups
from classgraph.core import conjugacy_classes, conjugacy_classes_in
from classgraph.errors import CosetLimitExceeded, InputError, PresentationSyntaxError, UnknownGenerator
from classgraph.fp import (
    EXAMPLE_324,
    evaluate,
    inverse_word,
    parse_presentation,
    realize,
    realize_text,
    todd_coxeter,
    unparse,
)


def w(*letters):
    """Word from (generator, exponent) pairs written as ints: 1 -> (0,1), -2 -> (1,-1)."""
    return tuple((abs(k) - 1, 1 if k > 0 else -1) for k in letters)


@pytest.fixture(scope="module")
def group324():
    return fp324()


def test_parse_cyclic():
    P = parse_presentation("<x | x^3>")
    assert P.generators == ("x",)
    assert P.relators == (w(1, 1, 1),)


def test_parse_s3():
    P = parse_presentation("⟨a,b | a^2, b^3, (ab)^2⟩")
    assert P.relators == (w(1, 1), w(2, 2, 2), w(1, 2, 1, 2))


def test_parse_324():
    P = parse_presentation(EXAMPLE_324)
    assert P.generators == ("x", "y", "z")
    x, y, z = 1, 2, 3
    xzxzx = w(x, z, x, z, x)
    other = w(-x, z, -x, z, -x)
    assert P.relators == (
        w(x, x, x),
        w(y, y, y, y),
        w(*[z] * 9),
        w(-x, -y, x, y),
        w(-y, z, y, z),
        w(z, z) + inverse_word(xzxzx),
        xzxzx + inverse_word(other),
    )


def test_chain_flattening_adjacent_pairs():
    P = parse_presentation("<a,b,c | a = b = c>")
    assert P.relators == (w(1, -2), w(2, -3))


def test_conjugation_and_negative_powers():
    P = parse_presentation("<a,b | a^b, b^-2, a^{-1}>")
    assert P.relators == (w(-2, 1, 2), w(-2, -2), w(-1))


def test_syntax_errors():
    for bad in ("<x | x^>", "<x | (x>", "<x, | x>", "<x | x^x^>"):
        with pytest.raises(PresentationSyntaxError):
            parse_presentation(bad)
    with pytest.raises(UnknownGenerator):
        parse_presentation("<x | y>")


def test_enumeration_orders():
    assert todd_coxeter(parse_presentation("<x | x^3>")).index == 3
    assert todd_coxeter(parse_presentation("<a,b | a^2, b^3, (ab)^2>")).index == 6


def test_s3_realization_matches_oracle():
    G = realize_text("<a,b | a^2, b^3, (ab)^2>")
    assert G.order == 6
    assert sorted(c.size for c in conjugacy_classes(G)) == [1, 2, 3]
    E = bf.elements([G.perm(g).images for g in G.generators], G.degree)
    assert len(E) == 6
    assert sorted(len(c) for c in bf.classes(E)) == [1, 2, 3]


def test_realized_relators_vanish():
    G = realize_text("<a,b | a^2, b^3, (ab)^2>")
    for rel in G.presentation.relators:
        assert evaluate(G, rel) == G.identity


def test_coset_limit_on_free_group():
    with pytest.raises(CosetLimitExceeded):
        realize_text("<x,y | >")
    with pytest.raises(CosetLimitExceeded):
        realize_text("<x | x^50>", max_cosets=10)
    with pytest.raises(InputError):
        realize_text("<x | x^2>", max_cosets=0)


def test_subgroup_cosets():
    P = parse_presentation("<a,b | a^2, b^3, (ab)^2>")
    assert todd_coxeter(P, [w(2)]).index == 2
    assert todd_coxeter(P, [w(1)]).index == 3


def test_324(group324):
    G, subs = group324
    assert G.order == 324
    for rel in G.presentation.relators:
        assert evaluate(G, rel) == G.identity
    N = subs["N"]
    assert N.order == 9 and N.is_abelian()
    assert {c.size for c in conjugacy_classes_in(G, N)} == {1, 2, 3}
    assert order9_normal_subgroups(G) == [N]


def test_realize_is_regular():
    P = parse_presentation("<a,b | a^4, b^2, (ab)^2>")
    T = todd_coxeter(P)
    G = realize(P, T)
    assert G.order == T.index == 8


# -- round trip ---------------------------------------------------------------------

EXAMPLES = ["<x | x^3>", "<a,b | a^2, b^3, (ab)^2>", EXAMPLE_324, "<a,b | [a,b], a^b = a^-1>"]


@pytest.mark.parametrize("text", EXAMPLES)
def test_round_trip(text):
    P = parse_presentation(text)
    assert parse_presentation(unparse(P)) == P


names = st.sampled_from(["a", "b", "c"])
atoms = st.recursive(
    names,
    lambda inner: st.one_of(
        st.tuples(inner, st.integers(-3, 3)).map(lambda t: f"({t[0]})^{t[1]}"),
        st.tuples(inner, inner).map(lambda t: f"[{t[0]},{t[1]}]"),
        st.tuples(inner, names).map(lambda t: f"({t[0]})^{t[1]}"),
        st.lists(inner, min_size=1, max_size=3).map(" ".join),
    ),
    max_leaves=6,
)


@settings(max_examples=60)
@given(st.lists(atoms, min_size=1, max_size=4))
def test_round_trip_property(words):
    text = "<a,b,c | " + ", ".join(words) + ">"
    P = parse_presentation(text)
    assert parse_presentation(unparse(P)) == P
