import random
from fractions import Fraction

import pytest
from hypothesis import given

from hmodular.clifford import CliffordElement
from hmodular.contexts import context_from_name
from hmodular.errors import ParseError
from hmodular.parsing import format_relator, parse_element, parse_relator
from hmodular.words import parse_word, random_word

from strategies import RING_NAMES, clifford

CONTEXTS = ("gamma:1", "gamma:2", "gamma:3", "gamma:4", "gamma:6") + RING_NAMES


def _random_element(ctx, rng):
    coeffs = [Fraction(rng.randint(-9, 9), rng.choice((1, 1, 1, 2, 3, 4))) for _ in range(ctx.dim)]
    if isinstance(ctx.one(), CliffordElement):
        return CliffordElement(ctx.n, dict(enumerate(coeffs)))
    return ctx.element(coeffs)


@pytest.mark.parametrize("name", CONTEXTS)
def test_print_parse_round_trip(name):
    ctx = context_from_name(name)
    rng = random.Random(name)
    for _ in range(1000):
        x = _random_element(ctx, rng)
        text = str(x)
        assert parse_element(text, ctx) == x
        assert str(parse_element(text, ctx)) == text


@given(clifford())
def test_canonical_form_is_idempotent(a):
    ctx = context_from_name(f"gamma:{a.n}")
    once = str(parse_element(str(a), ctx))
    assert str(parse_element(once, ctx)) == once


def test_examples():
    g4 = context_from_name("gamma:4")
    x = parse_element("1 - 2*i1*i3", g4)
    assert x.coeff((1, 3)) == -2 and x.coeff(()) == 1
    assert parse_element("i3*i1", g4) == -parse_element("i1*i3", g4)
    hur = context_from_name("hurwitz")
    w2 = parse_element("1/2 + 1/2*i + 1/2*j + 1/2*k", hur)
    assert w2.is_integral() and w2.norm_sq() == 1
    assert parse_element("2 i", hur) == parse_element("2*i", hur)
    imax = context_from_name("Imax:-7")
    w = parse_element("w", imax)
    assert w.coords == (0, 1) and w.norm_sq() == 2


@pytest.mark.parametrize("text, ctx, offset", [
    ("i3", "gamma:3", 0),
    ("1 + i5", "gamma:4", 4),
    ("1 +", "gamma:2", 3),
    ("1/0", "Z", 2),
    ("2 * * i", "lipschitz", 4),
    ("x", "hurwitz", 0),
    ("", "Z", 0),
    ("1 ) 2", "Z", 2),
])
def test_parse_errors_carry_offsets(text, ctx, offset):
    with pytest.raises(ParseError) as info:
        parse_element(text, context_from_name(ctx))
    assert info.value.offset == offset


def test_word_round_trip():
    for name in ("gamma:3", "Imax:-3", "hurwitz"):
        ctx = context_from_name(name)
        rng = random.Random(1)
        for _ in range(50):
            w = random_word(ctx, 12, rng)
            assert parse_word(str(w), ctx) == w


def test_word_error_offset():
    ctx = context_from_name("gamma:3")
    with pytest.raises(ParseError) as info:
        parse_word("E(i1) E(i7)", ctx)
    assert info.value.offset == 8
    with pytest.raises(ParseError):
        parse_word("E(i1) F(0)", ctx)
    with pytest.raises(ParseError):
        parse_word("Diag(1)", ctx)


def test_relators():
    rel = parse_relator("a^2 c^-3 j")
    assert rel == (("a", 1), ("a", 1), ("c", -1), ("c", -1), ("c", -1), ("j", 1))
    assert format_relator(rel) == "a a c^-1 c^-1 c^-1 j"
    assert parse_relator("a^0") == ()
    with pytest.raises(ParseError):
        parse_relator("a b", generators=["a"])
    with pytest.raises(ParseError):
        parse_relator("a^x")
