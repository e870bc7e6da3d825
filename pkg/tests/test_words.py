import random

import pytest

from hmodular.clifford import CliffordElement
from hmodular.contexts import context_from_name, gamma
from hmodular.errors import NotAMember, UnsupportedContext
from hmodular.vahlen import D, E, VahlenMatrix, diag
from hmodular.words import (
    Diagtok,
    Dtok,
    Etok,
    GenWord,
    InvalidToken,
    alpha_relation_holds,
    de2_decompose,
    decompose,
    eval_word,
    norm_2_3_elements,
    parse_word,
    random_word,
    verify_relation_families,
)

ROUND_TRIP = ("gamma:1", "gamma:2", "gamma:3", "gamma:4", "Z", "Imax:-1", "Imax:-2", "Imax:-3",
              "Imax:-7", "Imax:-11", "Zsqrt:-3", "lipschitz", "hurwitz", "O3", "O5")


@pytest.mark.parametrize("name", ROUND_TRIP)
def test_decompose_round_trip(name):
    ctx = context_from_name(name)
    rng = random.Random(name)
    for _ in range(60):
        m = eval_word(random_word(ctx, rng.randint(0, 25), rng))
        trace = []
        w = decompose(m, trace)
        assert eval_word(w) == m
        # the upper-right norm strictly drops at every step
        assert all(b < a for a, b in zip(trace, trace[1:]))
        if name.startswith("gamma"):
            assert w.elem_only()


def test_decompose_small_examples():
    g = gamma(2)
    assert len(decompose(VahlenMatrix.identity(g))) == 0
    x = g.parse("1 + i1")
    assert str(decompose(E(g, x))) == "E(1 + i1)"
    assert eval_word(decompose(-VahlenMatrix.identity(g))) == -VahlenMatrix.identity(g)
    z = context_from_name("Z")
    assert eval_word(decompose(VahlenMatrix(z, 2, 1, 1, 1))) == VahlenMatrix(z, 2, 1, 1, 1)


def test_decompose_diag_token_for_quaternions():
    L = context_from_name("lipschitz")
    i, j = L.parse("i"), L.parse("j")
    assert str(decompose(diag(L, i, j))) == "Diag(i, j)"
    # diag(mu, mu^-1) is elementary
    w = decompose(diag(L, i, i.inverse()))
    assert w.elem_only() and eval_word(w) == diag(L, i, -i)


def test_decompose_errors():
    with pytest.raises(UnsupportedContext):
        decompose(VahlenMatrix.identity(gamma(5)))
    with pytest.raises(NotAMember):
        decompose(VahlenMatrix(gamma(3), 2, 0, 0, "1/2"))
    with pytest.raises(UnsupportedContext):
        decompose(VahlenMatrix.identity(context_from_name("Imax:-19")))
    with pytest.raises(UnsupportedContext):
        decompose(VahlenMatrix.identity(context_from_name("Zsqrt:-5")))
    with pytest.raises(NotAMember):
        decompose(VahlenMatrix(context_from_name("hurwitz"), "1+i", 0, 0, 1))


def test_de2_decompose():
    g = gamma(4)
    for u in g.units():
        tokens = de2_decompose(u)
        m = VahlenMatrix.identity(g)
        for t in tokens:
            m = m * D(g, t.args[0])
        assert m == VahlenMatrix(g, u, 0, 0, u.reversion().inverse())
    with pytest.raises(NotAMember):
        de2_decompose(g.parse("1 + i1"))


def test_token_inverses():
    g = gamma(3)
    i1 = g.generator(1)
    toks = [Etok(g.vector((1, 1, 0))), Dtok(i1), Etok(g.zero(), -1)]
    w = GenWord(g, toks)
    assert eval_word(w * w.inverse()).is_identity()
    assert (w * w.inverse()).free_reduce().tokens == ()
    assert str(Etok(i1, -1)) == "Einv(i1)"


def test_token_validation():
    g = gamma(3)
    with pytest.raises(InvalidToken):
        GenWord(g, [Etok(g.parse("i1*i2"))])
    with pytest.raises(InvalidToken):
        GenWord(g, [Dtok(g.parse("1 + i1"))])
    L = context_from_name("lipschitz")
    with pytest.raises(InvalidToken):
        GenWord(L, [Diagtok(L.parse("1+i"), L.one())])


def test_word_json_round_trip():
    ctx = context_from_name("hurwitz")
    w = random_word(ctx, 10, random.Random(3))
    assert GenWord.from_json(ctx, w.to_json()) == w
    assert parse_word(str(w), ctx) == w


@pytest.mark.parametrize("name", ["gamma:2", "gamma:3", "Imax:-3", "lipschitz", "hurwitz"])
def test_relation_families(name):
    report = verify_relation_families(context_from_name(name), budget=1500)
    for fam, r in report.items():
        assert r["pass"], (fam, r["counterexample"])
        assert r["checked"] > 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_alpha_relation(n):
    g = gamma(n)
    elems = norm_2_3_elements(g)
    assert elems
    assert all(alpha_relation_holds(g, a) for a in elems)


def test_alpha_relation_fails_for_norm_five():
    g = gamma(3)
    a = g.vector((1, 2, 0))
    assert not alpha_relation_holds(g, a)


def test_relation_family_sampling_is_seeded():
    ctx = gamma(4)
    a = verify_relation_families(ctx, ["R1"], radius=2, budget=100, seed=9)
    b = verify_relation_families(ctx, ["R1"], radius=2, budget=100, seed=9)
    assert a == b and not a["R1"]["exhaustive"] and a["R1"]["checked"] == 100


def test_e0_relations():
    g = gamma(3)
    e0 = E(g, g.zero())
    assert e0 ** 4 == VahlenMatrix.identity(g)
    assert e0 ** 2 == -VahlenMatrix.identity(g)
    assert isinstance(g.zero(), CliffordElement)
