import random

import pytest
from hypothesis import given, settings, strategies as st

from hmodular.finite_groups import FiniteGroup
from hmodular.smith import AbelianInvariants, abelian_invariants, in_row_lattice, snf

from helpers import invariant_factors_from_minors

matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)))


def test_textbook_example():
    assert snf([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


@pytest.mark.parametrize("rows, expected", [
    ([[0, 0], [0, 0]], []),
    ([[6]], [6]),
    ([[-6]], [6]),
    ([[2, 0], [0, 3]], [1, 6]),
    ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], [1, 3]),
    ([[4, 6]], [2]),
])
def test_small_cases(rows, expected):
    assert snf(rows) == expected


@given(matrices)
def test_divisibility_chain(rows):
    d = snf(rows)
    assert all(x > 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))


@given(matrices)
@settings(max_examples=150)
def test_matches_minor_gcds(rows):
    assert snf(rows) == invariant_factors_from_minors(rows)


def test_random_6x6_against_minors():
    rng = random.Random(7)
    for _ in range(20):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        assert snf(rows) == invariant_factors_from_minors(rows)


def test_abelian_invariants():
    # <a, b | a^4, b^6, a^2 b^-3> is C12
    assert abelian_invariants([[4, 0], [0, 6], [2, -3]], 2) == AbelianInvariants((12,), 0)
    assert abelian_invariants([], 3).rank == 3
    assert str(abelian_invariants([[2, 0]], 2)) == "C2 x Z"


def test_invariants_validation():
    with pytest.raises(ValueError):
        AbelianInvariants((2, 3))
    with pytest.raises(ValueError):
        AbelianInvariants((1,))


def test_row_lattice():
    rows = [[2, 0], [0, 3]]
    assert in_row_lattice(rows, [4, -3])
    assert not in_row_lattice(rows, [1, 0])
    assert in_row_lattice(rows, [0, 0])


class Mod:
    def __init__(self, v, m):
        self.v, self.m = v % m, m

    def __mul__(self, other):
        return Mod(self.v + other.v, self.m)

    def __eq__(self, other):
        return self.v == other.v and self.m == other.m

    def __hash__(self):
        return hash((self.v, self.m))


def test_finite_group_abelianization_of_cyclic():
    g = FiniteGroup([Mod(1, 12)], Mod(0, 12))
    assert g.order() == 12 and g.exponent() == 12
    assert g.abelianization() == AbelianInvariants((12,), 0)
