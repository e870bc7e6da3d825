from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from hmodular.contexts import context_from_name
from hmodular.errors import ContextMismatch, NonIntegral
from hmodular.rings import (
    GE2_RING,
    NOT_GE2_RING,
    discretely_normed,
    ge2_classification,
    hurwitz,
    order_o5,
    phi_quadratic,
    quadratic,
    short_vectors,
    u_hom_f,
)

from strategies import RING_NAMES, ring_element

UNIT_COUNTS = {
    "Z": 2, "Zsqrt:-1": 4, "Zsqrt:-2": 2, "Zsqrt:-3": 2, "Imax:-3": 6, "Imax:-7": 2, "Imax:-11": 2,
    "lipschitz": 8, "hurwitz": 24, "O3": 12, "O5": 6,
}
# elements with 0 < norm_sq <= 4
SHORT_COUNTS = {
    "Z": 4, "Zsqrt:-1": 12, "Zsqrt:-2": 10, "Zsqrt:-3": 10, "Imax:-3": 18, "Imax:-7": 12, "Imax:-11": 8,
    "lipschitz": 88, "hurwitz": 168, "O3": 144, "O5": 90,
}


@pytest.mark.parametrize("name", RING_NAMES)
def test_unit_and_short_vector_counts(name):
    ctx = context_from_name(name)
    units = ctx.units()
    assert len(units) == UNIT_COUNTS[name]
    assert all(u.norm_sq() == 1 and u.is_integral() for u in units)
    assert len(short_vectors(ctx, 4)) == SHORT_COUNTS[name]


@pytest.mark.parametrize("name", RING_NAMES)
def test_basis_elements_are_integral_and_closed(name):
    ctx = context_from_name(name)
    basis = [ctx.from_coords([int(i == j) for j in range(ctx.dim)]) for i in range(ctx.dim)]
    for x, y in product(basis, repeat=2):
        assert (x * y).is_integral()
        assert x.conj().is_integral()


@given(st.data())
def test_ring_axioms(data):
    name = data.draw(st.sampled_from(RING_NAMES))
    a, b, c = (data.draw(ring_element(name, integral=False)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).conj() == b.conj() * a.conj()
    assert (a * b).norm_sq() == a.norm_sq() * b.norm_sq()
    if not a.is_zero():
        assert a * a.inverse() == a.ctx.one() == a.inverse() * a


@given(st.data())
def test_coords_round_trip(data):
    x = data.draw(ring_element())
    assert x.ctx.from_coords(x.coords) == x
    assert x.is_integral()


@given(st.data())
def test_nearest_is_closest(data):
    name = data.draw(st.sampled_from(RING_NAMES))
    ctx = context_from_name(name)
    z = data.draw(ring_element(name, integral=False))
    q = ctx.nearest(z)
    assert q.is_integral()
    best = (z - q).norm_sq()
    # brute force over a coordinate box around q
    base = q.coords
    for delta in product((-1, 0, 1), repeat=ctx.dim):
        other = ctx.from_coords([c + d for c, d in zip(base, delta)])
        assert (z - other).norm_sq() >= best


def test_euclidean_remainders_for_supported_orders():
    # every rational point has an order element at distance < 1
    for name in ("Zsqrt:-1", "Zsqrt:-2", "Imax:-3", "Imax:-7", "Imax:-11", "lipschitz", "hurwitz", "O3", "O5"):
        ctx = context_from_name(name)
        grid = [Fraction(k, 4) for k in range(4)]
        worst = max((z - ctx.nearest(z)).norm_sq()
                    for z in (ctx.element(list(c)) for c in product(grid, repeat=ctx.dim)))
        assert worst <= 1, name


def test_lipschitz_has_norm_one_remainder():
    ctx = context_from_name("lipschitz")
    z = ctx.element([Fraction(1, 2)] * 4)
    assert (z - ctx.nearest(z)).norm_sq() == 1


@pytest.mark.parametrize("d", range(1, 31))
def test_classification_matches_discretely_normed(d):
    rings = [quadratic(d)]
    if all(d % (p * p) for p in range(2, 6)):
        rings.append(quadratic(d, maximal=True))
    for ctx in rings:
        expected = ge2_classification(ctx) == NOT_GE2_RING
        assert discretely_normed(ctx) == expected, ctx.name


def test_discrete_ge2_quadratic_orders():
    ge2 = {ctx.name for ctx in [quadratic(d) for d in range(1, 31)]
           + [quadratic(d, maximal=True) for d in (3, 7, 11, 15, 19, 23)]
           if ge2_classification(ctx) == GE2_RING}
    assert ge2 == {"Zsqrt:-1", "Zsqrt:-2", "Zsqrt:-3", "Imax:-3", "Imax:-7", "Imax:-11"}
    assert ge2_classification(context_from_name("Z")) == GE2_RING


def test_u_hom_f_values():
    o5, o2 = order_o5(), hurwitz()
    w = o5.from_coords((0, 1, 0, 0))
    assert w == o5.parse("1/2 + 1/2*i + 1/2*j")
    assert u_hom_f(w, o2) == o2.parse("1/2 + 1/2*i + 1/2*j + 1/2*k")
    assert u_hom_f(o5.one(), o2) == o2.one()


def test_u_hom_f_is_a_u_homomorphism():
    o5, o2 = order_o5(), hurwitz()
    units = o5.units()
    box = [o5.from_coords(c) for c in product((-1, 0, 1), repeat=4)]
    for a in box:
        for alpha in units:
            for beta in units:
                assert u_hom_f(alpha * a * beta, o2) == u_hom_f(alpha, o2) * u_hom_f(a, o2) * u_hom_f(beta, o2)


def test_u_hom_f_is_not_multiplicative():
    o5, o2 = order_o5(), hurwitz()
    w = o5.from_coords((0, 1, 0, 0))
    assert u_hom_f(w * w, o2) != u_hom_f(w, o2) * u_hom_f(w, o2)


def test_u_hom_f_errors():
    with pytest.raises(ContextMismatch):
        u_hom_f(hurwitz().one())
    o5 = order_o5()
    with pytest.raises(NonIntegral):
        u_hom_f(o5.element([Fraction(1, 3), 0, 0, 0]))


@given(st.data())
def test_phi_is_additive(data):
    x = data.draw(ring_element("Zsqrt:-3"))
    y = data.draw(ring_element("Zsqrt:-3"))
    assert phi_quadratic(x + y) == phi_quadratic(x) + phi_quadratic(y)


def test_phi_preserves_norm_of_generator():
    src = quadratic(3)
    w = src.from_coords((0, 1))
    assert w.norm_sq() == phi_quadratic(w).norm_sq() == 3


def test_imax_requires_squarefree():
    with pytest.raises(ValueError):
        quadratic(12, maximal=True)
