"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from hmodular.clifford import CliffordElement
from hmodular.contexts import context_from_name

small_int = st.integers(min_value=-3, max_value=3)
rational = st.fractions(min_value=-4, max_value=4, max_denominator=6)

RING_NAMES = ("Z", "Zsqrt:-1", "Zsqrt:-2", "Zsqrt:-3", "Imax:-3", "Imax:-7", "Imax:-11",
              "lipschitz", "hurwitz", "O3", "O5")


@st.composite
def clifford(draw, n=None, coeff=rational):
    n = draw(st.integers(1, 4)) if n is None else n
    dim = 1 << (n - 1)
    values = draw(st.lists(coeff, min_size=dim, max_size=dim))
    return CliffordElement(n, {m: v for m, v in enumerate(values)})


@st.composite
def clifford_vector(draw, n, coeff=small_int):
    return CliffordElement.vector(n, draw(st.lists(coeff, min_size=n, max_size=n)))


@st.composite
def ring_element(draw, name=None, integral=True):
    ctx = context_from_name(draw(st.sampled_from(RING_NAMES)) if name is None else name)
    if integral:
        return ctx.from_coords(draw(st.lists(small_int, min_size=ctx.dim, max_size=ctx.dim)))
    return ctx.element(draw(st.lists(rational, min_size=ctx.dim, max_size=ctx.dim)))


def frac(x):
    return Fraction(x)
