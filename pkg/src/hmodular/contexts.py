"""The Clifford context gamma:n and lookup of every context by its CLI name."""

import re
from functools import cached_property
from itertools import product
from math import isqrt, floor

from .clifford import CliffordElement, enumerate_units, round_to_lattice
from .rings import RingContext, integers, quadratic, lipschitz, hurwitz, order_o3, order_o5


class GammaContext:
    """Gamma_n(Z) inside C_n; matrix entries are CliffordElements."""

    kind = "clifford"

    def __init__(self, n):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self.name = f"gamma:{n}"
        self.label = f"Gamma_{n}(Z)"
        self.dim = 1 << (n - 1)

    def __repr__(self):
        return f"GammaContext({self.n})"

    def __eq__(self, other):
        return isinstance(other, GammaContext) and other.n == self.n

    def __hash__(self):
        return hash(("gamma", self.n))

    def zero(self):
        return CliffordElement(self.n)

    def one(self):
        return CliffordElement.scalar(self.n, 1)

    def scalar(self, value):
        return CliffordElement.scalar(self.n, value)

    def generator(self, h):
        return self.one() if h == 0 else CliffordElement.generator(self.n, h)

    def vector(self, coords):
        return CliffordElement.vector(self.n, coords)

    @cached_property
    def _units(self):
        return enumerate_units(self.n)[0]

    def units(self):
        return list(self._units)

    def unit_basis(self):
        """The set B = {+-i_h : 0 <= h <= n-1} (units lying in V^n)."""
        out = []
        for h in range(self.n):
            g = self.generator(h)
            out += [g, -g]
        return out

    def contains(self, x):
        return isinstance(x, CliffordElement) and x.n == self.n and x.is_integral() and x.is_vector()

    def nearest(self, z):
        return round_to_lattice(z)

    def short_vectors(self, bound):
        """Integral elements of C_n with 0 < norm_sq <= bound (orthonormal blade basis)."""
        s = isqrt(floor(bound))
        out = []
        for c in product(range(-s, s + 1), repeat=self.dim):
            nrm = sum(x * x for x in c)
            if 0 < nrm <= bound:
                out.append((nrm, c))
        out.sort()
        return [CliffordElement(self.n, {m: c[m] for m in range(self.dim)}) for _, c in out]

    def format(self, x):
        return str(x)

    def parse(self, text):
        from .parsing import parse_element

        return parse_element(text, self)


def gamma(n):
    return GammaContext(n)


_FIXED = {
    "Z": integers,
    "lipschitz": lipschitz,
    "hurwitz": hurwitz,
    "O3": order_o3,
    "O5": order_o5,
}


def context_from_name(name):
    """``gamma:<n>``, ``Z``, ``Zsqrt:-<d>``, ``Imax:-<d>``, ``lipschitz``, ``hurwitz``, ``O3``, ``O5``."""
    name = name.strip()
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"gamma:(\d+)", name)
    if m:
        return GammaContext(int(m.group(1)))
    m = re.fullmatch(r"(Zsqrt|Imax):-(\d+)", name)
    if m:
        return quadratic(int(m.group(2)), maximal=m.group(1) == "Imax")
    raise ValueError(f"unknown context {name!r}")


def is_clifford(ctx):
    return isinstance(ctx, GammaContext)


def is_quaternion(ctx):
    return isinstance(ctx, RingContext) and ctx.kind == "quaternion"
