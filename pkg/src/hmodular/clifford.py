"""Exact arithmetic in the Clifford algebra C_n generated by i_1, ..., i_{n-1}.

Blades are stored as bitmasks: bit ``h - 1`` set means ``i_h`` occurs in the
(increasingly ordered) product.  Coefficients are Python ints or
``fractions.Fraction``; integral values are always normalised to ``int`` so
that the common integral case stays fast.
"""

from fractions import Fraction
from functools import lru_cache
from math import floor

from .errors import DimensionMismatch, NotInvertibleInGamma

__all__ = [
    "CliffordElement",
    "blade_indices",
    "blade_mask",
    "gamma_membership",
    "enumerate_units",
    "round_to_lattice",
    "UnitGroupFingerprint",
]


def _canon(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _as_rational(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return _canon(x)
    if isinstance(x, str):
        return _canon(Fraction(x))
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


def blade_indices(mask):
    """Sorted generator indices of a blade bitmask, e.g. 0b101 -> (1, 3)."""
    out = []
    h = 1
    while mask:
        if mask & 1:
            out.append(h)
        mask >>= 1
        h += 1
    return tuple(out)


def blade_mask(indices):
    mask = 0
    for h in indices:
        if h < 1:
            raise ValueError(f"generator index must be >= 1, got {h}")
        mask ^= 1 << (h - 1)
    return mask


@lru_cache(maxsize=None)
def _blade_sign(a, b):
    # transpositions needed to merge, then one -1 per repeated generator
    swaps = 0
    m = b
    pos = 0
    while m:
        if m & 1:
            swaps += bin(a >> (pos + 1)).count("1")
        m >>= 1
        pos += 1
    swaps += bin(a & b).count("1")
    return -1 if swaps & 1 else 1


def _grade(mask):
    return bin(mask).count("1")


class CliffordElement:
    """An element of C_n(Q): a finite map blade -> rational.

    Instances are immutable.  ``n`` is the Clifford dimension, so the algebra
    has generators ``i_1 .. i_{n-1}`` and ``2**(n-1)`` basis blades.
    """

    __slots__ = ("n", "_c", "_hash")

    def __init__(self, n, coeffs=None):
        if n < 1:
            raise ValueError("dimension n must be >= 1")
        self.n = n
        limit = 1 << (n - 1)
        c = {}
        if coeffs:
            for blade, value in coeffs.items():
                mask = blade if isinstance(blade, int) else blade_mask(blade)
                if not 0 <= mask < limit:
                    raise ValueError(f"blade {blade_indices(mask)} not valid in C_{n}")
                value = _as_rational(value)
                if value:
                    c[mask] = c.get(mask, 0) + value
                    if not c[mask]:
                        del c[mask]
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, n, c):
        obj = object.__new__(cls)
        obj.n = n
        obj._c = c
        obj._hash = None
        return obj

    # constructors -----------------------------------------------------------

    @classmethod
    def scalar(cls, n, value):
        return cls(n, {0: value})

    @classmethod
    def generator(cls, n, h):
        if not 1 <= h <= n - 1:
            raise ValueError(f"i{h} does not exist in C_{n}")
        return cls._raw(n, {1 << (h - 1): 1})

    @classmethod
    def blade(cls, n, indices, coeff=1):
        """Signed product ``coeff * i_{h1} i_{h2} ...`` in the given order."""
        out = cls.scalar(n, coeff)
        for h in indices:
            out = out * cls.generator(n, h)
        return out

    @classmethod
    def vector(cls, n, coords):
        """x_0 + x_1 i_1 + ... + x_{n-1} i_{n-1} from n coordinates."""
        coords = list(coords)
        if len(coords) != n:
            raise DimensionMismatch(f"expected {n} coordinates, got {len(coords)}")
        c = {}
        for h, x in enumerate(coords):
            x = _as_rational(x)
            if x:
                c[0 if h == 0 else 1 << (h - 1)] = x
        return cls._raw(n, c)

    # inspection -------------------------------------------------------------

    def terms(self):
        """(blade indices, coefficient) pairs in canonical order."""
        return [(blade_indices(m), self._c[m]) for m in sorted(self._c, key=_blade_key)]

    def coeff(self, indices=()):
        mask = indices if isinstance(indices, int) else blade_mask(indices)
        return self._c.get(mask, 0)

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def is_scalar(self):
        return all(m == 0 for m in self._c)

    def scalar_part(self):
        return self._c.get(0, 0)

    def is_vector(self):
        return all(m & (m - 1) == 0 for m in self._c)

    def vector_coords(self):
        if not self.is_vector():
            raise ValueError(f"{self} is not in V^{self.n}")
        return tuple(self._c.get(0 if h == 0 else 1 << (h - 1), 0) for h in range(self.n))

    def is_integral(self):
        return all(isinstance(v, int) for v in self._c.values())

    def embed(self, m):
        """Image under the inclusion C_n -> C_m (m >= n)."""
        if m < self.n:
            raise DimensionMismatch(f"cannot embed C_{self.n} into C_{m}")
        return CliffordElement._raw(m, dict(self._c))

    # arithmetic -------------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, CliffordElement):
            return CliffordElement.scalar(self.n, other)
        if other.n != self.n:
            raise DimensionMismatch(f"C_{self.n} vs C_{other.n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        c = dict(self._c)
        for m, v in other._c.items():
            s = c.get(m, 0) + v
            if s:
                c[m] = _canon(s)
            else:
                c.pop(m, None)
        return CliffordElement._raw(self.n, c)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement._raw(self.n, {m: -v for m, v in self._c.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, CliffordElement):
            other = _as_rational(other)
            if not other:
                return CliffordElement._raw(self.n, {})
            return CliffordElement._raw(self.n, {m: _canon(v * other) for m, v in self._c.items()})
        if other.n != self.n:
            raise DimensionMismatch(f"C_{self.n} vs C_{other.n}")
        out = {}
        for ma, va in self._c.items():
            for mb, vb in other._c.items():
                m = ma ^ mb
                p = va * vb
                if _blade_sign(ma, mb) < 0:
                    p = -p
                out[m] = out.get(m, 0) + p
        return CliffordElement._raw(self.n, {m: _canon(v) for m, v in out.items() if v})

    def __rmul__(self, other):
        # scalars are central
        return self * other

    def __truediv__(self, other):
        if isinstance(other, CliffordElement):
            return self * invert(other)
        other = _as_rational(other)
        return CliffordElement._raw(self.n, {m: _canon(Fraction(v) / other) for m, v in self._c.items()})

    def __pow__(self, k):
        if k < 0:
            return invert(self) ** (-k)
        out = CliffordElement.scalar(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, CliffordElement):
            return self.n == other.n and self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self.is_scalar() and self.scalar_part() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._c.items())))
        return self._hash

    # involutions and norm ---------------------------------------------------

    def main(self):
        """a': every generator negated (grade g picks up (-1)^g)."""
        return CliffordElement._raw(
            self.n, {m: (-v if _grade(m) & 1 else v) for m, v in self._c.items()})

    def reversion(self):
        """a*: factors of every blade reversed."""
        return CliffordElement._raw(
            self.n, {m: (-v if (_grade(m) * (_grade(m) - 1) // 2) & 1 else v)
                     for m, v in self._c.items()})

    def conj(self):
        """Clifford conjugation, the composite of the two maps above."""
        def sign(g):
            return ((g * (g - 1) // 2) + g) & 1
        return CliffordElement._raw(
            self.n, {m: (-v if sign(_grade(m)) else v) for m, v in self._c.items()})

    def norm_sq(self):
        return _canon(sum((Fraction(v) ** 2 for v in self._c.values()), Fraction(0)))

    def inverse(self):
        return invert(self)

    # text -------------------------------------------------------------------

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"CliffordElement({self.n}, {format_element(self)!r})"

    def to_json(self):
        return {
            "n": self.n,
            "terms": [{"blade": list(idx), "coeff": str(Fraction(v))} for idx, v in self.terms()],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], {tuple(t["blade"]): Fraction(t["coeff"]) for t in data["terms"]})


def _blade_key(mask):
    return (_grade(mask), blade_indices(mask))


def _format_coeff(v):
    return str(Fraction(v))


def format_element(a):
    """Canonical text form, e.g. ``3/2 + i2 - 2*i1*i3``."""
    if not a._c:
        return "0"
    parts = []
    for idx, v in a.terms():
        neg = v < 0
        mag = -v if neg else v
        if idx:
            name = "*".join(f"i{h}" for h in idx)
            body = name if mag == 1 else f"{_format_coeff(mag)}*{name}"
        else:
            body = _format_coeff(mag)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def mul(a, b):
    return a * b


def involutions(a):
    """(main, reversion, conjugation) of ``a``."""
    return a.main(), a.reversion(), a.conj()


def norm_sq(a):
    return a.norm_sq()


def is_vector(a):
    return a.is_vector()


def invert(a):
    """Inverse of a Clifford-group element, ``conj(a) / (a conj(a))``.

    Raises NotInvertibleInGamma when ``a * conj(a)`` is not a nonzero scalar.
    """
    abar = a.conj()
    s = a * abar
    if not s.is_scalar() or s.scalar_part() == 0:
        raise NotInvertibleInGamma(f"{a} * conj({a}) = {s} is not a nonzero scalar")
    return abar / s.scalar_part()


def gamma_membership(a, integral=False):
    """Decide whether ``a`` lies in the Clifford group (Gamma_n(Q) or Gamma_n(Z)).

    The test: a != 0, a*conj(a) a positive scalar and a x a* a vector for
    every basis vector x.  Cross-checked against products of integral
    vectors in the test-suite.
    """
    if a.is_zero():
        return False
    if integral and not a.is_integral():
        return False
    s = a * a.conj()
    if not s.is_scalar() or s.scalar_part() <= 0:
        return False
    astar = a.reversion()
    for h in range(a.n):
        x = CliffordElement.scalar(a.n, 1) if h == 0 else CliffordElement.generator(a.n, h)
        if not (a * x * astar).is_vector():
            return False
    return True


def round_to_lattice(z):
    """Nearest point of V^n(Z) to a rational vector, halves rounded up."""
    if not z.is_vector():
        raise ValueError(f"{z} is not a vector")
    coords = [floor(Fraction(x) + Fraction(1, 2)) for x in z.vector_coords()]
    return CliffordElement.vector(z.n, coords)


class UnitGroupFingerprint:
    def __init__(self, order, exponent, center_order, abelian_invariants):
        self.order = order
        self.exponent = exponent
        self.center_order = center_order
        self.abelian_invariants = list(abelian_invariants)

    def as_dict(self):
        return {
            "order": self.order,
            "exponent": self.exponent,
            "center_order": self.center_order,
            "abelianization": self.abelian_invariants,
        }

    def __repr__(self):
        return f"UnitGroupFingerprint({self.as_dict()})"


MAX_UNIT_DIMENSION = 12


def enumerate_units(n):
    """All units of Gamma_n(Z) (the signed blades) and their group fingerprint."""
    from .finite_groups import FiniteGroup

    if not 1 <= n <= MAX_UNIT_DIMENSION:
        raise ValueError(f"n must lie in [1, {MAX_UNIT_DIMENSION}], got {n}")
    gens = [CliffordElement.scalar(n, -1)] + [CliffordElement.generator(n, h) for h in range(1, n)]
    group = FiniteGroup(gens, CliffordElement.scalar(n, 1))
    fp = UnitGroupFingerprint(
        order=group.order(),
        exponent=group.exponent(),
        center_order=len(group.center()),
        abelian_invariants=group.abelianization().torsion,
    )
    units = sorted(group.elements, key=lambda u: (_blade_key(next(iter(u._c))), -next(iter(u._c.values()))))
    return units, fp
