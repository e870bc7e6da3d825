"""Arithmetic contexts for the ground rings: Z, imaginary quadratic orders and
the definite quaternion orders L (Lipschitz), O2 (Hurwitz), O3 and O5.

Every element keeps its coordinates in the ambient rational algebra
(1 / sqrt(-d) for quadratic fields, 1, i, j, k for quaternions); its
coordinates over the order basis are recovered exactly when needed, and an
element is integral precisely when those are integers.
"""

from fractions import Fraction
from functools import cached_property
from itertools import product
from math import floor, ceil, gcd, isqrt

from .errors import ContextMismatch, NonIntegral, NotInvertible

__all__ = [
    "RingContext",
    "RingElement",
    "integers",
    "quadratic",
    "lipschitz",
    "hurwitz",
    "order_o3",
    "order_o5",
    "short_vectors",
    "discretely_normed",
    "ge2_classification",
    "GE2_RING",
    "NOT_GE2_RING",
    "u_hom_f",
    "phi_quadratic",
]

GE2_RING = "GE2Ring"
NOT_GE2_RING = "NotGE2Ring"


def _q(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _squarefree(d):
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def _solve(matrix, rhs):
    """Solve matrix @ x = rhs exactly (square, nonsingular)."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]


def _invert(matrix):
    n = len(matrix)
    cols = [_solve(matrix, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


class RingContext:
    """One of the supported orders, with its ambient algebra and Z-basis.

    ``kind`` is ``"Z"``, ``"quadratic"`` or ``"quaternion"``.  ``basis`` lists
    the order basis as ambient coordinate tuples.
    """

    def __init__(self, name, kind, basis, d=None, uv=None, maximal=False, label=None):
        self.name = name
        self.kind = kind
        self.d = d
        self.uv = uv
        self.maximal = maximal
        self.label = label or name
        self.dim = len(basis)
        self.basis = tuple(tuple(_q(c) for c in b) for b in basis)
        # rows of _to_order convert ambient coordinates to order coordinates
        self._to_order = _invert([[self.basis[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def __repr__(self):
        return f"RingContext({self.name})"

    def __eq__(self, other):
        return isinstance(other, RingContext) and self.name == other.name

    def __hash__(self):
        return hash(("ring", self.name))

    # ambient algebra --------------------------------------------------------

    def amb_mul(self, x, y):
        if self.kind == "Z":
            return (x[0] * y[0],)
        if self.kind == "quadratic":
            d = self.d
            return (x[0] * y[0] - d * x[1] * y[1], x[0] * y[1] + x[1] * y[0])
        u, v = self.uv
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return (
            a1 * a2 + u * b1 * b2 + v * c1 * c2 - u * v * d1 * d2,
            a1 * b2 + b1 * a2 - v * c1 * d2 + v * d1 * c2,
            a1 * c2 + c1 * a2 + u * b1 * d2 - u * d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
        )

    def amb_conj(self, x):
        if self.kind == "Z":
            return x
        return (x[0],) + tuple(-c for c in x[1:])

    def amb_norm_sq(self, x):
        if self.kind == "Z":
            return x[0] * x[0]
        if self.kind == "quadratic":
            return x[0] * x[0] + self.d * x[1] * x[1]
        u, v = self.uv
        return x[0] ** 2 - u * x[1] ** 2 - v * x[2] ** 2 + u * v * x[3] ** 2

    # elements ---------------------------------------------------------------

    def element(self, amb):
        if len(amb) != self.dim:
            raise ValueError(f"{self.name} needs {self.dim} ambient coordinates")
        return RingElement(self, amb)

    @cached_property
    def _basis_int(self):
        """Basis vectors as integer columns over one common denominator."""
        den = 1
        for b in self.basis:
            for c in b:
                den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
        return [[int(Fraction(c) * den) for c in b] for b in self.basis], den

    def from_coords(self, coords):
        """Element with the given coordinates over the order basis."""
        coords = list(coords)
        if len(coords) != self.dim:
            raise ValueError(f"{self.name} needs {self.dim} coordinates")
        if all(isinstance(c, int) for c in coords):
            cols, den = self._basis_int
            num = tuple(sum(c * b[i] for c, b in zip(coords, cols)) for i in range(self.dim))
            return RingElement(self, num=num, den=den)
        amb = [0] * self.dim
        for c, b in zip(coords, self.basis):
            for i in range(self.dim):
                amb[i] += Fraction(c) * b[i]
        return self.element(amb)

    def zero(self):
        return self.element((0,) * self.dim)

    def one(self):
        return self.element((1,) + (0,) * (self.dim - 1))

    def scalar(self, value):
        return self.element((value,) + (0,) * (self.dim - 1))

    @cached_property
    def _to_order_int(self):
        """_to_order as an integer matrix over one common denominator."""
        den = 1
        for row in self._to_order:
            for c in row:
                den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
        return [[int(Fraction(c) * den) for c in row] for row in self._to_order], den

    def order_coords(self, amb):
        return tuple(_q(sum(row[i] * amb[i] for i in range(self.dim))) for row in self._to_order)

    def basis_elements(self):
        return [self.element(b) for b in self.basis]

    @cached_property
    def gram(self):
        """Gram matrix of the norm form over the order basis: Re(b_i conj(b_j))."""
        els = self.basis_elements()
        return [[_q((a * b.conj()).re()) for b in els] for a in els]

    @cached_property
    def _gram_inv(self):
        return _invert(self.gram)

    def units(self):
        return short_vectors(self, 1)

    def contains(self, x):
        return isinstance(x, RingElement) and x.ctx == self and x.is_integral()

    @cached_property
    def _gram_int(self):
        den = 1
        for row in self.gram:
            for c in row:
                den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
        return [[int(Fraction(c) * den) for c in row] for row in self.gram], den

    def nearest(self, z):
        """An order element minimising the distance to ``z`` (exact search).

        The best corner of the unit cell around ``z`` gives a radius; every
        lattice point within that radius lies in the coordinate box
        (c_i - t_i)^2 <= r^2 (G^-1)_ii, which is then searched exhaustively.
        Ties go to the lexicographically smallest coordinates.
        """
        rows, tden = self._to_order_int
        den = z.den * tden
        tnum = [sum(r * c for r, c in zip(row, z.num)) for row in rows]
        g, scale = self._gram_int
        dim = self.dim

        def dist(c):
            # den^2 * scale * |c - t|^2, an integer
            diff = [ci * den - ti for ci, ti in zip(c, tnum)]
            return sum(diff[i] * g[i][j] * diff[j] for i in range(dim) for j in range(dim))

        best = None
        for corner in product(*[(ti // den, -(-ti // den)) for ti in tnum]):
            key = (dist(corner), corner)
            if best is None or key < best:
                best = key
        r2 = Fraction(best[0], den * den) / scale
        ranges = []
        for i, ti in enumerate(tnum):
            t = Fraction(ti, den)
            x = r2 * self._gram_inv[i][i]
            s = isqrt(ceil(x)) + 1
            ranges.append([c for c in range(floor(t) - s, ceil(t) + s + 1) if (c - t) ** 2 <= x])
        for c in product(*ranges):
            key = (dist(c), c)
            if key < best:
                best = key
        return self.from_coords(best[1])

    # text -------------------------------------------------------------------

    def format(self, x):
        from .parsing import format_ring_element

        return format_ring_element(x)

    def parse(self, text):
        from .parsing import parse_element

        return parse_element(text, self)


class RingElement:
    """Immutable element of a RingContext's ambient algebra.

    Ambient coordinates are kept as integer numerators over one positive
    common denominator, so products of integral elements use integer
    arithmetic only.
    """

    __slots__ = ("ctx", "num", "den", "_hash")

    def __init__(self, ctx, amb=None, *, num=None, den=1):
        self.ctx = ctx
        if amb is not None:
            fr = [Fraction(c) for c in amb]
            den = 1
            for c in fr:
                den = den * c.denominator // gcd(den, c.denominator)
            num = tuple(c.numerator * (den // c.denominator) for c in fr)
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        self.num = num
        self.den = den
        self._hash = None

    @property
    def amb(self):
        den = self.den
        if den == 1:
            return self.num
        return tuple(_q(Fraction(c, den)) for c in self.num)

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx.name} vs {other.ctx.name}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ctx.scalar(other)
        raise TypeError(f"cannot combine RingElement with {type(other).__name__}")

    def __add__(self, other):
        other = self._other(other)
        d1, d2 = self.den, other.den
        if d1 == d2:
            return RingElement(self.ctx, num=tuple(a + b for a, b in zip(self.num, other.num)), den=d1)
        return RingElement(self.ctx, num=tuple(a * d2 + b * d1 for a, b in zip(self.num, other.num)),
                           den=d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ctx, num=tuple(-a for a in self.num), den=self.den)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        other = self._other(other)
        return RingElement(self.ctx, num=self.ctx.amb_mul(self.num, other.num), den=self.den * other.den)

    def __rmul__(self, other):
        return self._other(other) * self

    def __truediv__(self, other):
        if isinstance(other, RingElement):
            return self * other.inverse()
        other = Fraction(other)
        if other == 0:
            raise ZeroDivisionError("division by zero")
        sign = -1 if other < 0 else 1
        return RingElement(self.ctx, num=tuple(sign * c * other.denominator for c in self.num),
                           den=self.den * abs(other.numerator))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ctx.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ctx == other.ctx and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == self.ctx.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.name, self.num, self.den))
        return self._hash

    def __bool__(self):
        return any(self.num)

    def is_zero(self):
        return not any(self.num)

    def conj(self):
        return RingElement(self.ctx, num=self.ctx.amb_conj(self.num), den=self.den)

    def norm_sq(self):
        return _q(Fraction(self.ctx.amb_norm_sq(self.num), self.den * self.den))

    def re(self):
        return self.amb[0]

    def inverse(self):
        n = self.norm_sq()
        if n == 0:
            raise NotInvertible("zero has no inverse")
        return self.conj() / n

    @property
    def coords(self):
        """Coordinates over the order basis (rational for non-integral values)."""
        rows, tden = self.ctx._to_order_int
        den = self.den * tden
        return tuple(_q(Fraction(sum(r * c for r, c in zip(row, self.num)), den)) for row in rows)

    def is_integral(self):
        rows, tden = self.ctx._to_order_int
        den = self.den * tden
        return all(sum(r * c for r, c in zip(row, self.num)) % den == 0 for row in rows)

    def __str__(self):
        return self.ctx.format(self)

    def __repr__(self):
        return f"RingElement({self.ctx.name}, {str(self)!r})"


# context constructors ------------------------------------------------------

def integers():
    return RingContext("Z", "Z", [(1,)], label="Z")


def quadratic(d, maximal=False):
    """Z[sqrt(-d)], or the maximal order I_d of Q(sqrt(-d)) when ``maximal``."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    if maximal:
        if not _squarefree(d):
            raise ValueError(f"I_{d} needs square-free d")
        if d % 4 == 3:
            return RingContext(f"Imax:-{d}", "quadratic", [(1, 0), (Fraction(1, 2), Fraction(1, 2))],
                               d=d, maximal=True, label=f"I_{d}")
        return RingContext(f"Imax:-{d}", "quadratic", [(1, 0), (0, 1)], d=d, maximal=True, label=f"I_{d}")
    return RingContext(f"Zsqrt:-{d}", "quadratic", [(1, 0), (0, 1)], d=d, label=f"Z[sqrt(-{d})]")


def lipschitz():
    return RingContext("lipschitz", "quaternion",
                       [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)], uv=(-1, -1), label="L")


def hurwitz():
    h = Fraction(1, 2)
    return RingContext("hurwitz", "quaternion",
                       [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (h, h, h, h)], uv=(-1, -1), maximal=True,
                       label="O2")


def order_o3():
    h = Fraction(1, 2)
    return RingContext("O3", "quaternion",
                       [(1, 0, 0, 0), (0, 1, 0, 0), (h, 0, h, 0), (0, h, 0, h)], uv=(-1, -3), maximal=True,
                       label="O3")


def order_o5():
    h, q = Fraction(1, 2), Fraction(1, 4)
    return RingContext("O5", "quaternion",
                       [(1, 0, 0, 0), (h, h, h, 0), (h, q, 0, -q), (h, 3 * q, 0, q)], uv=(-2, -5), maximal=True,
                       label="O5")


# enumeration and classification -------------------------------------------

def short_vectors(ctx, bound):
    """All integral x with 0 < norm_sq(x) <= bound, sorted by (norm, coords).

    Coordinate ranges come from the exact inverse Gram matrix:
    c_i^2 <= bound * (G^-1)_ii for every vector of norm <= bound.
    """
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    if not isinstance(ctx, RingContext):
        return ctx.short_vectors(bound)
    ginv = ctx._gram_inv
    g = ctx.gram
    ranges = []
    for i in range(ctx.dim):
        s = isqrt(floor(bound * ginv[i][i]))
        ranges.append(range(-s, s + 1))
    out = []
    for c in product(*ranges):
        nrm = sum(c[i] * g[i][j] * c[j] for i in range(ctx.dim) for j in range(ctx.dim))
        if 0 < nrm <= bound:
            out.append((nrm, c))
    out.sort()
    return [ctx.from_coords(c) for _, c in out]


def discretely_normed(ctx):
    """No element with 1 < |x| < 2, i.e. no norm_sq strictly between 1 and 4."""
    return not any(1 < x.norm_sq() < 4 for x in short_vectors(ctx, 4))


def _ring_key(ctx):
    if ctx.kind == "Z":
        return ("Z",)
    if ctx.kind == "quadratic":
        if ctx.maximal and ctx.d % 4 == 3:
            return ("I", ctx.d)
        return ("Zsqrt", ctx.d)
    raise ValueError(f"{ctx.name} is not Z or a quadratic order")


# the seven discrete GE_2-subrings of C
_GE2_RINGS = {("Z",), ("Zsqrt", 3), ("Zsqrt", 1), ("Zsqrt", 2), ("I", 3), ("I", 7), ("I", 11)}


def ge2_classification(ctx):
    return GE2_RING if _ring_key(ctx) in _GE2_RINGS else NOT_GE2_RING


# maps ------------------------------------------------------------------------

_F_IMAGES = (
    (1, 0, 0, 0),
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
    (Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2)),
    (Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2)),
)


def u_hom_f(x, target=None):
    """Z-linear map O5 -> O2 fixed on the O5 basis (1, (1+i+j)/2, (2+i-k)/4, (2+3i+k)/4)."""
    if x.ctx.name != "O5":
        raise ContextMismatch("u_hom_f is defined on O5")
    if not x.is_integral():
        raise NonIntegral(f"{x} is not in O5")
    target = target or hurwitz()
    amb = [0, 0, 0, 0]
    for c, img in zip(x.coords, _F_IMAGES):
        for i in range(4):
            amb[i] += c * img[i]
    return target.element(amb)


def phi_quadratic(x, target=None):
    """Additive map Z[sqrt(-3)] -> I_11, a + b sqrt(-3) -> a + b (1 + sqrt(-11))/2."""
    if x.ctx.name != "Zsqrt:-3":
        raise ContextMismatch("phi_quadratic is defined on Z[sqrt(-3)]")
    if not x.is_integral():
        raise NonIntegral(f"{x} is not in Z[sqrt(-3)]")
    target = target or quadratic(11, maximal=True)
    a, b = x.coords
    return target.from_coords((a, b))
