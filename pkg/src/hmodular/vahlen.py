"""2x2 matrices over a context: Vahlen matrices for gamma:n, ordinary 2x2
matrices over the quadratic and quaternion orders."""

from fractions import Fraction

from .clifford import CliffordElement, gamma_membership
from .contexts import context_from_name, is_clifford, is_quaternion
from .errors import ContextMismatch, NotInvertible

__all__ = [
    "VahlenMatrix",
    "E",
    "D",
    "diag",
    "mat_mul",
    "pseudo_det",
    "gl_membership",
    "slplus_membership",
    "gl2_membership",
    "mat_inverse",
    "dieudonne_det_sq",
    "dieudonne_det_sq_printed",
]


class VahlenMatrix:
    """Immutable matrix ((a, b), (c, d)) whose entries share one context."""

    __slots__ = ("ctx", "a", "b", "c", "d", "_hash")

    def __init__(self, ctx, a, b, c, d):
        self.ctx = ctx
        self.a, self.b, self.c, self.d = (_coerce(ctx, x) for x in (a, b, c, d))
        self._hash = None

    @classmethod
    def identity(cls, ctx):
        return cls(ctx, ctx.one(), ctx.zero(), ctx.zero(), ctx.one())

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other):
        return mat_mul(self, other)

    def __neg__(self):
        return VahlenMatrix(self.ctx, -self.a, -self.b, -self.c, -self.d)

    def __pow__(self, k):
        if k < 0:
            return mat_inverse(self) ** (-k)
        out = VahlenMatrix.identity(self.ctx)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, VahlenMatrix):
            return NotImplemented
        return self.ctx == other.ctx and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.entries)
        return self._hash

    def is_identity(self):
        return self == VahlenMatrix.identity(self.ctx)

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def __repr__(self):
        return f"VahlenMatrix({self.ctx.name}, [[{self.a}, {self.b}], [{self.c}, {self.d}]])"

    def to_json(self):
        return {"ctx": self.ctx.name, "rows": [[str(x) for x in row] for row in self.rows()]}

    @classmethod
    def from_json(cls, data, ctx=None):
        ctx = ctx or context_from_name(data["ctx"])
        (a, b), (c, d) = data["rows"]
        return cls(ctx, *(ctx.parse(x) if isinstance(x, str) else x for x in (a, b, c, d)))


def _coerce(ctx, x):
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return ctx.scalar(x)
    if isinstance(x, str):
        return ctx.parse(x)
    if is_clifford(ctx):
        if not isinstance(x, CliffordElement) or x.n != ctx.n:
            raise ContextMismatch(f"entry {x!r} is not in {ctx.name}")
    elif getattr(x, "ctx", None) != ctx:
        raise ContextMismatch(f"entry {x!r} is not in {ctx.name}")
    return x


def E(ctx, x):
    """Elementary matrix ((x, 1), (-1, 0))."""
    return VahlenMatrix(ctx, x, 1, -1, 0)


def diag(ctx, mu, nu):
    return VahlenMatrix(ctx, mu, 0, 0, nu)


def D(ctx, mu):
    """[mu, mu^-1]."""
    mu = _coerce(ctx, mu)
    return VahlenMatrix(ctx, mu, 0, 0, mu.inverse())


def mat_mul(m, n):
    if m.ctx != n.ctx:
        raise ContextMismatch(f"{m.ctx.name} vs {n.ctx.name}")
    return VahlenMatrix(
        m.ctx,
        m.a * n.a + m.b * n.c,
        m.a * n.b + m.b * n.d,
        m.c * n.a + m.d * n.c,
        m.c * n.b + m.d * n.d,
    )


def pseudo_det(m):
    """a d* - b c* (Clifford contexts; the ordinary determinant for commutative rings)."""
    if is_clifford(m.ctx):
        return m.a * m.d.reversion() - m.b * m.c.reversion()
    if is_quaternion(m.ctx):
        raise ContextMismatch("use dieudonne_det_sq for quaternion matrices")
    return m.a * m.d - m.b * m.c


def _entry_ok(x, integral):
    return x.is_zero() or gamma_membership(x, integral)


def gl_membership(m, integral=False):
    """Membership of a Clifford matrix in GL(Gamma_n), or GL(Gamma_n(Z)) when ``integral``."""
    if not is_clifford(m.ctx):
        raise ContextMismatch("gl_membership needs a gamma:n context")
    if not all(_entry_ok(x, integral) for x in m.entries):
        return False
    delta = pseudo_det(m)
    if not delta.is_scalar() or delta.scalar_part() == 0:
        return False
    a, b, c, d = m.entries
    for left, right in ((a, b.reversion()), (c, d.reversion()), (c.reversion(), a), (d.reversion(), b)):
        if left.is_zero() or right.is_zero():
            continue
        if not (left * right).is_vector():
            return False
    return True


def slplus_membership(m, integral=False):
    return gl_membership(m, integral) and pseudo_det(m) == 1


def gl2_membership(m):
    """Invertibility over the order itself: integral entries and unit determinant.

    For quaternion orders the condition is Delta^2 = 1, since the reduced
    norm of an integral matrix and of its inverse are positive integers.
    """
    if is_clifford(m.ctx):
        return slplus_membership(m, integral=True) or (
            gl_membership(m, integral=True) and pseudo_det(m) in (1, -1))
    if not all(x.is_integral() for x in m.entries):
        return False
    if is_quaternion(m.ctx):
        return dieudonne_det_sq(m) == 1
    det = pseudo_det(m)
    return det.is_integral() and det.norm_sq() == 1


def mat_inverse(m):
    """Exact inverse.  Raises NotInvertible for singular input."""
    ctx = m.ctx
    a, b, c, d = m.entries
    if is_clifford(ctx):
        delta = pseudo_det(m)
        if not delta.is_scalar() or delta.scalar_part() == 0:
            raise NotInvertible(f"pseudo-determinant {delta} is not a nonzero scalar")
        s = delta.scalar_part()
        inv = VahlenMatrix(ctx, d.reversion() / s, -b.reversion() / s, -c.reversion() / s, a.reversion() / s)
    elif not a.is_zero():
        ai = a.inverse()
        schur = d - c * ai * b
        if schur.is_zero():
            raise NotInvertible("singular matrix")
        si = schur.inverse()
        inv = VahlenMatrix(ctx, ai + ai * b * si * c * ai, -(ai * b * si), -(si * c * ai), si)
    else:
        if b.is_zero() or c.is_zero():
            raise NotInvertible("singular matrix")
        bi, ci = b.inverse(), c.inverse()
        inv = VahlenMatrix(ctx, -(ci * d * bi), ci, bi, 0)
    if not (m * inv).is_identity():
        raise NotInvertible(f"{m!r} is not invertible in the Clifford-group sense")
    return inv


def dieudonne_det_sq(m):
    """Delta^2 = |a|^2|d|^2 + |b|^2|c|^2 - 2 Re(a conj(c) d conj(b))."""
    if not is_quaternion(m.ctx):
        raise ContextMismatch("the Dieudonne determinant is implemented for quaternion orders")
    a, b, c, d = m.entries
    cross = (a * c.conj() * d * b.conj()).re()
    return a.norm_sq() * d.norm_sq() + b.norm_sq() * c.norm_sq() - 2 * cross


def dieudonne_det_sq_printed(m):
    """The variant with |b|^2|d|^2 as middle term; kept only for comparison."""
    if not is_quaternion(m.ctx):
        raise ContextMismatch("the Dieudonne determinant is implemented for quaternion orders")
    a, b, c, d = m.entries
    cross = (a * c.conj() * d * b.conj()).re()
    return a.norm_sq() * d.norm_sq() + b.norm_sq() * d.norm_sq() - 2 * cross
