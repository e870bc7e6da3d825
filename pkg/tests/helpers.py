"""Independent oracles used by several test modules."""

from fractions import Fraction
from itertools import combinations
from math import gcd


def det(rows):
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in rows]
    size = len(a)
    out = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            out = -out
        out *= a[col][col]
        for r in range(col + 1, size):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return out


def determinant_divisors(rows):
    """d_k = gcd of all k x k minors, for k up to the rank."""
    m, n = len(rows), len(rows[0]) if rows else 0
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, int(det([[rows[r][c] for c in cs] for r in rs])))
        if g == 0:
            break
        out.append(g)
    return out


def invariant_factors_from_minors(rows):
    divs = determinant_divisors(rows)
    return [d // p for d, p in zip(divs, [1] + divs)]


def regular_rep_det(m):
    """Determinant of X -> m X on M_2(H) viewed as a 16-dimensional real space."""
    ctx = m.ctx
    zero = ctx.zero()
    basis = []
    for pos in range(4):
        for t in range(4):
            amb = [0, 0, 0, 0]
            amb[t] = 1
            entries = [zero] * 4
            entries[pos] = ctx.element(amb)
            basis.append(type(m)(ctx, *entries))
    cols = []
    for x in basis:
        y = m * x
        cols.append([c for e in y.entries for c in e.amb])
    return det([list(r) for r in zip(*cols)])
