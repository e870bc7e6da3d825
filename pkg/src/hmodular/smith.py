"""Smith normal form over the integers and abelian invariants."""

from dataclasses import dataclass, field
from math import prod


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^rank x Z/t_1 x ... x Z/t_k with t_1 | t_2 | ... and every t_i > 1."""

    torsion: tuple = field(default_factory=tuple)
    rank: int = 0

    def __post_init__(self):
        torsion = tuple(int(t) for t in self.torsion)
        if any(t <= 1 for t in torsion):
            raise ValueError("torsion coefficients must exceed 1")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"divisibility chain broken: {torsion}")
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        object.__setattr__(self, "torsion", torsion)

    @property
    def order(self):
        """Group order, or None for infinite groups."""
        return prod(self.torsion) if self.rank == 0 else None

    def as_dict(self):
        return {"torsion": list(self.torsion), "rank": self.rank}

    def __str__(self):
        parts = [f"C{t}" for t in self.torsion] + ["Z"] * self.rank
        return " x ".join(parts) if parts else "1"


def snf(matrix):
    """Invariant factors d_1 | d_2 | ... | d_r (all positive) of an integer matrix.

    ``r`` is the rank; the zero part of the diagonal is implied.  Works on
    a copy; entries may be arbitrarily large Python ints.
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        # smallest nonzero entry of the remaining block becomes the pivot
        best = None
        for i in range(t, rows):
            row = a[i]
            for j in range(t, cols):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                v = a[i][t]
                if v:
                    q = v // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, cols):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        dirty = True
            rt = a[t]
            for j in range(t + 1, cols):
                v = rt[j]
                if v:
                    q = v // p
                    if q:
                        for row in a[t:]:
                            row[j] -= q * row[t]
                    if rt[j]:
                        dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = None
                for i in range(t + 1, rows):
                    if any(a[i][j] % p for j in range(t + 1, cols)):
                        bad = i
                        break
                if bad is None:
                    break
                ri, rt = a[bad], a[t]
                for j in range(t, cols):
                    rt[j] += ri[j]
                continue
            # move the smallest remaining entry of row t / column t to the pivot
            best = (abs(p), t, t)
            for i in range(t + 1, rows):
                v = a[i][t]
                if v and abs(v) < best[0]:
                    best = (abs(v), i, t)
            for j in range(t + 1, cols):
                v = a[t][j]
                if v and abs(v) < best[0]:
                    best = (abs(v), t, j)
            _, i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def abelian_invariants(relation_matrix, ngens):
    """Abelian group Z^ngens / (row span of relation_matrix)."""
    d = snf(relation_matrix) if relation_matrix else []
    return AbelianInvariants(tuple(x for x in d if x > 1), ngens - len(d))


def in_row_lattice(rows, v):
    """Is the integer vector v in the Z-span of ``rows``?"""
    if not any(v):
        return True
    if not rows:
        return False
    base = snf(rows)
    ext = snf(list(rows) + [list(v)])
    return len(base) == len(ext) and prod(base) == prod(ext)
