"""Finite groups given by generators inside some exact multiplicative structure."""

from collections import deque
from math import lcm

from .smith import abelian_invariants, in_row_lattice


class FiniteGroup:
    """Closure of ``gens`` under multiplication.

    Elements must be hashable and support ``*``.  Every element carries the
    exponent vector of a spanning-tree word in the generators, which gives
    a presentation (one relator per Cayley-graph edge) and hence the
    abelianization.
    """

    def __init__(self, gens, identity, limit=1 << 16):
        self.gens = list(gens)
        self.identity = identity
        k = len(self.gens)
        self.words = {identity: (0,) * k}
        self.elements = [identity]
        queue = deque([identity])
        while queue:
            g = queue.popleft()
            for s_idx, s in enumerate(self.gens):
                h = g * s
                if h not in self.words:
                    w = list(self.words[g])
                    w[s_idx] += 1
                    self.words[h] = tuple(w)
                    self.elements.append(h)
                    queue.append(h)
                    if len(self.elements) > limit:
                        raise ValueError("group closure exceeded the size limit")
        self._relations = None

    def order(self):
        return len(self.elements)

    def element_order(self, g):
        k, x = 1, g
        while x != self.identity:
            x = x * g
            k += 1
        return k

    def exponent(self):
        e = 1
        for g in self.elements:
            e = lcm(e, self.element_order(g))
        return e

    def center(self):
        return [g for g in self.elements if all(g * s == s * g for s in self.gens)]

    def commutator_subgroup(self):
        comms = set()
        inv = {g: self.inverse(g) for g in self.elements}
        for g in self.elements:
            for h in self.elements:
                comms.add(g * h * inv[g] * inv[h])
        sub = FiniteGroup(sorted(comms, key=repr), self.identity)
        return set(sub.elements)

    def inverse(self, g):
        x = g
        prev = self.identity
        while x != self.identity:
            prev = x
            x = x * g
        return prev

    def relation_matrix(self):
        if self._relations is None:
            rows = []
            k = len(self.gens)
            for g in self.elements:
                wg = self.words[g]
                for s_idx, s in enumerate(self.gens):
                    wh = self.words[g * s]
                    row = [wg[t] - wh[t] + (1 if t == s_idx else 0) for t in range(k)]
                    if any(row):
                        rows.append(row)
            self._relations = rows
        return self._relations

    def abelianization(self):
        return abelian_invariants(self.relation_matrix(), len(self.gens))

    def abelian_class(self, g):
        """Exponent vector of g; meaningful modulo the relation lattice."""
        return self.words[g]

    def is_trivial_in_abelianization(self, g):
        return in_row_lattice(self.relation_matrix(), self.words[g])
