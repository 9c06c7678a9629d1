"""Finite pointed sets.  Carrier {0..n-1} with base point 0."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Morphism, TableCategory
from .errors import MalformedInput, PreconditionError


@dataclass(frozen=True)
class PointedSet:
    size: int
    kind = "setpt"

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise MalformedInput("pointed set needs size >= 1")

    def __repr__(self):
        return f"PointedSet({self.size})"


class SetPt(TableCategory):
    kind = "setpt"
    has_coproducts = True

    def zero_object(self):
        return PointedSet(1)

    def obj(self, n):
        return PointedSet(n)

    def hom(self, dom, cod, table) -> Morphism:
        t = tuple(int(v) for v in table)
        if len(t) != dom.size:
            raise MalformedInput(f"table has length {len(t)}, expected {dom.size}")
        if t and t[0] != 0:
            raise MalformedInput("pointed map must send the base point to the base point")
        if any(v < 0 or v >= cod.size for v in t):
            raise MalformedInput("table entry out of range")
        return Morphism(dom, cod, t)

    def subobject(self, X, elems):
        elems = sorted(elems)
        return PointedSet(len(elems)), Morphism(PointedSet(len(elems)), X, tuple(elems))

    def generated(self, X, elems):
        return tuple(sorted(set(elems) | {0}))

    def cokernel(self, f):
        def build():
            im = set(f.data)
            idx, k = {}, 1
            for y in range(f.cod.size):
                if y not in im:
                    idx[y] = k
                    k += 1
            Q = PointedSet(k)
            return Morphism(f.cod, Q, tuple(idx.get(y, 0) for y in range(f.cod.size)))

        return self._cached(("coker", f), build)

    def _product_object(self, X, Y):
        return PointedSet(X.size * Y.size)

    def coproduct(self, X, Y):
        """The wedge: disjoint union with base points identified."""
        S = PointedSet(X.size + Y.size - 1)
        i1 = Morphism(X, S, tuple(range(X.size)))
        i2 = Morphism(Y, S, (0,) + tuple(range(X.size, X.size + Y.size - 1)))
        return S, i1, i2

    wedge = coproduct

    def copair(self, f, g):
        if f.cod != g.cod:
            raise PreconditionError("copair: codomains differ")
        return Morphism(PointedSet(f.dom.size + g.dom.size - 1), f.cod, f.data + g.data[1:])

    def pushout(self, f, g):
        if f.dom != g.dom:
            raise PreconditionError("pushout: domains differ")
        S, i1, i2 = self.coproduct(f.cod, g.cod)
        parent = list(range(S.size))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a in range(f.dom.size):
            x, y = find(i1.data[f.data[a]]), find(i2.data[g.data[a]])
            if x != y:
                parent[max(x, y)] = min(x, y)
        q = _quotient_table([find(s) for s in range(S.size)])
        P = PointedSet(max(q) + 1)
        qm = Morphism(S, P, q)
        return P, self.compose(qm, i1), self.compose(qm, i2)

    def homs(self, X, Y):
        for rest in itertools.product(range(Y.size), repeat=X.size - 1):
            yield Morphism(X, Y, (0,) + rest)

    def objects(self, max_size):
        return [PointedSet(n) for n in range(1, max_size + 1)]

    def isomorphic(self, X, Y):
        return X.size == Y.size

    def retraction(self, f):
        """A left inverse of an injective pointed map (everything off the image goes to the base point)."""
        if not self.is_mono(f):
            return None
        inv = [0] * f.cod.size
        for x, y in enumerate(f.data):
            inv[y] = x
        return Morphism(f.cod, f.dom, tuple(inv))


def _quotient_table(labels):
    """Relabel class labels by order of first appearance (base point class first)."""
    seen = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    return tuple(out)
