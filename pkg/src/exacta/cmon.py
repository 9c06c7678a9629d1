"""Finite commutative monoids.  Unit at index 0, operation given by a table."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import Morphism, TableCategory
from .errors import MalformedInput, PreconditionError


@dataclass(frozen=True)
class CMonoid:
    table: tuple
    name: str = field(default="", compare=False)
    kind = "cmon"

    def __post_init__(self):
        t = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", t)
        n = len(t)
        if n < 1 or any(len(r) != n for r in t):
            raise MalformedInput("monoid table must be square and non-empty")
        R = range(n)
        for a in R:
            if t[0][a] != a:
                raise MalformedInput("index 0 must be the unit")
            for b in R:
                if not 0 <= t[a][b] < n:
                    raise MalformedInput("table entry out of range")
                if t[a][b] != t[b][a]:
                    raise MalformedInput("operation is not commutative")
        for a in R:
            for b in R:
                ab = t[a][b]
                for c in R:
                    if t[ab][c] != t[a][t[b][c]]:
                        raise MalformedInput("operation is not associative")

    @property
    def size(self):
        return len(self.table)

    def op(self, a, b):
        return self.table[a][b]

    def __repr__(self):
        return f"CMonoid({self.name or self.table})"


@dataclass(frozen=True)
class Congruence:
    """Partition of the carrier; labels[x] is the least element of x's class."""

    labels: tuple

    @property
    def classes(self):
        out = {}
        for x, r in enumerate(self.labels):
            out.setdefault(r, []).append(x)
        return [tuple(out[r]) for r in sorted(out)]

    def related(self, a, b):
        return self.labels[a] == self.labels[b]


def cyclic_monoid(n, name=""):
    return CMonoid(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), name or f"Z/{n}")


def max_semilattice(n, name=""):
    return CMonoid(tuple(tuple(max(a, b) for b in range(n)) for a in range(n)), name or f"max{n}")


def congruence_closure(M: CMonoid, pairs) -> Congruence:
    """Least congruence on M containing the given pairs."""
    n = M.size
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        a, b = find(a), find(b)
        if a == b:
            return False
        parent[max(a, b)] = min(a, b)
        return True

    for a, b in pairs:
        union(a, b)
    t = M.table
    changed = True
    while changed:
        changed = False
        for a in range(n):
            r = find(a)
            if r == a:
                continue
            for c in range(n):
                if union(t[a][c], t[r][c]):
                    changed = True
    return Congruence(tuple(find(a) for a in range(n)))


def quotient(M: CMonoid, cong: Congruence):
    reps = sorted(set(cong.labels))
    idx = {r: i for i, r in enumerate(reps)}
    t = tuple(tuple(idx[cong.labels[M.op(a, b)]] for b in reps) for a in reps)
    Q = CMonoid(t)
    return Q, Morphism(M, Q, tuple(idx[cong.labels[x]] for x in range(M.size)))


class CMon(TableCategory):
    kind = "cmon"
    has_coproducts = True
    additive = True

    def zero_object(self):
        return CMonoid(((0,),))

    def hom(self, dom, cod, table) -> Morphism:
        t = tuple(int(v) for v in table)
        if len(t) != dom.size or any(not 0 <= v < cod.size for v in t):
            raise MalformedInput("bad monoid map table")
        if t[0] != 0:
            raise MalformedInput("monoid map must preserve the unit")
        for a in range(dom.size):
            for b in range(dom.size):
                if t[dom.op(a, b)] != cod.op(t[a], t[b]):
                    raise MalformedInput("table is not a monoid homomorphism")
        return Morphism(dom, cod, t)

    def subobject(self, X, elems):
        elems = sorted(elems)
        idx = {x: i for i, x in enumerate(elems)}
        S = CMonoid(tuple(tuple(idx[X.op(a, b)] for b in elems) for a in elems))
        return S, Morphism(S, X, tuple(elems))

    def generated(self, X, elems):
        S = set(elems) | {0}
        todo = list(S)
        while todo:
            a = todo.pop()
            for b in list(S):
                c = X.op(a, b)
                if c not in S:
                    S.add(c)
                    todo.append(c)
        return tuple(sorted(S))

    def cokernel(self, f):
        def build():
            cong = congruence_closure(f.cod, [(y, 0) for y in set(f.data)])
            return quotient(f.cod, cong)[1]

        return self._cached(("coker", f), build)

    def _product_object(self, X, Y):
        m = Y.size
        els = [(x, y) for x in range(X.size) for y in range(m)]
        return CMonoid(tuple(tuple(X.op(a[0], b[0]) * m + Y.op(a[1], b[1]) for b in els) for a in els))

    def coproduct(self, X, Y):
        P, _, _ = self.product(X, Y)
        m = Y.size
        i1 = Morphism(X, P, tuple(x * m for x in range(X.size)))
        i2 = Morphism(Y, P, tuple(range(m)))
        return P, i1, i2

    def biproduct(self, X, Y):
        P, p1, p2 = self.product(X, Y)
        _, i1, i2 = self.coproduct(X, Y)
        return P, (i1, i2), (p1, p2)

    def copair(self, f, g):
        if f.cod != g.cod:
            raise PreconditionError("copair: codomains differ")
        P, _, _ = self.product(f.dom, g.dom)
        m = g.dom.size
        Z = f.cod
        return Morphism(P, Z, tuple(Z.op(f.data[i // m], g.data[i % m]) for i in range(P.size)))

    def add(self, f, g):
        if f.dom != g.dom or f.cod != g.cod:
            raise PreconditionError("add: hom-sets differ")
        return Morphism(f.dom, f.cod, tuple(f.cod.op(a, b) for a, b in zip(f.data, g.data)))

    def pushout(self, f, g):
        if f.dom != g.dom:
            raise PreconditionError("pushout: domains differ")
        P, i1, i2 = self.coproduct(f.cod, g.cod)
        pairs = [(i1.data[f.data[a]], i2.data[g.data[a]]) for a in range(f.dom.size)]
        Q, q = quotient(P, congruence_closure(P, pairs))
        return Q, self.compose(q, i1), self.compose(q, i2)

    def is_epi(self, f):
        # epi iff the two legs of the cokernel pair agree
        def build():
            _, a, b = self.pushout(f, f)
            return a == b

        return self._cached(("epi", f), build)

    def homs(self, X, Y):
        n = X.size
        for rest in itertools.product(range(Y.size), repeat=n - 1):
            t = (0,) + rest
            if all(t[X.op(a, b)] == Y.op(t[a], t[b]) for a in range(1, n) for b in range(a, n)):
                yield Morphism(X, Y, t)

    def objects(self, max_size):
        out = []
        for n in range(1, max_size + 1):
            out.extend(enumerate_monoids(n))
        return out

    def isomorphic(self, X, Y):
        return X.size == Y.size and canonical_table(X) == canonical_table(Y)

    def subobjects(self, X):
        def build():
            els = range(1, X.size)
            found = set()
            for r in range(X.size):
                for combo in itertools.combinations(els, r):
                    S = (0,) + combo
                    if self.generated(X, S) == S:
                        found.add(S)
            return [self.subobject(X, S)[1] for S in sorted(found, key=lambda s: (len(s), s))]

        return self._cached(("subs", X), build)


def normal_epi_kernel_pair(f: Morphism) -> Congruence:
    """{(b, b') : b + k = b' + k' for some k, k' in the kernel of f}."""
    B = f.dom
    K = [x for x in range(B.size) if f.data[x] == 0]
    shifted = [frozenset(B.op(b, k) for k in K) for b in range(B.size)]
    labels = []
    for b in range(B.size):
        labels.append(next(c for c in range(B.size) if shifted[b] & shifted[c]))
    # the relation must already be an equivalence for the formula to be a kernel pair
    for b in range(B.size):
        for c in range(B.size):
            if bool(shifted[b] & shifted[c]) != (labels[b] == labels[c]):
                raise PreconditionError("relation is not transitive; f is not a normal epi")
    return Congruence(tuple(labels))


def canonical_table(M: CMonoid):
    n = M.size
    best = None
    for perm in itertools.permutations(range(1, n)):
        p = (0,) + perm  # p[old] = new
        inv = [0] * n
        for old, new in enumerate(p):
            inv[new] = old
        t = tuple(tuple(p[M.op(inv[a], inv[b])] for b in range(n)) for a in range(n))
        if best is None or t < best:
            best = t
    return best


def enumerate_monoids(n: int) -> list:
    """All commutative monoids of order n up to isomorphism, as canonical tables."""
    if n == 1:
        return [CMonoid(((0,),), "0")]
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    t = [[None] * n for _ in range(n)]
    for a in range(n):
        t[0][a] = t[a][0] = a
    found = set()

    def consistent():
        R = range(n)
        for a in R:
            for b in R:
                ab = t[a][b]
                if ab is None:
                    continue
                for c in R:
                    bc = t[b][c]
                    if bc is None:
                        continue
                    l, r = t[ab][c], t[a][bc]
                    if l is not None and r is not None and l != r:
                        return False
        return True

    def rec(k):
        if k == len(cells):
            found.add(tuple(tuple(r) for r in t))
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = t[j][i] = v
            if consistent():
                rec(k + 1)
        t[i][j] = t[j][i] = None

    rec(0)
    canon = sorted({canonical_table(CMonoid(tab)) for tab in found})
    return [CMonoid(tab, f"M{n}.{i}") for i, tab in enumerate(canon)]
