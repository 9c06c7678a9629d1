"""Finite groups given by Cayley tables (identity at index 0), plus a small library."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import Morphism, TableCategory, is_normal_mono
from .errors import MalformedInput, PreconditionError


@dataclass(frozen=True)
class FinGroup:
    table: tuple
    name: str = field(default="", compare=False)
    kind = "group"

    def __post_init__(self):
        t = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", t)
        n = len(t)
        if n < 1 or any(len(r) != n for r in t):
            raise MalformedInput("group table must be square and non-empty")
        for a in range(n):
            if t[0][a] != a or t[a][0] != a:
                raise MalformedInput("index 0 must be the identity")
            if sorted(t[a]) != list(range(n)):
                raise MalformedInput("group table rows must be permutations")
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise MalformedInput("operation is not associative")
        inv = [0] * n
        for a in range(n):
            inv[a] = t[a].index(0)
        object.__setattr__(self, "_inv", tuple(inv))

    @property
    def size(self):
        return len(self.table)

    def op(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def conj(self, g, x):
        """g x g^-1"""
        t = self.table
        return t[t[g][x]][self._inv[g]]

    def order_of(self, a):
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def __repr__(self):
        return f"FinGroup({self.name or self.size})"


def group_from(elements, mul, name=""):
    """Build a table from a list of hashable elements (identity first) and a product."""
    idx = {e: i for i, e in enumerate(elements)}
    if len(idx) != len(elements):
        raise MalformedInput("repeated elements")
    t = tuple(tuple(idx[mul(a, b)] for b in elements) for a in elements)
    return FinGroup(t, name)


def generated_by(gens, mul, identity, name=""):
    """Closure of a set of generators under mul; elements in BFS order."""
    els = [identity]
    seen = {identity}
    i = 0
    while i < len(els):
        x = els[i]
        i += 1
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                els.append(y)
    return group_from(els, mul, name)


def cyclic(n):
    return group_from(list(range(n)), lambda a, b: (a + b) % n, f"Z{n}")


def direct_product(G, H, name=""):
    els = [(a, b) for a in range(G.size) for b in range(H.size)]
    return group_from(els, lambda x, y: (G.op(x[0], y[0]), H.op(x[1], y[1])), name or f"{G.name}x{H.name}")


def abelian(*ns):
    G = cyclic(ns[0])
    for n in ns[1:]:
        G = direct_product(G, cyclic(n))
    return FinGroup(G.table, "x".join(f"Z{n}" for n in ns))


def semidirect_cyclic(n, m, r, name=""):
    """Z_n ⋊ Z_m, the generator of Z_m acting by x -> r x."""
    if pow(r, m, n) != 1 % n:
        raise MalformedInput("r^m must be 1 mod n")
    els = [(a, b) for b in range(m) for a in range(n)]
    return group_from(els, lambda x, y: ((x[0] + pow(r, x[1], n) * y[0]) % n, (x[1] + y[1]) % m), name)


def dihedral(n):
    """Symmetries of the n-gon, order 2n."""
    return semidirect_cyclic(n, 2, n - 1 if n > 1 else 0, f"D{2 * n}")


def dicyclic(n):
    """<a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>, order 4n."""
    m = 2 * n

    def mul(p, q):
        (k1, e1), (k2, e2) = p, q
        if e1 == 0:
            return ((k1 + k2) % m, e2)
        if e2 == 0:
            return ((k1 - k2) % m, 1)
        return ((k1 - k2 + n) % m, 0)

    els = [(k, e) for e in range(2) for k in range(m)]
    return group_from(els, mul, "Q8" if n == 2 else ("Q16" if n == 4 else f"Dic{4 * n}"))


def _pmul(p, q):
    """(p*q)(i) = p(q(i))"""
    return tuple(p[i] for i in q)


def symmetric(n):
    if n == 3:
        gens = [(1, 0, 2), (1, 2, 0)]
    else:
        gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return generated_by(gens, _pmul, tuple(range(n)), f"S{n}")


def alternating4():
    return generated_by([(1, 2, 0, 3), (0, 2, 3, 1)], _pmul, (0, 1, 2, 3), "A4")


def swap_semidirect(p=3):
    """(Z/p × Z/p) ⋊ C2 with C2 swapping the two factors (for p = 3 this is Z3 × S3)."""
    def mul(x, y):
        a, b, s = x
        c, d, t = y
        if s:
            c, d = d, c
        return ((a + c) % p, (b + d) % p, (s + t) % 2)

    els = [(a, b, s) for s in range(2) for a in range(p) for b in range(p)]
    return group_from(els, mul, f"(Z{p}xZ{p})x|C2")


def klein_by_z4():
    """(Z2 × Z2) ⋊ Z4, the generator of Z4 swapping the factors."""
    def mul(x, y):
        a, b, k = x
        c, d, l = y
        if k % 2:
            c, d = d, c
        return ((a + c) % 2, (b + d) % 2, (k + l) % 4)

    els = [(a, b, k) for k in range(4) for a in range(2) for b in range(2)]
    return group_from(els, mul, "(Z2xZ2)x|Z4")


def central_product_d8_z4():
    """D8 ∘ Z4: D8 × Z4 with the central involutions identified (the Pauli group)."""
    D = dihedral(4)
    r2 = 2  # rotation by pi, the centre of D8
    els = [(d, z) for z in range(2) for d in range(8)]

    def mul(x, y):
        d, z = D.op(x[0], y[0]), x[1] + y[1]
        if z >= 2:  # i^2 = -1 is identified with r^2
            d, z = D.op(d, r2), z - 2
        return (d, z)

    return group_from(els, mul, "D8oZ4")


def generalized_dihedral_z3z3():
    """(Z3 × Z3) ⋊ C2 with C2 acting by inversion."""
    def mul(x, y):
        a, b, s = x
        c, d, t = y
        if s:
            c, d = -c, -d
        return ((a + c) % 3, (b + d) % 3, (s + t) % 2)

    els = [(a, b, s) for s in range(2) for a in range(3) for b in range(3)]
    return group_from(els, mul, "Dih(Z3xZ3)")


def _library():
    # every group of order <= 23 up to isomorphism, and a selection of order 24
    L = [cyclic(n) for n in range(1, 24)]
    L += [abelian(2, 2), abelian(2, 4), abelian(2, 2, 2), abelian(3, 3), abelian(2, 6),
          abelian(4, 4), abelian(2, 8), abelian(2, 2, 4), abelian(2, 2, 2, 2), abelian(3, 6), abelian(2, 10)]
    L += [symmetric(3), dihedral(4), dicyclic(2), dihedral(5), alternating4(), dihedral(6),
          dicyclic(3), dihedral(7), dihedral(8), dicyclic(4),
          semidirect_cyclic(8, 2, 3, "SD16"), semidirect_cyclic(8, 2, 5, "M16"),
          semidirect_cyclic(4, 4, 3, "Z4x|Z4"), direct_product(cyclic(2), dihedral(4), "Z2xD8"),
          direct_product(cyclic(2), dicyclic(2), "Z2xQ8"), klein_by_z4(), central_product_d8_z4()]
    L += [dihedral(9), generalized_dihedral_z3z3(), direct_product(cyclic(3), symmetric(3), "Z3xS3"),
          dihedral(10), dicyclic(5), semidirect_cyclic(5, 4, 2, "F20"), semidirect_cyclic(7, 3, 2, "Z7x|Z3"),
          dihedral(11), cyclic(24), symmetric(4), dihedral(12), direct_product(cyclic(2), alternating4(), "Z2xA4")]
    return L


_LIB = None


def library(max_order=24):
    """The bundled groups of order at most max_order, sorted by (order, name)."""
    global _LIB
    if _LIB is None:
        _LIB = sorted(_library(), key=lambda G: (G.size, G.name))
    return [G for G in _LIB if G.size <= max_order]


PRESETS = {
    "S3": lambda: symmetric(3),
    "D8": lambda: dihedral(4),
    "Z4": lambda: cyclic(4),
    "Q8": lambda: dicyclic(2),
    "A4": alternating4,
    "S4": lambda: symmetric(4),
    "Z2": lambda: cyclic(2),
    "Z3": lambda: cyclic(3),
    "V4": lambda: abelian(2, 2),
}


def preset(name):
    try:
        return PRESETS[name]()
    except KeyError:
        raise MalformedInput(f"unknown group preset {name!r}") from None


# -- subgroup helpers (element-set level) ------------------------------------


def closure(G, elems):
    S = set(elems) | {0}
    todo = list(S)
    while todo:
        a = todo.pop()
        for b in list(S):
            for c in (G.op(a, b), G.op(b, a)):
                if c not in S:
                    S.add(c)
                    todo.append(c)
    return tuple(sorted(S))


def normal_closure_elems(G, elems):
    S = set(closure(G, elems))
    while True:
        conj = {G.conj(g, x) for g in range(G.size) for x in S}
        if conj <= S:
            return tuple(sorted(S))
        S = set(closure(G, S | conj))


def is_normal_set(G, S):
    S = set(S)
    return all(G.conj(g, x) in S for g in range(G.size) for x in S)


def generators(G):
    """A small generating set, greedily picking elements of largest order."""
    order = sorted(range(1, G.size), key=lambda a: (-G.order_of(a), a))
    gens, H = [], {0}
    for a in order:
        if a not in H:
            gens.append(a)
            H = set(closure(G, list(H) + [a]))
            if len(H) == G.size:
                break
    return gens


def is_commutative(G):
    return all(G.op(a, b) == G.op(b, a) for a in range(G.size) for b in range(a + 1, G.size))


def center(G):
    return tuple(a for a in range(G.size) if all(G.op(a, b) == G.op(b, a) for b in range(G.size)))


class FinGrp(TableCategory):
    kind = "group"

    def zero_object(self):
        return FinGroup(((0,),), "1")

    def hom(self, dom, cod, table) -> Morphism:
        t = tuple(int(v) for v in table)
        if len(t) != dom.size or any(not 0 <= v < cod.size for v in t):
            raise MalformedInput("bad group map table")
        for a in range(dom.size):
            for b in range(dom.size):
                if t[dom.op(a, b)] != cod.op(t[a], t[b]):
                    raise MalformedInput("table is not a group homomorphism")
        return Morphism(dom, cod, t)

    def subobject(self, X, elems):
        elems = sorted(elems)
        idx = {x: i for i, x in enumerate(elems)}
        S = FinGroup(tuple(tuple(idx[X.op(a, b)] for b in elems) for a in elems))
        return S, Morphism(S, X, tuple(elems))

    def generated(self, X, elems):
        return closure(X, elems)

    def quotient(self, G, N):
        """(G/N, projection) with cosets labelled by least element, in that order."""
        N = tuple(sorted(N))
        if not is_normal_set(G, N) or closure(G, N) != N:
            raise PreconditionError("quotient by a non-normal subset")
        label = [None] * G.size
        reps = []
        for g in range(G.size):
            if label[g] is None:
                reps.append(g)
                for n in N:
                    label[G.op(g, n)] = len(reps) - 1
        t = tuple(tuple(label[G.op(a, b)] for b in reps) for a in reps)
        Q = FinGroup(t)
        return Q, Morphism(G, Q, tuple(label))

    def cokernel(self, f):
        def build():
            return self.quotient(f.cod, normal_closure_elems(f.cod, set(f.data)))[1]

        return self._cached(("coker", f), build)

    def _product_object(self, X, Y):
        m = Y.size
        els = [(x, y) for x in range(X.size) for y in range(m)]
        return FinGroup(tuple(tuple(X.op(a[0], b[0]) * m + Y.op(a[1], b[1]) for b in els) for a in els))

    def homs(self, X, Y):
        gens = self._cached(("gens", X), lambda: generators(X))
        cands = []
        for g in gens:
            o = X.order_of(g)
            cands.append([y for y in range(Y.size) if o % Y.order_of(y) == 0])
        for imgs in itertools.product(*cands):
            t = _extend(X, Y, gens, imgs)
            if t is not None:
                yield Morphism(X, Y, t)

    def objects(self, max_size):
        return library(max_size)

    def isomorphic(self, X, Y):
        if X.size != Y.size:
            return False
        if X == Y:
            return True
        if sorted(X.order_of(a) for a in range(X.size)) != sorted(Y.order_of(a) for a in range(Y.size)):
            return False
        return any(self.is_mono(h) for h in self.homs(X, Y))

    def normal_subobjects(self, X):
        return self._cached(("nsub", X), lambda: [s for s in self.subobjects(X) if is_normal_set(X, s.data)])


def _extend(X, Y, gens, imgs):
    t = [None] * X.size
    t[0] = 0
    queue = [0]
    for x in queue:
        tx = t[x]
        for g, v in zip(gens, imgs):
            y = X.op(x, g)
            w = Y.op(tx, v)
            if t[y] is None:
                t[y] = w
                queue.append(y)
            elif t[y] != w:
                return None
    return tuple(t)


# -- operations on subgroups ------------------------------------------------


def normal_closure_subgroup(C: FinGrp, G, H):
    return C.subobject(G, normal_closure_elems(G, H))[1]


def join_subgroups(C: FinGrp, G, H, K):
    return C.subobject(G, closure(G, set(H) | set(K)))[1]


def join_normal(C: FinGrp, G, H, K):
    j = join_subgroups(C, G, H, K)
    if is_normal_set(G, H) and is_normal_set(G, K) and not is_normal_set(G, j.data):
        raise AssertionError("join of normal subgroups is not normal")
    return j


def commuting_subobjects(C: FinGrp, h: Morphism, k: Morphism):
    """(True, μ: H×K → G, (a, b) ↦ a·b) when the images commute elementwise, else (False, None)."""
    G = h.cod
    if any(G.op(a, b) != G.op(b, a) for a in h.data for b in k.data):
        return False, None
    P, p1, p2 = C.product(h.dom, k.dom)
    m = k.dom.size
    mu = Morphism(P, G, tuple(G.op(h.data[i // m], k.data[i % m]) for i in range(P.size)))
    C.hom(P, G, mu.data)  # raises if not a homomorphism
    return True, mu


def abelian_object_check(C: FinGrp, G) -> bool:
    """Is the diagonal G → G×G a normal mono?"""
    one = C.identity(G)
    return is_normal_mono(C, C.pair(one, one))

