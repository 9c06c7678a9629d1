"""Finitely generated abelian groups.

An object is stored in canonical form: a tuple of moduli (d1, ..., dk, 0, ..., 0)
with 2 <= d1 | d2 | ... | dk, the zeros standing for free summands Z.  So the
group is Z^n / diag(moduli) Z^n.  A morphism is an integer matrix acting on
column vectors, with row i reduced modulo the i-th modulus of the codomain.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from . import smith
from .core import Category, Morphism, same_subobject
from .errors import MalformedInput, NotEpic, NotMonic, PreconditionError, ResourceLimit

FINITE_CAP = 4096  # largest group whose elements we are willing to list


@dataclass(frozen=True)
class AbGroup:
    moduli: tuple
    kind = "ab"

    def __post_init__(self):
        m = tuple(int(d) for d in self.moduli)
        object.__setattr__(self, "moduli", m)
        tors = [d for d in m if d]
        if any(d < 0 for d in m) or any(d == 1 for d in m):
            raise MalformedInput("moduli must be 0 or >= 2")
        if m != tuple(tors) + (0,) * (len(m) - len(tors)):
            raise MalformedInput("free summands must come last")
        if any(b % a for a, b in zip(tors, tors[1:])):
            raise MalformedInput("torsion moduli must form a divisibility chain")

    @property
    def ngens(self):
        return len(self.moduli)

    @property
    def rank(self):
        return sum(1 for d in self.moduli if d == 0)

    @property
    def torsion(self):
        return tuple(d for d in self.moduli if d)

    @property
    def is_finite(self):
        return 0 not in self.moduli

    @property
    def order(self):
        return prod(self.moduli) if self.is_finite else None

    def reduce(self, v):
        return tuple(x % d if d else x for x, d in zip(v, self.moduli))

    def __repr__(self):
        if not self.moduli:
            return "Ab(0)"
        return "Ab(" + " + ".join(f"Z/{d}" if d else "Z" for d in self.moduli) + ")"


def canonicalize(raw_moduli, extra=()):
    """Present Z^n / (diag(raw) + span(extra columns)) canonically.

    Returns (G, P, S): P (k x n) maps raw coordinates to canonical ones and is
    an isomorphism of the quotient; S (n x k) is its inverse.
    """
    n = len(raw_moduli)
    cols = [[raw_moduli[i] if i == j else 0 for i in range(n)] for j in range(n)] + [list(c) for c in extra]
    R = [[c[i] for c in cols] for i in range(n)]
    U, D, _ = smith.snf(R, rows=n, cols=len(cols))
    diag = [D[i][i] if i < len(cols) else 0 for i in range(n)]
    kept = [i for i in range(n) if diag[i] != 1]
    G = AbGroup(tuple(diag[i] for i in kept))
    Uinv = smith.inverse_unimodular(U) if n else []
    P = [list(U[i]) for i in kept]
    S = [[Uinv[r][i] for i in kept] for r in range(n)]
    return G, P, S


def ab(*moduli):
    """Canonical form of Z/m1 + Z/m2 + ... (0 meaning Z, 1 meaning the trivial group)."""
    return canonicalize([m for m in moduli if m != 1])[0]


def cyclic(n):
    return ab(n)


class FinAb(Category):
    kind = "ab"
    has_coproducts = True
    additive = True

    def zero_object(self):
        return AbGroup(())

    # construction and validation ---------------------------------------
    def _mk(self, dom, cod, rows):
        """Reduce and wrap; rows is cod.ngens lists of dom.ngens ints."""
        red = []
        for i, d in enumerate(cod.moduli):
            r = rows[i]
            red.append(tuple(x % d if d else x for x in r))
        return Morphism(dom, cod, tuple(red))

    def _well_defined(self, dom, cod, rows):
        for j, d in enumerate(dom.moduli):
            if d == 0:
                continue
            col = [d * rows[i][j] for i in range(cod.ngens)]
            if any(cod.reduce(col)):
                return False
        return True

    def hom(self, dom, cod, matrix) -> Morphism:
        rows = [list(map(int, r)) for r in matrix]
        if len(rows) != cod.ngens or any(len(r) != dom.ngens for r in rows):
            raise MalformedInput(f"matrix must be {cod.ngens} x {dom.ngens}")
        if not self._well_defined(dom, cod, rows):
            raise MalformedInput("matrix does not respect the relations of the domain")
        return self._mk(dom, cod, rows)

    def from_columns(self, dom, cod, cols):
        return self._mk(dom, cod, [[c[i] for c in cols] for i in range(cod.ngens)])

    def columns(self, f):
        return [[f.data[i][j] for i in range(f.cod.ngens)] for j in range(f.dom.ngens)]

    def apply(self, f, v):
        return f.cod.reduce([sum(a * x for a, x in zip(row, v)) for row in f.data])

    # primitives ---------------------------------------------------------
    def identity(self, X):
        return self._mk(X, X, [[int(i == j) for j in range(X.ngens)] for i in range(X.ngens)])

    def zero_map(self, X, Y):
        return Morphism(X, Y, tuple((0,) * X.ngens for _ in range(Y.ngens)))

    def compose(self, g, f):
        if f.cod != g.dom:
            raise PreconditionError("composition of non-composable morphisms")
        k = f.cod.ngens
        rows = [[sum(g.data[i][t] * f.data[t][j] for t in range(k)) for j in range(f.dom.ngens)]
                for i in range(g.cod.ngens)]
        return self._mk(f.dom, g.cod, rows)

    def add(self, f, g):
        if f.dom != g.dom or f.cod != g.cod:
            raise PreconditionError("add: hom-sets differ")
        return self._mk(f.dom, f.cod, [[a + b for a, b in zip(r, s)] for r, s in zip(f.data, g.data)])

    def negate(self, f):
        return self._mk(f.dom, f.cod, [[-a for a in r] for r in f.data])

    def present_subgroup(self, X, gens):
        """(S, S -> X) for the subgroup generated by the given vectors."""
        s = len(gens)
        n = X.ngens
        if s == 0:
            return self.zero_object(), self.zero_map(self.zero_object(), X)
        # relations among generators: c with G c in diag(X) Z^n
        M = [[gens[j][i] for j in range(s)] + [X.moduli[i] if i == t else 0 for t in range(n)] for i in range(n)]
        ker = smith.kernel_basis(M, cols=s + n)
        rel = [v[:s] for v in ker]
        S, _, sec = canonicalize([0] * s, rel)
        incl = [[sum(gens[j][i] * sec[j][c] for j in range(s)) for c in range(S.ngens)] for i in range(n)]
        return S, self._mk(S, X, incl)

    def kernel(self, f):
        key = ("ker", f)
        if key in self._memo:
            return self._memo[key]
        A, B = f.dom, f.cod
        n, m = A.ngens, B.ngens
        M = [list(f.data[i]) + [B.moduli[i] if i == t else 0 for t in range(m)] for i in range(m)]
        gens = [v[:n] for v in smith.kernel_basis(M, cols=n + m)] if m else \
            [[int(i == j) for i in range(n)] for j in range(n)]
        gens = [g for g in gens if any(A.reduce(g))]
        out = self.present_subgroup(A, gens)[1]
        self._memo[key] = out
        return out

    def cokernel(self, f):
        key = ("coker", f)
        if key in self._memo:
            return self._memo[key]
        Q, P, _ = canonicalize(list(f.cod.moduli), self.columns(f))
        out = self._mk(f.cod, Q, P)
        self._memo[key] = out
        return out

    def image(self, f):
        return self.present_subgroup(f.cod, [c for c in self.columns(f) if any(c)])[1]

    def is_mono(self, f):
        return self.kernel(f).dom.ngens == 0

    def is_epi(self, f):
        return self.cokernel(f).cod.ngens == 0

    def is_iso(self, f):
        return self.is_mono(f) and self.is_epi(f)

    def inverse(self, f):
        if not self.is_iso(f):
            raise PreconditionError("not invertible")
        return self.lift(f, self.identity(f.cod))

    def _solve_in(self, f, b):
        """Some a with f(a) = b in cod f, as an integer vector, or None."""
        X = f.cod
        n, m = f.dom.ngens, X.ngens
        M = [list(f.data[i]) + [X.moduli[i] if i == t else 0 for t in range(m)] for i in range(m)]
        x = smith.solve(M, list(b), n + m)
        return None if x is None else x[:n]

    def lift(self, m, f):
        if m.cod != f.cod:
            raise PreconditionError("lift: codomains differ")
        cols = []
        for c in self.columns(f):
            a = self._solve_in(m, c)
            if a is None:
                return None
            cols.append(a)
        rows = [[c[i] for c in cols] for i in range(m.dom.ngens)]
        if not self._well_defined(f.dom, m.dom, rows):
            raise NotMonic("lift through a non-monic map")
        return self._mk(f.dom, m.dom, rows)

    def descend(self, e, f):
        if e.dom != f.dom:
            raise PreconditionError("descend: domains differ")
        Q = e.cod
        cols = []
        for j in range(Q.ngens):
            a = self._solve_in(e, [int(i == j) for i in range(Q.ngens)])
            if a is None:
                raise NotEpic("descend through a non-surjective map")
            cols.append(self.apply(f, a))
        rows = [[c[i] for c in cols] for i in range(f.cod.ngens)]
        if not self._well_defined(Q, f.cod, rows):
            return None
        g = self._mk(Q, f.cod, rows)
        return g if self.compose(g, e) == f else None

    # limits and colimits ------------------------------------------------
    def biproduct(self, X, Y):
        """(X+Y, (i1, i2), (p1, p2))."""
        key = ("biprod", X, Y)
        if key in self._memo:
            return self._memo[key]
        nx, ny = X.ngens, Y.ngens
        B, P, S = canonicalize(list(X.moduli) + list(Y.moduli))
        i1 = self._mk(X, B, [r[:nx] for r in P])
        i2 = self._mk(Y, B, [r[nx:] for r in P])
        p1 = self._mk(B, X, S[:nx])
        p2 = self._mk(B, Y, S[nx:])
        out = self._memo[key] = (B, (i1, i2), (p1, p2))
        return out

    def product(self, X, Y):
        B, _, (p1, p2) = self.biproduct(X, Y)
        return B, p1, p2

    def coproduct(self, X, Y):
        B, (i1, i2), _ = self.biproduct(X, Y)
        return B, i1, i2

    def pair(self, f, g):
        _, (i1, i2), _ = self.biproduct(f.cod, g.cod)
        return self.add(self.compose(i1, f), self.compose(i2, g))

    def copair(self, f, g):
        _, _, (p1, p2) = self.biproduct(f.dom, g.dom)
        return self.add(self.compose(f, p1), self.compose(g, p2))

    def pullback(self, f, g):
        """(a, b) = ker<f, -g>."""
        if f.cod != g.cod:
            raise PreconditionError("pullback: codomains differ")
        k = self.kernel(self.copair(f, self.negate(g)))
        _, _, (p1, p2) = self.biproduct(f.dom, g.dom)
        return k.dom, self.compose(p1, k), self.compose(p2, k)

    def pushout(self, f, g):
        """coker of (f, -g): A -> X+Y."""
        if f.dom != g.dom:
            raise PreconditionError("pushout: domains differ")
        q = self.cokernel(self.pair(f, self.negate(g)))
        _, (i1, i2), _ = self.biproduct(f.cod, g.cod)
        return q.cod, self.compose(q, i1), self.compose(q, i2)

    # finite enumeration -------------------------------------------------
    def size(self, X):
        return X.order

    def elements(self, X):
        if not X.is_finite:
            raise ResourceLimit("cannot list elements of an infinite group")
        if X.order > FINITE_CAP:
            raise ResourceLimit(f"group of order {X.order} exceeds the element cap")
        return [tuple(v) for v in itertools.product(*(range(d) for d in X.moduli))]

    def element_order(self, X, v):
        k, x = 1, X.reduce(v)
        zero = (0,) * X.ngens
        while x != zero:
            x = X.reduce([a + b for a, b in zip(x, v)])
            k += 1
        return k

    def isomorphic(self, X, Y):
        return X == Y

    def objects(self, max_size):
        out = []
        for order in range(1, max_size + 1):
            out.extend(finite_abelian_groups(order))
        return out

    def homs(self, X, Y):
        ys = self.elements(Y)
        cands = []
        for d in X.moduli:
            if d == 0:
                raise ResourceLimit("infinitely many homs out of a free group")
            cands.append([y for y in ys if not any(Y.reduce([d * a for a in y]))])
        for cols in itertools.product(*cands):
            yield self.from_columns(X, Y, cols)

    def generated(self, X, elems):
        S = {tuple((0,) * X.ngens)} | {X.reduce(e) for e in elems}
        todo = list(S)
        while todo:
            a = todo.pop()
            for b in list(S):
                c = X.reduce([x + y for x, y in zip(a, b)])
                if c not in S:
                    S.add(c)
                    todo.append(c)
        return tuple(sorted(S))

    def subobjects(self, X):
        key = ("subs", X)
        if key in self._memo:
            return self._memo[key]
        els = self.elements(X)
        seen = {self.generated(X, [])}
        frontier = list(seen)
        while frontier:
            nxt = []
            for S in frontier:
                for x in els:
                    if x in S:
                        continue
                    T = self.generated(X, list(S) + [x])
                    if T not in seen:
                        seen.add(T)
                        nxt.append(T)
            frontier = nxt
        out = [self.present_subgroup(X, _small_gens(self, X, S))[1] for S in sorted(seen, key=lambda s: (len(s), s))]
        self._memo[key] = out
        return out

    def normal_subobjects(self, X):
        return self.subobjects(X)

    def element_set(self, m):
        """The image of a mono (or any map) out of a finite group, as a sorted tuple."""
        return tuple(sorted({self.apply(m, v) for v in self.elements(m.dom)}))


def _small_gens(C, X, S):
    gens, H = [], C.generated(X, [])
    for x in sorted(S, key=lambda v: (-C.element_order(X, v), v)):
        if x not in H:
            gens.append(list(x))
            H = C.generated(X, [list(h) for h in H] + [x])
            if len(H) == len(S):
                break
    return gens


def finite_abelian_groups(order):
    """All abelian groups of the given order, canonical, sorted by moduli."""
    def chains(rest, base):
        if rest == 1:
            yield ()
            return
        for d in range(2, rest + 1):
            if rest % d == 0 and d % base == 0:
                for tail in chains(rest // d, d):
                    yield (d,) + tail

    return [AbGroup(m) for m in sorted(chains(order, 1))]


# -- difference objects and extensions ---------------------------------------


def difference_object(C: FinAb, X):
    """(D(X), δ: D(X) -> X+X, θ: X -> D(X)) with δ = ker of the codiagonal and θ the natural iso."""
    one = C.identity(X)
    nabla = C.copair(one, one)
    delta = C.kernel(nabla)
    theta = C.lift(delta, C.pair(one, C.negate(one)))
    return delta.dom, delta, theta


def formal_difference(C: FinAb, f, g):
    """<f, g> ∘ δ : D(X) -> Y."""
    _, delta, _ = difference_object(C, f.dom)
    return C.compose(C.copair(f, g), delta)


def ext_classes(C: FinAb, Q, K, cap=64):
    """Extensions K >-> X ->> Q up to equivalence (1_K, u, 1_Q).

    Returns (count, representatives) where each representative is a pair (k, q).
    """
    if not (Q.is_finite and K.is_finite):
        raise PreconditionError("ext_classes needs finite groups")
    n = Q.order * K.order
    if n > cap:
        raise ResourceLimit(f"|K||Q| = {n} exceeds the cap {cap}")
    reps = []
    for X in finite_abelian_groups(n):
        monos = [k for k in C.homs(K, X) if C.is_mono(k)]
        epis = [q for q in C.homs(X, Q) if C.is_epi(q)]
        ses = [(k, q) for k in monos for q in epis
               if C.is_zero(C.compose(q, k)) and same_subobject(C, k, C.kernel(q))]
        if not ses:
            continue
        auts = [u for u in C.homs(X, X) if C.is_iso(u)]
        classes = []
        for k, q in ses:
            for cls in classes:
                k0, q0 = cls[0]
                if any(C.compose(u, k0) == k and C.compose(q, u) == q0 for u in auts):
                    cls.append((k, q))
                    break
            else:
                classes.append([(k, q)])
        reps.extend(cls[0] for cls in classes)
    return len(reps), reps
