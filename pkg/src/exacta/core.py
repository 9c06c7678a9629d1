"""Morphisms, the backend interface, and constructions valid in any z-exact category.

A backend is an instance of :class:`Category`.  It fixes one deterministic
kernel and cokernel for every morphism; everything in this module is built
from those two plus ``lift``/``descend`` (factoring through a mono, or through
a surjective quotient map).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Iterator

from .errors import NoImage, NotEpic, NotMonic, PreconditionError, Unsupported


@dataclass(frozen=True)
class Morphism:
    dom: Any
    cod: Any
    data: Any

    def __repr__(self):
        return f"Morphism({self.dom!r} -> {self.cod!r}, {self.data!r})"


@dataclass(frozen=True)
class Factorization:
    first: Morphism
    second: Morphism
    kind: str  # normal-mono | normal-epi | normal | image


class Subobject:
    """A mono into some object.  Equality is mutual factoring, so it needs the category."""

    __slots__ = ("C", "incl", "canonical")

    def __init__(self, C, incl, canonical=True):
        self.C = C
        self.incl = incl
        self.canonical = canonical

    @property
    def ambient(self):
        return self.incl.cod

    @property
    def obj(self):
        return self.incl.dom

    def __le__(self, other):
        return self.C.lift(other.incl, self.incl) is not None

    def __eq__(self, other):
        if not isinstance(other, Subobject):
            return NotImplemented
        return same_subobject(self.C, self.incl, other.incl)

    def __hash__(self):
        raise TypeError("Subobject equality is up to iso; use a canonical key instead")

    def __repr__(self):
        return f"Subobject({self.incl!r})"


class Category:
    """Backend interface.  Subclasses override what they support."""

    kind = "abstract"
    has_coproducts = False
    additive = False  # supplies add() on hom-sets

    def __init__(self):
        self._memo = {}

    def _cached(self, key, fn):
        try:
            return self._memo[key]
        except KeyError:
            v = self._memo[key] = fn()
            return v

    def __getstate__(self):
        # caches are cheap to rebuild and may be large
        d = dict(self.__dict__)
        d["_memo"] = {}
        return d

    # primitives ---------------------------------------------------------
    def zero_object(self):
        raise NotImplementedError

    def identity(self, X) -> Morphism:
        raise NotImplementedError

    def zero_map(self, X, Y) -> Morphism:
        raise NotImplementedError

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """g after f."""
        raise NotImplementedError

    def kernel(self, f: Morphism) -> Morphism:
        raise NotImplementedError

    def cokernel(self, f: Morphism) -> Morphism:
        raise NotImplementedError

    def is_mono(self, f) -> bool:
        raise NotImplementedError

    def is_epi(self, f) -> bool:
        raise NotImplementedError

    def is_iso(self, f) -> bool:
        raise NotImplementedError

    def inverse(self, f) -> Morphism:
        raise NotImplementedError

    def lift(self, m: Morphism, f: Morphism) -> Morphism | None:
        """The g with m∘g = f for a mono m, or None if f does not factor."""
        raise NotImplementedError

    def descend(self, e: Morphism, f: Morphism) -> Morphism | None:
        """The g with g∘e = f for a quotient map e, or None."""
        raise NotImplementedError

    def product(self, X, Y):
        """(X×Y, pr_X, pr_Y)."""
        raise NotImplementedError

    def pair(self, f, g) -> Morphism:
        raise NotImplementedError

    def coproduct(self, X, Y):
        raise Unsupported(f"{self.kind} has no finite coproducts here")

    def copair(self, f, g) -> Morphism:
        raise Unsupported(f"{self.kind} has no finite coproducts here")

    def pullback(self, f, g):
        """(P, p1, p2) with f∘p1 = g∘p2."""
        raise NotImplementedError

    def pushout(self, f, g):
        """(P, p1, p2) with p1∘f = p2∘g."""
        raise Unsupported(f"{self.kind}: general pushouts are not offered")

    def kernel_pair(self, f):
        return self.pullback(f, f)

    def image(self, f) -> Morphism:
        """Backend-native image inclusion (the set-theoretic image)."""
        raise NotImplementedError

    def add(self, f, g) -> Morphism:
        raise Unsupported(f"{self.kind} hom-sets carry no addition")

    def negate(self, f) -> Morphism:
        raise Unsupported(f"{self.kind} hom-sets carry no negation")

    def size(self, X) -> int | None:
        raise NotImplementedError

    def isomorphic(self, X, Y) -> bool:
        raise NotImplementedError

    # enumeration (finite objects only) ----------------------------------
    def objects(self, max_size: int) -> list:
        raise Unsupported

    def homs(self, X, Y) -> Iterator[Morphism]:
        raise Unsupported

    def subobjects(self, X) -> list:
        """All subobjects of X, one canonical inclusion per class."""
        raise Unsupported

    def normal_subobjects(self, X) -> list:
        return self._cached(("nsub", X), lambda: [s for s in self.subobjects(X) if is_normal_mono(self, s)])

    def normal_quotients(self, X) -> list:
        def build():
            out = []
            for s in self.subobjects(X):
                q = self.cokernel(s)
                if q not in out:
                    out.append(q)
            return out

        return self._cached(("nquo", X), build)

    # conveniences -------------------------------------------------------
    def is_zero_object(self, X) -> bool:
        return X == self.zero_object()

    def is_zero(self, f) -> bool:
        return f == self.zero_map(f.dom, f.cod)

    def comp(self, *fs) -> Morphism:
        """comp(h, g, f) = h∘g∘f."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.compose(g, out)
        return out

    def from_zero(self, X):
        return self.zero_map(self.zero_object(), X)

    def to_zero(self, X):
        return self.zero_map(X, self.zero_object())


class TableCategory(Category):
    """Shared machinery for backends whose objects are finite carriers {0..n-1}
    with 0 the base point/unit, and whose morphisms are index tables."""

    def size(self, X):
        return X.size

    def elements(self, X):
        return range(X.size)

    def make(self, dom, cod, table) -> Morphism:
        return Morphism(dom, cod, tuple(table))

    def identity(self, X):
        return Morphism(X, X, tuple(range(X.size)))

    def zero_map(self, X, Y):
        return Morphism(X, Y, (0,) * X.size)

    def compose(self, g, f):
        if f.cod != g.dom:
            raise PreconditionError("composition of non-composable morphisms")
        gd = g.data
        return Morphism(f.dom, g.cod, tuple(gd[x] for x in f.data))

    def is_mono(self, f):
        return len(set(f.data)) == f.dom.size

    def is_surjective(self, f):
        return len(set(f.data)) == f.cod.size

    def is_epi(self, f):
        return self.is_surjective(f)

    def is_iso(self, f):
        return f.dom.size == f.cod.size and self.is_mono(f)

    def inverse(self, f):
        if not self.is_iso(f):
            raise PreconditionError("not invertible")
        inv = [0] * f.dom.size
        for x, y in enumerate(f.data):
            inv[y] = x
        return Morphism(f.cod, f.dom, tuple(inv))

    def lift(self, m, f):
        if m.cod != f.cod:
            raise PreconditionError("lift: codomains differ")
        if not self.is_mono(m):
            raise NotMonic("lift through a non-injective map")
        where = {y: i for i, y in enumerate(m.data)}
        out = []
        for y in f.data:
            i = where.get(y)
            if i is None:
                return None
            out.append(i)
        return Morphism(f.dom, m.dom, tuple(out))

    def descend(self, e, f):
        if e.dom != f.dom:
            raise PreconditionError("descend: domains differ")
        if not self.is_surjective(e):
            raise NotEpic("descend through a non-surjective map")
        out = [None] * e.cod.size
        for a, q in enumerate(e.data):
            v = f.data[a]
            if out[q] is None:
                out[q] = v
            elif out[q] != v:
                return None
        return Morphism(e.cod, f.cod, tuple(out))

    def subobject(self, X, elems) -> tuple:
        """(S, S ↪ X) for a sorted element list closed under the structure."""
        raise NotImplementedError

    def generated(self, X, elems) -> tuple:
        """Sorted elements of the substructure generated by elems."""
        raise NotImplementedError

    def kernel(self, f):
        def build():
            fib = [x for x, y in enumerate(f.data) if y == 0]
            return self.subobject(f.dom, fib)[1]

        return self._cached(("ker", f), build)

    def image(self, f):
        return self.subobject(f.cod, sorted(set(f.data)))[1]

    def _pair_index(self, Y):
        return lambda x, y: x * Y.size + y

    def product(self, X, Y):
        def build():
            P = self._product_object(X, Y)
            n = Y.size
            p1 = Morphism(P, X, tuple(i // n for i in range(P.size)))
            p2 = Morphism(P, Y, tuple(i % n for i in range(P.size)))
            return P, p1, p2

        return self._cached(("prod", X, Y), build)

    def _product_object(self, X, Y):
        raise NotImplementedError

    def pair(self, f, g):
        if f.dom != g.dom:
            raise PreconditionError("pair: domains differ")
        P, _, _ = self.product(f.cod, g.cod)
        n = g.cod.size
        return Morphism(f.dom, P, tuple(a * n + b for a, b in zip(f.data, g.data)))

    def pullback(self, f, g):
        if f.cod != g.cod:
            raise PreconditionError("pullback: codomains differ")
        P, p1, p2 = self.product(f.dom, g.dom)
        keep = [i for i in range(P.size) if f.data[p1.data[i]] == g.data[p2.data[i]]]
        S, incl = self.subobject(P, keep)
        return S, self.compose(p1, incl), self.compose(p2, incl)

    def subobjects(self, X):
        def build():
            seen = {self.generated(X, [0])}
            frontier = list(seen)
            while frontier:
                nxt = []
                for S in frontier:
                    for x in range(X.size):
                        if x in S:
                            continue
                        T = self.generated(X, list(S) + [x])
                        if T not in seen:
                            seen.add(T)
                            nxt.append(T)
                frontier = nxt
            return [self.subobject(X, list(S))[1] for S in sorted(seen, key=lambda s: (len(s), s))]

        return self._cached(("subs", X), build)

    def isomorphic(self, X, Y):
        if X.size != Y.size:
            return False
        if X == Y:
            return True
        return any(self.is_iso(h) for h in self.homs(X, Y))


# ----------------------------------------------------------------------------
# generic constructions


def kernel(C: Category, f: Morphism) -> Morphism:
    return C.kernel(f)


def cokernel(C: Category, f: Morphism) -> Morphism:
    return C.cokernel(f)


def same_subobject(C, m, n) -> bool:
    """m and n (monos into one object) factor through each other."""
    if m.cod != n.cod:
        return False
    return C.lift(n, m) is not None and C.lift(m, n) is not None


def same_quotient(C, e, f) -> bool:
    """Quotient maps out of one object that factor through each other."""
    if e.dom != f.dom:
        return False
    return C.descend(e, f) is not None and C.descend(f, e) is not None


def is_normal_mono(C, m) -> bool:
    if not C.is_mono(m):
        raise NotMonic("is_normal_mono needs a mono")
    k = C.kernel(C.cokernel(m))
    u = C.lift(k, m)
    return u is not None and C.is_iso(u)


def is_normal_epi(C, e) -> bool:
    if not C.is_epi(e):
        raise NotEpic("is_normal_epi needs an epi")
    return _is_normal_epi(C, e)


def _is_normal_epi(C, e):
    c = C.cokernel(C.kernel(e))
    try:
        v = C.descend(c, e)
    except NotEpic:
        return False
    return v is not None and C.is_iso(v)


def normal_mono_factorization(C, f) -> Factorization:
    """f = m∘u with m = ker(coker f)."""
    m = C.kernel(C.cokernel(f))
    u = C.lift(m, f)
    return Factorization(u, m, "normal-mono")


def normal_epi_factorization(C, f) -> Factorization:
    """f = v∘e with e = coker(ker f)."""
    e = C.cokernel(C.kernel(f))
    v = C.descend(e, f)
    return Factorization(e, v, "normal-epi")


def em_comparison(C, f) -> Morphism:
    """The map φ with f = m∘φ∘e, m = ker(coker f), e = coker(ker f)."""
    def build():
        m = C.kernel(C.cokernel(f))
        e = C.cokernel(C.kernel(f))
        u = C.lift(m, f)
        phi = C.descend(e, u)
        if phi is None:  # cannot happen in a z-exact backend
            raise AssertionError("comparison map does not exist")
        return phi

    return C._cached(("em", f), build)


def is_normal_map(C, f) -> bool:
    return C.is_iso(em_comparison(C, f))


def normal_factorization(C, f) -> Factorization:
    """f = m'∘e with e a normal epi and m' a normal mono, when f is normal."""
    phi = em_comparison(C, f)
    if not C.is_iso(phi):
        raise PreconditionError("morphism is not normal")
    m = C.kernel(C.cokernel(f))
    e = C.cokernel(C.kernel(f))
    return Factorization(e, C.compose(m, phi), "normal")


def image_factorization(C, f) -> Factorization:
    phi = em_comparison(C, f)
    if not C.is_mono(phi):
        raise NoImage("comparison map is not monic", phi)
    m = C.kernel(C.cokernel(f))
    e = C.cokernel(C.kernel(f))
    return Factorization(e, C.compose(m, phi), "image")


def normal_closure(C, m) -> Subobject:
    if not C.is_mono(m):
        raise NotMonic("normal_closure needs a mono")
    return Subobject(C, C.kernel(C.cokernel(m)))


def pullback_normal_mono(C, f, m):
    """Pull the normal mono m back along f.

    Returns (f', m') with m' : P -> dom f the pulled-back normal mono and
    f∘m' = m∘f'.
    """
    if m.cod != f.cod:
        raise PreconditionError("pullback_normal_mono: m must land in cod(f)")
    if not is_normal_mono(C, m):
        raise PreconditionError("pullback_normal_mono: m is not a normal mono")
    q = C.cokernel(m)
    mp = C.kernel(C.compose(q, f))
    fp = C.lift(m, C.compose(f, mp))
    return fp, mp


def pushout_normal_epi(C, f, e):
    """Push the normal epi e out of dom f along f.

    Returns (e', f') with e' : cod f -> P the pushed-out normal epi and
    f'∘e = e'∘f.
    """
    if e.dom != f.dom:
        raise PreconditionError("pushout_normal_epi: e must leave dom(f)")
    if not is_normal_epi(C, e):
        raise PreconditionError("pushout_normal_epi: e is not a normal epi")
    ep = C.cokernel(C.compose(f, C.kernel(e)))
    fp = C.descend(e, C.compose(ep, f))
    return ep, fp


def intersect_normal(C, m, n) -> Subobject:
    if m.cod != n.cod:
        raise PreconditionError("intersect_normal: different ambient objects")
    for x in (m, n):
        if not is_normal_mono(C, x):
            raise PreconditionError("intersect_normal: input is not a normal mono")
    _, mp = pullback_normal_mono(C, n, m)
    s = C.compose(n, mp)
    assert is_normal_mono(C, s)
    return Subobject(C, s)


def iso_check(C, f) -> bool:
    """Isomorphism via 'normal epi and mono', cross-checked against the backend."""
    verdict = C.is_mono(f) and C.is_epi(f) and is_normal_epi(C, f)
    if verdict != C.is_iso(f):
        raise AssertionError("iso recognition disagrees with backend bijectivity")
    return verdict


def kernel_from_kernel_pair(C, f) -> Morphism:
    _, p1, p2 = C.kernel_pair(f)
    return C.compose(p1, C.kernel(p2))


def all_normal(C, maps: Iterable[Morphism]) -> bool:
    return all(is_normal_map(C, f) for f in maps)
