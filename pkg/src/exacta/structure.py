"""Subobject lattices, biproducts, the sum-to-product comparison, and recognition results."""
from __future__ import annotations

from dataclasses import dataclass

from .core import Morphism, Subobject, is_normal_epi, is_normal_mono, same_subobject
from .diexact import ShortExactSeq, is_short_exact
from .errors import PreconditionError, Unsupported


def meet(C, m, n) -> Subobject:
    """Pullback of two monos into the same object."""
    if m.cod != n.cod:
        raise PreconditionError("meet: different ambient objects")
    _, p1, _ = C.pullback(m, n)
    return Subobject(C, C.compose(m, p1))


def join(C, m, n) -> Subobject:
    """Image of <m, n> out of the coproduct; groups use the generated subgroup."""
    if m.cod != n.cod:
        raise PreconditionError("join: different ambient objects")
    if C.has_coproducts:
        return Subobject(C, C.image(C.copair(m, n)))
    elems = C.generated(m.cod, set(m.data) | set(n.data))
    return Subobject(C, C.subobject(m.cod, elems)[1])


def top(C, X) -> Subobject:
    return Subobject(C, C.identity(X))


def bottom(C, X) -> Subobject:
    return Subobject(C, C.from_zero(X))


def _element_key(C, m):
    if hasattr(C, "element_set"):
        return frozenset(C.element_set(m))
    return frozenset(m.data)


def modularity_report(C, X, lattice="normal"):
    """Triples (M, K, L) with M <= L and M ∨ (K ∧ L) != (M ∨ K) ∧ L.

    Subobjects are enumerated exhaustively; each is reported by its set of
    elements.  Meets are intersections and joins are closures of unions, both
    of which the tests check against meet() and join().
    """
    if lattice == "normal":
        subs = C.normal_subobjects(X)
    elif lattice == "all":
        subs = C.subobjects(X)
    else:
        raise PreconditionError("lattice must be 'normal' or 'all'")
    sets = [_element_key(C, s) for s in subs]
    index = {s: i for i, s in enumerate(sets)}
    elems = sorted(set().union(*sets)) if sets else []
    bit = {e: 1 << i for i, e in enumerate(elems)}
    masks = [sum(bit[e] for e in s) for s in sets]
    by_mask = {m: i for i, m in enumerate(masks)}
    join_cache = {}

    def j(a, b):
        key = (a, b) if a <= b else (b, a)
        if key not in join_cache:
            gen = C.generated(X, list(sets[a] | sets[b]))
            join_cache[key] = index[frozenset(gen)]
        return join_cache[key]

    def mt(a, b):
        return by_mask[masks[a] & masks[b]]

    out = []
    n = len(sets)
    for M in range(n):
        for L in range(n):
            if masks[M] & ~masks[L]:
                continue
            for K in range(n):
                if j(M, mt(K, L)) != mt(j(M, K), L):
                    out.append((tuple(sorted(sets[M])), tuple(sorted(sets[K])), tuple(sorted(sets[L]))))
    return out


# -- comparison and recognition ----------------------------------------------------


def gamma(C, A, B):
    """γ = <(1,0), (0,1)> : A+B -> A×B together with its classification."""
    if not C.has_coproducts:
        raise Unsupported(f"{C.kind} has no finite coproducts here")
    g = C.copair(C.pair(C.identity(A), C.zero_map(A, B)), C.pair(C.zero_map(B, A), C.identity(B)))
    return g, classify_map(C, g)


def find_retraction(C, f):
    if hasattr(C, "retraction"):
        return C.retraction(f)
    one = C.identity(f.dom)
    for r in C.homs(f.cod, f.dom):
        if C.compose(r, f) == one:
            return r
    return None


def classify_map(C, f) -> str:
    if C.is_iso(f):
        return "iso"
    if C.is_mono(f) and find_retraction(C, f) is not None:
        return "split-mono"
    if C.is_epi(f) and is_normal_epi(C, f):
        return "normal-epi"
    return "other"


def biproduct_recognize(C, iA, iB, pA, pB) -> bool:
    """p_A i_A = 1, p_B i_B = 1, p_B i_A = 0, p_A i_B = 0 and i_A p_A + i_B p_B = 1."""
    if not C.additive:
        raise Unsupported("biproduct recognition needs hom-set addition")
    A, B, X = iA.dom, iB.dom, iA.cod
    if iB.cod != X or pA.dom != X or pB.dom != X or pA.cod != A or pB.cod != B:
        return False
    return (C.compose(pA, iA) == C.identity(A) and C.compose(pB, iB) == C.identity(B)
            and C.is_zero(C.compose(pB, iA)) and C.is_zero(C.compose(pA, iB))
            and C.add(C.compose(iA, pA), C.compose(iB, pB)) == C.identity(X))


@dataclass(frozen=True)
class SplitSES:
    k: Morphism
    q: Morphism
    s: Morphism  # section of q


def split_extension_recognize(C, k, y):
    """For K ⊲ X and Y <= X: K ∧ Y = 0 and K ∨ Y = X give a split SES K -> X -> X/K with section through Y."""
    X = k.cod
    if not is_normal_mono(C, k):
        raise PreconditionError("k is not a normal mono")
    if not C.is_mono(y):
        raise PreconditionError("y is not a mono")
    if not C.is_zero_object(meet(C, k, y).obj):
        return False, None
    if not same_subobject(C, join(C, k, y).incl, C.identity(X)):
        return False, None
    q = C.cokernel(k)
    qs = C.compose(q, y)
    if not C.is_iso(qs):
        return False, None
    s = C.compose(y, C.inverse(qs))
    assert C.compose(q, s) == C.identity(q.cod) and is_short_exact(C, k, q)
    return True, SplitSES(k, q, s)


def product_recognize(C, q, p):
    """q: T -> A, p: T -> B with mutually sectioning short exact sequences; then (q, p) is an iso."""
    if q.dom != p.dom:
        raise PreconditionError("product_recognize: maps need a common domain")
    i, j = C.kernel(p), C.kernel(q)
    ok = (is_short_exact(C, i, p) and is_short_exact(C, j, q)
          and C.is_iso(C.compose(q, i)) and C.is_iso(C.compose(p, j)))
    if not ok:
        return False, None
    pr = C.pair(q, p)
    if not C.is_iso(pr):
        raise AssertionError("mutually sectioning sequences without a product decomposition")
    return True, pr


def chinese_remainder(C, k, l):
    """For normal K, L with K ∨ L = X: the iso X/(K∧L) -> X/L × X/K."""
    X = k.cod
    for m in (k, l):
        if not is_normal_mono(C, m):
            raise PreconditionError("inputs must be normal monos")
    if not same_subobject(C, join(C, k, l).incl, C.identity(X)):
        raise PreconditionError("K ∨ L is not all of X")
    kl = meet(C, k, l).incl
    ql, qk = C.cokernel(l), C.cokernel(k)
    phi = C.descend(C.cokernel(kl), C.pair(ql, qk))
    if phi is None or not C.is_iso(phi):
        raise AssertionError("Chinese remainder comparison is not an isomorphism")
    return phi


def second_isomorphism(C, k, l):
    """K/(L∧K) -> (L∨K)/L for subobjects K, L of X with L normal in L∨K."""
    jn = join(C, k, l).incl
    lam = C.lift(jn, l)
    kap = C.lift(jn, k)
    if not is_normal_mono(C, lam):
        raise PreconditionError("L is not normal in L ∨ K")
    lk = meet(C, l, k).incl
    into_k = C.lift(k, lk)
    phi = C.descend(C.cokernel(into_k), C.compose(C.cokernel(lam), kap))
    return phi


def quotient_of_join_holds(C, k, l) -> bool:
    """(K∨L)/(K∧L) ≅ K/(K∧L) × L/(K∧L) for normal K, L (compared as objects)."""
    jn = join(C, k, l).incl
    m = meet(C, k, l).incl
    left = C.cokernel(C.lift(jn, m)).cod
    A = C.cokernel(C.lift(k, m)).cod
    B = C.cokernel(C.lift(l, m)).cod
    return C.isomorphic(left, C.product(A, B)[0])


def abelian_object_check(C, X) -> bool:
    """X is an abelian object iff its diagonal is a normal mono."""
    one = C.identity(X)
    return is_normal_mono(C, C.pair(one, one))


def commuting_join_is_product(C, h, k):
    """For commuting H, K <= G with H ∧ K = 0 (groups): the map H×K -> G, (a,b) ↦ ab, is mono onto H ∨ K."""
    from .fingrp import commuting_subobjects
    ok, mu = commuting_subobjects(C, h, k)
    if not ok:
        return False
    if not C.is_zero_object(meet(C, h, k).obj):
        return False
    return C.is_mono(mu) and same_subobject(C, C.image(mu), join(C, h, k).incl)

