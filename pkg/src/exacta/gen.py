"""Random instances for the sampling suites: maps, snakes, complexes, short exact sequences of complexes.

Everything takes an explicit random.Random; seed_rng() reads EXACTA_SEED.
"""
from __future__ import annotations

import os
import random

from .diexact import ShortExactSeq
from .fgab import FinAb, finite_abelian_groups
from .homology import ChainMap, chain_complex, classify, cokernel_complex
from .core import is_normal_map


def seed_rng(default=0, salt=0) -> random.Random:
    seed = int(os.environ.get("EXACTA_SEED", default))
    return random.Random(seed * 1000003 + salt)


def hom_list(C, X, Y):
    return C._cached(("homlist", X, Y), lambda: list(C.homs(X, Y)))


def random_object(C, rng, max_size):
    return rng.choice(C._cached(("objs", max_size), lambda: C.objects(max_size)))


def random_hom(C, rng, X, Y):
    if isinstance(C, FinAb):
        ys = C.elements(Y)
        cols = []
        for d in X.moduli:
            cols.append(rng.choice([y for y in ys if not any(Y.reduce([d * a for a in y]))]))
        return C.from_columns(X, Y, cols)
    if C.kind == "setpt":
        return C.hom(X, Y, [0] + [rng.randrange(Y.size) for _ in range(X.size - 1)])
    return rng.choice(hom_list(C, X, Y))


def random_map(C, rng, max_size):
    return random_hom(C, rng, random_object(C, rng, max_size), random_object(C, rng, max_size))


def random_subobject(C, rng, X, normal=False):
    subs = C.normal_subobjects(X) if normal else C.subobjects(X)
    return rng.choice(subs)


def _ab_object(rng, max_order):
    return rng.choice(finite_abelian_groups(rng.randint(1, max_order)))


def _normal_containing(C, rng, Y, elems):
    """A random normal subobject of Y containing the given elements."""
    cands = [s for s in C.normal_subobjects(Y) if set(elems) <= _elems(C, s)]
    return rng.choice(cands)


def _elems(C, m):
    if hasattr(C, "element_set"):
        return set(C.element_set(m))
    return set(m.data)


def snake_instance(C, rng, max_order=24, tries=200):
    """A morphism of short exact sequences (κ, ξ, ρ) with all three verticals normal.

    Returns (top, bottom, kappa, xi, rho); None if no instance was hit in `tries` draws.
    """
    for _ in range(tries):
        X = random_object(C, rng, max_order)
        Y = random_object(C, rng, max_order)
        xi = random_hom(C, rng, X, Y)
        if not is_normal_map(C, xi):
            continue
        k = random_subobject(C, rng, X, normal=True)
        q = C.cokernel(k)
        xk = C.compose(xi, k)
        l = _normal_containing(C, rng, Y, _elems(C, xk))
        r = C.cokernel(l)
        kappa = C.lift(l, xk)
        rho = C.descend(q, C.compose(r, xi))
        if not (is_normal_map(C, kappa) and is_normal_map(C, rho)):
            continue
        return ShortExactSeq(k, q), ShortExactSeq(l, r), kappa, xi, rho
    return None


def random_complex(C, rng, length, max_order=12, exact_bias=0.35, lo=0):
    """A chain complex C_lo .. C_{lo+length-1}; some degrees are made exact on purpose."""
    objs = [random_object(C, rng, max_order)]
    ds = []
    for i in range(1, length):
        prev = objs[-1]
        below = ds[-1] if ds else C.to_zero(prev)
        k = C.kernel(below)
        if rng.random() < exact_bias:
            X, d = k.dom, k
        else:
            X = random_object(C, rng, max_order)
            d = C.compose(k, random_hom(C, rng, X, k.dom))
        objs.append(X)
        ds.append(d)
    return chain_complex(C, lo, objs, ds)


def normal_complex(C, rng, length, max_order=12, tries=200):
    for _ in range(tries):
        cx = random_complex(C, rng, length, max_order)
        if classify(C, cx) == "normal":
            return cx
    return None


def ses_of_complexes(C, rng, length, max_order=12):
    """(f, g) : A >-> B ->> B/A with A a random subcomplex of a random complex B (abelian backend)."""
    B = random_complex(C, rng, length, max_order)
    incl = [None] * length
    # build subobjects from the top degree down so each is closed under d
    for i in range(length - 1, -1, -1):
        X = B.objects[i]
        gens = _elems(C, random_subobject(C, rng, X))
        if i + 1 < length:
            gens |= _elems(C, C.compose(B.d[i], incl[i + 1]))
        if isinstance(C, FinAb):
            incl[i] = C.present_subgroup(X, sorted(g for g in gens if any(g)))[1]
        else:
            incl[i] = C.subobject(X, C.generated(X, sorted(gens)))[1]
    ds = [C.lift(incl[i - 1], C.compose(B.d[i - 1], incl[i])) for i in range(1, length)]
    A = chain_complex(C, B.lo, [m.dom for m in incl], ds)
    f = ChainMap(A, B, tuple(incl))
    _, g = cokernel_complex(C, f)
    return f, g


def dimension_shift_complex(C, p=3):
    """0 -> K -> G -> G/L -> 0 with G = (Z/p × Z/p) ⋊ C2 (swap), K = Z/p × 0, L = Z/p × Z/p.

    K is normal in L but not in G, so the complex is subnormal and not normal.
    Degrees are 1, 0, -1.
    """
    from .fingrp import swap_semidirect
    G = swap_semidirect(p)
    els = [(a, b, s) for s in range(2) for a in range(p) for b in range(p)]  # swap_semidirect's order
    _, k = C.subobject(G, [i for i, (a, b, s) in enumerate(els) if b == 0 and s == 0])
    _, l = C.subobject(G, [i for i, (a, b, s) in enumerate(els) if s == 0])
    q = C.cokernel(l)
    return chain_complex(C, -1, [q.cod, G, k.dom], [q, k])
