"""Subobject lattices, sum-to-product comparison and recognition results."""
import pytest

from exacta.core import is_normal_mono, same_subobject
from exacta.errors import PreconditionError, Unsupported
from exacta.fgab import ab
from exacta.fingrp import is_commutative, library, preset
from exacta.gen import random_object, random_subobject
from exacta.structure import (abelian_object_check, biproduct_recognize, bottom, chinese_remainder, classify_map,
                              commuting_join_is_product, find_retraction, gamma, join, meet, modularity_report,
                              product_recognize, quotient_of_join_holds, second_isomorphism,
                              split_extension_recognize, top)


def elems(C, m):
    return set(C.element_set(m)) if C.kind == "ab" else set(m.data)


def test_d8_full_lattice_is_not_modular(G):
    bad = modularity_report(G, preset("D8"), lattice="all")
    assert bad
    M, K, L = bad[0]
    assert set(M) <= set(L)


def test_normal_lattices_are_modular(G):
    for X in library(16):
        assert modularity_report(G, X) == []


def test_ab_lattices_are_modular(A):
    for X in A.objects(16):
        assert modularity_report(A, X, lattice="all") == []


def test_modularity_lattice_argument(G):
    with pytest.raises(PreconditionError):
        modularity_report(G, preset("S3"), lattice="some")


def test_meet_and_join_are_extremal(any_cat):
    C = any_cat
    for X in C.objects({"group": 12, "ab": 12, "setpt": 4, "cmon": 4}[C.kind]):
        subs = C.subobjects(X)
        sets = [elems(C, s) for s in subs]
        for a in subs:
            for b in subs:
                m, j = elems(C, meet(C, a, b).incl), elems(C, join(C, a, b).incl)
                ea, eb = elems(C, a), elems(C, b)
                below = [s for s in sets if s <= ea and s <= eb]
                above = [s for s in sets if ea <= s and eb <= s]
                assert m in below and all(s <= m for s in below)
                assert j in above and all(j <= s for s in above)


def test_top_bottom(any_cat):
    C = any_cat
    X = C.objects(3)[-1]
    assert C.is_iso(top(C, X).incl)
    assert C.is_zero_object(bottom(C, X).obj)


def test_meet_needs_common_ambient(A):
    with pytest.raises(PreconditionError):
        meet(A, A.identity(ab(2)), A.identity(ab(3)))


def test_gamma_classes(S, A, rng):
    for _ in range(20):
        X, Y = random_object(A, rng, 12), random_object(A, rng, 12)
        assert gamma(A, X, Y)[1] == "iso"
    for _ in range(20):
        X, Y = random_object(S, rng, 4), random_object(S, rng, 4)
        g, cls = gamma(S, X, Y)
        assert S.is_mono(g) and cls == ("iso" if min(X.size, Y.size) == 1 else "split-mono")


def test_gamma_groups_unsupported(G):
    with pytest.raises(Unsupported):
        gamma(G, preset("Z2"), preset("Z2"))


def test_classify_map(A, G):
    assert classify_map(A, A.hom(ab(4), ab(2), [[1]])) == "normal-epi"
    assert classify_map(A, A.hom(ab(2), ab(4), [[2]])) == "other"
    assert classify_map(A, A.hom(ab(2), ab(2, 2), [[1], [0]])) == "split-mono"
    S3 = preset("S3")
    t = next(a for a in range(6) if S3.order_of(a) == 2)
    assert classify_map(G, G.subobject(S3, [0, t])[1]) == "split-mono"
    assert find_retraction(G, G.subobject(preset("Z4"), [0, 2])[1]) is None


def test_biproduct_recognition(A):
    B, (i1, i2), (p1, p2) = A.biproduct(ab(2), ab(3))
    assert biproduct_recognize(A, i1, i2, p1, p2)
    assert not biproduct_recognize(A, i1, i2, p1, A.zero_map(B, ab(3)))
    with pytest.raises(Unsupported):
        biproduct_recognize(__import__("exacta").FinGrp(), i1, i2, p1, p2)


def test_split_extension_recognize(G):
    S3 = preset("S3")
    A3 = G.subobject(S3, [a for a in range(6) if S3.order_of(a) != 2])[1]
    t = next(a for a in range(6) if S3.order_of(a) == 2)
    T = G.subobject(S3, [0, t])[1]
    ok, sp = split_extension_recognize(G, A3, T)
    assert ok and G.compose(sp.q, sp.s) == G.identity(sp.q.cod)
    ok, _ = split_extension_recognize(G, A3, A3)
    assert not ok
    Z4 = preset("Z4")
    two = G.subobject(Z4, [0, 2])[1]
    assert not split_extension_recognize(G, two, two)[0]


def test_product_recognize(G, A):
    V = preset("V4")
    for a in range(1, 4):
        for b in range(1, 4):
            if a == b:
                continue
            q = G.cokernel(G.subobject(V, [0, a])[1])
            p = G.cokernel(G.subobject(V, [0, b])[1])
            ok, pr = product_recognize(G, q, p)
            assert ok and G.is_iso(pr)
    q = A.hom(ab(4), ab(2), [[1]])
    assert product_recognize(A, q, q) == (False, None)


def test_chinese_remainder(A, G):
    Z6 = ab(6)
    k = A.hom(ab(2), Z6, [[3]])
    l = A.hom(ab(3), Z6, [[2]])
    phi = chinese_remainder(A, k, l)
    assert A.is_iso(phi) and phi.dom == Z6
    V = preset("V4")
    phi = chinese_remainder(G, G.subobject(V, [0, 1])[1], G.subobject(V, [0, 2])[1])
    assert G.is_iso(phi)
    with pytest.raises(PreconditionError):
        chinese_remainder(A, k, k)


def test_second_isomorphism(G, rng):
    for X in library(12):
        subs = G.subobjects(X)
        for _ in range(10):
            k, l = rng.choice(subs), rng.choice(G.normal_subobjects(X))
            phi = second_isomorphism(G, k, l)
            assert G.is_iso(phi)


def test_second_isomorphism_needs_normality(G):
    S3 = preset("S3")
    invs = [a for a in range(6) if S3.order_of(a) == 2]
    h, k = (G.subobject(S3, [0, i])[1] for i in invs[:2])
    with pytest.raises(PreconditionError):
        second_isomorphism(G, k, h)


def test_quotient_of_join(G, A):
    for X in library(12):
        subs = G.normal_subobjects(X)
        for k in subs:
            for l in subs:
                # holds whenever K ∧ L = 0 or one contains the other: check against brute-force orders
                got = quotient_of_join_holds(G, k, l)
                m = elems(G, meet(G, k, l).incl)
                jn = elems(G, join(G, k, l).incl)
                if len(jn) * len(m) != len(elems(G, k)) * len(elems(G, l)):
                    assert not got
    for X in A.objects(16):
        for k in A.subobjects(X):
            for l in A.subobjects(X):
                assert quotient_of_join_holds(A, k, l)


def _has_inverses(X):
    n = X.size
    return all(any(X.table[a][b] == 0 for b in range(n)) for a in range(n))


def test_abelian_detector(any_cat):
    """Groups: commutativity.  Monoids: being a group.  Pointed sets and abelian groups: always."""
    C = any_cat
    size = {"setpt": 4, "cmon": 4, "group": 12, "ab": 16}[C.kind]  # groups to 16 in the acceptance suite
    for X in C.objects(size):
        if C.kind == "group":
            want = is_commutative(X)
        elif C.kind == "cmon":
            want = _has_inverses(X)
        else:
            want = True  # every mono of pointed sets is normal
        assert abelian_object_check(C, X) == want


def test_commuting_join_is_product(G):
    V = preset("V4")
    h, k = G.subobject(V, [0, 1])[1], G.subobject(V, [0, 2])[1]
    assert commuting_join_is_product(G, h, k)
    S3 = preset("S3")
    invs = [a for a in range(6) if S3.order_of(a) == 2]
    h, k = (G.subobject(S3, [0, i])[1] for i in invs[:2])
    assert not commuting_join_is_product(G, h, k)
    D8 = preset("D8")
    z = G.subobject(D8, [0, 2])[1]
    assert not commuting_join_is_product(G, z, z)  # commute but meet is not trivial
