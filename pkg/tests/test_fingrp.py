import pytest

from exacta.core import is_normal_mono, same_subobject
from exacta.errors import MalformedInput, PreconditionError
from exacta.fingrp import (FinGroup, abelian_object_check, center, commuting_subobjects, cyclic, is_commutative,
                           join_normal, join_subgroups, library, normal_closure_subgroup, preset, swap_semidirect)
from oracles import all_group_homs, all_subgroups, is_normal_brute


def test_validation():
    with pytest.raises(MalformedInput):
        FinGroup([[0, 1], [1, 1]])
    with pytest.raises(MalformedInput):
        FinGroup([[1, 0], [0, 1]])
    with pytest.raises(MalformedInput):
        preset("nope")


def test_library_is_sorted_and_distinct(G):
    lib = library(24)
    assert [g.size for g in lib] == sorted(g.size for g in lib)
    for i, a in enumerate(lib):
        for b in lib[i + 1:]:
            if a.size == b.size:
                assert not G.isomorphic(a, b), (a.name, b.name)


def test_group_counts_small_orders():
    # numbers of groups of order 1..23 (OEIS A000001), all bundled
    want = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1]
    lib = library(23)
    for n, c in enumerate(want, 1):
        assert sum(1 for g in lib if g.size == n) == c, n


@pytest.mark.parametrize("name", ["S3", "D8", "Q8", "Z4", "V4", "A4"])
def test_subgroups_match_brute_force(G, name):
    X = preset(name)
    got = {frozenset(s.data) for s in G.subobjects(X)}
    want = set(all_subgroups(X))
    assert got == want
    normal = {frozenset(s.data) for s in G.normal_subobjects(X)}
    assert normal == {s for s in want if is_normal_brute(X, s)}


def test_subgroup_counts_s4(G):
    S4 = preset("S4")
    assert len(G.subobjects(S4)) == 30 and len(G.normal_subobjects(S4)) == 4


@pytest.mark.parametrize("a,b", [("S3", "S3"), ("Z4", "V4"), ("S3", "Z2"), ("Q8", "Z4"), ("V4", "S3")])
def test_homs_match_brute_force(G, a, b):
    X, Y = preset(a), preset(b)
    assert sorted(f.data for f in G.homs(X, Y)) == sorted(all_group_homs(X, Y))


def test_quotients(G):
    S3 = preset("S3")
    A3 = G.subobject(S3, [a for a in range(6) if S3.order_of(a) != 2])[1]
    Q, p = G.quotient(S3, A3.data)
    assert G.isomorphic(Q, preset("Z2")) and is_normal_mono(G, A3)
    D8 = preset("D8")
    Z = center(D8)
    Q, _ = G.quotient(D8, Z)
    assert G.isomorphic(Q, preset("V4"))
    Q, _ = G.quotient(S3, range(6))
    assert Q.size == 1
    with pytest.raises(PreconditionError):
        G.quotient(S3, [0, 1])


def test_normal_closure_and_joins(G):
    S3 = preset("S3")
    t = [0, next(a for a in range(6) if S3.order_of(a) == 2)]
    assert len(normal_closure_subgroup(G, S3, t).data) == 6
    D8 = preset("D8")
    Z = center(D8)
    assert set(normal_closure_subgroup(G, D8, Z).data) == set(Z)
    rot = [a for a in range(8) if D8.order_of(a) == 4][:1]
    refl = [a for a in range(8) if D8.order_of(a) == 2 and a not in Z][:1]
    assert len(join_subgroups(G, D8, G.generated(D8, rot), G.generated(D8, refl)).data) == 8
    A3 = [a for a in range(6) if S3.order_of(a) != 2]
    assert len(join_subgroups(G, S3, A3, t).data) == 6
    h = G.generated(D8, refl)
    assert join_subgroups(G, D8, h, h).data == tuple(h)


def test_join_of_normal_is_normal(G):
    for X in library(16):
        subs = G.normal_subobjects(X)
        for a in subs:
            for b in subs:
                j = join_normal(G, X, a.data, b.data)
                assert is_normal_brute(X, set(j.data))


def test_commuting_subobjects(G):
    D8 = preset("D8")
    z = G.subobject(D8, center(D8))[1]
    ok, mu = commuting_subobjects(G, z, z)
    assert ok and mu.cod == D8
    S3 = preset("S3")
    invs = [a for a in range(6) if S3.order_of(a) == 2]
    h, k = (G.subobject(S3, [0, i])[1] for i in invs[:2])
    assert commuting_subobjects(G, h, k) == (False, None)
    triv = G.from_zero(S3)
    assert commuting_subobjects(G, h, triv)[0]


def test_intersection_of_commuting_subobjects_is_abelian(G):
    from exacta.structure import meet
    for X in library(12):
        subs = G.subobjects(X)
        for h in subs:
            for k in subs:
                if commuting_subobjects(G, h, k)[0]:
                    assert is_commutative(meet(G, h, k).obj)


def test_abelian_detector_examples(G):
    assert abelian_object_check(G, cyclic(4))
    assert not abelian_object_check(G, preset("S3"))
    assert abelian_object_check(G, G.zero_object())


def test_swap_semidirect_shape():
    X = swap_semidirect(3)
    assert X.size == 18 and not is_commutative(X)
