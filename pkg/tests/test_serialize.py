import json

import pytest
from hypothesis import given, strategies as st

from exacta.errors import MalformedInput
from exacta.fgab import ab
from exacta.fingrp import preset
from exacta.homology import chain_complex
from exacta.serialize import Env, backend, mor_json, obj_json, obj_summary, parse_object


def roundtrip_obj(X):
    Y, _ = parse_object(json.loads(json.dumps(obj_json(X))))
    return Y


def test_object_roundtrip(any_cat):
    C = any_cat
    for X in C.objects(4):
        assert roundtrip_obj(X) == X


def test_ab_roundtrip_with_free_part():
    for X in [ab(0), ab(2, 0), ab(2, 4, 0, 0), ab()]:
        assert roundtrip_obj(X) == X


def test_morphism_roundtrip(any_cat, rng):
    from exacta.gen import random_map
    C = any_cat
    env = Env(C)
    for _ in range(20):
        f = random_map(C, rng, 4 if C.kind in ("setpt", "cmon") else 8)
        assert env.morphism(json.loads(json.dumps(mor_json(f)))) == f


def test_raw_ab_relations_are_canonicalized(A):
    # Z^2 / <(2, 0), (0, 3)> is Z/6; the raw generator e1 has order 2
    env = Env(A, {"X": {"kind": "ab", "rank": 2, "relations": [[2, 0], [0, 3]]},
                  "Z6": {"kind": "ab", "rank": 1, "relations": [[6]]}})
    env.register_objects()
    X = env.get("X")
    assert X == ab(6)
    e1 = env.morphism({"dom": "Z6", "cod": "X", "matrix": [[3], [0]]})  # 1 -> 3·e1
    assert A.apply(e1, (1,)) != (0,) and A.apply(e1, (2,)) == (0,)
    back = env.morphism({"dom": "X", "cod": "Z6", "matrix": [[3, 2]]})  # e1 -> 3, e2 -> 2
    assert A.compose(back, e1) == A.hom(ab(6), ab(6), [[3]])


def test_raw_matrix_shape_checked(A):
    env = Env(A, {"X": {"kind": "ab", "rank": 2, "relations": [[2, 0], [0, 3]]}})
    env.register_objects()
    with pytest.raises(MalformedInput):
        env.morphism({"dom": "X", "cod": "X", "matrix": [[1]]})


def test_presets_and_errors():
    assert parse_object({"kind": "group", "preset": "S3"})[0] == preset("S3")
    with pytest.raises(MalformedInput):
        parse_object({"kind": "ring"})
    with pytest.raises(MalformedInput):
        parse_object({"kind": "ab", "rank": 2, "relations": [[1]]})
    with pytest.raises(MalformedInput):
        backend("ring")
    with pytest.raises(MalformedInput):
        Env(backend("ab")).get("missing")


def test_complex_entry(A):
    env = Env(A, {"Z2": {"kind": "ab", "rank": 1, "relations": [[2]]},
                  "cx": {"complex": {"lo": 3, "hi": 4, "objects": ["Z2", "Z2"],
                                     "d": [{"dom": "Z2", "cod": "Z2", "matrix": [[0]]}]}}})
    env.register_objects()
    cx = env.get("cx")
    assert (cx.lo, cx.hi) == (3, 4)
    bad = {"complex": {"lo": 0, "hi": 5, "objects": ["Z2"], "d": []}}
    with pytest.raises(MalformedInput):
        Env(A, {"Z2": {"kind": "ab", "rank": 1, "relations": [[2]]}}).parse_entry(bad)


def test_summary():
    assert obj_summary(ab(2, 4)) and obj_summary(preset("S3")) == "order 6"


@given(st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=2), max_size=3))
def test_raw_relations_give_the_right_order(rels):
    from oracles import det
    X, _ = parse_object({"kind": "ab", "rank": 2, "relations": rels})
    # order of Z^2 / rowspace: finite iff the relations have rank 2, then |det of a basis|
    if X.is_finite:
        assert X.order > 0
    if len(rels) == 2 and det(rels) != 0:
        assert X.is_finite and X.order == abs(det(rels))
