"""JSON forms of objects, morphisms, complexes and grids, in both directions."""
from __future__ import annotations

from .cmon import CMon, CMonoid
from .errors import MalformedInput
from .fgab import AbGroup, FinAb, canonicalize
from .fingrp import FinGroup, FinGrp, preset
from .setpt import PointedSet, SetPt

BACKENDS = {"setpt": SetPt, "cmon": CMon, "group": FinGrp, "ab": FinAb}


def backend(kind):
    try:
        return BACKENDS[kind]()
    except KeyError:
        raise MalformedInput(f"unknown backend {kind!r}") from None


# -- output ---------------------------------------------------------------------


def obj_json(X):
    if isinstance(X, PointedSet):
        return {"kind": "setpt", "size": X.size}
    if isinstance(X, CMonoid):
        return {"kind": "cmon", "table": [list(r) for r in X.table]}
    if isinstance(X, FinGroup):
        return {"kind": "group", "table": [list(r) for r in X.table]}
    if isinstance(X, AbGroup):
        n = X.ngens
        rels = [[d if i == j else 0 for j in range(n)] for i, d in enumerate(X.moduli) if d]
        return {"kind": "ab", "rank": n, "relations": rels}
    raise MalformedInput(f"cannot serialize {X!r}")


def obj_summary(X):
    """Short human-readable description used next to the full form in reports."""
    if isinstance(X, AbGroup):
        return repr(X)[3:-1]
    if isinstance(X, (CMonoid, FinGroup)):
        return f"order {X.size}"
    return f"size {X.size}"


def mor_json(f):
    out = {"dom": obj_json(f.dom), "cod": obj_json(f.cod)}
    if isinstance(f.dom, AbGroup):
        out["matrix"] = [list(r) for r in f.data]
    else:
        out["table"] = list(f.data)
    return out


# -- input ----------------------------------------------------------------------


class Env:
    """Parses named entries; keeps the raw-to-canonical coordinate change of abelian objects."""

    def __init__(self, C, named=None):
        self.C = C
        self.raw = dict(named or {})
        self.values = {}
        self.coords = {}  # ("name", n) -> (P, S) for abelian objects given by raw relations

    def get(self, name):
        if name not in self.values:
            if name not in self.raw:
                raise MalformedInput(f"unknown name {name!r}")
            self.values[name] = self.parse_entry(self.raw[name])
        return self.values[name]

    def parse_entry(self, e):
        if isinstance(e, dict) and "dom" in e:
            return self.morphism(e)
        if isinstance(e, dict) and "complex" in e:
            return self.complex(e["complex"])
        if isinstance(e, dict) and "grid" in e:
            return e["grid"]  # arrows are parsed by the grid consumer
        return self.object(e)

    def _obj_with_coords(self, e):
        if isinstance(e, str):
            X = self.get(e)
            return X, self.coords.get(("name", e))
        X, co = parse_object(e)
        return X, co

    def object(self, e):
        if isinstance(e, str):
            return self.get(e)
        X, co = parse_object(e)
        return X

    def morphism(self, e):
        if isinstance(e, str):
            f = self.get(e)
            return f
        dom, cd = self._obj_with_coords(e["dom"])
        cod, cc = self._obj_with_coords(e["cod"])
        C = self.C
        if isinstance(dom, AbGroup):
            if "matrix" not in e:
                raise MalformedInput("abelian morphisms need a 'matrix'")
            M = [list(map(int, r)) for r in e["matrix"]]
            if cd is not None or cc is not None:
                M = _change_coords(M, cd, cc, dom, cod)
            return C.hom(dom, cod, M)
        if "table" not in e:
            raise MalformedInput("morphism needs a 'table'")
        return C.hom(dom, cod, e["table"])

    def complex(self, e):
        from .homology import chain_complex
        objs = [self.object(o) for o in e["objects"]]
        ds = [self.morphism(d) for d in e.get("d", [])]
        if "hi" in e and e["hi"] != e["lo"] + len(objs) - 1:
            raise MalformedInput("complex: hi does not match the number of objects")
        return chain_complex(self.C, e["lo"], objs, ds)

    def register_objects(self):
        """Parse every named object up front so morphisms can use raw coordinates."""
        for name, e in self.raw.items():
            if isinstance(e, dict) and ("dom" in e or "complex" in e or "grid" in e):
                continue
            X, co = parse_object(e)
            self.values[name] = X
            if co is not None:
                self.coords[("name", name)] = co


def _change_coords(M, cd, cc, dom, cod):
    """M is given on raw generators; conjugate into canonical coordinates."""
    S_dom = cd[1] if cd is not None else [[int(i == j) for j in range(dom.ngens)] for i in range(dom.ngens)]
    P_cod = cc[0] if cc is not None else [[int(i == j) for j in range(cod.ngens)] for i in range(cod.ngens)]
    raw_cod = len(P_cod[0]) if P_cod else len(M)
    raw_dom = len(S_dom)
    if len(M) != raw_cod or any(len(r) != raw_dom for r in M):
        raise MalformedInput(f"matrix must be {raw_cod} x {raw_dom} in the given presentation")
    MS = [[sum(M[i][t] * S_dom[t][j] for t in range(raw_dom)) for j in range(dom.ngens)] for i in range(raw_cod)]
    return [[sum(P_cod[i][t] * MS[t][j] for t in range(raw_cod)) for j in range(dom.ngens)] for i in range(cod.ngens)]


def parse_object(e):
    """(object, coordinate change or None)."""
    if not isinstance(e, dict):
        raise MalformedInput("object must be a JSON object")
    kind = e.get("kind")
    if kind == "setpt":
        return PointedSet(int(e["size"])), None
    if kind == "cmon":
        return CMonoid(e["table"]), None
    if kind == "group":
        if "preset" in e:
            return preset(e["preset"]), None
        return FinGroup(e["table"]), None
    if kind == "ab":
        n = int(e.get("rank", 0))
        rels = e.get("relations", [])
        if any(len(r) != n for r in rels):
            raise MalformedInput("each relation must have length rank")
        cols = [list(map(int, r)) for r in rels]
        G, P, S = canonicalize([0] * n, cols)
        return G, (P, S)
    raise MalformedInput(f"unknown object kind {kind!r}")
