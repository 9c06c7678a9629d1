"""Exhaustive axiom probes over small objects of a backend.

Each probe walks a deterministic list of work units (an object, or an
ordered pair of objects).  Units may run in worker processes; results are
merged in unit order, so the reported witness is always the first
counterexample in the canonical scan regardless of the number of jobs.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .core import is_normal_map, _is_normal_epi
from .errors import MalformedInput, PreconditionError
from .serialize import Env, backend, mor_json

AXIOMS = ("ANN", "DPN", "HSD", "AEN", "KSG", "PNE")
REPORT_VERSION = 1


@dataclass
class AxiomReport:
    axiom: str
    backend: str
    bound: int
    verdict: str  # "no-counterexample" | "counterexample"
    witness: Optional[dict] = None
    complete: bool = True
    checked: int = 0
    counterexamples: int = 0
    elapsed: float = field(default=0.0, compare=False)

    def to_json(self, timing=False):
        out = {
            "version": REPORT_VERSION,
            "axiom": self.axiom,
            "backend": self.backend,
            "bound": self.bound,
            "verdict": self.verdict,
            "witness": self.witness,
            "complete": self.complete,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


# -- the individual checks (shared by the scan and by replay) --------------------


def _image_elems(C, f):
    if hasattr(C, "element_set"):
        return set(C.element_set(f))
    return set(f.data)


def _all_elems(C, X):
    return set(C.elements(X))


def holds_ann(C, mu, eps):
    return is_normal_map(C, C.compose(eps, mu))


def _omega(C, mu, eps):
    return C.compose(C.cokernel(mu), C.kernel(eps))


def holds_dpn(C, mu, eps):
    if not is_normal_map(C, C.compose(eps, mu)):
        return True
    return is_normal_map(C, _omega(C, mu, eps))


def holds_hsd(C, mu, eps):
    if not C.is_zero(C.compose(eps, mu)):
        return True
    return is_normal_map(C, _omega(C, mu, eps))


def holds_aen(C, q, s):
    return _is_normal_epi(C, q)


def holds_ksg(C, q, s):
    """Kernel and section jointly generate: the least subobject they both factor through is everything."""
    X = q.dom
    k = C.kernel(q)
    gens = _image_elems(C, k) | _image_elems(C, s)
    return set(C.generated(X, sorted(gens))) == _all_elems(C, X)


def holds_pne(C, g, f):
    _, p1, _ = C.pullback(f, g)
    return C.is_epi(p1) and _is_normal_epi(C, p1)


def _check_pair_inputs(C, axiom, a, b):
    from .core import is_normal_epi, is_normal_mono
    if axiom in ("ANN", "DPN", "HSD"):
        if a.cod != b.dom or not is_normal_mono(C, a) or not (C.is_epi(b) and _is_normal_epi(C, b)):
            raise PreconditionError("witness is not an antinormal pair")
    elif axiom in ("AEN", "KSG"):
        if b.cod != a.dom or C.compose(a, b) != C.identity(a.cod):
            raise PreconditionError("witness is not a split epi with its section")
    elif axiom == "PNE":
        if a.cod != b.cod or not (C.is_epi(a) and is_normal_epi(C, a)):
            raise PreconditionError("witness is not a normal epi with a map into its codomain")


CHECKS = {"ANN": holds_ann, "DPN": holds_dpn, "HSD": holds_hsd,
          "AEN": holds_aen, "KSG": holds_ksg, "PNE": holds_pne}
ROLES = {"ANN": ("mu", "eps"), "DPN": ("mu", "eps"), "HSD": ("mu", "eps"),
         "AEN": ("q", "section"), "KSG": ("q", "section"), "PNE": ("g", "f")}


# -- instance families ----------------------------------------------------------


@lru_cache(maxsize=None)
def _family(kind, bound):
    C = backend(kind)
    return C, tuple(C.objects(bound))


def _units(kind, axiom, bound):
    C, objs = _family(kind, bound)
    n = len(objs)
    if axiom in ("ANN", "DPN", "HSD", "PNE"):
        return [(i,) for i in range(n)]
    out = []
    for i in range(n):
        for j in range(n):
            X, Q = objs[i], objs[j]
            sx, sq = C.size(X), C.size(Q)
            if sq > sx:
                continue
            if kind in ("group", "ab") and sx % sq:
                continue  # |X| = |ker q| · |Q| for a split epi of groups
            out.append((i, j))
    return out


def _instances(C, objs, axiom, unit):
    """Yield (a, b) argument pairs for the unit, in a fixed order."""
    if axiom in ("ANN", "DPN", "HSD"):
        X = objs[unit[0]]
        quos = C.normal_quotients(X)
        for mu in C.normal_subobjects(X):
            for eps in quos:
                yield mu, eps
    elif axiom in ("AEN", "KSG"):
        X, Q = objs[unit[0]], objs[unit[1]]
        back = list(C.homs(Q, X))
        one = C.identity(Q)
        for q in C.homs(X, Q):
            if not C.is_epi(q):
                continue
            for s in back:
                if C.compose(q, s) == one:
                    yield q, s
                    if axiom == "AEN":
                        break  # AEN only depends on q
    elif axiom == "PNE":
        Z = objs[unit[0]]
        for g in C.normal_quotients(Z):
            for X in objs:
                for f in C.homs(X, g.cod):
                    yield g, f


def _run_unit(args):
    kind, axiom, bound, unit = args
    C, objs = _family(kind, bound)
    check = CHECKS[axiom]
    checked, bad, first = 0, 0, None
    for a, b in _instances(C, objs, axiom, unit):
        checked += 1
        if not check(C, a, b):
            bad += 1
            if first is None:
                first = _witness(C, axiom, a, b)
    return checked, bad, first


def _witness(C, axiom, a, b):
    ra, rb = ROLES[axiom]
    return {"axiom": axiom, "backend": C.kind, ra: mor_json(a), rb: mor_json(b)}


def probe(kind, axiom, bound, jobs=1, max_checks=None) -> AxiomReport:
    """Scan every instance of the axiom over objects of size <= bound.

    With max_checks set, units are merged in order until the running count
    passes the limit; the report is then flagged incomplete.  Truncation
    happens at unit boundaries so the outcome does not depend on jobs.
    """
    axiom = axiom.upper()
    if axiom not in AXIOMS:
        raise MalformedInput(f"unknown axiom {axiom!r}")
    if bound < 1:
        raise MalformedInput("bound must be positive")
    t0 = time.perf_counter()
    units = _units(kind, axiom, bound)
    tasks = [(kind, axiom, bound, u) for u in units]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_run_unit, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_run_unit(t) for t in tasks]
    checked = bad = 0
    witness = None
    complete = True
    for c, b, w in results:
        if max_checks is not None and checked >= max_checks:
            complete = False
            break
        checked += c
        bad += b
        if witness is None and w is not None:
            witness = w
    verdict = "counterexample" if witness is not None else "no-counterexample"
    return AxiomReport(axiom, kind, bound, verdict, witness, complete, checked, bad,
                       time.perf_counter() - t0)


def replay(witness: dict) -> bool:
    """Re-run the check on a serialized witness; True iff it is still a counterexample."""
    axiom = witness["axiom"]
    C = backend(witness["backend"])
    env = Env(C)
    ra, rb = ROLES[axiom]
    a, b = env.morphism(witness[ra]), env.morphism(witness[rb])
    _check_pair_inputs(C, axiom, a, b)
    return not CHECKS[axiom](C, a, b)


def ksg_by_subobjects(C, q, s) -> bool:
    """KSG instance by enumeration: only X itself contains both the kernel and the section."""
    X = q.dom
    need = _image_elems(C, C.kernel(q)) | _image_elems(C, s)
    full = _all_elems(C, X)
    for m in C.subobjects(X):
        els = _image_elems(C, m)
        if need <= els and els != full:
            return False
    return True


__all__ = ["AXIOMS", "AxiomReport", "probe", "replay", "ksg_by_subobjects", "CHECKS"]
