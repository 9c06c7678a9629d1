"""Command line: run query files, probe axioms, validate files.

Reports are pretty-printed JSON with sorted keys, so identical inputs give
byte-identical output.  Wall-clock time is only included with --timing.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .core import (em_comparison, image_factorization, is_normal_epi, is_normal_map, is_normal_mono,
                   normal_epi_factorization, normal_mono_factorization)
from .diexact import (Grid, ShortExactSeq, antinormal_pair, di_extension_from_pair, three_by_three_border,
                      three_by_three_middle, verify_di_extension)
from .errors import ExactaError, MalformedInput, NoImage, PreconditionError
from .homology import (chain_map, classify, homology_c, homology_k, is_exact_complex_at, lambda_,
                       long_exact_sequence, snake)
from .probe import REPORT_VERSION, probe
from .schema import validate
from .serialize import Env, backend, mor_json, obj_json
from .structure import classify_map, find_retraction, join, meet

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION = 0, 2, 3


def _carrier(C, m):
    if hasattr(C, "element_set"):
        return [list(v) for v in C.element_set(m)] if m.dom.is_finite else None
    return list(m.data)


def _fact(fz):
    return {"first": mor_json(fz.first), "second": mor_json(fz.second)}


# -- ops -------------------------------------------------------------------------


def op_kernel(C, env, q):
    k = C.kernel(env.morphism(q["map"]))
    return {"kernel": mor_json(k), "object": obj_json(k.dom), "carrier": _carrier(C, k)}


def op_cokernel(C, env, q):
    c = C.cokernel(env.morphism(q["map"]))
    return {"cokernel": mor_json(c), "object": obj_json(c.cod)}


def op_factorize(C, env, q):
    f = env.morphism(q["map"])
    out = {
        "normal": is_normal_map(C, f),
        "comparison": mor_json(em_comparison(C, f)),
        "normal_mono_factorization": _fact(normal_mono_factorization(C, f)),
        "normal_epi_factorization": _fact(normal_epi_factorization(C, f)),
    }
    try:
        out["image_factorization"] = _fact(image_factorization(C, f))
    except NoImage as e:
        out["image_factorization"] = None
        out["image_error"] = str(e)
    return out


def op_classify(C, env, q):
    f = env.morphism(q["map"])
    mono, epi = C.is_mono(f), C.is_epi(f)
    return {
        "mono": mono,
        "epi": epi,
        "iso": C.is_iso(f),
        "normal_mono": mono and is_normal_mono(C, f),
        "normal_epi": epi and is_normal_epi(C, f),
        "normal": is_normal_map(C, f),
        "split_mono": mono and find_retraction(C, f) is not None,
        "zero": C.is_zero(f),
        "class": classify_map(C, f),
    }


def op_snake(C, env, q):
    k, qq = (env.morphism(x) for x in q["top"])
    l, r = (env.morphism(x) for x in q["bottom"])
    kappa, xi, rho = (env.morphism(x) for x in q["verticals"])
    six = snake(C, ShortExactSeq(k, qq), ShortExactSeq(l, r), kappa, xi, rho)
    return {
        "labels": ["K(kappa)", "K(xi)", "K(rho)", "Q(kappa)", "Q(xi)", "Q(rho)"],
        "objects": [obj_json(o) for o in six.objects],
        "maps": [mor_json(m) for m in six.maps],
        "connecting": mor_json(six.delta),
        "exact": six.exact,
        "ok": six.ok,
    }


def op_les(C, env, q):
    A, B, Cx = (env.get(q[x]) if isinstance(q[x], str) else env.complex(q[x]["complex"]) for x in ("A", "B", "C"))
    f = chain_map(C, A, B, [env.morphism(m) for m in q["f"]])
    g = chain_map(C, B, Cx, [env.morphism(m) for m in q["g"]])
    les = long_exact_sequence(C, f, g)
    return {
        "labels": les.labels,
        "objects": [obj_json(o) for o in les.objects],
        "maps": [mor_json(m) for m in les.maps],
        "exact": les.exact,
        "ok": les.ok,
    }


def _grid_json(g: Grid, chk):
    return {
        "rows": 3,
        "cols": 3,
        "objects": [obj_json(g.obj(i, j)) for i in range(3) for j in range(3)],
        "h": [[mor_json(m) for m in row] for row in g.h],
        "v": [[mor_json(m) for m in col] for col in g.v],
        "ok": chk.ok,
        "failure": chk.failure,
    }


def _parse_grid(C, env, gs):
    def m(x):
        return None if x is None else env.morphism(x)

    g = Grid(tuple(tuple(m(x) for x in row) for row in gs["h"]),
             tuple(tuple(m(x) for x in col) for col in gs["v"]))
    for i, o in enumerate(gs.get("objects") or []):
        if o is not None and g.obj(i // 3, i % 3) not in (None, env.object(o)):
            raise PreconditionError(f"grid object {i} does not match its arrows")
    return g


def op_3x3(C, env, q):
    if "pair" in q:
        mu, eps = (env.morphism(x) for x in q["pair"])
        g = di_extension_from_pair(C, antinormal_pair(C, mu, eps))
        return _grid_json(g, verify_di_extension(C, g))

    gs = env.get(q["grid"]) if isinstance(q["grid"], str) else q["grid"]
    g = _parse_grid(C, env, gs)
    has_gaps = any(v is None for v in g.names().values())
    mode = q.get("mode", "border" if has_gaps else "verify")
    if mode == "border":
        g = three_by_three_border(C, g)
    elif mode == "middle":
        g = three_by_three_middle(C, g)
    return _grid_json(g, verify_di_extension(C, g))


def _complex(env, ref):
    return env.get(ref) if isinstance(ref, str) else env.complex(ref["complex"])


def op_homology(C, env, q):
    cx = _complex(env, q["complex"])
    degrees = []
    for n in range(cx.lo, cx.hi + 1):
        row = {"n": n, "exact": is_exact_complex_at(C, cx, n)}
        for key, fn in (("Hc", homology_c), ("Hk", homology_k)):
            try:
                row[key] = obj_json(fn(C, cx, n))
            except PreconditionError as e:
                row[key] = None
                row[key + "_error"] = str(e)
        try:
            lam = lambda_(C, cx, n)
            row["lambda"] = {"mono": C.is_mono(lam), "epi": C.is_epi(lam), "iso": C.is_iso(lam)}
        except PreconditionError:
            row["lambda"] = None
        degrees.append(row)
    return {"classification": classify(C, cx), "degrees": degrees}


def op_lambda(C, env, q):
    cx = _complex(env, q["complex"])
    lam = lambda_(C, cx, q["degree"])
    return {"lambda": mor_json(lam), "mono": C.is_mono(lam), "epi": C.is_epi(lam), "iso": C.is_iso(lam)}


def op_meet(C, env, q):
    s = meet(C, env.morphism(q["a"]), env.morphism(q["b"]))
    return {"subobject": mor_json(s.incl), "carrier": _carrier(C, s.incl)}


def op_join(C, env, q):
    s = join(C, env.morphism(q["a"]), env.morphism(q["b"]))
    return {"subobject": mor_json(s.incl), "carrier": _carrier(C, s.incl)}


def op_ext(C, env, q):
    from .fgab import ext_classes
    if C.kind != "ab":
        raise PreconditionError("ext needs the abelian backend")
    n, reps = ext_classes(C, env.object(q["quotient"]), env.object(q["kernel"]), cap=q.get("cap", 64))
    return {"count": n, "representatives": [{"k": mor_json(k), "q": mor_json(p)} for k, p in reps]}


OPS = {
    "kernel": op_kernel, "cokernel": op_cokernel, "factorize": op_factorize, "classify-map": op_classify,
    "snake": op_snake, "les": op_les, "3x3": op_3x3, "homology": op_homology, "lambda": op_lambda,
    "meet": op_meet, "join": op_join, "ext": op_ext,
}


def run_doc(doc, jobs=1, timing=False) -> dict:
    validate(doc)
    kind = doc["category"]["kind"]
    q = doc["query"]
    if q["op"] == "probe":
        rep = probe(kind, q["axiom"], q["max_size"], jobs=jobs, max_checks=q.get("max_checks"))
        return {"version": REPORT_VERSION, "op": "probe", "result": rep.to_json(timing)}
    C = backend(kind)
    env = Env(C, doc.get("named", {}))
    env.register_objects()
    return {"version": REPORT_VERSION, "op": q["op"], "result": OPS[q["op"]](C, env, q)}


def run_file(path, jobs=1, timing=False) -> dict:
    with open(path) as fh:
        doc = json.load(fh)
    return run_doc(doc, jobs=jobs, timing=timing)


def dumps(report) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _emit(report, out):
    text = dumps(report)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser():
    p = argparse.ArgumentParser(prog="exacta", description="Computations in small z-exact categories.")
    p.add_argument("--version", action="version", version=f"exacta {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True)

    r = sub.add_parser("run", help="execute a query file")
    r.add_argument("file")
    r.add_argument("--out")
    r.add_argument("--jobs", type=int, default=1)
    r.add_argument("--timing", action="store_true", help="include elapsed time (breaks byte-identity)")

    pr = sub.add_parser("probe", help="scan an axiom over small objects")
    pr.add_argument("--backend", required=True, choices=["setpt", "cmon", "group", "ab"])
    pr.add_argument("--axiom", required=True, choices=["ann", "dpn", "hsd", "aen", "ksg", "pne"])
    pr.add_argument("--max-size", type=int, required=True)
    pr.add_argument("--max-checks", type=int)
    pr.add_argument("--jobs", type=int, default=1)
    pr.add_argument("--out")
    pr.add_argument("--timing", action="store_true")

    v = sub.add_parser("validate", help="check a query file against the schema")
    v.add_argument("file")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "run":
            _emit(run_file(args.file, jobs=args.jobs, timing=args.timing), args.out)
        elif args.cmd == "probe":
            rep = probe(args.backend, args.axiom, args.max_size, jobs=args.jobs, max_checks=args.max_checks)
            _emit({"version": REPORT_VERSION, "op": "probe", "result": rep.to_json(args.timing)}, args.out)
        else:
            with open(args.file) as fh:
                validate(json.load(fh))
            sys.stdout.write("valid\n")
    except MalformedInput as e:
        print(f"exacta: malformed input: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ExactaError as e:
        # well-formed query the mathematics rejects: bad precondition, not exact, resource cap
        print(f"exacta: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (json.JSONDecodeError, OSError, KeyError, ValueError) as e:
        print(f"exacta: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
