"""Short exact sequences, exactness, antinormal pairs, di-extensions and 3x3 grids."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (Morphism, em_comparison, is_normal_epi, is_normal_map, is_normal_mono,
                   normal_mono_factorization, pullback_normal_mono, pushout_normal_epi)
from .errors import NotExact, NotNormal, PreconditionError


@dataclass(frozen=True)
class ShortExactSeq:
    k: Morphism
    q: Morphism


def is_short_exact(C, k, q) -> bool:
    """k is a kernel of q and q is a cokernel of k."""
    if k.cod != q.dom:
        return False
    if not C.is_zero(C.compose(q, k)):
        return False
    u = C.lift(C.kernel(q), k)
    if u is None or not C.is_iso(u):
        return False
    v = C.descend(C.cokernel(k), q)
    return v is not None and C.is_iso(v)


def ses(C, k, q) -> ShortExactSeq:
    if not is_short_exact(C, k, q):
        raise NotExact("not a short exact sequence")
    return ShortExactSeq(k, q)


def is_exact_at(C, f, g) -> bool:
    """f is normal and its image is the kernel of g."""
    if f.cod != g.dom:
        raise PreconditionError("is_exact_at: f and g are not composable")
    if not is_normal_map(C, f):
        return False
    m = normal_mono_factorization(C, f).second
    u = C.lift(C.kernel(g), m)
    return u is not None and C.is_iso(u)


def is_coexact_at(C, f, g) -> bool:
    """g is normal and its coimage is the cokernel of f."""
    if f.cod != g.dom:
        raise PreconditionError("is_coexact_at: f and g are not composable")
    if not is_normal_map(C, g):
        return False
    e = C.cokernel(C.kernel(g))
    v = C.descend(C.cokernel(f), e)
    return v is not None and C.is_iso(v)


def is_exact_sequence(C, maps) -> bool:
    return all(is_exact_at(C, f, g) for f, g in zip(maps, maps[1:]))


# -- antinormal pairs ---------------------------------------------------------


@dataclass(frozen=True)
class AntinormalPair:
    mu: Morphism   # normal mono K -> X
    eps: Morphism  # normal epi X -> R


def antinormal_pair(C, mu, eps) -> AntinormalPair:
    if mu.cod != eps.dom:
        raise PreconditionError("antinormal pair: maps are not composable")
    if not C.is_mono(mu) or not is_normal_mono(C, mu):
        raise PreconditionError("mu is not a normal mono")
    if not C.is_epi(eps) or not is_normal_epi(C, eps):
        raise PreconditionError("eps is not a normal epi")
    return AntinormalPair(mu, eps)


def dinversion(C, p: AntinormalPair) -> AntinormalPair:
    """(μ, ε) -> (ker ε, coker μ)."""
    return AntinormalPair(C.kernel(p.eps), C.cokernel(p.mu))


def pairs_equivalent(C, p: AntinormalPair, r: AntinormalPair) -> bool:
    """Same normal subobject and same normal quotient of the same middle object."""
    if p.mu.cod != r.mu.cod:
        return False
    a, b = C.lift(r.mu, p.mu), C.lift(p.mu, r.mu)
    c, d = C.descend(p.eps, r.eps), C.descend(r.eps, p.eps)
    return None not in (a, b, c, d)


# -- 3x3 grids ------------------------------------------------------------------
#
#   M -a-> L -d-> I        rows h[r] = (h[r][0], h[r][1])
#   u|     v|     w|       cols v[c] = (v[c][0], v[c][1])
#   K -b-> X -e-> Q
#   x|     y|     z|
#   J -c-> R -f-> S


@dataclass(frozen=True)
class Grid:
    h: tuple  # three rows of two maps (None = unknown)
    v: tuple  # three columns of two maps

    def obj(self, i, j):
        if j < 2 and self.h[i][j] is not None:
            return self.h[i][j].dom
        if j == 2 and self.h[i][1] is not None:
            return self.h[i][1].cod
        if i < 2 and self.v[j][i] is not None:
            return self.v[j][i].dom
        if i == 2 and self.v[j][1] is not None:
            return self.v[j][1].cod
        return None

    @classmethod
    def from_maps(cls, a, d, b, e, c, f, u, x, v, y, w, z):
        return cls(((a, d), (b, e), (c, f)), ((u, x), (v, y), (w, z)))

    def names(self):
        (a, d), (b, e), (c, f) = self.h
        (u, x), (v, y), (w, z) = self.v
        return dict(a=a, d=d, b=b, e=e, c=c, f=f, u=u, x=x, v=v, y=y, w=w, z=z)


@dataclass
class GridCheck:
    ok: bool
    failure: Optional[str] = None

    def __bool__(self):
        return self.ok


def verify_di_extension(C, g: Grid) -> GridCheck:
    """Every square commutes and every row and column is short exact."""
    for i in range(3):
        for j in range(2):
            if g.h[i][j] is None or g.v[i][j] is None:
                return GridCheck(False, "grid has unknown slots")
    # object agreement
    for i in range(3):
        if g.h[i][0].cod != g.h[i][1].dom or g.v[i][0].cod != g.v[i][1].dom:
            return GridCheck(False, f"line {i} is not composable")
    for i in range(2):
        for j in range(2):
            top, left = g.h[i][j], g.v[j][i]
            right, bottom = g.v[j + 1][i], g.h[i + 1][j]
            if top.dom != left.dom or top.cod != right.dom or left.cod != bottom.dom or right.cod != bottom.cod:
                return GridCheck(False, f"square ({i},{j}) has mismatched objects")
            if C.compose(right, top) != C.compose(bottom, left):
                return GridCheck(False, f"square ({i},{j}) does not commute")
    for i in range(3):
        if not is_short_exact(C, *g.h[i]):
            return GridCheck(False, f"row {i} is not short exact")
    for j in range(3):
        if not is_short_exact(C, *g.v[j]):
            return GridCheck(False, f"column {j} is not short exact")
    return GridCheck(True)


def di_extension_from_pair(C, p: AntinormalPair) -> Grid:
    """The di-extension whose middle row ends in μ and middle column ends in ε."""
    mu, eps = p.mu, p.eps
    pi = C.cokernel(mu)
    kappa = C.kernel(eps)
    alpha = C.compose(eps, mu)
    omega = C.compose(pi, kappa)
    if not is_normal_map(C, alpha):
        raise NotNormal("alpha", em_comparison(C, alpha))
    if not is_normal_map(C, omega):
        raise NotNormal("omega", em_comparison(C, omega))
    # top-left corner: intersection of the two normal subobjects
    u, a = pullback_normal_mono(C, kappa, mu)  # kappa∘a = mu∘u
    # bottom-right corner: pushout of the two normal quotients
    f, z = pushout_normal_epi(C, eps, pi)  # f∘eps = z∘pi
    x = C.cokernel(u)
    c = C.descend(x, alpha)
    d = C.cokernel(a)
    w = C.descend(d, omega)
    g = Grid.from_maps(a, d, mu, pi, c, f, u, x, kappa, eps, w, z)
    chk = verify_di_extension(C, g)
    if not chk:
        raise NotExact(f"constructed grid fails: {chk.failure}", chk.failure)
    return g


# -- 3x3 completion -------------------------------------------------------------


def _need_ses(C, k, q, what):
    if not is_short_exact(C, k, q):
        raise PreconditionError(f"{what} is not short exact")


def three_by_three_border(C, g: Grid) -> Grid:
    """Fill in the one missing border line of a grid whose other lines are short exact.

    The missing line is recomputed from the universal properties; the result
    is certified with verify_di_extension (raises NotExact if the filled-in
    line is not short exact).
    """
    n = g.names()
    missing = [k for k, m in n.items() if m is None]
    if set(missing) == {"w", "z"}:
        for k, q, what in ((n["a"], n["d"], "top row"), (n["b"], n["e"], "middle row"), (n["c"], n["f"], "bottom row"),
                           (n["u"], n["x"], "left column"), (n["v"], n["y"], "middle column")):
            _need_ses(C, k, q, what)
        n["w"] = C.descend(n["d"], C.compose(n["e"], n["v"]))
        n["z"] = C.descend(n["e"], C.compose(n["f"], n["y"]))
    elif set(missing) == {"u", "x"}:
        for k, q, what in ((n["a"], n["d"], "top row"), (n["b"], n["e"], "middle row"), (n["c"], n["f"], "bottom row"),
                           (n["v"], n["y"], "middle column"), (n["w"], n["z"], "right column")):
            _need_ses(C, k, q, what)
        n["u"] = C.lift(n["b"], C.compose(n["v"], n["a"]))
        n["x"] = C.lift(n["c"], C.compose(n["y"], n["b"]))
    elif set(missing) == {"a", "d"}:
        for k, q, what in ((n["u"], n["x"], "left column"), (n["v"], n["y"], "middle column"),
                           (n["w"], n["z"], "right column"), (n["b"], n["e"], "middle row"), (n["c"], n["f"], "bottom row")):
            _need_ses(C, k, q, what)
        n["a"] = C.lift(n["v"], C.compose(n["b"], n["u"]))
        n["d"] = C.lift(n["w"], C.compose(n["e"], n["v"]))
    elif set(missing) == {"c", "f"}:
        for k, q, what in ((n["u"], n["x"], "left column"), (n["v"], n["y"], "middle column"),
                           (n["w"], n["z"], "right column"), (n["a"], n["d"], "top row"), (n["b"], n["e"], "middle row")):
            _need_ses(C, k, q, what)
        n["c"] = C.descend(n["x"], C.compose(n["y"], n["b"]))
        n["f"] = C.descend(n["y"], C.compose(n["z"], n["e"]))
    else:
        raise PreconditionError("exactly one border line must be missing")
    if any(n[k] is None for k in missing):
        raise NotExact("the missing line has no filler")
    out = Grid.from_maps(**n)
    chk = verify_di_extension(C, out)
    if not chk:
        raise NotExact(f"completed grid fails: {chk.failure}", chk.failure)
    return out


def three_by_three_middle(C, g: Grid) -> Grid:
    """Certify the middle row from exact columns, exact outer rows and e∘b = 0."""
    n = g.names()
    for k, q, what in ((n["u"], n["x"], "left column"), (n["v"], n["y"], "middle column"),
                       (n["w"], n["z"], "right column"), (n["a"], n["d"], "top row"), (n["c"], n["f"], "bottom row")):
        _need_ses(C, k, q, what)
    if not C.is_zero(C.compose(n["e"], n["b"])):
        raise PreconditionError("middle row does not compose to zero")
    chk = verify_di_extension(C, g)
    if not chk:
        raise NotExact(f"middle row fails: {chk.failure}", chk.failure)
    return g


def drop(g: Grid, *names) -> Grid:
    """Copy of g with the named slots emptied (for completion tests)."""
    n = g.names()
    for k in names:
        n[k] = None
    return Grid.from_maps(**n)


# -- short five lemma, third isomorphism -----------------------------------------


def short_five(C, top: ShortExactSeq, bottom: ShortExactSeq, kappa, xi, rho) -> bool:
    """Given a commuting map of short exact sequences, are all three verticals isos?"""
    if C.compose(bottom.k, kappa) != C.compose(xi, top.k) or C.compose(bottom.q, xi) != C.compose(rho, top.q):
        raise PreconditionError("diagram does not commute")
    return C.is_iso(kappa) and C.is_iso(xi) and C.is_iso(rho)


def third_isomorphism_holds(C, alpha, beta) -> bool:
    """For normal monos X -α-> Y -β-> Z with βα normal: is Y/X >-> Z/X ->> Z/Y short exact?"""
    ba = C.compose(beta, alpha)
    qa = C.cokernel(alpha)       # Y -> Y/X
    qba = C.cokernel(ba)         # Z -> Z/X
    qb = C.cokernel(beta)        # Z -> Z/Y
    gamma = C.descend(qa, C.compose(qba, beta))  # Y/X -> Z/X
    last = C.descend(qba, qb)                    # Z/X -> Z/Y
    return is_short_exact(C, gamma, last)


def ses_of_subobject(C, k) -> ShortExactSeq:
    return ShortExactSeq(k, C.cokernel(k))

