"""Chain complexes, their two homologies, the comparison λ, and the snake lemmas.

Convention: d_n : C_n -> C_{n-1}.  A complex lives on a window [lo, hi] and is
zero outside it.  For each n

    k_n = ker(d_n) : K(d_n) -> C_n          q_n = coker(d_{n+1}) : C_n -> Q(d_{n+1})
    under_n : C_n -> K(d_{n-1})            with d_n = k_{n-1} ∘ under_n
    over_n  : Q(d_{n+1}) -> C_{n-1}        with d_n = over_n ∘ q_n
    hat_n   : Q(d_{n+1}) -> K(d_{n-1})     with over_n = k_{n-1} ∘ hat_n, under_n = hat_n ∘ q_n

H^c_n = Q(hat_{n+1}) and H^k_n = K(hat_n).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import Morphism, is_normal_map, pullback_normal_mono
from .diexact import ShortExactSeq, is_coexact_at, is_exact_at, is_short_exact
from .errors import NonNormalVertical, NotExact, PreconditionError


@dataclass(frozen=True)
class ChainComplex:
    lo: int
    hi: int
    objects: tuple  # C_lo .. C_hi
    d: tuple        # d_{lo+1} .. d_hi

    def obj(self, C, n):
        if self.lo <= n <= self.hi:
            return self.objects[n - self.lo]
        return C.zero_object()

    def diff(self, C, n):
        if self.lo < n <= self.hi:
            return self.d[n - self.lo - 1]
        return C.zero_map(self.obj(C, n), self.obj(C, n - 1))


def chain_complex(C, lo, objects, d) -> ChainComplex:
    objects = tuple(objects)
    d = tuple(d)
    hi = lo + len(objects) - 1
    if len(d) != max(len(objects) - 1, 0):
        raise PreconditionError("need one differential between each pair of neighbours")
    cx = ChainComplex(lo, hi, objects, d)
    for n in range(lo + 1, hi + 1):
        dn = cx.diff(C, n)
        if dn.dom != cx.obj(C, n) or dn.cod != cx.obj(C, n - 1):
            raise PreconditionError(f"d_{n} has the wrong domain or codomain")
    for n in range(lo + 2, hi + 1):
        if not C.is_zero(C.compose(cx.diff(C, n - 1), cx.diff(C, n))):
            raise PreconditionError(f"d_{n - 1} ∘ d_{n} is not zero")
    return cx


@dataclass
class Decomposition:
    k: dict = field(default_factory=dict)
    q: dict = field(default_factory=dict)
    under: dict = field(default_factory=dict)
    over: dict = field(default_factory=dict)
    hat: dict = field(default_factory=dict)


def decompose(C, cx: ChainComplex) -> Decomposition:
    key = ("decomp", cx)
    if key in C._memo:
        return C._memo[key]
    D = Decomposition()
    # one extra degree of zero padding on each side, for long exact sequences
    for n in range(cx.lo - 2, cx.hi + 3):
        D.k[n] = C.kernel(cx.diff(C, n))
        D.q[n] = C.cokernel(cx.diff(C, n + 1))
    for n in range(cx.lo - 1, cx.hi + 3):
        dn = cx.diff(C, n)
        D.under[n] = C.lift(D.k[n - 1], dn)
        D.over[n] = C.descend(D.q[n], dn)
        D.hat[n] = C.lift(D.k[n - 1], D.over[n])
        if None in (D.under[n], D.over[n], D.hat[n]):
            raise PreconditionError(f"decomposition of d_{n} failed (not a complex?)")
        if C.descend(D.q[n], D.under[n]) != D.hat[n]:
            raise AssertionError(f"two constructions of hat_{n} disagree")
    C._memo[key] = D
    return D


CLASSES = ("normal", "subnormal", "cosubnormal", "weakly-normal", "none")


def normality_flags(C, cx: ChainComplex) -> dict:
    """Per degree n: is d_n / under_n / over_n / hat_n normal."""
    D = decompose(C, cx)
    out = {}
    for n in range(cx.lo, cx.hi + 2):
        out[n] = {
            "d": is_normal_map(C, cx.diff(C, n)),
            "under": is_normal_map(C, D.under[n]),
            "over": is_normal_map(C, D.over[n]),
            "hat": is_normal_map(C, D.hat[n]),
        }
    return out


def classify(C, cx: ChainComplex) -> str:
    fl = normality_flags(C, cx).values()
    sub = all(f["under"] for f in fl)
    cosub = all(f["over"] for f in fl)
    if sub and cosub:
        if not all(f["d"] for f in fl):
            raise AssertionError("subnormal and cosubnormal complex with a non-normal differential")
        return "normal"
    if sub:
        return "subnormal"
    if cosub:
        return "cosubnormal"
    if all(f["hat"] for f in fl):
        return "weakly-normal"
    return "none"


def homology_c_map(C, cx, n) -> Morphism:
    """The quotient K(d_n) -> H^c_n."""
    D = decompose(C, cx)
    if not is_normal_map(C, D.hat[n + 1]):
        raise PreconditionError(f"hat_{n + 1} is not normal")
    return C.cokernel(D.hat[n + 1])


def homology_k_map(C, cx, n) -> Morphism:
    """The inclusion H^k_n -> Q(d_{n+1})."""
    D = decompose(C, cx)
    if not is_normal_map(C, D.hat[n]):
        raise PreconditionError(f"hat_{n} is not normal")
    return C.kernel(D.hat[n])


def homology_c(C, cx, n):
    return homology_c_map(C, cx, n).cod


def homology_k(C, cx, n):
    return homology_k_map(C, cx, n).dom


def lambda_(C, cx, n) -> Morphism:
    """λ_n : H^c_n -> H^k_n, induced by q_n ∘ k_n : K(d_n) -> Q(d_{n+1})."""
    D = decompose(C, cx)
    t = C.compose(D.q[n], D.k[n])
    t1 = C.lift(homology_k_map(C, cx, n), t)
    lam = C.descend(homology_c_map(C, cx, n), t1) if t1 is not None else None
    if lam is None:
        raise AssertionError(f"lambda_{n} does not exist")
    return lam


def is_exact_complex_at(C, cx, n) -> bool:
    return is_exact_at(C, cx.diff(C, n + 1), cx.diff(C, n))


# -- morphisms of complexes ------------------------------------------------------


@dataclass(frozen=True)
class ChainMap:
    src: ChainComplex
    dst: ChainComplex
    maps: tuple  # f_n for n = lo..hi of the common window

    def at(self, C, n):
        lo = self.src.lo
        if 0 <= n - lo < len(self.maps):
            return self.maps[n - lo]
        return C.zero_map(self.src.obj(C, n), self.dst.obj(C, n))


def chain_map(C, src, dst, maps) -> ChainMap:
    if (src.lo, src.hi) != (dst.lo, dst.hi):
        raise PreconditionError("chain maps need a common window")
    f = ChainMap(src, dst, tuple(maps))
    for n in range(src.lo, src.hi + 1):
        fn = f.at(C, n)
        if fn.dom != src.obj(C, n) or fn.cod != dst.obj(C, n):
            raise PreconditionError(f"f_{n} has the wrong domain or codomain")
    for n in range(src.lo + 1, src.hi + 1):
        if C.compose(dst.diff(C, n), f.at(C, n)) != C.compose(f.at(C, n - 1), src.diff(C, n)):
            raise PreconditionError(f"chain map does not commute with d_{n}")
    return f


def kernel_complex(C, f: ChainMap):
    """(K, inclusion) with K_n = K(f_n)."""
    A = f.src
    ks = [C.kernel(f.at(C, n)) for n in range(A.lo, A.hi + 1)]
    ds = [C.lift(ks[i - 1], C.compose(A.diff(C, A.lo + i), ks[i])) for i in range(1, len(ks))]
    K = chain_complex(C, A.lo, [k.dom for k in ks], ds)
    return K, ChainMap(K, A, tuple(ks))


def cokernel_complex(C, f: ChainMap):
    B = f.dst
    qs = [C.cokernel(f.at(C, n)) for n in range(B.lo, B.hi + 1)]
    ds = [C.descend(qs[i], C.compose(qs[i - 1], B.diff(C, B.lo + i))) for i in range(1, len(qs))]
    Q = chain_complex(C, B.lo, [q.cod for q in qs], ds)
    return Q, ChainMap(B, Q, tuple(qs))


def induced_hc(C, f: ChainMap, n) -> Morphism:
    """H^c_n(f) : H^c_n(A) -> H^c_n(B)."""
    A, B = f.src, f.dst
    DA, DB = decompose(C, A), decompose(C, B)
    fk = C.lift(DB.k[n], C.compose(f.at(C, n), DA.k[n]))
    return C.descend(homology_c_map(C, A, n), C.compose(homology_c_map(C, B, n), fk))


def induced_hk(C, f: ChainMap, n) -> Morphism:
    A, B = f.src, f.dst
    DA, DB = decompose(C, A), decompose(C, B)
    fq = C.descend(DA.q[n], C.compose(DB.q[n], f.at(C, n)))
    return C.lift(homology_k_map(C, B, n), C.compose(fq, homology_k_map(C, A, n)))


# -- snakes ------------------------------------------------------------------------


@dataclass
class SixTermSequence:
    objects: tuple  # K(κ), K(ξ), K(ρ), Q(κ), Q(ξ), Q(ρ)
    maps: tuple     # k*, q*, ∂, l*, r*
    exact: dict     # node name -> bool

    @property
    def delta(self):
        return self.maps[2]

    @property
    def ok(self):
        return all(self.exact.values())


def connecting_map(C, q, l, kappa, xi, rho) -> Morphism:
    """∂ : K(ρ) -> Q(κ) for a diagram with rows K -k-> X -q-> Q and L -l-> Y -r-> R.

    Pull the kernel of ρ back along q to get P -> K(ρ), lift ξ restricted to P
    through l, push to Q(κ), and descend along P -> K(ρ).
    """
    kr = C.kernel(rho)
    p, pm = pullback_normal_mono(C, q, kr)  # q∘pm = kr∘p
    s = C.lift(l, C.compose(xi, pm))
    if s is None:
        raise PreconditionError("connecting map: ξ on the preimage of K(ρ) does not land in L")
    h = C.compose(C.cokernel(kappa), s)
    c = C.cokernel(C.kernel(p))
    v = C.descend(c, p)
    if v is None or not C.is_iso(v):
        raise PreconditionError("connecting map: preimage of K(ρ) does not map onto K(ρ) normally")
    hb = C.descend(c, h)
    if hb is None:
        raise AssertionError("connecting map is not well defined")
    return C.compose(hb, C.inverse(v))


def _six_term(C, k, q, l, r, kappa, xi, rho):
    kk, kx, kr = C.kernel(kappa), C.kernel(xi), C.kernel(rho)
    ck, cx, cr = C.cokernel(kappa), C.cokernel(xi), C.cokernel(rho)
    k_star = C.lift(kx, C.compose(k, kk))
    q_star = C.lift(kr, C.compose(q, kx))
    l_star = C.descend(ck, C.compose(cx, l))
    r_star = C.descend(cx, C.compose(cr, r))
    delta = connecting_map(C, q, l, kappa, xi, rho)
    objs = (kk.dom, kx.dom, kr.dom, ck.cod, cx.cod, cr.cod)
    maps = (k_star, q_star, delta, l_star, r_star)
    exact = {
        "K(xi)": is_exact_at(C, k_star, q_star),
        "K(rho)": is_exact_at(C, q_star, delta),
        "Q(kappa)": is_exact_at(C, delta, l_star),
        "Q(xi)": is_exact_at(C, l_star, r_star),
    }
    return objs, maps, exact


def _check_square(C, top, left, right, bottom, what):
    if C.compose(right, top) != C.compose(bottom, left):
        raise PreconditionError(f"{what} square does not commute")


def snake(C, top: ShortExactSeq, bottom: ShortExactSeq, kappa, xi, rho) -> SixTermSequence:
    """Six-term sequence K(κ) -> K(ξ) -> K(ρ) -∂-> Q(κ) -> Q(ξ) -> Q(ρ), with both 0-caps."""
    k, q = top.k, top.q
    l, r = bottom.k, bottom.q
    if not is_short_exact(C, k, q):
        raise PreconditionError("top row is not short exact")
    if not is_short_exact(C, l, r):
        raise PreconditionError("bottom row is not short exact")
    _check_square(C, k, kappa, xi, l, "left")
    _check_square(C, q, xi, rho, r, "right")
    for name, m in (("kappa", kappa), ("xi", xi), ("rho", rho)):
        if not is_normal_map(C, m):
            raise NonNormalVertical(name)
    objs, maps, exact = _six_term(C, k, q, l, r, kappa, xi, rho)
    exact["cap K(kappa)"] = is_exact_at(C, C.from_zero(objs[0]), maps[0])
    exact["cap Q(rho)"] = is_exact_at(C, maps[4], C.to_zero(objs[5]))
    return SixTermSequence(objs, maps, exact)


def relaxed_snake(C, k, q, l, r, kappa, xi, rho) -> SixTermSequence:
    """Top row K -k-> X -q-> Q -> 0 exact, bottom 0 -> L -l-> Y -r-> R coexact."""
    _check_square(C, k, kappa, xi, l, "left")
    _check_square(C, q, xi, rho, r, "right")
    for name, m in (("k", k), ("kappa", kappa), ("xi", xi), ("rho", rho), ("r", r)):
        if not is_normal_map(C, m):
            raise NonNormalVertical(name)
    if not (is_exact_at(C, k, q) and is_exact_at(C, q, C.to_zero(q.cod))):
        raise PreconditionError("top row is not exact")
    if not (is_coexact_at(C, l, r) and is_coexact_at(C, C.from_zero(l.dom), l)):
        raise PreconditionError("bottom row is not coexact")
    objs, maps, exact = _six_term(C, k, q, l, r, kappa, xi, rho)
    return SixTermSequence(objs, maps, exact)


@dataclass
class PureSnake:
    a: Morphism      # K -> L
    t: Morphism      # L -> Q
    rho: Morphism    # Q -> R
    iso: Morphism    # Q(a) -> K(ρ)
    exact: dict

    @property
    def ok(self):
        return all(self.exact.values()) and self.iso is not None


def pure_snake(C, top: ShortExactSeq, bottom: ShortExactSeq) -> PureSnake:
    """Two short exact sequences K -> X -> Q and L -> X -> R through the same X with K <= L."""
    kappa, xi = top.k, top.q
    lam, eta = bottom.k, bottom.q
    if kappa.cod != lam.cod:
        raise PreconditionError("pure snake needs a common middle object")
    a = C.lift(lam, kappa)
    rho = C.descend(xi, eta)
    if a is None or rho is None:
        raise PreconditionError("the first sequence's kernel is not inside the second's")
    t = C.compose(xi, lam)
    tb = C.descend(C.cokernel(a), t)
    phi = C.lift(C.kernel(rho), tb)
    if phi is None or not C.is_iso(phi):
        raise NotExact("Q(a) -> K(rho) is not an isomorphism")
    exact = {
        "K": is_exact_at(C, C.from_zero(a.dom), a),
        "L": is_exact_at(C, a, t),
        "Q": is_exact_at(C, t, rho),
        "R": is_exact_at(C, rho, C.to_zero(rho.cod)),
    }
    return PureSnake(a, t, rho, phi, exact)


def six_term_from_composite(C, f, g):
    """K(f) -> K(gf) -> K(g) -> Q(f) -> Q(gf) -> Q(g) for normal f, g, gf."""
    gf = C.compose(g, f)
    for name, m in (("f", f), ("g", g), ("gf", gf)):
        if not is_normal_map(C, m):
            raise PreconditionError(f"{name} is not normal")
    kf, kgf, kg = C.kernel(f), C.kernel(gf), C.kernel(g)
    cf, cgf, cg = C.cokernel(f), C.cokernel(gf), C.cokernel(g)
    u = C.lift(kgf, kf)
    ft = C.lift(kg, C.compose(f, kgf))
    delta = C.compose(cf, kg)
    v = C.descend(cf, C.compose(cgf, g))
    gt = C.descend(cgf, cg)
    maps = (u, ft, delta, v, gt)
    exact = {
        "K(gf)": is_exact_at(C, u, ft),
        "K(g)": is_exact_at(C, ft, delta),
        "Q(f)": is_exact_at(C, delta, v),
        "Q(gf)": is_exact_at(C, v, gt),
    }
    objs = (kf.dom, kgf.dom, kg.dom, cf.cod, cgf.cod, cg.cod)
    return SixTermSequence(objs, maps, exact)


# -- long exact sequence -------------------------------------------------------------


@dataclass
class LongExactSequence:
    labels: list   # e.g. "H2(A)"
    objects: list
    maps: list     # maps[i] : objects[i] -> objects[i+1]
    exact: list    # exactness at objects[1..-2]

    @property
    def ok(self):
        return all(self.exact)


def _induced_q(C, f: ChainMap, n):
    """Q(d^A_{n+1}) -> Q(d^B_{n+1}) induced by f_n."""
    DA, DB = decompose(C, f.src), decompose(C, f.dst)
    return C.descend(DA.q[n], C.compose(DB.q[n], f.at(C, n)))


def _induced_k(C, f: ChainMap, n):
    DA, DB = decompose(C, f.src), decompose(C, f.dst)
    return C.lift(DB.k[n], C.compose(f.at(C, n), DA.k[n]))


def homology_connecting(C, f: ChainMap, g: ChainMap, n) -> Morphism:
    """∂_n : H^c_n(C) -> H^c_{n-1}(A) via the relaxed snake on the hat maps."""
    A, B, Cx = f.src, f.dst, g.dst
    top_k, top_q = _induced_q(C, f, n), _induced_q(C, g, n)
    bot_l, bot_r = _induced_k(C, f, n - 1), _induced_k(C, g, n - 1)
    hA, hB, hC = decompose(C, A).hat[n], decompose(C, B).hat[n], decompose(C, Cx).hat[n]
    d = connecting_map(C, top_q, bot_l, hA, hB, hC)  # H^k_n(C) -> H^c_{n-1}(A)
    return C.compose(d, lambda_(C, Cx, n))


def long_exact_sequence(C, f: ChainMap, g: ChainMap) -> LongExactSequence:
    A, B, Cx = f.src, f.dst, g.dst
    if g.src != B:
        raise PreconditionError("maps are not composable")
    for n in range(A.lo, A.hi + 1):
        if not is_short_exact(C, f.at(C, n), g.at(C, n)):
            raise PreconditionError(f"degree {n} is not short exact")
    for name, cx in (("A", A), ("B", B), ("C", Cx)):
        if classify(C, cx) != "normal":
            raise PreconditionError(f"complex {name} is not normal")
    labels, objs, maps = [], [], []
    for n in range(A.hi + 1, A.lo - 2, -1):
        labels += [f"H{n}(A)", f"H{n}(B)", f"H{n}(C)"]
        objs += [homology_c(C, A, n), homology_c(C, B, n), homology_c(C, Cx, n)]
        maps += [induced_hc(C, f, n), induced_hc(C, g, n)]
        if n > A.lo - 1:
            maps.append(homology_connecting(C, f, g, n))
    exact = [is_exact_at(C, maps[i - 1], maps[i]) for i in range(1, len(maps))]
    return LongExactSequence(labels, objs, maps, exact)


def ses_of_complexes(C, f: ChainMap, g: ChainMap) -> bool:
    return all(is_short_exact(C, f.at(C, n), g.at(C, n)) for n in range(f.src.lo, f.src.hi + 1))
