"""Objects of the category of fractions: sums, tensor, decomposition, isomorphisms."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

from .config import CompositionError, PreconditionError
from .groups import Group, GroupMap, Subgroup, are_isomorphic, direct_product, trivial_group
from .gsets import GSet, coset_gset, empty_gset, external_product, left_cosets, orbit_decomposition, point
from .spans import (
    CatObject,
    Morphism,
    SpanClass,
    canonicalize,
    class_span,
    dual,
    span_from_action,
)

__all__ = [
    "CatObject",
    "Biproduct",
    "Decomposition",
    "one_point",
    "zero_object",
    "sum_object",
    "direct_sum",
    "copair",
    "tensor",
    "tensor_mor",
    "decompose",
    "match_decompositions",
    "objects_isomorphic",
    "iso_from_equivariant_bijection",
    "iso_coset_collapse",
    "iso_absorb_factor",
    "coset_object",
]


def one_point(G: Group) -> CatObject:
    """``{.}/G``."""
    return CatObject(G, point(G), "pt")


def zero_object(G: Group | None = None) -> CatObject:
    G = G if G is not None else trivial_group()
    return CatObject(G, empty_gset(G), "empty")


def coset_object(G: Group, H: Subgroup) -> CatObject:
    """``(G/H)/G``."""
    return CatObject(G, coset_gset(G, H), "G/H")


@functools.lru_cache(maxsize=512)
def sum_object(a: CatObject, b: CatObject) -> CatObject:
    """``((X x H) |_| (G x Y)) / (G x H)``.

    ``(x, h)`` is point ``x*|H| + h``; ``(g, y)`` is point ``|X||H| + g*|Y| + y``.
    """
    G, H = a.group, b.group
    P = direct_product(G, H)
    X, Y = a.xset, b.xset
    nH, nY = H.order, Y.size
    off = X.size * nH
    act = []
    for e in P.elements():
        g1, h1 = divmod(e, nH)
        left = tuple(X.act[g1][x] * nH + H.mul[h1][h] for x in X.points() for h in H.elements())
        right = tuple(off + G.mul[g1][g] * nY + Y.act[h1][y] for g in G.elements() for y in Y.points())
        act.append(left + right)
    return CatObject(P, GSet(P, tuple(act)), f"({a.label}+{b.label})")


@dataclass(frozen=True)
class Biproduct:
    obj: CatObject
    inj_a: Morphism
    inj_b: Morphism
    proj_a: Morphism
    proj_b: Morphism


def _injections(a: CatObject, b: CatObject, S: CatObject) -> tuple[Morphism, Morphism]:
    G, H = a.group, b.group
    mG, mH, iG, iH = G.mul, H.mul, G.inv, H.inv
    X, Y = a.xset.act, b.xset.act
    nH, nY = H.order, b.size
    off = a.size * nH

    def act_a(p, g2, q):
        g1, h1 = divmod(p, nH)
        g, h, x = q
        return (mG[mG[g1][g]][iG[g2]], mH[h1][h], X[g1][x])

    pts_a = [(g, h, x) for g in G.elements() for h in H.elements() for x in a.xset.points()]
    inj_a = span_from_action(
        a, S, pts_a, act_a, lambda q: q[2] * nH + q[1], lambda q: X[iG[q[0]]][q[2]], check=False
    )

    def act_b(p, h2, q):
        g1, h1 = divmod(p, nH)
        g, h, y = q
        return (mG[g1][g], mH[mH[h1][h]][iH[h2]], Y[h1][y])

    pts_b = [(g, h, y) for g in G.elements() for h in H.elements() for y in b.xset.points()]
    inj_b = span_from_action(
        b, S, pts_b, act_b, lambda q: off + q[0] * nY + q[2], lambda q: Y[iH[q[1]]][q[2]], check=False
    )
    return canonicalize(inj_a, check=False), canonicalize(inj_b, check=False)


def direct_sum(a: CatObject, b: CatObject) -> Biproduct:
    """Sum object with injection spans; projections are their duals."""
    S = sum_object(a, b)
    ia, ib = _injections(a, b, S)
    return Biproduct(S, ia, ib, dual(ia), dual(ib))


def copair(f: Morphism, t: Morphism) -> Morphism:
    """The map ``a (+) b -> c`` restricting to ``f`` on ``a`` and ``t`` on ``b``."""
    if f.target != t.target:
        raise CompositionError("copair needs a common target")
    if f.modulus != t.modulus:
        raise CompositionError("morphisms over different coefficient rings")
    a, b, c = f.source, t.source, f.target
    S = sum_object(a, b)
    out: dict[SpanClass, int] = {}
    for cls, k in f.terms:
        for cls2, n in _copair_left(cls, b, S):
            out[cls2] = out.get(cls2, 0) + k * n
    for cls, k in t.terms:
        for cls2, n in _copair_right(cls, a, S):
            out[cls2] = out.get(cls2, 0) + k * n
    return Morphism.build(S, c, out, f.modulus)


@functools.lru_cache(maxsize=4096)
def _copair_left(cls: SpanClass, b: CatObject, S: CatObject):
    # <U x H, beta_, alpha+>, (k, g, h1)(u, h) = ((k, g)u, h h1^-1)
    U = class_span(cls)
    H = b.group
    mH, iH = H.mul, H.inv
    nH = H.order

    def act(k, p, q):
        g, h1 = divmod(p, nH)
        u, h = q
        return (U.act(k, g, u), mH[h][iH[h1]])

    pts = [(u, h) for u in range(U.size) for h in H.elements()]
    span = span_from_action(
        S, cls.target, pts, act, lambda q: U.beta[q[0]], lambda q: U.alpha[q[0]] * nH + iH[q[1]], check=False
    )
    return canonicalize(span, check=False, modulus=None).terms


@functools.lru_cache(maxsize=4096)
def _copair_right(cls: SpanClass, a: CatObject, S: CatObject):
    # <G x W, eta_, eps+>, (k, g1, h)(g, w) = (g g1^-1, (k, h)w)
    W = class_span(cls)
    G, H = a.group, cls.source.group
    mG, iG = G.mul, G.inv
    nH, nY = H.order, cls.source.size
    off = a.size * nH

    def act(k, p, q):
        g1, h = divmod(p, nH)
        g, w = q
        return (mG[g][iG[g1]], W.act(k, h, w))

    pts = [(g, w) for g in G.elements() for w in range(W.size)]
    span = span_from_action(
        S,
        cls.target,
        pts,
        act,
        lambda q: W.beta[q[1]],
        lambda q: off + iG[q[0]] * nY + W.alpha[q[1]],
        check=False,
    )
    return canonicalize(span, check=False, modulus=None).terms


def tensor(a: CatObject, b: CatObject) -> CatObject:
    """``(X x Y)/(G x H)``, point ``(x, y)`` encoded ``x*|Y| + y``."""
    P = direct_product(a.group, b.group)
    return CatObject(P, external_product(a.xset, b.xset, P), f"({a.label}*{b.label})")


def tensor_mor(f: Morphism, g: Morphism) -> Morphism:
    """Componentwise product span ``<U x U', beta x beta', alpha x alpha'>``, bilinear."""
    if f.modulus != g.modulus:
        raise CompositionError("morphisms over different coefficient rings")
    src, tgt = tensor(f.source, g.source), tensor(f.target, g.target)
    out: dict[SpanClass, int] = {}
    for c1, k1 in f.terms:
        for c2, k2 in g.terms:
            for cls, n in _tensor_classes(c1, c2, src, tgt):
                out[cls] = out.get(cls, 0) + k1 * k2 * n
    return Morphism.build(src, tgt, out, f.modulus)


@functools.lru_cache(maxsize=4096)
def _tensor_classes(c1: SpanClass, c2: SpanClass, src: CatObject, tgt: CatObject):
    U, V = class_span(c1), class_span(c2)
    nH2, nG2 = c2.target.group.order, c2.source.group.order
    nY2, nX2 = c2.target.size, c2.source.size

    def act(th, sg, q):
        h1, h2 = divmod(th, nH2)
        g1, g2 = divmod(sg, nG2)
        return (U.act(h1, g1, q[0]), V.act(h2, g2, q[1]))

    pts = [(u, v) for u in range(U.size) for v in range(V.size)]
    span = span_from_action(
        src,
        tgt,
        pts,
        act,
        lambda q: U.beta[q[0]] * nY2 + V.beta[q[1]],
        lambda q: U.alpha[q[0]] * nX2 + V.alpha[q[1]],
        check=False,
    )
    return canonicalize(span, check=False, modulus=None).terms


@dataclass(frozen=True)
class Decomposition:
    """Stabilizer groups, one per orbit, in orbit order."""

    groups: tuple[Group, ...]

    def __len__(self):
        return len(self.groups)

    def __iter__(self):
        return iter(self.groups)


def decompose(a: CatObject) -> Decomposition:
    return Decomposition(
        tuple(o.stabilizer.as_group(f"Stab({o.base_point})") for o in orbit_decomposition(a.xset))
    )


def match_decompositions(da: Sequence[Group], db: Sequence[Group]) -> list[int] | None:
    """``sigma`` with ``da[i] ~= db[sigma[i]]``, or None.

    Greedy matching is exact because group isomorphism is an equivalence relation.
    """
    da, db = list(da), list(db)
    if len(da) != len(db):
        return None
    free = list(range(len(db)))
    sigma = []
    for G in da:
        for pos, j in enumerate(free):
            if are_isomorphic(G, db[j]) is not None:
                sigma.append(j)
                del free[pos]
                break
        else:
            return None
    return sigma


def objects_isomorphic(a: CatObject, b: CatObject, witness: bool = False):
    """Isomorphism test via orbit stabilizers; optionally also the orbit pairing."""
    sigma = match_decompositions(decompose(a).groups, decompose(b).groups)
    if witness:
        return sigma is not None, sigma
    return sigma is not None


def iso_from_equivariant_bijection(
    a: CatObject, b: CatObject, f: GroupMap, t: Sequence[int]
) -> tuple[Morphism, Morphism]:
    """Mutually inverse pair ``a -> b`` and ``b -> a`` from ``f: G ~ H`` and ``t: X -> Y``."""
    G, H = a.group, b.group
    X, Y = a.xset.act, b.xset.act
    if f.source != G or f.target != H or not f.is_bijective() or not f.is_homomorphism():
        raise PreconditionError("f must be a group isomorphism G -> H")
    t = tuple(t)
    if sorted(t) != list(b.xset.points()) or len(t) != a.size:
        raise PreconditionError("t must be a bijection X -> Y")
    if any(t[X[g][x]] != Y[f(g)][t[x]] for g in G.elements() for x in a.xset.points()):
        raise PreconditionError("t(g.x) != f(g).t(x)")
    finv = f.inverse()
    tinv = [0] * len(t)
    for x, y in enumerate(t):
        tinv[y] = x
    mG, mH, iG, iH = G.mul, H.mul, G.inv, H.inv

    # <H x Y, 1_Y, t^-1 bar> : X/G -> Y/H, (h, g)(h1, y) = (h h1 f(g^-1), h y)
    fwd = span_from_action(
        a,
        b,
        [(h, y) for h in H.elements() for y in b.xset.points()],
        lambda h, g, q: (mH[mH[h][q[0]]][f(iG[g])], Y[h][q[1]]),
        lambda q: q[1],
        lambda q: tinv[Y[iH[q[0]]][q[1]]],
    )
    # <G x X, 1_X, t bar> : Y/H -> X/G, (g, h)(g1, x) = (g g1 f^-1(h^-1), g x)
    bwd = span_from_action(
        b,
        a,
        [(g, x) for g in G.elements() for x in a.xset.points()],
        lambda g, h, q: (mG[mG[g][q[0]]][finv(iH[h])], X[g][q[1]]),
        lambda q: q[1],
        lambda q: t[X[iG[q[0]]][q[1]]],
    )
    return canonicalize(fwd, check=False), canonicalize(bwd, check=False)


def iso_coset_collapse(G: Group, H: Subgroup) -> tuple[Morphism, Morphism]:
    """``(G/H)/G -> {.}/H`` as ``<G, e, pi_1>`` and its inverse ``<G, pi, e>``.

    The target group is ``H.as_group()``: element ``i`` is ``H.members[i]``.
    """
    if H.parent != G:
        raise PreconditionError("H is not a subgroup of G")
    Hg = H.as_group(G.label and f"sub({G.label})")
    src = coset_object(G, H)
    tgt = one_point(Hg)
    _, coset_of = left_cosets(G, H)
    m, inv = G.mul, G.inv
    hm = H.members
    pts = list(G.elements())
    # (h, g1) g = h g g1^-1 ; pi_1(g) = g^-1 H
    fwd = span_from_action(
        src, tgt, pts, lambda h, g1, g: m[m[hm[h]][g]][inv[g1]], lambda g: 0, lambda g: coset_of[inv[g]]
    )
    # (g1, h) g = g1 g h^-1 ; pi(g) = g H
    bwd = span_from_action(
        tgt, src, pts, lambda g1, h, g: m[m[g1][g]][inv[hm[h]]], lambda g: coset_of[g], lambda g: 0
    )
    return canonicalize(fwd, check=False), canonicalize(bwd, check=False)


def iso_absorb_factor(a: CatObject, H: Group) -> tuple[Morphism, Morphism]:
    """``X/G ~= (X x H)/(G x H)`` as the summand inclusion into ``X/G (+) empty/H``."""
    bp = direct_sum(a, zero_object(H))
    return bp.inj_a, bp.proj_a
