"""Functors into the category of fractions.

``functor_A`` sends a span of G-sets ``Y <- T -> X`` to a morphism
``X/G -> Y/G``; it identifies spans that differ by a conjugation-twisted leg
("fused" spans).  ``functor_F`` sends an ``(H, G)``-biset to a morphism
``{.}/G -> {.}/H``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .config import InvariantError, NoWitnessError, PreconditionError
from .groups import Group, Subgroup, conjugacy_classes_of_subgroups, direct_product
from .gsets import GSet, coset_gset, orbit_decomposition, regular_gset
from .category import one_point
from .spans import CatObject, Morphism, Span, canonicalize, span_from_action


@dataclass(frozen=True)
class GSpan:
    """``Y <-beta- T -alpha-> X`` in G-sets, a morphism ``X -> Y``."""

    group: Group
    left: GSet  # Y
    right: GSet  # X
    T: GSet
    beta: tuple[int, ...]
    alpha: tuple[int, ...]

    def validate(self) -> None:
        for leg, tgt in ((self.beta, self.left), (self.alpha, self.right)):
            if len(leg) != self.T.size:
                raise InvariantError("leg has the wrong length")
            for g in self.group.elements():
                row, trow = self.T.act[g], tgt.act[g]
                if any(leg[row[t]] != trow[leg[t]] for t in self.T.points()):
                    raise InvariantError("leg is not a G-map")


def identity_gspan(X: GSet) -> GSpan:
    ident = tuple(X.points())
    return GSpan(X.group, X, X, X, ident, ident)


def gspan_compose(s2: GSpan, s1: GSpan) -> GSpan:
    """Pullback ``Q = {(s, t) : gamma(s) = beta(t)}`` with the diagonal action.

    Points are listed in the order of the ``gset_product`` encoding ``s*|T| + t``.
    """
    if s2.right != s1.left:
        raise PreconditionError("spans are not composable")
    S, T = s2.T, s1.T
    Q = [(s, t) for s in S.points() for t in T.points() if s2.alpha[s] == s1.beta[t]]
    index = {q: i for i, q in enumerate(Q)}
    act = tuple(tuple(index[(S.act[g][s], T.act[g][t])] for s, t in Q) for g in s1.group.elements())
    return GSpan(
        s1.group,
        s2.left,
        s1.right,
        GSet(s1.group, act),
        tuple(s2.beta[s] for s, _ in Q),
        tuple(s1.alpha[t] for _, t in Q),
    )


def gspan_classes(s: GSpan) -> list[tuple]:
    """Sorted (stabilizer, mark) keys, one per orbit of ``T``, minimized over conjugation."""
    G = s.group
    Y, X = s.left.act, s.right.act
    keys = []
    for o in orbit_decomposition(s.T):
        t = o.base_point
        stab = o.stabilizer
        keys.append(
            min((stab.conjugate(c).members, (Y[c][s.beta[t]], X[c][s.alpha[t]])) for c in G.elements())
        )
    return sorted(keys)


def gspans_equivalent(s1: GSpan, s2: GSpan) -> bool:
    """Equivalence in the span category: ``T1 ~= T2`` commuting with both legs."""
    return (s1.left, s1.right) == (s2.left, s2.right) and gspan_classes(s1) == gspan_classes(s2)


def functor_A(s: GSpan) -> Morphism:
    """``<G x T, beta_, alpha^>`` with ``(g1, g2)(g, t) = (g1 g g2^-1, g1 t)``.

    Legs: to ``Y`` is ``(g, t) -> beta(t)``, to ``X`` is ``(g, t) -> g^-1 alpha(t)``.
    """
    G = s.group
    m, inv = G.mul, G.inv
    Tact, X = s.T.act, s.right.act
    src, tgt = CatObject.of(s.right), CatObject.of(s.left)
    pts = [(g, t) for g in G.elements() for t in s.T.points()]
    span = span_from_action(
        src,
        tgt,
        pts,
        lambda g1, g2, p: (m[m[g1][p[0]]][inv[g2]], Tact[g1][p[1]]),
        lambda p: s.beta[p[1]],
        lambda p: X[inv[p[0]]][s.alpha[p[1]]],
        check=False,
    )
    return canonicalize(span, check=False)


def fused_equal(s1: GSpan, s2: GSpan) -> bool:
    if (s1.left, s1.right) != (s2.left, s2.right):
        raise PreconditionError("spans between different G-sets")
    return functor_A(s1) == functor_A(s2)


def fused_witness(G: Group) -> tuple[GSpan, GSpan]:
    """``U <-id- U -id-> U`` and ``U <-id- U -t.id-> U`` on the regular G-set.

    ``t(u) = u z u^-1`` for the nonidentity element ``z = 1``; this is a
    G-map to ``G^c`` (constant when ``z`` is central) and ``(t.id)(u) = u z``.
    """
    if G.order == 1:
        raise NoWitnessError("the trivial group has no fused pair")
    U = regular_gset(G)
    z = 1
    ident = tuple(U.points())
    twisted = tuple(G.mul[u][z] for u in U.points())
    return GSpan(G, U, U, U, ident, ident), GSpan(G, U, U, U, ident, twisted)


def _gmaps_to_conjugation(T: GSet) -> Iterator[tuple[int, ...]]:
    """All G-maps ``T -> G^c``."""
    G = T.group
    orbits = list(orbit_decomposition(T))
    choices = []
    for o in orbits:
        # t(rep) must be centralized by the stabilizer of rep
        choices.append([c for c in G.elements() if all(G.conj[s][c] == c for s in o.stabilizer.members)])
    trans = []
    for o in orbits:
        tr = {}
        for g in G.elements():
            tr.setdefault(T.act[g][o.base_point], g)
        trans.append(tr)
    for pick in itertools.product(*choices):
        t = [0] * T.size
        for tr, c in zip(trans, pick):
            for p, g in tr.items():
                t[p] = G.conj[g][c]
        yield tuple(t)


def _equivariant_bijections(T1: GSet, T2: GSet, want: Sequence[tuple[int, int]], have: Sequence[tuple[int, int]]):
    """Bijections ``f`` with ``have[f(u)] == want[u]``, equivariant; exhaustive backtracking."""
    n = T1.size
    if n != T2.size or sorted(want) != sorted(have):
        return
    G = T1.group
    f = [-1] * n
    used = [False] * n

    def consistent(u, v):
        for g in G.elements():
            x = T1.act[g][u]
            w = T2.act[g][v]
            if x == u:
                if w != v:
                    return False
            elif f[x] != -1 and f[x] != w:
                return False
        return True

    def rec(u):
        if u == n:
            yield tuple(f)
            return
        for v in range(n):
            if not used[v] and have[v] == want[u] and consistent(u, v):
                used[v] = True
                f[u] = v
                yield from rec(u + 1)
                used[v] = False
                f[u] = -1

    yield from rec(0)


def fused_related(s1: GSpan, s2: GSpan) -> bool:
    """Exhaustive search for ``f: T1 ~ T2`` and ``t: T1 -> G^c`` with
    ``beta2 f = beta1`` and ``alpha2 f = t.alpha1``."""
    X = s1.right.act
    have = list(zip(s2.beta, s2.alpha))
    for t in _gmaps_to_conjugation(s1.T):
        want = [(s1.beta[u], X[t[u]][s1.alpha[u]]) for u in s1.T.points()]
        for _ in _equivariant_bijections(s1.T, s2.T, want, have):
            return True
    return False


# ---------------------------------------------------------------------------
# bisets


@dataclass(frozen=True)
class Biset:
    """An ``(H, G)``-biset: ``lact[h][x] = h x`` and ``ract[g][x] = x g``."""

    left_group: Group
    right_group: Group
    lact: tuple[tuple[int, ...], ...]
    ract: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.lact[0])

    @classmethod
    def from_gset(cls, H: Group, G: Group, U: GSet) -> "Biset":
        """From an ``(H x G)``-set through ``(h, g) x = h x g^-1``."""
        nG = G.order
        if U.group.order != H.order * nG:
            raise PreconditionError("U must be a set over H x G")
        lact = tuple(U.act[h * nG] for h in H.elements())
        ract = tuple(U.act[G.inv[g]] for g in G.elements())
        return cls(H, G, lact, ract)

    def validate(self) -> None:
        n = self.size
        for grp, tab, left in ((self.left_group, self.lact, True), (self.right_group, self.ract, False)):
            for a in grp.elements():
                for b in grp.elements():
                    ab = tab[grp.mul[a][b]]
                    # left: (ab)x = a(bx); right: x(ab) = (xa)b
                    comp = tab[a] if left else tab[b]
                    inner = tab[b] if left else tab[a]
                    if any(ab[x] != comp[inner[x]] for x in range(n)):
                        raise InvariantError("not a biset action")
        for h in self.left_group.elements():
            for g in self.right_group.elements():
                if any(self.lact[h][self.ract[g][x]] != self.ract[g][self.lact[h][x]] for x in range(n)):
                    raise InvariantError("left and right actions do not commute")


def transitive_biset(H: Group, G: Group, L: Subgroup) -> Biset:
    """``(H x G)/L`` as an ``(H, G)``-biset."""
    return Biset.from_gset(H, G, coset_gset(L.parent, L))


def transitive_bisets(H: Group, G: Group) -> list[Biset]:
    """One transitive biset per conjugacy class of subgroups of ``H x G``."""
    P = direct_product(H, G)
    return [transitive_biset(H, G, L) for L in conjugacy_classes_of_subgroups(P)]


def biset_product(V: Biset, U: Biset) -> Biset:
    """``V x_H U``: H-orbits of ``V x U`` under ``(v, u).h = (v h, h^-1 u)``, enumerated directly."""
    H = V.right_group
    if U.left_group != H:
        raise PreconditionError("middle groups differ")
    orbits = set()
    for v in range(V.size):
        for u in range(U.size):
            orbits.add(frozenset((V.ract[h][v], U.lact[H.inv[h]][u]) for h in H.elements()))
    orbits = sorted(orbits, key=min)
    where = {p: i for i, o in enumerate(orbits) for p in o}
    lact = tuple(tuple(where[(V.lact[k][min(o)[0]], min(o)[1])] for o in orbits) for k in V.left_group.elements())
    ract = tuple(tuple(where[(min(o)[0], U.ract[g][min(o)[1]])] for o in orbits) for g in U.right_group.elements())
    return Biset(V.left_group, U.right_group, lact, ract)


def biset_sum(U: Biset, V: Biset) -> Biset:
    n = U.size
    lact = tuple(a + tuple(n + x for x in b) for a, b in zip(U.lact, V.lact))
    ract = tuple(a + tuple(n + x for x in b) for a, b in zip(U.ract, V.ract))
    return Biset(U.left_group, U.right_group, lact, ract)


def functor_F(b: Biset) -> Morphism:
    """The class of ``{.} <- U -> {.}`` from ``{.}/G`` to ``{.}/H``."""
    G, H = b.right_group, b.left_group
    gact = tuple(b.ract[G.inv[g]] for g in G.elements())
    zeros = (0,) * b.size
    span = Span(one_point(G), one_point(H), b.lact, gact, zeros, zeros)
    return canonicalize(span, check=False)
