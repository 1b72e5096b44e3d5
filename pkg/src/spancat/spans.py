"""Spans of bisets between fractions X/G, their classes, and composition.

A morphism ``X/G -> Y/H`` is a span ``Y <-beta- U -alpha-> X`` where ``U`` is
an ``(H x G)``-set, ``beta`` is equivariant through the projection to ``H``
and ``alpha`` through the projection to ``G``.  Elements of ``H x G`` are
encoded as ``h*|G| + g`` everywhere, matching ``groups.direct_product``.

A span stores the two commuting partial actions separately
(``hact[h][u] = (h,1).u`` and ``gact[g][u] = (1,g).u``), so the product
group never has to be materialised as a Cayley table.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .config import CONFIG, CompositionError, InvariantError
from .groups import Group, Table, generating_set
from .gsets import GSet
from .unionfind import UnionFind


@dataclass(frozen=True, eq=False)
class CatObject:
    """The fraction ``X/G``."""

    group: Group
    xset: GSet
    label: str = ""

    def __post_init__(self):
        if self.xset.group != self.group:
            raise InvariantError("the G-set is not over the object's group")
        object.__setattr__(self, "_hash", hash(self.xset))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, CatObject):
            return NotImplemented
        return self._hash == other._hash and self.xset == other.xset

    def __hash__(self):
        return self._hash

    def __repr__(self):
        name = self.label or f"{self.xset.size}pt"
        return f"<{name}/{self.group.label or self.group.order}>"

    @classmethod
    def of(cls, xset: GSet, label: str = "") -> "CatObject":
        return cls(xset.group, xset, label)

    @property
    def size(self) -> int:
        return self.xset.size


def _pair_conj(H: Group, G: Group, members: Iterable[int], a: int, b: int) -> tuple[int, ...]:
    """Conjugate a subset of ``H x G`` by ``(a, b)``; sorted."""
    nG = G.order
    ch, cg = H.conj[a], G.conj[b]
    return tuple(sorted(ch[m // nG] * nG + cg[m % nG] for m in members))


def _pair_mul(H: Group, G: Group, x: int, y: int) -> int:
    nG = G.order
    return H.mul[x // nG][y // nG] * nG + G.mul[x % nG][y % nG]


def _pair_inv(H: Group, G: Group, x: int) -> int:
    nG = G.order
    return H.inv[x // nG] * nG + G.inv[x % nG]


@dataclass(frozen=True, order=False)
class SpanClass:
    """Isomorphism class of a transitive span, in canonical form.

    ``stab`` is the stabilizer of a base point in ``H x G`` and
    ``mark = (beta(base), alpha(base))``; the pair is the lexicographic
    minimum over all choices of base point.
    """

    source: CatObject
    target: CatObject
    stab: tuple[int, ...]
    mark: tuple[int, int]

    @property
    def key(self) -> tuple:
        return (self.stab, self.mark)

    def __lt__(self, other: "SpanClass") -> bool:
        return self.key < other.key


def canonical_class(source: CatObject, target: CatObject, stab: Iterable[int], mark: tuple[int, int]) -> SpanClass:
    """Canonical form of the class of ``(H x G)/stab`` marked at ``mark``."""
    return _canonical_class(source, target, tuple(sorted(stab)), tuple(mark))


@functools.lru_cache(maxsize=1 << 16)
def _canonical_class(source, target, stab, mark):
    G, H = source.group, target.group
    X, Y = source.xset.act, target.xset.act
    nG = G.order
    y, x = mark
    covered: set[int] = set()
    best = None
    for c in range(H.order * nG):
        if c in covered:
            continue
        covered.update(_pair_mul(H, G, c, s) for s in stab)
        a, b = divmod(c, nG)
        cand = (_pair_conj(H, G, stab, a, b), (Y[a][y], X[b][x]))
        if best is None or cand < best:
            best = cand
    return SpanClass(source, target, best[0], best[1])


@dataclass(frozen=True, eq=False)
class Span:
    source: CatObject  # X/G
    target: CatObject  # Y/H
    hact: Table  # hact[h][u] = (h, 1).u
    gact: Table  # gact[g][u] = (1, g).u
    beta: tuple[int, ...]  # U -> Y
    alpha: tuple[int, ...]  # U -> X

    @property
    def size(self) -> int:
        return len(self.beta)

    def act(self, h: int, g: int, u: int) -> int:
        return self.hact[h][self.gact[g][u]]

    def validate(self) -> None:
        """Action axioms, commuting actions, and leg equivariance; raises InvariantError."""
        G, H = self.source.group, self.target.group
        X, Y = self.source.xset.act, self.target.xset.act
        n = self.size
        if len(self.alpha) != n or len(self.hact) != H.order or len(self.gact) != G.order:
            raise InvariantError("span tables have inconsistent sizes")
        for grp, tab in ((H, self.hact), (G, self.gact)):
            if tab[0] != tuple(range(n)):
                raise InvariantError("identity does not act trivially on U")
            for a in grp.elements():
                for b in grp.elements():
                    ab, ra, rb = tab[grp.mul[a][b]], tab[a], tab[b]
                    if any(ab[u] != ra[rb[u]] for u in range(n)):
                        raise InvariantError("U is not a group action")
        beta, alpha = self.beta, self.alpha
        for h in H.elements():
            row = self.hact[h]
            for g in G.elements():
                grow = self.gact[g]
                for u in range(n):
                    w = row[grow[u]]
                    if w != grow[row[u]]:
                        raise InvariantError("left and right actions do not commute")
                    if beta[w] != Y[h][beta[u]] or alpha[w] != X[g][alpha[u]]:
                        raise InvariantError("span legs are not equivariant")

    def orbits(self) -> list[list[int]]:
        G, H = self.source.group, self.target.group
        gens = [self.hact[h] for h in generating_set(H)] + [self.gact[g] for g in generating_set(G)]
        uf = UnionFind(self.size)
        for row in gens:
            for u in range(self.size):
                uf.union(u, row[u])
        out: dict[int, list[int]] = {}
        for u, k in enumerate(uf.labels()):
            out.setdefault(k, []).append(u)
        return list(out.values())

    def stabilizer(self, u: int) -> tuple[int, ...]:
        nG = self.source.group.order
        return tuple(
            h * nG + g
            for h in range(len(self.hact))
            for g in range(nG)
            if self.hact[h][self.gact[g][u]] == u
        )

    def orbit_class(self, u: int) -> SpanClass:
        """Canonical class of the orbit through ``u``."""
        G, H = self.source.group, self.target.group
        stab = self.stabilizer(u)
        # transversal: each orbit point p gets (a, b) with (a, b).u = p
        trans = {u: (0, 0)}
        queue = deque([u])
        hg, gg = generating_set(H), generating_set(G)
        while queue:
            p = queue.popleft()
            a, b = trans[p]
            for h in hg:
                q = self.hact[h][p]
                if q not in trans:
                    trans[q] = (H.mul[h][a], b)
                    queue.append(q)
            for g in gg:
                q = self.gact[g][p]
                if q not in trans:
                    trans[q] = (a, G.mul[g][b])
                    queue.append(q)
        best = min((_pair_conj(H, G, stab, a, b), (self.beta[p], self.alpha[p])) for p, (a, b) in trans.items())
        return SpanClass(self.source, self.target, best[0], best[1])


def span_from_action(
    source: CatObject,
    target: CatObject,
    points: Sequence[Hashable],
    act: Callable[[int, int, Hashable], Hashable],
    beta: Callable[[Hashable], int],
    alpha: Callable[[Hashable], int],
    check: bool = True,
) -> Span:
    """Build a span from an explicit point list and an ``(h, g, p) -> p'`` action."""
    G, H = source.group, target.group
    index = {p: i for i, p in enumerate(points)}
    try:
        hact = tuple(tuple(index[act(h, 0, p)] for p in points) for h in H.elements())
        gact = tuple(tuple(index[act(0, g, p)] for p in points) for g in G.elements())
    except KeyError as e:
        raise InvariantError(f"action leaves the point set: {e}") from None
    s = Span(source, target, hact, gact, tuple(beta(p) for p in points), tuple(alpha(p) for p in points))
    if check:
        s.validate()
    return s


def _normalize(terms: Mapping[SpanClass, int], modulus: int | None) -> tuple[tuple[SpanClass, int], ...]:
    out = []
    for cls, c in terms.items():
        if modulus:
            c %= modulus
        if c:
            out.append((cls, c))
    out.sort(key=lambda t: t[0].key)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Morphism:
    """Formal integer combination of span classes ``source -> target``."""

    source: CatObject
    target: CatObject
    terms: tuple[tuple[SpanClass, int], ...]
    modulus: int | None = None

    def __post_init__(self):
        for cls, _ in self.terms:
            if cls.source != self.source or cls.target != self.target:
                raise InvariantError("term with foreign source/target")
        object.__setattr__(self, "_hash", hash((self.source, self.target, self.terms, self.modulus)))

    @classmethod
    def build(cls, source, target, terms: Mapping[SpanClass, int], modulus: int | None = "config") -> "Morphism":
        if modulus == "config":
            modulus = CONFIG.modulus
        return cls(source, target, _normalize(terms, modulus), modulus)

    @classmethod
    def zero(cls, source, target, modulus: int | None = "config") -> "Morphism":
        return cls.build(source, target, {}, modulus)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.source == other.source
            and self.target == other.target
            and self.modulus == other.modulus
            and self.terms == other.terms
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = " + ".join(f"{c}*{cls.key}" for cls, c in self.terms) or "0"
        return f"Morphism({self.source!r} -> {self.target!r}: {body})"

    def as_dict(self) -> dict[SpanClass, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_same(self, other: "Morphism") -> None:
        if self.source != other.source or self.target != other.target:
            raise CompositionError("morphisms have different source/target")
        if self.modulus != other.modulus:
            raise CompositionError("morphisms over different coefficient rings")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check_same(other)
        d = self.as_dict()
        for cls, c in other.terms:
            d[cls] = d.get(cls, 0) + c
        return Morphism.build(self.source, self.target, d, self.modulus)

    def __neg__(self) -> "Morphism":
        return self.scale(-1)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def scale(self, c: int) -> "Morphism":
        return Morphism.build(self.source, self.target, {cls: c * k for cls, k in self.terms}, self.modulus)

    def __rmul__(self, c: int) -> "Morphism":
        return self.scale(c)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)


def add(f: Morphism, g: Morphism) -> Morphism:
    return f + g


def scale(c: int, f: Morphism) -> Morphism:
    return f.scale(c)


def negate(f: Morphism) -> Morphism:
    return -f


def canonicalize(s: Span, check: bool = True, modulus: int | None = "config") -> Morphism:
    """Decompose ``U`` into orbits and count canonical classes."""
    if check:
        s.validate()
    counts: dict[SpanClass, int] = {}
    for orbit in s.orbits():
        cls = s.orbit_class(orbit[0])
        counts[cls] = counts.get(cls, 0) + 1
    return Morphism.build(s.source, s.target, counts, modulus)


@functools.lru_cache(maxsize=4096)
def class_span(cls: SpanClass) -> Span:
    """The transitive span ``(H x G)/stab`` with base coset marked at ``cls.mark``."""
    G, H = cls.source.group, cls.target.group
    X, Y = cls.source.xset.act, cls.target.xset.act
    nG = G.order
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for c in range(H.order * nG):
        if c in coset_of:
            continue
        k = len(reps)
        reps.append(c)
        for s in cls.stab:
            coset_of[_pair_mul(H, G, c, s)] = k
    hact = tuple(tuple(coset_of[_pair_mul(H, G, h * nG, r)] for r in reps) for h in H.elements())
    gact = tuple(tuple(coset_of[_pair_mul(H, G, g, r)] for r in reps) for g in G.elements())
    y, x = cls.mark
    beta = tuple(Y[r // nG][y] for r in reps)
    alpha = tuple(X[r % nG][x] for r in reps)
    return Span(cls.source, cls.target, hact, gact, beta, alpha)


def compose_spans(V: Span, U: Span) -> Span:
    """``V o U``: pullback over the middle object, then H-orbits.

    ``W = {(v, u) : gamma(v) = beta(u)}`` is divided by
    ``(v, u).h = (v.h, h^-1.u)``, i.e. ``((1,h^-1).v, (h^-1,1).u)``.
    """
    if V.source != U.target:
        raise CompositionError("middle objects differ")
    H = U.target.group
    gamma = V.alpha
    by_y: dict[int, list[int]] = {}
    for u, y in enumerate(U.beta):
        by_y.setdefault(y, []).append(u)
    W = [(v, u) for v in range(V.size) for u in by_y.get(gamma[v], ())]
    index = {p: i for i, p in enumerate(W)}
    uf = UnionFind(len(W))
    for h in generating_set(H):
        vrow, urow = V.gact[h], U.hact[h]
        for i, (v, u) in enumerate(W):
            uf.union(i, index[(vrow[v], urow[u])])
    labels = uf.labels()
    n = max(labels) + 1 if labels else 0
    rep = [None] * n
    for i, k in enumerate(labels):
        if rep[k] is None:
            rep[k] = W[i]
    K, G = V.target.group, U.source.group
    hact = tuple(tuple(labels[index[(V.hact[k][v], u)]] for v, u in rep) for k in K.elements())
    gact = tuple(tuple(labels[index[(v, U.gact[g][u])]] for v, u in rep) for g in G.elements())
    return Span(U.source, V.target, hact, gact, tuple(V.beta[v] for v, _ in rep), tuple(U.alpha[u] for _, u in rep))


@functools.lru_cache(maxsize=1 << 15)
def _compose_classes(c2: SpanClass, c1: SpanClass) -> tuple[tuple[SpanClass, int], ...]:
    return canonicalize(compose_spans(class_span(c2), class_span(c1)), check=False, modulus=None).terms


def compose(f2: Morphism, f1: Morphism) -> Morphism:
    """``f2 o f1`` extended bilinearly from span composition."""
    if f2.source != f1.target:
        raise CompositionError(f"cannot compose: {f1.target!r} != {f2.source!r}")
    if f2.modulus != f1.modulus:
        raise CompositionError("morphisms over different coefficient rings")
    out: dict[SpanClass, int] = {}
    for c2, k2 in f2.terms:
        for c1, k1 in f1.terms:
            for cls, k in _compose_classes(c2, c1):
                out[cls] = out.get(cls, 0) + k2 * k1 * k
    return Morphism.build(f1.source, f2.target, out, f1.modulus)


def identity_span(obj: CatObject) -> Span:
    """``<G x X, 1_, 1^>`` with ``(a, b)(g, x) = (a g b^-1, a x)``."""
    G, X = obj.group, obj.xset.act
    m, inv = G.mul, G.inv
    points = [(g, x) for g in G.elements() for x in obj.xset.points()]
    return span_from_action(
        obj,
        obj,
        points,
        lambda a, b, p: (m[m[a][p[0]]][inv[b]], X[a][p[1]]),
        lambda p: p[1],
        lambda p: X[inv[p[0]]][p[1]],
        check=False,
    )


@functools.lru_cache(maxsize=1024)
def _identity_terms(obj: CatObject):
    return canonicalize(identity_span(obj), check=False, modulus=None).terms


def identity(obj: CatObject, modulus: int | None = "config") -> Morphism:
    return Morphism.build(obj, obj, dict(_identity_terms(obj)), modulus)


def dual_class(cls: SpanClass) -> SpanClass:
    """Opposite biset: swap the factors of the stabilizer and the mark."""
    nG, nH = cls.source.group.order, cls.target.group.order
    stab = [(m % nG) * nH + m // nG for m in cls.stab]
    y, x = cls.mark
    return canonical_class(cls.target, cls.source, stab, (x, y))


def dual(f: Morphism) -> Morphism:
    terms: dict[SpanClass, int] = {}
    for cls, c in f.terms:
        d = dual_class(cls)
        terms[d] = terms.get(d, 0) + c
    return Morphism.build(f.target, f.source, terms, f.modulus)


def morphism_from_class(cls: SpanClass, coeff: int = 1, modulus: int | None = "config") -> Morphism:
    return Morphism.build(cls.source, cls.target, {cls: coeff}, modulus)


def fixed_marks(source: CatObject, target: CatObject, stab: Sequence[int]) -> list[tuple[int, int]]:
    """Points of ``Y x X`` fixed by every element of ``stab``."""
    nG = source.group.order
    X, Y = source.xset.act, target.xset.act
    hs = {m // nG for m in stab}
    gs = {m % nG for m in stab}
    ys = [y for y in target.xset.points() if all(Y[h][y] == y for h in hs)]
    xs = [x for x in source.xset.points() if all(X[g][x] == x for g in gs)]
    return [(y, x) for y in ys for x in xs]


def pair_subgroup(H: Group, G: Group, gens: Iterable[int]) -> tuple[int, ...]:
    """Subgroup of ``H x G`` generated by encoded elements, without a product table."""
    gens = [s for s in set(gens) if s != 0]
    members = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for s in gens:
            b = _pair_mul(H, G, a, s)
            if b not in members:
                members.add(b)
                stack.append(b)
    return tuple(sorted(members))
