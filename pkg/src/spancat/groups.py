"""Finite groups as explicit Cayley tables.

Elements are the integers ``0..order-1`` and ``0`` is always the identity.
Products follow function composition: ``mul[a][b]`` is "apply ``b`` first,
then ``a``", which makes permutation actions left actions.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .config import PreconditionError, check_order

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class Group:
    mul: Table
    inv: tuple[int, ...]
    label: str = ""
    perms: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(self.mul))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Group):
            return NotImplemented
        return self._hash == other._hash and self.mul == other.mul

    def __hash__(self):
        return self._hash

    def __repr__(self):
        name = self.label or "?"
        return f"Group({name}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.mul)

    @property
    def id_elem(self) -> int:
        return 0

    def elements(self) -> range:
        return range(len(self.mul))

    @functools.cached_property
    def conj(self) -> Table:
        """``conj[c][x] = c x c^-1``."""
        m, inv = self.mul, self.inv
        return tuple(tuple(m[m[c][x]][inv[c]] for x in self.elements()) for c in self.elements())

    def element_order(self, a: int) -> int:
        return self._element_orders[a]

    @functools.cached_property
    def _element_orders(self) -> tuple[int, ...]:
        return tuple(self._order_of(a) for a in self.elements())

    def _order_of(self, a: int) -> int:
        n, x = 1, a
        while x != 0:
            x = self.mul[x][a]
            n += 1
        return n

    @functools.cached_property
    def order_histogram(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(Counter(self.element_order(a) for a in self.elements()).items()))

    def is_abelian(self) -> bool:
        m = self.mul
        return all(m[a][b] == m[b][a] for a in self.elements() for b in range(a))

    def power(self, a: int, k: int) -> int:
        x = 0
        for _ in range(k % self.element_order(a)):
            x = self.mul[x][a]
        return x

    def validate(self) -> None:
        """Exhaustive group-axiom check; raises ValueError on failure."""
        n, m, inv = self.order, self.mul, self.inv
        if any(len(row) != n for row in m) or len(inv) != n:
            raise ValueError("table shape mismatch")
        for a in range(n):
            if m[0][a] != a or m[a][0] != a:
                raise ValueError("0 is not a two-sided identity")
            if m[a][inv[a]] != 0 or m[inv[a]][a] != 0:
                raise ValueError(f"bad inverse for {a}")
        for a, b, c in itertools.product(range(n), repeat=3):
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise ValueError(f"not associative at {(a, b, c)}")


def group_from_table(mul: Sequence[Sequence[int]], label: str = "", perms=None) -> Group:
    mul = tuple(tuple(row) for row in mul)
    n = len(mul)
    check_order(n)
    inv = [0] * n
    for a in range(n):
        inv[a] = mul[a].index(0)
    return Group(mul, tuple(inv), label, perms)


def _compose_perm(p, q):
    # apply q, then p
    return tuple(p[i] for i in q)


def group_from_generators(degree: int, generators: Iterable[Sequence[int]], label: str = "") -> Group:
    """Closure of permutations of ``0..degree-1`` as a Cayley table.

    Elements are numbered breadth-first from the identity; each new layer is
    sorted lexicographically as permutations.
    """
    gens = [tuple(g) for g in generators]
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise PreconditionError(f"not a permutation of 0..{degree - 1}: {g}")
    ident = tuple(range(degree))
    index = {ident: 0}
    elems = [ident]
    layer = [ident]
    while layer:
        fresh = set()
        for p in layer:
            for s in gens:
                q = _compose_perm(p, s)
                if q not in index and q not in fresh:
                    fresh.add(q)
        layer = sorted(fresh)
        for q in layer:
            index[q] = len(elems)
            elems.append(q)
        check_order(len(elems))
    mul = [[index[_compose_perm(p, q)] for q in elems] for p in elems]
    return group_from_table(mul, label, perms=tuple(elems))


def direct_product(G: Group, H: Group, label: str | None = None) -> Group:
    """``G x H`` with element ``(g, h)`` encoded as ``g*|H| + h``."""
    nG, nH = G.order, H.order
    check_order(nG * nH)
    mul = []
    for a in range(nG * nH):
        ga, ha = divmod(a, nH)
        rowG, rowH = G.mul[ga], H.mul[ha]
        mul.append(tuple(rowG[gb] * nH + rowH[hb] for gb in range(nG) for hb in range(nH)))
    inv = tuple(G.inv[a // nH] * nH + H.inv[a % nH] for a in range(nG * nH))
    if label is None:
        label = f"{G.label or '?'}x{H.label or '?'}"
    return Group(tuple(mul), inv, label)


def trivial_group() -> Group:
    return Group(((0,),), (0,), "C1")


# ---------------------------------------------------------------------------
# subgroups


def _closure(G: Group, gens: Iterable[int]) -> frozenset[int]:
    gens = [s for s in set(gens) if s != 0]
    members = {0}
    queue = [0]
    m = G.mul
    while queue:
        a = queue.pop()
        for s in gens:
            b = m[a][s]
            if b not in members:
                members.add(b)
                queue.append(b)
    return frozenset(members)


@dataclass(frozen=True)
class Subgroup:
    parent: Group
    members: tuple[int, ...]

    @classmethod
    def of(cls, parent: Group, members: Iterable[int]) -> "Subgroup":
        return cls(parent, tuple(sorted(set(members))))

    @classmethod
    def generated(cls, parent: Group, gens: Iterable[int]) -> "Subgroup":
        return cls.of(parent, _closure(parent, gens))

    @classmethod
    def whole(cls, G: Group) -> "Subgroup":
        return cls(G, tuple(G.elements()))

    @classmethod
    def trivial(cls, G: Group) -> "Subgroup":
        return cls(G, (0,))

    @property
    def order(self) -> int:
        return len(self.members)

    @functools.cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, a: int) -> bool:
        return a in self.member_set

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def issubset(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    def conjugate(self, c: int) -> "Subgroup":
        """``c S c^-1``."""
        row = self.parent.conj[c]
        return Subgroup(self.parent, tuple(sorted(row[s] for s in self.members)))

    def is_normal_in(self, other: "Subgroup") -> bool:
        conj = self.parent.conj
        ms = self.member_set
        return all(conj[c][s] in ms for c in other.members for s in self.members)

    def validate(self) -> None:
        m, inv = self.parent.mul, self.parent.inv
        ms = self.member_set
        if 0 not in ms:
            raise ValueError("subgroup misses the identity")
        for a in self.members:
            if inv[a] not in ms or any(m[a][b] not in ms for b in self.members):
                raise ValueError("subgroup not closed")
        if self.parent.order % self.order:
            raise ValueError("Lagrange violated")

    def as_group(self, label: str = "") -> Group:
        """The subgroup as an abstract group, members relabelled in sorted order."""
        index = {a: i for i, a in enumerate(self.members)}
        m = self.parent.mul
        mul = tuple(tuple(index[m[a][b]] for b in self.members) for a in self.members)
        inv = tuple(index[self.parent.inv[a]] for a in self.members)
        return Group(mul, inv, label)


def _sort_key(S: Subgroup):
    return (S.order, S.members)


@functools.lru_cache(maxsize=256)
def subgroups(G: Group) -> tuple[Subgroup, ...]:
    """All subgroups, sorted by (order, members)."""
    cyclic_gens = {}
    for a in G.elements():
        c = _closure(G, [a])
        cyclic_gens.setdefault(c, a)
    found: dict[frozenset[int], tuple[int, ...]] = {frozenset([0]): ()}
    for c, a in cyclic_gens.items():
        found.setdefault(c, (a,))
    layer = list(found.items())
    while layer:
        fresh = []
        for members, gens in layer:
            for c, a in cyclic_gens.items():
                if a in members:
                    continue
                joined = _closure(G, gens + (a,))
                if joined not in found:
                    found[joined] = gens + (a,)
                    fresh.append((joined, gens + (a,)))
        layer = fresh
    subs = [Subgroup(G, tuple(sorted(m))) for m in found]
    return tuple(sorted(subs, key=_sort_key))


def conjugates(S: Subgroup) -> set[tuple[int, ...]]:
    return {S.conjugate(c).members for c in S.parent.elements()}


@functools.lru_cache(maxsize=256)
def conjugacy_classes_of_subgroups(G: Group) -> tuple[Subgroup, ...]:
    """One representative per conjugacy class: the lexicographically least member set."""
    seen: set[tuple[int, ...]] = set()
    reps = []
    for S in subgroups(G):
        if S.members in seen:
            continue
        cls = conjugates(S)
        seen |= cls
        reps.append(Subgroup(G, min(cls)))
    return tuple(sorted(reps, key=_sort_key))


def conjugacy_class_index(S: Subgroup) -> int:
    """Position of the class of ``S`` in ``conjugacy_classes_of_subgroups``."""
    rep = min(conjugates(S))
    for i, R in enumerate(conjugacy_classes_of_subgroups(S.parent)):
        if R.members == rep:
            return i
    raise AssertionError("unreachable")


def normalizer(S: Subgroup) -> Subgroup:
    G = S.parent
    return Subgroup(G, tuple(c for c in G.elements() if S.conjugate(c).members == S.members))


def double_cosets(A: Subgroup, W: Subgroup, B: Subgroup) -> list[int]:
    """Least element of each double coset ``A w B`` inside ``W``."""
    if not (A.parent == W.parent == B.parent):
        raise PreconditionError("subgroups of different groups")
    if not (A.issubset(W) and B.issubset(W)):
        raise PreconditionError("double cosets need A <= W and B <= W")
    m = W.parent.mul
    covered: set[int] = set()
    reps = []
    for w in W.members:
        if w in covered:
            continue
        reps.append(w)
        covered.update(m[m[a][w]][b] for a in A.members for b in B.members)
    return reps


def double_coset(A: Subgroup, w: int, B: Subgroup) -> frozenset[int]:
    m = A.parent.mul
    return frozenset(m[m[a][w]][b] for a in A.members for b in B.members)


def quotient_group(S: Subgroup, N: Subgroup, label: str = "") -> Group:
    """``S/N``; cosets are numbered by their least member."""
    if not N.issubset(S) or not N.is_normal_in(S):
        raise PreconditionError("N must be a normal subgroup of S")
    m = S.parent.mul
    coset_of = {}
    reps = []
    for s in S.members:
        if s in coset_of:
            continue
        k = len(reps)
        reps.append(s)
        for n in N.members:
            coset_of[m[s][n]] = k
    mul = tuple(tuple(coset_of[m[a][b]] for b in reps) for a in reps)
    return group_from_table(mul, label)


# ---------------------------------------------------------------------------
# homomorphisms and isomorphism


@dataclass(frozen=True)
class GroupMap:
    source: Group
    target: Group
    image: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.image[a]

    def is_homomorphism(self) -> bool:
        ms, mt, f = self.source.mul, self.target.mul, self.image
        if f[0] != 0:
            return False
        n = self.source.order
        return all(f[ms[a][b]] == mt[f[a]][f[b]] for a in range(n) for b in range(n))

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.image)) == len(self.image)

    def inverse(self) -> "GroupMap":
        inv = [0] * len(self.image)
        for a, b in enumerate(self.image):
            inv[b] = a
        return GroupMap(self.target, self.source, tuple(inv))

    def then(self, other: "GroupMap") -> "GroupMap":
        """``other o self``."""
        return GroupMap(self.source, other.target, tuple(other.image[b] for b in self.image))

    @classmethod
    def identity(cls, G: Group) -> "GroupMap":
        return cls(G, G, tuple(G.elements()))


@functools.lru_cache(maxsize=1024)
def generating_set(G: Group) -> tuple[int, ...]:
    """Greedy generating set: repeatedly add an element of largest order outside the span."""
    gens: list[int] = []
    span = frozenset([0])
    by_order = sorted(G.elements(), key=lambda a: (-G.element_order(a), a))
    while len(span) < G.order:
        a = next(x for x in by_order if x not in span)
        gens.append(a)
        span = _closure(G, gens)
    return tuple(gens)


def _extend(G: Group, H: Group, pairs: list[tuple[int, int]]) -> dict[int, int] | None:
    phi = {0: 0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        fa = phi[a]
        for s, t in pairs:
            b, c = G.mul[a][s], H.mul[fa][t]
            got = phi.get(b)
            if got is None:
                phi[b] = c
                queue.append(b)
            elif got != c:
                return None
    if len(set(phi.values())) != len(phi):
        return None
    return phi


def are_isomorphic(G: Group, H: Group) -> GroupMap | None:
    if G.order != H.order or G.order_histogram != H.order_histogram:
        return None
    if G == H:
        return GroupMap.identity(G)
    gens = generating_set(G)
    candidates = [[b for b in H.elements() if H.element_order(b) == G.element_order(a)] for a in gens]

    def search(i, chosen):
        if i == len(gens):
            phi = _extend(G, H, list(zip(gens, chosen)))
            return phi if phi is not None and len(phi) == G.order else None
        for b in candidates[i]:
            nxt = chosen + [b]
            if _extend(G, H, list(zip(gens[: i + 1], nxt))) is None:
                continue
            phi = search(i + 1, nxt)
            if phi is not None:
                return phi
        return None

    phi = search(0, [])
    if phi is None:
        return None
    return GroupMap(G, H, tuple(phi[a] for a in G.elements()))


def is_subquotient(K: Group, G: Group) -> bool:
    """True iff ``S/N ~= K`` for some ``N <| S <= G``."""
    k = K.order
    if k == 1:
        return True
    if G.order % k:
        return False
    subs = subgroups(G)
    for S in subs:
        if S.order % k:
            continue
        n = S.order // k
        for N in subs:
            if N.order != n or not N.issubset(S) or not N.is_normal_in(S):
                continue
            if are_isomorphic(quotient_group(S, N), K) is not None:
                return True
    return False
