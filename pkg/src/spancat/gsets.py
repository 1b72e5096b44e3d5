"""Finite G-sets stored as one point permutation per group element."""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from typing import Literal, Sequence

from .config import PreconditionError
from .groups import Group, Subgroup, Table, conjugates, direct_product


@dataclass(frozen=True, eq=False)
class GSet:
    group: Group
    act: Table  # act[g][x] = g.x

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.group, self.act)))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GSet):
            return NotImplemented
        return self._hash == other._hash and self.group == other.group and self.act == other.act

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"GSet({self.group!r}, size={self.size})"

    @property
    def size(self) -> int:
        return len(self.act[0]) if self.act else 0

    def points(self) -> range:
        return range(self.size)

    def validate(self) -> None:
        G, act, n = self.group, self.act, self.size
        if len(act) != G.order or any(len(row) != n for row in act):
            raise ValueError("action table has the wrong shape")
        if act[0] != tuple(range(n)):
            raise ValueError("identity does not act trivially")
        for row in act:
            if sorted(row) != list(range(n)):
                raise ValueError("group element does not act bijectively")
        for a in G.elements():
            for b in G.elements():
                ab, ra, rb = act[G.mul[a][b]], act[a], act[b]
                if any(ab[x] != ra[rb[x]] for x in range(n)):
                    raise ValueError(f"action not compatible with product {a}*{b}")

    def orbit(self, x: int) -> list[int]:
        seen = {x}
        out = [x]
        for y in out:
            for row in self.act:
                z = row[y]
                if z not in seen:
                    seen.add(z)
                    out.append(z)
        return sorted(out)

    def stabilizer(self, x: int) -> Subgroup:
        return Subgroup(self.group, tuple(g for g in self.group.elements() if self.act[g][x] == x))

    def is_transitive(self) -> bool:
        return self.size > 0 and len(self.orbit(0)) == self.size


@dataclass(frozen=True)
class GMap:
    source: GSet
    target: GSet
    image: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.image[x]

    def is_equivariant(self) -> bool:
        sa, ta, f = self.source.act, self.target.act, self.image
        return all(f[sa[g][x]] == ta[g][f[x]] for g in range(len(sa)) for x in self.source.points())

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and len(set(self.image)) == len(self.image)


@dataclass(frozen=True)
class Orbit:
    points: tuple[int, ...]
    base_point: int
    stabilizer: Subgroup


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple[Orbit, ...]

    def __len__(self):
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)

    def __getitem__(self, i):
        return self.orbits[i]


# ---------------------------------------------------------------------------
# constructors


def gset_from_table(G: Group, act: Sequence[Sequence[int]], validate: bool = True) -> GSet:
    X = GSet(G, tuple(tuple(r) for r in act))
    if validate:
        X.validate()
    return X


def trivial_gset(G: Group, n: int = 1) -> GSet:
    row = tuple(range(n))
    return GSet(G, tuple(row for _ in G.elements()))


def point(G: Group) -> GSet:
    return trivial_gset(G, 1)


def empty_gset(G: Group) -> GSet:
    return trivial_gset(G, 0)


def natural_gset(G: Group) -> GSet:
    """The permutation action of a group built from permutation generators."""
    if G.perms is None:
        raise PreconditionError("group has no permutation representation")
    return GSet(G, G.perms)


def gset_from_generator_images(G: Group, size: int, gens: Sequence[int], images: Sequence[Sequence[int]]) -> GSet:
    """Extend ``gens[i] -> images[i]`` (permutations of ``0..size-1``) to an action."""
    if len(gens) != len(images):
        raise PreconditionError("one image per generator required")
    for p in images:
        if sorted(p) != list(range(size)):
            raise PreconditionError(f"not a permutation of 0..{size - 1}: {p}")
    act: dict[int, tuple[int, ...]] = {0: tuple(range(size))}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for s, p in zip(gens, images):
            b = G.mul[a][s]
            row = tuple(act[a][p[x]] for x in range(size))
            if b not in act:
                act[b] = row
                queue.append(b)
            elif act[b] != row:
                raise PreconditionError("generator images do not define an action")
    if len(act) != G.order:
        raise PreconditionError("the listed elements do not generate the group")
    X = GSet(G, tuple(act[g] for g in G.elements()))
    X.validate()
    return X


def left_cosets(G: Group, H: Subgroup) -> tuple[list[int], dict[int, int]]:
    """Coset representatives (least members, ascending) and element -> coset index."""
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for g in G.elements():
        if g in coset_of:
            continue
        k = len(reps)
        reps.append(g)
        for h in H.members:
            coset_of[G.mul[g][h]] = k
    return reps, coset_of


def coset_gset(G: Group, H: Subgroup) -> GSet:
    """Left multiplication on ``G/H``; point 0 is the coset ``H``."""
    if H.parent != G:
        raise PreconditionError("H is not a subgroup of G")
    reps, coset_of = left_cosets(G, H)
    act = tuple(tuple(coset_of[G.mul[g][r]] for r in reps) for g in G.elements())
    return GSet(G, act)


def regular_gset(G: Group) -> GSet:
    return coset_gset(G, Subgroup.trivial(G))


def conjugation_gset(G: Group) -> GSet:
    """``G^c``: the group acting on itself by conjugation."""
    return GSet(G, G.conj)


def relabel(X: GSet, perm: Sequence[int]) -> GSet:
    """Same action with point ``x`` renamed ``perm[x]``."""
    inv = [0] * len(perm)
    for x, y in enumerate(perm):
        inv[y] = x
    act = tuple(tuple(perm[row[inv[y]]] for y in range(len(perm))) for row in X.act)
    return GSet(X.group, act)


def gset_product(X: GSet, Y: GSet) -> GSet:
    """Diagonal action on ``X x Y``; ``(x, y)`` is encoded ``x*|Y| + y``."""
    if X.group != Y.group:
        raise PreconditionError("G-sets over different groups")
    n = Y.size
    act = tuple(tuple(rx[x] * n + ry[y] for x in X.points() for y in Y.points()) for rx, ry in zip(X.act, Y.act))
    return GSet(X.group, act)


def gset_disjoint_union(X: GSet, Y: GSet) -> GSet:
    if X.group != Y.group:
        raise PreconditionError("G-sets over different groups")
    off = X.size
    act = tuple(rx + tuple(off + y for y in ry) for rx, ry in zip(X.act, Y.act))
    return GSet(X.group, act)


def external_product(X: GSet, Y: GSet, group: Group | None = None) -> GSet:
    """``X x Y`` over ``G x H`` acting componentwise; ``(x, y)`` encoded ``x*|Y| + y``."""
    G, H = X.group, Y.group
    P = group if group is not None else direct_product(G, H)
    n = Y.size
    act = []
    for gh in P.elements():
        g, h = divmod(gh, H.order)
        rx, ry = X.act[g], Y.act[h]
        act.append(tuple(rx[x] * n + ry[y] for x in X.points() for y in Y.points()))
    return GSet(P, tuple(act))


def inflate_along_projection(X: GSet, P: Group, which: Literal["left", "right"] = "left") -> GSet:
    """View ``X`` as a set over ``P x G`` (``which='left'``) or ``G x P`` (``'right'``)."""
    G = X.group
    if which == "left":
        prod = direct_product(P, G)
        act = tuple(X.act[e % G.order] for e in prod.elements())
    elif which == "right":
        prod = direct_product(G, P)
        act = tuple(X.act[e // P.order] for e in prod.elements())
    else:
        raise ValueError(which)
    return GSet(prod, act)


# ---------------------------------------------------------------------------
# structure


@functools.lru_cache(maxsize=1024)
def orbit_decomposition(X: GSet) -> OrbitDecomposition:
    seen: set[int] = set()
    orbits = []
    for x in X.points():
        if x in seen:
            continue
        pts = X.orbit(x)
        seen.update(pts)
        orbits.append(Orbit(tuple(pts), x, X.stabilizer(x)))
    return OrbitDecomposition(tuple(orbits))


def _transversal(X: GSet, x: int) -> dict[int, int]:
    """For each point ``y`` in the orbit of ``x`` some ``g`` with ``g.x = y``."""
    G = X.group
    out = {x: 0}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        g = out[y]
        for s in G.elements():
            z = X.act[s][y]
            if z not in out:
                out[z] = G.mul[s][g]
                queue.append(z)
    return out


def gsets_isomorphic(X: GSet, Y: GSet) -> GMap | None:
    """An equivariant bijection, matched orbit by orbit on conjugate stabilizers."""
    if X.group != Y.group:
        raise PreconditionError("G-sets over different groups")
    if X.size != Y.size:
        return None
    G = X.group
    dx, dy = orbit_decomposition(X), orbit_decomposition(Y)
    if len(dx) != len(dy):
        return None
    free = list(dy.orbits)
    image = [0] * X.size
    for ox in dx:
        S = ox.stabilizer
        S_conjs = None
        for j, oy in enumerate(free):
            if len(oy.points) != len(ox.points):
                continue
            if S_conjs is None:
                S_conjs = {c: S.conjugate(c).members for c in G.elements()}
            # y' = c^-1 . y has stabilizer c^-1 Stab(y) c; want it equal to S
            c = next((c for c, m in S_conjs.items() if m == oy.stabilizer.members), None)
            if c is None:
                continue
            y0 = Y.act[G.inv[c]][oy.base_point]
            for x, g in _transversal(X, ox.base_point).items():
                image[x] = Y.act[g][y0]
            del free[j]
            break
        else:
            return None
    return GMap(X, Y, tuple(image))


def stabilizer_class_profile(X: GSet) -> list[tuple[int, ...]]:
    """Sorted list of stabilizer conjugacy-class keys, one per orbit."""
    return sorted(min(conjugates(o.stabilizer)) for o in orbit_decomposition(X))
