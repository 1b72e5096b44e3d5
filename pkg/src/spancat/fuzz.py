"""Seeded random instances and the property suites behind ``spancat check``.

Every suite takes ``(seed, budget)`` and returns a :class:`SuiteReport`
listing each violated property verbatim.  Randomness comes from a private
``random.Random(seed)``, so reports are reproducible.
"""

from __future__ import annotations

import random
import itertools
from dataclasses import dataclass, field
from typing import Callable

from .burnside import burnside_functor_apply, hom_basis, hom_rank, matmul
from .catalog import SMALL, UP_TO_8, by_name
from .category import copair, decompose, direct_sum, objects_isomorphic, one_point, sum_object
from .config import PreconditionError, configured
from .functors import GSpan, _gmaps_to_conjugation, functor_A, fused_equal, fused_related, gspan_classes
from .groups import Group, conjugacy_classes_of_subgroups, subgroups, trivial_group
from .gsets import GSet, coset_gset, empty_gset, gset_disjoint_union, orbit_decomposition, relabel
from .mackey import TransitiveSpanData, mackey_compose
from .spans import (
    CatObject,
    Morphism,
    SpanClass,
    canonical_class,
    compose,
    dual,
    identity,
    morphism_from_class,
    pair_subgroup,
)


@dataclass
class FuzzConfig:
    """Size limits for random instances."""

    groups: tuple[str, ...] = UP_TO_8
    max_set: int = 4
    max_terms: int = 2
    max_coeff: int = 3


@dataclass
class SuiteReport:
    suite: str
    seed: int
    budget: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, cond: bool, what: str) -> None:
        self.checked += 1
        if not cond:
            self.failures.append(what)

    def summary(self) -> str:
        status = "pass" if self.ok else f"FAIL ({len(self.failures)} counterexamples)"
        return f"{self.suite}: seed={self.seed} budget={self.budget} checks={self.checked} {status}"


# ---------------------------------------------------------------------------
# random instances


def random_group(rng: random.Random, names=UP_TO_8) -> Group:
    return by_name(rng.choice(names))


def random_gset(rng: random.Random, G: Group, max_size: int = 4, allow_empty: bool = False) -> GSet:
    """Disjoint union of coset sets of random subgroups, randomly relabelled."""
    subs = [S for S in subgroups(G) if G.order // S.order <= max_size]
    target = rng.randint(0 if allow_empty else 1, max_size)
    X = empty_gset(G)
    while True:
        fits = [S for S in subs if X.size + G.order // S.order <= target]
        if not fits or (X.size and rng.random() < 0.3):
            break
        X = gset_disjoint_union(X, coset_gset(G, rng.choice(fits)))
    perm = list(X.points())
    rng.shuffle(perm)
    return relabel(X, perm)


def random_object(rng: random.Random, cfg: FuzzConfig = FuzzConfig(), G: Group | None = None) -> CatObject:
    G = G if G is not None else random_group(rng, cfg.groups)
    return CatObject.of(random_gset(rng, G, cfg.max_set))


def random_class(rng: random.Random, a: CatObject, b: CatObject) -> SpanClass | None:
    """A transitive span class ``a -> b``; None when the hom-module is zero."""
    if not a.size or not b.size:
        return None
    G, H = a.group, b.group
    y, x = rng.randrange(b.size), rng.randrange(a.size)
    Sy, Sx = b.xset.stabilizer(y).members, a.xset.stabilizer(x).members
    gens = [rng.choice(Sy) * G.order + rng.choice(Sx) for _ in range(rng.randint(0, 2))]
    return canonical_class(a, b, pair_subgroup(H, G, gens), (y, x))


def random_morphism(rng: random.Random, a: CatObject, b: CatObject, cfg: FuzzConfig = FuzzConfig()) -> Morphism:
    terms: dict[SpanClass, int] = {}
    for _ in range(rng.randint(1, cfg.max_terms)):
        cls = random_class(rng, a, b)
        if cls is None:
            break
        terms[cls] = terms.get(cls, 0) + rng.choice([k for k in range(-cfg.max_coeff, cfg.max_coeff + 1) if k])
    return Morphism.build(a, b, terms)


def random_gmap(rng: random.Random, T: GSet, X: GSet) -> tuple[int, ...] | None:
    """A random G-map ``T -> X``; None if there is none."""
    image = [0] * T.size
    for o in orbit_decomposition(T):
        fixed = [x for x in X.points() if all(X.act[s][x] == x for s in o.stabilizer.members)]
        if not fixed:
            return None
        x0 = rng.choice(fixed)
        for g in T.group.elements():
            image[T.act[g][o.base_point]] = X.act[g][x0]
    return tuple(image)


def random_gspan(rng: random.Random, G: Group, Y: GSet, X: GSet, max_size: int = 6) -> GSpan | None:
    T = random_gset(rng, G, max_size)
    beta, alpha = random_gmap(rng, T, Y), random_gmap(rng, T, X)
    if beta is None or alpha is None:
        return None
    return GSpan(G, Y, X, T, beta, alpha)


# ---------------------------------------------------------------------------
# suites


def _show(f: Morphism) -> str:
    return " + ".join(f"{c}x{cls.key}" for cls, c in f.terms) or "0"


def duality_checks(rng: random.Random, report: SuiteReport, cfg: FuzzConfig = FuzzConfig()) -> None:
    """Involution and anti-homomorphism on one random composable pair."""
    a, b, c = (random_object(rng, cfg) for _ in range(3))
    f, g = random_morphism(rng, a, b, cfg), random_morphism(rng, b, c, cfg)
    report.expect(dual(dual(f)) == f, f"dual(dual f) != f for f = {_show(f)}")
    report.expect(
        dual(compose(g, f)) == compose(dual(f), dual(g)),
        f"dual(g o f) != dual f o dual g for f = {_show(f)}, g = {_show(g)}",
    )


def laws_suite(seed: int = 0, budget: int = 200, cfg: FuzzConfig = FuzzConfig()) -> SuiteReport:
    """Associativity, bilinearity, identities on random triples, plus duality."""
    rng = random.Random(seed)
    rep = SuiteReport("laws", seed, budget)
    for _ in range(budget):
        a, b, c, d = (random_object(rng, cfg) for _ in range(4))
        f, f2 = random_morphism(rng, a, b, cfg), random_morphism(rng, a, b, cfg)
        g, g2 = random_morphism(rng, b, c, cfg), random_morphism(rng, b, c, cfg)
        h = random_morphism(rng, c, d, cfg)
        k = rng.randint(-3, 3)
        tag = f"f = {_show(f)}, g = {_show(g)}, h = {_show(h)}"
        rep.expect(compose(compose(h, g), f) == compose(h, compose(g, f)), f"associativity: {tag}")
        rep.expect(compose(g, f + f2) == compose(g, f) + compose(g, f2), f"right additivity: {tag}, f' = {_show(f2)}")
        rep.expect(compose(g + g2, f) == compose(g, f) + compose(g2, f), f"left additivity: {tag}, g' = {_show(g2)}")
        rep.expect(compose(g, f.scale(k)) == compose(g, f).scale(k), f"scalars ({k}): {tag}")
        rep.expect(compose(identity(b), f) == f, f"left identity: f = {_show(f)}")
        rep.expect(compose(f, identity(a)) == f, f"right identity: f = {_show(f)}")
        duality_checks(rng, rep, cfg)
    return rep


def duality_suite(seed: int = 0, budget: int = 100, cfg: FuzzConfig = FuzzConfig()) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("duality", seed, budget)
    for _ in range(budget):
        duality_checks(rng, rep, cfg)
    return rep


def _random_transitive(rng: random.Random, a: CatObject, b: CatObject) -> TransitiveSpanData | None:
    cls = random_class(rng, a, b)
    return None if cls is None else TransitiveSpanData.from_class(cls)


def mackey_suite(seed: int = 0, budget: int = 100, cfg: FuzzConfig = FuzzConfig(groups=SMALL, max_set=3)) -> SuiteReport:
    """Double-coset formula against pullback composition on random transitive pairs."""
    rng = random.Random(seed)
    rep = SuiteReport("mackey", seed, budget)
    for _ in range(budget):
        a, b, c = (random_object(rng, cfg) for _ in range(3))
        d, e = _random_transitive(rng, a, b), _random_transitive(rng, b, c)
        if d is None or e is None:
            continue
        direct = compose(morphism_from_class(e.to_class()), morphism_from_class(d.to_class()))
        Y = b.xset
        moves = [h for h in b.group.elements() if Y.act[h][e.alpha_mark] == d.beta_mark]
        tag = f"D = {d.to_class().key}, E = {e.to_class().key}"
        if not moves:
            rep.expect(direct.is_zero(), f"marks in different orbits but composite nonzero: {tag}")
            continue
        e = e.conjugate(0, moves[0])
        rep.expect(mackey_compose(e, d, check=True) == direct, f"double-coset sum differs: {tag}")
    return rep


def biproduct_suite(
    seed: int = 0, budget: int = 50, cfg: FuzzConfig = FuzzConfig(groups=SMALL, max_set=3), max_sum_order: int = 12
) -> SuiteReport:
    """Biproduct identities and copairing on random object pairs."""
    rng = random.Random(seed)
    rep = SuiteReport("biproduct", seed, budget)
    pairs = [(g, h) for g in cfg.groups for h in cfg.groups if by_name(g).order * by_name(h).order <= max_sum_order]
    for _ in range(budget):
        gn, hn = rng.choice(pairs)
        a, b = random_object(rng, cfg, by_name(gn)), random_object(rng, cfg, by_name(hn))
        bp = direct_sum(a, b)
        tag = f"a = {a.xset.act}, b = {b.xset.act}"
        ida, idb, ids = identity(a), identity(b), identity(bp.obj)
        rep.expect(compose(bp.proj_a, bp.inj_a) == ida, f"pi_a o iota_a != id: {tag}")
        rep.expect(compose(bp.proj_b, bp.inj_b) == idb, f"pi_b o iota_b != id: {tag}")
        rep.expect(compose(bp.proj_b, bp.inj_a).is_zero(), f"pi_b o iota_a != 0: {tag}")
        rep.expect(compose(bp.proj_a, bp.inj_b).is_zero(), f"pi_a o iota_b != 0: {tag}")
        rep.expect(
            compose(bp.inj_a, bp.proj_a) + compose(bp.inj_b, bp.proj_b) == ids,
            f"iota_a pi_a + iota_b pi_b != id: {tag}",
        )
        rep.expect(copair(bp.inj_a, bp.inj_b) == ids, f"copair(iota_a, iota_b) != id: {tag}")
        c = random_object(rng, cfg, by_name(rng.choice(cfg.groups)))
        f, t = random_morphism(rng, a, c, cfg), random_morphism(rng, b, c, cfg)
        ft = copair(f, t)
        rep.expect(compose(ft, bp.inj_a) == f, f"copair o iota_a != f: {tag}, f = {_show(f)}")
        rep.expect(compose(ft, bp.inj_b) == t, f"copair o iota_b != t: {tag}, t = {_show(t)}")
    return rep


def _rebuild(a: CatObject) -> CatObject:
    """``(+)_i {.}/Stab_i`` over the orbits of ``a``."""
    parts = [one_point(S) for S in decompose(a).groups]
    if not parts:
        return CatObject.of(empty_gset(trivial_group()))
    out = parts[0]
    for p in parts[1:]:
        out = sum_object(out, p)
    return out


def _shuffle_orbits(rng: random.Random, a: CatObject) -> CatObject:
    """The same G-set with its orbits listed in a random order and points relabelled."""
    orbits = [sorted(o.points) for o in orbit_decomposition(a.xset)]
    rng.shuffle(orbits)
    order = [p for o in orbits for p in o]
    perm = [0] * a.size
    for new, old in enumerate(order):
        perm[old] = new
    return CatObject.of(relabel(a.xset, perm))


def decompose_suite(seed: int = 0, budget: int = 100, cfg: FuzzConfig = FuzzConfig(max_set=3)) -> SuiteReport:
    """Rebuild, uniqueness under permutation, and cancellation for the sum."""
    rng = random.Random(seed)
    rep = SuiteReport("decompose", seed, budget)
    small = FuzzConfig(groups=SMALL, max_set=2)
    with configured(max_order=1 << 14):
        for _ in range(budget):
            a = random_object(rng, cfg)
            tag = f"a = {a.group.label}:{a.xset.act}"
            rep.expect(objects_isomorphic(a, _rebuild(a)), f"not isomorphic to its rebuild: {tag}")
            rep.expect(objects_isomorphic(a, _shuffle_orbits(rng, a)), f"orbit permutation changed the class: {tag}")
            x, y = random_object(rng, small), random_object(rng, small)
            z = _rebuild(y) if rng.random() < 0.5 else random_object(rng, small)
            lhs = objects_isomorphic(sum_object(x, y), sum_object(x, z))
            rep.expect(lhs == objects_isomorphic(y, z), f"cancellation: x = {x.xset.act}, y = {y.xset.act}, z = {z.xset.act}")
    return rep


def _twist(rng: random.Random, s: GSpan) -> GSpan:
    """A fused relative of ``s``: relabel ``T`` and twist ``alpha`` by a random G-map to ``G^c``."""
    ts = list(_gmaps_to_conjugation(s.T))
    t = rng.choice(ts)
    X = s.right.act
    perm = list(s.T.points())
    rng.shuffle(perm)
    T2 = relabel(s.T, perm)
    beta, alpha = [0] * s.T.size, [0] * s.T.size
    for u, v in enumerate(perm):
        beta[v] = s.beta[u]
        alpha[v] = X[t[u]][s.alpha[u]]
    return GSpan(s.group, s.left, s.right, T2, tuple(beta), tuple(alpha))


def fused_suite(seed: int = 0, budget: int = 50, max_group: int = 6, max_T: int = 6) -> SuiteReport:
    """``A(s1) == A(s2)`` exactly when the spans are fused-related, on random pairs."""
    rng = random.Random(seed)
    rep = SuiteReport("fused", seed, budget)
    names = [n for n in UP_TO_8 if by_name(n).order <= max_group]
    for _ in range(budget):
        G = by_name(rng.choice(names))
        X, Y = random_gset(rng, G, 3), random_gset(rng, G, 3)
        s1 = random_gspan(rng, G, Y, X, max_T)
        if s1 is None:
            continue
        s2 = _twist(rng, s1) if rng.random() < 0.5 else random_gspan(rng, G, Y, X, max_T)
        if s2 is None:
            continue
        tag = f"G = {G.label}, T1 = {s1.T.act}, T2 = {s2.T.act}, legs {s1.beta, s1.alpha} / {s2.beta, s2.alpha}"
        rep.expect(fused_equal(s1, s2) == fused_related(s1, s2), f"fused criterion: {tag}")
    return rep


def burnside_suite(seed: int = 0, budget: int = 50, cfg: FuzzConfig = FuzzConfig(groups=SMALL, max_set=3)) -> SuiteReport:
    """Functoriality of the Burnside functor and the hom-rank law for transitive sets."""
    rng = random.Random(seed)
    rep = SuiteReport("burnside", seed, budget)
    pt1 = one_point(trivial_group())
    for _ in range(budget):
        a, b, c = (random_object(rng, cfg) for _ in range(3))
        f, g = random_morphism(rng, a, b, cfg), random_morphism(rng, b, c, cfg)
        lhs = burnside_functor_apply(compose(g, f))
        rhs = matmul(burnside_functor_apply(g), burnside_functor_apply(f), inner=len(hom_basis(pt1, b)))
        rep.expect(lhs == rhs, f"B(g o f) != B(g) B(f): f = {_show(f)}, g = {_show(g)}")
        n = len(hom_basis(pt1, a))
        unit = [[int(i == j) for j in range(n)] for i in range(n)]
        rep.expect(burnside_functor_apply(identity(a)) == unit, f"B(id) != 1 on {a.xset.act}")
        G = random_group(rng, cfg.groups)
        S = rng.choice(subgroups(G))
        X = CatObject.of(coset_gset(G, S))
        want = len(conjugacy_classes_of_subgroups(S.as_group()))
        rep.expect(hom_rank(pt1, X) == want == len(hom_basis(pt1, X)), f"hom rank law: G = {G.label}, S = {S.members}")
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "laws": laws_suite,
    "mackey": mackey_suite,
    "biproduct": biproduct_suite,
    "decompose": decompose_suite,
    "fused": fused_suite,
    "burnside": burnside_suite,
}


def run_suite(name: str, seed: int = 0, budget: int | None = None) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise PreconditionError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(seed) if budget is None else fn(seed, budget)


# ---------------------------------------------------------------------------
# exhaustive fused check


def gsets_up_to(G: Group, max_size: int, min_size: int = 1) -> list[GSet]:
    """One G-set per isomorphism type with ``min_size <= |X| <= max_size``."""
    classes = conjugacy_classes_of_subgroups(G)
    out = []

    def rec(start, size, parts):
        if size >= min_size:
            X = empty_gset(G)
            for S in parts:
                X = gset_disjoint_union(X, coset_gset(G, S))
            out.append(X)
        for i in range(start, len(classes)):
            k = G.order // classes[i].order
            if size + k <= max_size:
                rec(i, size + k, parts + [classes[i]])

    rec(0, 0, [])
    return out


def all_gmaps(T: GSet, X: GSet) -> list[tuple[int, ...]]:
    """Every G-map ``T -> X``."""
    orbits = list(orbit_decomposition(T))
    choices = [[x for x in X.points() if all(X.act[s][x] == x for s in o.stabilizer.members)] for o in orbits]
    maps = []
    for pick in itertools.product(*choices):
        image = [0] * T.size
        for o, x0 in zip(orbits, pick):
            for g in T.group.elements():
                image[T.act[g][o.base_point]] = X.act[g][x0]
        maps.append(tuple(image))
    return maps


@dataclass
class FusedCensus:
    groups: int = 0
    spans: int = 0
    pairs: int = 0
    fused_pairs: int = 0
    failures: list[str] = field(default_factory=list)


def fused_exhaustive(
    max_group: int = 6, max_T: int = 6, max_leg: int = 6, transitive_legs: bool = True, names=UP_TO_8
) -> FusedCensus:
    """All spans ``Y <- T -> X`` with ``|X|, |Y| <= max_leg`` and ``|T| <= max_T``,
    one per equivalence class; every pair is compared."""
    census = FusedCensus()
    for name in names:
        G = by_name(name)
        if G.order > max_group:
            continue
        census.groups += 1
        legs = gsets_up_to(G, max_leg)
        if transitive_legs:
            legs = [X for X in legs if len(orbit_decomposition(X)) == 1]
        Ts = gsets_up_to(G, max_T)
        for X, Y in itertools.product(legs, repeat=2):
            reps: list[tuple[int, GSpan, Morphism]] = []
            for ti, T in enumerate(Ts):
                seen = set()
                for beta in all_gmaps(T, Y):
                    for alpha in all_gmaps(T, X):
                        s = GSpan(G, Y, X, T, beta, alpha)
                        key = tuple(gspan_classes(s))
                        if key not in seen:
                            seen.add(key)
                            reps.append((ti, s, functor_A(s)))
            census.spans += len(reps)
            for (t1, s1, m1), (t2, s2, m2) in itertools.combinations(reps, 2):
                census.pairs += 1
                related = t1 == t2 and fused_related(s1, s2)
                census.fused_pairs += related
                if related != (m1 == m2):
                    census.failures.append(
                        f"G = {name}, T = {s1.T.act}, legs {s1.beta, s1.alpha} vs {s2.beta, s2.alpha}: "
                        f"related={related}, equal images={m1 == m2}"
                    )
    return census
