"""Hom-module bases, double Burnside ring tables, and the Burnside functor."""

from __future__ import annotations

import functools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .config import check_order
from .category import decompose, one_point
from .groups import (
    Group,
    are_isomorphic,
    conjugacy_classes_of_subgroups,
    direct_product,
    is_subquotient,
    normalizer,
    quotient_group,
    subgroups,
    trivial_group,
)
from .spans import (
    CatObject,
    Morphism,
    SpanClass,
    canonical_class,
    canonicalize,
    class_span,
    compose,
    fixed_marks,
    morphism_from_class,
)


@dataclass(frozen=True)
class HomBasis:
    source: CatObject
    target: CatObject
    classes: tuple[SpanClass, ...]

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def index(self, cls: SpanClass) -> int:
        return self.classes.index(cls)

    def coordinates(self, f: Morphism) -> list[int]:
        """Coefficient vector of ``f`` in this basis."""
        pos = {c: i for i, c in enumerate(self.classes)}
        vec = [0] * len(self.classes)
        for cls, k in f.terms:
            vec[pos[cls]] = k
        return vec


def hom_basis(a: CatObject, b: CatObject) -> HomBasis:
    """Basis of ``Hom(a, b)``: one class per (subgroup class L of H x G, N(L)-orbit on fixed marks)."""
    check_order(a.group.order * b.group.order)  # before the cache, so a lowered cap still applies
    return _hom_basis(a, b)


@functools.lru_cache(maxsize=512)
def _hom_basis(a: CatObject, b: CatObject) -> HomBasis:
    P = direct_product(b.group, a.group)
    found = set()
    for L in conjugacy_classes_of_subgroups(P):
        for mark in fixed_marks(a, b, L.members):
            found.add(canonical_class(a, b, L.members, mark))
    return HomBasis(a, b, tuple(sorted(found)))


def hom_rank(a: CatObject, b: CatObject) -> int:
    """Rank of ``Hom(a, b)`` counted as normalizer orbits on fixed points."""
    P = direct_product(b.group, a.group)
    nG = a.group.order
    X, Y = a.xset.act, b.xset.act
    total = 0
    for L in conjugacy_classes_of_subgroups(P):
        marks = set(fixed_marks(a, b, L.members))
        N = normalizer(L).members
        while marks:
            y, x = marks.pop()
            for n in N:
                marks.discard((Y[n // nG][y], X[n % nG][x]))
            total += 1
    return total


def hom_classes_exhaustive(a: CatObject, b: CatObject) -> set[SpanClass]:
    """Classes from canonicalizing every transitive span ``(H x G)/L`` at every fixed mark."""
    P = direct_product(b.group, a.group)
    out = set()
    for L in subgroups(P):
        for mark in fixed_marks(a, b, L.members):
            # build the transitive span from the raw (non-canonical) data
            raw = SpanClass(a, b, L.members, mark)
            for cls, _ in canonicalize(class_span(raw), check=False, modulus=None).terms:
                out.add(cls)
    return out


@dataclass(frozen=True)
class StructureTable:
    """``basis[i] o basis[j] = sum_k coeffs[i][j][k] basis[k]``."""

    basis: HomBasis
    coeffs: tuple[tuple[tuple[int, ...], ...], ...]
    identity_index: int

    def product(self, u: list[int], v: list[int]) -> list[int]:
        n = len(self.basis)
        out = [0] * n
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                row = self.coeffs[i][j]
                for k in range(n):
                    out[k] += ui * vj * row[k]
        return out

    def is_associative(self) -> bool:
        n = len(self.basis)
        unit = [[int(i == k) for k in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                ij = list(self.coeffs[i][j])
                for k in range(n):
                    if self.product(ij, unit[k]) != self.product(unit[i], list(self.coeffs[j][k])):
                        return False
        return True

    def identity_is_unit(self) -> bool:
        n, e = len(self.basis), self.identity_index
        unit = [tuple(int(i == k) for k in range(n)) for i in range(n)]
        return all(self.coeffs[e][i] == unit[i] == self.coeffs[i][e] for i in range(n))


def double_burnside_table(G: Group, workers: int = 1) -> StructureTable:
    """Multiplication table of ``End({.}/G)`` in the sorted canonical basis."""
    pt = one_point(G)
    basis = hom_basis(pt, pt)
    n = len(basis)
    mors = [morphism_from_class(c, modulus=None) for c in basis]

    def entry(ij):
        i, j = ij
        return tuple(basis.coordinates(compose(mors[i], mors[j])))

    pairs = [(i, j) for i in range(n) for j in range(n)]
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            flat = list(ex.map(entry, pairs))
    else:
        flat = [entry(p) for p in pairs]
    coeffs = tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(n))
    # the regular (G, G)-biset: diagonal stabilizer
    diag = tuple(sorted(g * G.order + g for g in G.elements()))
    ident = basis.index(canonical_class(pt, pt, diag, (0, 0)))
    return StructureTable(basis, coeffs, ident)


def overline_rb_nonzero(a: CatObject, K: Group) -> bool:
    """Some orbit stabilizer of ``a`` has ``K`` as a subquotient."""
    return any(is_subquotient(K, S) for S in decompose(a).groups)


def subquotient_classes(G: Group, below: int | None = None) -> list[Group]:
    """Isomorphism-class representatives of subquotients of ``G`` (of order < ``below``)."""
    reps: list[Group] = []
    subs = subgroups(G)
    for S in subs:
        for N in subs:
            if not N.issubset(S) or not N.is_normal_in(S):
                continue
            if below is not None and S.order // N.order >= below:
                continue
            Q = quotient_group(S, N)
            if all(are_isomorphic(Q, R) is None for R in reps):
                reps.append(Q)
    return reps


def _lattice_is_everything(rows: list[list[int]], n: int) -> bool:
    """Whether integer ``rows`` span all of ``Z^n``."""
    rows = [list(r) for r in rows if any(r)]
    for col in range(n):
        pivot_rows = [r for r in rows if r[col]]
        if not pivot_rows:
            return False
        # Euclid on the column until a single nonzero entry remains
        while len(pivot_rows) > 1:
            pivot_rows.sort(key=lambda r: abs(r[col]))
            p = pivot_rows[0]
            for r in pivot_rows[1:]:
                q = r[col] // p[col]
                for k in range(n):
                    r[k] -= q * p[k]
            pivot_rows = [r for r in pivot_rows if r[col]]
        p = pivot_rows[0]
        if abs(p[col]) != 1:
            return False
        rows = [r for r in rows if r is not p and any(r)]
    return True


def overline_rb_definitional(a: CatObject, K: Group) -> bool:
    """Quotient of ``Hom({.}/K, a)`` by composites through smaller groups is nonzero.

    Intermediate groups are the subquotients of the orbit stabilizers of
    order below ``|K|`` (up to isomorphism); intended for tiny cases only.
    """
    ptK = one_point(K)
    basis = hom_basis(ptK, a)
    n = len(basis)
    if n == 0:
        return False
    mids: list[Group] = []
    for S in decompose(a).groups:
        for Q in subquotient_classes(S, below=K.order):
            if all(are_isomorphic(Q, R) is None for R in mids):
                mids.append(Q)
    rows = []
    for M in mids:
        ptM = one_point(M)
        us = [morphism_from_class(c, modulus=None) for c in hom_basis(ptK, ptM)]
        vs = [morphism_from_class(c, modulus=None) for c in hom_basis(ptM, a)]
        for v in vs:
            for u in us:
                rows.append(basis.coordinates(compose(v, u)))
    return not _lattice_is_everything(rows, n)


def burnside_functor_apply(f: Morphism) -> list[list[int]]:
    """Matrix of ``x -> f o x`` from ``Hom({.}/1, X/G)`` to ``Hom({.}/1, Y/H)``."""
    pt = one_point(trivial_group())
    src, tgt = hom_basis(pt, f.source), hom_basis(pt, f.target)
    cols = [tgt.coordinates(compose(f, morphism_from_class(c, modulus=f.modulus))) for c in src]
    return [[cols[j][i] for j in range(len(src))] for i in range(len(tgt))]


def matmul(A: list[list[int]], B: list[list[int]], inner: int | None = None) -> list[list[int]]:
    if inner is None:
        inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]
