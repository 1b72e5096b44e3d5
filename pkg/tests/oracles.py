"""Brute-force reference computations that share no code with the library's algorithms."""

from __future__ import annotations

import itertools


def _closure(mul, gens):
    s = {0}
    while True:
        more = s | {mul[a][b] for a in s for b in gens}
        if more == s:
            return frozenset(s)
        s = more


def all_subgroups_bruteforce(mul):
    """Every subgroup: closed subsets for small orders, pairwise joins of cyclic subgroups above 16."""
    n = len(mul)
    if n > 16:
        subs = {_closure(mul, [g]) for g in range(n)}
        frontier = set(subs)
        while frontier:
            new = {_closure(mul, A | B) for A in frontier for B in subs} - subs
            subs |= new
            frontier = new
        return list(subs)
    out = []
    for mask in range(1 << (n - 1)):
        s = {0} | {i + 1 for i in range(n - 1) if mask >> i & 1}
        if all(mul[a][b] in s for a in s for b in s):
            out.append(frozenset(s))
    return out


def inverse_table(mul):
    return [row.index(0) for row in mul]


def subgroup_classes_bruteforce(mul):
    """Number of conjugacy classes of subgroups."""
    inv = inverse_table(mul)
    n = len(mul)
    seen, count = set(), 0
    for S in all_subgroups_bruteforce(mul):
        if S in seen:
            continue
        count += 1
        for c in range(n):
            seen.add(frozenset(mul[mul[c][s]][inv[c]] for s in S))
    return count


def product_table(A, B):
    """Cayley table of A x B with (a, b) encoded a*|B| + b, built from plain lists."""
    nA, nB = len(A), len(B)
    return [[A[x // nB][y // nB] * nB + B[x % nB][y % nB] for y in range(nA * nB)] for x in range(nA * nB)]


def transitive_span_count(Gmul, Hmul, X, Y):
    """Orbits of H x G on pairs (L, (y, x)) with L a subgroup fixing (y, x)."""
    P = product_table(Hmul, Gmul)
    inv = inverse_table(P)
    nG = len(Gmul)
    subs = all_subgroups_bruteforce(P)
    items = set()
    for L in subs:
        for y in range(len(Y[0])):
            for x in range(len(X[0])):
                if all(Y[m // nG][y] == y and X[m % nG][x] == x for m in L):
                    items.add((L, (y, x)))
    count = 0
    while items:
        L, (y, x) = items.pop()
        count += 1
        for c in range(len(P)):
            items.discard((frozenset(P[P[c][s]][inv[c]] for s in L), (Y[c // nG][y], X[c % nG][x])))
    return count


def naive_composite_marks(V, U, subgroup_list):
    """Marks of V o U computed from frozenset orbits of the pullback.

    Returns ``{(L, y, x): count}`` with ``L`` from ``subgroup_list`` (encoded in
    ``K x G``) and ``(y, x)`` a point of ``Z x X``.
    """
    H = U.target.group
    W = [(v, u) for v in range(V.size) for u in range(U.size) if V.alpha[v] == U.beta[u]]
    orbits = set()
    for v, u in W:
        orbits.add(frozenset((V.gact[h][v], U.hact[h][u]) for h in H.elements()))
    nG = U.source.group.order
    marks = {}
    for L in subgroup_list:
        for o in orbits:
            v, u = next(iter(o))
            fixed = all(
                frozenset((V.hact[m // nG][a], U.gact[m % nG][b]) for a, b in o) == o for m in L
            )
            if fixed:
                key = (L, V.beta[v], U.alpha[u])
                marks[key] = marks.get(key, 0) + 1
    return marks


def span_marks(span, subgroup_list):
    nG = span.source.group.order
    marks = {}
    for L in subgroup_list:
        for p in range(span.size):
            if all(span.hact[m // nG][span.gact[m % nG][p]] == p for m in L):
                key = (L, span.beta[p], span.alpha[p])
                marks[key] = marks.get(key, 0) + 1
    return marks


def morphism_marks(f, subgroup_list, class_span):
    total = {}
    for cls, k in f.terms:
        for key, m in span_marks(class_span(cls), subgroup_list).items():
            total[key] = total.get(key, 0) + k * m
    return {key: m for key, m in total.items() if m}


def permutations_of(n):
    return list(itertools.permutations(range(n)))
