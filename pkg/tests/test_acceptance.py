"""Acceptance gate: one test per criterion, exact equality throughout.

Run directly (``python3 tests/test_acceptance.py``) or through pytest; either
way a PASS/FAIL line is printed per criterion.
"""

import itertools
import sys

import pytest

from acceptance_log import criterion
from oracles import product_table, subgroup_classes_bruteforce
from spancat.burnside import (
    double_burnside_table,
    hom_basis,
    hom_rank,
    overline_rb_definitional,
    overline_rb_nonzero,
)
from spancat.catalog import UP_TO_8, by_name, cyclic, dihedral, klein, symmetric
from spancat.category import coset_object, iso_coset_collapse, objects_isomorphic, one_point
from spancat.config import CONFIG
from spancat.functors import (
    biset_product,
    functor_A,
    functor_F,
    fused_witness,
    gspans_equivalent,
    transitive_bisets,
)
from spancat.fuzz import (
    biproduct_suite,
    burnside_suite,
    decompose_suite,
    duality_suite,
    fused_exhaustive,
    laws_suite,
)
from spancat.groups import Subgroup, conjugacy_classes_of_subgroups, subgroups, trivial_group
from spancat.mackey import TransitiveSpanData, mackey_compose
from spancat.spans import compose, identity, morphism_from_class

SEED = 20240601


def test_criterion_01_category_laws():
    with criterion(1, "category laws on 200 random triples (|G| <= 8, |X| <= 4)"):
        rep = laws_suite(seed=SEED, budget=200)
        assert rep.ok, rep.failures[:5]
        assert rep.checked >= 200 * 6


def test_criterion_02_mackey_oracle():
    with criterion(2, "double-coset formula equals composition on all one-point transitive pairs"):
        names = ("C1", "C2", "C3", "C2xC2", "C4", "S3")
        pts = {n: one_point(by_name(n)) for n in names}
        pairs = 0
        for k, h, g in itertools.product(names, repeat=3):
            for d in hom_basis(pts[g], pts[h]):
                md = morphism_from_class(d)
                for e in hom_basis(pts[h], pts[k]):
                    direct = compose(morphism_from_class(e), md)
                    via = mackey_compose(TransitiveSpanData.from_class(e), TransitiveSpanData.from_class(d))
                    assert via == direct, (k, h, g, e.key, d.key)
                    pairs += 1
        assert pairs > 40_000


def test_criterion_03_coset_collapse():
    with criterion(3, "(G/H)/G and pt/H are inverse-isomorphic for all H in S3, C4, C2xC2, D4"):
        groups = [symmetric(3), cyclic(4), by_name("C2xC2")]
        if dihedral(4).order <= CONFIG.max_order:
            groups.append(dihedral(4))
        for G in groups:
            for H in subgroups(G):
                fwd, bwd = iso_coset_collapse(G, H)
                assert compose(bwd, fwd) == identity(coset_object(G, H)), (G.label, H.members)
                assert compose(fwd, bwd) == identity(one_point(H.as_group())), (G.label, H.members)


def test_criterion_04_biproduct():
    with criterion(4, "biproduct and copairing identities on 50 random pairs"):
        rep = biproduct_suite(seed=SEED, budget=50)
        assert rep.ok, rep.failures[:5]


def test_criterion_05_decomposition():
    with criterion(5, "decomposition, uniqueness and cancellation on 100 random objects; pt/C4 vs pt/V4"):
        rep = decompose_suite(seed=SEED, budget=100)
        assert rep.ok, rep.failures[:5]
        assert not objects_isomorphic(one_point(cyclic(4)), one_point(by_name("C2xC2")))


def test_criterion_06_double_burnside_ring():
    with criterion(6, "End(pt/C2) rank 5, End(pt/C3) rank 4, associative, regular biset is the unit"):
        problems = []
        expected = {"C2": 5, "C3": 4}
        for name, want in expected.items():
            G = by_name(name)
            t = double_burnside_table(G)
            oracle = subgroup_classes_bruteforce(product_table(G.mul, G.mul))
            if len(t.basis) != oracle:
                problems.append(f"{name}: basis size {len(t.basis)} but {oracle} subgroup classes of {name}x{name}")
            if len(t.basis) != want:
                problems.append(
                    f"{name}: rank {len(t.basis)} != stated {want} "
                    f"(subgroup classes of {name}x{name} counted by brute force: {oracle})"
                )
            if not t.is_associative():
                problems.append(f"{name}: table not associative")
            if not t.identity_is_unit():
                problems.append(f"{name}: regular biset is not a two-sided unit")
        assert not problems, "; ".join(problems)


def test_criterion_07_burnside_functor():
    with criterion(7, "hom-rank law over the catalog; Burnside functor on 50 random composites"):
        pt1 = one_point(trivial_group())
        for name in UP_TO_8:
            G = by_name(name)
            for S in conjugacy_classes_of_subgroups(G):
                want = len(conjugacy_classes_of_subgroups(S.as_group()))
                X = coset_object(G, S)
                assert hom_rank(pt1, X) == want == len(hom_basis(pt1, X)), (name, S.members)
        rep = burnside_suite(seed=SEED, budget=50)
        assert rep.ok, rep.failures[:5]


def test_criterion_08_duality():
    with criterion(8, "dual is an involutive anti-homomorphism on 100 random morphism pairs"):
        rep = duality_suite(seed=SEED, budget=100)
        assert rep.ok, rep.failures[:5]
        assert rep.checked == 200


def test_criterion_09_fused():
    with criterion(9, "fused witness over C2; fused iff equal images for |G| <= 6, |T| <= 6"):
        s1, s2 = fused_witness(cyclic(2))
        assert not gspans_equivalent(s1, s2)
        assert functor_A(s1) == functor_A(s2)
        census = fused_exhaustive(max_group=6, max_T=6)
        assert census.groups == 8 and census.pairs > 0 and census.fused_pairs > 0
        assert not census.failures, census.failures[:5]


def test_criterion_10_functor_F():
    with criterion(10, "F preserves biset products (orders <= 6) and is injective on transitive bisets"):
        names = [n for n in UP_TO_8 if by_name(n).order <= 6]
        bisets = {(h, g): transitive_bisets(by_name(h), by_name(g)) for h in names for g in names}
        images = {key: [functor_F(U) for U in bs] for key, bs in bisets.items()}
        for (h, g), fs in images.items():
            assert all(len(f.terms) == 1 and f.terms[0][1] == 1 for f in fs), (h, g)
            classes = {f.terms[0][0] for f in fs}
            assert len(classes) == len(fs) == len(hom_basis(one_point(by_name(g)), one_point(by_name(h)))), (h, g)
        for k, h, g in itertools.product(names, repeat=3):
            for V, fV in zip(bisets[(k, h)], images[(k, h)]):
                for U, fU in zip(bisets[(h, g)], images[(h, g)]):
                    assert functor_F(biset_product(V, U)) == compose(fV, fU), (k, h, g)


# Orbit stabilizers of each test object, read off by hand, and which K occur as
# a subquotient of one of them.
_HAND = {
    ("C2", "point"): {"C1": True, "C2": True, "C3": False, "C4": False, "V4": False},
    ("C2", "regular"): {"C1": True, "C2": False, "C3": False, "C4": False, "V4": False},
    ("C3", "point"): {"C1": True, "C2": False, "C3": True, "C4": False, "V4": False},
    ("C3", "regular"): {"C1": True, "C2": False, "C3": False, "C4": False, "V4": False},
    ("S3", "point"): {"C1": True, "C2": True, "C3": True, "C4": False, "V4": False},
    ("S3", "cosets of C2"): {"C1": True, "C2": True, "C3": False, "C4": False, "V4": False},
    ("S3", "cosets of C3"): {"C1": True, "C2": False, "C3": True, "C4": False, "V4": False},
    ("S3", "regular"): {"C1": True, "C2": False, "C3": False, "C4": False, "V4": False},
}


def _test_object(gname, kind):
    G = by_name(gname)
    if kind == "point":
        return one_point(G)
    if kind == "regular":
        return coset_object(G, Subgroup.trivial(G))
    order = int(kind[-1])
    (S,) = [S for S in conjugacy_classes_of_subgroups(G) if S.order == order]
    return coset_object(G, S)


def test_criterion_11_overline_rb():
    with criterion(11, "overline-RB subquotient criterion vs hand cases and the definition"):
        Ks = {"C1": trivial_group(), "C2": cyclic(2), "C3": cyclic(3), "C4": cyclic(4), "V4": klein()}
        for (gname, kind), row in _HAND.items():
            a = _test_object(gname, kind)
            for kname, want in row.items():
                assert overline_rb_nonzero(a, Ks[kname]) == want, (gname, kind, kname)
                assert overline_rb_definitional(a, Ks[kname]) == want, (gname, kind, kname)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
