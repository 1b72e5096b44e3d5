import itertools

import pytest

from spancat.burnside import hom_basis
from spancat.catalog import by_name
from spancat.category import one_point
from spancat.config import PreconditionError
from spancat.fuzz import mackey_suite
from spancat.mackey import TransitiveSpanData, _is_closed, mackey_compose, mackey_terms, star_product
from spancat.spans import compose, morphism_from_class

GROUPS = ("C1", "C2", "C3")


def _pairs(names):
    for k, h, g in itertools.product(names, repeat=3):
        K, H, G = (one_point(by_name(n)) for n in (k, h, g))
        for d in hom_basis(G, H):
            for e in hom_basis(H, K):
                yield TransitiveSpanData.from_class(e), TransitiveSpanData.from_class(d)


def test_mackey_matches_compose_on_small_points():
    count = 0
    for e, d in _pairs(GROUPS):
        direct = compose(morphism_from_class(e.to_class()), morphism_from_class(d.to_class()))
        assert mackey_compose(e, d, check=True) == direct
        count += 1
    assert count > 100


def test_star_products_are_subgroups():
    for e, d in _pairs(("C2", "S3")):
        for _, T, _ in mackey_terms(e, d):
            assert _is_closed(T, e.target.group, d.source.group)


def test_star_product_with_diagonal_is_identity():
    G = by_name("S3")
    diag = tuple(g * 6 + g for g in G.elements())
    E = tuple(sorted({0, 3 * 6 + 3}))
    assert star_product(diag, E, G, G, G) == E
    assert star_product(E, diag, G, G, G) == E


def test_marks_must_agree():
    G = by_name("C2")
    from spancat.category import coset_object
    from spancat.groups import Subgroup

    X = coset_object(G, Subgroup.trivial(G))
    pt = one_point(G)
    d = TransitiveSpanData.from_class(hom_basis(pt, X).classes[0])
    e = TransitiveSpanData.from_class(hom_basis(X, pt).classes[0])
    bad = TransitiveSpanData(e.source, e.target, e.stab, e.beta_mark, 1 - d.beta_mark)
    with pytest.raises(PreconditionError):
        mackey_terms(bad, d)


def test_mackey_suite_on_general_objects():
    rep = mackey_suite(seed=3, budget=150)
    assert rep.ok, rep.failures
