import pytest
from hypothesis import given, strategies as st

from oracles import all_subgroups_bruteforce, subgroup_classes_bruteforce
from spancat.catalog import UP_TO_8, by_name, cyclic, dihedral, quaternion, symmetric
from spancat.config import OrderCapExceeded, PreconditionError, configured
from spancat.groups import (
    Subgroup,
    are_isomorphic,
    conjugacy_classes_of_subgroups,
    direct_product,
    double_coset,
    double_cosets,
    group_from_generators,
    is_subquotient,
    normalizer,
    quotient_group,
    subgroups,
)

names = st.sampled_from(UP_TO_8)


@pytest.mark.parametrize("name", UP_TO_8)
def test_catalog_tables_are_groups(name):
    G = by_name(name)
    G.validate()


def test_s3_from_cycles_has_order_6():
    G = group_from_generators(3, [(1, 2, 0), (1, 0, 2)])
    assert G.order == 6 and not G.is_abelian()


def test_order_histograms_separate_the_groups_of_order_8():
    hist = {n: by_name(n).order_histogram for n in ("C8", "D4", "Q8", "C2xC4", "C2xC2xC2")}
    assert len(set(hist.values())) == 5
    assert hist["Q8"] == ((1, 1), (2, 1), (4, 6))
    assert hist["D4"] == ((1, 1), (2, 5), (4, 2))


@pytest.mark.parametrize("name", UP_TO_8)
def test_subgroups_match_bruteforce(name):
    G = by_name(name)
    mine = {S.member_set for S in subgroups(G)}
    assert mine == set(all_subgroups_bruteforce(G.mul))


@pytest.mark.parametrize("name", UP_TO_8)
def test_subgroup_classes_match_bruteforce(name):
    G = by_name(name)
    assert len(conjugacy_classes_of_subgroups(G)) == subgroup_classes_bruteforce(G.mul)


@pytest.mark.parametrize("name, n", [("S3", 6), ("D4", 10), ("Q8", 6), ("C2xC2", 5), ("C3xC3", 6)])
def test_known_subgroup_counts(name, n):
    assert len(subgroups(by_name(name))) == n


@given(names, st.data())
def test_double_cosets_partition_the_group(name, data):
    G = by_name(name)
    subs = subgroups(G)
    A, B = data.draw(st.sampled_from(subs)), data.draw(st.sampled_from(subs))
    W = Subgroup.whole(G)
    blocks = [double_coset(A, w, B) for w in double_cosets(A, W, B)]
    union = set().union(*blocks)
    assert union == set(G.elements()) and sum(map(len, blocks)) == G.order


def test_double_cosets_need_containment():
    G = symmetric(3)
    C2 = Subgroup.generated(G, [G.perms.index((1, 0, 2))])
    C2b = Subgroup.generated(G, [G.perms.index((0, 2, 1))])
    with pytest.raises(PreconditionError):
        double_cosets(C2b, C2, C2)


@given(names, st.data())
def test_normalizer_contains_and_normalizes(name, data):
    G = by_name(name)
    S = data.draw(st.sampled_from(subgroups(G)))
    N = normalizer(S)
    assert S.issubset(N) and S.is_normal_in(N)
    for c in G.elements():
        if c not in N:
            assert S.conjugate(c) != S


def test_quotient_of_s3_by_c3_is_c2():
    G = symmetric(3)
    C3 = Subgroup.generated(G, [G.perms.index((1, 2, 0))])
    Q = quotient_group(Subgroup.whole(G), C3)
    assert are_isomorphic(Q, cyclic(2)) is not None


@given(names, names)
def test_isomorphism_iff_same_name(a, b):
    same = are_isomorphic(by_name(a), by_name(b)) is not None
    assert same == (a == b)


def test_isomorphism_is_a_homomorphic_bijection():
    f = are_isomorphic(by_name("C2xC2"), by_name("V4"))
    assert f is not None and f.is_homomorphism() and f.is_bijective()


def test_d4_subquotients():
    D4 = dihedral(4)
    assert is_subquotient(by_name("V4"), D4)
    assert is_subquotient(cyclic(4), D4)
    assert not is_subquotient(quaternion(), by_name("C2xC4"))
    assert not is_subquotient(cyclic(3), D4)


def test_order_cap():
    with configured(max_order=8):
        with pytest.raises(OrderCapExceeded):
            direct_product(cyclic(3), cyclic(3))
        with pytest.raises(OrderCapExceeded):
            symmetric(4)
