"""Small worked examples, one per listed behaviour of each operation."""

from spancat.burnside import burnside_functor_apply, double_burnside_table, hom_basis, overline_rb_nonzero
from spancat.catalog import by_name, cyclic, symmetric
from spancat.category import (
    copair,
    coset_object,
    decompose,
    direct_sum,
    iso_coset_collapse,
    iso_from_equivariant_bijection,
    objects_isomorphic,
    one_point,
    tensor,
    zero_object,
)
from spancat.functors import Biset, GSpan, functor_A, functor_F, fused_equal, fused_witness, transitive_biset
from spancat.groups import (
    GroupMap,
    Subgroup,
    are_isomorphic,
    conjugacy_classes_of_subgroups,
    direct_product,
    double_cosets,
    group_from_generators,
    is_subquotient,
    subgroups,
    trivial_group,
)
from spancat.gsets import (
    coset_gset,
    empty_gset,
    gset_disjoint_union,
    gset_product,
    gsets_isomorphic,
    inflate_along_projection,
    natural_gset,
    orbit_decomposition,
    point,
    regular_gset,
    trivial_gset,
)
from spancat.mackey import TransitiveSpanData, mackey_terms, star_product
from spancat.spans import CatObject, Morphism, Span, canonicalize, compose, dual, identity

S3 = symmetric(3)
T01 = S3.perms.index((1, 0, 2))


def transposition():
    return Subgroup.generated(S3, [T01])


# groups ----------------------------------------------------------------------


def test_closures():
    assert group_from_generators(1, []).order == 1
    C4 = group_from_generators(4, [(1, 2, 3, 0)])
    assert C4.order == 4 and are_isomorphic(C4, cyclic(4))


def test_products():
    G = S3
    assert direct_product(trivial_group(), G).mul == G.mul
    V = direct_product(cyclic(2), cyclic(2))
    assert all(V.mul[a][a] == 0 for a in V.elements())
    C6 = direct_product(cyclic(2), cyclic(3))
    assert any(C6.element_order(a) == 6 for a in C6.elements())


def test_subgroup_counts():
    assert len(subgroups(trivial_group())) == 1
    assert (len(subgroups(S3)), len(conjugacy_classes_of_subgroups(S3))) == (6, 4)
    V = by_name("C2xC2")
    assert len(subgroups(V)) == len(conjugacy_classes_of_subgroups(V)) == 5


def test_double_coset_counts():
    W = Subgroup.whole(S3)
    assert double_cosets(W, W, Subgroup.trivial(S3)) == [0]
    A = transposition()
    assert len(double_cosets(A, W, A)) == 2
    C4 = cyclic(4)
    T = Subgroup.trivial(C4)
    assert len(double_cosets(T, Subgroup.whole(C4), T)) == 4


def test_isomorphism_examples():
    f = are_isomorphic(S3, S3)
    assert f is not None and f.is_bijective() and f.is_homomorphism()
    assert are_isomorphic(cyclic(4), by_name("C2xC2")) is None
    other = group_from_generators(3, [(1, 0, 2), (0, 2, 1)])
    assert other.mul != S3.mul and are_isomorphic(other, S3) is not None


def test_subquotient_examples():
    assert all(is_subquotient(trivial_group(), by_name(n)) for n in ("C1", "C4", "S3"))
    assert is_subquotient(cyclic(2), S3)
    assert not is_subquotient(cyclic(4), S3)


# G-sets ----------------------------------------------------------------------


def test_coset_sets():
    assert coset_gset(S3, Subgroup.whole(S3)).size == 1
    X = coset_gset(S3, transposition())
    assert X.size == 3 and X.is_transitive()
    assert coset_gset(S3, Subgroup.trivial(S3)) == regular_gset(S3) and regular_gset(S3).size == 6


def test_orbit_decompositions():
    d = orbit_decomposition(trivial_gset(S3, 4))
    assert len(d) == 4 and all(o.stabilizer.order == 6 for o in d)
    (o,) = orbit_decomposition(natural_gset(S3))
    assert o.stabilizer.order == 2
    assert len(orbit_decomposition(empty_gset(S3))) == 0


def test_gset_isomorphisms():
    X = natural_gset(S3)
    f = gsets_isomorphic(X, X)
    assert f is not None and f.is_equivariant()
    assert gsets_isomorphic(coset_gset(S3, transposition()), X) is not None
    C2 = cyclic(2)
    assert gsets_isomorphic(regular_gset(C2), trivial_gset(C2, 2)) is None


def test_products_and_unions():
    X = natural_gset(S3)
    assert gsets_isomorphic(gset_product(X, point(S3)), X) is not None
    R = regular_gset(cyclic(2))
    RR = gset_product(R, R)
    assert RR.size == 4 and len(orbit_decomposition(RR)) == 2
    assert all(o.stabilizer.order == 1 for o in orbit_decomposition(RR))
    assert gset_disjoint_union(empty_gset(S3), X) == X


def test_inflation():
    X = natural_gset(S3)
    same = inflate_along_projection(X, trivial_group())
    assert same.act == X.act
    assert inflate_along_projection(point(S3), cyclic(2)).size == 1
    big = inflate_along_projection(X, cyclic(2))
    big.validate()
    (o,) = orbit_decomposition(big)
    assert o.stabilizer.order == 2 * 2


# spans -----------------------------------------------------------------------


def test_empty_span_is_zero():
    pt = one_point(cyclic(2))
    U = Span(pt, pt, ((), ()), ((), ()), (), ())
    assert canonicalize(U).is_zero()


def test_identity_examples():
    (cls, k), = identity(one_point(trivial_group())).terms
    assert k == 1 and cls.stab == (0,)
    (cls, k), = identity(one_point(cyclic(2))).terms
    assert k == 1 and cls.stab == (0, 3)
    assert len(identity(CatObject.of(natural_gset(S3))).terms) == 1


def test_ring_axioms():
    pt = one_point(cyclic(2))
    f = identity(pt)
    g = Morphism.build(pt, pt, {c: 3 for c in hom_basis(pt, pt)})
    zero = Morphism.zero(pt, pt)
    assert f + zero == f and (f + (-f)) == zero
    assert 2 * (f + g) == 2 * f + 2 * g


def test_dual_examples():
    a = CatObject.of(natural_gset(S3))
    assert dual(identity(a)) == identity(a)
    # induction pt/H -> pt/G and restriction pt/G -> pt/H, both carried by G itself
    H = transposition()
    Hg = H.as_group()
    n = S3.order
    left = tuple(tuple(S3.mul[g][x] for x in range(n)) for g in S3.elements())
    right_H = tuple(tuple(S3.mul[x][h] for x in range(n)) for h in H.members)
    left_H = tuple(tuple(S3.mul[h][x] for x in range(n)) for h in H.members)
    right = tuple(tuple(S3.mul[x][g] for x in range(n)) for g in S3.elements())
    ind = functor_F(Biset(S3, Hg, left, right_H))
    res = functor_F(Biset(Hg, S3, left_H, right))
    assert dual(ind) == res and dual(res) == ind


# category --------------------------------------------------------------------


def test_sum_examples():
    X = CatObject.of(natural_gset(S3))
    assert objects_isomorphic(direct_sum(X, zero_object()).obj, X)
    s = direct_sum(one_point(cyclic(2)), one_point(cyclic(3))).obj
    orders = sorted(G.order for G in decompose(s).groups)
    assert orders == [2, 3]


def test_copair_with_zero():
    a, b, c = one_point(cyclic(2)), CatObject.of(natural_gset(S3)), one_point(cyclic(2))
    f = Morphism.build(a, c, {cl: 1 for cl in hom_basis(a, c)})
    bp = direct_sum(a, b)
    assert compose(copair(f, Morphism.zero(b, c)), bp.inj_a) == f


def test_tensor_examples():
    X = CatObject.of(natural_gset(S3))
    assert objects_isomorphic(tensor(X, one_point(trivial_group())), X)
    pp = tensor(one_point(cyclic(2)), one_point(cyclic(2)))
    assert pp == one_point(by_name("C2xC2"))


def test_decompose_examples():
    assert [G.order for G in decompose(one_point(S3)).groups] == [6]
    (S,) = decompose(CatObject.of(natural_gset(S3))).groups
    assert are_isomorphic(S, cyclic(2)) is not None
    (R,) = decompose(CatObject.of(regular_gset(S3))).groups
    assert R.order == 1
    assert objects_isomorphic(CatObject.of(regular_gset(S3)), one_point(trivial_group()))


def test_isomorphism_examples_category():
    for n in ("C1", "C4", "S3", "Q8"):
        a = CatObject.of(regular_gset(by_name(n)))
        assert objects_isomorphic(a, a)
    assert objects_isomorphic(coset_object(S3, transposition()), one_point(cyclic(2)))
    a = CatObject.of(natural_gset(S3))
    fwd, bwd = iso_from_equivariant_bijection(a, a, GroupMap.identity(S3), [0, 1, 2])
    assert fwd == bwd == identity(a)


def test_coset_collapse_examples():
    fwd, bwd = iso_coset_collapse(S3, Subgroup.whole(S3))
    assert compose(bwd, fwd) == identity(coset_object(S3, Subgroup.whole(S3)))
    C4 = cyclic(4)
    (C2,) = [H for H in subgroups(C4) if H.order == 2]
    fwd, bwd = iso_coset_collapse(C4, C2)
    assert compose(fwd, bwd) == identity(one_point(C2.as_group()))
    assert len(hom_basis(one_point(trivial_group()), coset_object(C4, C2))) == 2


# Mackey ----------------------------------------------------------------------


def test_star_product_examples():
    C2 = cyclic(2)
    full = tuple(range(4))
    assert star_product(full, full, C2, C2, C2) == full
    diag = (0, 3)
    assert star_product(diag, diag, C2, C2, C2) == diag
    # E = K x 1 keeps the g with (1, g) in D
    K, H, G = cyclic(3), cyclic(2), cyclic(2)
    E = tuple(k * 2 for k in range(3))
    D = (0, 1)  # {1} x C2 inside H x G
    assert star_product(E, D, K, H, G) == tuple(range(6))
    assert star_product(E, diag, K, H, G) == tuple(k * 2 for k in range(3))


def test_mackey_examples():
    pt = one_point(cyclic(2))
    diag = TransitiveSpanData.from_class(identity(pt).terms[0][0])
    terms = mackey_terms(diag, diag)
    assert len(terms) == 1 and terms[0][1] == (0, 3)


# Burnside --------------------------------------------------------------------


def test_basis_examples():
    pt1 = one_point(trivial_group())
    assert len(hom_basis(pt1, zero_object())) == 0
    assert len(hom_basis(pt1, coset_object(S3, transposition()))) == 2
    pt = one_point(cyclic(2))
    assert len(hom_basis(pt, pt)) == 5


def test_table_examples():
    t1 = double_burnside_table(trivial_group())
    assert t1.coeffs == (((1,),),)
    C3 = cyclic(3)
    t = double_burnside_table(C3)
    free = [c.stab for c in t.basis].index((0,))
    assert t.coeffs[free][free] == tuple(3 * int(i == free) for i in range(len(t.basis)))


def test_overline_rb_examples():
    assert overline_rb_nonzero(one_point(S3), trivial_group())
    assert not overline_rb_nonzero(one_point(cyclic(2)), cyclic(3))
    assert overline_rb_nonzero(CatObject.of(natural_gset(S3)), cyclic(2))


def test_burnside_functor_on_collapse_pair():
    fwd, bwd = iso_coset_collapse(S3, transposition())
    A, B = burnside_functor_apply(fwd), burnside_functor_apply(bwd)
    assert len(A) == len(A[0]) == 2
    from spancat.burnside import matmul

    assert matmul(A, B) == [[1, 0], [0, 1]] == matmul(B, A)


# functors --------------------------------------------------------------------


def test_functor_A_of_empty_span_is_zero():
    X = natural_gset(S3)
    s = GSpan(S3, X, X, empty_gset(S3), (), ())
    assert functor_A(s).is_zero()


def test_fused_equal_reflexive_and_s3_witness():
    s1, s2 = fused_witness(S3)
    assert fused_equal(s1, s1)
    z = 1
    t = [S3.conj[u][z] for u in S3.elements()]
    assert len(set(t)) > 1  # the conjugation map used by the witness is not constant
    assert functor_A(s1) == functor_A(s2)


def test_F_examples():
    G = S3
    n = G.order
    empty = Biset(G, G, tuple(() for _ in range(n)), tuple(() for _ in range(n)))
    assert functor_F(empty).is_zero()
    diag = Subgroup.of(direct_product(G, G), [g * n + g for g in G.elements()])
    assert functor_F(transitive_biset(G, G, diag)) == identity(one_point(G))
