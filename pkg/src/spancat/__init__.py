"""Spans of bisets between fractions X/G: composition, biproducts and Burnside rings."""

from .burnside import (
    HomBasis,
    StructureTable,
    burnside_functor_apply,
    double_burnside_table,
    hom_basis,
    hom_rank,
    overline_rb_definitional,
    overline_rb_nonzero,
)
from .catalog import by_name, cyclic, dihedral, klein, quaternion, symmetric
from .category import (
    Biproduct,
    copair,
    coset_object,
    decompose,
    direct_sum,
    iso_absorb_factor,
    iso_coset_collapse,
    iso_from_equivariant_bijection,
    objects_isomorphic,
    one_point,
    sum_object,
    tensor,
    tensor_mor,
    zero_object,
)
from .config import (
    CONFIG,
    CompositionError,
    Config,
    InvariantError,
    NoWitnessError,
    OrderCapExceeded,
    PreconditionError,
    SpancatError,
    configured,
)
from .functors import Biset, GSpan, biset_product, functor_A, functor_F, fused_equal, fused_related, fused_witness
from .groups import Group, GroupMap, Subgroup, are_isomorphic, direct_product, group_from_generators, subgroups
from .gsets import GSet, coset_gset, orbit_decomposition, point, regular_gset
from .mackey import TransitiveSpanData, mackey_compose, star_product
from .spans import (
    CatObject,
    Morphism,
    Span,
    SpanClass,
    canonicalize,
    compose,
    dual,
    identity,
    morphism_from_class,
)

__version__ = "0.1.0"
