"""Double-coset (Mackey) formula for composing transitive spans."""

from __future__ import annotations

from dataclasses import dataclass

from .config import PreconditionError
from .groups import Group, Subgroup, double_cosets
from .spans import CatObject, Morphism, SpanClass, _pair_conj, canonical_class


def star_product(E: tuple[int, ...], D: tuple[int, ...], K: Group, H: Group, G: Group, h: int = 0) -> tuple[int, ...]:
    """``E *^(h,1) D`` inside ``K x G``.

    ``E <= K x H`` and ``D <= H x G`` are given as encoded member tuples.
    The result is ``{(k, g) : exists h' with (k, h') in E and (h', g) in (h,1)D(h,1)^-1}``.
    """
    nH, nG = H.order, G.order
    ks_by_h: dict[int, set[int]] = {}
    for e in E:
        k, hp = divmod(e, nH)
        ks_by_h.setdefault(hp, set()).add(k)
    gs_by_h: dict[int, set[int]] = {}
    for m in _pair_conj(H, G, D, h, 0):
        hp, g = divmod(m, nG)
        gs_by_h.setdefault(hp, set()).add(g)
    out = set()
    for hp, ks in ks_by_h.items():
        for g in gs_by_h.get(hp, ()):
            out.update(k * nG + g for k in ks)
    return tuple(sorted(out))


def _is_closed(members: tuple[int, ...], A: Group, B: Group) -> bool:
    nB = B.order
    ms = set(members)
    for x in members:
        for y in members:
            if A.mul[x // nB][y // nB] * nB + B.mul[x % nB][y % nB] not in ms:
                return False
    return 0 in ms


@dataclass(frozen=True)
class TransitiveSpanData:
    """``(H x G)/D`` with explicit marks ``beta(D)`` in Y and ``alpha(D)`` in X."""

    source: CatObject
    target: CatObject
    stab: tuple[int, ...]
    beta_mark: int
    alpha_mark: int

    @classmethod
    def from_class(cls, c: SpanClass) -> "TransitiveSpanData":
        return cls(c.source, c.target, c.stab, c.mark[0], c.mark[1])

    def conjugate(self, h: int, g: int) -> "TransitiveSpanData":
        """Same class, based at ``(h, g)`` times the base point."""
        G, H = self.source.group, self.target.group
        return TransitiveSpanData(
            self.source,
            self.target,
            _pair_conj(H, G, self.stab, h, g),
            self.target.xset.act[h][self.beta_mark],
            self.source.xset.act[g][self.alpha_mark],
        )

    def to_class(self) -> SpanClass:
        return canonical_class(self.source, self.target, self.stab, (self.beta_mark, self.alpha_mark))

    def projection(self, side: str) -> Subgroup:
        """Projection of the stabilizer to the target (``'left'``) or source group."""
        G, H = self.source.group, self.target.group
        if side == "left":
            return Subgroup.of(H, (m // G.order for m in self.stab))
        return Subgroup.of(G, (m % G.order for m in self.stab))


def mackey_terms(e: TransitiveSpanData, d: TransitiveSpanData) -> list[tuple[int, tuple[int, ...], tuple[int, int]]]:
    """``(h, E *^(h,1) D, (delta(E), alpha(D)))`` for ``h`` in ``[A \\ H' / B]``."""
    if e.source != d.target:
        raise PreconditionError("middle objects differ")
    if d.beta_mark != e.alpha_mark:
        raise PreconditionError("beta(D) != gamma(E)")
    K, H, G = e.target.group, d.target.group, d.source.group
    A = e.projection("right")
    B = d.projection("left")
    Hp = e.source.xset.stabilizer(d.beta_mark)
    if not (A.issubset(Hp) and B.issubset(Hp)):
        raise AssertionError("projections must lie in the mark stabilizer")
    out = []
    for h in double_cosets(A, Hp, B):
        T = star_product(e.stab, d.stab, K, H, G, h)
        out.append((h, T, (e.beta_mark, d.alpha_mark)))
    return out


def mackey_compose(e: TransitiveSpanData, d: TransitiveSpanData, check: bool = False) -> Morphism:
    """``<V,delta,gamma> o <U,beta,alpha>`` as a sum over double cosets."""
    counts: dict[SpanClass, int] = {}
    K, G = e.target.group, d.source.group
    for _, T, mark in mackey_terms(e, d):
        if check and not _is_closed(T, K, G):
            raise AssertionError("star product is not a subgroup")
        cls = canonical_class(d.source, e.target, T, mark)
        counts[cls] = counts.get(cls, 0) + 1
    return Morphism.build(d.source, e.target, counts)
