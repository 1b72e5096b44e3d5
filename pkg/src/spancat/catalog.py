"""Named small groups used by tests, fuzzers and the CLI."""

from __future__ import annotations

import functools

from .groups import Group, direct_product, group_from_generators, trivial_group


def _cycle(n: int) -> list[int]:
    return [(i + 1) % n for i in range(n)]


@functools.lru_cache(maxsize=None)
def cyclic(n: int) -> Group:
    if n == 1:
        return trivial_group()
    return group_from_generators(n, [_cycle(n)], label=f"C{n}")


@functools.lru_cache(maxsize=None)
def symmetric(n: int) -> Group:
    if n == 1:
        return trivial_group()
    gens = [_cycle(n), [1, 0] + list(range(2, n))]
    return group_from_generators(n, gens, label=f"S{n}")


@functools.lru_cache(maxsize=None)
def dihedral(n: int) -> Group:
    """Symmetries of the n-gon, order 2n."""
    flip = [(-i) % n for i in range(n)]
    return group_from_generators(n, [_cycle(n), flip], label=f"D{n}")


@functools.lru_cache(maxsize=None)
def klein() -> Group:
    return group_from_generators(4, [[1, 0, 3, 2], [2, 3, 0, 1]], label="V4")


@functools.lru_cache(maxsize=None)
def quaternion() -> Group:
    i = [2, 3, 1, 0, 6, 7, 5, 4]
    j = [4, 5, 7, 6, 1, 0, 2, 3]
    return group_from_generators(8, [i, j], label="Q8")


@functools.lru_cache(maxsize=None)
def by_name(name: str) -> Group:
    """Look up names like ``C4``, ``S3``, ``D4``, ``V4``, ``Q8``, ``C2xC2``."""
    if "x" in name:
        parts = name.split("x")
        G = by_name(parts[0])
        for p in parts[1:]:
            G = direct_product(G, by_name(p))
        return G
    if name in ("V4", "K4"):
        return klein()
    if name == "Q8":
        return quaternion()
    kind, n = name[0], int(name[1:])
    if kind == "C":
        return cyclic(n)
    if kind == "S":
        return symmetric(n)
    if kind == "D":
        return dihedral(n)
    raise KeyError(name)


SMALL = ("C1", "C2", "C3", "C4", "V4", "S3")
UP_TO_8 = ("C1", "C2", "C3", "C4", "V4", "C5", "S3", "C6", "C7", "C8", "D4", "Q8", "C2xC4", "C2xC2xC2")


def small_groups(names=SMALL) -> list[Group]:
    return [by_name(n) for n in names]
