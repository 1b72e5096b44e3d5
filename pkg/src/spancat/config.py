"""Global configuration and the exception hierarchy."""

from __future__ import annotations

import contextlib
from dataclasses import dataclass, fields


class SpancatError(Exception):
    """Base class for all library errors."""


class OrderCapExceeded(SpancatError):
    pass


class PreconditionError(SpancatError):
    pass


class InvariantError(SpancatError):
    pass


class CompositionError(SpancatError):
    """Source/target objects of two morphisms do not match."""


class NoWitnessError(SpancatError):
    pass


@dataclass
class Config:
    max_order: int = 64
    modulus: int | None = None
    seed: int = 0


CONFIG = Config()


@contextlib.contextmanager
def configured(**overrides):
    """Temporarily override fields of the global config."""
    names = {f.name for f in fields(Config)}
    unknown = set(overrides) - names
    if unknown:
        raise TypeError(f"unknown config fields: {sorted(unknown)}")
    saved = {k: getattr(CONFIG, k) for k in overrides}
    for k, v in overrides.items():
        setattr(CONFIG, k, v)
    try:
        yield CONFIG
    finally:
        for k, v in saved.items():
            setattr(CONFIG, k, v)


def check_order(n: int) -> None:
    if n > CONFIG.max_order:
        raise OrderCapExceeded(f"order cap exceeded: {n} > {CONFIG.max_order}")
