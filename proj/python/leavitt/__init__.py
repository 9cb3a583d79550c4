"""Leavitt path algebras and the injective Leavitt complex of a finite quiver."""

from ._leavitt import (
    CocycleError,
    ParseError,
    Quiver,
    QuiverError,
    act,
    basis,
    degrees,
    differential,
    reduce,
    verify,
    witness,
)

__all__ = [
    "CocycleError",
    "ParseError",
    "Quiver",
    "QuiverError",
    "act",
    "basis",
    "degrees",
    "differential",
    "reduce",
    "verify",
    "witness",
]
