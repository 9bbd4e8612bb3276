"""Free-group automorphism toolkit: reduction, lifting, splittings, and the
construction pipeline, backed by the C++ core."""

from ._fgtwist import (
    abelianize,
    construct,
    lift,
    reduce_word,
    translation_length,
)

__all__ = [
    "abelianize",
    "construct",
    "lift",
    "reduce_word",
    "translation_length",
]
