from .alphabet import Alphabet, letter_key, sort_key, word_key
from .word import (
    CyclicWord,
    ReducedWord,
    concat,
    cyclic_reduce,
    cyclic_words,
    factors,
    invert,
    is_cyclically_reduced,
    is_reduced,
    parse_word,
    primitive_root,
    reduce,
    reduced_words,
)
from .morphism import Automorphism, Endomorphism, apply, compose, verify_inverse
from .boundary import (
    BoundaryPoint,
    boundary_distance,
    common_prefix,
    infinity_word,
)
from .biinfinite import (
    BiinfiniteWordSpec,
    biinfinite_distance,
    central_factors,
    periodic_spec,
)
from .language import FactorLanguage

__all__ = [
    # Alphabet and ordering
    "Alphabet",
    "letter_key",
    "sort_key",
    "word_key",
    # Words
    "CyclicWord",
    "ReducedWord",
    "concat",
    "cyclic_reduce",
    "factors",
    "invert",
    "is_cyclically_reduced",
    "is_reduced",
    "parse_word",
    "primitive_root",
    "reduce",
    "reduced_words",
    "cyclic_words",
    # Morphisms
    "Automorphism",
    "Endomorphism",
    "apply",
    "compose",
    "verify_inverse",
    # Boundary points and leaves
    "BoundaryPoint",
    "boundary_distance",
    "common_prefix",
    "infinity_word",
    "BiinfiniteWordSpec",
    "biinfinite_distance",
    "central_factors",
    "periodic_spec",
    # Languages
    "FactorLanguage",
]
