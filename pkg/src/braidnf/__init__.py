"""Braid-word equality through normal forms of g-base link lists.

Words in the braid group act on a basis of loops around the punctures of a
disk. Each loop is stored as a list of (point, position) links; a generator
acts as a local half-twist rewrite of that list, and four deletion rules
bring the result back to a unique normal form, so braid-word equality
becomes list equality. An independent free-group action double-checks every
verdict.
"""

from .braidword import (
    BraidWord,
    Letter,
    concat,
    format_word,
    inverse,
    parse_word,
    permutation_of_word,
)
from .errors import (
    InternalStateError,
    MalformedGBaseError,
    MalformedWordError,
    ResourceLimitError,
)
from .gbase import (
    SEPARATOR,
    GBaseWord,
    Link,
    Violation,
    endpoints_permutation,
    format_gbase,
    parse_gbase,
    standard_gbase,
    validate,
)
from .oracle import FreeWord, free_reduce, letter_image, oracle_equal, word_image
from .reduction import ReduceStats, find_forbidden_sequence, reduce, reduce_with_stats
from .solver import is_identity, process_word, words_equal
from .twist import LocalRun, TwistStats, apply_letter, find_local_runs, twist_link

__all__ = [
    "BraidWord",
    "FreeWord",
    "GBaseWord",
    "InternalStateError",
    "Letter",
    "Link",
    "LocalRun",
    "MalformedGBaseError",
    "MalformedWordError",
    "ReduceStats",
    "ResourceLimitError",
    "SEPARATOR",
    "TwistStats",
    "Violation",
    "apply_letter",
    "concat",
    "endpoints_permutation",
    "find_forbidden_sequence",
    "find_local_runs",
    "format_gbase",
    "format_word",
    "free_reduce",
    "inverse",
    "is_identity",
    "letter_image",
    "oracle_equal",
    "parse_gbase",
    "parse_word",
    "permutation_of_word",
    "process_word",
    "reduce",
    "reduce_with_stats",
    "standard_gbase",
    "twist_link",
    "validate",
    "word_image",
    "words_equal",
]
