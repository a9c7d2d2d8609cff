"""Eraser words, staged erasure languages and their omega power.

A small toolkit for the backspace calculus: evaluating words containing
eraser symbols, deciding the staged erasure languages, coding erasers
over a two-letter auxiliary alphabet, and probing the omega power of
the resulting factor language (unique factorization, viable prefixes,
lasso certificates, enumeration and the intersection identity with
block streams).
"""

from .words import (
    ALPHA,
    BETA,
    Eraser,
    MalformedInput,
    UPWord,
    format_staged,
    format_up,
    format_word,
    parse_binary,
    parse_coded,
    parse_staged,
    parse_up,
    up_equal,
    up_normalize,
    up_prefix,
)
from .eraser import (
    EvalOutcome,
    LoopCertificate,
    certificate_holds,
    erase,
    erase_up,
    staged_erase,
    staged_erase_up,
)
from .staged import (
    min_stages,
    vanishes,
    vanishes_by_grammar,
    vanishing_words,
    words_over,
)
from .coding import (
    DecodeResult,
    decode,
    decode_up,
    encode,
    encode_up,
    in_block_stream,
)
from .omega import (
    Factorization,
    LassoVerdict,
    clear_caches,
    factor_index,
    factor_words,
    factorize,
    has_infinitely_many_ones,
    in_coded_erasure_ladder,
    in_erasure_ladder,
    is_factor,
    lasso_member,
    nth_factor,
    pairing_consistent,
    vanishes_coded,
    verify_intersection_identity,
    viable_prefix,
)

__all__ = [
    "ALPHA",
    "BETA",
    "DecodeResult",
    "Eraser",
    "EvalOutcome",
    "Factorization",
    "LassoVerdict",
    "LoopCertificate",
    "MalformedInput",
    "UPWord",
    "certificate_holds",
    "clear_caches",
    "decode",
    "decode_up",
    "encode",
    "encode_up",
    "erase",
    "erase_up",
    "factor_index",
    "factor_words",
    "factorize",
    "format_staged",
    "format_up",
    "format_word",
    "has_infinitely_many_ones",
    "in_block_stream",
    "in_coded_erasure_ladder",
    "in_erasure_ladder",
    "is_factor",
    "lasso_member",
    "min_stages",
    "nth_factor",
    "pairing_consistent",
    "parse_binary",
    "parse_coded",
    "parse_staged",
    "parse_up",
    "staged_erase",
    "staged_erase_up",
    "up_equal",
    "up_normalize",
    "up_prefix",
    "vanishes",
    "vanishes_by_grammar",
    "vanishes_coded",
    "vanishing_words",
    "verify_intersection_identity",
    "viable_prefix",
    "words_over",
]
