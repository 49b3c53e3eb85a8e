"""Higher-block presentations, maximal preimages and direct conjugacy of
subshifts of finite type."""

from .blocks import BlockCoding, block_letter, block_present, higher_block_word
from .conjugacy import ConjugacyDecision, classify_case, decide_direct_conjugacy
from .formats import (
    FormatError,
    format_sft,
    format_word_set,
    parse_sft,
    parse_source,
    parse_word_set,
    read_source,
)
from .letter_graphs import (
    LetterGraph,
    build_letter_graph,
    check_preimage_composability,
    component_count,
    composability_witness,
    export_dot,
    is_maximal_preimage,
    is_n_connected,
)
from .relations import (
    BlockCheck,
    MaxPreimage,
    NotABlockPresentation,
    Partition,
    equivalence_k,
    induced_preimage_projection,
    is_block_presentation,
    max_preimage,
    partitions,
    projection_to_preimage,
)
from .sft import (
    Sft,
    TransitionGraph,
    block_present_sft,
    build_transition_graph,
    is_empty,
    language,
    language_size,
    minimal_forbidden_words,
    normalize_forbidden,
    sft_similar,
)
from .words import (
    FiniteWordSet,
    LanguageSource,
    Projection,
    apply_projection,
    are_similar,
    find_projection,
    is_n_prolongeable,
    subwords,
)

__all__ = [
    "apply_projection",
    "are_similar",
    "block_letter",
    "block_present",
    "block_present_sft",
    "BlockCheck",
    "BlockCoding",
    "build_letter_graph",
    "build_transition_graph",
    "check_preimage_composability",
    "classify_case",
    "component_count",
    "composability_witness",
    "ConjugacyDecision",
    "decide_direct_conjugacy",
    "equivalence_k",
    "export_dot",
    "find_projection",
    "FiniteWordSet",
    "format_sft",
    "format_word_set",
    "FormatError",
    "higher_block_word",
    "induced_preimage_projection",
    "is_block_presentation",
    "is_empty",
    "is_maximal_preimage",
    "is_n_connected",
    "is_n_prolongeable",
    "language",
    "language_size",
    "LanguageSource",
    "LetterGraph",
    "max_preimage",
    "MaxPreimage",
    "minimal_forbidden_words",
    "normalize_forbidden",
    "NotABlockPresentation",
    "parse_sft",
    "parse_source",
    "parse_word_set",
    "Partition",
    "partitions",
    "Projection",
    "projection_to_preimage",
    "read_source",
    "Sft",
    "sft_similar",
    "subwords",
    "TransitionGraph",
]

__version__ = "0.1.0"
