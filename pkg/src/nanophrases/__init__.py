"""Homotopy of words and phrases over involutive alphabets.

Core objects: involutive alphabets with their orbit groups, etale
phrases and nanophrases, desingularization, the three rewriting moves
with bounded bidirectional search, a battery of homotopy invariants,
and a classifier for phrases with at most three entries.
"""

from .alphabet import InvolutiveAlphabet, PiElement, PiGroup, make_alphabet
from .classify import (
    CONTRACTIBLE,
    AtlasRecord,
    AtlasResult,
    Certificate,
    NormalForm,
    WordClass,
    atlas,
    classify_phrase,
    classify_word,
    component_word_class,
    distinguish,
    enumerate_phrases,
    realize,
)
from .grammar import (
    ParseError,
    parse_alphabet_document,
    parse_document,
    serialize_alphabet,
    serialize_document,
    words_text,
)
from .invariants import (
    component_length_vector,
    invariant_battery,
    linking_vector,
    orbit_restriction,
    so_profile,
    t_mod2,
    t_signed,
)
from .moves import (
    MoveApplication,
    SearchBudget,
    StaleMoveError,
    Verdict,
    Witness,
    apply_move,
    contract_bounded,
    find_moves,
    homotopic_bounded,
    invert_move,
    replay_path,
)
from .phrases import (
    AlphaAlphabet,
    CanonicalKey,
    EtalePhrase,
    Nanophrase,
    canonicalize,
    desingularize,
    identity_phrase,
    isomorphic,
    phrase,
    phrase_from_key,
)

__version__ = "0.1.0"

__all__ = [
    "CONTRACTIBLE",
    "AlphaAlphabet",
    "AtlasRecord",
    "AtlasResult",
    "CanonicalKey",
    "Certificate",
    "EtalePhrase",
    "InvolutiveAlphabet",
    "MoveApplication",
    "Nanophrase",
    "NormalForm",
    "ParseError",
    "PiElement",
    "PiGroup",
    "SearchBudget",
    "StaleMoveError",
    "Verdict",
    "Witness",
    "WordClass",
    "apply_move",
    "atlas",
    "canonicalize",
    "classify_phrase",
    "classify_word",
    "component_length_vector",
    "component_word_class",
    "contract_bounded",
    "desingularize",
    "distinguish",
    "enumerate_phrases",
    "find_moves",
    "homotopic_bounded",
    "identity_phrase",
    "invariant_battery",
    "invert_move",
    "isomorphic",
    "linking_vector",
    "make_alphabet",
    "orbit_restriction",
    "parse_alphabet_document",
    "parse_document",
    "phrase",
    "phrase_from_key",
    "realize",
    "replay_path",
    "serialize_alphabet",
    "serialize_document",
    "so_profile",
    "t_mod2",
    "t_signed",
    "words_text",
]
