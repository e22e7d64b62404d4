"""Classification of short multiplicity-one-free phrases and words.

Any etale phrase with at most 3 entries and no letter of multiplicity one
uses a single letter, so its shape is the occurrence-count distribution of
that letter over the components.  Normal forms are encoded exactly that
way: a symbol, a tuple of counts, and the strictly increasing component
spots carrying them.  The families are

    empty   no letters
    1-1     one occurrence in each of two components
    3       three occurrences in one component (needs tau(a) != a;
            otherwise the phrase collapses to empty)
    2-1     two occurrences then one, in increasing components
    1-2     one occurrence then two
    1-1-1   one occurrence in each of three components

Words of at most four entries whose pattern is one of XX, XXX, XXXX,
XXYY, XYYX, XYXY classify by the short-word theorem: XX/XXYY/XYYX are
contractible, XXX/XXXX are contractible iff tau(a) = a, XYXY with
projections (a, b), a distinct from b, is contractible iff tau(a) = b,
and the remaining classes coincide only when literally equal.  XYXY with
equal projections is outside the theorem and is rejected.

The atlas enumerates every classifiable phrase over an alphabet for a
fixed component count, verifies a move path to the realized normal form,
and certifies pairwise distinctness of the classes that occur.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .alphabet import InvolutiveAlphabet
from .invariants import invariant_battery
from .moves import SearchBudget, Verdict, Witness, homotopic_bounded
from .phrases import EtalePhrase, identity_phrase

__all__ = [
    "CONTRACTIBLE",
    "FAMILIES",
    "AtlasRecord",
    "AtlasResult",
    "Certificate",
    "NormalForm",
    "WordClass",
    "atlas",
    "classify_phrase",
    "classify_word",
    "component_word_class",
    "distinguish",
    "enumerate_phrases",
    "realize",
]

FAMILIES = ((), (1, 1), (3,), (2, 1), (1, 2), (1, 1, 1))


@dataclass(frozen=True)
class NormalForm:
    k: int
    counts: tuple[int, ...] = ()
    spots: tuple[int, ...] = ()
    symbol: str | None = None

    def __post_init__(self):
        if self.counts not in FAMILIES:
            raise ValueError(f"unknown family {self.counts}")
        if len(self.spots) != len(self.counts):
            raise ValueError("one spot per count")
        if (self.symbol is None) != (not self.counts):
            raise ValueError("symbol present iff the form is nonempty")
        prev = 0
        for s in self.spots:
            if not prev < s <= self.k:
                raise ValueError(f"spots must increase within 1..{self.k}")
            prev = s

    @property
    def family(self) -> str:
        return "-".join(map(str, self.counts)) if self.counts else "empty"

    def sort_key(self):
        return (FAMILIES.index(self.counts), self.symbol or "", self.spots)

    def __str__(self) -> str:
        if not self.counts:
            return f"empty k={self.k}"
        at = ",".join(map(str, self.spots))
        return f"{self.symbol}:{self.family}@{at} k={self.k}"


def realize(nf: NormalForm, base: InvolutiveAlphabet) -> EtalePhrase:
    """The representative phrase of a normal form, identity letter table."""
    if nf.symbol is not None:
        if nf.symbol not in base:
            raise ValueError(f"unknown symbol {nf.symbol!r}")
        if nf.counts == (3,) and base.tau(nf.symbol) == nf.symbol:
            raise ValueError("the 3-in-one-component form needs tau(a) != a")
    words: list[tuple[str, ...]] = [() for _ in range(nf.k)]
    for count, spot in zip(nf.counts, nf.spots):
        words[spot - 1] = (nf.symbol,) * count
    return identity_phrase(base, words)


def classify_phrase(p: EtalePhrase) -> NormalForm:
    """Normal form of a multiplicity-one-free phrase with at most 3 entries."""
    if p.entry_count > 3:
        raise ValueError(f"phrase has {p.entry_count} entries; classification stops at 3")
    used = []
    for letter in p.alphabet.letters:
        m = p.multiplicity(letter)
        if m == 1:
            raise ValueError(f"letter {letter!r} has multiplicity one")
        if m:
            used.append(letter)
    k = p.k
    if not used:
        return NormalForm(k)
    (letter,) = used  # two letters would need at least four entries
    symbol = p.alphabet.projection(letter)
    base = p.alphabet.base
    per_word = [word.count(letter) for word in p.words]
    spots = [i + 1 for i, c in enumerate(per_word) if c]
    counts = tuple(per_word[s - 1] for s in spots)
    if counts == (2,):
        return NormalForm(k)
    if counts == (3,):
        if base.tau(symbol) == symbol:
            return NormalForm(k)
        return NormalForm(k, (3,), tuple(spots), symbol)
    return NormalForm(k, counts, tuple(spots), symbol)


@dataclass(frozen=True)
class WordClass:
    kind: str  # "contractible" | "aaa" | "aaaa" | "abab"
    symbols: tuple[str, ...] = ()

    def __str__(self) -> str:
        if self.kind == "contractible":
            return self.kind
        return f"{self.kind}[{','.join(self.symbols)}]"


CONTRACTIBLE = WordClass("contractible")


def _pattern_class(seq: tuple[str, ...], proj, tau) -> WordClass | None:
    """Class of a word whose letters all repeat, or None when not covered."""
    number: dict[str, int] = {}
    pattern = []
    for entry in seq:
        number.setdefault(entry, len(number) + 1)
        pattern.append(number[entry])
    pattern = tuple(pattern)
    letters = list(number)
    if pattern in ((), (1, 1), (1, 1, 2, 2), (1, 2, 2, 1)):
        return CONTRACTIBLE
    if pattern in ((1, 1, 1), (1, 1, 1, 1)):
        a = proj(letters[0])
        if tau(a) == a:
            return CONTRACTIBLE
        return WordClass("aaa" if len(pattern) == 3 else "aaaa", (a,))
    if pattern == (1, 2, 1, 2):
        a, b = proj(letters[0]), proj(letters[1])
        if tau(a) == b:
            return CONTRACTIBLE
        if a == b:
            return None  # outside the quoted theorem
        return WordClass("abab", (a, b))
    return None


def classify_word(p: EtalePhrase) -> WordClass:
    """Short-word theorem on a one-component multiplicity-one-free phrase."""
    if p.k != 1:
        raise ValueError("classify_word takes a single-component phrase")
    for letter in p.alphabet.letters:
        if p.multiplicity(letter) == 1:
            raise ValueError(f"letter {letter!r} has multiplicity one")
    cls = _pattern_class(p.words[0], p.alphabet.projection, p.alphabet.base.tau)
    if cls is None:
        raise ValueError("word is not of a form the short-word theorem covers")
    return cls


def component_word_class(p: EtalePhrase, i: int) -> WordClass | None:
    """Class of component i as an etale word, when decidable; else None.

    Taken on its own, the component is an etale word in which letters
    occurring once (even those recurring in other components) have
    multiplicity one and vanish under the word's own desingularization,
    so it reduces to the subsequence of its repeating letters before
    pattern matching.
    """
    word = p.words[i - 1]
    counts: dict[str, int] = {}
    for entry in word:
        counts[entry] = counts.get(entry, 0) + 1
    core = tuple(e for e in word if counts[e] >= 2)
    return _pattern_class(core, p.alphabet.projection, p.alphabet.base.tau)


@dataclass(frozen=True)
class Certificate:
    left: NormalForm
    right: NormalForm
    witness: Witness


def distinguish(nf1: NormalForm, nf2: NormalForm, base: InvolutiveAlphabet) -> Certificate:
    """Separating-invariant certificate for two distinct normal forms."""
    if nf1 == nf2:
        raise ValueError("the forms are equal")
    if nf1.k != nf2.k:
        return Certificate(nf1, nf2, Witness("component_count", str(nf1.k), str(nf2.k)))
    witness = invariant_battery(realize(nf1, base), realize(nf2, base))
    if witness is None:
        raise RuntimeError(f"no separating invariant for {nf1} vs {nf2}")
    return Certificate(nf1, nf2, witness)


@dataclass(frozen=True)
class AtlasRecord:
    phrase: EtalePhrase
    normal_form: NormalForm
    path: tuple


@dataclass(frozen=True)
class AtlasResult:
    records: tuple[AtlasRecord, ...]
    classes: tuple[NormalForm, ...]
    certificates: tuple[Certificate, ...]


def _count_vectors(k: int, total: int):
    for v in itertools.product(range(total + 1), repeat=k):
        if sum(v) == total:
            yield v


def enumerate_phrases(base: InvolutiveAlphabet, k: int):
    """All multiplicity-one-free identity-table phrases with <= 3 entries.

    Every such phrase uses a single symbol, so it is determined by the
    symbol and its per-component occurrence counts.
    """
    seen = []
    seen.append(identity_phrase(base, [()] * k))
    for symbol in base.symbols:
        for total in (2, 3):
            for v in _count_vectors(k, total):
                words = [(symbol,) * c for c in v]
                seen.append(identity_phrase(base, words))
    return seen


def atlas(base: InvolutiveAlphabet, k: int, budget: SearchBudget | None = None) -> AtlasResult:
    from .grammar import words_text

    records = []
    for p in enumerate_phrases(base, k):
        nf = classify_phrase(p)
        verdict: Verdict = homotopic_bounded(p, realize(nf, base), budget)
        if verdict.kind != "homotopic":
            raise RuntimeError(f"no move path found for {words_text(p)} -> {nf}")
        records.append(AtlasRecord(p, nf, verdict.path))
    records.sort(key=lambda r: words_text(r.phrase))
    classes = sorted({r.normal_form for r in records}, key=NormalForm.sort_key)
    certificates = [
        distinguish(a, b, base) for a, b in itertools.combinations(classes, 2)
    ]
    return AtlasResult(tuple(records), tuple(classes), tuple(certificates))
