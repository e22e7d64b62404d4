"""Etale phrases and nanophrases over an involutive alphabet.

A letter table maps letter names onto alphabet symbols (the projection).
An etale phrase is a sequence of words in those letters, one word per
component; letters may occur any number of times, including zero.  A
nanophrase is the Gauss case: every declared letter occurs exactly twice
across the whole phrase.

Desingularization turns an etale phrase into a nanophrase: letters of
multiplicity m get replaced by the pair letters (A,i,j) for 1 <= i < j <= m
(serialized ``A_i_j``), each inheriting A's projection, and letters of
multiplicity <= 1 are dropped.  The i-th occurrence of A becomes

    A_1_i ... A_{i-1}_i A_i_{i+1} ... A_i_m

so the result has sum m(m-1) entries and is fixed (up to isomorphism) on
nanophrases, which makes the map idempotent.

Canonical keys rename letters by order of first occurrence in the flat
sequence (component separators kept), so two nanophrases over the same
alphabet are isomorphic iff their keys are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .alphabet import NAME_RE, InvolutiveAlphabet

__all__ = [
    "AlphaAlphabet",
    "CanonicalKey",
    "EtalePhrase",
    "Nanophrase",
    "canonicalize",
    "desingularize",
    "identity_phrase",
    "isomorphic",
    "phrase",
    "phrase_from_key",
]


@dataclass(frozen=True)
class AlphaAlphabet:
    """Letter table: ordered letter names with their projections to the base."""

    base: InvolutiveAlphabet
    letters: tuple[str, ...]
    targets: tuple[str, ...]

    def __post_init__(self):
        if len(self.letters) != len(self.targets):
            raise ValueError("letters and projection targets must align")
        seen = set()
        for name, target in zip(self.letters, self.targets):
            if not NAME_RE.match(name):
                raise ValueError(f"bad letter name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate letter {name!r}")
            seen.add(name)
            if target not in self.base:
                raise ValueError(f"letter {name!r} projects to unknown symbol {target!r}")

    @cached_property
    def _proj(self) -> dict[str, str]:
        return dict(zip(self.letters, self.targets))

    def __contains__(self, letter: str) -> bool:
        return letter in self._proj

    def projection(self, letter: str) -> str:
        try:
            return self._proj[letter]
        except KeyError:
            raise ValueError(f"unknown letter {letter!r}") from None

    @classmethod
    def identity(cls, base: InvolutiveAlphabet) -> "AlphaAlphabet":
        return cls(base, base.symbols, base.symbols)


@dataclass(frozen=True)
class EtalePhrase:
    """Words over a letter table; any occurrence multiplicities."""

    alphabet: AlphaAlphabet
    words: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if not self.words:
            raise ValueError("a phrase has at least one component")
        for word in self.words:
            for entry in word:
                if entry not in self.alphabet:
                    raise ValueError(f"undeclared letter {entry!r} in phrase")

    @property
    def k(self) -> int:
        return len(self.words)

    @cached_property
    def flat(self) -> tuple[str, ...]:
        return tuple(entry for word in self.words for entry in word)

    @property
    def entry_count(self) -> int:
        return len(self.flat)

    @cached_property
    def _counts(self) -> dict[str, int]:
        counts = {name: 0 for name in self.alphabet.letters}
        for entry in self.flat:
            counts[entry] += 1
        return counts

    def multiplicity(self, letter: str) -> int:
        if letter not in self.alphabet:
            raise ValueError(f"unknown letter {letter!r}")
        return self._counts[letter]

    def is_gauss(self) -> bool:
        return all(c == 2 for c in self._counts.values())

    def projection(self, letter: str) -> str:
        return self.alphabet.projection(letter)

    def as_nanophrase(self) -> "Nanophrase":
        return Nanophrase(self.alphabet, self.words)


class Nanophrase(EtalePhrase):
    """Etale phrase in which every declared letter occurs exactly twice."""

    def __post_init__(self):
        super().__post_init__()
        for name, count in self._counts.items():
            if count != 2:
                raise ValueError(
                    f"letter {name!r} occurs {count} times; a nanophrase needs exactly 2"
                )

    @cached_property
    def occurrences(self) -> dict[str, tuple[tuple[int, int], ...]]:
        """letter -> its two positions as (component index, offset), flat order."""
        out: dict[str, list[tuple[int, int]]] = {}
        for w, word in enumerate(self.words):
            for q, entry in enumerate(word):
                out.setdefault(entry, []).append((w, q))
        return {name: tuple(ps) for name, ps in out.items()}


def phrase(base: InvolutiveAlphabet, words, projections: dict[str, str]) -> EtalePhrase:
    """Etale phrase with an explicit letter table (declaration order of the dict)."""
    table = AlphaAlphabet(base, tuple(projections), tuple(projections.values()))
    return EtalePhrase(table, tuple(tuple(w) for w in words))


def identity_phrase(base: InvolutiveAlphabet, words) -> EtalePhrase:
    """Phrase whose letters are the alphabet symbols themselves."""
    return EtalePhrase(AlphaAlphabet.identity(base), tuple(tuple(w) for w in words))


def desingularize(p: EtalePhrase) -> Nanophrase:
    mult = {name: p.multiplicity(name) for name in p.alphabet.letters}
    seen: dict[str, int] = {name: 0 for name in p.alphabet.letters}
    words = []
    for word in p.words:
        out = []
        for entry in word:
            m = mult[entry]
            if m <= 1:
                continue
            seen[entry] += 1
            i = seen[entry]
            out.extend(f"{entry}_{j}_{i}" for j in range(1, i))
            out.extend(f"{entry}_{i}_{j}" for j in range(i + 1, m + 1))
        words.append(tuple(out))
    letters, targets = [], []
    for name in p.alphabet.letters:
        m = mult[name]
        target = p.alphabet.projection(name)
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                letters.append(f"{name}_{i}_{j}")
                targets.append(target)
    table = AlphaAlphabet(p.alphabet.base, tuple(letters), tuple(targets))
    return Nanophrase(table, tuple(words))


@dataclass(frozen=True)
class CanonicalKey:
    """Occurrence code (0 = separator, letters 1..n by first occurrence) plus
    the per-letter projection code.  Equal keys == isomorphic nanophrases."""

    occ: tuple[int, ...]
    proj: tuple[str, ...]

    def __post_init__(self):
        n = len(self.proj)
        counts = [0] * (n + 1)
        top = 0
        for c in self.occ:
            if c == 0:
                continue
            if not 1 <= c <= n:
                raise ValueError(f"occurrence code {c} out of range")
            if c == top + 1:
                top = c
            elif c > top:
                raise ValueError("letters must be numbered by first occurrence")
            counts[c] += 1
        if any(c != 2 for c in counts[1:]):
            raise ValueError("each letter must occur exactly twice")

    @property
    def k(self) -> int:
        return self.occ.count(0) + 1

    @property
    def letter_count(self) -> int:
        return len(self.proj)


def canonicalize(n: Nanophrase) -> CanonicalKey:
    number: dict[str, int] = {}
    occ: list[int] = []
    proj: list[str] = []
    for w, word in enumerate(n.words):
        if w:
            occ.append(0)
        for entry in word:
            i = number.get(entry)
            if i is None:
                proj.append(n.alphabet.projection(entry))
                i = number[entry] = len(proj)
            occ.append(i)
    return CanonicalKey(tuple(occ), tuple(proj))


def phrase_from_key(key: CanonicalKey, base: InvolutiveAlphabet) -> Nanophrase:
    names = tuple(f"X{i}" for i in range(1, key.letter_count + 1))
    words: list[tuple[str, ...]] = []
    current: list[str] = []
    for c in key.occ:
        if c == 0:
            words.append(tuple(current))
            current = []
        else:
            current.append(names[c - 1])
    words.append(tuple(current))
    table = AlphaAlphabet(base, names, key.proj)
    return Nanophrase(table, tuple(words))


def isomorphic(n1: Nanophrase, n2: Nanophrase) -> bool:
    """Letter-renaming equivalence over one and the same base alphabet."""
    if n1.alphabet.base != n2.alphabet.base:
        raise ValueError("phrases live over different alphabets")
    return canonicalize(n1) == canonicalize(n2)
