"""Homotopy invariants of nanophrases and the comparison battery.

All invariant functions take a nanophrase; etale phrases are compared by
desingularizing first (the battery does that internally).  Vectors are
indexed by component, 1-based in rendered output.

 - component_length_vector: per-component length mod 2.
 - linking_vector: for each component pair i < j, the product in the
   symbol group of the projections of letters split between i and j.
 - t_signed: per-component signed interlacement count over an alphabet of
   exactly two symbols swapped by tau.  The earlier-declared symbol is the
   plus sign; flipping the declaration order negates every entry.
 - t_mod2: the unsigned variant over a one-symbol alphabet.
 - so_profile: over a one-symbol alphabet, each letter A contained in one
   component gets a Z/2 vector l(A) whose j-th bit counts letters with one
   occurrence strictly between the two A's and the other occurrence in
   component j; per component, the profile keeps the nonzero vectors hit
   an odd number of times.
 - orbit_restriction: delete all letters whose projection lies outside the
   tau-closure of the chosen representatives; a nanophrase over the
   sub-alphabet, component count preserved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import PiElement
from .phrases import AlphaAlphabet, EtalePhrase, Nanophrase, desingularize

__all__ = [
    "LinkingVector",
    "SoProfile",
    "TVector",
    "component_length_vector",
    "invariant_battery",
    "is_single_alphabet",
    "is_swap_pair_alphabet",
    "linking_vector",
    "orbit_restriction",
    "so_profile",
    "t_mod2",
    "t_signed",
]


def is_swap_pair_alphabet(base) -> bool:
    return (
        len(base.symbols) == 2
        and base.tau(base.symbols[0]) == base.symbols[1]
        and base.symbols[0] != base.symbols[1]
    )


def is_single_alphabet(base) -> bool:
    return len(base.symbols) == 1


def component_length_vector(n: Nanophrase) -> tuple[int, ...]:
    return tuple(len(word) % 2 for word in n.words)


@dataclass(frozen=True)
class LinkingVector:
    k: int
    entries: tuple[PiElement, ...]  # pairs (1,2), (1,3), ..., lexicographic

    def pair(self, i: int, j: int) -> PiElement:
        if not 1 <= i < j <= self.k:
            raise ValueError(f"bad component pair ({i},{j})")
        # offset of (i,j) among lexicographically ordered pairs
        before = sum(self.k - m for m in range(1, i))
        return self.entries[before + (j - i - 1)]

    def __str__(self) -> str:
        if not self.entries:
            return "-"
        pairs = [(i, j) for i in range(1, self.k + 1) for j in range(i + 1, self.k + 1)]
        return " ".join(f"({i},{j})={e}" for (i, j), e in zip(pairs, self.entries))


def linking_vector(n: Nanophrase) -> LinkingVector:
    group = n.alphabet.base.group
    shared: dict[tuple[int, int], list[str]] = {}
    for letter, ((w1, _), (w2, _)) in n.occurrences.items():
        if w1 != w2:
            shared.setdefault((w1, w2), []).append(letter)
    entries = []
    for i in range(n.k):
        for j in range(i + 1, n.k):
            # product order does not matter: the group is abelian
            symbols = sorted(n.alphabet.projection(l) for l in shared.get((i, j), ()))
            entries.append(group.product(symbols))
    return LinkingVector(n.k, tuple(entries))


@dataclass(frozen=True)
class TVector:
    flavor: str  # "signed" | "mod2"
    values: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.values} [{self.flavor}]"


def _flat_occurrences(n: Nanophrase) -> dict[str, tuple[tuple[int, int], tuple[int, int]]]:
    """letter -> ((flat1, word1), (flat2, word2)) in flat order."""
    out: dict[str, list[tuple[int, int]]] = {}
    f = 0
    for w, word in enumerate(n.words):
        for entry in word:
            out.setdefault(entry, []).append((f, w))
            f += 1
    return {name: (ps[0], ps[1]) for name, ps in out.items()}


def t_signed(n: Nanophrase) -> TVector:
    base = n.alphabet.base
    if not is_swap_pair_alphabet(base):
        raise ValueError("t_signed needs exactly two symbols swapped by tau")
    plus = base.crs[0]
    occ = _flat_occurrences(n)
    proj = n.alphabet.projection
    values = [0] * n.k
    letters = list(occ)
    for a in letters:
        (a1, wa1), (a2, wa2) = occ[a]
        if wa1 != wa2:
            continue
        total = 0
        for b in letters:
            if b == a:
                continue
            (b1, _), (b2, _) = occ[b]
            if a1 < b1 < a2 < b2:
                total += 1 if proj(b) == plus else -1
            elif b1 < a1 < b2 < a2:
                total += -1 if proj(b) == plus else 1
        sign = 1 if proj(a) == plus else -1
        values[wa1] += sign * total
    return TVector("signed", tuple(values))


def t_mod2(n: Nanophrase) -> TVector:
    if not is_single_alphabet(n.alphabet.base):
        raise ValueError("t_mod2 needs a one-symbol alphabet")
    occ = _flat_occurrences(n)
    values = [0] * n.k
    letters = list(occ)
    for a in letters:
        (a1, wa1), (a2, wa2) = occ[a]
        if wa1 != wa2:
            continue
        total = 0
        for b in letters:
            if b == a:
                continue
            (b1, _), (b2, _) = occ[b]
            if a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2:
                total += 1
        values[wa1] = (values[wa1] + total) % 2
    return TVector("mod2", tuple(values))


@dataclass(frozen=True)
class SoProfile:
    sets: tuple[frozenset[tuple[int, ...]], ...]  # one set of Z/2 vectors per component

    def __str__(self) -> str:
        parts = []
        for s in self.sets:
            if not s:
                parts.append("{}")
            else:
                parts.append("{" + ", ".join(str(v) for v in sorted(s)) + "}")
        return " | ".join(parts)


def so_profile(n: Nanophrase) -> SoProfile:
    if not is_single_alphabet(n.alphabet.base):
        raise ValueError("so_profile needs a one-symbol alphabet")
    occ = _flat_occurrences(n)
    k = n.k
    counts: list[dict[tuple[int, ...], int]] = [dict() for _ in range(k)]
    letters = list(occ)
    for a in letters:
        (a1, wa1), (a2, wa2) = occ[a]
        if wa1 != wa2:
            continue
        vec = [0] * k
        for b in letters:
            if b == a:
                continue
            (b1, wb1), (b2, wb2) = occ[b]
            in1 = a1 < b1 < a2
            in2 = a1 < b2 < a2
            if in1 != in2:
                j = wb2 if in1 else wb1  # component of the occurrence outside y
                vec[j] ^= 1
        v = tuple(vec)
        if any(v):
            slot = counts[wa1]
            slot[v] = slot.get(v, 0) + 1
    sets = tuple(
        frozenset(v for v, c in slot.items() if c % 2) for slot in counts
    )
    return SoProfile(sets)


def orbit_restriction(n: Nanophrase, reps) -> Nanophrase:
    """Delete letters projecting outside the tau-closure of `reps`."""
    base = n.alphabet.base
    crs = set(base.crs)
    keep: set[str] = set()
    for r in reps:
        if r not in crs:
            raise ValueError(f"{r!r} is not an orbit representative")
        keep.add(r)
        keep.add(base.tau(r))
    sub = base.restrict(keep)
    kept = [
        (l, t) for l, t in zip(n.alphabet.letters, n.alphabet.targets) if t in keep
    ]
    table_letters = tuple(l for l, _ in kept)
    table = AlphaAlphabet(sub, table_letters, tuple(t for _, t in kept))
    names = set(table_letters)
    words = tuple(tuple(e for e in word if e in names) for word in n.words)
    return Nanophrase(table, words)


def _value_witness(name: str, left, right):
    if left != right:
        from .moves import Witness

        return Witness(name, str(left), str(right))
    return None


def _shape_checks(n1: Nanophrase, n2: Nanophrase, prefix: str):
    """Compare w/lk and, when the alphabet shape allows, T and So."""
    base = n1.alphabet.base
    checks = [
        (prefix + "w", component_length_vector),
        (prefix + "lk", linking_vector),
    ]
    if is_swap_pair_alphabet(base):
        checks.append((prefix + "T", t_signed))
    if is_single_alphabet(base):
        checks.append((prefix + "T", t_mod2))
        checks.append((prefix + "So", so_profile))
    for name, fn in checks:
        w = _value_witness(name, fn(n1), fn(n2))
        if w is not None:
            return w
    return None


def _crs_subsets(crs: tuple[str, ...]):
    m = len(crs)
    masks = sorted(range(1, 1 << m), key=lambda x: (bin(x).count("1"), x))
    for mask in masks:
        yield tuple(crs[i] for i in range(m) if mask >> i & 1)


def invariant_battery(p1: EtalePhrase, p2: EtalePhrase):
    """First separating invariant between two etale phrases, or None.

    Order: w, lk, T, So on the desingularizations; then componentwise word
    classes of the original phrases where the short-word theorem applies;
    then every orbit restriction, each compared by its own w/lk/T/So.
    """
    if p1.alphabet.base != p2.alphabet.base:
        raise ValueError("phrases live over different alphabets")
    if p1.k != p2.k:
        raise ValueError("battery needs equal component counts")
    n1, n2 = desingularize(p1), desingularize(p2)
    w = _shape_checks(n1, n2, "")
    if w is not None:
        return w
    from .classify import component_word_class
    from .moves import Witness

    for i in range(1, p1.k + 1):
        c1 = component_word_class(p1, i)
        c2 = component_word_class(p2, i)
        if c1 is not None and c2 is not None and c1 != c2:
            return Witness(f"word_class[{i}]", str(c1), str(c2))
    for reps in _crs_subsets(p1.alphabet.base.crs):
        label = ",".join(reps)
        w = _shape_checks(
            orbit_restriction(n1, reps),
            orbit_restriction(n2, reps),
            f"UL[{label}].",
        )
        if w is not None:
            return w
    return None
