"""Homotopy moves on nanophrases and bounded equivalence search.

Moves are purely positional: an application names the (component, offset)
start of each touched two-entry block, plus a projection symbol for
insertions.  The three shapes, with x, y, z, t arbitrary (separators
allowed) and every designated pair adjacent within one component:

  m1  x A A y          <->  x y
  m2  x A B y B A z    <->  x y z         when |B| = tau(|A|)
  m3  x A B y A C z B C t  <->  x B A y C A z C B t   when |A| = |B| = |C|

Deletions/rewrites are m1_del, m2_del, m3_fwd, m3_bwd; insertions are
m1_ins and m2_ins and carry the projection of the fresh letters.  Because
applications never name letters, a move recorded against one phrase can be
replayed on any isomorphic phrase with the same word layout, which is what
lets the search operate on canonical keys.

Two etale phrases are compared with homotopic_bounded: equal component
counts are required, the invariant battery runs first (a mismatch is a
final Distinct), and otherwise a bidirectional breadth-first search over
canonical keys of the desingularizations looks for a move path, deepening
iteratively on the letter cap so growth moves only join once the
no-growth space is exhausted.  States are expanded with _expand, a
tuple-level twin of find_moves/apply_move/canonicalize kept fast enough
for six-figure state counts; the two are pinned together by a
differential test.  Unknown is returned only when the budget runs out.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import InvolutiveAlphabet
from .phrases import (
    AlphaAlphabet,
    CanonicalKey,
    EtalePhrase,
    Nanophrase,
    canonicalize,
    desingularize,
    phrase_from_key,
)

__all__ = [
    "MoveApplication",
    "SearchBudget",
    "StaleMoveError",
    "Verdict",
    "Witness",
    "apply_move",
    "contract_bounded",
    "find_moves",
    "homotopic_bounded",
    "invert_move",
    "replay_path",
]

MOVE_KINDS = ("m1_del", "m1_ins", "m2_del", "m2_ins", "m3_bwd", "m3_fwd")


class StaleMoveError(ValueError):
    """The phrase no longer matches the move's pattern at its positions."""


@dataclass(frozen=True)
class MoveApplication:
    kind: str
    positions: tuple[tuple[int, int], ...]
    symbol: str | None = None

    def __post_init__(self):
        if self.kind not in MOVE_KINDS:
            raise ValueError(f"unknown move kind {self.kind!r}")
        arity = {"m1_del": 1, "m1_ins": 1, "m2_del": 2, "m2_ins": 2, "m3_fwd": 3, "m3_bwd": 3}
        if len(self.positions) != arity[self.kind]:
            raise ValueError(f"{self.kind} takes {arity[self.kind]} positions")
        if self.kind.endswith("_ins") != (self.symbol is not None):
            raise ValueError("insertions and only insertions carry a symbol")

    def __str__(self) -> str:
        pos = " ".join(f"({w},{q})" for w, q in self.positions)
        return f"{self.kind} @ {pos}" + (f" [{self.symbol}]" if self.symbol else "")


@dataclass(frozen=True)
class Witness:
    """A separating invariant with the two rendered values."""

    invariant: str
    left: str
    right: str


@dataclass(frozen=True)
class Verdict:
    kind: str  # "homotopic" | "distinct" | "unknown"
    path: tuple[MoveApplication, ...] | None = None
    witness: Witness | None = None
    reason: str | None = None  # set for "unknown" verdicts only

    @classmethod
    def homotopic(cls, path) -> "Verdict":
        return cls("homotopic", path=tuple(path))

    @classmethod
    def distinct(cls, witness: Witness) -> "Verdict":
        return cls("distinct", witness=witness)

    @classmethod
    def unknown(cls, reason: str = "budget_exhausted") -> "Verdict":
        return cls("unknown", reason=reason)


@dataclass(frozen=True)
class SearchBudget:
    """Caps for the bounded search; max_letters=None means entries/2 + 4."""

    max_letters: int | None = None
    max_states: int = 2_000_000
    max_depth: int = 64


def _flat_positions(n: Nanophrase) -> tuple[list[tuple[int, int, str]], dict[tuple[int, int], int]]:
    flat = []
    index = {}
    for w, word in enumerate(n.words):
        for q, entry in enumerate(word):
            index[(w, q)] = len(flat)
            flat.append((w, q, entry))
    return flat, index


def find_moves(n: Nanophrase, max_letters: int | None = None) -> list[MoveApplication]:
    """Every applicable move, sorted by (kind, positions, symbol).

    Insertions are enumerated only while they keep the letter count within
    max_letters (None = no insertions at all is *not* implied: None means
    no cap).
    """
    base = n.alphabet.base
    tau = base.tau
    proj = n.alphabet.projection
    flat, index = _flat_positions(n)
    occ = n.occurrences
    moves: list[MoveApplication] = []

    def other(letter: str, not_at: tuple[int, int]) -> tuple[int, int]:
        a, b = occ[letter]
        return b if a == not_at else a

    # blocks: adjacent entry pairs within one component
    blocks = [
        (w, q)
        for w, word in enumerate(n.words)
        for q in range(len(word) - 1)
    ]

    for w, q in blocks:
        a, b = n.words[w][q], n.words[w][q + 1]
        if a == b:
            moves.append(MoveApplication("m1_del", ((w, q),)))
            continue
        if proj(b) == tau(proj(a)):
            # other occurrences must form the adjacent reversed block, later on
            ob, oa = other(b, (w, q + 1)), other(a, (w, q))
            if ob[0] == oa[0] and oa[1] == ob[1] + 1 and index[ob] > index[(w, q)] + 1:
                moves.append(MoveApplication("m2_del", ((w, q), ob)))

    for letter, (p1, p2) in occ.items():
        pa = proj(letter)
        w1, q1 = p1
        w2, q2 = p2
        # forward shape: (A B)(A C)(B C) reading the two A-occurrences as block starts
        if q1 + 1 < len(n.words[w1]) and q2 + 1 < len(n.words[w2]):
            b, c = n.words[w1][q1 + 1], n.words[w2][q2 + 1]
            if proj(b) == pa and proj(c) == pa and b != c:
                ob, oc = other(b, (w1, q1 + 1)), other(c, (w2, q2 + 1))
                if (
                    ob[0] == oc[0]
                    and oc[1] == ob[1] + 1
                    and index[ob] > index[p2] + 1
                ):
                    moves.append(MoveApplication("m3_fwd", (p1, p2, ob)))
        # backward shape: (B A)(C A)(C B) reading them as block ends
        if q1 >= 1 and q2 >= 1:
            b, c = n.words[w1][q1 - 1], n.words[w2][q2 - 1]
            if proj(b) == pa and proj(c) == pa and b != c:
                ob, oc = other(b, (w1, q1 - 1)), other(c, (w2, q2 - 1))
                if ob[0] == oc[0] and ob[1] == oc[1] + 1 and index[oc] > index[p2]:
                    moves.append(
                        MoveApplication("m3_bwd", ((w1, q1 - 1), (w2, q2 - 1), oc))
                    )

    letters_now = len(n.alphabet.letters)
    slots = [(w, s) for w, word in enumerate(n.words) for s in range(len(word) + 1)]
    if max_letters is None or letters_now + 1 <= max_letters:
        for slot in slots:
            for s in base.symbols:
                moves.append(MoveApplication("m1_ins", (slot,), s))
    if max_letters is None or letters_now + 2 <= max_letters:
        for i, s1 in enumerate(slots):
            for s2 in slots[i:]:
                for s in base.symbols:
                    moves.append(MoveApplication("m2_ins", (s1, s2), s))

    moves.sort(key=lambda m: (m.kind, m.positions, m.symbol or ""))
    return moves


def _fresh_names(taken, count: int) -> list[str]:
    out, i = [], 1
    while len(out) < count:
        name = f"N{i}"
        if name not in taken:
            out.append(name)
        i += 1
    return out


def _entry_at(n: Nanophrase, pos: tuple[int, int]) -> str:
    w, q = pos
    if not (0 <= w < n.k and 0 <= q < len(n.words[w])):
        raise StaleMoveError(f"no entry at {pos}")
    return n.words[w][q]


def _block_at(n: Nanophrase, pos: tuple[int, int]) -> tuple[str, str]:
    w, q = pos
    if not (0 <= w < n.k and 0 <= q + 1 < len(n.words[w])):
        raise StaleMoveError(f"no adjacent pair at {pos}")
    return n.words[w][q], n.words[w][q + 1]


def _drop_letters(table: AlphaAlphabet, names: set[str]) -> AlphaAlphabet:
    kept = [(l, t) for l, t in zip(table.letters, table.targets) if l not in names]
    return AlphaAlphabet(table.base, tuple(l for l, _ in kept), tuple(t for _, t in kept))


def _ordered(n: Nanophrase, first: tuple[int, int], second: tuple[int, int], gap: int) -> bool:
    """second starts at least `gap` entries after first, in flat order."""
    _, index = _flat_positions(n)
    return index[second] >= index[first] + gap


def apply_move(n: Nanophrase, move: MoveApplication) -> Nanophrase:
    """Replay a move; raises StaleMoveError if the pattern does not match."""
    base = n.alphabet.base
    tau = base.tau
    proj = n.alphabet.projection
    words = [list(word) for word in n.words]

    if move.kind == "m1_del":
        (pos,) = move.positions
        a, b = _block_at(n, pos)
        if a != b:
            raise StaleMoveError(f"entries at {pos} differ")
        w, q = pos
        del words[w][q : q + 2]
        table = _drop_letters(n.alphabet, {a})
        return Nanophrase(table, tuple(tuple(x) for x in words))

    if move.kind == "m2_del":
        pos1, pos2 = move.positions
        a, b = _block_at(n, pos1)
        b2, a2 = _block_at(n, pos2)
        if a == b or a2 != a or b2 != b:
            raise StaleMoveError("second block is not the reversed pair")
        if proj(b) != tau(proj(a)):
            raise StaleMoveError("projections are not tau-paired")
        if not _ordered(n, pos1, pos2, 2):
            raise StaleMoveError("blocks out of order")
        (w1, q1), (w2, q2) = pos1, pos2
        del words[w2][q2 : q2 + 2]
        del words[w1][q1 : q1 + 2]
        table = _drop_letters(n.alphabet, {a, b})
        return Nanophrase(table, tuple(tuple(x) for x in words))

    if move.kind in ("m3_fwd", "m3_bwd"):
        pos1, pos2, pos3 = move.positions
        x1, y1 = _block_at(n, pos1)
        x2, y2 = _block_at(n, pos2)
        x3, y3 = _block_at(n, pos3)
        if move.kind == "m3_fwd":
            ok = x1 == x2 and y3 == y2 and x3 == y1 and len({x1, y1, y2}) == 3
        else:
            ok = y1 == y2 and x3 == x2 and y3 == x1 and len({x1, y1, x2}) == 3
        if not ok:
            raise StaleMoveError("blocks do not share letters in the move-3 shape")
        letters3 = {x1, y1, x2, y2, x3, y3}
        if len({proj(l) for l in letters3}) != 1:
            raise StaleMoveError("move-3 letters must share one projection")
        if not (_ordered(n, pos1, pos2, 2) and _ordered(n, pos2, pos3, 2)):
            raise StaleMoveError("blocks out of order")
        for w, q in move.positions:
            words[w][q], words[w][q + 1] = words[w][q + 1], words[w][q]
        return Nanophrase(n.alphabet, tuple(tuple(x) for x in words))

    if move.symbol not in base:
        raise StaleMoveError(f"unknown symbol {move.symbol!r}")

    if move.kind == "m1_ins":
        ((w, s),) = move.positions
        if not (0 <= w < n.k and 0 <= s <= len(words[w])):
            raise StaleMoveError(f"no slot ({w},{s})")
        (name,) = _fresh_names(n.alphabet._proj, 1)
        words[w][s:s] = [name, name]
        table = AlphaAlphabet(
            base, n.alphabet.letters + (name,), n.alphabet.targets + (move.symbol,)
        )
        return Nanophrase(table, tuple(tuple(x) for x in words))

    # m2_ins
    (w1, s1), (w2, s2) = move.positions
    for w, s in move.positions:
        if not (0 <= w < n.k and 0 <= s <= len(words[w])):
            raise StaleMoveError(f"no slot ({w},{s})")
    if (w2, s2) < (w1, s1):
        raise StaleMoveError("slots out of order")
    na, nb = _fresh_names(n.alphabet._proj, 2)
    words[w2][s2:s2] = [nb, na]
    words[w1][s1:s1] = [na, nb]
    table = AlphaAlphabet(
        base,
        n.alphabet.letters + (na, nb),
        n.alphabet.targets + (move.symbol, base.tau(move.symbol)),
    )
    return Nanophrase(table, tuple(tuple(x) for x in words))


def replay_path(p: EtalePhrase, path) -> Nanophrase:
    """Replay a verdict path from p's canonical desingularization.

    Each step is applied to the canonical realization of the previous
    result, which is the coordinate system paths are recorded in.
    """
    base = p.alphabet.base
    node = phrase_from_key(canonicalize(desingularize(p)), base)
    for move in path:
        node = phrase_from_key(canonicalize(apply_move(node, move)), base)
    return node


def invert_move(before: Nanophrase, move: MoveApplication) -> MoveApplication:
    """The move that undoes `move`, in coordinates of the result phrase."""
    if move.kind == "m1_del":
        (pos,) = move.positions
        return MoveApplication("m1_ins", (pos,), before.projection(_entry_at(before, pos)))
    if move.kind == "m1_ins":
        return MoveApplication("m1_del", move.positions)
    if move.kind == "m2_del":
        (w1, q1), (w2, q2) = move.positions
        sym = before.projection(_entry_at(before, (w1, q1)))
        s2 = q2 - 2 if w1 == w2 else q2
        return MoveApplication("m2_ins", ((w1, q1), (w2, s2)), sym)
    if move.kind == "m2_ins":
        (w1, s1), (w2, s2) = move.positions
        q2 = s2 + 2 if w1 == w2 else s2
        return MoveApplication("m2_del", ((w1, s1), (w2, q2)))
    return MoveApplication("m3_bwd" if move.kind == "m3_fwd" else "m3_fwd", move.positions)


def _effective_letter_cap(budget: SearchBudget, n1: Nanophrase, n2: Nanophrase) -> int:
    floor = max(len(n1.alphabet.letters), len(n2.alphabet.letters))
    if budget.max_letters is not None:
        return max(budget.max_letters, floor)
    entries = max(n1.entry_count, n2.entry_count)
    return max(entries // 2 + 4, floor)


# A search state is a canonical key as plain tuples: (occ, proj), occ with
# 0 separators and letters numbered by first occurrence, proj[code - 1]
# the projection symbol.  _expand mirrors find_moves + apply_move +
# canonicalize on these tuples; the dataclass pipeline is too slow for
# the state counts the search visits.

_State = tuple[tuple[int, ...], tuple[str, ...]]


def _renumber(seq: list[int], proj: list[str]) -> _State:
    mapping = [0] * (len(proj) + 1)
    occ_out: list[int] = []
    proj_out: list[str] = []
    nxt = 1
    for code in seq:
        if code == 0:
            occ_out.append(0)
            continue
        m = mapping[code]
        if not m:
            mapping[code] = m = nxt
            nxt += 1
            proj_out.append(proj[code - 1])
        occ_out.append(m)
    return tuple(occ_out), tuple(proj_out)


def _expand(
    state: _State,
    base: InvolutiveAlphabet,
    letter_cap: int,
    symbols: tuple[str, ...] | None = None,
):
    """(move data, child state) pairs; move data = (kind, positions, symbol).

    `symbols` narrows which projections insertions may introduce; None
    means all of them (the find_moves behaviour).
    """
    occ, proj = state
    f = list(occ)
    size = len(f)
    nletters = len(proj)
    tau = base.tau
    ins_symbols = base.symbols if symbols is None else symbols
    ext = list(proj)

    wq: list[tuple[int, int] | None] = [None] * size
    slots: list[tuple[int, int, int]] = []  # (word, offset, flat insert point)
    pos_of: dict[int, list[int]] = {}
    w = q = 0
    for i, code in enumerate(f):
        if code == 0:
            slots.append((w, q, i))
            w += 1
            q = 0
            continue
        wq[i] = (w, q)
        slots.append((w, q, i))
        pos_of.setdefault(code, []).append(i)
        q += 1
    slots.append((w, q, size))

    def other(code: int, not_at: int) -> int:
        i1, i2 = pos_of[code]
        return i2 if i1 == not_at else i1

    out = []

    for i in range(size - 1):
        a, b = f[i], f[i + 1]
        if not a or not b:
            continue
        if a == b:
            out.append((("m1_del", (wq[i],), None), _renumber(f[:i] + f[i + 2 :], ext)))
            continue
        if proj[b - 1] == tau(proj[a - 1]):
            ob, oa = other(b, i + 1), other(a, i)
            if oa == ob + 1 and ob > i + 1:
                child = _renumber(f[:i] + f[i + 2 : ob] + f[ob + 2 :], ext)
                out.append((("m2_del", (wq[i], wq[ob]), None), child))

    for code, (p1, p2) in pos_of.items():
        pa = proj[code - 1]
        if p1 + 1 < size and f[p1 + 1] and p2 + 1 < size and f[p2 + 1]:
            b, c = f[p1 + 1], f[p2 + 1]
            if b != c and proj[b - 1] == pa and proj[c - 1] == pa:
                ob, oc = other(b, p1 + 1), other(c, p2 + 1)
                if oc == ob + 1 and ob > p2 + 1:
                    g = list(f)
                    for s in (p1, p2, ob):
                        g[s], g[s + 1] = g[s + 1], g[s]
                    out.append(
                        (("m3_fwd", (wq[p1], wq[p2], wq[ob]), None), _renumber(g, ext))
                    )
        if p1 >= 1 and f[p1 - 1] and p2 >= 1 and f[p2 - 1]:
            b, c = f[p1 - 1], f[p2 - 1]
            if b != c and proj[b - 1] == pa and proj[c - 1] == pa:
                ob, oc = other(b, p1 - 1), other(c, p2 - 1)
                if ob == oc + 1 and oc > p2:
                    g = list(f)
                    for s in (p1 - 1, p2 - 1, oc):
                        g[s], g[s + 1] = g[s + 1], g[s]
                    out.append(
                        (
                            ("m3_bwd", (wq[p1 - 1], wq[p2 - 1], wq[oc]), None),
                            _renumber(g, ext),
                        )
                    )

    if nletters + 1 <= letter_cap:
        t = nletters + 1
        for w, s, fp in slots:
            ins = f[:fp] + [t, t] + f[fp:]
            for sym in ins_symbols:
                out.append(
                    (("m1_ins", ((w, s),), sym), _renumber(ins, ext + [sym]))
                )
    if nletters + 2 <= letter_cap:
        ta, tb = nletters + 1, nletters + 2
        for x in range(len(slots)):
            w1, s1, fp1 = slots[x]
            for y in range(x, len(slots)):
                w2, s2, fp2 = slots[y]
                ins = f[:fp1] + [ta, tb] + f[fp1:fp2] + [tb, ta] + f[fp2:]
                for sym in ins_symbols:
                    child = _renumber(ins, ext + [sym, tau(sym)])
                    out.append((("m2_ins", ((w1, s1), (w2, s2)), sym), child))
    return out


@dataclass
class _SearchState:
    states_left: int


def _as_key(state: _State) -> CanonicalKey:
    return CanonicalKey(state[0], state[1])


def _reconstruct(meet: _State, visited_f, visited_b, base) -> list[MoveApplication]:
    path: list[MoveApplication] = []
    state = meet
    while True:
        parent, move = visited_f[state]
        if parent is None:
            break
        path.append(MoveApplication(*move))
        state = parent
    path.reverse()
    state = meet
    while True:
        parent, move = visited_b[state]
        if parent is None:
            break
        before = phrase_from_key(_as_key(parent), base)
        path.append(invert_move(before, MoveApplication(*move)))
        state = parent
    return path


def _bidirectional(
    state1: _State,
    state2: _State,
    base: InvolutiveAlphabet,
    letter_cap: int,
    search: _SearchState,
    max_depth: int,
    symbols: tuple[str, ...],
):
    """Returns ("found", path) | ("closed",) | ("budget",)."""
    visited_f: dict[_State, tuple] = {state1: (None, None)}
    visited_b: dict[_State, tuple] = {state2: (None, None)}
    frontier_f, frontier_b = [state1], [state2]
    depth = 0
    while frontier_f and frontier_b:
        if depth >= max_depth:
            return ("budget",)
        forward = len(frontier_f) <= len(frontier_b)
        frontier = frontier_f if forward else frontier_b
        visited_own = visited_f if forward else visited_b
        visited_other = visited_b if forward else visited_f
        next_frontier: list[_State] = []
        for state in frontier:
            for move, child in _expand(state, base, letter_cap, symbols):
                if child in visited_own:
                    continue
                visited_own[child] = (state, move)
                search.states_left -= 1
                if child in visited_other:
                    return ("found", _reconstruct(child, visited_f, visited_b, base))
                if search.states_left <= 0:
                    return ("budget",)
                next_frontier.append(child)
        if forward:
            frontier_f = next_frontier
        else:
            frontier_b = next_frontier
        depth += 1
    return ("closed",)


def homotopic_bounded(
    p1: EtalePhrase, p2: EtalePhrase, budget: SearchBudget | None = None
) -> Verdict:
    """Decide homotopy of two etale phrases over one alphabet, within a budget.

    Homotopic verdicts carry a replayable move path between the canonical
    desingularizations; replay each move against the canonical realization
    of the current key.  Distinct verdicts carry an invariant witness and
    are final; Unknown only reports budget exhaustion.
    """
    if p1.alphabet.base != p2.alphabet.base:
        raise ValueError("phrases live over different alphabets")
    if p1.k != p2.k:
        return Verdict.distinct(Witness("component_count", str(p1.k), str(p2.k)))
    from .invariants import invariant_battery

    witness = invariant_battery(p1, p2)
    if witness is not None:
        return Verdict.distinct(witness)
    budget = budget or SearchBudget()
    n1, n2 = desingularize(p1), desingularize(p2)
    key1, key2 = canonicalize(n1), canonicalize(n2)
    if key1 == key2:
        return Verdict.homotopic(())
    base = p1.alphabet.base
    cap = _effective_letter_cap(budget, n1, n2)
    floor = max(key1.letter_count, key2.letter_count)
    search = _SearchState(states_left=budget.max_states)
    s1, s2 = (key1.occ, key1.proj), (key2.occ, key2.proj)
    # Deepen on the letter cap, so growth moves only join once the smaller
    # spaces are exhausted, and on the insertion symbols: paths usually
    # stay inside the tau-closure of the symbols the endpoints mention,
    # and that subspace is far smaller.  Neither pass changes verdicts;
    # restricted layers that close just fall through to wider ones.
    present = {s for s in key1.proj} | {t for t in key2.proj}
    closure = tuple(s for s in base.symbols if s in present or base.tau(s) in present)
    rounds = [closure, base.symbols] if closure != base.symbols else [base.symbols]
    for symbols in rounds:
        for letters in range(floor, cap + 1):
            outcome = _bidirectional(
                s1, s2, base, letters, search, budget.max_depth, symbols
            )
            if outcome[0] == "found":
                return Verdict.homotopic(outcome[1])
            if outcome[0] == "budget":
                return Verdict.unknown("budget_exhausted")
    return Verdict.unknown("search_closed")


def contract_bounded(p: EtalePhrase, budget: SearchBudget | None = None) -> Verdict:
    """Compare against the empty phrase with the same component count."""
    empty = EtalePhrase(
        AlphaAlphabet(p.alphabet.base, (), ()), tuple(() for _ in range(p.k))
    )
    return homotopic_bounded(p, empty, budget)
