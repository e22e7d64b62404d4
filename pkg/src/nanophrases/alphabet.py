"""Involutive alphabets and the abelian group generated by their symbols.

An alphabet is a finite ordered set of symbol names together with an
involution tau.  Orbits of tau are either swapped pairs or fixed points;
each orbit gets a representative (its earliest-declared member) and the
representatives are listed with swapped pairs before fixed points.  That
ordering is deterministic given the declaration order and everything
downstream (group elements, reports, restriction sets) relies on it.

The symbols generate an abelian group with the relations s * tau(s) = 1.
Concretely that group is free abelian on the pair representatives times a
Z/2 factor per fixed point, so elements are stored as exponent vectors
over the representatives, with fixed-point exponents reduced mod 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

__all__ = [
    "NAME_RE",
    "InvolutiveAlphabet",
    "OrbitDecomposition",
    "PiElement",
    "PiGroup",
    "make_alphabet",
]

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class OrbitDecomposition:
    """Orbits of tau: swapped pairs as (representative, partner), then fixed points."""

    pairs: tuple[tuple[str, str], ...]
    fixed: tuple[str, ...]

    @property
    def crs(self) -> tuple[str, ...]:
        """Representatives, pair orbits first, in declaration order."""
        return tuple(r for r, _ in self.pairs) + self.fixed


@dataclass(frozen=True)
class InvolutiveAlphabet:
    """Ordered symbol set with an involution, compared by value."""

    symbols: tuple[str, ...]
    tau_targets: tuple[str, ...]  # tau_targets[i] == tau(symbols[i])

    def __post_init__(self):
        seen = set()
        for s in self.symbols:
            if not NAME_RE.match(s):
                raise ValueError(f"bad symbol name {s!r}")
            if s in seen:
                raise ValueError(f"duplicate symbol {s!r}")
            seen.add(s)
        if len(self.tau_targets) != len(self.symbols):
            raise ValueError("tau must cover every symbol exactly once")
        for s, t in zip(self.symbols, self.tau_targets):
            if t not in seen:
                raise ValueError(f"tau sends {s!r} to unknown symbol {t!r}")
            if self.tau(t) != s:
                raise ValueError(f"tau is not an involution at {s!r}")

    @cached_property
    def _tau(self) -> dict[str, str]:
        return dict(zip(self.symbols, self.tau_targets))

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._tau

    def tau(self, symbol: str) -> str:
        try:
            return self._tau[symbol]
        except KeyError:
            raise ValueError(f"unknown symbol {symbol!r}") from None

    @cached_property
    def orbits(self) -> OrbitDecomposition:
        pairs, fixed, placed = [], [], set()
        for s in self.symbols:
            if s in placed:
                continue
            t = self.tau(s)
            placed.update((s, t))
            if t == s:
                fixed.append(s)
            else:
                pairs.append((s, t))
        return OrbitDecomposition(tuple(pairs), tuple(fixed))

    @property
    def crs(self) -> tuple[str, ...]:
        return self.orbits.crs

    def restrict(self, keep: set[str] | frozenset[str]) -> "InvolutiveAlphabet":
        """Sub-alphabet on a tau-closed symbol set, declaration order kept."""
        for s in keep:
            if s not in self:
                raise ValueError(f"unknown symbol {s!r}")
            if self.tau(s) not in keep:
                raise ValueError(f"symbol set not closed under tau at {s!r}")
        syms = tuple(s for s in self.symbols if s in keep)
        return InvolutiveAlphabet(syms, tuple(self.tau(s) for s in syms))

    @cached_property
    def group(self) -> "PiGroup":
        return PiGroup(self)


def make_alphabet(symbols, pairs=()) -> InvolutiveAlphabet:
    """Build an alphabet from symbol names and two-cycles of tau.

    Symbols not mentioned in any pair are fixed points.

    >>> make_alphabet(["a", "b", "c"], [("a", "b")]).tau("c")
    'c'
    """
    symbols = tuple(symbols)
    tau = {s: s for s in symbols}
    used = set()
    for x, y in pairs:
        for s in (x, y):
            if s not in tau:
                raise ValueError(f"pair ({x} {y}) names unknown symbol {s!r}")
            if s in used:
                raise ValueError(f"symbol {s!r} appears in two pairs")
            used.add(s)
        if x == y:
            raise ValueError(f"pair ({x} {y}) repeats a symbol")
        tau[x], tau[y] = y, x
    return InvolutiveAlphabet(symbols, tuple(tau[s] for s in symbols))


@dataclass(frozen=True)
class PiElement:
    """Group element as a zero-free exponent vector over the representatives."""

    exps: tuple[tuple[str, int], ...]

    def is_unit(self) -> bool:
        return not self.exps

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return " ".join(r if e == 1 else f"{r}^{e}" for r, e in self.exps)


class PiGroup:
    """Arithmetic in the abelian group <symbols | s*tau(s)=1, commutativity>."""

    def __init__(self, alphabet: InvolutiveAlphabet):
        self.alphabet = alphabet
        orb = alphabet.orbits
        self._order = {r: i for i, r in enumerate(orb.crs)}
        self._fixed = set(orb.fixed)
        # symbol -> (representative, sign of exponent contribution)
        self._slot: dict[str, tuple[str, int]] = {}
        for r, p in orb.pairs:
            self._slot[r] = (r, 1)
            self._slot[p] = (r, -1)
        for r in orb.fixed:
            self._slot[r] = (r, 1)

    def _make(self, exps: dict[str, int]) -> PiElement:
        items = []
        for r in sorted(exps, key=self._order.__getitem__):
            e = exps[r] % 2 if r in self._fixed else exps[r]
            if e:
                items.append((r, e))
        return PiElement(tuple(items))

    def unit(self) -> PiElement:
        return PiElement(())

    def embed(self, symbol: str) -> PiElement:
        try:
            r, sign = self._slot[symbol]
        except KeyError:
            raise ValueError(f"unknown symbol {symbol!r}") from None
        return self._make({r: sign})

    def mul(self, x: PiElement, y: PiElement) -> PiElement:
        exps = dict(x.exps)
        for r, e in y.exps:
            exps[r] = exps.get(r, 0) + e
        return self._make(exps)

    def product(self, symbols) -> PiElement:
        out = self.unit()
        for s in symbols:
            out = self.mul(out, self.embed(s))
        return out

    def equal(self, x: PiElement, y: PiElement) -> bool:
        return x == y
