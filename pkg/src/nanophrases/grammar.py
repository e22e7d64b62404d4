"""Line-oriented text format for alphabets and phrases.

A document is, in order: an ``alpha:`` line naming the symbols, a ``tau:``
line giving the involution as parenthesized cycles (one-cycles may be
omitted), an optional ``letters:`` line declaring the letter table as
``NAME->symbol`` entries, and for phrase documents a ``phrase:`` line with
letter tokens separated by spaces and ``|`` between components.  Blank
lines and ``#`` comments are ignored.  Without a ``letters:`` line the
table is the identity on the symbols.

    alpha: a b
    tau: (a b)
    phrase: a b | b a

Serialization is canonical: single spaces, tau as two-cycles only in
representative order, the letters line omitted exactly when the table is
the identity on the whole alphabet.  parse(serialize(x)) == x for these.
"""

from __future__ import annotations

import re

from .alphabet import NAME_RE, InvolutiveAlphabet, make_alphabet
from .phrases import AlphaAlphabet, EtalePhrase

__all__ = [
    "ParseError",
    "parse_alphabet_document",
    "parse_document",
    "serialize_alphabet",
    "serialize_document",
    "words_text",
]

_GROUP_RE = re.compile(r"\(([^()]*)\)")
_ARROW_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)->([A-Za-z][A-Za-z0-9_]*)\Z")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _logical_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _take(lines, keyword: str, required: bool):
    if lines and lines[0][1].split(":", 1)[0].strip() == keyword:
        no, line = lines.pop(0)
        return no, line.split(":", 1)[1].strip()
    if required:
        where = lines[0][0] if lines else None
        raise ParseError(f"expected a '{keyword}:' line", where)
    return None


def _parse_alpha_tau(lines) -> InvolutiveAlphabet:
    no, body = _take(lines, "alpha", required=True)
    symbols = body.split()
    for s in symbols:
        if not NAME_RE.match(s):
            raise ParseError(f"bad symbol name {s!r}", no)
    tno, tbody = _take(lines, "tau", required=True)
    rest = _GROUP_RE.sub(" ", tbody).strip()
    if rest:
        raise ParseError(f"stray text {rest!r} outside cycles", tno)
    pairs = []
    for group in _GROUP_RE.findall(tbody):
        names = group.split()
        if len(names) == 1:
            continue  # explicit fixed point
        if len(names) != 2:
            raise ParseError(f"cycle ({group}) must name one or two symbols", tno)
        pairs.append((names[0], names[1]))
    try:
        return make_alphabet(symbols, pairs)
    except ValueError as e:
        raise ParseError(str(e), tno) from None


def parse_alphabet_document(text: str) -> InvolutiveAlphabet:
    lines = list(_logical_lines(text))
    base = _parse_alpha_tau(lines)
    if lines:
        raise ParseError(f"unexpected line {lines[0][1]!r}", lines[0][0])
    return base


def parse_document(text: str) -> tuple[InvolutiveAlphabet, EtalePhrase]:
    lines = list(_logical_lines(text))
    base = _parse_alpha_tau(lines)
    taken = _take(lines, "letters", required=False)
    if taken is not None:
        no, body = taken
        letters, targets = [], []
        for token in body.split():
            m = _ARROW_RE.match(token)
            if not m:
                raise ParseError(f"bad letter declaration {token!r}", no)
            letters.append(m.group(1))
            targets.append(m.group(2))
        try:
            table = AlphaAlphabet(base, tuple(letters), tuple(targets))
        except ValueError as e:
            raise ParseError(str(e), no) from None
    else:
        table = AlphaAlphabet.identity(base)
    pno, pbody = _take(lines, "phrase", required=True)
    if lines:
        raise ParseError(f"unexpected line {lines[0][1]!r}", lines[0][0])
    words: list[list[str]] = [[]]
    for token in pbody.split():
        if token == "|":
            words.append([])
        elif token in table:
            words[-1].append(token)
        else:
            raise ParseError(f"undeclared letter {token!r}", pno)
    return base, EtalePhrase(table, tuple(tuple(w) for w in words))


def serialize_alphabet(base: InvolutiveAlphabet) -> str:
    alpha = "alpha:" + "".join(" " + s for s in base.symbols)
    tau = "tau:" + "".join(f" ({r} {p})" for r, p in base.orbits.pairs)
    return alpha + "\n" + tau + "\n"


def words_text(p: EtalePhrase) -> str:
    tokens: list[str] = []
    for i, word in enumerate(p.words):
        if i:
            tokens.append("|")
        tokens.extend(word)
    return " ".join(tokens)


def serialize_document(p: EtalePhrase) -> str:
    out = serialize_alphabet(p.alphabet.base)
    identity = (
        p.alphabet.letters == p.alphabet.base.symbols
        and p.alphabet.targets == p.alphabet.base.symbols
    )
    if not identity:
        pairs = "".join(
            f" {l}->{t}" for l, t in zip(p.alphabet.letters, p.alphabet.targets)
        )
        out += "letters:" + pairs + "\n"
    body = words_text(p)
    return out + "phrase:" + (" " + body if body else "") + "\n"
