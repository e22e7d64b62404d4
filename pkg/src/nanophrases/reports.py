"""Plain-text rendering of invariants, verdicts, and atlases.

Every report is a list of ``key = value`` lines with keys sorted, so
output is deterministic and greppable.  The CLI prints these directly;
the HTTP service returns them as a string map.
"""

from __future__ import annotations

from .classify import AtlasResult, NormalForm, classify_phrase
from .invariants import (
    component_length_vector,
    is_single_alphabet,
    is_swap_pair_alphabet,
    linking_vector,
    orbit_restriction,
    so_profile,
    t_mod2,
    t_signed,
)
from .moves import Verdict
from .phrases import EtalePhrase, Nanophrase, canonicalize, desingularize
from .grammar import words_text

__all__ = [
    "atlas_report",
    "classify_report",
    "invariant_report",
    "phrase_summary",
    "render_lines",
    "verdict_report",
    "verdict_text",
]


def render_lines(items: list[tuple[str, str]]) -> str:
    return "\n".join(f"{k} = {v}" for k, v in items)


def phrase_summary(p: EtalePhrase) -> list[tuple[str, str]]:
    return [
        ("components", str(p.k)),
        ("entries", str(p.entry_count)),
        ("gauss", "yes" if p.is_gauss() else "no"),
        ("letters", str(sum(1 for l in p.alphabet.letters if p.multiplicity(l)))),
    ]


def _restriction_text(sub: Nanophrase) -> str:
    # projections rendered inline so the value is self-contained
    key = canonicalize(sub)
    tokens: list[str] = []
    for code in key.occ:
        # proj is indexed by letter code, not by entry position
        tokens.append("|" if code == 0 else f"X{code}:{key.proj[code - 1]}")
    return " ".join(tokens) if tokens else "(empty)"


def invariant_report(
    p: EtalePhrase, restrict: tuple[tuple[str, ...], ...] = ()
) -> list[tuple[str, str]]:
    """Invariants of the desingularized phrase, one line per value.

    Each entry of `restrict` is a set of representative symbols; it adds
    a line with the canonical form of the corresponding restriction.
    """
    n = desingularize(p)
    base = n.alphabet.base
    items = [("w", str(component_length_vector(n)))]
    lk = linking_vector(n)
    for i in range(1, n.k + 1):
        for j in range(i + 1, n.k + 1):
            items.append((f"lk[({i},{j})]", str(lk.pair(i, j))))
    if is_swap_pair_alphabet(base):
        items.append(("T", str(t_signed(n))))
    if is_single_alphabet(base):
        items.append(("T", str(t_mod2(n))))
    for reps in restrict:
        label = ",".join(sorted(reps))
        items.append((f"UL[{label}]", _restriction_text(orbit_restriction(n, reps))))
    if is_single_alphabet(base):
        items.append(("So", str(so_profile(n))))
    return sorted(items)


def _move_text(move) -> str:
    return str(move)


def verdict_report(v: Verdict) -> list[tuple[str, str]]:
    items = [("verdict", v.kind)]
    if v.kind == "homotopic":
        items.append(("path_length", str(len(v.path))))
        for i, move in enumerate(v.path):
            items.append((f"path[{i}]", _move_text(move)))
    elif v.kind == "distinct":
        items.append(("witness", v.witness.invariant))
        items.append(("witness_left", v.witness.left))
        items.append(("witness_right", v.witness.right))
    elif v.reason:
        items.append(("reason", v.reason))
    return items


def verdict_text(v: Verdict) -> str:
    if v.kind == "homotopic":
        count = len(v.path)
        lines = [f"homotopic in {count} move" + ("s" if count != 1 else "")]
        lines += [f"  {i + 1}. {m}" for i, m in enumerate(v.path)]
        return "\n".join(lines)
    if v.kind == "distinct":
        w = v.witness
        return f"distinct: {w.invariant} separates ({w.left} vs {w.right})"
    return f"unknown ({v.reason})" if v.reason else "unknown"


def classify_report(p: EtalePhrase) -> list[tuple[str, str]]:
    nf = classify_phrase(p)
    items = [
        ("class", str(nf)),
        ("family", nf.family),
        ("k", str(nf.k)),
    ]
    if nf.symbol is not None:
        items.append(("symbol", nf.symbol))
        items.append(("spots", ",".join(str(s) for s in nf.spots)))
    return items


def atlas_report(result: AtlasResult) -> list[tuple[str, str]]:
    items = [("classes", str(len(result.classes)))]
    for i, nf in enumerate(result.classes):
        items.append((f"class[{i}]", str(nf)))
    for rec in result.records:
        text = words_text(rec.phrase) or "(empty)"
        count = len(rec.path)
        plural = "s" if count != 1 else ""
        items.append(
            (f"phrase[{text}]", f"{rec.normal_form} via {count} move{plural}")
        )
    for cert in result.certificates:
        items.append(
            (
                f"separates[{cert.left} / {cert.right}]",
                f"{cert.witness.invariant}: {cert.witness.left} != {cert.witness.right}",
            )
        )
    return items
