"""HTTP service wrapping the library.

Every endpoint takes documents in the same text grammar the CLI reads,
so the two surfaces stay interchangeable.  Input grammar problems map to
422, domain errors (mismatched alphabets, unclassifiable phrases) to 400.
"""

from __future__ import annotations

import functools

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .classify import atlas, classify_phrase
from .grammar import (
    ParseError,
    parse_alphabet_document,
    parse_document,
    serialize_document,
    words_text,
)
from .moves import SearchBudget, Verdict, contract_bounded, homotopic_bounded
from .phrases import desingularize
from .reports import invariant_report

app = FastAPI(
    title="nanophrases",
    description="Homotopy of words and phrases over involutive alphabets.",
    version="0.1.0",
)


class BudgetIn(BaseModel):
    max_letters: int | None = None
    max_states: int | None = None
    max_depth: int | None = None

    def to_budget(self) -> SearchBudget:
        default = SearchBudget()
        return SearchBudget(
            max_letters=self.max_letters,
            max_states=self.max_states or default.max_states,
            max_depth=self.max_depth or default.max_depth,
        )


class DocumentIn(BaseModel):
    document: str


class InvariantsIn(BaseModel):
    document: str
    restrict: list[list[str]] = Field(default_factory=list)


class PairIn(BaseModel):
    left: str
    right: str
    budget: BudgetIn | None = None


class ReduceIn(BaseModel):
    document: str
    budget: BudgetIn | None = None


class AtlasIn(BaseModel):
    alphabet: str
    k: int = Field(ge=1)
    budget: BudgetIn | None = None


class ParseOut(BaseModel):
    canonical: str
    components: int
    entries: int
    gauss: bool


class ReportOut(BaseModel):
    report: dict[str, str]


class WitnessOut(BaseModel):
    invariant: str
    left: str
    right: str


class VerdictOut(BaseModel):
    verdict: str
    path: list[str] | None = None
    witness: WitnessOut | None = None
    reason: str | None = None


class ClassifyOut(BaseModel):
    text: str
    family: str
    components: int
    symbol: str | None = None
    spots: list[int] = Field(default_factory=list)


class AtlasRecordOut(BaseModel):
    phrase: str
    normal_form: str
    path_length: int


class CertificateOut(BaseModel):
    left: str
    right: str
    invariant: str
    left_value: str
    right_value: str


class AtlasOut(BaseModel):
    class_count: int
    classes: list[str]
    records: list[AtlasRecordOut]
    certificates: list[CertificateOut]


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ParseError as e:
            raise HTTPException(status_code=422, detail=str(e)) from None
        except (ValueError, RuntimeError) as e:
            raise HTTPException(status_code=400, detail=str(e)) from None

    return wrapper


def _verdict_out(v: Verdict) -> VerdictOut:
    out = VerdictOut(verdict=v.kind, reason=v.reason)
    if v.kind == "homotopic":
        out.path = [str(m) for m in v.path]
    elif v.kind == "distinct":
        out.witness = WitnessOut(
            invariant=v.witness.invariant, left=v.witness.left, right=v.witness.right
        )
    return out


def _budget_of(model: BudgetIn | None) -> SearchBudget:
    return (model or BudgetIn()).to_budget()


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok"}


@app.post("/parse", response_model=ParseOut)
@_guarded
def parse_endpoint(body: DocumentIn) -> ParseOut:
    _, phrase = parse_document(body.document)
    return ParseOut(
        canonical=serialize_document(phrase),
        components=phrase.k,
        entries=phrase.entry_count,
        gauss=phrase.is_gauss(),
    )


@app.post("/desingularize", response_model=ParseOut)
@_guarded
def desingularize_endpoint(body: DocumentIn) -> ParseOut:
    _, phrase = parse_document(body.document)
    nano = desingularize(phrase)
    return ParseOut(
        canonical=serialize_document(nano),
        components=nano.k,
        entries=nano.entry_count,
        gauss=True,
    )


@app.post("/invariants", response_model=ReportOut)
@_guarded
def invariants_endpoint(body: InvariantsIn) -> ReportOut:
    _, phrase = parse_document(body.document)
    sets = tuple(tuple(s) for s in body.restrict)
    return ReportOut(report=dict(invariant_report(phrase, sets)))


@app.post("/homotopic", response_model=VerdictOut)
@_guarded
def homotopic_endpoint(body: PairIn) -> VerdictOut:
    _, p1 = parse_document(body.left)
    _, p2 = parse_document(body.right)
    return _verdict_out(homotopic_bounded(p1, p2, _budget_of(body.budget)))


@app.post("/reduce", response_model=VerdictOut)
@_guarded
def reduce_endpoint(body: ReduceIn) -> VerdictOut:
    _, phrase = parse_document(body.document)
    return _verdict_out(contract_bounded(phrase, _budget_of(body.budget)))


@app.post("/classify", response_model=ClassifyOut)
@_guarded
def classify_endpoint(body: DocumentIn) -> ClassifyOut:
    _, phrase = parse_document(body.document)
    nf = classify_phrase(phrase)
    return ClassifyOut(
        text=str(nf),
        family=nf.family,
        components=nf.k,
        symbol=nf.symbol,
        spots=list(nf.spots),
    )


@app.post("/atlas", response_model=AtlasOut)
@_guarded
def atlas_endpoint(body: AtlasIn) -> AtlasOut:
    base = parse_alphabet_document(body.alphabet)
    result = atlas(base, body.k, _budget_of(body.budget))
    return AtlasOut(
        class_count=len(result.classes),
        classes=[str(c) for c in result.classes],
        records=[
            AtlasRecordOut(
                phrase=words_text(r.phrase) or "(empty)",
                normal_form=str(r.normal_form),
                path_length=len(r.path),
            )
            for r in result.records
        ],
        certificates=[
            CertificateOut(
                left=str(c.left),
                right=str(c.right),
                invariant=c.witness.invariant,
                left_value=c.witness.left,
                right_value=c.witness.right,
            )
            for c in result.certificates
        ],
    )
