import pytest

from nanophrases import (
    CONTRACTIBLE,
    NormalForm,
    atlas,
    canonicalize,
    classify_phrase,
    classify_word,
    component_word_class,
    desingularize,
    distinguish,
    enumerate_phrases,
    identity_phrase,
    make_alphabet,
    phrase,
    realize,
    replay_path,
)
from nanophrases.classify import FAMILIES
from nanophrases.grammar import words_text

one = make_alphabet(["a"], [])
alpha0 = make_alphabet(["a", "b"], [("a", "b")])
mixed = make_alphabet(["a", "b", "c"], [("a", "b")])


def test_normal_form_validation():
    NormalForm(2, (1, 1), (1, 2), "a")
    NormalForm(3)
    with pytest.raises(ValueError):
        NormalForm(2, (2, 2), (1, 2), "a")  # not a family
    with pytest.raises(ValueError):
        NormalForm(2, (1, 1), (1,), "a")
    with pytest.raises(ValueError):
        NormalForm(2, (1, 1), (2, 1), "a")  # spots must increase
    with pytest.raises(ValueError):
        NormalForm(2, (1, 1), (1, 3), "a")  # spot beyond k
    with pytest.raises(ValueError):
        NormalForm(2, (1, 1), (1, 2))  # nonempty needs a symbol
    with pytest.raises(ValueError):
        NormalForm(2, symbol="a")  # empty forbids one


def test_normal_form_text_and_order():
    assert str(NormalForm(2)) == "empty k=2"
    assert str(NormalForm(2, (1, 1), (1, 2), "a")) == "a:1-1@1,2 k=2"
    assert str(NormalForm(3, (2, 1), (1, 3), "b")) == "b:2-1@1,3 k=3"
    assert NormalForm(2).family == "empty"
    assert NormalForm(1, (3,), (1,), "a").family == "3"
    forms = [
        NormalForm(2, (1, 2), (1, 2), "a"),
        NormalForm(2),
        NormalForm(2, (1, 1), (1, 2), "b"),
        NormalForm(2, (1, 1), (1, 2), "a"),
    ]
    forms.sort(key=NormalForm.sort_key)
    assert [str(f) for f in forms] == [
        "empty k=2",
        "a:1-1@1,2 k=2",
        "b:1-1@1,2 k=2",
        "a:1-2@1,2 k=2",
    ]


def test_realize_golden():
    p = realize(NormalForm(2, (2, 1), (1, 2), "a"), alpha0)
    assert p.words == (("a", "a"), ("a",))
    q = realize(NormalForm(3, (1, 1), (1, 3), "b"), alpha0)
    assert q.words == (("b",), (), ("b",))
    assert realize(NormalForm(2), alpha0).words == ((), ())


def test_realize_rejects_bad_forms():
    with pytest.raises(ValueError):
        realize(NormalForm(1, (3,), (1,), "z"), alpha0)
    with pytest.raises(ValueError):
        realize(NormalForm(1, (3,), (1,), "a"), one)  # collapses when tau(a) = a


def test_classify_phrase_families():
    assert classify_phrase(identity_phrase(alpha0, ((), ()))) == NormalForm(2)
    assert classify_phrase(identity_phrase(alpha0, (("a",), ("a",)))) == NormalForm(
        2, (1, 1), (1, 2), "a"
    )
    assert classify_phrase(identity_phrase(alpha0, (("a", "a"), ("a",)))) == NormalForm(
        2, (2, 1), (1, 2), "a"
    )
    assert classify_phrase(identity_phrase(alpha0, (("a",), ("a", "a")))) == NormalForm(
        2, (1, 2), (1, 2), "a"
    )
    assert classify_phrase(
        identity_phrase(alpha0, (("b",), ("b",), ("b",)))
    ) == NormalForm(3, (1, 1, 1), (1, 2, 3), "b")
    assert classify_phrase(identity_phrase(alpha0, ((), ("a", "a", "a")))) == NormalForm(
        2, (3,), (2,), "a"
    )


def test_classify_phrase_collapsing_cases():
    # one letter twice in one component cancels, as does a tau-fixed triple
    assert classify_phrase(identity_phrase(alpha0, (("a", "a"), ()))) == NormalForm(2)
    assert classify_phrase(identity_phrase(one, (("a", "a", "a"),))) == NormalForm(1)
    assert classify_phrase(identity_phrase(mixed, (("c", "c", "c"),))) == NormalForm(1)


def test_classify_phrase_rejections():
    with pytest.raises(ValueError):
        classify_phrase(identity_phrase(alpha0, (("a", "a"), ("a", "a"))))
    with pytest.raises(ValueError):
        classify_phrase(identity_phrase(alpha0, (("a",), ())))


def test_classify_roundtrips_realize():
    for base in (one, alpha0, mixed):
        for k in (1, 2, 3):
            for p in enumerate_phrases(base, k):
                nf = classify_phrase(p)
                assert classify_phrase(realize(nf, base)) == nf


def test_classify_word_theorem_forms():
    word = lambda base, entries: identity_phrase(base, (tuple(entries),))
    assert classify_word(word(alpha0, "aa")) is CONTRACTIBLE
    assert classify_word(word(alpha0, "aabb")) == CONTRACTIBLE
    assert classify_word(word(alpha0, "abba")) == CONTRACTIBLE
    assert classify_word(word(one, "aaa")) == CONTRACTIBLE
    assert classify_word(word(one, "aaaa")) == CONTRACTIBLE
    assert str(classify_word(word(alpha0, "aaa"))) == "aaa[a]"
    assert str(classify_word(word(alpha0, "bbbb"))) == "aaaa[b]"
    # tau-paired alternation cancels; unrelated symbols do not
    assert classify_word(word(alpha0, "abab")) == CONTRACTIBLE
    assert str(classify_word(word(mixed, "acac"))) == "abab[a,c]"


def test_classify_word_rejections():
    with pytest.raises(ValueError):
        classify_word(identity_phrase(alpha0, (("a",), ("a",))))
    with pytest.raises(ValueError):
        classify_word(identity_phrase(alpha0, (("a", "b"),)))
    with pytest.raises(ValueError):
        classify_word(identity_phrase(mixed, (("a", "b", "a", "b", "c", "c"),)))
    # XYXY with equal projections sits outside the theorem
    bad = phrase(alpha0, (("X", "Y", "X", "Y"),), {"X": "a", "Y": "a"})
    with pytest.raises(ValueError, match="short-word theorem"):
        classify_word(bad)


def test_component_word_class_core_reduction():
    # b occurs once in component 1 (again in component 2): it drops out there
    p = identity_phrase(alpha0, (("a", "b", "a", "a"), ("b",)))
    assert component_word_class(p, 1) == classify_word(
        identity_phrase(alpha0, (("a", "a", "a"),))
    )
    assert component_word_class(p, 2) is CONTRACTIBLE  # core is empty
    long = identity_phrase(alpha0, (("a",) * 5,))
    assert component_word_class(long, 1) is None


def test_distinguish_certificates():
    nf_empty = NormalForm(2)
    nf11 = NormalForm(2, (1, 1), (1, 2), "a")
    with pytest.raises(ValueError):
        distinguish(nf11, nf11, alpha0)
    cert = distinguish(NormalForm(1), NormalForm(2), alpha0)
    assert cert.witness.invariant == "component_count"
    cert = distinguish(nf_empty, nf11, alpha0)
    assert cert.witness.invariant == "w"
    cert = distinguish(
        NormalForm(2, (2, 1), (1, 2), "a"), NormalForm(2, (1, 2), (1, 2), "a"), alpha0
    )
    assert cert.witness.invariant == "T"


def test_enumerate_phrase_counts():
    # 1 empty phrase plus, per symbol, the count vectors of total 2 and 3
    assert len(enumerate_phrases(one, 1)) == 3
    assert len(enumerate_phrases(one, 2)) == 8
    assert len(enumerate_phrases(alpha0, 2)) == 15
    assert len(enumerate_phrases(mixed, 3)) == 49
    texts = [words_text(p) for p in enumerate_phrases(alpha0, 2)]
    assert len(set(texts)) == len(texts)


def test_atlas_small():
    result = atlas(one, 1)
    assert [str(c) for c in result.classes] == ["empty k=1"]
    assert result.certificates == ()
    assert len(result.records) == 3
    texts = [words_text(r.phrase) for r in result.records]
    assert texts == sorted(texts)
    for record in result.records:
        target = canonicalize(desingularize(realize(record.normal_form, one)))
        landed = canonicalize(desingularize(replay_path(record.phrase, record.path)))
        assert landed == target


def test_atlas_alpha0_single_component():
    result = atlas(alpha0, 1)
    assert [str(c) for c in result.classes] == ["empty k=1", "a:3@1 k=1", "b:3@1 k=1"]
    assert len(result.certificates) == 3
    for cert in result.certificates:
        assert cert.witness.invariant in {"T", "word_class[1]"}


def test_families_constant_is_exhaustive():
    # every enumerated phrase lands in a declared family
    for k in (1, 2, 3):
        for p in enumerate_phrases(mixed, k):
            assert classify_phrase(p).counts in FAMILIES
