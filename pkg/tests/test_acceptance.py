"""Acceptance gate: eight end-to-end checks, one PASS/FAIL line each.

Every check uses exact equality; the only numeric bounds are the pinned
wall-clock limits stated inline.  Randomized checks run on fixed seeds.
"""

import itertools
import random
import time

from click.testing import CliRunner

from nanophrases import (
    NormalForm,
    apply_move,
    atlas,
    canonicalize,
    contract_bounded,
    desingularize,
    find_moves,
    identity_phrase,
    linking_vector,
    make_alphabet,
    orbit_restriction,
    realize,
    replay_path,
    so_profile,
    t_mod2,
    t_signed,
    component_length_vector,
)
from nanophrases.cli import main
from tests.gen import (
    plant_m1,
    plant_m2,
    plant_m3,
    random_alphabet,
    random_etale_phrase,
    random_nanophrase,
)

one = make_alphabet(["a"], [])
alpha0 = make_alphabet(["a", "b"], [("a", "b")])
mixed = make_alphabet(["a", "b", "c"], [("a", "b")])


def _report(num: int, name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"\nACCEPTANCE {num} {name}: {status}{suffix}")


def word(base, text):
    return identity_phrase(base, (tuple(text),))


def test_acceptance_1_desingularization_size_law():
    rng = random.Random(101)
    start = time.perf_counter()
    failures = []
    for trial in range(1000):
        base = random_alphabet(rng)
        p = random_etale_phrase(rng, base, rng.randint(1, 4), max_entries=8)
        expect = sum(
            p.multiplicity(l) * (p.multiplicity(l) - 1) for l in p.alphabet.letters
        )
        if desingularize(p).entry_count != expect:
            failures.append((trial, p.words))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 5.0
    _report(1, "desingularization size law", ok, f"1000 phrases, {elapsed:.2f}s")
    assert ok, (failures[:3], elapsed)


def test_acceptance_2_desingularization_idempotence():
    rng = random.Random(202)
    failures = []
    for trial in range(1000):
        base = random_alphabet(rng)
        n = random_nanophrase(rng, base, rng.randint(1, 4), rng.randint(0, 5))
        if canonicalize(desingularize(n)) != canonicalize(n):
            failures.append((trial, n.words))
    ok = not failures
    _report(2, "desingularization idempotence", ok, "1000 nanophrases")
    assert ok, failures[:3]


def _random_move_pair(rng, base):
    n = random_nanophrase(rng, base, rng.randint(1, 3), rng.randint(0, 4))
    roll = rng.random()
    symbol = rng.choice(base.symbols)
    if roll < 0.15:
        return plant_m1(rng, n, symbol)
    if roll < 0.30:
        return plant_m2(rng, n, symbol)
    if roll < 0.45:
        return plant_m3(rng, n, symbol)
    moves = find_moves(n, len(n.alphabet.letters) + 2)
    return n, rng.choice(moves)


def test_acceptance_3_move_invariance():
    cases = [
        ("w", component_length_vector, None),
        ("lk", linking_vector, None),
        ("t_signed", t_signed, alpha0),
        ("t_mod2", t_mod2, one),
        ("s_o", so_profile, one),
    ]
    rng = random.Random(303)
    start = time.perf_counter()
    failures = []
    for name, fn, fixed_base in cases:
        for trial in range(10_000):
            base = fixed_base or random_alphabet(rng)
            n, move = _random_move_pair(rng, base)
            if fn(n) != fn(apply_move(n, move)):
                failures.append((name, trial, move.kind, n.words))
                break
    elapsed = time.perf_counter() - start
    ok = not failures
    _report(3, "move invariance", ok, f"5 invariants x 10000 pairs, {elapsed:.1f}s")
    assert ok, failures


def _rep_of(base, symbol):
    return symbol if symbol in base.crs else base.tau(symbol)


def _restriction_move(move, n, keep):
    proj = n.alphabet.projection
    mapped = []
    for w, q in move.positions:
        kept = sum(1 for e in n.words[w][:q] if proj(e) in keep)
        mapped.append((w, kept))
    return type(move)(move.kind, tuple(mapped), move.symbol)


def test_acceptance_4_restriction_commutes_with_moves():
    rng = random.Random(404)
    start = time.perf_counter()
    planters = [plant_m1, plant_m2, plant_m3]
    failures = []
    for planter, member in itertools.product(planters, (True, False)):
        for trial in range(1700):
            base = random_alphabet(rng)
            while len(base.crs) < 2:
                base = random_alphabet(rng)
            n = random_nanophrase(rng, base, rng.randint(1, 3), rng.randint(0, 4))
            symbol = rng.choice(base.symbols)
            before, move = planter(rng, n, symbol)
            after = apply_move(before, move)
            rep = _rep_of(base, symbol)
            others = [r for r in base.crs if r != rep]
            if member:
                reps = tuple({rep} | set(rng.sample(others, rng.randint(0, len(others)))))
            else:
                reps = tuple(rng.sample(others, rng.randint(1, len(others))))
            keep = {s for r in reps for s in (r, base.tau(r))}
            left = orbit_restriction(before, reps)
            right = orbit_restriction(after, reps)
            if member:
                got = apply_move(left, _restriction_move(move, before, keep))
            else:
                got = left
            if got != right:
                failures.append((planter.__name__, member, trial))
                break
    elapsed = time.perf_counter() - start
    ok = not failures
    _report(
        4,
        "orbit restriction commutes with moves",
        ok,
        f"3 moves x 2 membership x 1700 trials, {elapsed:.1f}s",
    )
    assert ok, failures


def test_acceptance_5_short_word_classification():
    start = time.perf_counter()
    failures = []

    contractible = [
        (alpha0, "aa"),
        (alpha0, "aabb"),
        (alpha0, "abba"),
        (one, "aaa"),  # tau(a) = a collapses the triple
        (one, "aaaa"),
        (alpha0, "abab"),  # tau(a) = b collapses the alternation
    ]
    for base, text in contractible:
        verdict = contract_bounded(word(base, text))
        if verdict.kind != "homotopic":
            failures.append((text, verdict.kind, getattr(verdict, "reason", None)))
            continue
        if replay_path(word(base, text), verdict.path).entry_count != 0:
            failures.append((text, "path does not land on the empty phrase"))

    distinct_words = [(alpha0, "aaa"), (alpha0, "aaaa"), (mixed, "acac")]
    for base, text in distinct_words:
        verdict = contract_bounded(word(base, text))
        if verdict.kind != "distinct":
            failures.append((text, verdict.kind))

    p_family = [
        (("a",), ("a",)),
        (("a", "a"), ("a",)),
        (("a",), ("a", "a")),
        (("a",), ("a",), ("a",)),
    ]
    for words in p_family:
        verdict = contract_bounded(identity_phrase(alpha0, words))
        if verdict.kind != "distinct":
            failures.append((words, verdict.kind))

    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60.0
    _report(5, "short-word classification", ok, f"{elapsed:.1f}s")
    assert ok, (failures, elapsed)


EXPECTED_CLASS_COUNTS = {
    ("one", 1): 1,
    ("one", 2): 4,
    ("one", 3): 11,
    ("alpha0", 1): 3,
    ("alpha0", 2): 11,
    ("alpha0", 3): 27,
    ("mixed", 1): 3,
    ("mixed", 2): 14,
    ("mixed", 3): 37,
}


def test_acceptance_6_atlas_reproduction():
    start = time.perf_counter()
    failures = []
    for label, base in (("one", one), ("alpha0", alpha0), ("mixed", mixed)):
        for k in (1, 2, 3):
            result = atlas(base, k)
            if len(result.classes) != EXPECTED_CLASS_COUNTS[(label, k)]:
                failures.append((label, k, "classes", len(result.classes)))
            expected_pairs = len(result.classes) * (len(result.classes) - 1) // 2
            if len(result.certificates) != expected_pairs:
                failures.append((label, k, "certificates", len(result.certificates)))
            for record in result.records:
                target = canonicalize(desingularize(realize(record.normal_form, base)))
                landed = canonicalize(
                    desingularize(replay_path(record.phrase, record.path))
                )
                if landed != target:
                    failures.append((label, k, "path", record.normal_form))
                    break

    # pinned separating values on the two-component representatives
    g = alpha0.group
    p11 = desingularize(realize(NormalForm(2, (1, 1), (1, 2), "a"), alpha0))
    if not g.equal(linking_vector(p11).pair(1, 2), g.embed("a")):
        failures.append(("lk(P11)", str(linking_vector(p11))))
    p21 = desingularize(realize(NormalForm(2, (2, 1), (1, 2), "a"), alpha0))
    if t_signed(p21).values != (1, 0):
        failures.append(("T(P21)", t_signed(p21).values))
    p12 = desingularize(realize(NormalForm(2, (1, 2), (1, 2), "a"), alpha0))
    if t_signed(p12).values != (0, -1):
        failures.append(("T(P12)", t_signed(p12).values))
    q21 = desingularize(realize(NormalForm(2, (2, 1), (1, 2), "a"), one))
    if so_profile(q21).sets != (frozenset({(0, 1)}), frozenset()):
        failures.append(("So(P21)", so_profile(q21).sets))

    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120.0
    _report(6, "short-phrase atlas reproduction", ok, f"9 atlases, {elapsed:.1f}s")
    assert ok, (failures, elapsed)


def test_acceptance_7_two_component_atlas_count():
    result = atlas(alpha0, 2)
    distinct_pairs = len(result.certificates)
    ok = len(result.classes) == 11 and distinct_pairs == 11 * 10 // 2
    _report(7, "two-component atlas count", ok, f"{len(result.classes)} classes")
    assert ok, (len(result.classes), distinct_pairs)


def test_acceptance_8_cli_round_trip_and_exit_codes(tmp_path):
    runner = CliRunner()
    failures = []

    def doc(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    canonical = "alpha: a b\ntau: (a b)\nphrase: a b | b a\n"
    result = runner.invoke(main, ["parse", doc("c.np", canonical)])
    if result.output != canonical:
        failures.append(("round-trip", result.output))
    messy = "# c\nalpha: a b\ntau: (a b)\nphrase:   a b |\tb a\n"
    result = runner.invoke(main, ["parse", doc("m.np", messy)])
    if result.output != canonical:
        failures.append(("canonicalization", result.output))
    result = runner.invoke(main, ["parse", doc("bad.np", "alpha: a\nphrase: a\n")])
    if result.exit_code != 64:
        failures.append(("parse exit", result.exit_code))

    a0 = "alpha: a b\ntau: (a b)\n"
    mx = "alpha: a b c\ntau: (a b)\n"
    o1 = "alpha: a\ntau:\n"
    runs = [
        (a0 + "phrase: a a\n", a0 + "phrase:\n", None, 0),
        (a0 + "phrase: a b a b\n", a0 + "phrase:\n", None, 0),
        (o1 + "phrase: a a a\n", o1 + "phrase:\n", None, 0),
        (a0 + "phrase: a a a\n", a0 + "phrase:\n", None, 1),
        (mx + "phrase: a c a c\n", mx + "phrase:\n", None, 1),
        (o1 + "phrase: a a a a\n", o1 + "phrase:\n", "5", 2),
    ]
    for i, (left, right, states, expected) in enumerate(runs):
        args = ["homotopic", doc(f"l{i}.np", left), doc(f"r{i}.np", right)]
        if states:
            args += ["--budget-states", states]
        result = runner.invoke(main, args)
        if result.exit_code != expected:
            failures.append((i, left.splitlines()[-1], result.exit_code, expected))

    ok = not failures
    _report(8, "CLI round-trip and exit codes", ok)
    assert ok, failures
