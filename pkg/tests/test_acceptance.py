"""The twelve acceptance criteria.  Each test records its outcome before
asserting, so the terminal summary shows one line per criterion."""

import acceptance_log
from graph_helpers import preimage_counts
from oracles import brute_component_count, brute_partition, brute_sft_language, random_sft, random_word_set, rngs

from shiftblocks import (
    FiniteWordSet,
    are_similar,
    block_present,
    block_present_sft,
    build_letter_graph,
    decide_direct_conjugacy,
    equivalence_k,
    is_block_presentation,
    is_maximal_preimage,
    is_n_connected,
    language,
    language_size,
    max_preimage,
    normalize_forbidden,
    sft_similar,
)
from shiftblocks.conjugacy import PLATEAU, SIMILARITY_FAILED, verify_witness


def record(number, title, failures):
    ok = not failures
    acceptance_log.RESULTS.append((number, title, ok))
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
    assert ok, failures[:5]


def classes(*groups):
    return {frozenset(g.split()) for g in groups}


def test_criterion_01_partitions(X):
    p0 = classes("0 3", "2 4", "6 8", "1", "5", "7", "9", "T")
    p1 = classes("5 8", "6 7", "2 3", "0", "1", "4", "9", "T")
    failures = []
    if equivalence_k(X, 2, 0).as_sets() != p0:
        failures.append("P_0")
    if equivalence_k(X, 2, 1).as_sets() != p1:
        failures.append("P_1")
    record(1, "partitions of the 3-block presentation of V", failures)


def test_criterion_02_preimage(X):
    mp = max_preimage(X, 2)
    failures = []
    if are_similar(mp.word_set, FiniteWordSet(["DAEGBDADAEGBFHCHCGB"])) is None:
        failures.append("preimage word")
    rows = {tuple(mp.tuples[a]) for a in mp.word_set.alphabet}
    table = {(frozenset(a.split()), frozenset(b.split())) for a, b in [
        ("0 3", "1"), ("2 4", "9"), ("6 8", "T"), ("1", "2 3"),
        ("5", "0"), ("7", "4"), ("9", "5 8"), ("T", "6 7")]}
    if rows != table:
        failures.append("letter table")
    record(2, "maximal 2-preimage and its letter table", failures)


def test_criterion_03_negative(Y):
    check = is_block_presentation(Y, 2)
    failures = [] if (not check and set(check.witness) == {"E", "F"}) else [check]
    record(3, "Y is not a 2-block presentation, witness E,F", failures)


def test_criterion_04_letter_graphs(V, V2):
    failures = []
    g = build_letter_graph(V, "a", 3)
    if not g.is_connected():
        failures.append("G_a^3 disconnected")
    h = build_letter_graph(V2, "[b,e]", 2)
    brute = brute_component_count(set(V2.language(2)), set(V2.language(3)), "[b,e]", 2)
    if not h.component_count() == brute == 2:
        failures.append(("G_[b,e]^2", h.component_count(), brute))
    record(4, "letter graph of a in V and of [b,e] in V^[2]", failures)


def test_criterion_05_recognition_round_trip():
    failures = []
    for i, rng in enumerate(rngs(200, 5)):
        n = rng.choice((2, 3))
        ws = random_word_set(rng, max_alpha=5, min_len=n, max_len=12)
        image, _ = block_present(ws, n)
        if not is_block_presentation(image, n):
            failures.append(("not recognized", i))
            continue
        again, _ = block_present(max_preimage(image, n).word_set, n)
        if are_similar(again, image) is None:
            failures.append(("round trip", i))
    record(5, "block presentations recognized and round-tripped (200 sets)", failures)


def test_criterion_06_oracle():
    failures = []
    for i, rng in enumerate(rngs(100, 6)):
        ws = random_word_set(rng, max_alpha=4)
        n = rng.randint(1, 3)
        for k in range(n):
            if equivalence_k(ws, n, k).as_sets() != brute_partition(ws, n, k):
                failures.append((i, n, k))
    record(6, "union-find partitions match chain enumeration (100 instances)", failures)


def test_criterion_07_counts():
    failures = []
    for i, rng in enumerate(rngs(100, 7)):
        n = rng.choice((2, 3))
        ws = random_word_set(rng, min_len=n)
        counts = preimage_counts(ws, n)
        for a in ws.alphabet:
            if counts[a] != build_letter_graph(ws, a, n).component_count():
                failures.append((i, a))
    record(7, "preimage letters per letter equal graph components (100 sets)", failures)


def test_criterion_08_composition():
    failures = []
    for i, rng in enumerate(rngs(50, 8)):
        ws = random_word_set(rng, min_len=5)
        for n in (1, 2, 3):
            inner, _ = block_present(ws, n)
            for m in (1, 2, 3):
                twice, _ = block_present(inner, m)
                once, _ = block_present(ws, n + m - 1)
                if are_similar(twice, once) is None:
                    failures.append((i, n, m))
    record(8, "composition of block presentations (50 sets)", failures)


def test_criterion_09_language():
    failures = []
    for i, rng in enumerate(rngs(30, 9)):
        sft = random_sft(rng, max_alpha=3, max_step=2, allow_empty=True)
        for n in range(1, 7):
            if set(language(sft, n)) != brute_sft_language(sft.alphabet, sft.forbidden, sft.step, n):
                failures.append((i, n))
    record(9, "SFT languages match brute-force extension (30 SFTs)", failures)


def test_criterion_10_step_blocks():
    failures = []
    for i, rng in enumerate(rngs(30, 10)):
        sft = random_sft(rng)
        blocked = block_present_sft(sft, sft.step)
        letters = [w[0] for w in sorted(blocked.language(1))]
        for k in (1, 2, 3):
            if not all(is_n_connected(blocked, a, k) for a in letters):
                failures.append(("graph", i, k))
            if not is_maximal_preimage(blocked, k):
                failures.append(("maximal", i, k))
    record(10, "S-block graphs connected and maximal (30 SFTs)", failures)


def test_criterion_11_conjugacy(golden, full2):
    failures = []

    def bound(x, y):
        return abs(language_size(y, y.step) - language_size(x, x.step)) + 1

    for i, rng in enumerate(rngs(30, 11)):
        x = random_sft(rng)
        for k in (1, 2, 3):
            y = block_present_sft(x, k)
            d = decide_direct_conjugacy(x, y)
            if not d.conjugate:
                failures.append(("missed", i, k, d.reason))
                continue
            if sft_similar(block_present_sft(x, d.m), block_present_sft(y, d.n)) is None:
                failures.append(("witness", i, k))
            if d.count_computations > bound(x, y):
                failures.append(("bound", i, k))
    d = decide_direct_conjugacy(golden, full2)
    if d.conjugate or d.reason != SIMILARITY_FAILED:
        failures.append(("golden vs full", d))
    for i, rng in enumerate(rngs(20, 111)):
        x = random_sft(rng)
        y = block_present_sft(x, rng.randint(1, 3)) if i % 2 else random_sft(rng)
        d, e = decide_direct_conjugacy(x, y), decide_direct_conjugacy(y, x)
        if d.conjugate != e.conjugate:
            failures.append(("asymmetric", i))
        elif d.conjugate and not (verify_witness(x, y, d) and verify_witness(y, x, e)):
            failures.append(("witness", i))
        if max(d.count_computations, e.count_computations) > bound(x, y):
            failures.append(("bound", i))
    record(11, "direct conjugacy decisions, symmetry and count bound", failures)


def test_criterion_12_plateau(golden2):
    x = normalize_forbidden("01", ["01", "10"])
    failures = []
    if language_size(x, 1) != language_size(x, 2):
        failures.append("counts differ")
    d = decide_direct_conjugacy(x, golden2)
    if d.conjugate or d.reason != PLATEAU:
        failures.append(("no plateau", d))
    if sft_similar(block_present_sft(x, 2), block_present_sft(x, 1)) is None:
        failures.append("2-blocks not similar to 1-blocks")
    record(12, "plateau on the shift forbidding 01 and 10", failures)
