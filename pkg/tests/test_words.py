import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_projections, brute_similarities, sliding_factors

from shiftblocks import (
    FiniteWordSet,
    Projection,
    apply_projection,
    are_similar,
    block_present,
    find_projection,
    is_n_prolongeable,
    max_preimage,
    subwords,
)
from shiftblocks.words import as_word

word_lists = st.lists(
    st.lists(st.sampled_from("abcd"), min_size=1, max_size=8), min_size=1, max_size=3
)
word_sets = word_lists.map(FiniteWordSet)


def test_subwords_of_V_match_sliding_window(V):
    for n in range(1, 6):
        assert subwords(V, n) == sliding_factors(V.words, n)


def test_subwords_of_single_letter():
    assert subwords(FiniteWordSet(["a"]), 1) == {("a",)}


def test_subwords_too_long_is_empty():
    assert subwords(FiniteWordSet(["abc"]), 4) == frozenset()


def test_two_words_of_X_are_the_fourteen_listed_pairs(X):
    listed = "10 05 59 92 21 13 31 94 47 7T T6 6T T8 89".split()
    assert subwords(X, 2) == {tuple(p) for p in listed}


def test_alphabet_is_letters_in_order_of_occurrence(V):
    assert V.alphabet == ("b", "a", "e", "c", "d")
    assert FiniteWordSet(["ab", "ab", "ba"]).words == (("a", "b"), ("b", "a"))


def test_invalid_symbols_rejected():
    with pytest.raises(ValueError):
        as_word(["a b"])
    with pytest.raises(ValueError):
        as_word([])


def test_prolongeable_examples():
    assert not is_n_prolongeable(FiniteWordSet(["ab"]), 1)
    # "ab" recurs after a "b", so every 2-word of abab extends both ways
    assert is_n_prolongeable(FiniteWordSet(["abab"]), 2)
    assert not is_n_prolongeable(FiniteWordSet(["abab"]), 3)
    assert not is_n_prolongeable(FiniteWordSet(["abcb"]), 2)


def test_identity_projection(V):
    assert apply_projection(Projection.identity(V.alphabet), V) == V


def test_merging_E_into_F_leaves_seven_letters(Y):
    m = {a: a for a in Y.alphabet}
    m["E"] = "F"
    merged = apply_projection(Projection.from_dict(m, Y.alphabet), Y)
    assert len(merged.alphabet) == 7
    assert merged.words == (tuple("DAFGBDADAFGBFHCHCGB"),)


def test_first_projection_of_preimage_is_its_prefix(X):
    mp = max_preimage(X, 2)
    image = apply_projection(mp.projection(0), X)
    assert image.words[0] == mp.word_set.words[0][:-1]


def test_apply_projection_alphabet_mismatch(V):
    with pytest.raises(ValueError):
        apply_projection(Projection.from_dict({"a": "x"}), V)


def test_projection_must_be_total():
    with pytest.raises(ValueError):
        Projection({"a": "x"}, ("a", "b"), ("x",))


def test_find_projection_self_is_valid(X):
    phi = find_projection(X, X)
    assert phi is not None and apply_projection(phi, X) == X


def test_find_projection_from_maximal_preimage(X, V):
    # The maximal 2-preimage of Phi_3(V) projects onto the 2-preimage Phi_2(V).
    mp = max_preimage(X, 2)
    v2 = block_present(V, 2)[0]
    phi = find_projection(mp.word_set, v2)
    assert phi is not None
    assert apply_projection(phi, mp.word_set) == v2
    # the merged pairs are exactly the two letters over [b,e]
    fibres = {}
    for c, t in phi.items():
        fibres.setdefault(t, []).append(c)
    assert sorted(len(f) for f in fibres.values()) == [1] * 6 + [2]


def test_find_projection_length_mismatch():
    assert find_projection(FiniteWordSet(["ab"]), FiniteWordSet(["abc"])) is None


def test_similar_to_itself_is_identity(X):
    assert are_similar(X, X) == Projection.identity(X.alphabet)


def test_three_block_presentation_of_V_matches_digit_display(V, X):
    x3, _ = block_present(V, 3)
    sigma = are_similar(x3, X)
    expected = {"bab": "1", "abe": "0", "bec": "5", "ecb": "9", "cba": "2", "aba": "3",
                "cbe": "4", "bed": "7", "ede": "T", "ded": "6", "dec": "8"}
    assert {k[1:-1].replace(",", ""): v for k, v in sigma.items()} == expected


def test_golden_mean_versus_full_shift_two_words():
    gm = FiniteWordSet([w for w in ["00", "01", "10"]])
    full = FiniteWordSet(["00", "01", "10", "11"])
    assert are_similar(gm, full) is None


@given(word_sets, st.integers(1, 5))
def test_factor_closure(ws, n):
    shorter = subwords(ws, n)
    for w in subwords(ws, n + 1):
        assert w[:-1] in shorter and w[1:] in shorter


@given(word_sets, st.data())
def test_find_projection_recovers_random_images(ws, data):
    targets = data.draw(st.lists(st.sampled_from("xyz"), min_size=len(ws.alphabet),
                                 max_size=len(ws.alphabet)))
    phi0 = Projection.from_dict(dict(zip(ws.alphabet, targets)), ws.alphabet)
    image = apply_projection(phi0, ws)
    assert len(image) <= len(ws)
    phi = find_projection(ws, image)
    assert phi is not None
    assert apply_projection(phi, ws) == image


@settings(max_examples=60)
@given(word_sets, word_sets)
def test_find_projection_agrees_with_enumeration(a, b):
    if len(a.alphabet) > 4:
        return
    found = find_projection(a, b)
    brute = brute_projections(a, b)
    assert (found is not None) == bool(brute)
    if found is not None:
        assert dict(found.items()) in brute


@settings(max_examples=60)
@given(word_sets, word_sets)
def test_are_similar_agrees_with_enumeration(a, b):
    found = are_similar(a, b)
    brute = brute_similarities(a, b)
    assert (found is not None) == bool(brute)
    if found is not None:
        assert dict(found.items()) in brute
        assert find_projection(a, b) is not None and find_projection(b, a) is not None


@given(word_sets, st.permutations("pqrs"), st.permutations("tuvw"))
def test_similarity_is_an_equivalence(ws, p1, p2):
    r1 = Projection.from_dict(dict(zip("abcd", p1)), "abcd")
    r2 = Projection.from_dict(dict(zip("pqrs", p2)), "pqrs")
    ws1 = apply_projection(r1, ws)
    ws2 = apply_projection(r2, ws1)
    assert are_similar(ws, ws) is not None
    s01 = are_similar(ws, ws1)
    s10 = are_similar(ws1, ws)
    assert s01 is not None and s10 is not None
    assert apply_projection(s01.inverse(), ws1) == ws
    s12 = are_similar(ws1, ws2)
    composite = s01.then(s12)
    assert apply_projection(composite, ws) == ws2
    assert are_similar(ws, ws2) is not None
