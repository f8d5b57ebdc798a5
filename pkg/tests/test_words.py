import pytest
from hypothesis import given, strategies as st

from oracles import isoterm_brute, satisfies_brute
from wiremonoids.chips import Chip, Matching, circle, hook, identity, multiply
from wiremonoids.families import ChipMonoid
from wiremonoids.rees import a2, brandt_b21, tsl
from wiremonoids.semigroups import trivial_monoid
from wiremonoids.words import (
    Identity,
    InvWord,
    evaluate,
    find_counterexample,
    isoterm_witnesses,
    occurrences,
    parse_identity,
    parse_word,
    reachable_values,
    refute_identity,
    satisfies_identity,
    word_star,
    zimin,
    zimin_fingerprint_k3,
)

W = parse_word

letters = st.tuples(st.integers(1, 3), st.booleans())
words = st.lists(letters, min_size=1, max_size=5).map(lambda ls: InvWord(tuple(ls)))


def test_zimin():
    assert str(zimin(1)) == "x1"
    assert str(zimin(3)) == "x1 x2 x1 x3 x1 x2 x1"
    for n in range(1, 8):
        for i in range(1, n + 1):
            assert occurrences(zimin(n), i) == 2 ** (n - i)
    assert occurrences(zimin(4), 1) == 8
    with pytest.raises(ValueError):
        zimin(0)


def test_occurrences():
    assert occurrences(W("x1 x1*"), 1) == 2
    assert occurrences(W("x1 x1*"), 1, starred_only=True) == 1
    assert occurrences(W("x1 x2"), 5) == 0


def test_word_star():
    assert word_star(W("x1 x2")) == W("x2* x1*")
    assert word_star(W("x1*")) == W("x1")


@given(words)
def test_word_star_involutive(w):
    assert word_star(word_star(w)) == w


@given(words)
def test_parse_print_round_trip(w):
    assert parse_word(str(w)) == w


def test_parse_errors():
    with pytest.raises(ValueError, match="column 4"):
        parse_word("x1 y2")
    with pytest.raises(ValueError, match="column 1"):
        parse_word("")
    with pytest.raises(ValueError, match="column 12"):
        parse_identity("x1 x2 = x1 q")
    assert parse_identity("x1x2=x2x1") == Identity(W("x1 x2"), W("x2 x1"))


def test_evaluate():
    M = ChipMonoid(3)
    assert evaluate(W("x1"), {1: hook(3, 1)}, M) == hook(3, 1)
    assert evaluate(W("x1 x2"), {1: hook(3, 1), 2: hook(3, 2)}, M) == multiply(hook(3, 1), hook(3, 2))
    with pytest.raises(KeyError):
        evaluate(W("x1 x2"), {1: circle(3)}, M)
    with pytest.raises(ValueError):
        evaluate(W("x1*"), {1: circle(3)}, ChipMonoid(3, None))


@pytest.mark.parametrize("n", range(1, 7))
def test_zimin_values_in_k3(n):
    M = ChipMonoid(3)
    for i in range(1, n + 1):
        a = {x: identity(3) for x in range(1, n + 1)}
        a[i] = circle(3)
        assert evaluate(zimin(n), a, M) == Chip(Matching.identity(3), 2 ** (n - i))
        a[i] = hook(3, 1)
        assert evaluate(zimin(n), a, M) == Chip(hook(3, 1).matching, 2 ** (n - i) - 1)


def test_zimin_fingerprint_recursion():
    assert zimin_fingerprint_k3(3, 3, "c") == circle(3)
    assert zimin_fingerprint_k3(4, 2, "c") == Chip(Matching.identity(3), 4)
    assert zimin_fingerprint_k3(3, 2, "h1") == multiply(circle(3), hook(3, 1))
    assert zimin_fingerprint_k3(40, 1, "c").circles == 2**39
    with pytest.raises(OverflowError):
        zimin_fingerprint_k3(70, 1, "c")


def test_b21_golden_identity():
    B = brandt_b21()
    ident = parse_identity("x1x2x1x2x1 = x1x2x1")
    # exhaustive 36-assignment scan
    assert satisfies_brute(B.table.tolist(), B.involution.tolist(), ident.lhs.letters, ident.rhs.letters) is False
    assert not satisfies_identity(B, ident)
    bad = find_counterexample(B, ident)
    assert {x: B.label(v) for x, v in bad.items()} == {1: "1", 2: "a"}


def test_trivial_identities():
    for S in (brandt_b21(), a2(), tsl()):
        assert satisfies_identity(S, parse_identity("x1 = x1"))
    T = trivial_monoid()
    assert satisfies_identity(T, parse_identity("x1 x2* = x3"))


@given(words, words, st.sampled_from(["b21", "a2", "tsl"]))
def test_exhaustive_check_matches_brute(lhs, rhs, name):
    S = {"b21": brandt_b21, "a2": a2, "tsl": tsl}[name]()
    want = satisfies_brute(S.table.tolist(), S.involution.tolist(), lhs.letters, rhs.letters)
    assert satisfies_identity(S, Identity(lhs, rhs)) == want


def test_reachable_values_order():
    M = ChipMonoid(3)
    vals = reachable_values(M.generators(), M.mul, 2, M.one)
    assert [w for _, w in vals[:4]] == [(), (0,), (1,), (2,)]
    assert len({v for v, _ in vals}) == len(vals)


def test_refutation_in_k3():
    M = ChipMonoid(3)
    a = refute_identity(parse_identity("x1 x2 = x2 x1"), M.generators(), M, 1)
    assert a == {1: hook(3, 1), 2: hook(3, 2)}
    assert multiply(hook(3, 1), hook(3, 2)) != multiply(hook(3, 2), hook(3, 1))
    assert refute_identity(parse_identity("x1 x2 x1 x3 x1 x2 x1 = x1 x1 x2"), M.generators(), M, 1) is not None
    for depth in range(3):
        assert refute_identity(parse_identity("x1 = x1"), M.generators(), M, depth) is None


def test_refutation_with_bound_letters():
    M = ChipMonoid(4)
    tl2 = parse_identity("x1 x2 x1 = x1")
    tl1 = parse_identity("x1 x2 = x2 x1")
    assert refute_identity(tl2, {1: [hook(4, 2)], 2: [hook(4, 3)]}, M, 1, use_identity=False) is None
    assert refute_identity(tl1, {1: [hook(4, 1)], 2: [hook(4, 3)]}, M, 1, use_identity=False) is None
    # with the empty product allowed, x2 = 1 gives h h = c h != h
    assert refute_identity(tl2, {1: [hook(4, 2)], 2: [hook(4, 3)]}, M, 1) is not None


def test_isoterm_examples():
    T = trivial_monoid()
    assert W("x1 x1") in isoterm_witnesses(T, W("x1"), 2)
    assert isoterm_witnesses(tsl(), W("x1"), 1) == []
    B = brandt_b21()
    assert isoterm_witnesses(B, zimin(2), 6) == []


@pytest.mark.parametrize(
    "name, word, max_len",
    [("tsl", "x1", 3), ("tsl", "x1 x2", 3), ("b21", "x1", 3), ("a2", "x1 x1", 3), ("b21", "x1 x2 x1", 3)],
)
def test_isoterm_matches_brute_force(name, word, max_len):
    S = {"b21": brandt_b21, "a2": a2, "tsl": tsl}[name]()
    v = W(word)
    brute = isoterm_brute(S.table.tolist(), S.involution.tolist(), v.letters, max_len)
    got = isoterm_witnesses(S, v, max_len)
    assert sorted(w.letters for w in got) == sorted(brute)
