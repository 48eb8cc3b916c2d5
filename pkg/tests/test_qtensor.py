from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import random_seminormal_table, ref_is_quasicrystal, ref_is_seminormal
from quasicrystal.errors import MismatchedType, NotSeminormal
from quasicrystal.qc_core import (
    POS_INF,
    check_homomorphism,
    fixture_A3_squared,
    fixture_Q2,
    is_seminormal,
    standard_A,
    standard_C,
    validate_quasicrystal,
)
from quasicrystal.qtensor import ONE, ZERO, Pair, pair_id, qtensor, sig_mul, sig_of
from quasicrystal.word_monoid import TableAlphabet, alphabet

sigs = st.one_of(st.just(ZERO), st.builds(Pair, st.integers(0, 4), st.integers(0, 4)))


def test_sig_mul_examples():
    assert sig_mul(Pair(1, 1), Pair(1, 0)) is ZERO
    assert sig_mul(Pair(2, 0), Pair(0, 1)) == Pair(2, 1)
    assert sig_mul(ZERO, Pair(0, 3)) is ZERO


def _expand(s):
    return None if s is ZERO else "-" * s.minus + "+" * s.plus


def _reduce_string(text):
    # Free rewriting: any "+-" contact is zero, otherwise the string is already -^a +^b.
    return None if text is None or "+-" in text else text


@given(sigs, sigs, sigs)
def test_sig_mul_is_associative_with_unit(a, b, c):
    assert sig_mul(sig_mul(a, b), c) == sig_mul(a, sig_mul(b, c))
    assert sig_mul(ONE, a) == a == sig_mul(a, ONE)


@given(sigs, sigs)
def test_sig_mul_matches_string_rewriting(a, b):
    left, right = _expand(a), _expand(b)
    joined = None if left is None or right is None else left + right
    got = sig_mul(a, b)
    assert _expand(got) == _reduce_string(joined)


def test_sig_of_examples():
    assert sig_of(standard_A(4), "3", 2) == Pair(1, 0)
    assert sig_of(standard_A(4), "1", 2) == Pair(0, 0)
    assert sig_of(fixture_A3_squared(), "(1,2)", 1) is ZERO


def test_sig_of_needs_seminormal():
    with pytest.raises(NotSeminormal):
        sig_of(fixture_Q2(), "a", 1)


def test_qtensor_rejects_bad_inputs():
    with pytest.raises(NotSeminormal):
        qtensor(fixture_Q2(), fixture_Q2())
    with pytest.raises(MismatchedType):
        qtensor(standard_A(3), standard_C(3))


def test_A3_square_is_the_fixture():
    t = qtensor(standard_A(3), standard_A(3))
    fixture = fixture_A3_squared()
    assert set(t.elements) == set(fixture.elements)
    mapping = {pair_id(x, y): pair_id(x, y) for x in "123" for y in "123"}
    assert check_homomorphism(t, fixture, mapping).is_iso
    for x in fixture.elements:
        assert t.wt[x] == fixture.wt[x]
        for i in fixture.indices:
            for name in ("eps", "phi", "e", "f"):
                assert getattr(t, name)[x, i] == getattr(fixture, name)[x, i]


def test_C2_square_figure_details():
    t = qtensor(standard_C(2), standard_C(2))
    assert t.f["(2,1)", 2] == "(-2,1)"
    assert t.eps["(1,2)", 1] == POS_INF
    assert validate_quasicrystal(t).ok and is_seminormal(t)


@pytest.mark.parametrize("left, right", [(standard_A(3), standard_A(3)), (standard_C(2), standard_C(2)), (standard_C(3), standard_C(3))])
def test_signature_of_product_is_product_of_signatures(left, right):
    t = qtensor(left, right)
    for x, y in itertools.product(left.elements, right.elements):
        for i in t.indices:
            expected = sig_mul(sig_of(left, x, i), sig_of(right, y, i))
            assert sig_of(t, pair_id(x, y), i, checked=True) == expected


def test_product_of_crystals_is_not_a_crystal():
    # 1 is 1-lowerable, 2 is 1-raisable: the pair (1,2) gets +inf.
    t = qtensor(standard_A(2), standard_A(2))
    assert t.eps["(1,2)", 1] == POS_INF == t.phi["(1,2)", 1]
    assert t.e["(1,2)", 1] is None and t.f["(1,2)", 1] is None


def test_associativity_up_to_rebracketing():
    a = standard_C(2)
    left = qtensor(qtensor(a, a), a)
    right = qtensor(a, qtensor(a, a))
    mapping = {
        pair_id(pair_id(x, y), z): pair_id(x, pair_id(y, z))
        for x, y, z in itertools.product(a.elements, repeat=3)
    }
    assert check_homomorphism(left, right, mapping).is_iso


@pytest.mark.parametrize("kind, n", [("A", 3), ("C", 2)])
def test_iterated_products_match_the_word_fold(kind, n):
    """Binary products built twice agree with the m-fold signature fold on words of length 3."""
    base = standard_A(n) if kind == "A" else standard_C(n)
    triple = qtensor(qtensor(base, base), base)
    words = TableAlphabet(base)
    for x, y, z in itertools.product(base.elements, repeat=3):
        el = pair_id(pair_id(x, y), z)
        w = (x, y, z)
        for i in base.indices:
            assert sig_of(triple, el, i, checked=True) == words.sig(w, i)
            for op_t, op_w in ((triple.e, words.e), (triple.f, words.f)):
                image = op_w(w, i)
                expected = None if image is None else pair_id(pair_id(*image[:2]), image[2])
                assert op_t[el, i] == expected


def test_product_with_words_matches_standard_alphabet():
    """qtensor tables agree with the inversion-scan word operators on length-2 words."""
    for kind, n in (("A", 4), ("C", 3)):
        base = standard_A(n) if kind == "A" else standard_C(n)
        t = qtensor(base, base)
        alpha = alphabet(kind, n)
        for x, y in itertools.product(base.elements, repeat=2):
            w = (int(x), int(y))
            for i in t.indices:
                assert sig_of(t, pair_id(x, y), i, checked=True) == alpha.sig(w, i)
                f = alpha.f(w, i)
                assert t.f[pair_id(x, y), i] == (None if f is None else pair_id(str(f[0]), str(f[1])))


def test_random_products_are_seminormal_quasicrystals():
    rng = random.Random(7)
    for _ in range(60):
        kind, n = rng.choice([("A", 2), ("A", 3), ("C", 2)])
        t1 = random_seminormal_table(rng, kind, n, parts=2, max_len=2)
        t2 = random_seminormal_table(rng, kind, n, parts=1, max_len=2)
        t = qtensor(t1, t2)
        assert validate_quasicrystal(t).ok and is_seminormal(t)
        assert ref_is_quasicrystal(t) and ref_is_seminormal(t)
