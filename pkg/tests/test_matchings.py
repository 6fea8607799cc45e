from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from annular_tangles.diagram import evaluate
from annular_tangles.matchings import (
    Matching,
    SignSequence,
    cup_decomposition,
    enumerate_matchings,
    from_signs,
    to_signs,
)
from annular_tangles.tangles import cup


@pytest.mark.parametrize("m", range(5))
@pytest.mark.parametrize("n", range(5))
def test_counts(m, n):
    ms = enumerate_matchings(m, n)
    assert len(ms) == comb(m + 2 * n, n)
    assert len(set(ms)) == len(ms)
    assert [x.signs for x in ms] == sorted(x.signs for x in ms)


def test_small_examples():
    assert len(enumerate_matchings(2, 1)) == 4
    assert len(enumerate_matchings(0, 2)) == 6
    assert [x.signs for x in enumerate_matchings(3, 0)] == ["+++"]


def test_from_signs_examples():
    one = from_signs(SignSequence(0, 1, "+-"))
    assert one.cups == ((1, 0),)
    assert one.cup_span((1, 0)) == [1, 0]
    # the minus at 1 meets the plus at 2 first
    two = from_signs("+-++")
    assert two.cups == ((1, 2),) and two.rays == (0, 3)
    assert from_signs("+").rays == (0,)


def test_to_signs_examples():
    assert to_signs(from_signs("++++")).signs == "++++"
    assert to_signs(Matching(0, 1, "+-")).signs == "+-"


def test_invalid_sign_sequences():
    for bad in [("+-", 1, 1), ("+x", 0, 1), ("--", 0, 1)]:
        with pytest.raises(ValueError):
            SignSequence(bad[1], bad[2], bad[0])


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4)])
def test_bijection_and_invariants(m, n):
    for mch in enumerate_matchings(m, n):
        assert from_signs(to_signs(mch)) == mch
        covered = sorted([p for c in mch.cups for p in c] + list(mch.rays))
        assert covered == list(range(mch.size))
        for a, b in mch.cups:
            span = mch.cup_span((a, b))
            inside = [mch.partner(p) for p in span[1:-1]]
            # everything strictly inside a cup is matched inside it
            assert all(q is not None and q in span for q in inside)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4)])
def test_cup_decomposition_round_trip(m, n):
    for mch in enumerate_matchings(m, n):
        w = cup_decomposition(mch)
        assert len(w) == n and (w.source_size, w.target_size) == (m, mch.size)
        assert evaluate(w, m) == mch


def test_cup_decomposition_examples():
    assert cup_decomposition(from_signs("++")).gens == ()
    assert cup_decomposition(from_signs("+-")).gens == (cup(2, 2),)
    assert cup_decomposition(from_signs("-+")).gens == (cup(1, 2),)
    assert len(cup_decomposition(from_signs("+-++"))) == 1


def test_json_round_trip():
    mch = from_signs("+-++")
    obj = mch.to_json()
    assert obj == {"m": 2, "n": 1, "signs": "+-++", "cups": [[1, 2]], "rays": [0, 3]}
    assert Matching.from_json(obj) == mch
    with pytest.raises(ValueError):
        Matching.from_json({**obj, "cups": [[0, 1]]})


@given(st.integers(0, 5), st.integers(0, 4), st.data())
def test_random_sign_strings_give_valid_matchings(m, n, data):
    size = m + 2 * n
    minus = data.draw(st.sets(st.integers(0, size - 1), min_size=n, max_size=n)) if size else set()
    signs = "".join("-" if p in minus else "+" for p in range(size))
    mch = from_signs(signs)
    assert len(mch.cups) == n and len(mch.rays) == m
    assert evaluate(cup_decomposition(mch), m) == mch
