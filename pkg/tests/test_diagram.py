from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from annular_tangles.diagram import (
    Bad,
    Good,
    Laurent,
    classify,
    compose_matchings,
    evaluate,
    ext_poincare,
    nesting_forest,
)
from annular_tangles.errors import InvalidGenerator, MixedContext
from annular_tangles.geometry import polylines_touch
from annular_tangles.matchings import enumerate_matchings, from_signs
from annular_tangles.tangles import parse_word


def test_compose_examples():
    a, b = from_signs("+-"), from_signs("-+")
    d = compose_matchings(a, a)
    assert len(d.loops) == 1 and d.loops[0].winding == 0
    d = compose_matchings(a, b)
    assert len(d.loops) == 1 and abs(d.loops[0].winding) == 1
    d = compose_matchings(from_signs("-+++"), from_signs("-+++"))
    assert len(d.loops) == 1 and len(d.throughs) == 2


def test_classify_examples():
    cup01, cup23 = from_signs("-+++"), from_signs("++-+")
    assert classify(compose_matchings(cup01, cup23)) == Bad()
    assert classify(compose_matchings(cup01, from_signs("+-++"))) == Good(0, 0)
    assert classify(compose_matchings(from_signs("+-"), from_signs("-+"))) == Good(0, 1)


def test_mixed_context():
    with pytest.raises(MixedContext):
        compose_matchings(from_signs("+-"), from_signs("+-++"))


def _total_table(m):
    ms = enumerate_matchings(m, 1)
    return np.array([[ext_poincare(a, b).total() for b in ms] for a in ms])


def test_ext_table_m2_is_circulant():
    t = _total_table(2)
    row = [2, 1, 0, 1]
    want = np.array([row[-k:] + row[:-k] for k in range(4)])
    assert np.array_equal(t, want)


def test_ext_table_m0():
    ms = enumerate_matchings(0, 1)
    assert np.array_equal(_total_table(0), np.full((2, 2), 2))
    for a, b in product(ms, ms):
        want = Good(1, 0) if a == b else Good(0, 1)
        assert classify(compose_matchings(a, b)) == want


@pytest.mark.parametrize("m", [1, 2, 3])
def test_linkgen_pattern(m):
    # at n = 1 the composite is a circle, a through-pair or bad, depending on
    # the cyclic distance between the two cups
    ms = enumerate_matchings(m, 1)
    size = m + 2
    for a, b in product(ms, ms):
        i, k = a.cups[0][0], b.cups[0][0]
        dist = min((i - k) % size, (k - i) % size)
        cls = classify(compose_matchings(a, b))
        if dist == 0:
            assert cls == Good(1, 0)
        elif dist == 1 or (m == 1 and dist <= 1) or size <= 3:
            assert cls == Good(0, 0)
        else:
            assert cls == Bad()


def test_poincare_strings():
    a, b = from_signs("+-++"), from_signs("-+++")
    assert str(ext_poincare(a, a)) == "1+q^2"
    assert str(ext_poincare(a, b)) == "q"
    assert str(ext_poincare(from_signs("+-"), from_signs("-+"))) == "2q"
    assert str(ext_poincare(a, from_signs("+++-"))) == "0"
    assert str(Laurent({-1: 1, 0: -2, 3: -1})) == "q^-1-2-q^3"


def test_laurent_evaluation():
    p = Laurent({-1: 1, 1: 1})
    assert p.evaluate(-1) == -2
    assert (p ** 2).terms == {-2: 1, 0: 2, 2: 1}
    assert Laurent() == 0


@pytest.mark.parametrize("m,n", [(0, 1), (0, 2), (1, 2), (2, 2), (0, 3)])
def test_ext_total_is_rotation_invariant(m, n):
    ms = enumerate_matchings(m, n)

    def rot(x):
        return from_signs(x.signs[1:] + x.signs[:1])

    for a, b in product(ms, ms):
        assert ext_poincare(a, b) == ext_poincare(rot(a), rot(b))


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(1, 4) if m + 2 * n <= 7])
def test_winding_bounds_and_goodness(m, n):
    for a, b in product(enumerate_matchings(m, n), repeat=2):
        d = compose_matchings(a, b)
        assert all(lp.winding in (-1, 0, 1) for lp in d.loops)
        cls = classify(d)
        if m > 0 and isinstance(cls, Good):
            assert cls.omega0 == 0


def test_nesting_examples():
    d = compose_matchings(from_signs("-+-+"), from_signs("-+-+"))
    assert nesting_forest(d) == {0: None, 1: None}
    nested = from_signs("++--")
    d = compose_matchings(nested, nested)
    forest = nesting_forest(d)
    roots = [k for k, v in forest.items() if v is None]
    assert len(roots) == 1 and len(forest) == 2
    d = compose_matchings(from_signs("+-"), from_signs("+-"))
    assert nesting_forest(d) == {0: None}


@pytest.mark.parametrize("m,n", [(0, 2), (0, 3), (1, 2), (2, 2)])
def test_nesting_is_router_independent(m, n):
    for a, b in product(enumerate_matchings(m, n), repeat=2):
        f1 = nesting_forest(compose_matchings(a, b, "grid64"))
        f2 = nesting_forest(compose_matchings(a, b, "grid48"))
        assert f1 == f2


@pytest.mark.parametrize("signs", ["++--", "+-+-", "--++", "+--+-+"])
def test_polylines_are_disjoint(signs):
    a = from_signs(signs)
    d = compose_matchings(a, a)
    strands = [s for lp in d.loops for s in lp.strands] + [s for p in d.throughs for s in p.strands]
    for i in range(len(strands)):
        for j in range(i + 1, len(strands)):
            s, t = strands[i], strands[j]
            if set(s.ends) & set(t.ends):
                continue
            assert not polylines_touch(s.polyline, t.polyline, closed=False)


def test_polyline_endpoints_on_circles():
    d = compose_matchings(from_signs("+-++"), from_signs("+-++"))
    for p in d.throughs:
        start, end = p.strands[0].polyline[0], p.strands[-1].polyline[-1]
        assert max(abs(start[0]), abs(start[1])) == Fraction(1)
        assert max(abs(end[0]), abs(end[1])) == Fraction(3)


def test_evaluate_rejects_caps():
    with pytest.raises(InvalidGenerator):
        evaluate(parse_word("tangle 2 -> 0: f1"), 2)


def test_evaluate_with_rotations():
    w = parse_word("tangle 0 -> 2: g1 r")
    assert evaluate(w, 0) == from_signs("+-")
