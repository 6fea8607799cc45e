import pytest

from annular_tangles.arc_algebra import (
    MIXED,
    ArcAlgebraElement,
    BasisDiagram,
    basis,
    canonical_order,
    check_block_ranks,
    check_degree,
    check_order,
    check_unit,
    degree,
    identity_element,
    multiply,
    multiply_basis,
    surgery_orders,
)
from annular_tangles.errors import MixedContext, NoSupport
from annular_tangles.matchings import from_signs


def bd(a, b, *labels):
    return BasisDiagram(from_signs(a), from_signs(b), tuple(labels))


def el(*terms):
    b = terms[0][0]
    return ArcAlgebraElement(b.m, b.n, dict(terms))


def test_basis_sizes():
    assert len(basis(0, 1)) == 8
    assert len(basis(2, 1)) == 16
    b10 = basis(1, 0)
    assert len(b10) == 1 and b10[0].labels == () and b10[0].degree == 0


def test_basis_diagram_validation():
    with pytest.raises(ValueError):
        bd("-+++", "++-+")  # bad m-link
    with pytest.raises(ValueError):
        bd("+-", "+-", "Y1")
    with pytest.raises(ValueError):
        bd("+-", "-+", "X")
    with pytest.raises(ValueError):
        bd("+-", "+-")


def test_one_cup_products():
    one, x = bd("+-++", "+-++", "1"), bd("+-++", "+-++", "X")
    assert multiply_basis(one, one) == ArcAlgebraElement.of(one)
    assert multiply_basis(one, x) == ArcAlgebraElement.of(x)
    assert multiply_basis(x, one) == ArcAlgebraElement.of(x)
    assert not multiply_basis(x, x)
    assert x.degree == 2 and one.degree == 0


def test_zero_circle_merge_is_antisymmetric():
    y1 = bd("+-", "-+", "Y1")
    y2 = bd("-+", "+-", "Y2")
    assert multiply_basis(y1, y2) == ArcAlgebraElement.of(bd("+-", "+-", "X"))
    y2b = bd("+-", "-+", "Y2")
    y1b = bd("-+", "+-", "Y1")
    assert multiply_basis(y2b, y1b) == ArcAlgebraElement.of(bd("+-", "+-", "X"), -1)
    assert not multiply_basis(y1, bd("-+", "+-", "Y1"))


def test_split_into_zero_circles():
    e = bd("+-", "+-", "1")
    y = bd("+-", "-+", "Y1")
    assert multiply_basis(e, y) == ArcAlgebraElement.of(y)


def test_mismatched_middle_is_zero():
    x = bd("+-++", "+-++", "1")
    y = bd("-+++", "-+++", "1")
    assert not multiply_basis(x, y)


def test_mixed_context():
    with pytest.raises(MixedContext):
        multiply(ArcAlgebraElement.of(bd("+-", "+-", "1")), ArcAlgebraElement.of(bd("+-++", "+-++", "1")))


def test_bilinearity():
    a, b = bd("+-", "+-", "1"), bd("+-", "+-", "X")
    s = el((a, 2), (b, -3))
    assert multiply(s, ArcAlgebraElement.of(a)) == 2 * ArcAlgebraElement.of(a) - 3 * ArcAlgebraElement.of(b)
    assert s * s == el((a, 4), (b, -12))


def test_degree():
    assert degree(identity_element(2, 1)) == 0
    assert degree(ArcAlgebraElement.of(bd("+-++", "+-++", "X"))) == 2
    assert degree(el((bd("+-", "+-", "1"), 1), (bd("+-", "+-", "X"), 1))) is MIXED
    with pytest.raises(NoSupport):
        degree(ArcAlgebraElement.zero(0, 1))


def test_identity_examples():
    e = identity_element(3, 0)
    assert len(e.coeffs) == 1
    e21 = identity_element(2, 1)
    assert e21 * e21 == e21
    e01 = identity_element(0, 1)
    for b in basis(0, 1):
        assert e01 * ArcAlgebraElement.of(b) == ArcAlgebraElement.of(b)


def test_surgery_orders():
    nested = from_signs("++--")
    assert list(surgery_orders(nested)) == [canonical_order(nested)]
    side_by_side = from_signs("-+-+")
    assert len(list(surgery_orders(side_by_side))) == 2
    # enclosing cups come first
    assert canonical_order(nested)[0] == (2, 1)


@pytest.mark.parametrize("m,n", [(0, 1), (1, 1), (2, 1), (3, 1)])
def test_small_suites(m, n):
    for check in (check_unit, check_degree, check_order, check_block_ranks):
        assert check(m, n).passed


def test_json_round_trip():
    b = bd("+-++", "+-++", "X")
    assert BasisDiagram.from_json(b.to_json()) == b
    lines = ArcAlgebraElement.of(b, 3).to_json_lines()
    assert lines == ['{"alpha": "+-++", "beta": "+-++", "labels": ["X"], "coeff": 3}']
