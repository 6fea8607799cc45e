import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from annular_tangles.errors import ArityMismatch
from annular_tangles.ktheory import (
    euler_pairing_check,
    exact_rank,
    full_basis,
    full_matrix,
    gen_matrix,
    irreducible_classes,
    is_weight_preserving,
    psi_hat,
    weight,
    weight_basis,
)
from annular_tangles.matchings import cup_decomposition, enumerate_matchings
from annular_tangles.tangles import (
    TangleWord,
    cap,
    cross,
    cup,
    parse_word,
    rot_ccw,
    rot_cw,
    twist,
    wrap,
)


def mat(*gens):
    return full_matrix(TangleWord.of(*gens))


def test_basis_ordering():
    assert full_basis(2) == ["++", "+-", "-+", "--"]
    assert weight_basis(4, 0) == ["++--", "+-+-", "+--+", "-++-", "-+-+", "--++"]
    assert weight_basis(3, 0) == []
    assert all(weight(s) == 2 for s in weight_basis(6, 2))


def test_cap_cup_is_minus_two():
    assert mat(cup(1, 2), cap(1, 2)).tolist() == [[-2]]


def test_zigzag_is_identity():
    # f^1 o g^2 on two points
    assert np.array_equal(mat(cup(2, 4), cap(1, 4)), np.eye(4, dtype=np.int64))
    assert np.array_equal(mat(cup(1, 4), cap(2, 4)), np.eye(4, dtype=np.int64))


def test_reidemeister_one_scalar():
    # g^1, then the crossing t^1, then f^1: a kinked circle arc
    lhs = mat(cup(1, 4), cross(2, 4), cap(2, 4))
    assert np.array_equal(lhs, -np.eye(4, dtype=np.int64))


def test_crossing_squares_to_identity():
    c = gen_matrix(cross(2, 4), 4)
    assert np.array_equal(c @ c, np.eye(16, dtype=np.int64))


def test_twist_is_minus_one():
    assert np.array_equal(gen_matrix(twist(1, 3), 3), -np.eye(8, dtype=np.int64))


def test_rotation_has_order_n():
    r = gen_matrix(rot_cw(5), 5)
    acc = np.eye(32, dtype=np.int64)
    for _ in range(5):
        acc = r @ acc
    assert np.array_equal(acc, np.eye(32, dtype=np.int64))
    assert np.array_equal(r @ gen_matrix(rot_ccw(5), 5), np.eye(32, dtype=np.int64))


@pytest.mark.parametrize("k", range(2, 7))
def test_all_generators_preserve_weight(k):
    gens = [cross(i, k, o) for i in range(1, k + 1) for o in (True, False)]
    gens += [cap(i, k) for i in range(1, k + 1)]
    gens += [cup(i, k + 2) for i in range(1, k + 3)]
    gens += [rot_cw(k), rot_ccw(k), wrap(k), twist(1, k)]
    for g in gens:
        assert is_weight_preserving(gen_matrix(g, g.in_size), g.in_size, g.out_size), g


def test_arity_errors():
    with pytest.raises(ArityMismatch):
        gen_matrix(cup(1, 4), 4)
    with pytest.raises(ArityMismatch):
        psi_hat(TangleWord.identity(3), 0)


def test_psi_hat_examples():
    assert np.array_equal(psi_hat(TangleWord.identity(4), 0), np.eye(6, dtype=np.int64))
    assert psi_hat(parse_word("tangle 0 -> 2: g1"), 0).tolist() == [[-1], [1]]


def test_irreducible_classes_small():
    assert irreducible_classes(0, 1).tolist() == [[1, -1], [-1, 1]]
    for m in range(4):
        assert irreducible_classes(m, 0).tolist() == [[1]]


def test_class_is_cup_word_image():
    for mch in enumerate_matchings(2, 1):
        col = irreducible_classes(2, 1)[:, enumerate_matchings(2, 1).index(mch)]
        direct = psi_hat(cup_decomposition(mch), 2)[:, 0]
        assert np.array_equal(col, direct)


def test_exact_rank():
    assert exact_rank(np.array([[1, 2], [2, 4]])) == 1
    assert exact_rank(np.eye(5, dtype=np.int64)) == 5
    assert exact_rank(np.zeros((3, 0), dtype=np.int64)) == 0


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_exact_rank_matches_numpy_on_small_matrices(rows):
    a = np.array(rows, dtype=np.int64)
    assert exact_rank(a) == np.linalg.matrix_rank(a.astype(float))


def test_euler_pairing_rows():
    rep = euler_pairing_check(2, 1)
    assert rep.passed and rep.sign == 1
    by_pair = {(a, b): (s, e) for a, b, s, e in rep.rows}
    assert by_pair[("-+++", "-+++")] == (-2, -2)
    assert by_pair[("-+++", "+-++")] == (1, 1)
    assert by_pair[("-+++", "++-+")] == (0, 0)
    rep0 = euler_pairing_check(0, 1)
    assert {(s, e) for *_, s, e in rep0.rows} == {(-2, -2), (2, 2)}
