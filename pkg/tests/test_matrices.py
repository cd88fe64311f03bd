from fractions import Fraction

import pytest

from latlab.matrices import ExactMatrix, mat_det, mat_inv, mat_mul
from latlab.scalars import QuadScalar


def test_det_examples():
    assert mat_det(ExactMatrix.identity(3)) == 1
    assert mat_det(ExactMatrix.from_rows([[2, 0], [1, 1]])) == 2
    assert mat_det(ExactMatrix.from_rows([[0, 2], [1, 0]])) == -2


def test_inverse_roundtrip():
    m = ExactMatrix.from_rows([[2, 1], [1, 1]])
    assert mat_mul(m, mat_inv(m)).is_identity()
    with pytest.raises(ValueError):
        mat_inv(ExactMatrix.from_rows([[1, 2], [2, 4]]))


def test_singular_det_is_zero():
    assert mat_det(ExactMatrix.from_rows([[1, 2], [2, 4]])) == 0


def test_det_multiplicative_on_random_4x4(rnd):
    for _ in range(60):
        a = ExactMatrix.from_rows(
            [[Fraction(rnd.randint(-6, 6), rnd.randint(1, 3)) for _ in range(4)]
             for _ in range(4)])
        b = ExactMatrix.from_rows(
            [[Fraction(rnd.randint(-6, 6), rnd.randint(1, 3)) for _ in range(4)]
             for _ in range(4)])
        assert mat_det(a * b) == mat_det(a) * mat_det(b)


def test_quadratic_entries():
    s = QuadScalar(0, 1, 2)
    m = ExactMatrix.from_rows([[s, 1], [0, s]])
    assert mat_det(m) == QuadScalar(2, 0, 2)
    inv = mat_inv(m)
    assert (m * inv).is_identity()


def test_transpose_trace_pow():
    m = ExactMatrix.from_rows([[1, 2], [3, 4]])
    assert m.transpose().to_rows() == [[1, 3], [2, 4]]
    assert m.trace() == 5
    assert (m ** 0).is_identity()
    assert (m ** 2) == m * m


def test_shape_errors():
    with pytest.raises(ValueError):
        ExactMatrix.from_rows([[1, 2], [3]])
    a = ExactMatrix.identity(2)
    b = ExactMatrix.from_rows([[1, 2, 3]])
    with pytest.raises(ValueError):
        a * b
    with pytest.raises(ValueError):
        b.det()


def test_solve_and_integrality():
    m = ExactMatrix.from_rows([[2, 1], [1, 1]])
    x = m.solve([3, 2])
    assert x == [Fraction(1), Fraction(1)]
    assert m.is_integral()
    assert not ExactMatrix.from_rows([[Fraction(1, 2)]]).is_integral()
