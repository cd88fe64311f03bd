from fractions import Fraction

import pytest

from latlab.groups import (
    DiagForm,
    GroupSpec,
    Verdict,
    ad_action,
    adjoint_systole,
    conjugate_form,
    exp_nilpotent,
    is_definite,
    is_nilpotent,
    is_unipotent,
    isotropic_search,
    preserves_form,
    unipotent_from_isotropic,
    uniformity_verdict,
)
from latlab.matrices import ExactMatrix
from latlab.numfield import NumberFieldDesc
from latlab.scalars import QuadScalar

from conftest import random_unimodular

K2 = NumberFieldDesc(m=2)
SQRT2 = QuadScalar(0, 1, 2)


def _e(i, j, n):
    rows = [[0] * n for _ in range(n)]
    rows[i][j] = 1
    return ExactMatrix.from_rows(rows)


def test_conjugate_form_examples():
    f = DiagForm([-SQRT2, 1, 1, 1], K2)
    fc = conjugate_form(f, 1)
    assert fc.coeffs[0] == SQRT2
    rational = DiagForm([1, -1])
    assert conjugate_form(rational, 0) is rational
    with pytest.raises(ValueError):
        conjugate_form(rational, 1)
    k5 = NumberFieldDesc(m=5)
    # rational coefficients over a quadratic field are fixed by sigma
    fixed = conjugate_form(DiagForm([1, -1], k5), 1)
    assert fixed.coeffs == (1, -1)
    f5 = conjugate_form(DiagForm([QuadScalar(1, 1, 5), -1], k5), 1)
    assert f5.coeffs[0] == QuadScalar(1, -1, 5)


def test_is_definite_examples():
    assert is_definite(DiagForm([SQRT2, 1, 1, 1], K2))
    assert not is_definite(DiagForm([-SQRT2, 1, 1], K2))
    assert is_definite(DiagForm([-1, -1]))
    imaginary = DiagForm([QuadScalar(1, 1, -1), 1], NumberFieldDesc(m=-1))
    with pytest.raises(ValueError):
        is_definite(imaginary)


def test_preserves_form_examples():
    assert preserves_form(ExactMatrix.identity(2), DiagForm([1, 1]))
    rotation = ExactMatrix.from_rows([[0, -1], [1, 0]])
    assert preserves_form(rotation, DiagForm([1, 1]))
    boost = ExactMatrix.from_rows(
        [[Fraction(5, 3), Fraction(4, 3)], [Fraction(4, 3), Fraction(5, 3)]])
    assert preserves_form(boost, DiagForm([1, -1]))
    assert not preserves_form(2 * ExactMatrix.identity(2), DiagForm([1, 1]))


def test_unipotent_examples():
    assert is_unipotent(ExactMatrix.identity(3))
    assert is_unipotent(ExactMatrix.from_rows([[1, 1], [0, 1]]))
    assert not is_unipotent(ExactMatrix.from_rows([[2, 0], [0, Fraction(1, 2)]]))


def test_trace_power_equivalence(rnd):
    # half generic (almost never nilpotent), half conjugated strict triangulars
    for trial in range(300):
        if trial % 2 == 0:
            x = ExactMatrix.from_rows(
                [[rnd.randint(-4, 4) for _ in range(3)] for _ in range(3)])
        else:
            strict = [[0] * 3 for _ in range(3)]
            for i in range(3):
                for j in range(i + 1, 3):
                    strict[i][j] = rnd.randint(-4, 4)
            u = random_unimodular(rnd, 3)
            x = u * ExactMatrix.from_rows(strict) * u.inv()
        power = (x ** 3).is_zero()
        traces_vanish = all((x ** j).trace() == 0 for j in (1, 2, 3))
        assert power == traces_vanish
        assert is_nilpotent(x) == power


def test_exp_nilpotent_examples():
    n2 = ExactMatrix.identity(2)
    assert exp_nilpotent(ExactMatrix.zero(2, 2)) == n2
    e12 = _e(0, 1, 2)
    assert exp_nilpotent(e12) == n2 + e12
    x = _e(0, 1, 3) + _e(1, 2, 3)
    expected = (ExactMatrix.identity(3) + x
                + _e(0, 2, 3) * Fraction(1, 2))
    assert exp_nilpotent(x) == expected
    with pytest.raises(ValueError):
        exp_nilpotent(ExactMatrix.identity(2))


def test_exp_nilpotent_is_unipotent(rnd):
    for _ in range(40):
        strict = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(i + 1, 3):
                strict[i][j] = rnd.randint(-5, 5)
        u = random_unimodular(rnd, 3)
        x = u * ExactMatrix.from_rows(strict) * u.inv()
        g = exp_nilpotent(x)
        assert is_unipotent(g)
        assert is_nilpotent(g - ExactMatrix.identity(3))


def test_ad_action_examples():
    x = ExactMatrix.from_rows([[1, 2], [3, 4]])
    assert ad_action(ExactMatrix.identity(2), x) == x
    g = ExactMatrix.from_rows([[2, 0], [0, Fraction(1, 2)]])
    assert ad_action(g, _e(0, 1, 2)) == 4 * _e(0, 1, 2)
    assert ad_action(g, x).trace() == x.trace()


def test_ad_action_is_group_action(rnd):
    for _ in range(50):
        g = random_unimodular(rnd, 3)
        h = random_unimodular(rnd, 3)
        x = ExactMatrix.from_rows(
            [[rnd.randint(-3, 3) for _ in range(3)] for _ in range(3)])
        assert ad_action(g * h, x) == ad_action(g, ad_action(h, x))


def test_adjoint_systole_examples():
    res = adjoint_systole(ExactMatrix.identity(2), 2)
    assert res.min_norm_sq == 1
    assert res.witness == _e(0, 1, 2)
    assert res.witness_nilpotent
    for t, expected in ((2, Fraction(1, 16)), (4, Fraction(1, 256))):
        g = ExactMatrix.from_rows([[t, 0], [0, Fraction(1, t)]])
        res = adjoint_systole(g, 3)
        assert res.min_norm_sq == expected
        assert res.witness == _e(1, 0, 2)
        assert res.witness_nilpotent


def test_adjoint_systole_strictly_decreasing():
    values = []
    for t in (2, 4, 8):
        g = ExactMatrix.from_rows([[t, 0], [0, Fraction(1, t)]])
        res = adjoint_systole(g, 3)
        assert res.witness_nilpotent
        values.append(res.min_norm_sq)
    assert values[0] > values[1] > values[2]


def test_adjoint_systole_validation():
    with pytest.raises(ValueError):
        adjoint_systole(ExactMatrix.from_rows([[2, 0], [0, 1]]), 2)


def test_isotropic_search_examples():
    assert isotropic_search(DiagForm([1, -1]), 1) == (1, 1)
    assert isotropic_search(DiagForm([1, 1]), 4) is None
    assert isotropic_search(DiagForm([1, 1, -1]), 1) == (1, 0, 1)
    f = DiagForm([-SQRT2, 1, 1], K2)
    assert isotropic_search(f, 10) is None


def test_isotropic_search_quadratic_witness():
    f = DiagForm([SQRT2, 1, -1], K2)
    vec = isotropic_search(f, 2)
    assert vec is not None
    assert f.value(vec) == 0


def test_unipotent_from_isotropic():
    f = DiagForm([1, 1, -1])
    g = unipotent_from_isotropic(f, (1, 0, 1))
    assert preserves_form(g, f) and is_unipotent(g) and not g.is_identity()
    f2 = DiagForm([1, -1, 1])
    g2 = unipotent_from_isotropic(f2, (1, 1, 0))
    assert preserves_form(g2, f2) and is_unipotent(g2) and not g2.is_identity()
    with pytest.raises(ValueError):
        unipotent_from_isotropic(f, (1, 1, 1))
    with pytest.raises(ValueError):
        unipotent_from_isotropic(DiagForm([1, -1]), (1, 1))


def test_verdict_sl():
    verdict = uniformity_verdict(GroupSpec("SL", n=2))
    assert verdict.status == Verdict.NOT_UNIFORM
    assert verdict.witness == ExactMatrix.from_rows([[1, 1], [0, 1]])
    assert is_unipotent(verdict.witness)


def test_verdict_so_definite_conjugate():
    spec = GroupSpec("SO", form=DiagForm([-SQRT2, 1, 1, 1], K2))
    verdict = uniformity_verdict(spec, height=10)
    assert verdict.status == Verdict.UNIFORM
    assert verdict.conjugate_name == "sqrt(2) -> -sqrt(2)"
    assert verdict.witness is None


def test_verdict_so_isotropic():
    spec = GroupSpec("SO", form=DiagForm([1, 1, -1]))
    verdict = uniformity_verdict(spec, height=1)
    assert verdict.status == Verdict.NOT_UNIFORM
    assert verdict.isotropic_vector == (1, 0, 1)
    assert spec.form.value(verdict.isotropic_vector) == 0
    assert preserves_form(verdict.witness, spec.form)
    assert is_unipotent(verdict.witness)
    assert not verdict.witness.is_identity()


def test_verdict_inconclusive():
    spec = GroupSpec("SO", form=DiagForm([1, 1, -7]))
    verdict = uniformity_verdict(spec, height=3)
    assert verdict.status == Verdict.INCONCLUSIVE
    assert verdict.search_bound == 3
    assert verdict.witness is None


def test_verdict_never_uniform_without_definite_conjugate():
    # all conjugates indefinite: only NotUniform or Inconclusive possible
    spec = GroupSpec("SO", form=DiagForm([QuadScalar(1, 1, 5), 1, -1],
                                         NumberFieldDesc(m=5)))
    verdict = uniformity_verdict(spec, height=2)
    assert verdict.status in (Verdict.NOT_UNIFORM, Verdict.INCONCLUSIVE)


def test_group_spec_validation():
    with pytest.raises(ValueError):
        GroupSpec("SL", n=1)
    with pytest.raises(ValueError):
        GroupSpec("SO")
    with pytest.raises(ValueError):
        DiagForm([1])
    with pytest.raises(ValueError):
        DiagForm([1, 0])
