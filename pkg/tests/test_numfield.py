from fractions import Fraction

import pytest

from latlab import covol_sq
from latlab.numfield import (
    NumberFieldDesc,
    count_real_roots,
    field_norm,
    field_trace,
    minkowski_lattice,
    o_discreteness_check,
    ring_of_integers,
    signature_poly,
    signature_quad,
)
from latlab.scalars import QuadScalar


def test_ring_of_integers_examples():
    r2 = ring_of_integers(NumberFieldDesc(m=2))
    assert r2.omega == QuadScalar(0, 1, 2) and r2.label() == "Z[sqrt(2)]"
    r5 = ring_of_integers(NumberFieldDesc(m=5))
    assert r5.omega == QuadScalar(Fraction(1, 2), Fraction(1, 2), 5)
    ri = ring_of_integers(NumberFieldDesc(m=-1))
    assert ri.omega == QuadScalar(0, 1, -1)
    r13 = ring_of_integers(NumberFieldDesc(m=13))
    assert r13.omega_is_half


def test_ring_membership():
    r5 = ring_of_integers(NumberFieldDesc(m=5))
    assert r5.contains(r5.omega)
    assert r5.contains(QuadScalar(3, -2, 5))
    assert not r5.contains(QuadScalar(Fraction(1, 2), 0, 5))
    assert r5.coordinates(r5.omega) == (0, 1)
    r2 = ring_of_integers(NumberFieldDesc(m=2))
    assert not r2.contains(QuadScalar(Fraction(1, 2), Fraction(1, 2), 2))


def test_signature_quad():
    assert tuple(signature_quad(2)) == (2, 0)
    assert tuple(signature_quad(-1)) == (0, 1)
    assert tuple(signature_quad(5)) == (2, 0)


def test_signature_poly_examples():
    assert tuple(signature_poly([-2, 0, 0, 1])) == (1, 1)
    assert tuple(signature_poly([1, 0, 1])) == (0, 1)
    assert tuple(signature_poly([-2, 0, 1])) == (2, 0)


def test_signature_poly_validation():
    with pytest.raises(ValueError):
        signature_poly([2, 0, 2])        # not monic
    with pytest.raises(ValueError):
        signature_poly([1, 2, 1])        # (t+1)^2 not squarefree
    with pytest.raises(ValueError):
        signature_poly([1])


def test_signature_poly_matches_quad():
    for m in (2, 3, 5, -1, -2, 13, -7):
        assert tuple(signature_poly([-m, 0, 1])) == tuple(signature_quad(m))


def test_sturm_against_grid_oracle(rnd):
    # the grid points are non-integers, so a monic integer polynomial never
    # vanishes there; with a 1/1024 step the sign changes count all real
    # roots of these small cubics (the minimal root separation exceeds it)
    for _ in range(50):
        while True:
            coeffs = [rnd.randint(-5, 5) for _ in range(3)] + [1]
            try:
                sig = signature_poly(coeffs)
                break
            except ValueError:
                continue
        bound = 1 + max(abs(c) for c in coeffs)
        den = 2048  # grid x = j/2048 with odd j: never an integer
        changes = 0
        prev = None
        c0, c1, c2, c3 = coeffs
        for j in range(-bound * den + 1, bound * den, 2):
            value = ((c3 * j + c2 * den) * j + c1 * den**2) * j + c0 * den**3
            assert value != 0
            s = 1 if value > 0 else -1
            if prev is not None and s != prev:
                changes += 1
            prev = s
        assert count_real_roots(coeffs) == changes == sig.r1


def test_minkowski_lattice_trace_forms():
    expected = {2: ([[2, 0], [0, 4]], 8),
                5: ([[2, 1], [1, 3]], 5),
                13: ([[2, 1], [1, 7]], 13)}
    for m, (gram, disc) in expected.items():
        lat = minkowski_lattice(ring_of_integers(NumberFieldDesc(m=m)))
        assert [[Fraction(e.a) if isinstance(e, QuadScalar) else Fraction(e)
                 for e in row] for row in lat.gram] == [
            [Fraction(x) for x in row] for row in gram]
        assert covol_sq(lat) == disc


def test_minkowski_gram_positive_definite():
    for m in (2, 3, 5, 13, 17):
        lat = minkowski_lattice(ring_of_integers(NumberFieldDesc(m=m)))
        g = lat.gram
        lead1 = g[0][0]
        lead2 = g[0][0] * g[1][1] - g[0][1] * g[1][0]
        assert lead1 > 0 and lead2 > 0


def test_minkowski_rejects_imaginary():
    with pytest.raises(ValueError):
        minkowski_lattice(ring_of_integers(NumberFieldDesc(m=-1)))


def test_o_discreteness():
    assert o_discreteness_check(ring_of_integers(NumberFieldDesc(m=2))) == 2
    assert o_discreteness_check(ring_of_integers(NumberFieldDesc(m=5))) == 2
    for m in (3, 13, 17):
        assert o_discreteness_check(ring_of_integers(NumberFieldDesc(m=m))) > 0


def test_trace_and_norm():
    assert field_trace(QuadScalar(0, 1, 2)) == 0
    assert field_norm(QuadScalar(1, 1, 2)) == -1
    assert field_norm(QuadScalar(Fraction(1, 2), Fraction(1, 2), 5)) == -1


def test_norm_multiplicative(rnd):
    for _ in range(200):
        m = rnd.choice([2, 5, -1, 13])
        x = QuadScalar(Fraction(rnd.randint(-9, 9), rnd.randint(1, 4)),
                       Fraction(rnd.randint(-9, 9), rnd.randint(1, 4)), m)
        y = QuadScalar(Fraction(rnd.randint(-9, 9), rnd.randint(1, 4)),
                       Fraction(rnd.randint(-9, 9), rnd.randint(1, 4)), m)
        assert field_norm(x * y) == field_norm(x) * field_norm(y)


def test_field_descriptor_validation():
    with pytest.raises(ValueError):
        NumberFieldDesc(m=12)
    with pytest.raises(ValueError):
        NumberFieldDesc()
    with pytest.raises(ValueError):
        NumberFieldDesc(minpoly=[1, 2])   # not monic
    desc = NumberFieldDesc(minpoly=[-2, 0, 0, 1])
    assert desc.degree == 3 and not desc.is_quadratic
    with pytest.raises(ValueError):
        ring_of_integers(desc)
