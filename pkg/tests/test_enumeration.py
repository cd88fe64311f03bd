from fractions import Fraction

import pytest

from latlab import _svp
from latlab.enumeration import (
    BudgetExceededError,
    shortest_vector,
    compiled_available,
    _fits_compiled,
)
from latlab.scalars import QuadScalar

from conftest import brute_force_minimum, oracle_witness_key, random_integer_basis


def _gram_of(basis):
    n = len(basis)
    return [[sum(basis[i][k] * basis[j][k] for k in range(n)) for j in range(n)]
            for i in range(n)]


def test_identity_lattice():
    value, witness, nodes = shortest_vector([[1, 0], [0, 1]])
    assert value == 1 and witness == (1, 0) and nodes > 0


def test_budget_exhaustion():
    with pytest.raises(BudgetExceededError):
        shortest_vector([[1, 0], [0, 1]], node_budget=2)


def test_agrees_with_brute_force(rnd):
    for _ in range(60):
        basis = random_integer_basis(rnd, 3)
        gram = _gram_of(basis)
        value, witness, _ = shortest_vector(gram)
        oracle_value, minimizers = brute_force_minimum(gram)
        assert value == oracle_value
        canonical = min(oracle_witness_key(v) for v in minimizers)[1]
        assert witness == canonical


def test_pure_and_compiled_twins_match(rnd):
    if not compiled_available():
        pytest.skip("compiled kernel not built")
    from latlab import _svp_c

    for _ in range(120):
        n = rnd.choice([2, 3, 4])
        gram = _gram_of(random_integer_basis(rnd, n))
        d, lam = _svp.integral_gso(gram)
        c0, seed = _svp.initial_bound(gram)
        assert _fits_compiled(gram, d, lam, c0)
        pure = _svp.search(gram, d, lam, c0, seed, 10**6, _svp.IntRing)
        comp = _svp_c.search_int(gram, d, lam, c0, seed, 10**6)
        assert pure == tuple(comp)


def test_rational_gram_scaling():
    gram = [[Fraction(1), Fraction(9, 10)],
            [Fraction(9, 10), Fraction(82, 100)]]
    value, witness, _ = shortest_vector(gram)
    assert value == Fraction(1, 50)
    assert witness == (1, -1)


def test_quadratic_gram():
    # Gram of the basis (1, 0), (sqrt(2), 1) over Q(sqrt(2))
    s = QuadScalar(0, 1, 2)
    gram = [[QuadScalar(1, 0, 2), s], [s, QuadScalar(3, 0, 2)]]
    value, witness, _ = shortest_vector(gram)
    assert value == QuadScalar(1, 0, 2)
    assert witness == (1, 0)


def test_quadratic_gram_with_irrational_minimum():
    # diag(3 - sqrt(2), 4): minimum is the irrational 3 - sqrt(2)
    gram = [[QuadScalar(3, -1, 2), QuadScalar(0, 0, 2)],
            [QuadScalar(0, 0, 2), QuadScalar(4, 0, 2)]]
    value, witness, _ = shortest_vector(gram)
    assert value == QuadScalar(3, -1, 2)
    assert witness == (1, 0)


def test_imaginary_gram_rejected():
    gram = [[QuadScalar(1, 1, -1)]]
    with pytest.raises(ValueError):
        shortest_vector(gram)


def test_not_positive_definite_rejected():
    with pytest.raises(ValueError):
        shortest_vector([[1, 0], [0, -1]])


def test_deterministic_node_counts():
    gram = _gram_of([[3, 1, 0], [1, 2, 1], [0, 1, 4]])
    first = shortest_vector(gram)
    second = shortest_vector(gram)
    assert first == second


def test_nearest_helpers():
    ring = _svp.QuadIntRing(2)
    # nearest integer to (3 + 2*sqrt(2)) / 2 = 2.914... -> 3
    num = QuadScalar(3, 2, 2)
    den = QuadScalar(2, 0, 2)
    assert ring.nearest(num, den) == 3
    assert _svp.IntRing.nearest(-3, 2) == -1
    assert _svp.IntRing.nearest(3, 2) == 2


def test_pure_fallback_on_huge_entries():
    # entries far beyond the 62-bit certificate: must route to the pure kernel
    big = 1 << 80
    gram = [[big, 1], [1, 2]]
    d, lam = _svp.integral_gso(gram)
    c0, _ = _svp.initial_bound(gram)
    assert not _fits_compiled(gram, d, lam, c0)
    value, witness, _ = shortest_vector(gram)
    assert value == 2 and witness == (0, 1)


def test_quad_floor_helpers_are_exact(rnd):
    for _ in range(3000):
        m = rnd.choice([2, 3, 5, 7, 13])
        ring = _svp.QuadIntRing(m)
        p = rnd.randint(-10**6, 10**6)
        q = rnd.randint(-10**6, 10**6)
        r = rnd.randint(1, 10**4)
        z = ring._floor_ratio(p, q, r)
        # z is certified by z*r <= p + q*sqrt(m) < (z+1)*r, both exact
        assert _svp._int_le_sqrt(z * r - p, q, m)
        assert not _svp._int_le_sqrt((z + 1) * r - p, q, m)
