"""Quadratic number fields and signature computation.

Quadratic fields Q(sqrt(m)) get full exact arithmetic (rings of integers,
both monomorphisms, the trace-form lattice of the integer ring inside the
product of real embeddings).  General monic integer polynomials are admitted
for signature queries only: the number of real roots is counted exactly with
Sturm sequences over Q.
"""

from __future__ import annotations

from fractions import Fraction

from .euclid import EuclideanLattice, systole_sq
from .scalars import QuadScalar, sign, validate_field_param


class NumberFieldDesc:
    """A quadratic field Q(sqrt(m)) or a monic integer polynomial (signature only)."""

    __slots__ = ("m", "minpoly", "degree")

    def __init__(self, m=None, minpoly=None):
        if (m is None) == (minpoly is None):
            raise ValueError("give exactly one of m and minpoly")
        if m is not None:
            validate_field_param(m)
            self.m = m
            self.minpoly = None
            self.degree = 2
        else:
            coeffs = [int(c) for c in minpoly]
            if len(coeffs) < 2:
                raise ValueError("minimal polynomial must have degree >= 1")
            if coeffs[-1] != 1:
                raise ValueError("minimal polynomial must be monic")
            derivative = _poly_deriv([Fraction(c) for c in coeffs])
            if _poly_gcd_degree(coeffs, derivative) != 0:
                raise ValueError("minimal polynomial must be squarefree")
            self.m = None
            self.minpoly = tuple(coeffs)
            self.degree = len(coeffs) - 1

    @property
    def is_quadratic(self) -> bool:
        return self.m is not None

    def __repr__(self):
        if self.is_quadratic:
            return "NumberFieldDesc(m=%d)" % self.m
        return "NumberFieldDesc(minpoly=%r)" % (list(self.minpoly),)


class IntegerRing:
    """Ring of integers Z[omega] of a quadratic field."""

    __slots__ = ("field", "omega", "omega_is_half")

    def __init__(self, field: NumberFieldDesc):
        if not field.is_quadratic:
            raise ValueError("rings of integers are computed for quadratic fields only")
        self.field = field
        m = field.m
        if m % 4 == 1:
            self.omega = QuadScalar(Fraction(1, 2), Fraction(1, 2), m)
            self.omega_is_half = True
        else:
            self.omega = QuadScalar(0, 1, m)
            self.omega_is_half = False

    @property
    def m(self) -> int:
        return self.field.m

    def contains(self, x) -> bool:
        """Membership of a field element in Z[omega]."""
        if isinstance(x, (int, Fraction)):
            return Fraction(x).denominator == 1
        if not isinstance(x, QuadScalar):
            return False
        if x.b != 0 and x.m != self.m:
            return False
        a, b = Fraction(x.a), Fraction(x.b)
        if self.omega_is_half:
            # x = p + q*omega with omega = (1+sqrt(m))/2: q = 2b, p = a - b
            return (2 * b).denominator == 1 and (a - b).denominator == 1
        return a.denominator == 1 and b.denominator == 1

    def coordinates(self, x):
        """(p, q) with x = p + q*omega, or None when x is not in the ring."""
        if not self.contains(x):
            return None
        if isinstance(x, (int, Fraction)):
            return int(Fraction(x)), 0
        a, b = Fraction(x.a), Fraction(x.b)
        if self.omega_is_half:
            return int(a - b), int(2 * b)
        return int(a), int(b)

    def label(self) -> str:
        if self.omega_is_half:
            return "Z[(1+sqrt(%d))/2]" % self.m
        return "Z[sqrt(%d)]" % self.m

    def __repr__(self):
        return "IntegerRing(%s)" % self.label()


class Signature:
    """Counts (r1, r2) of real monomorphisms and complex-conjugate pairs."""

    __slots__ = ("r1", "r2")

    def __init__(self, r1: int, r2: int):
        self.r1 = r1
        self.r2 = r2

    def __eq__(self, other):
        if isinstance(other, Signature):
            return (self.r1, self.r2) == (other.r1, other.r2)
        if isinstance(other, tuple):
            return (self.r1, self.r2) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.r1, self.r2))

    def __iter__(self):
        return iter((self.r1, self.r2))

    def __repr__(self):
        return "Signature(r1=%d, r2=%d)" % (self.r1, self.r2)


def ring_of_integers(field: NumberFieldDesc) -> IntegerRing:
    """Z[sqrt(m)] or Z[(1+sqrt(m))/2] according to m mod 4."""
    return IntegerRing(field)


def signature_quad(m: int) -> Signature:
    """(2, 0) for a real quadratic field, (0, 1) for an imaginary one."""
    validate_field_param(m)
    return Signature(2, 0) if m > 0 else Signature(0, 1)


# -- polynomials over Q (ascending coefficient lists) ------------------------------


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_deriv(p):
    return [Fraction(i) * p[i] for i in range(1, len(p))]


def _poly_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_rem(num, den):
    num = list(num)
    lead = den[-1]
    while len(num) >= len(den):
        factor = num[-1] / lead
        shift = len(num) - len(den)
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        num.pop()
        _poly_trim(num)
        if not num:
            break
    return num


def _poly_gcd_degree(p, q) -> int:
    """Degree of gcd(p, q) over Q."""
    a = _poly_trim([Fraction(c) for c in p])
    b = _poly_trim([Fraction(c) for c in q])
    while b:
        a, b = b, _poly_rem(a, b)
    return len(a) - 1


def sturm_chain(p):
    """The Sturm sequence of a squarefree rational polynomial."""
    chain = [list(p), _poly_deriv(p)]
    while len(chain[-1]) > 1:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _sign_variations(chain, x) -> int:
    signs = []
    for poly in chain:
        v = _poly_eval(poly, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_real_roots(coeffs) -> int:
    """Exact number of real roots of a squarefree rational polynomial."""
    p = _poly_trim([Fraction(c) for c in coeffs])
    if len(p) <= 1:
        raise ValueError("polynomial must have degree >= 1")
    bound = 1 + max(abs(c) for c in p[:-1]) / abs(p[-1])
    chain = sturm_chain(p)
    return _sign_variations(chain, -bound) - _sign_variations(chain, bound)


def signature_poly(minpoly) -> Signature:
    """Signature of the field defined by a monic squarefree integer polynomial."""
    coeffs = [int(c) for c in minpoly]
    if len(coeffs) < 2:
        raise ValueError("polynomial must have degree >= 1")
    if coeffs[-1] != 1:
        raise ValueError("polynomial must be monic")
    if _poly_gcd_degree(coeffs, _poly_deriv([Fraction(c) for c in coeffs])) != 0:
        raise ValueError("polynomial is not squarefree")
    degree = len(coeffs) - 1
    r1 = count_real_roots(coeffs)
    return Signature(r1, (degree - r1) // 2)


def signature(field: NumberFieldDesc) -> Signature:
    if field.is_quadratic:
        return signature_quad(field.m)
    return signature_poly(field.minpoly)


# -- the trace-form lattice --------------------------------------------------------


def field_trace(x) -> Fraction:
    """Trace of a quadratic-field element: x plus its conjugate, = 2a."""
    if isinstance(x, QuadScalar):
        return x.trace()
    return Fraction(2) * Fraction(x)


def field_norm(x) -> Fraction:
    """Norm of a quadratic-field element: x times its conjugate, = a^2 - m b^2."""
    if isinstance(x, QuadScalar):
        return x.norm()
    return Fraction(x) * Fraction(x)


def minkowski_lattice(ring: IntegerRing) -> EuclideanLattice:
    """Image of Z[omega] under x -> (x, conjugate(x)) in R x R (m > 0 only).

    The Gram matrix is the exact trace form Tr(w_i w_j); its determinant is
    the field discriminant.
    """
    if ring.m < 0:
        raise ValueError(
            "no canonical exact Gram convention for imaginary quadratic fields"
        )
    one = QuadScalar(1, 0, ring.m)
    omega = ring.omega
    basis = [
        (one, one.conjugate()),
        (omega, omega.conjugate()),
    ]
    return EuclideanLattice(basis)


def o_discreteness_check(ring: IntegerRing, node_budget=None):
    """Systole^2 of the trace-form lattice; positive because the form is PD."""
    lattice = minkowski_lattice(ring)
    value, _ = systole_sq(lattice, node_budget)
    if not sign(value) > 0:
        raise AssertionError("trace form produced a nonpositive minimum")
    return value
