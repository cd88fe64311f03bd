"""Concrete algebraic-group families and the uniformity decision engine.

Covers SL(n) over a field and SO(f) for a diagonal quadratic form f, the
unipotent/nilpotent classification with its exact trace test, the exponential
of a nilpotent, Galois-conjugate forms, the adjoint-orbit systole detector,
and the verdict logic: a definite Galois conjugate proves a uniform lattice,
an explicit isotropic vector produces a unipotent witness against uniformity,
and anything else is reported as inconclusive rather than guessed.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import isqrt

from .matrices import ExactMatrix
from .numfield import NumberFieldDesc, IntegerRing, ring_of_integers
from .scalars import QuadScalar, sign, conjugate


class DiagForm:
    """Diagonal quadratic form sum_i d_i x_i^2 over Q or Q(sqrt(m))."""

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs, field: NumberFieldDesc | None = None):
        coeffs = [self._coerce(c, field) for c in coeffs]
        if len(coeffs) < 2:
            raise ValueError("a diagonal form needs at least two coefficients")
        if any(c == 0 for c in coeffs):
            raise ValueError("diagonal coefficients must be nonzero")
        self.field = field
        self.coeffs = tuple(coeffs)

    @staticmethod
    def _coerce(c, field):
        if isinstance(c, int):
            c = Fraction(c)
        if isinstance(c, QuadScalar):
            if field is None or not field.is_quadratic or c.m != field.m:
                if c.b != 0:
                    raise ValueError("coefficient %s does not live in the declared field" % c)
                c = Fraction(c.a)
        return c

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def matrix(self) -> ExactMatrix:
        n = self.nvars
        entries = []
        for i in range(n):
            for j in range(n):
                entries.append(self.coeffs[i] if i == j else Fraction(0))
        return ExactMatrix(n, n, entries)

    def value(self, vector):
        acc = None
        for d, v in zip(self.coeffs, vector):
            term = d * (v * v)
            acc = term if acc is None else acc + term
        return acc

    def bilinear(self, u, v):
        acc = None
        for d, x, y in zip(self.coeffs, u, v):
            term = d * (x * y)
            acc = term if acc is None else acc + term
        return acc

    def __repr__(self):
        return "DiagForm(%r)" % (list(self.coeffs),)


class GroupSpec:
    """SL(n) over a field, or SO(f) for a diagonal form f."""

    __slots__ = ("kind", "n", "form", "field")

    def __init__(self, kind: str, n: int | None = None,
                 form: DiagForm | None = None,
                 field: NumberFieldDesc | None = None):
        if kind == "SL":
            if n is None or n < 2:
                raise ValueError("SL needs n >= 2")
            self.kind = "SL"
            self.n = n
            self.form = None
            self.field = field
        elif kind == "SO":
            if form is None:
                raise ValueError("SO needs a diagonal form")
            self.kind = "SO"
            self.n = form.nvars
            self.form = form
            self.field = form.field
        else:
            raise ValueError("unknown group kind %r" % kind)

    def __repr__(self):
        if self.kind == "SL":
            return "GroupSpec(SL(%d))" % self.n
        return "GroupSpec(SO(%r))" % (list(self.form.coeffs),)


class Verdict:
    """Uniformity decision with a re-verifiable witness where one exists."""

    UNIFORM = "Uniform"
    NOT_UNIFORM = "NotUniform"
    INCONCLUSIVE = "Inconclusive"

    __slots__ = ("status", "reason", "criterion", "witness", "isotropic_vector",
                 "conjugate_name", "search_bound")

    def __init__(self, status, reason, criterion, witness=None,
                 isotropic_vector=None, conjugate_name=None, search_bound=None):
        self.status = status
        self.reason = reason
        self.criterion = criterion
        self.witness = witness
        self.isotropic_vector = isotropic_vector
        self.conjugate_name = conjugate_name
        self.search_bound = search_bound

    def __repr__(self):
        return "Verdict(%s: %s)" % (self.status, self.reason)


# -- Galois conjugates and definiteness --------------------------------------------


def monomorphism_count(field: NumberFieldDesc | None) -> int:
    if field is None or not field.is_quadratic:
        return 1
    return 2


def sigma_name(field: NumberFieldDesc | None, index: int) -> str:
    if index == 0:
        return "identity"
    return "sqrt(%d) -> -sqrt(%d)" % (field.m, field.m)


def conjugate_form(form: DiagForm, sigma: int) -> DiagForm:
    """Apply the sigma-th monomorphism to every coefficient."""
    if sigma == 0:
        return form
    if sigma != 1 or monomorphism_count(form.field) != 2:
        raise ValueError("invalid monomorphism index %r" % (sigma,))
    return DiagForm([conjugate(c) for c in form.coeffs], form.field)


def is_definite(form: DiagForm, sigma: int = 0) -> bool:
    """All coefficient signs agree under the sigma-th real embedding."""
    conj = conjugate_form(form, sigma)
    if conj.field is not None and conj.field.is_quadratic and conj.field.m < 0:
        raise ValueError("definiteness needs a real embedding")
    signs = {sign(c) for c in conj.coeffs}
    return len(signs) == 1


def preserves_form(g: ExactMatrix, form: DiagForm) -> bool:
    """Exact test transpose(g) * A * g == A for A = diag(coeffs)."""
    n = form.nvars
    if g.rows != n or g.cols != n:
        raise ValueError("matrix size does not match the form")
    a = form.matrix()
    return g.transpose() * a * g == a


# -- nilpotents and unipotents ------------------------------------------------------


def is_nilpotent(x: ExactMatrix) -> bool:
    """X^n = 0, cross-checked against the exact trace test tr(X^j) = 0."""
    if not x.is_square:
        raise ValueError("nilpotency is for square matrices")
    n = x.rows
    power_test = (x ** n).is_zero()
    trace_test = True
    p = ExactMatrix.identity(n)
    for _ in range(n):
        p = p * x
        if p.trace() != 0:
            trace_test = False
            break
    if power_test != trace_test:
        raise AssertionError("power and trace nilpotency tests disagree")
    return power_test


def is_unipotent(g: ExactMatrix) -> bool:
    return is_nilpotent(g - ExactMatrix.identity(g.rows))


def exp_nilpotent(x: ExactMatrix) -> ExactMatrix:
    """Exact finite exponential sum of a nilpotent matrix."""
    if not is_nilpotent(x):
        raise ValueError("matrix is not nilpotent")
    n = x.rows
    out = ExactMatrix.identity(n)
    term = ExactMatrix.identity(n)
    factorial = 1
    for j in range(1, n):
        term = term * x
        if term.is_zero():
            break
        factorial *= j
        out = out + term * Fraction(1, factorial)
    return out


def ad_action(g: ExactMatrix, x: ExactMatrix) -> ExactMatrix:
    """Conjugation g X g^-1 on matrices of the same size."""
    if g.rows != x.rows or g.cols != x.cols or not g.is_square:
        raise ValueError("size mismatch in the adjoint action")
    return g * x * g.inv()


# -- the adjoint-orbit systole detector ---------------------------------------------


def _frobenius_sq(x: ExactMatrix) -> Fraction:
    acc = Fraction(0)
    for e in x.data:
        acc += Fraction(e) * Fraction(e)
    return acc


def _matrix_key(entries):
    """Witness order on nonzero integer matrices, row-major entries."""
    idx = None
    for k, t in enumerate(entries):
        if t:
            idx = k
            break
    if entries[idx] < 0:
        entries = tuple(-u for u in entries)
    else:
        entries = tuple(entries)
    return idx, entries


class AdjointSystole:
    """Result of minimizing ||g X g^-1||_F^2 over integer trace-zero X."""

    __slots__ = ("min_norm_sq", "witness", "witness_nilpotent")

    def __init__(self, min_norm_sq, witness, witness_nilpotent):
        self.min_norm_sq = min_norm_sq
        self.witness = witness
        self.witness_nilpotent = witness_nilpotent

    def __iter__(self):
        return iter((self.min_norm_sq, self.witness))

    def __repr__(self):
        return "AdjointSystole(%s at %r, nilpotent=%s)" % (
            self.min_norm_sq, self.witness.to_rows(), self.witness_nilpotent)


def adjoint_systole(g: ExactMatrix, coeff_bound: int) -> AdjointSystole:
    """Brute-force minimum of the adjoint image over the integer trace-zero
    matrices with entries bounded by coeff_bound; reports whether the witness
    is nilpotent by the trace test.
    """
    if not g.is_square:
        raise ValueError("adjoint systole needs a square matrix")
    if g.det() != 1:
        raise ValueError("matrix must have determinant 1")
    if coeff_bound < 1:
        raise ValueError("coefficient bound must be positive")
    n = g.rows
    g_inv = g.inv()
    best = None
    best_key = None
    rng = range(-coeff_bound, coeff_bound + 1)
    # last diagonal entry is forced by the trace-zero constraint
    free = n * n - 1
    diag_last = n * n - 1
    for flat in itertools.product(rng, repeat=free):
        trace_rest = sum(flat[i * n + i] for i in range(n - 1))
        last = -trace_rest
        if abs(last) > coeff_bound:
            continue
        entries = flat[:diag_last] + (last,)
        if all(e == 0 for e in entries):
            continue
        x = ExactMatrix(n, n, list(entries))
        value = _frobenius_sq(g * x * g_inv)
        key = _matrix_key(entries)
        if best is None or value < best[0] or (value == best[0] and key < best_key):
            best = (value, key[1])
            best_key = key
    value, canon = best
    witness = ExactMatrix(n, n, list(canon))
    return AdjointSystole(value, witness, is_nilpotent(witness))


# -- isotropic vectors and the transvection witness ----------------------------------


def _as_field(c, m):
    if m is None:
        return Fraction(c)
    if isinstance(c, QuadScalar):
        return c
    return QuadScalar(Fraction(c), 0, m)


def _height_order(height: int):
    order = [0]
    for k in range(1, height + 1):
        order.extend((k, -k))
    return order


def isotropic_search(form: DiagForm, height: int):
    """A nonzero zero of the form with integer-ring coordinates of height <=
    ``height``, or None.  The first coordinate is solved algebraically from
    the rest, so the search space is the (n-1)-fold coordinate box; the inner
    loop runs on plain integers with perfect-square rejection.
    """
    if height < 1:
        raise ValueError("height must be at least 1")
    field = form.field
    m = field.m if (field is not None and field.is_quadratic) else None
    if m is None:
        return _isotropic_search_rational(form, height)
    return _isotropic_search_quadratic(form, height, m)


def _isotropic_search_rational(form: DiagForm, height: int):
    scale = 1
    for c in form.coeffs:
        den = Fraction(c).denominator
        scale = scale * den // _gcd(scale, den)
    d = [int(Fraction(c) * scale) for c in form.coeffs]
    order = _height_order(height)
    d0 = d[0]
    terms = [[di * v * v for v in order] for di in d[1:]]
    for idx in itertools.product(range(len(order)), repeat=len(d) - 1):
        rest = 0
        for i, k in enumerate(idx):
            rest += terms[i][k]
        if rest % d0:
            continue
        t = -rest // d0
        if t < 0:
            continue
        x0 = isqrt(t)
        if x0 * x0 != t or x0 > height:
            continue
        if x0 == 0 and all(k == 0 for k in idx):
            continue
        vec = (Fraction(x0),) + tuple(Fraction(order[k]) for k in idx)
        if form.value(vec) != 0:
            raise AssertionError("isotropic candidate does not vanish")
        return vec
    return None


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _isotropic_search_quadratic(form: DiagForm, height: int, m: int):
    ring = ring_of_integers(form.field)
    half = ring.omega_is_half
    # coefficients as integer pairs e + f*sqrt(m), cleared of denominators
    scale = 1
    for c in form.coeffs:
        c = _as_field(c, m)
        for den in (Fraction(c.a).denominator, Fraction(c.b).denominator):
            scale = scale * den // _gcd(scale, den)
    pairs = []
    for c in form.coeffs:
        c = _as_field(c, m)
        pairs.append((int(Fraction(c.a) * scale), int(Fraction(c.b) * scale)))
    order = _height_order(height)
    # ring coordinates (p, q) with x = p + q*omega, written (u + w*sqrt(m))/2
    cand = [(p, q) for p in order for q in order]
    uw = [((2 * p + q, q) if half else (2 * p, 2 * q)) for p, q in cand]
    terms = []
    for e, f in pairs[1:]:
        row = []
        for u, w in uw:
            ra = u * u + w * w * m
            rb = 2 * u * w
            row.append((e * ra + f * rb * m, e * rb + f * ra))  # over 4
        terms.append(row)
    e0, f0 = pairs[0]
    n0 = e0 * e0 - f0 * f0 * m
    for idx in itertools.product(range(len(cand)), repeat=len(pairs) - 1):
        rp = 0
        rq = 0
        for i, k in enumerate(idx):
            t = terms[i][k]
            rp += t[0]
            rq += t[1]
        # target = -rest/d0 = (ta + tb*sqrt(m)) / (4*n0)
        ta = -rp * e0 + rq * f0 * m
        tb = -rq * e0 + rp * f0
        den = 4 * n0
        if den < 0:
            ta, tb, den = -ta, -tb, -den
        # root x = (u + w*sqrt(m))/2 needs u^2 + w^2 m = 4 ta/den (integer)
        # and 2 u w = 4 tb/den (integer)
        if (4 * ta) % den or (4 * tb) % den:
            continue
        s = 4 * ta // den
        t = 4 * tb // den
        tail_zero = all(k == 0 for k in idx)
        best = None
        for u, w in _solve_square_pair(s, t, m):
            coords = _uw_to_ring_coords(u, w, half)
            if coords is None:
                continue
            p, q = coords
            if max(abs(p), abs(q)) > height:
                continue
            if u == 0 and w == 0 and tail_zero:
                continue
            positive = p > 0 or (p == 0 and q >= 0)
            key = (0 if positive else 1, abs(p), abs(q))
            if best is None or key < best[0]:
                best = (key, (p, q))
        if best is not None:
            p, q = best[1]
            vec = (_ring_coord_value(p, q, ring),) + tuple(
                _ring_coord_value(*cand[k], ring) for k in idx)
            if form.value(vec) != 0:
                raise AssertionError("isotropic candidate does not vanish")
            return vec
    return None


def _solve_square_pair(s: int, t: int, m: int):
    """Integer solutions (u, w) of u^2 + w^2 m = s, 2 u w = t."""
    disc = s * s - t * t * m
    if disc < 0:
        return []
    k = isqrt(disc)
    if k * k != disc:
        return []
    out = []
    for branch in (k, -k):
        u2_twice = s + branch
        if u2_twice < 0 or u2_twice % 2:
            continue
        u2 = u2_twice // 2
        u = isqrt(u2)
        if u * u != u2:
            continue
        if u == 0:
            if t != 0:
                continue
            if s == 0:
                if (0, 0) not in out:
                    out.append((0, 0))
                continue
            if s % m:
                continue
            w2 = s // m
            if w2 < 0:
                continue
            w = isqrt(w2)
            if w * w != w2 or w == 0:
                continue
            for cand in ((0, w), (0, -w)):
                if cand not in out:
                    out.append(cand)
        else:
            if t % (2 * u):
                continue
            w = t // (2 * u)
            if u * u + w * w * m == s:
                for cand in ((u, w), (-u, -w)):
                    if cand not in out:
                        out.append(cand)
    return out


def _uw_to_ring_coords(u: int, w: int, half: bool):
    """Ring coordinates (p, q) of (u + w*sqrt(m))/2, or None."""
    if half:
        if (u - w) % 2:
            return None
        return (u - w) // 2, w
    if u % 2 or w % 2:
        return None
    return u // 2, w // 2


def _ring_coord_value(p: int, q: int, ring: IntegerRing) -> QuadScalar:
    return QuadScalar(Fraction(p), 0, ring.m) + q * ring.omega


def unipotent_from_isotropic(form: DiagForm, vector) -> ExactMatrix:
    """A nontrivial unipotent element of SO(f) built from an isotropic vector.

    Uses the transvection x -> x + b(x,v) w - b(x,w) v - (1/2) b(w,w) b(x,v) v
    for some w orthogonal to v and independent of it; the result is
    re-verified (preserves the form, unipotent, not the identity) before it
    is returned.
    """
    n = form.nvars
    vector = tuple(_as_field(v, form.field.m if form.field and form.field.is_quadratic else None)
                   for v in vector)
    if len(vector) != n:
        raise ValueError("vector length does not match the form")
    if all(v == 0 for v in vector):
        raise ValueError("isotropic vector must be nonzero")
    if form.value(vector) != 0:
        raise ValueError("vector is not isotropic for the form")
    if n < 3:
        raise ValueError(
            "degenerate transvection: binary forms have no nontrivial unipotent"
        )
    # z with b(v, z) != 0 exists because the form is nondegenerate
    z_idx = next(i for i, v in enumerate(vector) if v != 0)
    zvec = tuple(_one_at(i, z_idx, n, form) for i in range(n))
    bvz = form.bilinear(vector, zvec)
    for w0 in _w_candidates(n, form):
        t = form.bilinear(w0, vector) / bvz
        w = tuple(wi - t * zi for wi, zi in zip(w0, zvec))
        if _proportional(w, vector):
            continue
        g = _transvection_matrix(form, vector, w)
        if g.is_identity():
            continue
        if not preserves_form(g, form):
            raise AssertionError("transvection fails to preserve the form")
        if not is_unipotent(g):
            raise AssertionError("transvection is not unipotent")
        return g
    raise ValueError("degenerate transvection: no admissible companion vector")


def _one_at(i, j, n, form):
    m = form.field.m if form.field and form.field.is_quadratic else None
    return _as_field(1 if i == j else 0, m)


def _w_candidates(n, form):
    m = form.field.m if form.field and form.field.is_quadratic else None
    for k in range(n):
        yield tuple(_as_field(1 if i == k else 0, m) for i in range(n))
    for k in range(n):
        for l in range(k + 1, n):
            yield tuple(_as_field(1 if i in (k, l) else 0, m) for i in range(n))


def _proportional(u, v) -> bool:
    n = len(u)
    for i in range(n):
        for j in range(n):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


def _transvection_matrix(form: DiagForm, v, w) -> ExactMatrix:
    n = form.nvars
    half_ww = form.bilinear(w, w) / 2
    cols = []
    for j in range(n):
        e = tuple(_one_at(i, j, n, form) for i in range(n))
        bev = form.bilinear(e, v)
        bew = form.bilinear(e, w)
        col = [
            e[i] + bev * w[i] - bew * v[i] - half_ww * bev * v[i]
            for i in range(n)
        ]
        cols.append(col)
    return ExactMatrix.from_rows(
        [[cols[j][i] for j in range(n)] for i in range(n)]
    )


# -- the verdict engine ---------------------------------------------------------------


def _elementary_unipotent(n: int) -> ExactMatrix:
    entries = [Fraction(int(i == j)) for i in range(n) for j in range(n)]
    mat = ExactMatrix(n, n, entries).to_rows()
    mat[0][1] = Fraction(1)
    return ExactMatrix.from_rows(mat)


def uniformity_verdict(spec: GroupSpec, height: int = 10) -> Verdict:
    """Decide uniformity for SL(n) and SO(diagonal form).

    SL(n >= 2) always carries the elementary unipotent I + E12.  For SO(f):
    a definite Galois conjugate makes the conjugate real group compact, so
    the rational points carry no nontrivial unipotent and the lattice is
    uniform; an isotropic vector of bounded height produces an explicit
    unipotent witness against uniformity; otherwise the verdict is honestly
    inconclusive (a bounded search cannot prove anisotropy).
    """
    if spec.kind == "SL":
        witness = _elementary_unipotent(spec.n)
        if not is_unipotent(witness) or witness.is_identity():
            raise AssertionError("elementary unipotent failed verification")
        return Verdict(
            Verdict.NOT_UNIFORM,
            "SL(%d) rational points contain the nontrivial unipotent I + E12"
            % spec.n,
            criterion="unipotent obstruction to compactness",
            witness=witness,
        )

    form = spec.form
    field = form.field
    for idx in range(monomorphism_count(field)):
        conj = conjugate_form(form, idx)
        real_embedding = (
            field is None or not field.is_quadratic or field.m > 0
        )
        if real_embedding and is_definite(conj, 0):
            return Verdict(
                Verdict.UNIFORM,
                "the conjugate form under %s is definite, its real orthogonal "
                "group is compact, and a compact group has no nontrivial "
                "unipotent element" % sigma_name(field, idx),
                criterion="Godement criterion (definite conjugate)",
                conjugate_name=sigma_name(field, idx),
            )
    vec = isotropic_search(form, height)
    if vec is not None:
        witness = unipotent_from_isotropic(form, vec)
        if not preserves_form(witness, form) or not is_unipotent(witness):
            raise AssertionError("verdict witness failed re-verification")
        return Verdict(
            Verdict.NOT_UNIFORM,
            "isotropic vector of height <= %d yields a nontrivial unipotent "
            "element preserving the form" % height,
            criterion="Godement criterion (isotropic form)",
            witness=witness,
            isotropic_vector=vec,
        )
    return Verdict(
        Verdict.INCONCLUSIVE,
        "no definite Galois conjugate and no isotropic vector of height <= %d; "
        "the bounded search cannot certify anisotropy (the verdict engine "
        "assumes isotropy is equivalent to the existence of a unipotent)"
        % height,
        criterion="Godement criterion (undecided)",
        search_bound=height,
    )
