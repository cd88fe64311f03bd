# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the integer shortest-vector search in ``_svp.py``.

Runs only on inputs certified by :mod:`latlab.enumeration` to keep every
intermediate inside signed 128-bit range.  Node order, budget accounting and
the witness tie-break must match ``_svp.search`` exactly; the pure kernel is
the reference implementation and the fallback.
"""

from latlab.errors import BudgetExceededError

cdef extern from *:
    ctypedef long long i128 "__int128"

DEF MAXN = 8


cdef inline i128 floordiv(i128 a, i128 b):
    # C division truncates toward zero; we need floor for b > 0
    cdef i128 q = a / b
    if a % b != 0 and (a < 0) != (b < 0):
        q -= 1
    return q


cdef class _Search:
    cdef long long gram[MAXN][MAXN]
    cdef long long d[MAXN + 1]
    cdef long long lam[MAXN][MAXN]
    cdef i128 den[MAXN]
    cdef i128 suf[MAXN + 1]
    cdef long long x[MAXN]
    cdef long long best_vec[MAXN]
    cdef i128 best_q
    cdef int n
    cdef long long nodes
    cdef long long budget

    cdef i128 quad_value(self):
        cdef i128 acc = 0
        cdef int i, j
        cdef long long xi, xj
        for i in range(self.n):
            xi = self.x[i]
            if xi == 0:
                continue
            acc += <i128>self.gram[i][i] * xi * xi
            for j in range(i + 1, self.n):
                xj = self.x[j]
                if xj != 0:
                    acc += 2 * <i128>self.gram[i][j] * xi * xj
        return acc

    cdef bint candidate_smaller(self):
        # mirror of _svp.witness_key ordering:
        # (first nonzero index, sign-normalized lexicographic)
        cdef int ia = -1, ib = -1, k
        for k in range(self.n):
            if self.x[k] != 0:
                ia = k
                break
        for k in range(self.n):
            if self.best_vec[k] != 0:
                ib = k
                break
        if ia != ib:
            return ia < ib
        cdef long long sa = 1 if self.x[ia] > 0 else -1
        cdef long long sb = 1 if self.best_vec[ib] > 0 else -1
        cdef long long va, vb
        for k in range(self.n):
            va = sa * self.x[k]
            vb = sb * self.best_vec[k]
            if va != vb:
                return va < vb
        return False

    cdef int attempt(self, int i, long long xi, i128 s, i128 w,
                     bint suffix_zero) except -1:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                "enumeration exceeded the node budget of %d" % self.budget,
                budget=self.budget,
            )
        cdef i128 t = <i128>self.d[i + 1] * xi + s
        cdef i128 big_t = t * t
        cdef int k
        cdef i128 q
        if big_t * self.suf[i + 1] > self.best_q * self.suf[i] - w:
            return 0
        if i == 0:
            if not (suffix_zero and xi == 0):
                self.x[0] = xi
                q = self.quad_value()
                if q < self.best_q:
                    self.best_q = q
                    for k in range(self.n):
                        self.best_vec[k] = self.x[k]
                elif q == self.best_q and self.candidate_smaller():
                    for k in range(self.n):
                        self.best_vec[k] = self.x[k]
            return 1
        self.x[i] = xi
        self.run_level(i - 1, self.den[i - 1] * (w + big_t * self.suf[i + 1]),
                       suffix_zero and xi == 0)
        return 1

    cdef int run_level(self, int i, i128 w, bint suffix_zero) except -1:
        cdef i128 s = 0
        cdef int j
        for j in range(i + 1, self.n):
            if self.x[j] != 0:
                s += <i128>self.lam[j][i] * self.x[j]
        cdef long long xi, start
        if suffix_zero:
            xi = 0
            while self.attempt(i, xi, s, w, True):
                xi += 1
        else:
            start = <long long>floordiv(-2 * s + self.d[i + 1],
                                        2 * <i128>self.d[i + 1])
            xi = start
            while self.attempt(i, xi, s, w, False):
                xi += 1
            xi = start - 1
            while self.attempt(i, xi, s, w, False):
                xi -= 1
        return 0


def search_int(gram, d, lam, c0, seed, budget):
    """(min value, canonical witness, nodes) of x^T G x over nonzero integer x.

    Arguments are the integral Gram matrix, its leading minors, the integral
    Gram-Schmidt coefficients, the starting diagonal bound with its unit
    vector, and the node budget; all must fit in 62 bits (the caller
    certifies this together with the 128-bit headroom of the search).
    """
    cdef _Search st = _Search()
    cdef int n = len(gram)
    if n < 1 or n > MAXN:
        raise ValueError("compiled search supports 1..%d dimensions" % MAXN)
    st.n = n
    cdef int i, j
    for i in range(n):
        row = gram[i]
        for j in range(n):
            st.gram[i][j] = row[j]
    for i in range(n + 1):
        st.d[i] = d[i]
    for i in range(n):
        row = lam[i]
        for j in range(n):
            st.lam[i][j] = row[j] if j < i else 0
    for i in range(n):
        st.den[i] = <i128>st.d[i] * st.d[i + 1]
    st.suf[n] = 1
    for i in range(n - 1, -1, -1):
        st.suf[i] = st.den[i] * st.suf[i + 1]
    st.best_q = c0
    for i in range(n):
        st.best_vec[i] = seed[i]
        st.x[i] = 0
    st.nodes = 0
    st.budget = budget
    st.run_level(n - 1, 0, True)
    # canonical witness: sign-normalized so the first nonzero entry is positive
    cdef long long flip = 1
    for i in range(n):
        if st.best_vec[i] != 0:
            flip = 1 if st.best_vec[i] > 0 else -1
            break
    witness = tuple(flip * st.best_vec[i] for i in range(n))
    return <long long>st.best_q, witness, st.nodes
