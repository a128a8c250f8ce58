"""Torsion of based acyclic chain complexes over the rational function field.

Matrices are lists of rows. A boundary map d_i : C_i -> C_{i-1} is stored
with one column per basis vector of C_i, so its shape is
``dims[i-1] x dims[i]``.
"""

import random as _random
from fractions import Fraction
from math import gcd

from .errors import NotAcyclic, SingularChange, ValidationError
from .field import RatFunc, TorsionValue, _ONE_POLY

_ZERO = RatFunc.const(0)
_ONE = RatFunc.const(1)


def _f(x):
    return x if isinstance(x, RatFunc) else RatFunc._coerce(x)


def _mat(rows):
    return [[_f(x) for x in row] for row in rows]


def zeros(r, c):
    return [[_ZERO] * c for _ in range(r)]


def identity(n):
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A or not B:
        inner = len(B)
        cols = len(B[0]) if B else 0
        return zeros(len(A), cols) if inner == 0 else [[_ZERO] * cols for _ in A]
    cols = len(B[0])
    out = []
    for row in A:
        new = []
        for j in range(cols):
            s = _ZERO
            for a, brow in zip(row, B):
                b = brow[j]
                if a and b:
                    s = s + a * b
            new.append(s)
        out.append(new)
    return out


def matvec(A, v):
    out = []
    for row in A:
        s = _ZERO
        for a, x in zip(row, v):
            if a and x:
                s = s + a * x
        out.append(s)
    return out


def transpose(A, rows=None):
    if not A:
        return [[] for _ in range(rows or 0)]
    return [list(col) for col in zip(*A)]


def _laurent_rows(A):
    """Clear denominators row by row. Returns Laurent polynomial rows and
    the polynomial each row was multiplied by."""
    rows, scales = [], []
    for row in A:
        dens = []
        for x in row:
            if len(x.den.c) > 1 and x.den not in dens:
                dens.append(x.den)
        out = []
        for x in row:
            p = x.num
            if p.c:
                for d in dens:
                    if d != x.den:
                        p = p * d
            out.append(p)
        scale = _ONE_POLY
        for d in dens:
            scale = scale * d
        # clear rational denominators too, so elimination runs over Z[zeta]
        m = 1
        for p in out:
            for x in p.c:
                for y in x.c:
                    if type(y) is Fraction:
                        m = m * y.denominator // gcd(m, y.denominator)
        if m > 1:
            out = [p.scale(m) if p.c else p for p in out]
            scale = scale.scale(m)
        rows.append(out)
        scales.append(scale)
    return rows, scales


def _eliminate(rows, order, full):
    """Fraction-free elimination (Bareiss) over Laurent polynomials.

    Columns are visited in ``order``. With ``full`` the rows above each
    pivot are cleared too, and the result is D times the reduced echelon
    form, D being the last pivot. Returns (rows, pivot columns, number of
    row swaps, D).
    """
    A = [list(r) for r in rows]
    prev = _ONE_POLY
    pivots, swaps, r = [], 0, 0
    for c in order:
        p = next((i for i in range(r, len(A)) if A[i][c].c), None)
        if p is None:
            continue
        if p != r:
            A[r], A[p] = A[p], A[r]
            swaps += 1
        pr = A[r]
        pv = pr[c]
        for i in range(len(A)):
            if i == r or (i < r and not full):
                continue
            row = A[i]
            f = row[c]
            new = []
            for x, y in zip(row, pr):
                if f.c and y.c:
                    x = pv * x - f * y if x.c else -(f * y)
                elif x.c:
                    x = pv * x
                else:
                    new.append(x)
                    continue
                new.append(x if prev is _ONE_POLY else x.exact_div(prev))
            A[i] = new
        prev = pv
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots, swaps, prev


def _rat(p):
    return RatFunc._raw(p, _ONE_POLY)


def det(A):
    """Determinant by fraction-free elimination."""
    n = len(A)
    if n == 0:
        return _ONE
    rows, scales = _laurent_rows(A)
    _, piv, swaps, D = _eliminate(rows, range(n), False)
    if len(piv) < n:
        return _ZERO
    out = _rat(-D if swaps % 2 else D)
    for s in scales:
        if s != _ONE_POLY:
            out = out / _rat(s)
    return out


def rank(A):
    if not A:
        return 0
    rows, _ = _laurent_rows(A)
    return len(_eliminate(rows, range(len(A[0])), False)[1])


def kernel(A, ncols):
    """Basis of the null space of A (vectors of length ncols)."""
    if not A:
        return [[_ONE if i == j else _ZERO for i in range(ncols)] for j in range(ncols)]
    rows, _ = _laurent_rows(A)
    R, piv, _, D = _eliminate(rows, range(ncols), True)
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        v = [_ZERO] * ncols
        v[f] = _rat(D)
        for row, p in zip(R, piv):
            if row[f].c:
                v[p] = _rat(-row[f])
        basis.append(v)
    return basis


def inverse(A):
    n = len(A)
    aug = [list(row) + [_ONE if i == j else _ZERO for j in range(n)] for i, row in enumerate(A)]
    rows, _ = _laurent_rows(aug)
    R, piv, _, D = _eliminate(rows, range(n), True)
    if piv != list(range(n)):
        raise SingularChange("matrix is not invertible")
    Dinv = _rat(D).inverse()
    return [[_rat(x) * Dinv if x.c else _ZERO for x in row[n:]] for row in R]


def independent_columns(A, order):
    """Greedily pick columns of A, in the given order, that are linearly
    independent of the ones already picked."""
    if not A:
        return []
    rows, _ = _laurent_rows(A)
    return _eliminate(rows, list(order), False)[1]


class BasedChainComplex:
    """Finite chain complex C_n -> ... -> C_0 with preferred bases.

    ``dims[i]`` is the basis size of C_i and ``boundaries[i-1]`` is the
    matrix of d_i for i = 1..n.
    """

    def __init__(self, dims, boundaries, check=True):
        self.dims = [int(d) for d in dims]
        self._ranks = None
        if len(boundaries) != max(len(self.dims) - 1, 0):
            raise ValidationError("need one boundary matrix per positive degree")
        self.boundaries = []
        for i, M in enumerate(boundaries, start=1):
            M = _mat(M)
            rows, cols = self.dims[i - 1], self.dims[i]
            if len(M) != rows or any(len(r) != cols for r in M):
                raise ValidationError("boundary d_%d must be %dx%d" % (i, rows, cols))
            self.boundaries.append(M)
        if check:
            for i in range(2, len(self.dims)):
                prod = matmul(self.boundary(i - 1), self.boundary(i))
                if any(x for row in prod for x in row):
                    raise ValidationError("d_%d d_%d is not zero" % (i - 1, i))

    @property
    def top(self):
        return len(self.dims) - 1

    def boundary(self, i):
        """Matrix of d_i; zero maps outside 1..top."""
        if 1 <= i <= self.top:
            return self.boundaries[i - 1]
        rows = self.dims[i - 1] if 0 <= i - 1 <= self.top else 0
        cols = self.dims[i] if 0 <= i <= self.top else 0
        return zeros(rows, cols)

    def euler_characteristic(self):
        return sum((-1) ** i * d for i, d in enumerate(self.dims))

    def ranks(self):
        if self._ranks is None:
            self._ranks = [rank(self.boundary(i)) if self.dims[i] and self.dims[i - 1] else 0
                           for i in range(1, self.top + 1)]
        return list(self._ranks)

    def direct_sum(self, other):
        n = max(self.top, other.top)
        da = self.dims + [0] * (n - self.top)
        db = other.dims + [0] * (n - other.top)
        dims = [a + b for a, b in zip(da, db)]
        bds = []
        for i in range(1, n + 1):
            A = self.boundary(i) if i <= self.top else zeros(da[i - 1], da[i])
            B = other.boundary(i) if i <= other.top else zeros(db[i - 1], db[i])
            M = zeros(dims[i - 1], dims[i])
            for r, row in enumerate(A):
                for c, x in enumerate(row):
                    M[r][c] = x
            for r, row in enumerate(B):
                for c, x in enumerate(row):
                    M[da[i - 1] + r][da[i] + c] = x
            bds.append(M)
        return BasedChainComplex(dims, bds, check=False)

    def order(self):
        """Least common order of the roots of unity among the entries."""
        k = 1
        for M in self.boundaries:
            for row in M:
                for x in row:
                    for p in (x.num, x.den):
                        o = p.order()
                        k = k * o // gcd(k, o)
        return k

    def __repr__(self):
        return "BasedChainComplex(dims=%r)" % (self.dims,)


def is_acyclic(C):
    r = [0] + C.ranks() + [0]
    return all(r[i] + r[i + 1] == C.dims[i] for i in range(len(C.dims)))


def _random_invertible(n, rng):
    while True:
        R = [[RatFunc.const(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if det(R):
            return R


def _lifts(C, i, rng):
    """Vectors of C_i whose images form a basis of im d_i."""
    M = C.boundary(i)
    n = C.dims[i]
    order = list(range(n))
    if rng is not None:
        rng.shuffle(order)
    J = independent_columns(M, order) if M else []
    lifts = [[_ONE if k == j else _ZERO for k in range(n)] for j in J]
    if rng is not None and lifts:
        R = _random_invertible(len(lifts), rng)
        lifts = matmul(R, lifts)
        ker = kernel(M, n) if M else []
        for v in lifts:
            for kv in ker:
                c = rng.randint(-2, 2)
                if c:
                    for idx in range(n):
                        v[idx] = v[idx] + kv[idx] * c
    return lifts


def raw_torsion(C, rng=None):
    """Torsion as an actual rational function for the preferred bases.

    Uses prod_i [d(b_{i+1}) b_i / c_i]^((-1)^(i+1)); the two term complex
    with boundary (a) therefore gives a^-1. Passing ``rng`` randomizes the
    choice of the b_i, which must not change the answer.
    """
    if not is_acyclic(C):
        raise NotAcyclic("complex has nonzero homology", ranks=C.ranks())
    if isinstance(rng, int):
        rng = _random.Random(rng)
    lifts = [[]] + [_lifts(C, i, rng) for i in range(1, C.top + 1)] + [[]]
    out = _ONE
    for i in range(C.top + 1):
        D = C.boundary(i + 1)
        images = [matvec(D, v) for v in lifts[i + 1]] if i + 1 <= C.top else []
        cols = images + lifts[i]
        if len(cols) != C.dims[i]:
            raise NotAcyclic("rank mismatch in degree %d" % i)
        d = det(transpose(cols)) if cols else _ONE
        out = out / d if i % 2 == 0 else out * d
    return out


def torsion(C, k=None, rng=None):
    """Torsion as a class modulo the units +-zeta_k^a t^b."""
    return TorsionValue(raw_torsion(C, rng), C.order() if k is None else k)


def apply_base_change(C, B):
    """Re-base C. Row j of ``B[i]`` writes the j-th new basis vector of C_i in
    the old basis, so coordinates change by (B^T)^-1."""
    if len(B) != len(C.dims):
        raise ValidationError("need one change matrix per degree")
    B = [_mat(b) for b in B]
    inv_t = []
    for i, b in enumerate(B):
        if len(b) != C.dims[i] or any(len(r) != C.dims[i] for r in b):
            raise ValidationError("change matrix for degree %d has wrong size" % i)
        if C.dims[i] and not det(b):
            raise SingularChange("change in degree %d is singular" % i, degree=i)
        inv_t.append(inverse(transpose(b)) if C.dims[i] else [])
    bds = []
    for i in range(1, C.top + 1):
        bds.append(matmul(matmul(inv_t[i - 1], C.boundary(i)), transpose(B[i], C.dims[i])))
    return BasedChainComplex(C.dims, bds, check=False)


def base_change_factor(B):
    """The factor [c/c'] = prod det(B_i)^((-1)^i) relating the torsions of
    the new and old bases: tau(new) = factor * tau(old)."""
    out = _ONE
    for i, b in enumerate(B):
        d = det(_mat(b))
        out = out * d if i % 2 == 0 else out / d
    return out


def wedge_complex(n, scalars):
    """Cellular complex of a wedge of n circles twisted by the given scalars:
    one 0-cell, n one-cells, boundary row (1 - s_1, ..., 1 - s_n)."""
    if n < 1:
        raise ValidationError("a wedge needs at least one circle")
    if len(scalars) != n:
        raise ValidationError("need one scalar per circle")
    return BasedChainComplex([1, n], [[[_ONE - _f(s) for s in scalars]]])


def circle_product(C, fibre_scalar):
    """Complex of (space of C) x circle, the circle acting by ``fibre_scalar``.

    D_i = C_i + C_{i-1} with boundary [[d_i, (1-u) id], [0, -d_{i-1}]].
    """
    u = _f(fibre_scalar)
    one_minus = _ONE - u
    n = C.top + 1
    dims = [C.dims[i] + (C.dims[i - 1] if i >= 1 else 0) if i <= C.top else C.dims[i - 1]
            for i in range(n + 1)]

    def cdim(i):
        return C.dims[i] if 0 <= i <= C.top else 0

    bds = []
    for i in range(1, n + 1):
        M = zeros(dims[i - 1], dims[i])
        a, b = cdim(i - 1), cdim(i)  # top left block is a x b
        if 1 <= i <= C.top:
            for r, row in enumerate(C.boundary(i)):
                for c, x in enumerate(row):
                    M[r][c] = x
        for j in range(cdim(i - 1)):
            M[j][b + j] = one_minus
        if 2 <= i <= C.top + 1:
            for r, row in enumerate(C.boundary(i - 1)):
                for c, x in enumerate(row):
                    if x:
                        M[a + r][b + c] = -x
        bds.append(M)
    return BasedChainComplex(dims, bds)
