"""Integer matrices, Smith normal form and finitely generated abelian groups.

Everything here works with Python integers, so there is no overflow no matter
how much the entries swell during elimination.
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix. ``cols`` is kept explicitly so 0-row matrices
    still know their width."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry count does not match %d x %d" % (self.rows, self.cols))

    @classmethod
    def of(cls, rows, cols=None):
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not data:
                raise ValueError("cols must be given for a matrix without rows")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n):
        return cls.of([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls.of([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def diag(cls, values, rows=None, cols=None):
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        return cls.of([[values[i] if i == j and i < len(values) else 0
                        for j in range(cols)] for i in range(rows)], cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self):
        return [list(r) for r in self.entries]

    def transpose(self):
        return IntMatrix.of([[self.entries[i][j] for i in range(self.rows)]
                             for j in range(self.cols)], self.rows)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
            return IntMatrix.of([[sum(a * b for a, b in zip(r, c)) for c in cols]
                                 for r in self.entries], other.cols)
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [sum(a * b for a, b in zip(r, vec)) for r in self.entries]

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _bareiss_det(self.tolist())

    def is_diagonal(self):
        return all(self.entries[i][j] == 0 for i in range(self.rows)
                   for j in range(self.cols) if i != j)

    def diagonal(self):
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]


def as_matrix(M, cols=None):
    return M if isinstance(M, IntMatrix) else IntMatrix.of(M, cols)


def _bareiss_det(a):
    n = len(a)
    if n == 0:
        return 1
    a = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def _smith(M):
    """Core elimination; returns U, D, V, Vinv as lists with D = U M V."""
    m, n = M.rows, M.cols
    A = M.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()
    Vi = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        for r in A:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]
        Vi[src] = [a - q * b for a, b in zip(Vi[src], Vi[dst])]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    a = A[i][j]
                    if a and (best is None or abs(a) < best[0]):
                        best = (abs(a), i, j)
            if best is None:
                return U, A, V, Vi
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(A[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return U, A, V, Vi


def smith_normal_form(M):
    """Return ``(U, D, V)`` with ``D = U @ M @ V`` in Smith normal form.

    Pivoting takes the entry of smallest absolute value, ties broken by the
    lowest (row, col), which keeps the output deterministic.
    """
    M = as_matrix(M)
    U, D, V, _ = _smith(M)
    return (IntMatrix.of(U, M.rows), IntMatrix.of(D, M.cols), IntMatrix.of(V, M.cols))


def invariant_factors(M):
    """Diagonal of the Smith form with zeros kept and units kept."""
    _, D, _ = smith_normal_form(M)
    return D.diagonal()


@dataclass(frozen=True)
class FgAbelianGroup:
    """``Z^free_rank + Z/d_1 + ... + Z/d_m`` with ``d_1 | d_2 | ... | d_m``."""

    free_rank: int
    torsion_factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion_factors", tuple(int(d) for d in self.torsion_factors))
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in self.torsion_factors:
            if d < 2:
                raise ValueError("torsion factors must be >= 2")
        for a, b in zip(self.torsion_factors, self.torsion_factors[1:]):
            if b % a:
                raise ValueError("torsion factors must form a divisibility chain")

    @property
    def ngens(self):
        return self.free_rank + len(self.torsion_factors)

    @property
    def order(self):
        """Cardinality, or 0 for an infinite group."""
        if self.free_rank:
            return 0
        out = 1
        for d in self.torsion_factors:
            out *= d
        return out

    def element(self, free=(), torsion=()):
        free = tuple(int(x) for x in free) or (0,) * self.free_rank
        torsion = tuple(int(x) for x in torsion) or (0,) * len(self.torsion_factors)
        return GroupElement(self, free, torsion)

    def zero(self):
        return self.element()

    def from_coordinates(self, coords):
        """Element from a flat vector: free coordinates first, then torsion."""
        coords = list(coords)
        if len(coords) != self.ngens:
            raise ValueError("expected %d coordinates" % self.ngens)
        return GroupElement(self, tuple(coords[:self.free_rank]), tuple(coords[self.free_rank:]))

    def generators(self):
        return [self.from_coordinates([int(i == j) for j in range(self.ngens)])
                for i in range(self.ngens)]

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else "Z^%d" % self.free_rank)
        parts += ["Z/%d" % d for d in self.torsion_factors]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class GroupElement:
    group: FgAbelianGroup
    free: tuple
    torsion: tuple

    def __post_init__(self):
        g = self.group
        if len(self.free) != g.free_rank or len(self.torsion) != len(g.torsion_factors):
            raise ValueError("coordinate count does not match %s" % g)
        object.__setattr__(self, "free", tuple(int(x) for x in self.free))
        object.__setattr__(self, "torsion",
                           tuple(int(x) % d for x, d in zip(self.torsion, g.torsion_factors)))

    def _check(self, other):
        if not isinstance(other, GroupElement) or other.group != self.group:
            from .errors import GroupMismatch
            raise GroupMismatch("elements live in different groups")

    def __add__(self, other):
        self._check(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.free, other.free)),
                            tuple(a + b for a, b in zip(self.torsion, other.torsion)))

    def __neg__(self):
        return GroupElement(self.group, tuple(-a for a in self.free), tuple(-a for a in self.torsion))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        k = int(k)
        return GroupElement(self.group, tuple(k * a for a in self.free),
                            tuple(k * a for a in self.torsion))

    __rmul__ = __mul__

    def coordinates(self):
        return self.free + self.torsion

    def is_zero(self):
        return not any(self.free) and not any(self.torsion)

    def is_torsion(self):
        return not any(self.free)

    def order(self):
        """Order of the element, 0 if infinite."""
        if not self.is_torsion():
            return 0
        out = 1
        for x, d in zip(self.torsion, self.group.torsion_factors):
            o = d // gcd(x, d)
            out = out * o // gcd(out, o)
        return out

    def multiple_of(self, other) -> Optional[int]:
        """The integer ``l`` with ``self == l * other`` when ``other`` has
        infinite order; None when no such ``l`` exists."""
        self._check(other)
        if other.is_torsion():
            raise ValueError("multiple_of needs a non-torsion divisor")
        j = next(i for i, x in enumerate(other.free) if x)
        if self.free[j] % other.free[j]:
            return None
        l = self.free[j] // other.free[j]
        return l if l * other == self else None

    def __str__(self):
        return "(%s)" % ", ".join(map(str, self.coordinates()))


@dataclass(frozen=True)
class Cokernel:
    """``Z^n / rowspace(M)`` together with the bookkeeping to move between
    the presentation generators and the invariant-factor coordinates.

    ``images[j]`` is the class of the j-th presentation generator;
    ``lifts[i]`` is an integer vector on the presentation generators whose
    class is the i-th standard generator of ``group``.
    """

    group: FgAbelianGroup
    images: tuple
    lifts: tuple

    def element(self, vector):
        """Class of an integer combination of presentation generators."""
        out = self.group.zero()
        for c, img in zip(vector, self.images):
            if c:
                out = out + c * img
        return out


def cokernel(M, cols=None):
    """Abelian group presented by relations ``rows(M)`` on ``cols(M)`` generators.

    >>> cokernel([[2, 4], [6, 8]]).group
    FgAbelianGroup(free_rank=0, torsion_factors=(2, 4))
    """
    M = as_matrix(M, cols)
    n = M.cols
    _, D, V, Vi = _smith(M)
    diag = [D[i][i] if i < M.rows else 0 for i in range(n)]
    torsion_idx = [i for i in range(n) if diag[i] > 1]
    free_idx = [i for i in range(n) if diag[i] == 0]
    group = FgAbelianGroup(len(free_idx), tuple(diag[i] for i in torsion_idx))
    order = free_idx + torsion_idx
    images = tuple(group.from_coordinates([V[j][i] for i in order]) for j in range(n))
    lifts = tuple(tuple(Vi[i]) for i in order)
    return Cokernel(group, images, lifts)


@dataclass(frozen=True)
class ModSolution:
    x: tuple
    kernel: tuple
    modulus: int


def _inverse_mod(a, m):
    return pow(a, -1, m) if m > 1 else 0


def solve_mod(M, b, d) -> Optional[ModSolution]:
    """Solve ``M x = b (mod d)``.

    Returns a particular solution plus generators of the homogeneous solution
    module, or None when the system has no solution.
    """
    if d < 2:
        raise ValueError("modulus must be >= 2")
    M = as_matrix(M)
    b = [int(v) for v in b]
    if len(b) != M.rows:
        raise ValueError("right-hand side has wrong length")
    U, D, V, _ = _smith(M)
    c = [sum(u * v for u, v in zip(row, b)) % d for row in U]
    y = [0] * M.cols
    kernel = []
    for i in range(M.cols):
        di = D[i][i] if i < M.rows else 0
        g = gcd(di, d)
        if i < M.rows:
            if c[i] % g:
                return None
            y[i] = (c[i] // g) * _inverse_mod((di // g) % (d // g), d // g) % (d // g) if d // g > 1 else 0
        step = d // g
        if step % d:
            kernel.append([step if k == i else 0 for k in range(M.cols)])
    for i in range(M.cols, M.rows):
        if c[i] % d:
            return None

    def back(v):
        return tuple(sum(V[r][k] * v[k] for k in range(M.cols)) % d for r in range(M.cols))

    return ModSolution(back(y), tuple(back(v) for v in kernel), d)


@dataclass(frozen=True)
class HomBasis:
    """Generators of ``Hom(G, target)``, each given by its values on the
    standard generators of ``G``. ``target`` is 0 for Z, else the modulus."""

    source: FgAbelianGroup
    target: int
    generators: tuple
    orders: tuple

    @property
    def group(self):
        return cokernel(IntMatrix.diag(list(self.orders), len(self.orders), len(self.orders))
                        if self.orders else IntMatrix.zeros(0, 0), len(self.orders)).group

    def evaluate(self, coefficients, x: GroupElement):
        """Value at ``x`` of the combination ``sum c_i * generator_i``."""
        if x.group != self.source:
            from .errors import GroupMismatch
            raise GroupMismatch("element is not in the source group")
        vals = [sum(c * g[i] for c, g in zip(coefficients, self.generators))
                for i in range(self.source.ngens)]
        out = sum(v * a for v, a in zip(vals, x.coordinates()))
        return out % self.target if self.target else out


def hom_lattice(G: FgAbelianGroup, target: int = 0) -> HomBasis:
    """Basis of ``Hom(G, Z)`` (target 0) or generators of ``Hom(G, Z/d)``."""
    n = G.ngens
    gens, orders = [], []
    for i in range(G.free_rank):
        gens.append(tuple(int(j == i) for j in range(n)))
        orders.append(target)
    if target:
        for k, di in enumerate(G.torsion_factors):
            g = gcd(di, target)
            if g > 1:
                i = G.free_rank + k
                gens.append(tuple(target // g if j == i else 0 for j in range(n)))
                orders.append(g)
    return HomBasis(G, target, tuple(gens), tuple(orders))


def solve_int(M, b) -> Optional[tuple]:
    """An integer solution of ``M x = b`` or None."""
    M = as_matrix(M)
    U, D, V, _ = _smith(M)
    c = [sum(u * v for u, v in zip(row, b)) for row in U]
    y = [0] * M.cols
    for i in range(M.rows):
        di = D[i][i] if i < M.cols else 0
        if di == 0:
            if c[i]:
                return None
        elif c[i] % di:
            return None
        else:
            y[i] = c[i] // di
    return tuple(sum(V[r][k] * y[k] for k in range(M.cols)) for r in range(M.cols))


def integer_kernel(M, cols=None):
    """Basis of ``{x in Z^n : M x = 0}``."""
    M = as_matrix(M, cols)
    _, D, V, _ = _smith(M)
    rank = sum(1 for i in range(min(M.rows, M.cols)) if D[i][i])
    return [tuple(V[r][k] for r in range(M.cols)) for k in range(rank, M.cols)]


def det(rows: Sequence[Sequence[int]]):
    return _bareiss_det([list(r) for r in rows])
