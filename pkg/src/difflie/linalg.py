"""Exact dense linear algebra over the rationals.

Everything downstream (cohomology dimensions, residual checks, deformation
solves) relies on these routines being exact, so all entries are
``fractions.Fraction`` and there is no floating point anywhere.
"""

from fractions import Fraction


class CompositionNonzero(Exception):
    """Raised when two maps that should compose to zero do not."""


def frac(x):
    """Coerce ints / strings / Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def fmt_scalar(q):
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    q = frac(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def parse_scalar(s):
    return Fraction(s)


# ---------------------------------------------------------------------------
# vectors: plain lists of Fraction


def vec_zero(n):
    return [Fraction(0)] * n


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    c = frac(c)
    return [c * a for a in v]


def vec_is_zero(v):
    return all(a == 0 for a in v)


def basis_vec(n, i):
    v = vec_zero(n)
    v[i] = Fraction(1)
    return v


class Matrix:
    """Dense rational matrix, row-major.

    Treated as immutable after construction; operations return new matrices.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [[Fraction(0)] * cols for _ in range(rows)]
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError("matrix shape mismatch")
            self.data = [[frac(x) for x in row] for row in data]

    @classmethod
    def from_rows(cls, rows):
        r = len(rows)
        c = len(rows[0]) if r else 0
        return cls(r, c, rows)

    @classmethod
    def identity(cls, n):
        m = cls(n, n)
        for i in range(n):
            m.data[i][i] = Fraction(1)
        return m

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return "Matrix(%d, %d, %r)" % (self.rows, self.cols,
                                       [[str(x) for x in row] for row in self.data])

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(self.rows, self.cols,
                      [vec_add(a, b) for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(self.rows, self.cols,
                      [vec_sub(a, b) for a, b in zip(self.data, other.data)])

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = frac(c)
        return Matrix(self.rows, self.cols,
                      [[c * x for x in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            assert self.cols == other.rows, "inner dimensions must agree"
            out = Matrix(self.rows, other.cols)
            for i in range(self.rows):
                ri = self.data[i]
                oi = out.data[i]
                for k in range(self.cols):
                    a = ri[k]
                    if a == 0:
                        continue
                    rk = other.data[k]
                    for j in range(other.cols):
                        oi[j] += a * rk[j]
            return out
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def matvec(self, v):
        assert len(v) == self.cols
        return [sum((row[j] * v[j] for j in range(self.cols)), Fraction(0))
                for row in self.data]

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [[self.data[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def is_zero(self):
        return all(vec_is_zero(row) for row in self.data)

    def copy(self):
        return Matrix(self.rows, self.cols, [row[:] for row in self.data])

    # -- elimination ------------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (R, pivot column list)."""
        R = [row[:] for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r >= self.rows:
                break
            p = next((i for i in range(r, self.rows) if R[i][c] != 0), None)
            if p is None:
                continue
            R[r], R[p] = R[p], R[r]
            inv = 1 / R[r][c]
            R[r] = [inv * x for x in R[r]]
            for i in range(self.rows):
                if i != r and R[i][c] != 0:
                    f = R[i][c]
                    R[i] = [x - f * y for x, y in zip(R[i], R[r])]
            pivots.append(c)
            r += 1
        return Matrix(self.rows, self.cols, R), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Exact basis of the right null space; len = cols - rank."""
        R, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = vec_zero(self.cols)
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -R.data[r][fc]
            basis.append(v)
        return basis

    def solve(self, b):
        """Some x with m*x = b, or None if the system is inconsistent."""
        assert len(b) == self.rows
        aug = Matrix(self.rows, self.cols + 1,
                     [self.data[i][:] + [frac(b[i])] for i in range(self.rows)])
        R, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = vec_zero(self.cols)
        for r, pc in enumerate(pivots):
            x[pc] = R.data[r][self.cols]
        return x

    # -- block assembly ---------------------------------------------------

    @classmethod
    def block(cls, grid):
        """Assemble from a 2D grid of matrices (shapes must be consistent)."""
        rows = []
        for brow in grid:
            h = brow[0].rows
            assert all(m.rows == h for m in brow)
            for i in range(h):
                rows.append([x for m in brow for x in m.data[i]])
        return cls.from_rows(rows) if rows else cls(0, sum(m.cols for m in grid[0]) if grid else 0)


def homology_dim(d_out, d_in):
    """dim ker(d_out) - rank(d_in) for a two-step complex at the middle spot.

    Checks d_out . d_in = 0 first and raises CompositionNonzero otherwise.
    """
    assert d_out.cols == d_in.rows
    if not (d_out * d_in).is_zero():
        raise CompositionNonzero("d_out . d_in != 0: not a complex")
    return (d_out.cols - d_out.rank()) - d_in.rank()
