"""Dense exact linear algebra over GF(p): rank, kernel, reduced echelon form.

Matrices are small (well under 200 x 200 for every check in the pipeline),
so plain Gaussian elimination on lists of ints is all that is needed.  The
reduced row echelon form of a subspace is unique, which is what makes every
certificate byte-reproducible: kernels and bases are always returned in RREF.
"""

from .fppoly import modinv


def rref_rows(p, rows):
    """Reduced row echelon form of a list of row vectors.

    Returns (rank, pivot column tuple, rref rows).  Input rows are not
    modified.  Zero rows are dropped from the output.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0, (), []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(m)):
            if m[i][c] % p:
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = modinv(m[r][c] % p, p)
        m[r] = [(v * inv) % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c] % p
                mi, mr = m[i], m[r]
                for j in range(c, ncols):
                    mi[j] = (mi[j] - f * mr[j]) % p
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return r, tuple(pivots), [row for row in m[:r]]


def kernel_rows(p, rows, ncols):
    """RREF basis of the right kernel of the matrix with the given rows.

    The kernel basis itself is returned in reduced row echelon form, so it is
    the canonical basis of the solution subspace.
    """
    rank, pivots, red = rref_rows(p, rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    vecs = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-red[i][fc]) % p
        vecs.append(v)
    _, _, normalized = rref_rows(p, vecs)
    return normalized


def echelon_coords(p, pivots, basis_rows, vec):
    """Coordinates of vec in an RREF basis, or None if vec is outside the span."""
    coords = [vec[c] % p for c in pivots]
    residual = [v % p for v in vec]
    for coef, row in zip(coords, basis_rows):
        if coef:
            for j, rv in enumerate(row):
                if rv:
                    residual[j] = (residual[j] - coef * rv) % p
    if any(residual):
        return None
    return coords


def mat_mul(p, a, b):
    """Product of two row-lists over GF(p)."""
    if not a:
        return []
    n, k = len(a), len(a[0])
    cols = len(b[0]) if b else 0
    bt = [[b[i][j] for i in range(k)] for j in range(cols)]
    return [[sum(ra[i] * col[i] for i in range(k)) % p for col in bt] for ra in a]


def mat_vec(p, a, v):
    return [sum(x * y for x, y in zip(row, v)) % p for row in a]


def is_zero_rows(rows):
    return all(all(v == 0 for v in row) for row in rows)


class FpMatrix:
    """Row-major dense matrix over GF(p)."""

    __slots__ = ("p", "nrows", "ncols", "rows")

    def __init__(self, p, rows, ncols=None):
        self.p = p
        self.rows = [[v % p for v in row] for row in rows]
        self.nrows = len(self.rows)
        if self.rows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged rows")
        else:
            self.ncols = 0 if ncols is None else ncols

    @classmethod
    def identity(cls, p, n):
        return cls(p, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, p, n, m):
        return cls(p, [[0] * m for _ in range(n)], ncols=m)

    def __eq__(self, other):
        return (isinstance(other, FpMatrix) and self.p == other.p
                and self.rows == other.rows and self.ncols == other.ncols)

    def __mul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return FpMatrix(self.p, mat_mul(self.p, self.rows, other.rows),
                        ncols=other.ncols)

    def mul_vec(self, v):
        return mat_vec(self.p, self.rows, v)

    def transpose(self):
        return FpMatrix(self.p, [[self.rows[i][j] for i in range(self.nrows)]
                                 for j in range(self.ncols)], ncols=self.nrows)

    def rref(self):
        rank, pivots, red = rref_rows(self.p, self.rows)
        return rank, pivots, FpMatrix(self.p, red, ncols=self.ncols)

    def rank(self):
        return rref_rows(self.p, self.rows)[0]

    def kernel_basis(self):
        return kernel_rows(self.p, self.rows, self.ncols)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        p = self.p
        m = [row[:] for row in self.rows]
        det = 1
        for c in range(self.ncols):
            sel = None
            for i in range(c, self.nrows):
                if m[i][c] % p:
                    sel = i
                    break
            if sel is None:
                return 0
            if sel != c:
                m[c], m[sel] = m[sel], m[c]
                det = -det
            det = det * m[c][c] % p
            inv = modinv(m[c][c] % p, p)
            for i in range(c + 1, self.nrows):
                if m[i][c] % p:
                    f = m[i][c] * inv % p
                    for j in range(c, self.ncols):
                        m[i][j] = (m[i][j] - f * m[c][j]) % p
        return det % p

    def is_zero(self):
        return is_zero_rows(self.rows)

    def __repr__(self):
        return f"FpMatrix(p={self.p}, {self.nrows}x{self.ncols})"


def mat_solve(m):
    """Rank, RREF kernel basis, and reduced echelon form of a matrix.

    rank + len(kernel) = ncols always holds; every kernel vector is
    annihilated by the matrix.
    """
    rank, _, red = m.rref()
    return rank, m.kernel_basis(), red
