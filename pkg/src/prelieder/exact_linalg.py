"""Dense exact linear algebra over the rationals.

Everything here works with fractions.Fraction entries; no floats ever
enter, so ranks and kernels are exact and the row echelon form is the
unique reduced one (leading ones, zeros above and below each pivot).
"""

from __future__ import annotations

from fractions import Fraction


def frac(x) -> Fraction:
    """Coerce int / str / Fraction to Fraction. Floats are rejected."""
    if isinstance(x, float):
        raise TypeError("float entries are not allowed, use int, str or Fraction")
    return Fraction(x)


class Matrix:
    """Immutable dense rational matrix, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        assert rows >= 0 and cols >= 0
        ent = tuple(tuple(frac(x) for x in row) for row in entries)
        assert len(ent) == rows and all(len(r) == cols for r in ent)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ent)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def from_rows(rows_list) -> "Matrix":
        rows_list = [list(r) for r in rows_list]
        n = len(rows_list)
        m = len(rows_list[0]) if n else 0
        return Matrix(n, m, rows_list)

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, [[0] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(
            self.rows,
            self.cols,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = frac(c)
        return Matrix(
            self.rows, self.cols, [[c * x for x in row] for row in self.entries]
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        assert self.cols == other.rows
        ot = other.entries
        out = []
        for ra in self.entries:
            out.append(
                [
                    sum((ra[k] * ot[k][j] for k in range(self.cols)), Fraction(0))
                    for j in range(other.cols)
                ]
            )
        return Matrix(self.rows, other.cols, out)

    def matvec(self, v) -> tuple:
        assert len(v) == self.cols
        return tuple(
            sum((row[j] * frac(v[j]) for j in range(self.cols)), Fraction(0))
            for row in self.entries
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i][j] for i in range(self.rows))


def rref(m: Matrix):
    """Reduced row echelon form.

    Returns (R, rank, pivots) where pivots is the tuple of pivot column
    indices. R is unique, with unit pivots and zeros above and below.
    """
    a = [list(row) for row in m.entries]
    rows, cols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Matrix(rows, cols, a), r, tuple(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel_basis(m: Matrix) -> list:
    """Basis of the right null space {v : m v = 0}, one vector per free column.

    The basis is in the standard rref parametrization: vector k for free
    column j has k[j] = 1 and k[pivot_col(r)] = -R[r][j].
    """
    R, rk, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for j in range(m.cols):
        if j in pivset:
            continue
        v = [Fraction(0)] * m.cols
        v[j] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -R.entries[r][j]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b) -> tuple | None:
    """One exact solution of m x = b, or None when inconsistent.

    Free variables are set to zero, so the answer is the rref particular
    solution. Callers wanting the full affine set combine with
    kernel_basis(m).
    """
    b = [frac(x) for x in b]
    assert len(b) == m.rows
    aug = Matrix(m.rows, m.cols + 1, [list(row) + [bv] for row, bv in zip(m.entries, b)])
    R, rk, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = R.entries[r][m.cols]
    return tuple(x)


def hstack(a: Matrix, b: Matrix) -> Matrix:
    assert a.rows == b.rows
    return Matrix(
        a.rows,
        a.cols + b.cols,
        [list(ra) + list(rb) for ra, rb in zip(a.entries, b.entries)],
    )


def columns_matrix(vectors, dim: int) -> Matrix:
    """Matrix whose columns are the given length-dim vectors."""
    vectors = [tuple(frac(x) for x in v) for v in vectors]
    assert all(len(v) == dim for v in vectors)
    return Matrix(dim, len(vectors), [[v[i] for v in vectors] for i in range(dim)])


def in_span(vectors, v) -> bool:
    """Is v in the column span of vectors (all length-n sequences)?"""
    v = tuple(frac(x) for x in v)
    if all(x == 0 for x in v):
        return True
    if not vectors:
        return False
    return solve(columns_matrix(vectors, len(v)), v) is not None


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    c = frac(c)
    return tuple(c * x for x in v)


def zero_vec(n: int):
    return (Fraction(0),) * n
