"""Integer matrices: Smith and Hermite normal forms, kernels, rational inverses."""

from __future__ import annotations

from fractions import Fraction


class IntMatrix:
    """Immutable matrix of Python ints (row-major)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, r, c):
        return cls([[0] * c for _ in range(r)], c)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self):
        return [list(r) for r in self.entries]

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.entries == other.entries and self.cols == other.cols
        return NotImplemented

    def __hash__(self):
        return hash((self.entries, self.cols))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries],
                         other.cols)

    def transpose(self):
        return IntMatrix([list(c) for c in zip(*self.entries)] if self.rows else [], self.rows)

    @property
    def T(self):
        return self.transpose()

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return int_det(self.entries)

    def is_unimodular(self):
        return self.rows == self.cols and abs(self.det()) == 1

    def inverse(self):
        """Integer inverse of a unimodular matrix."""
        inv = rational_inverse(self.entries)
        if any(x.denominator != 1 for row in inv for x in row):
            raise ValueError("matrix is not unimodular")
        return IntMatrix([[int(x) for x in row] for row in inv], self.cols)

    def is_diagonal(self):
        return all(self.entries[i][j] == 0 for i in range(self.rows)
                   for j in range(self.cols) if i != j)

    def diagonal(self):
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def __repr__(self):
        return f"IntMatrix({self.tolist()})"


def int_det(rows):
    """Bareiss determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    M = [list(r) for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[-1][-1]


def rational_inverse(rows):
    n = len(rows)
    A = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(rows)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def rational_solve_rows(basis, targets):
    """Rows ``g`` with ``basis @ g == targets`` (square invertible ``basis``)."""
    inv = rational_inverse(basis)
    n = len(basis)
    m = len(targets[0]) if targets else 0
    return [[sum(inv[i][k] * targets[k][j] for k in range(n)) for j in range(m)] for i in range(n)]


def smith_normal_form(A):
    """Return ``(U, D, V)`` with ``U @ A @ V == D`` diagonal, ``d_1 | d_2 | ...`` and
    ``U``, ``V`` unimodular.  Diagonal entries are nonnegative."""
    if not isinstance(A, IntMatrix):
        A = IntMatrix(A)
    m, n = A.rows, A.cols
    D = [list(r) for r in A.entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row_dst += c * row_src
        D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    add_row(t, i, -q)
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    add_col(t, j, -q)
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: pivot must divide the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return IntMatrix(U, m), IntMatrix(D, n), IntMatrix(V, n)


def hermite_normal_form(rows):
    """Row-style HNF of the lattice spanned by integer ``rows``; zero rows dropped.

    Pivots are positive and entries above each pivot are reduced into
    ``[0, pivot)``.
    """
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        # Euclid down the column
        while True:
            nz = [i for i in range(r, len(A)) if A[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[piv] = A[piv], A[r]
            others = [i for i in range(r + 1, len(A)) if A[i][c]]
            if not others:
                break
            for i in others:
                q = A[i][c] // A[r][c]
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        if r < len(A) and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
            for i in range(r):
                q = A[i][c] // A[r][c]
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
            r += 1
            if r == len(A):
                break
    return [row for row in A[:r]]


def integer_kernel(rows):
    """Basis (rows) of ``{x in Z^n : rows @ x == 0}``."""
    A = IntMatrix(rows) if rows else None
    if A is None or A.rows == 0:
        raise ValueError("empty system")
    U, D, V = smith_normal_form(A)
    rank = sum(1 for d in D.diagonal() if d)
    n = A.cols
    basis = [[V[i, j] for i in range(n)] for j in range(rank, n)]
    return hermite_normal_form(basis) if basis else []


def lattice_basis(generators):
    """HNF basis of the lattice spanned by integer generator rows."""
    return hermite_normal_form(generators)
