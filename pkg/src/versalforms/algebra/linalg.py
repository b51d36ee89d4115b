"""Gaussian elimination over an exact field (raw field values)."""


def row_reduce(matrix, field):
    """Reduced row echelon form; returns ``(rref_rows, pivot_columns)``."""
    A = [list(r) for r in matrix]
    if not A:
        return [], []
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if not field.is_zero(A[i][c])), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = field.inv(A[r][c])
        A[r] = [field.mul(inv, x) for x in A[r]]
        for i in range(len(A)):
            if i != r and not field.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(matrix, field):
    return len(row_reduce(matrix, field)[1])


def nullspace(matrix, field, ncols=None):
    """Basis of ``{v : matrix @ v == 0}`` as a list of vectors."""
    if not matrix:
        n = ncols or 0
        return [[field.one if i == j else field.zero for i in range(n)] for j in range(n)]
    n = len(matrix[0])
    R, pivots = row_reduce(matrix, field)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * n
        v[fc] = field.one
        for row, pc in zip(R, pivots):
            v[pc] = field.neg(row[fc])
        basis.append(v)
    return basis


def matmul(A, B, field):
    return [[field.sum(field.mul(a, b) for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def det(matrix, field):
    from .poly import bareiss_det
    return bareiss_det(matrix, field)


def inverse(matrix, field):
    n = len(matrix)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(matrix)]
    R, pivots = row_reduce(aug, field)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]
