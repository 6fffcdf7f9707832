from typing import List, Sequence

from utils.autodiff.dual import Dual, Scalar, primal_value


def lu_solve(matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> List[Scalar]:
    """
    Solve A x = b by LU factorization with partial pivoting in generic scalar arithmetic.

    Works unchanged on floats and (nested) Duals, which is how the IPD resolvent
    (I - gamma P)^-1 is differentiated. Pivots are chosen on the innermost primal.

    Args:
        matrix: Square matrix as a list of rows
        rhs: Right-hand side

    Returns:
        Solution vector

    Raises:
        ZeroDivisionError: If the matrix is singular at the primal level
    """
    n = len(matrix)
    a = [list(row) for row in matrix]
    b = list(rhs)
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(primal_value(a[r][col])))
        if primal_value(a[pivot][col]) == 0.0:
            raise ZeroDivisionError("singular matrix in lu_solve")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        for r in range(col + 1, n):
            factor = a[r][col] / a[col][col]
            if not isinstance(factor, Dual) and factor == 0.0:
                continue
            for c in range(col + 1, n):
                a[r][c] = a[r][c] - factor * a[col][c]
            b[r] = b[r] - factor * b[col]
    x: List[Scalar] = [0.0] * n
    for r in range(n - 1, -1, -1):
        acc = b[r]
        for c in range(r + 1, n):
            acc = acc - a[r][c] * x[c]
        x[r] = acc / a[r][r]
    return x
