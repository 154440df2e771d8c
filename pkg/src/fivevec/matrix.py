"""Small exact linear algebra helpers over Fraction and polynomial rings."""

from __future__ import annotations

from fractions import Fraction

from .poly import ONE, Poly4, RatPoly, divexact


def frac_inverse(M):
    """Invert a square Fraction matrix by Gaussian elimination."""
    n = len(M)
    A = [[Fraction(M[i][j]) for j in range(n)] for i in range(n)]
    I = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        I[col], I[piv] = I[piv], I[col]
        d = A[col][col]
        A[col] = [v / d for v in A[col]]
        I[col] = [v / d for v in I[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
                I[r] = [a - f * b for a, b in zip(I[r], I[col])]
    return I


def frac_det(M):
    n = len(M)
    A = [[Fraction(M[i][j]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        det *= A[col][col]
        d = A[col][col]
        for r in range(col + 1, n):
            if A[r][col]:
                f = A[r][col] / d
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return det


def ring_det(M):
    """Determinant by cofactor expansion; works for any commutative ring."""
    n = len(M)
    if n == 1:
        return M[0][0]
    det = None
    for j in range(n):
        a = M[0][j]
        if hasattr(a, "is_zero") and a.is_zero():
            continue
        minor = [[M[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = a * ring_det(minor)
        if j % 2:
            term = -term
        det = term if det is None else det + term
    if det is None:
        return M[0][0] - M[0][0]  # ring zero
    return det


def ring_adjugate(M):
    n = len(M)
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [M[r][c] for c in range(n) if c != j] for r in range(n) if r != i
            ]
            cof = ring_det(minor) if n > 1 else ONE
            if (i + j) % 2:
                cof = -cof
            adj[j][i] = cof
    return adj


def poly_inverse(M):
    """Invert a Poly4 matrix whose determinant is a nonzero constant.

    Raises ValueError when the determinant is nonconstant (then the
    inverse is rational, not polynomial; use rat_inverse instead).
    """
    det = ring_det(M)
    if det.is_zero():
        raise ZeroDivisionError("singular polynomial matrix")
    if not det.is_constant():
        raise ValueError(f"nonconstant determinant {det}; inverse is not polynomial")
    c = Fraction(1) / det.constant_value()
    adj = ring_adjugate(M)
    n = len(M)
    return [[adj[i][j] * c for j in range(n)] for i in range(n)]


def rat_inverse(M):
    """Invert a Poly4/RatPoly matrix over the rational-function field."""
    R = [[RatPoly.from_any(v) for v in row] for row in M]
    det = ring_det(R)
    if det.is_zero():
        raise ZeroDivisionError("singular matrix")
    adj = ring_adjugate(R)
    n = len(M)
    return [[adj[i][j] / det for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = A[i][0] * B[0][j]
            for k in range(1, m):
                s = s + A[i][k] * B[k][j]
            row.append(s)
        out.append(row)
    return out


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def transpose(A):
    return [list(row) for row in zip(*A)]
