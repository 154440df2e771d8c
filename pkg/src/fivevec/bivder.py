"""Derivative indexed by bivectors of the five-dimensional tangent space.

Acting on scalars it differentiates along the algebraic-part four-vector
of the bivector; on vectors it adds a pointwise rotation generated by
(M_{mu nu})^alpha_beta = delta^alpha_nu g_{mu beta} - delta^alpha_mu
g_{nu beta}.  The map sigma turns a five-vector into a bivector through
the torsion 1-form, and the bridge identity says transport along u
equals the bivector derivative along sigma(u).
"""

from __future__ import annotations

from fractions import Fraction

from .connection import ConnectionH, SForm, _d, _is_zero
from .core5 import Bivector5Field, FiveVecField, FourVecField, MetricG
from .poly import ONE, ZERO, Poly4

HALF = Fraction(1, 2)


def m_matrix4(g: MetricG, mu: int, nu: int):
    """(M_{mu nu})^alpha_beta as a 4x4 array."""
    out = [[ZERO] * 4 for _ in range(4)]
    for b in range(4):
        out[nu][b] = out[nu][b] + g[mu, b]
        out[mu][b] = out[mu][b] - g[nu, b]
    return out


def m_matrix5(g: MetricG, K: int, L: int):
    """(M_{KL})^A_B with the five-extended metric (fifth row and column
    of g identically zero)."""
    out = [[ZERO] * 5 for _ in range(5)]
    for B in range(5):
        gKB = g[K, B] if K < 4 and B < 4 else ZERO
        gLB = g[L, B] if L < 4 and B < 4 else ZERO
        out[L][B] = out[L][B] + gKB
        out[K][B] = out[K][B] - gLB
    return out


def epart_vector(A: Bivector5Field) -> FourVecField:
    """Four-vector a with a^alpha = A^{alpha 5}."""
    return FourVecField([A[a, 4] for a in range(4)])


def D_scalar(A: Bivector5Field, f: Poly4) -> Poly4:
    out = ZERO
    for a in range(4):
        if not A[a, 4].is_zero():
            out = out + A[a, 4] * f.partial(a)
    return out


def D_fourvec(A: Bivector5Field, U: FourVecField, g: MetricG, gamma_lc) -> FourVecField:
    """Levi-Civita transport along the algebraic part plus the pointwise
    rotation of the four-block."""
    comps = []
    for al in range(4):
        c = ZERO
        for m in range(4):
            a_m = A[m, 4]
            if not a_m.is_zero():
                c = c + a_m * U[al].partial(m)
                for b in range(4):
                    t = gamma_lc[al][b][m]
                    if not _is_zero(t):
                        c = c + a_m * t * U[b]
        for m in range(4):
            for n in range(4):
                a_mn = A[m, n]
                if a_mn.is_zero():
                    continue
                # (M_{mn})^al_b = delta^al_n g_{mb} - delta^al_m g_{nb}
                if al == n:
                    for b in range(4):
                        if not g[m, b].is_zero():
                            c = c + a_mn * g[m, b] * U[b] * HALF
                if al == m:
                    for b in range(4):
                        if not g[n, b].is_zero():
                            c = c - a_mn * g[n, b] * U[b] * HALF
        comps.append(c)
    return FourVecField(comps, U.basis)


def fivevec_coeffs(g: MetricG, gamma_lc):
    """Coefficient table G[A][B][mu] for the derivative along e_mu ^ e_5
    acting on five-vectors: Levi-Civita four-block, -g fifth row."""
    G = [[[ZERO] * 4 for _ in range(5)] for _ in range(5)]
    for a in range(4):
        for b in range(4):
            for m in range(4):
                G[a][b][m] = gamma_lc[a][b][m]
    for b in range(4):
        for m in range(4):
            G[4][b][m] = -g[b, m]
    return G


def D_fivevec(A: Bivector5Field, u: FiveVecField, g: MetricG, gamma_lc) -> FiveVecField:
    coeffs = fivevec_coeffs(g, gamma_lc)
    comps = []
    for Aidx in range(5):
        c = ZERO
        for m in range(4):
            a_m = A[m, 4]
            if not a_m.is_zero():
                c = c + a_m * u[Aidx].partial(m)
                for B in range(5):
                    t = coeffs[Aidx][B][m]
                    if not _is_zero(t):
                        c = c + a_m * t * u[B]
        for m in range(4):
            for n in range(4):
                a_mn = A[m, n]
                if a_mn.is_zero():
                    continue
                if Aidx == n:
                    for B in range(4):
                        if not g[m, B].is_zero():
                            c = c + a_mn * g[m, B] * u[B] * HALF
                if Aidx == m:
                    for B in range(4):
                        if not g[n, B].is_zero():
                            c = c - a_mn * g[n, B] * u[B] * HALF
        comps.append(c)
    return FiveVecField(comps, u.basis)


def D_metric(A: Bivector5Field, g: MetricG, gamma_lc):
    """Leibniz action on the 4x4 metric; identically zero for consistent
    inputs (transport preserves g, the rotation is g-antisymmetric)."""
    out = [[ZERO] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            c = ZERO
            for m in range(4):
                a_m = A[m, 4]
                if not a_m.is_zero():
                    c = c + a_m * g[i, j].partial(m)
                    for b in range(4):
                        ti = gamma_lc[b][i][m]
                        if not _is_zero(ti):
                            c = c - a_m * ti * g[b, j]
                        tj = gamma_lc[b][j][m]
                        if not _is_zero(tj):
                            c = c - a_m * tj * g[i, b]
            for m in range(4):
                for n in range(4):
                    a_mn = A[m, n]
                    if a_mn.is_zero():
                        continue
                    # subtract (M_{mn})^b_i g_{bj} + (M_{mn})^b_j g_{ib}
                    c = c - a_mn * (g[m, i] * g[n, j] - g[n, i] * g[m, j]) * HALF
                    c = c - a_mn * (g[m, j] * g[n, i] - g[n, j] * g[m, i]) * HALF
            out[i][j] = c
    return out


def sigma(u: FiveVecField, S: SForm) -> Bivector5Field:
    """sigma(u)^{AB} = s^{AB}_C u^C: the four-block contracts S, the
    mixed slots carry u's four-part."""
    m = [[ZERO] * 5 for _ in range(5)]
    for a in range(4):
        for b in range(4):
            c = ZERO
            for C in range(5):
                sv = S.S[a][b][C]
                if not sv.is_zero():
                    c = c + sv * u[C if C < 4 else 4]
            m[a][b] = c
    for a in range(4):
        m[a][4] = u[a]
        m[4][a] = -u[a]
    return Bivector5Field(m)


def pentad_along(u: FiveVecField, x, H: ConnectionH):
    """Directional transport derivative along the five-vector u: linear
    combination u^C (d_C + H_C) with the fifth slot algebraic; x may be a
    scalar, four-vector, or five-vector field."""
    from .connection import pentad_derivative

    if isinstance(x, Poly4):
        out = ZERO
        for m in range(4):
            if not u[m].is_zero():
                out = out + u[m] * x.partial(m)
        return out
    if isinstance(x, FourVecField):
        four = H.four_block()
        comps = []
        for al in range(4):
            c = ZERO
            for m in range(4):
                if not u[m].is_zero():
                    c = c + u[m] * x[al].partial(m)
                    for b in range(4):
                        t = four[al][b][m]
                        if not _is_zero(t):
                            c = c + u[m] * t * x[b]
            if not u[4].is_zero():
                for b in range(4):
                    t = H.H[al][b][4]
                    if not _is_zero(t):
                        c = c + u[4] * t * x[b]
            comps.append(c)
        return FourVecField(comps, x.basis)
    if isinstance(x, FiveVecField):
        out = None
        for C in range(5):
            if u[C].is_zero():
                continue
            term = pentad_derivative(x, H, C if C < 4 else 4)
            scaled = FiveVecField([u[C] * t for t in term.u], x.basis)
            out = scaled if out is None else out + scaled
        if out is None:
            out = FiveVecField([ZERO] * 5, x.basis)
        return out
    raise TypeError("unsupported field type")


def D_along_sigma(u: FiveVecField, x, S: SForm, g: MetricG, gamma_lc):
    """The bivector derivative indexed by sigma(u)."""
    sig = sigma(u, S)
    if isinstance(x, Poly4):
        return D_scalar(sig, x)
    if isinstance(x, FourVecField):
        return D_fourvec(sig, x, g, gamma_lc)
    if isinstance(x, FiveVecField):
        return D_fivevec(sig, x, g, gamma_lc)
    raise TypeError("unsupported field type")


def check_bridge(u: FiveVecField, x, S: SForm, g: MetricG, gamma_lc, H: ConnectionH):
    """Residual of the linearity bridge: transport along u minus the
    bivector derivative along sigma(u)."""
    lhs = pentad_along(u, x, H)
    rhs = D_along_sigma(u, x, S, g, gamma_lc)
    if isinstance(x, Poly4):
        return lhs - rhs
    if isinstance(x, FourVecField):
        return [lhs[a] - rhs[a] for a in range(4)]
    return [lhs[A] - rhs[A] for A in range(5)]


class BivCoeffs:
    """Connection coefficients for the bivector derivative: table[target]
    [source][K][L], antisymmetric in (K, L)."""

    __slots__ = ("table",)

    def __init__(self, table):
        self.table = table

    def __getitem__(self, key):
        a, b, K, L = key
        return self.table[a][b][K][L]


def biv_coeffs_fourvec(g: MetricG, gamma_lc) -> BivCoeffs:
    """Four-vector targets: Levi-Civita in the (mu,5) slots, the rotation
    generators in the (mu,nu) slots."""
    t = [[[[ZERO] * 5 for _ in range(5)] for _ in range(4)] for _ in range(4)]
    for a in range(4):
        for b in range(4):
            for m in range(4):
                t[a][b][m][4] = gamma_lc[a][b][m]
                t[a][b][4][m] = -gamma_lc[a][b][m]
            for m in range(4):
                for n in range(4):
                    if a == n:
                        t[a][b][m][n] = t[a][b][m][n] + g[m, b]
                    if a == m:
                        t[a][b][m][n] = t[a][b][m][n] - g[n, b]
    return BivCoeffs(t)


def biv_coeffs_fivevec(g: MetricG, gamma_lc) -> BivCoeffs:
    t = [[[[ZERO] * 5 for _ in range(5)] for _ in range(5)] for _ in range(5)]
    coeffs = fivevec_coeffs(g, gamma_lc)
    for A in range(5):
        for B in range(5):
            for m in range(4):
                t[A][B][m][4] = coeffs[A][B][m]
                t[A][B][4][m] = -coeffs[A][B][m]
    for A in range(5):
        for B in range(5):
            for m in range(4):
                for n in range(4):
                    gmB = g[m, B] if B < 4 else ZERO
                    gnB = g[n, B] if B < 4 else ZERO
                    if A == n and not gmB.is_zero():
                        t[A][B][m][n] = t[A][B][m][n] + gmB
                    if A == m and not gnB.is_zero():
                        t[A][B][m][n] = t[A][B][m][n] - gnB
    return BivCoeffs(t)


def transform_biv_coeffs(coeffs: BivCoeffs, Lambda4, L5, g: MetricG, gamma_lc) -> BivCoeffs:
    """Gamma'^mu_{nu AB} = (Lam^-1) Gamma Lam L L + (Lam^-1)(D_{ST} Lam) L L
    for four-vector targets; Lambda4 rebases the targets, L5 the bivector
    slots."""
    from .matrix import poly_inverse

    Lam = [[_as_poly(v) for v in row] for row in Lambda4]
    L = [[_as_poly(v) for v in row] for row in L5]
    Laminv = poly_inverse(Lam)
    out = [[[[ZERO] * 5 for _ in range(5)] for _ in range(4)] for _ in range(4)]
    for m in range(4):
        for n in range(4):
            for A in range(5):
                for B in range(5):
                    c = ZERO
                    for s in range(4):
                        for tt in range(4):
                            for S_ in range(5):
                                for T_ in range(5):
                                    v = coeffs.table[s][tt][S_][T_]
                                    if _is_zero(v):
                                        continue
                                    c = c + Laminv[m][s] * v * Lam[tt][n] * L[S_][A] * L[T_][B]
                    for s in range(4):
                        for S_ in range(5):
                            for T_ in range(5):
                                lv = L[S_][A] * L[T_][B]
                                if _is_zero(lv):
                                    continue
                                dL = _D_ST_scalar(S_, T_, Lam[s][n], g, gamma_lc)
                                if not _is_zero(dL):
                                    c = c + Laminv[m][s] * dL * lv
                    out[m][n][A][B] = c
    return BivCoeffs(out)


def _D_ST_scalar(S_, T_, f, g, gamma_lc):
    """Bivector derivative of a scalar along the basis bivector e_S ^ e_T."""
    if S_ < 4 and T_ == 4:
        return f.partial(S_)
    if S_ == 4 and T_ < 4:
        return -f.partial(T_)
    return ZERO


def _as_poly(v):
    from .poly import _coerce_any

    return _coerce_any(v)
