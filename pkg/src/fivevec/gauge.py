"""Internal-symmetry connections on an (n+1)-component multiplet.

An n-component column sector and a single extra slot share one
connection matrix.  The n x n block splits exactly into a traceless
su(n) part and a u(1) part; the off-block column couples the two
sectors and is where conjugation asymmetry shows up.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import CNum, SqrtNum
from .poly import Poly4

C0 = CNum.of(0)
C1 = CNum.of(1)


def _czero(n):
    return [[C0 for _ in range(n)] for _ in range(n)]


def _ceye(n):
    return [[C1 if i == j else C0 for j in range(n)] for i in range(n)]


def cmul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(m)), C0) for j in range(p)] for i in range(n)]


def cadd(A, B):
    return [[A[i][j] + B[i][j] for j in range(len(A[0]))] for i in range(len(A))]

def csub(A, B):
    return [[A[i][j] - B[i][j] for j in range(len(A[0]))] for i in range(len(A))]


def cscale(A, s):
    return [[A[i][j] * s for j in range(len(A[0]))] for i in range(len(A))]


def ctrace(A):
    return sum((A[i][i] for i in range(len(A))), C0)


def cconj_t(A):
    return [[A[j][i].conj() for j in range(len(A))] for i in range(len(A[0]))]


def ctranspose(A):
    return [[A[j][i] for j in range(len(A))] for i in range(len(A[0]))]


def c_is_zero(A):
    return all(A[i][j].is_zero() for i in range(len(A)) for j in range(len(A[0])))


def gellmann_generators(n: int):
    """Generalized traceless Hermitian generators t_a, a = 1..n^2-1,
    normalized so that Tr(t_a t_b) = 2 delta_ab, all entries exact."""
    if n < 2:
        raise ValueError("need n >= 2")
    gens = []
    I = CNum.I
    for j in range(n):
        for k in range(j + 1, n):
            sym = _czero(n)
            sym[j][k] = C1
            sym[k][j] = C1
            gens.append(sym)
            asym = _czero(n)
            asym[j][k] = -I
            asym[k][j] = I
            gens.append(asym)
    for l in range(1, n):
        diag = _czero(n)
        scale = CNum(SqrtNum.sqrt(Fraction(2, l * (l + 1))), SqrtNum.of(0))
        for j in range(l):
            diag[j][j] = scale
        diag[l][l] = scale * CNum.of(-l)
        gens.append(diag)
    return gens


class GaugeConnection:
    """Blocks of the multiplet connection, per direction A in (0..3,5).

    nn[A]: n x n anti-Hermitian-with-i convention block C^i_{jA}
    col[A]: length-n column C^&_{jA} coupling the extra slot
    amp[A]: scalar C^&_{&A}
    Entries are CNum; spacetime dependence lives in separate Poly4
    profiles supplied by the caller when needed.
    """

    __slots__ = ("n", "nn", "col", "amp")

    def __init__(self, n, nn, col, amp):
        self.n = n
        self.nn = [
            [[CNum.of(v) for v in row] for row in nn[A]] for A in range(5)
        ]
        self.col = [[CNum.of(v) for v in col[A]] for A in range(5)]
        self.amp = [CNum.of(amp[A]) for A in range(5)]

    @classmethod
    def zero(cls, n):
        return cls(n, [_czero(n) for _ in range(5)], [[C0] * n for _ in range(5)], [C0] * 5)

    def full(self, A):
        """(n+1) x (n+1) matrix with the standard-frame zero row C^i_& = 0."""
        n = self.n
        out = [[C0 for _ in range(n + 1)] for _ in range(n + 1)]
        for i in range(n):
            for j in range(n):
                out[i][j] = self.nn[A][i][j]
            out[n][i] = self.col[A][i]
        out[n][n] = self.amp[A]
        return out


def su_u1_decompose(conn: GaugeConnection, g_coupling: Fraction):
    """Split each n x n block into C^a (traceless) and C^0 (trace) parts.

    Convention: C^i_j = (i/2) g t_a C^a + i g [2n(n+1)]^{-1/2} C^0 delta,
    with the extra-slot scalar fixed by tracelessness of the whole
    (n+1)-block as C^&_& = -i g [n / 2(n+1)]^{1/2} C^0.
    Returns (Ca[A][a], C0[A], residuals) where residuals check that the
    block really is i*Hermitian and that the trace condition holds.
    """
    n = conn.n
    gens = gellmann_generators(n)
    I = CNum.I
    ginv = Fraction(1, 1) / Fraction(g_coupling)
    u1_norm = CNum(SqrtNum.sqrt(Fraction(1, 2 * n * (n + 1))), SqrtNum.of(0))
    amp_norm = CNum(SqrtNum.sqrt(Fraction(n, 2 * (n + 1))), SqrtNum.of(0))
    Ca = []
    C0s = []
    herm_res = []
    trace_res = []
    for A in range(5):
        blk = conn.nn[A]
        # i-Hermiticity: blk = i H with H Hermitian, i.e. (-i blk) Hermitian
        H = cscale(blk, -I)
        herm_res.append(csub(H, cconj_t(H)))
        coeffs = []
        for t in gens:
            # C^a = Tr(t_a C) / (i g): Tr(t_a t_b) = 2 delta gives the 1/2
            tr = ctrace(cmul(t, blk))
            coeffs.append(tr * (-I) * ginv)
        Ca.append(coeffs)
        tr = ctrace(blk)
        c0 = tr * (-I) * ginv * (C1 / (u1_norm * CNum.of(n)))
        C0s.append(c0)
        want_amp = -(I * amp_norm * c0 * CNum.of(g_coupling))
        trace_res.append(conn.amp[A] - want_amp)
    return Ca, C0s, herm_res, trace_res


def compose_nn(n, Ca, C0s, g_coupling: Fraction):
    """Inverse of su_u1_decompose for the n x n blocks."""
    gens = gellmann_generators(n)
    I = CNum.I
    half_g = Fraction(g_coupling) / 2
    u1_norm = CNum(SqrtNum.sqrt(Fraction(1, 2 * n * (n + 1))), SqrtNum.of(0))
    out = []
    for A in range(5):
        blk = _czero(n)
        for a, t in enumerate(gens):
            blk = cadd(blk, cscale(t, I * CNum.of(half_g) * Ca[A][a]))
        diag = cscale(_ceye(n), I * u1_norm * C0s[A] * CNum.of(g_coupling))
        out.append(cadd(blk, diag))
    return out


def transform_connection(conn: GaugeConnection, L, dL):
    """Frame change C' = L^-1 C L + L^-1 (d_A L), with the block-lower-
    triangular L = [[L^i_j, 0], [L^&_j, L^&_&]] preserving the standard
    zero row.  dL[A] is the derivative of L along direction A (the fifth
    slot contributes none)."""
    n = conn.n
    Linv = _cinv(L)
    nn, col, amp = [], [], []
    for A in range(5):
        full = conn.full(A)
        term = cmul(Linv, cmul(full, L))
        d = dL[A] if A < 4 else _czero(n + 1)
        term = cadd(term, cmul(Linv, d))
        if any(not term[i][n].is_zero() for i in range(n)):
            raise ValueError("transform left the standard frame")
        nn.append([[term[i][j] for j in range(n)] for i in range(n)])
        col.append([term[n][j] for j in range(n)])
        amp.append(term[n][n])
    return GaugeConnection(n, nn, col, amp)


def _cinv(A):
    n = len(A)
    M = [row[:] + eye_row[:] for row, eye_row in zip([r[:] for r in A], _ceye(n))]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if not M[r][c].is_zero():
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("singular frame matrix")
        M[c], M[piv] = M[piv], M[c]
        inv = C1 / M[c][c]
        M[c] = [v * inv for v in M[c]]
        for r in range(n):
            if r != c and not M[r][c].is_zero():
                f = M[r][c]
                M[r] = [v - f * w for v, w in zip(M[r], M[c])]
    return [row[n:] for row in M]


class MultipletField:
    """Column u^i (CNum coefficients times Poly4 profiles) plus extra
    slot u^&; stored as lists of (CNum, Poly4) pairs summed formally."""

    __slots__ = ("n", "comp")

    def __init__(self, n, comp):
        self.n = n
        self.comp = comp  # length n+1, each a list of (CNum, Poly4)


def _dA(pairs, A):
    if A == 4:
        return []
    return [(c, p.partial(A)) for c, p in pairs if not p.partial(A).is_zero()]


def _scale_pairs(pairs, c):
    return [(z * c, p) for z, p in pairs]


def _add_pairs(*many):
    out = []
    for pairs in many:
        out.extend(pairs)
    return out


def pairs_eval(pairs, pt):
    """Collapse a coefficient list at a rational chart point to one CNum."""
    out = C0
    for z, p in pairs:
        v = p.eval(pt)
        out = out + z * CNum.of(v)
    return out


def np1_derivative(u: MultipletField, conn: GaugeConnection, A: int):
    """Transport derivative of the column multiplet along direction A:
    (Du)^i = d u^i + C^i_j u^j, (Du)^& = d u^& + C^&_& u^& + C^&_j u^j."""
    n = u.n
    out = []
    for i in range(n):
        pairs = _dA(u.comp[i], A)
        for j in range(n):
            cij = conn.nn[A][i][j]
            if not cij.is_zero():
                pairs = _add_pairs(pairs, _scale_pairs(u.comp[j], cij))
        out.append(pairs)
    last = _dA(u.comp[n], A)
    if not conn.amp[A].is_zero():
        last = _add_pairs(last, _scale_pairs(u.comp[n], conn.amp[A]))
    for j in range(n):
        cj = conn.col[A][j]
        if not cj.is_zero():
            last = _add_pairs(last, _scale_pairs(u.comp[j], cj))
    out.append(last)
    return MultipletField(n, out)


def np1_form_derivative(v: MultipletField, conn: GaugeConnection, A: int):
    """Transport derivative of the row multiplet (components v_i, v_&):
    (Dv)_i = d v_i - v_j C^j_i - v_& C^&_i, (Dv)_& = d v_& - v_& C^&_&."""
    n = v.n
    out = []
    for i in range(n):
        pairs = _dA(v.comp[i], A)
        for j in range(n):
            cji = conn.nn[A][j][i]
            if not cji.is_zero():
                pairs = _add_pairs(pairs, _scale_pairs(v.comp[j], -cji))
        ci = conn.col[A][i]
        if not ci.is_zero():
            pairs = _add_pairs(pairs, _scale_pairs(v.comp[n], -ci))
        out.append(pairs)
    last = _dA(v.comp[n], A)
    if not conn.amp[A].is_zero():
        last = _add_pairs(last, _scale_pairs(v.comp[n], -conn.amp[A]))
    out.append(last)
    return MultipletField(n, out)


def epsilon_matrix(n: int):
    """Involution on the traceless sector defined by transposition of the
    generators: t_a^T = eps^b_a t_b, eps^b_a = Tr(t_b t_a^T) / 2."""
    gens = gellmann_generators(n)
    m = len(gens)
    half = Fraction(1, 2)
    eps = [[C0 for _ in range(m)] for _ in range(m)]
    for a in range(m):
        ta_t = ctranspose(gens[a])
        for b in range(m):
            eps[b][a] = ctrace(cmul(gens[b], ta_t)) * CNum.of(half)
    return eps


def conjugate_connection(conn: GaugeConnection, g_coupling: Fraction):
    """The connection a conjugated multiplet would feel if the full
    transport commuted with complex conjugation: C~^0 = -C^0 and
    C~^a = -eps^a_b C^b, with the column block left alone.  The column
    terms are exactly what breaks the symmetry; c_violation measures it."""
    n = conn.n
    Ca, C0s, _, _ = su_u1_decompose(conn, g_coupling)
    eps = epsilon_matrix(n)
    m = len(Ca[0])
    Ca_t = []
    C0_t = []
    for A in range(5):
        row = []
        for a in range(m):
            v = C0
            for b in range(m):
                if not eps[a][b].is_zero():
                    v = v + eps[a][b] * Ca[A][b]
            row.append(-v)
        Ca_t.append(row)
        C0_t.append(-C0s[A])
    nn = compose_nn(n, Ca_t, C0_t, g_coupling)
    amp = []
    I = CNum.I
    amp_norm = CNum(SqrtNum.sqrt(Fraction(n, 2 * (n + 1))), SqrtNum.of(0))
    for A in range(5):
        amp.append(-(I * amp_norm * C0_t[A] * CNum.of(g_coupling)))
    return GaugeConnection(n, nn, conn.col, amp)


def c_violation(u: MultipletField, conn: GaugeConnection, g_coupling: Fraction, A: int):
    """Conjugation asymmetry of the transport.

    Relabeling the column multiplet with lower indices turns the vector
    law under C into the form law under the sign-flipped fields, up to
    the column coupling; the per-slot difference returned here is empty
    exactly when that coupling vanishes, and otherwise equals
    u_& C^&_i in the n-sector and u_j C^&_j in the extra slot."""
    n = u.n
    a_side = np1_derivative(u, conn, A)
    tilde = conjugate_connection(conn, g_coupling)
    b_side = np1_form_derivative(u, tilde, A)
    res = []
    for i in range(n + 1):
        res.append(_add_pairs(a_side.comp[i], _scale_pairs(b_side.comp[i], CNum.of(-1))))
    return res


def expected_column_terms(u: MultipletField, conn: GaugeConnection, A: int):
    """What c_violation must equal when the column coupling is nonzero."""
    n = u.n
    out = []
    for i in range(n):
        ci = conn.col[A][i]
        out.append(_scale_pairs(u.comp[n], ci) if not ci.is_zero() else [])
    last = []
    for j in range(n):
        cj = conn.col[A][j]
        if not cj.is_zero():
            last = _add_pairs(last, _scale_pairs(u.comp[j], cj))
    out.append(last)
    return out


def pairs_collapse(pairs):
    """One Poly4 with CNum coefficients equal to the formal sum."""
    out = Poly4.zero()
    for z, p in pairs:
        if z.is_zero():
            continue
        out = out + Poly4({e: z * c for e, c in p.terms.items()})
    return out


def pairs_is_zero(pairs) -> bool:
    return pairs_collapse(pairs).is_zero()
