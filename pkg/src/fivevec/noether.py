"""Stress-energy / angular-momentum bookkeeping.

The two source tensors of standard field theory fit into one rank-(1,2)
object on the five-dimensional tangent space, antisymmetric in its lower
pair.  Canonical currents come from a Lagrangian written as a polynomial
in formal field symbols and their transport-derivative symbols.
"""

from __future__ import annotations

from fractions import Fraction

from .connection import ConnectionH, SForm, _d, _is_zero
from .core5 import ETA4, MetricG
from .poly import ONE, X, ZERO, Poly4


def _xcov():
    return [ETA4[a] * X[a] for a in range(4)]


class MTensor:
    """Components M[A][B][C], B,C over (0..3,5), antisymmetric in (B,C)."""

    __slots__ = ("M", "frame")

    def __init__(self, M, frame: str = "P"):
        for A in range(5):
            for B in range(5):
                for C in range(B, 5):
                    if not (M[A][B][C] + M[A][C][B]).is_zero():
                        raise ValueError("lower pair must be antisymmetric")
        self.M = M
        self.frame = frame

    def __getitem__(self, key):
        A, B, C = key
        return self.M[A][B][C]


def _empty():
    return [[[ZERO] * 5 for _ in range(5)] for _ in range(5)]


def assemble_M(Theta, Sigma) -> MTensor:
    """Self-parallel-frame components: the four-block combines the moment
    terms x_a Theta^m_b - x_b Theta^m_a with the spin part Sigma^m_{ab};
    the mixed slots carry Theta itself."""
    for m in range(4):
        for a in range(4):
            for b in range(4):
                if not (Sigma[m][a][b] + Sigma[m][b][a]).is_zero():
                    raise ValueError("spin part must be antisymmetric")
    xcov = _xcov()
    M = _empty()
    for m in range(4):
        for a in range(4):
            for b in range(4):
                M[m][a][b] = xcov[a] * Theta[m][b] - xcov[b] * Theta[m][a] + Sigma[m][a][b]
            M[m][4][a] = Theta[m][a]
            M[m][a][4] = -Theta[m][a]
    return MTensor(M, frame="P")


def _p_matrix():
    """Basis matrix N of the self-parallel frame and its inverse."""
    xcov = _xcov()
    N = [[ONE if i == j else ZERO for j in range(5)] for i in range(5)]
    Ninv = [[ONE if i == j else ZERO for j in range(5)] for i in range(5)]
    for a in range(4):
        N[4][a] = xcov[a]
        Ninv[4][a] = -xcov[a]
    return N, Ninv


def M_to_O_basis(M: MTensor) -> MTensor:
    if M.frame != "P":
        raise ValueError("input must be in the self-parallel frame")
    N, Ninv = _p_matrix()
    out = _lower_transform(M.M, Ninv)
    return MTensor(out, frame="O")


def M_to_P_basis(M: MTensor) -> MTensor:
    if M.frame != "O":
        raise ValueError("input must be in the orthonormal frame")
    N, Ninv = _p_matrix()
    out = _lower_transform(M.M, N)
    return MTensor(out, frame="P")


def _lower_transform(M, Ninv):
    """Change of five-vector frame touching only the lower pair: the upper
    slot is a four-vector index and both frames share the four-vectors."""
    out = _empty()
    for A in range(5):
        for B in range(5):
            for C in range(5):
                c = ZERO
                for E in range(5):
                    if _is_zero(Ninv[E][B]):
                        continue
                    for F in range(5):
                        v = M[A][E][F]
                        if _is_zero(v) or _is_zero(Ninv[F][C]):
                            continue
                        c = c + v * Ninv[E][B] * Ninv[F][C]
                out[A][B][C] = c
    return out


def transform_tensor12(M, T, Tinv):
    """General rank-(1,2) transform with a constant component matrix T:
    M'^A_{BC} = T^A_D M^D_{EF} (T^-1)^E_B (T^-1)^F_C."""
    out = _empty()
    for A in range(5):
        for B in range(5):
            for C in range(5):
                c = ZERO
                for D in range(5):
                    tAD = T[A][D]
                    if not tAD:
                        continue
                    for E in range(5):
                        if not Tinv[E][B]:
                            continue
                        for F in range(5):
                            v = M[D][E][F]
                            if _is_zero(v) or not Tinv[F][C]:
                                continue
                            c = c + v * (tAD * Tinv[E][B] * Tinv[F][C])
                out[A][B][C] = c
    return out


def transform_chart(M: MTensor, chart) -> MTensor:
    """Poincare transform of self-parallel-frame components.  The upper
    slot is a four-vector index (Lorentz block only); the lower pair picks
    up the translation-dependent component law.  Coordinates in the
    entries are re-expressed in the new chart."""
    from .frames import p_component_matrix
    from .matrix import frac_inverse
    from .poly import substitute_chart

    if M.frame != "P":
        raise ValueError("input must be in the self-parallel frame")
    T = p_component_matrix(chart)
    Tinv = frac_inverse([list(r) for r in T])
    out = _empty()
    for A in range(4):
        for B in range(5):
            for C in range(5):
                c = ZERO
                for D in range(4):
                    lAD = chart.Lambda[A][D]
                    if not lAD:
                        continue
                    for E in range(5):
                        if not Tinv[E][B]:
                            continue
                        for F in range(5):
                            v = M[D, E, F]
                            if _is_zero(v) or not Tinv[F][C]:
                                continue
                            c = c + v * (lAD * Tinv[E][B] * Tinv[F][C])
                out[A][B][C] = substitute_chart(c, chart.Lambda, chart.a)
    return MTensor(out, frame="P")


def flat_conservation_residual_P(M: MTensor):
    """Pure-divergence residual in the self-parallel frame."""
    out = [[ZERO] * 5 for _ in range(5)]
    for B in range(5):
        for C in range(5):
            c = ZERO
            for m in range(4):
                c = c + M[m, B, C].partial(m)
            out[B][C] = c
    return out


def flat_conservation_residual_O(M_O: MTensor):
    """Same residual evaluated in the orthonormal frame, where the flat
    transport table contributes the eta*Theta antisymmetrization."""
    out = [[ZERO] * 5 for _ in range(5)]
    for B in range(5):
        for C in range(5):
            c = ZERO
            for m in range(4):
                c = c + M_O[m, B, C].partial(m)
            # G^5_{b m} = -eta_{b m} terms: -G^D_{B m} M^m_{D C} - ...
            if B < 4:
                for m in range(4):
                    c = c + (ETA4[B] if B == m else 0) * M_O[m, 4, C]
            if C < 4:
                for m in range(4):
                    c = c + (ETA4[C] if C == m else 0) * M_O[m, B, 4]
            out[B][C] = c
    return out


def conservation_residual(M: MTensor, H: ConnectionH, g: MetricG, S: SForm, K):
    """Residuals of the curved conservation system: the modified
    divergence of the mixed slots must equal the K-source contraction,
    and the divergence of the four-block must vanish."""
    div = _modified_divergence(M, H, g, S)
    res_mu5 = []
    for m in range(4):
        src = ZERO
        for A in range(5):
            for Sdx in range(5):
                for T in range(Sdx + 1, 5):
                    v = M[A, Sdx, T]
                    if _is_zero(v):
                        continue
                    kk = K[Sdx][T][m][A]
                    if not _is_zero(kk):
                        src = src + v * kk
        res_mu5.append(div[m][4] - src)
    res_munu = [[div[m][n] for n in range(4)] for m in range(4)]
    return res_mu5, res_munu


def _modified_divergence(M: MTensor, H: ConnectionH, g: MetricG, S: SForm):
    """(pentad* M)^A_{BC} contracted over the upper/derivative slot."""
    out = [[ZERO] * 5 for _ in range(5)]
    for B in range(5):
        for C in range(5):
            c = ZERO
            for A in range(5):
                t = _d(M[A, B, C], A)
                for Kk in range(5):
                    h = H.H[A][Kk][A]
                    if not _is_zero(h):
                        t = t + h * M[Kk, B, C]
                    hb = H.H[Kk][B][A]
                    if not _is_zero(hb):
                        t = t - hb * M[A, Kk, C]
                    hc = H.H[Kk][C][A]
                    if not _is_zero(hc):
                        t = t - hc * M[A, B, Kk]
                # torsion-trace correction 2 s^K_{[AK]}
                corr = ZERO
                for Kk in range(5):
                    corr = corr + S.mixed(g, Kk, A, Kk) - S.mixed(g, Kk, Kk, A)
                if not corr.is_zero():
                    t = t + corr * M[A, B, C]
                c = c + t
            out[B][C] = c
    return out


def m5_sigma5_cancellation(M5_s5, H: ConnectionH, g: MetricG, S: SForm):
    """The two places the M^5_{sigma 5} components enter the first
    conservation equation; both reduce to M^5_{s5} s^s_{mu 5}, so their
    difference must vanish."""
    lhs = []  # source side: M^5_{s5} K^{s5}_{mu 5} = 2 M^5_{s5} s^s_{[mu 5]}
    rhs = []  # divergence side: -M^5_{s5} H^s_{mu 5}
    for m in range(4):
        a = ZERO
        b = ZERO
        for s in range(4):
            v = M5_s5[s]
            if _is_zero(v):
                continue
            a = a + v * S.mixed(g, s, m, 4)  # 2 s^s_{[mu 5]} = s^s_{mu 5}
            h = H.H[s][m][4]
            if not _is_zero(h):
                b = b - v * h
        lhs.append(a)
        rhs.append(b)
    return lhs, rhs


# -- canonical currents from a formal Lagrangian ---------------------------


class SymPoly:
    """Polynomial in named indeterminates with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def var(cls, name: str) -> "SymPoly":
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> "SymPoly":
        c = Fraction(c)
        return cls({(): c} if c else {})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.const(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return SymPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymPoly({m: c * other for m, c in self.terms.items()})
        terms = {}
        for m1, c1 in self.terms.items():
            d1 = dict(m1)
            for m2, c2 in other.terms.items():
                d = dict(d1)
                for n, e in m2:
                    d[n] = d.get(n, 0) + e
                mono = tuple(sorted(d.items()))
                s = terms.get(mono, 0) + c1 * c2
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
        return SymPoly(terms)

    __rmul__ = __mul__

    def dpartial(self, name: str) -> "SymPoly":
        terms = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            if name not in d:
                continue
            e = d[name]
            if e == 1:
                del d[name]
            else:
                d[name] = e - 1
            m = tuple(sorted(d.items()))
            terms[m] = terms.get(m, 0) + c * e
        return SymPoly(terms)

    def substitute(self, values: dict):
        """Replace every indeterminate by a Poly4 from values; returns Poly4."""
        out = ZERO
        for mono, c in self.terms.items():
            term = Poly4.const(c)
            for name, e in mono:
                if name not in values:
                    raise KeyError(f"undeclared indeterminate {name!r}")
                for _ in range(e):
                    term = term * values[name]
            out = out + term
        return out

    def names(self):
        got = set()
        for mono in self.terms:
            for n, _ in mono:
                got.add(n)
        return got


class MatterModel:
    """Scalar field symbols phi_k with a Lagrangian over the symbols
    {name} and {D0_name .. D3_name, D5_name}."""

    def __init__(self, fields: list, lagrangian: SymPoly):
        self.fields = list(fields)
        allowed = set()
        for f in self.fields:
            allowed.add(f)
            for A in ("0", "1", "2", "3", "5"):
                allowed.add(f"D{A}_{f}")
        bad = lagrangian.names() - allowed
        if bad:
            raise KeyError(f"undeclared indeterminates {sorted(bad)}")
        self.L = lagrangian


def canonical_currents(model: MatterModel, values: dict, H: ConnectionH) -> MTensor:
    """M^A_{mu 5} = delta^A_mu L - sum dL/d(D_A U) * D_mu U and
    M^A_{mu nu} = -sum dL/d(D_A U) * (bivector derivative), which is zero
    for scalar fields."""
    labels = ("0", "1", "2", "3", "5")
    subs = {}
    derivs = {}
    for f in model.fields:
        phi = values[f]
        subs[f] = phi
        for idx, A in enumerate(labels):
            # scalar transport derivative: plain partial, zero along slot 5
            dphi = phi.partial(idx) if idx < 4 else ZERO
            subs[f"D{A}_{f}"] = dphi
            derivs[(f, idx)] = dphi
    Lval = model.L.substitute(subs)
    M = _empty()
    for Aidx, A in enumerate(labels):
        for m in range(4):
            c = Lval if Aidx == m else ZERO
            for f in model.fields:
                dL = model.L.dpartial(f"D{A}_{f}").substitute(subs)
                if not dL.is_zero():
                    c = c - dL * derivs[(f, m)]
            M[Aidx][m][4] = c
            M[Aidx][4][m] = -c
    # scalar fields carry no pointwise rotation, so the four-block spin
    # contribution vanishes identically
    return MTensor(M, frame="active")
