"""Connection tables for five-vector fields.

Two related tables: G^A_{B mu} drives transport along coordinate
directions; H^A_{BC} extends it with an algebraic fifth slot (C = 5)
whose derivative part is identically zero.  The torsion data lives in an
antisymmetric bivector-valued 1-form S; lowering its middle index with g
produces the contorsion-like entries that deform the Levi-Civita part.
"""

from __future__ import annotations

from fractions import Fraction

from .core5 import FiveVecField, MetricG
from .poly import ONE, ZERO, Poly4, RatPoly, _coerce_any

IDX = range(4)
IDX5 = range(5)


def _d(f, mu):
    """Partial with the algebraic-slot convention: direction 5 acts as the
    identity operator, so its derivative part vanishes."""
    if mu == 4:
        return ZERO
    return f.partial(mu)


class SForm:
    """Antisymmetric bivector components S^{alpha beta}_A, A in (0..3,5)."""

    __slots__ = ("S",)

    def __init__(self, S=None):
        table = [[[ZERO] * 5 for _ in range(4)] for _ in range(4)]
        if S is not None:
            for a in range(4):
                for b in range(4):
                    for A in range(5):
                        table[a][b][A] = _coerce_any(S[a][b][A])
        for a in range(4):
            for b in range(4):
                for A in range(5):
                    if not (table[a][b][A] + table[b][a][A]).is_zero():
                        raise ValueError("S must be antisymmetric in its upper pair")
        self.S = table

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def from_entries(cls, entries):
        """entries: iterable of (alpha, beta, A, value); the transposed
        component is filled in automatically."""
        table = [[[ZERO] * 5 for _ in range(4)] for _ in range(4)]
        for a, b, A, v in entries:
            if a == b:
                raise ValueError("diagonal entries violate antisymmetry")
            v = _coerce_any(v)
            table[a][b][A] = table[a][b][A] + v
            table[b][a][A] = table[b][a][A] - v
        return cls(table)

    def upper(self, A, B, C):
        """Full s^{AB}_C: the stored block plus the fixed delta part
        s^{alpha 5}_C = -s^{5 alpha}_C = delta^alpha_C."""
        if A == 4 and B == 4:
            return ZERO
        if A == 4:
            return -(ONE if B == C else ZERO)
        if B == 4:
            return ONE if A == C else ZERO
        return self.S[A][B][C]

    def mixed(self, g: MetricG, A, B, C):
        """s^A_{BC} = g_{B omega} s^{A omega}_C; zero when B = 4."""
        if B == 4:
            return ZERO
        out = ZERO
        for w in range(5):
            gv = g[B, w]
            if not gv.is_zero():
                out = out + gv * self.upper(A, w, C)
        return out

    def is_zero(self):
        return all(
            self.S[a][b][A].is_zero() for a in range(4) for b in range(4) for A in range(5)
        )


def christoffel(g: MetricG):
    """Levi-Civita coefficients Gamma[alpha][beta][mu]; symmetric in the
    lower pair, exact, rational-function entries when det(g) is not
    constant."""
    ginv = g.inverse()
    dg = [[[g[a, b].partial(m) for m in range(4)] for b in range(4)] for a in range(4)]
    out = [[[None] * 4 for _ in range(4)] for _ in range(4)]
    half = Fraction(1, 2)
    for a in range(4):
        for b in range(4):
            for m in range(b, 4):
                c = None
                for w in range(4):
                    t = ginv[a][w] * (dg[w][b][m] + dg[w][m][b] - dg[b][m][w])
                    c = t if c is None else c + t
                c = c * half
                out[a][b][m] = c
                out[a][m][b] = c
    return [[[_coerce_any(out[a][b][m]) for m in range(4)] for b in range(4)] for a in range(4)]


class ConnectionG:
    """Transport table G^A_{B mu}, stored as G[A][B][mu]."""

    __slots__ = ("G",)

    def __init__(self, G):
        self.G = G

    def __getitem__(self, key):
        A, B, mu = key
        return self.G[A][B][mu]


class ConnectionH:
    """Five-slot table H^A_{BC}, stored as H[A][B][C], C in (0..3,5)."""

    __slots__ = ("H",)

    def __init__(self, H):
        self.H = H

    def __getitem__(self, key):
        A, B, C = key
        return self.H[A][B][C]

    def four_block(self):
        """The torsionful four-vector connection H^alpha_{beta mu}."""
        return [[[self.H[a][b][m] for m in range(4)] for b in range(4)] for a in range(4)]


def build_G(g: MetricG, kappa, four, mode: str = "active") -> ConnectionG:
    """G^alpha_{beta mu} = the given four-connection; the fifth row is
    -kappa*g (normalized frame) or -g (active frame); the fifth column
    vanishes."""
    kappa = Fraction(kappa)
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    if mode not in ("active", "normalized"):
        raise ValueError("mode must be 'active' or 'normalized'")
    scale = Fraction(1) if mode == "active" else kappa
    G = [[[ZERO] * 4 for _ in range(5)] for _ in range(5)]
    for a in range(4):
        for b in range(4):
            for m in range(4):
                G[a][b][m] = four[a][b][m]
    for b in range(4):
        for m in range(4):
            G[4][b][m] = g[b, m] * (-scale)
    return ConnectionG(G)


def build_H(g: MetricG, S: SForm, four_lc) -> ConnectionH:
    """H^alpha_{beta mu} = LC - s^alpha_{beta mu}; H^alpha_{beta 5} =
    -s^alpha_{beta 5}; H^5_{beta mu} = -g_{beta mu}; everything else 0."""
    H = [[[ZERO] * 5 for _ in range(5)] for _ in range(5)]
    for a in range(4):
        for b in range(4):
            for m in range(4):
                H[a][b][m] = four_lc[a][b][m] - S.mixed(g, a, b, m)
            H[a][b][4] = -S.mixed(g, a, b, 4)
    for b in range(4):
        for m in range(4):
            H[4][b][m] = -g[b, m]
    return ConnectionH(H)


def nabla_five(u: FiveVecField, G: ConnectionG, mu: int) -> FiveVecField:
    comps = []
    for A in range(5):
        c = u[A].partial(mu)
        for B in range(5):
            t = G.G[A][B][mu]
            if not _is_zero(t):
                c = c + t * u[B]
        comps.append(c)
    return FiveVecField(comps, u.basis)


def _is_zero(t):
    return hasattr(t, "is_zero") and t.is_zero()


def nabla_form(w, G: ConnectionG, mu: int):
    comps = []
    for A in range(5):
        c = w[A].partial(mu)
        for B in range(5):
            t = G.G[B][A][mu]
            if not _is_zero(t):
                c = c - t * w[B]
        comps.append(c)
    return comps


def nabla_metric5(gmat, G: ConnectionG, mu: int):
    """Covariant derivative of a (0,2) five-tensor given as a 5x5 array."""
    out = [[None] * 5 for _ in range(5)]
    for A in range(5):
        for B in range(5):
            c = gmat[A][B].partial(mu)
            for C in range(5):
                tCA = G.G[C][A][mu]
                if not _is_zero(tCA):
                    c = c - tCA * gmat[C][B]
                tCB = G.G[C][B][mu]
                if not _is_zero(tCB):
                    c = c - tCB * gmat[A][C]
            out[A][B] = c
    return out


def pentad_derivative(u: FiveVecField, H: ConnectionH, C: int) -> FiveVecField:
    """(d/dC + H)_C u with the fifth slot purely algebraic; C in 0..3 or 4
    for the label-5 direction."""
    comps = []
    for A in range(5):
        c = _d(u[A], C)
        for B in range(5):
            t = H.H[A][B][C]
            if not _is_zero(t):
                c = c + t * u[B]
        comps.append(c)
    return FiveVecField(comps, u.basis)


def pentad_form(w, H: ConnectionH, C: int):
    comps = []
    for A in range(5):
        c = _d(w[A], C)
        for B in range(5):
            t = H.H[B][A][C]
            if not _is_zero(t):
                c = c - t * w[B]
        comps.append(c)
    return comps


def pentad_metric5(gmat, H: ConnectionH, C: int):
    out = [[None] * 5 for _ in range(5)]
    for A in range(5):
        for B in range(5):
            c = _d(gmat[A][B], C)
            for K in range(5):
                tKA = H.H[K][A][C]
                if not _is_zero(tKA):
                    c = c - tKA * gmat[K][B]
                tKB = H.H[K][B][C]
                if not _is_zero(tKB):
                    c = c - tKB * gmat[A][K]
            out[A][B] = c
    return out


def five_torsion(H: ConnectionH):
    """T^A_{BC} = H^A_{CB} - H^A_{BC} in a commuting frame."""
    return [
        [[H.H[A][C][B] - H.H[A][B][C] for C in range(5)] for B in range(5)]
        for A in range(5)
    ]


def four_torsion(g: MetricG, S: SForm):
    """T_{alpha beta}^mu = -s^mu_{[alpha beta]}."""
    half = Fraction(1, 2)
    return [
        [
            [
                (S.mixed(g, m, a, b) - S.mixed(g, m, b, a)) * (-half)
                for m in range(4)
            ]
            for b in range(4)
        ]
        for a in range(4)
    ]


def transform_H(H: ConnectionH, L):
    """H'^A_{BC} = (L^-1) H L L + (L^-1)(d L) L for the basis change
    b'_A = b_B L^B_A, with the fifth derivative slot algebraic."""
    from .matrix import poly_inverse

    L = [[_coerce_any(v) for v in row] for row in L]
    Linv = poly_inverse(L)
    out = [[[ZERO] * 5 for _ in range(5)] for _ in range(5)]
    for A in range(5):
        for B in range(5):
            for C in range(5):
                c = ZERO
                for D in range(5):
                    for E in range(5):
                        for F in range(5):
                            t = H.H[D][E][F]
                            if _is_zero(t):
                                continue
                            c = c + Linv[A][D] * t * L[E][B] * L[F][C]
                for D in range(5):
                    for F in range(5):
                        dL = _d(L[D][B], F)
                        if not _is_zero(dL):
                            c = c + Linv[A][D] * dL * L[F][C]
                out[A][B][C] = c
    return ConnectionH(out)


class Curve:
    """Polynomial curve t -> x(t); coefficient lists per coordinate."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(tuple(Fraction(c) for c in cs) for cs in coeffs)
        if len(self.coeffs) != 4:
            raise ValueError("need 4 coordinate functions")

    def at(self, t: float):
        return [sum(float(c) * t**k for k, c in enumerate(cs)) for cs in self.coeffs]

    def velocity(self, t: float):
        return [
            sum(k * float(c) * t ** (k - 1) for k, c in enumerate(cs) if k)
            for cs in self.coeffs
        ]


def transport_along(u0, curve: Curve, G: ConnectionG, steps: int, t0: float = 0.0, t1: float = 1.0):
    """RK4 integration of dV/dt = -xdot^mu G(x) V along the curve."""
    if steps < 4:
        raise ValueError("need at least 4 steps")
    V = [float(Fraction(c)) for c in u0]
    h = (t1 - t0) / steps

    def rhs(t, V):
        x = curve.at(t)
        xd = curve.velocity(t)
        out = [0.0] * 5
        for A in range(5):
            acc = 0.0
            for B in range(5):
                for m in range(4):
                    gv = G.G[A][B][m]
                    if _is_zero(gv):
                        continue
                    acc -= xd[m] * _eval_float(gv, x) * V[B]
            out[A] = acc
        return out

    t = t0
    for _ in range(steps):
        k1 = rhs(t, V)
        k2 = rhs(t + h / 2, [v + h / 2 * k for v, k in zip(V, k1)])
        k3 = rhs(t + h / 2, [v + h / 2 * k for v, k in zip(V, k2)])
        k4 = rhs(t + h, [v + h * k for v, k in zip(V, k3)])
        V = [
            v + h / 6 * (a + 2 * b + 2 * c + d)
            for v, a, b, c, d in zip(V, k1, k2, k3, k4)
        ]
        t += h
    return V


def _eval_float(p, x):
    return p.eval_float(x)
