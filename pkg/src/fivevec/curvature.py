"""Curvature of the five-slot connection, its bivector-valued companion,
and residual evaluation of the gravitational field system with its
consistency identities.
"""

from __future__ import annotations

from fractions import Fraction

from .connection import ConnectionG, ConnectionH, Curve, SForm, _d, _is_zero, four_torsion, transport_along
from .core5 import MetricG
from .poly import ONE, ZERO, Poly4

HALF = Fraction(1, 2)


def curvature_from_H(H: ConnectionH):
    """R^A_{BCD} = d_C H^A_{BD} - d_D H^A_{BC} + H^A_{KC} H^K_{BD}
    - H^A_{KD} H^K_{BC}, with the fifth derivative slot algebraic."""
    R = [[[[ZERO] * 5 for _ in range(5)] for _ in range(5)] for _ in range(5)]
    for A in range(5):
        for B in range(5):
            for C in range(5):
                for D in range(C + 1, 5):
                    c = _d(H.H[A][B][D], C) - _d(H.H[A][B][C], D)
                    for K in range(5):
                        h1 = H.H[A][K][C]
                        h2 = H.H[K][B][D]
                        if not (_is_zero(h1) or _is_zero(h2)):
                            c = c + h1 * h2
                        h3 = H.H[A][K][D]
                        h4 = H.H[K][B][C]
                        if not (_is_zero(h3) or _is_zero(h4)):
                            c = c - h3 * h4
                    R[A][B][C][D] = c
                    R[A][B][D][C] = -c
    return R


def riemann_four(four):
    """Standard Riemann tensor of a four-index connection table
    four[a][b][m] (possibly torsionful)."""
    R = [[[[ZERO] * 4 for _ in range(4)] for _ in range(4)] for _ in range(4)]
    for a in range(4):
        for b in range(4):
            for m in range(4):
                for n in range(m + 1, 4):
                    c = four[a][b][n].partial(m) - four[a][b][m].partial(n)
                    for w in range(4):
                        t1, t2 = four[a][w][m], four[w][b][n]
                        if not (_is_zero(t1) or _is_zero(t2)):
                            c = c + t1 * t2
                        t3, t4 = four[a][w][n], four[w][b][m]
                        if not (_is_zero(t3) or _is_zero(t4)):
                            c = c - t3 * t4
                    R[a][b][m][n] = c
                    R[a][b][n][m] = -c
    return R


def mu5_sign_probe(H: ConnectionH, g: MetricG, S: SForm):
    """Two candidate values of R^alpha_{beta mu 5}: the general-formula
    expansion and the all-minus component form; returns (general,
    componentwise, difference) tables."""
    general = [
        [[curvature_entry(H, a, b, m, 4) for m in range(4)] for b in range(4)]
        for a in range(4)
    ]
    comp = [[[None] * 4 for _ in range(4)] for _ in range(4)]
    for a in range(4):
        for b in range(4):
            for m in range(4):
                c = S.mixed(g, a, b, 4).partial(m)
                for w in range(4):
                    c = c + H.H[a][w][m] * S.mixed(g, w, b, 4)
                    c = c + S.mixed(g, a, w, 4) * H.H[w][b][m]
                comp[a][b][m] = -c
    diff = [
        [[general[a][b][m] - comp[a][b][m] for m in range(4)] for b in range(4)]
        for a in range(4)
    ]
    return general, comp, diff


def curvature_entry(H: ConnectionH, A, B, C, D):
    c = _d(H.H[A][B][D], C) - _d(H.H[A][B][C], D)
    for K in range(5):
        h1, h2 = H.H[A][K][C], H.H[K][B][D]
        if not (_is_zero(h1) or _is_zero(h2)):
            c = c + h1 * h2
        h3, h4 = H.H[A][K][D], H.H[K][B][C]
        if not (_is_zero(h3) or _is_zero(h4)):
            c = c - h3 * h4
    return c


def build_K(R, g: MetricG, S: SForm):
    """K^{A beta}_{CD} = g^{beta omega} R^A_{omega CD} on the four-block;
    the fifth column is 2 s^alpha_{[CD]}, antisymmetric by the identity
    g^{bw} R^5_{w CD} = -2 s^b_{[CD]}."""
    ginv = g.inverse()
    K = [[[[ZERO] * 5 for _ in range(5)] for _ in range(5)] for _ in range(5)]
    for A in range(5):
        for b in range(4):
            for C in range(5):
                for D in range(5):
                    c = None
                    for w in range(4):
                        t = ginv[b][w] * R[A][w][C][D]
                        c = t if c is None else c + t
                    K[A][b][C][D] = _unwrap(c)
    for a in range(4):
        for C in range(5):
            for D in range(5):
                v = S.mixed(g, a, C if C < 4 else 4, D) - S.mixed(g, a, D if D < 4 else 4, C)
                K[a][4][C][D] = v  # 2 s^a_{[CD]} = s^a_{CD} - s^a_{DC}
                K[4][a][C][D] = -v
    return K


def _unwrap(c):
    from .poly import RatPoly

    if isinstance(c, RatPoly) and c.den.is_constant():
        return c.num
    return c


def curvature_scalar(K):
    """Full trace K^{AB}_{AB} over both pairs."""
    out = ZERO
    for A in range(5):
        for B in range(5):
            out = out + K[A][B][A][B]
    return out


def ricci(four):
    R = riemann_four(four)
    return [[_sum(R[a][m][a][n] for a in range(4)) for n in range(4)] for m in range(4)]


def _sum(items):
    out = None
    for it in items:
        out = it if out is None else out + it
    return out if out is not None else ZERO


def scalar_curvature_four(g: MetricG, four):
    """Riemann-Cartan scalar g^{mn} Ric_{mn} of the four-connection."""
    ginv = g.inverse()
    ric = ricci(four)
    out = None
    for m in range(4):
        for n in range(4):
            t = ginv[m][n] * ric[m][n]
            out = t if out is None else out + t
    return _unwrap(out)


def einstein(g: MetricG, four):
    """G_{mu nu} = Ric_{mu nu} - (1/2) g_{mu nu} R, Ricci from the
    (possibly torsionful) connection; nonsymmetric in general."""
    ric = ricci(four)
    Rs = scalar_curvature_four(g, four)
    return [
        [_unwrap(ric[m][n] - g[m, n] * Rs * HALF) for n in range(4)] for m in range(4)
    ]


def raise2(g: MetricG, T):
    """Raise both indices of a (0,2) table with the inverse metric."""
    ginv = g.inverse()
    return [
        [
            _unwrap(_sum(ginv[m][s] * ginv[n][t] * T[s][t] for s in range(4) for t in range(4)))
            for n in range(4)
        ]
        for m in range(4)
    ]


def modified_torsion(g: MetricG, S: SForm):
    """T(mod)^{mu omega nu} = g^{ms} g^{wt} (T_{st}^n + d^n_s T_{tr}^r
    - d^n_t T_{sr}^r)."""
    T = four_torsion(g, S)
    ginv = g.inverse()
    trace = [_sum(T[t][r][r] for r in range(4)) for t in range(4)]
    comb = [
        [
            [
                T[s][t][n]
                + (trace[t] if n == s else ZERO)
                - (trace[s] if n == t else ZERO)
                for n in range(4)
            ]
            for t in range(4)
        ]
        for s in range(4)
    ]
    return [
        [
            [
                _unwrap(
                    _sum(
                        ginv[m][s] * ginv[w][t] * comb[s][t][n]
                        for s in range(4)
                        for t in range(4)
                    )
                )
                for n in range(4)
            ]
            for w in range(4)
        ]
        for m in range(4)
    ]


def nabla_star_tensor(g: MetricG, S: SForm, four, T3, variance):
    """Modified divergence over the first slot of a rank-3 table:
    contraction of (nabla - 2 T-trace) with the given index variance,
    a string of 'u'/'d' per slot."""
    T = four_torsion(g, S)
    trace = [_sum(T[a][w][w] for w in range(4)) for a in range(4)]
    n0, n1, n2 = variance
    out = [[None] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            c = None
            for a in range(4):
                t = T3[a][i][j].partial(a)
                # connection terms, slot by slot
                for w in range(4):
                    t = t + _conn_term(four, n0, a, w, a, T3[w][i][j])
                    t = t + _conn_term(four, n1, i, w, a, T3[a][w][j])
                    t = t + _conn_term(four, n2, j, w, a, T3[a][i][w])
                t = t - 2 * trace[a] * T3[a][i][j]
                c = t if c is None else c + t
            out[i][j] = _unwrap(c)
    return out


def _conn_term(four, variance, idx, w, a, val):
    if _is_zero(val):
        return ZERO
    if variance == "u":
        t = four[idx][w][a]
        return t * val if not _is_zero(t) else ZERO
    t = four[w][idx][a]
    return -t * val if not _is_zero(t) else ZERO


def divergence_identity_residual(g: MetricG, S: SForm, four):
    """(nabla* T(mod))^alpha_{mu nu} - G_{[mu nu]}; zero for any exact
    polynomial model."""
    Tmod_up = modified_torsion(g, S)
    # the divergence slot is the torsion-like last index:
    # T^{a}_{mu nu} = g_{mu w} g_{nu t} T^{w t a}
    T3 = [
        [
            [
                _unwrap(
                    _sum(
                        g[m, w] * g[n, t] * Tmod_up[w][t][a]
                        for w in range(4)
                        for t in range(4)
                    )
                )
                for n in range(4)
            ]
            for m in range(4)
        ]
        for a in range(4)
    ]
    div = nabla_star_tensor(g, S, four, T3, "udd")
    G = einstein(g, four)
    return [
        [
            _unwrap(div[m][n] - (G[m][n] - G[n][m]) * HALF)
            for n in range(4)
        ]
        for m in range(4)
    ]


class FieldEqInputs:
    """Everything the final gravitational system needs, in a frame where
    |h55| = 1 so the scaling factors stay polynomial."""

    def __init__(self, g: MetricG, S: SForm, Theta, Sigma, Xi, k, varrho, h55_sign=1):
        self.g = g
        self.S = S
        self.Theta = Theta  # (0,2) lower components Theta_{mu nu}
        self.Sigma = Sigma  # Sigma^alpha_{mu nu}, antisymmetric in mu nu
        self.Xi = Xi  # antisymmetric (0,2)
        self.k = Fraction(k)
        self.varrho = Fraction(varrho)
        self.h55_sign = int(h55_sign)
        if self.h55_sign not in (1, -1):
            raise ValueError("h55 sign must be +1 or -1")
        self.epsilon = self.varrho * self.h55_sign
        if self.epsilon == 0:
            raise ValueError("epsilon must be nonzero")


def field_eq_residuals(inp: FieldEqInputs, four):
    """Residuals of the three-equation system: the Einstein-type
    equation, the torsion/spin equation, and the X-Xi relation."""
    g, S = inp.g, inp.S
    # X^{mu nu} = s^{mu nu}_5 * |h55|^{1/2}; |h55| = 1 by convention here
    Xup = [[S.upper(m, n, 4) for n in range(4)] for m in range(4)]
    Xdown = [
        [
            _sum(g[m, s] * g[n, t] * Xup[s][t] for s in range(4) for t in range(4))
            for n in range(4)
        ]
        for m in range(4)
    ]
    xx = _sum(Xdown[s][t] * Xup[s][t] for s in range(4) for t in range(4))
    G = einstein(g, four)
    half_eps = inp.epsilon * HALF
    r1 = [
        [
            _unwrap(G[m][n] - g[m, n] * xx * half_eps - inp.Theta[m][n] * inp.k)
            for n in range(4)
        ]
        for m in range(4)
    ]
    T = four_torsion(g, S)
    halfk = inp.k * HALF
    r2 = [
        [
            [
                _unwrap(
                    T[m][n][a]
                    + (_sum(T[n][s][s] for s in range(4)) if a == m else ZERO)
                    - (_sum(T[m][s][s] for s in range(4)) if a == n else ZERO)
                    + inp.Sigma[a][m][n] * halfk
                )
                for n in range(4)
            ]
            for m in range(4)
        ]
        for a in range(4)
    ]
    inv_eps_halfk = inp.k / (2 * inp.epsilon)
    r3 = [
        [_unwrap(Xdown[m][n] + inp.Xi[m][n] * inv_eps_halfk) for n in range(4)]
        for m in range(4)
    ]
    return r1, r2, r3


def kibble_sciama_residual(g: MetricG, S: SForm, Sigma, k):
    """T(mod)^{a b m} + (k/2) Sigma^{a b m} with all indices up."""
    Tmod = modified_torsion(g, S)
    halfk = Fraction(k) * HALF
    return [
        [
            [_unwrap(Tmod[a][b][m] + Sigma[a][b][m] * halfk) for m in range(4)]
            for b in range(4)
        ]
        for a in range(4)
    ]


def l_add(g: MetricG, S: SForm, a_const, h55):
    """a * g_{as} g_{bt} h55 s^{ab}_5 s^{st}_5."""
    acc = None
    for al in range(4):
        for be in range(4):
            for s in range(4):
                for t in range(4):
                    v = g[al, s] * g[be, t] * S.upper(al, be, 4) * S.upper(s, t, 4)
                    acc = v if acc is None else acc + v
    acc = acc if acc is not None else ZERO
    return acc * (Fraction(a_const) * h55)


def spin_potential(g: MetricG, S: SForm, a_const, h55):
    """M5_{st} = 4 a h55 s_{st5}, the proportionality that makes the
    commutator condition automatic."""
    coef = 4 * Fraction(a_const) * h55
    out = [[ZERO] * 4 for _ in range(4)]
    for s in range(4):
        for t in range(4):
            v = _sum(
                g[s, al] * g[t, be] * S.upper(al, be, 4)
                for al in range(4)
                for be in range(4)
            )
            out[s][t] = v * coef
    return out


def check_consistency_identities(g: MetricG, S: SForm, four_lc, k, varrho, h55, M5=None):
    """Residuals of the four closed-form conditions tying the extra
    Lagrangian piece to the fifth-row source tensor.

    Returns a dict of residual tables; all zero when M5 follows the
    proportionality rule.
    """
    from .connection import build_H

    k = Fraction(k)
    varrho = Fraction(varrho)
    a_const = -varrho / (2 * k)
    if M5 is None:
        M5 = spin_potential(g, S, a_const, h55)
    H = build_H(g, S, four_lc)
    ginv = g.inverse()

    # proportionality: 2 a h55 s_{st5} - (1/2) M5_{st}
    r_prop = [[ZERO] * 4 for _ in range(4)]
    for s in range(4):
        for t in range(4):
            low = _sum(
                g[s, al] * g[t, be] * S.upper(al, be, 4)
                for al in range(4)
                for be in range(4)
            )
            r_prop[s][t] = _unwrap(low * (2 * a_const * h55) - M5[s][t] * HALF)

    # commutation: commutator of s^m_{n5} and M^{m 5}_{n} = g^{ms} M5_{sn}
    smat = [[S.mixed(g, m, n, 4) for n in range(4)] for m in range(4)]
    Mmat = [
        [_unwrap(_sum(ginv[m][s] * M5[s][n] for s in range(4))) for n in range(4)]
        for m in range(4)
    ]
    r_comm = [
        [
            _unwrap(
                _sum(Mmat[m][w] * smat[w][n] for w in range(4))
                - _sum(smat[m][w] * Mmat[w][n] for w in range(4))
            )
            for n in range(4)
        ]
        for m in range(4)
    ]

    # gradient: d_mu L_add = (1/2) { d_mu s^{st}_5 + H^s_{wm} s^{wt}_5
    #                           + H^t_{wm} s^{sw}_5 } M5_{st}
    L = l_add(g, S, a_const, h55)
    r_grad = []
    for m in range(4):
        rhs = None
        for s in range(4):
            for t in range(4):
                if _is_zero(M5[s][t]):
                    continue
                br = S.upper(s, t, 4).partial(m)
                for w in range(4):
                    h1 = H.H[s][w][m]
                    if not _is_zero(h1):
                        br = br + h1 * S.upper(w, t, 4)
                    h2 = H.H[t][w][m]
                    if not _is_zero(h2):
                        br = br + h2 * S.upper(s, w, 4)
                v = br * M5[s][t]
                rhs = v if rhs is None else rhs + v
        rhs = (rhs if rhs is not None else ZERO) * HALF
        r_grad.append(_unwrap(L.partial(m) - rhs))

    # contraction: 2 a h55 g_{st} s^{ms}_5 s^{nt}_5 - (1/2) g_{st} s^{ms}_5 M^{nt5}
    M5up = raise2(g, M5)
    r_contr = [[ZERO] * 4 for _ in range(4)]
    for m in range(4):
        for n in range(4):
            lhs = _sum(
                g[s, t] * S.upper(m, s, 4) * S.upper(n, t, 4)
                for s in range(4)
                for t in range(4)
            )
            rhs = _sum(
                g[s, t] * S.upper(m, s, 4) * M5up[n][t]
                for s in range(4)
                for t in range(4)
            )
            r_contr[m][n] = _unwrap(lhs * (2 * a_const * h55) - rhs * HALF)

    return {"proportionality": r_prop, "commutation": r_comm, "gradient": r_grad, "contraction": r_contr}


def holonomy_oracle(G: ConnectionG, mu: int, nu: int, eps: float, base, steps: int = 16):
    """Transport the frame around the eps-square loop in the (mu, nu)
    plane starting at base; returns the 5x5 holonomy matrix.  To leading
    order (Hol - I)/eps^2 = -R^A_{B mu nu}(base) for the loop that goes
    +mu, +nu, -mu, -nu."""
    if mu == nu:
        raise ValueError("need two distinct axes")
    b = [float(Fraction(c)) for c in base]

    def leg(start, direction, sign):
        coeffs = []
        for i in range(4):
            c0 = Fraction(start[i]).limit_denominator(10**12)
            step = Fraction(sign) * Fraction(eps).limit_denominator(10**12)
            coeffs.append([c0, step if i == direction else Fraction(0)])
        return Curve(coeffs)

    cols = []
    for A in range(5):
        V = [1.0 if i == A else 0.0 for i in range(5)]
        pos = list(b)
        for direction, sign in ((mu, 1), (nu, 1), (mu, -1), (nu, -1)):
            curve = leg(pos, direction, sign)
            V = transport_along(V, curve, G, steps)
            pos[direction] += sign * eps
        cols.append(V)
    # cols[A] is the image of basis vector A; matrix entries Hol[B][A]
    return [[cols[A][B] for A in range(5)] for B in range(5)]


def holonomy_curvature_estimate(G: ConnectionG, mu, nu, eps, base, steps: int = 16):
    """Estimate R^A_{B mu nu}(base) from loops at eps, eps/2, eps/4.

    A single loop carries O(eps) error after dividing by eps^2; two
    Richardson steps cancel the eps and eps^2 terms, leaving O(eps^3)."""

    def first_order(e):
        hol = holonomy_oracle(G, mu, nu, e, base, steps)
        return [
            [(hol[A][B] - (1.0 if A == B else 0.0)) / (e * e) for B in range(5)]
            for A in range(5)
        ]

    D1 = first_order(eps)
    D2 = first_order(eps / 2)
    D3 = first_order(eps / 4)
    out = [[0.0] * 5 for _ in range(5)]
    for A in range(5):
        for B in range(5):
            e1 = 2 * D2[A][B] - D1[A][B]
            e2 = 2 * D3[A][B] - D2[A][B]
            out[A][B] = -(4 * e2 - e1) / 3
    return out
