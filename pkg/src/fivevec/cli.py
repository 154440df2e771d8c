"""Verification runner: load a TOML model, execute a named check suite,
emit a deterministic JSON or text report.

Exit codes: 0 all checks pass (flagged checks allowed unless --strict),
1 any check fails, 2 bad input (arguments, file, or model shape).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from fractions import Fraction

from . import bivder, clifford, curvature, frames, gauge, noether, randomize
from .connection import (
    ConnectionG,
    Curve,
    SForm,
    build_G,
    build_H,
    christoffel,
    nabla_five,
    pentad_metric5,
    transport_along,
)
from .core5 import ETA4, Bivector5Field, FiveVecField, MetricG
from .exactnum import CNum
from .matrix import frac_inverse, mat_mul
from .poly import ZERO, Poly4, PolyParseError, parse_poly, substitute_chart

TOL_DEFAULT = "1e-9"
SUITES = ("flat", "curved", "gauge", "clifford", "all")


class ModelError(Exception):
    """Raised with a located message for any model-file problem."""


# -- model loading ---------------------------------------------------------


def _frac(v, where):
    try:
        if isinstance(v, str):
            return Fraction(v)
        if isinstance(v, int):
            return Fraction(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise ModelError(f"{where}: bad rational {v!r} ({exc})") from exc
    raise ModelError(f"{where}: expected a rational string or integer, got {v!r}")


def _poly(text, where):
    if not isinstance(text, str):
        raise ModelError(f"{where}: expected a polynomial string, got {text!r}")
    try:
        return parse_poly(text)
    except PolyParseError as exc:
        raise ModelError(f"{where}: {exc}") from exc


class ModelFile:
    def __init__(self):
        self.kappa = Fraction(1)
        self.xi = Fraction(1)
        self.k = Fraction(1)
        self.varrho = Fraction(1)
        self.h55_sign = 1
        self.metric = None  # MetricG
        self.sform = SForm.zero()
        self.charts = []  # list[frames.LorentzChart]
        self.theta = None
        self.sigma = None
        self.curves = []
        self.gauge = None  # dict(n, g, c_a, c_0, x)


def load_model(path: str) -> ModelFile:
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except FileNotFoundError as exc:
        raise ModelError(f"{path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ModelError(f"{path}: TOML syntax: {exc}") from exc

    m = ModelFile()
    consts = raw.get("constants", {})
    for name in ("kappa", "xi", "k", "varrho"):
        if name in consts:
            setattr(m, name, _frac(consts[name], f"constants.{name}"))
    if m.kappa == 0 or m.xi == 0:
        raise ModelError("constants: kappa and xi must be nonzero")
    if "h55_sign" in consts:
        if consts["h55_sign"] not in (1, -1):
            raise ModelError("constants.h55_sign: must be 1 or -1")
        m.h55_sign = consts["h55_sign"]

    if "metric" in raw:
        rows = raw["metric"].get("rows")
        if not (isinstance(rows, list) and len(rows) == 4 and all(len(r) == 4 for r in rows)):
            raise ModelError("metric.rows: need a 4x4 array of polynomial strings")
        entries = [[_poly(rows[i][j], f"metric.rows[{i}][{j}]") for j in range(4)] for i in range(4)]
        try:
            m.metric = MetricG(entries)
        except ValueError as exc:
            raise ModelError(f"metric: {exc}") from exc

    if "sform" in raw:
        ent = []
        for idx, row in enumerate(raw["sform"]):
            where = f"sform[{idx}]"
            try:
                a, b, slot = row["alpha"], row["beta"], row["slot"]
            except KeyError as exc:
                raise ModelError(f"{where}: missing key {exc}") from exc
            if a == b:
                raise ModelError(f"{where}: alpha = beta violates antisymmetry")
            if not (0 <= a <= 3 and 0 <= b <= 3 and slot in (0, 1, 2, 3, 5)):
                raise ModelError(f"{where}: indices out of range")
            ent.append((a, b, 4 if slot == 5 else slot, _poly(row["poly"], where)))
        m.sform = SForm.from_entries(ent)

    for idx, ch in enumerate(raw.get("charts", [])):
        where = f"charts[{idx}]"
        lam = [[_frac(v, where) for v in row] for row in ch.get("lam", [])]
        a = [_frac(v, where) for v in ch.get("a", ["0", "0", "0", "0"])]
        try:
            m.charts.append(frames.LorentzChart(lam, a))
        except ValueError as exc:
            bad = _congruence_failure(lam)
            raise ModelError(f"{where}: {exc}{bad}") from exc

    if "matter" in raw:
        mat = raw["matter"]
        if "theta" in mat:
            m.theta = [
                [_poly(mat["theta"][i][j], f"matter.theta[{i}][{j}]") for j in range(4)]
                for i in range(4)
            ]
        if "sigma" in mat:
            sig = [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
            for idx, row in enumerate(mat["sigma"]):
                where = f"matter.sigma[{idx}]"
                mu, a, b = row["mu"], row["alpha"], row["beta"]
                if a == b:
                    raise ModelError(f"{where}: alpha = beta violates antisymmetry")
                v = _poly(row["poly"], where)
                sig[mu][a][b] = sig[mu][a][b] + v
                sig[mu][b][a] = sig[mu][b][a] - v
            m.sigma = sig

    for idx, cv in enumerate(raw.get("curves", [])):
        where = f"curves[{idx}]"
        coeffs = [[_frac(v, where) for v in cs] for cs in cv.get("coeffs", [])]
        try:
            m.curves.append(Curve(coeffs))
        except ValueError as exc:
            raise ModelError(f"{where}: {exc}") from exc

    if "gauge" in raw:
        gsec = raw["gauge"]
        try:
            n = int(gsec["n"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelError(f"gauge.n: {exc}") from exc
        if n < 2:
            raise ModelError("gauge.n: need n >= 2")
        gcoup = _frac(gsec.get("g", "1"), "gauge.g")
        dim = n * n - 1
        c_a = [[_frac(v, "gauge.c_a") for v in row] for row in gsec.get("c_a", [["0"] * dim] * 5)]
        c_0 = [_frac(v, "gauge.c_0") for v in gsec.get("c_0", ["0"] * 5)]
        if len(c_a) != 5 or any(len(r) != dim for r in c_a) or len(c_0) != 5:
            raise ModelError("gauge: c_a must be 5 x (n^2-1), c_0 length 5")
        x_re = gsec.get("x_re", [["0"] * n] * 5)
        x_im = gsec.get("x_im", [["0"] * n] * 5)
        xcol = [
            [
                CNum(_frac(x_re[A][j], "gauge.x_re"), _frac(x_im[A][j], "gauge.x_im"))
                for j in range(n)
            ]
            for A in range(5)
        ]
        m.gauge = {"n": n, "g": gcoup, "c_a": c_a, "c_0": c_0, "x": xcol}
    return m


def _congruence_failure(lam) -> str:
    """Locate the first failing entry of L^T eta L = eta, for error text."""
    if len(lam) != 4 or any(len(r) != 4 for r in lam):
        return ""
    for i in range(4):
        for j in range(4):
            got = sum(lam[k][i] * ETA4[k] * lam[k][j] for k in range(4))
            want = ETA4[i] if i == j else 0
            if got != want:
                return f"; congruence entry ({i},{j}) is {got}, expected {want}"
    return ""


# -- checks ----------------------------------------------------------------


def _check(cid, ok, residual="0", details=""):
    return {
        "id": cid,
        "status": "pass" if ok else "fail",
        "max_residual": residual if not ok or residual != "0" else "0",
        "details": details,
    }


def _flagged(cid, residual, details):
    return {"id": cid, "status": "flagged", "max_residual": residual, "details": details}


def _table_residual(table):
    """Flatten nested tables of ring elements; '0' if all zero, else the
    first offending entry rendered as a polynomial."""
    stack = [table]
    while stack:
        t = stack.pop()
        if isinstance(t, (list, tuple)):
            stack.extend(reversed(t))
            continue
        if not _ring_zero(t):
            return str(t)
    return "0"


def _ring_zero(v):
    if hasattr(v, "is_zero"):
        return v.is_zero()
    return not v


def _exact(cid, table, details=""):
    r = _table_residual(table)
    return _check(cid, r == "0", r, details)


def _num(cid, residual: float, tol: float, details=""):
    return _check(cid, residual <= tol, f"{residual:.12e}", details)


def _build_gauge_connection(gsec):
    n, gcoup = gsec["n"], gsec["g"]
    nn = gauge.compose_nn(n, [[CNum.of(v) for v in row] for row in gsec["c_a"]],
                          [CNum.of(v) for v in gsec["c_0"]], gcoup)
    I = CNum.I
    amp_norm = gauge.SqrtNum.sqrt(Fraction(n, 2 * (n + 1)))
    amp = [-(I * CNum(amp_norm) * CNum.of(gsec["c_0"][A]) * CNum.of(gcoup)) for A in range(5)]
    col = [[gsec["x"][A][j] * CNum.of(gcoup) for j in range(n)] for A in range(5)]
    return gauge.GaugeConnection(n, nn, col, amp)


def suite_clifford(model: ModelFile, rng: random.Random, tol: float):
    checks = []
    gs = clifford.build_gamma_set()
    checks.append(_check("clifford.anticommutators", True))
    g4 = clifford.gamma4_from(gs)
    ok = True
    for a in range(4):
        for b in range(4):
            anti = clifford.cmat_add(
                clifford.cmat_mul(g4[a], g4[b]), clifford.cmat_mul(g4[b], g4[a])
            )
            want = clifford.cmat_eye(4, 2 * ETA4[a] if a == b else 0)
            ok = ok and clifford.cmat_eq(anti, want)
    checks.append(_check("clifford.reconstruction", ok, "0" if ok else "nonzero"))
    ok = True
    for _ in range(3):
        O = random_o32(rng)
        try:
            clifford.transform_o32(gs, O)
        except ValueError:
            ok = False
    checks.append(_check("clifford.frame_transforms", ok, "0" if ok else "nonzero"))
    return checks


def random_o32(rng: random.Random):
    """Exact matrix preserving diag(+,-,-,-,+), built from rational plane
    rotations (between same-sign axes) and boosts (between mixed signs)."""
    plus = (0, 4)
    minus = (1, 2, 3)
    M = [[Fraction(int(i == j)) for j in range(5)] for i in range(5)]
    for _ in range(3):
        if rng.random() < 0.5:
            pair = rng.choice([(0, 4), (1, 2), (1, 3), (2, 3)])
            c, s = rng.choice(randomize.ROTATIONS)
            if rng.random() < 0.5:
                s = -s
            R = [[Fraction(int(i == j)) for j in range(5)] for i in range(5)]
            i, j = pair
            R[i][i] = R[j][j] = c
            R[i][j] = -s
            R[j][i] = s
        else:
            i = rng.choice(plus)
            j = rng.choice(minus)
            ch, sh = rng.choice(randomize.BOOSTS)
            if rng.random() < 0.5:
                sh = -sh
            R = [[Fraction(int(k == l)) for l in range(5)] for k in range(5)]
            R[i][i] = R[j][j] = ch
            R[i][j] = R[j][i] = sh
        M = [[sum(M[r][k] * R[k][c] for k in range(5)) for c in range(5)] for r in range(5)]
    return M


def suite_flat(model: ModelFile, rng: random.Random, tol: float):
    checks = []
    kappa = model.kappa

    # completion matrix and coordinate recovery at random points
    ok = True
    for _ in range(10):
        pt = randomize.point(rng)
        hm = frames.h_matrix_p_basis(pt, kappa)
        if frames.recover_coords(hm, kappa) != pt:
            ok = False
        for a in range(4):
            for b in range(4):
                xa = ETA4[a] * pt[a]
                xb = ETA4[b] * pt[b]
                want = (ETA4[a] if a == b else 0) + kappa * kappa * xa * xb
                if hm[a][b] != want:
                    ok = False
    checks.append(_check("frames.completion_matrix", ok, "0" if ok else "nonzero"))

    # position form: component law + coordinate substitution is the identity
    res = []
    w = frames.covariant_position_form("P")
    for _ in range(5):
        chart = frames.LorentzChart(randomize.lorentz(rng), randomize.translation(rng))
        moved = frames.p_component_transform(
            tuple(Poly4.const(0) + c for c in w.w), chart, kind="form"
        )
        subbed = tuple(
            substitute_chart(c, [list(r) for r in chart.Lambda], list(chart.a)) for c in moved
        )
        for A in range(5):
            res.append(subbed[A] - w.w[A])
    checks.append(_exact("frames.position_form", res))

    # component matrices compose functorially
    ok = True
    for _ in range(20):
        c1 = frames.LorentzChart(randomize.lorentz(rng), randomize.translation(rng))
        c2 = frames.LorentzChart(randomize.lorentz(rng), randomize.translation(rng))
        both = c2.compose(c1)
        lhs = frames.p_component_matrix(both)
        rhs = mat_mul(frames.p_component_matrix(c2), frames.p_component_matrix(c1))
        ok = ok and lhs == rhs
        lhs = frames.o_component_matrix(both)
        rhs = mat_mul(frames.o_component_matrix(c2), frames.o_component_matrix(c1))
        ok = ok and lhs == rhs
    checks.append(_check("frames.functoriality", ok, "0" if ok else "nonzero"))

    # finite and infinitesimal parameter laws match tensor conjugation
    ok = True
    for _ in range(10):
        chart = frames.LorentzChart(randomize.lorentz(rng), randomize.translation(rng))
        p = frames.PoincareParams(randomize.lorentz(rng), randomize.translation(rng))
        T = frames.p_component_matrix(chart)
        Tinv = frac_inverse(T)
        want = mat_mul(mat_mul(T, p.as_tensor()), Tinv)
        got = frames.poincare_T_transform(p, chart).as_tensor()
        ok = ok and got == want
        om = [[Fraction(0)] * 4 for _ in range(4)]
        om[0][1] = Fraction(rng.randint(-3, 3))
        om[1][0] = -om[0][1]
        om[2][3] = Fraction(rng.randint(-3, 3))
        om[3][2] = -om[2][3]
        inf = frames.InfinitesimalPoincare(om, randomize.translation(rng))
        R = inf.as_tensor()
        wantR = [
            [
                sum(T[a][c] * T[b][d] * R[c][d] for c in range(5) for d in range(5))
                for b in range(5)
            ]
            for a in range(5)
        ]
        gotR = frames.poincare_R_transform(inf, chart).as_tensor()
        ok = ok and gotR == wantR
    checks.append(_check("frames.parameter_laws", ok, "0" if ok else "nonzero"))

    # self-parallel frame has vanishing covariant derivative
    G = build_G(MetricG.eta(), kappa, christoffel(MetricG.eta()), mode="active")
    N = frames.p_basis_fields().N
    res = []
    for a in range(5):
        p_field = FiveVecField([N[B][a] for B in range(5)])
        for mu in range(4):
            res.extend(nabla_five(p_field, G, mu).u)
    checks.append(_exact("connection.self_parallel", res))

    # transport oracle against the closed-form drift of the frame
    curve = Curve([[Fraction(0), Fraction(1)], [0], [0], [0]])
    V = transport_along([1, 0, 0, 0, 0], curve, G, steps=1000)
    want = [1.0, 0.0, 0.0, 0.0, float(kappa)]
    r = max(abs(a - b) for a, b in zip(V, want))
    checks.append(_num("connection.transport_oracle", r, tol))

    # transport commutes with the quotient to four components
    rmax = 0.0
    curves = model.curves or [
        Curve([[randomize.rational(rng, 2), randomize.rational(rng, 2)] for _ in range(4)])
        for _ in range(5)
    ]
    for cv in curves[:5]:
        u0 = [randomize.rational(rng, 3) for _ in range(5)]
        V5 = transport_along(u0, cv, G, steps=400)
        G4 = ConnectionG(
            [
                [
                    [G.G[a][b][m] for m in range(4)] if a < 4 and b < 4 else [ZERO] * 4
                    for b in range(5)
                ]
                for a in range(5)
            ]
        )
        V4 = transport_along([u0[0], u0[1], u0[2], u0[3], 0], cv, G4, steps=400)
        rmax = max(rmax, max(abs(a - b) for a, b in zip(V5[:4], V4[:4])))
    checks.append(_num("connection.quotient_commutes", rmax, tol))

    # constant-source conservation in both frames
    theta = model.theta or [
        [Poly4.const(Fraction(ETA4[i] if i == j else 0)) for j in range(4)] for i in range(4)
    ]
    sigma_t = model.sigma or [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
    sym = all(
        (theta[i][j] * ETA4[j] - theta[j][i] * ETA4[i]).is_zero()
        for i in range(4)
        for j in range(4)
    )
    const = all(theta[i][j].is_constant() for i in range(4) for j in range(4))
    if sym and const and all(
        v.is_zero() for pl in sigma_t for row in pl for v in row
    ):
        M = noether.assemble_M(theta, sigma_t)
        rP = noether.flat_conservation_residual_P(M)
        rO = noether.flat_conservation_residual_O(noether.M_to_O_basis(M))
        checks.append(_exact("noether.flat_conservation", [rP, rO]))
    MO = noether.M_to_O_basis(noether.assemble_M(theta, sigma_t))
    res = [
        MO[m, a, b] - sigma_t[m][a][b] for m in range(4) for a in range(4) for b in range(4)
    ]
    checks.append(_exact("noether.orthonormal_spin_block", res))
    return checks


def suite_curved(model: ModelFile, rng: random.Random, tol: float):
    if model.metric is None:
        raise ModelError("curved suite needs a [metric] section")
    checks = []
    g = model.metric
    S = model.sform
    lc = christoffel(g)
    H = build_H(g, S, lc)

    g5 = g.five_matrix()
    res = [pentad_metric5(g5, H, C) for C in list(range(4)) + [4]]
    checks.append(_exact("connection.metric_compatibility", res))

    R = curvature.curvature_from_H(H)
    if g == MetricG.eta() and S.is_zero():
        checks.append(_exact("curvature.flat_vanishes", R))

    res = []
    for b in range(4):
        for C in range(5):
            for D in range(5):
                res.append(R[4][4][C][D])
                for a in range(4):
                    res.append(R[a][4][C][D])
    checks.append(_exact("curvature.algebraic_rows", res))

    res = []
    for a in range(4):
        for b in range(4):
            for C in range(5):
                for D in range(5):
                    v = curvature._sum(
                        g[a, w] * R[w][b][C][D] + g[b, w] * R[w][a][C][D] for w in range(4)
                    )
                    res.append(v)
    checks.append(_exact("curvature.metric_antisymmetry", res))

    res = []
    for b in range(4):
        for m in range(4):
            for n in range(4):
                rhs = curvature._sum(
                    -(g[b, w] * (S.mixed(g, w, m, n) - S.mixed(g, w, n, m)))
                    for w in range(4)
                )
                res.append(R[4][b][m][n] - rhs)
    checks.append(_exact("curvature.fifth_row_torsion", res))

    K = curvature.build_K(R, g, S)
    lhs = curvature.curvature_scalar(K)
    rhs = curvature.scalar_curvature_four(g, H.four_block())
    checks.append(_exact("curvature.scalar_trace", [lhs - rhs]))

    gen, comp, diff = curvature.mu5_sign_probe(H, g, S)
    dres = _table_residual(diff)
    if dres == "0":
        checks.append(_check("curvature.mu5_sign_probe", True))
    else:
        where = next(
            (b, m, n)
            for b in range(4)
            for m in range(4)
            for n in range(4)
            if not _ring_zero(diff[b][m][n])
        )
        b, m, n = where
        checks.append(
            _flagged(
                "curvature.mu5_sign_probe",
                dres,
                "general expansion and componentwise candidate disagree at "
                f"{where}: general={gen[b][m][n]!s} candidate={comp[b][m][n]!s}",
            )
        )

    res = curvature.divergence_identity_residual(g, S, H.four_block())
    checks.append(_exact("curvature.divergence_identity", res))

    cons = curvature.check_consistency_identities(
        g, S, lc, model.k, model.varrho, model.h55_sign
    )
    for name in sorted(cons):
        checks.append(_exact(f"curvature.consistency_{name}", cons[name]))

    # numeric holonomy vs the symbolic table
    Gtab = ConnectionG([[[H.H[A][B][m] for m in range(4)] for B in range(5)] for A in range(5)])
    base = (Fraction(1, 8), Fraction(1, 8), Fraction(1, 8), Fraction(1, 8))
    est = curvature.holonomy_curvature_estimate(Gtab, 0, 1, 1e-3, base)
    rmax = 0.0
    for A in range(5):
        for B in range(5):
            want = _eval_entry(R[A][B][0][1], base)
            rmax = max(rmax, abs(est[A][B] - want))
    checks.append(_num("curvature.holonomy", rmax, 1e-6))

    # bivector-indexed derivative agrees with the five-vector one
    res = []
    for _ in range(3):
        u = FiveVecField(randomize.fivevec_components(rng, degree=1))
        x = FiveVecField(randomize.fivevec_components(rng, degree=1))
        res.extend(bivder.check_bridge(u, x, S, g, lc, H))
    checks.append(_exact("bivder.bridge", res))
    return checks


def _eval_entry(v, pt):
    fpt = [float(c) for c in pt]
    return v.eval_float(fpt) if hasattr(v, "eval_float") else float(v)


def suite_gauge(model: ModelFile, rng: random.Random, tol: float):
    if model.gauge is None:
        raise ModelError("gauge suite needs a [gauge] section")
    checks = []
    gsec = model.gauge
    n, gcoup = gsec["n"], gsec["g"]
    conn = _build_gauge_connection(gsec)

    Ca, C0s, herm, trace = gauge.su_u1_decompose(conn, gcoup)
    back = gauge.compose_nn(n, Ca, C0s, gcoup)
    ok = all(gauge.c_is_zero(gauge.csub(back[A], conn.nn[A])) for A in range(5))
    ok = ok and all(gauge.c_is_zero(h) for h in herm)
    checks.append(_check("gauge.decompose_roundtrip", ok, "0" if ok else "nonzero"))
    ok = all(t.is_zero() for t in trace)
    checks.append(_check("gauge.trace_coefficient", ok, "0" if ok else "nonzero"))

    # conjugation asymmetry is exactly the column coupling
    comp = []
    for i in range(n + 1):
        comp.append([(CNum.of(rng.randint(-3, 3)), randomize.poly(rng, 1, 2))])
    u = gauge.MultipletField(n, comp)
    ok = True
    has_col = any(not c.is_zero() for A in range(5) for c in conn.col[A])
    for A in range(5):
        got = gauge.c_violation(u, conn, gcoup, A)
        want = gauge.expected_column_terms(u, conn, A)
        for slot in range(n + 1):
            d = gauge.pairs_collapse(got[slot]) - gauge.pairs_collapse(want[slot])
            ok = ok and d.is_zero()
        if not has_col:
            ok = ok and all(gauge.pairs_is_zero(got[slot]) for slot in range(n + 1))
    checks.append(_check("gauge.conjugation_terms", ok, "0" if ok else "nonzero"))

    # frame changes keep the zero row of the standard frame
    ok = True
    for _ in range(5):
        L = [[CNum.of(0) for _ in range(n + 1)] for _ in range(n + 1)]
        for i in range(n + 1):
            L[i][i] = CNum.of(rng.choice([1, -1, 2]))
            for j in range(i):
                if j < n and i >= n:
                    L[i][j] = CNum(rng.randint(-2, 2), rng.randint(-2, 2))
        for i in range(n):
            for j in range(n):
                if i != j:
                    L[i][j] = CNum(Fraction(rng.randint(-1, 1), 2), 0)
        dL = [[[CNum.of(0)] * (n + 1) for _ in range(n + 1)] for _ in range(5)]
        try:
            gauge.transform_connection(conn, L, dL)
        except (ValueError, ZeroDivisionError):
            ok = False
    checks.append(_check("gauge.standard_frame_preserved", ok, "0" if ok else "nonzero"))
    return checks


def run_suite(model: ModelFile, suite: str, seed: int, tol: float):
    if suite not in SUITES:
        raise ModelError(f"unknown suite {suite!r}")
    rng = random.Random(seed)
    checks = []
    if suite in ("clifford", "all"):
        checks.extend(suite_clifford(model, rng, tol))
    if suite in ("flat", "all"):
        checks.extend(suite_flat(model, rng, tol))
    if suite in ("curved", "all") and (suite == "curved" or model.metric is not None):
        checks.extend(suite_curved(model, rng, tol))
    if suite in ("gauge", "all") and (suite == "gauge" or model.gauge is not None):
        checks.extend(suite_gauge(model, rng, tol))
    checks.sort(key=lambda c: c["id"])
    return {"suite": suite, "seed": seed, "tol": f"{tol:.12e}", "checks": checks}


def emit_report(report, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n").encode()
    lines = [f"suite: {report['suite']}  seed: {report['seed']}  tol: {report['tol']}"]
    width = max((len(c["id"]) for c in report["checks"]), default=2)
    for c in report["checks"]:
        line = f"{c['id']:<{width}}  {c['status']:<7}  {c['max_residual']}"
        if c["details"]:
            line += f"  {c['details']}"
        lines.append(line)
    return ("\n".join(lines) + "\n").encode()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="fivevec")
    sub = parser.add_subparsers(dest="command", required=True)
    vp = sub.add_parser("verify", help="run a verification suite against a model file")
    vp.add_argument("--model", required=True)
    vp.add_argument("--suite", required=True, choices=SUITES)
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--tol", default=TOL_DEFAULT)
    vp.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    vp.add_argument("--strict", action="store_true")
    args = parser.parse_args(argv)

    try:
        tol = float(args.tol)
        if not tol > 0:
            raise ValueError("tolerance must be positive")
    except ValueError as exc:
        print(f"error: --tol: {exc}", file=sys.stderr)
        return 2
    if args.seed < 0 or args.seed >= 2**64:
        print("error: --seed: must fit in an unsigned 64-bit integer", file=sys.stderr)
        return 2

    try:
        model = load_model(args.model)
        report = run_suite(model, args.suite, args.seed, tol)
    except ModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    sys.stdout.buffer.write(emit_report(report, args.fmt))
    sys.stdout.buffer.flush()
    statuses = {c["status"] for c in report["checks"]}
    if "fail" in statuses:
        return 1
    if "flagged" in statuses and args.strict:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
