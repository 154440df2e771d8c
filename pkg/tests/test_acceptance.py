"""End-to-end acceptance gate: one test per contract item, each reported
as a single pass/fail line by pytest."""

import json
import random
from fractions import Fraction

from fivevec import bivder, clifford, curvature, frames, gauge, noether, randomize
from fivevec.cli import main as cli_main
from fivevec.cli import random_o32
from fivevec.connection import (
    ConnectionG,
    Curve,
    SForm,
    build_G,
    build_H,
    christoffel,
    nabla_five,
    transport_along,
)
from fivevec.core5 import ETA4, FiveVecField, FourVecField, MetricG
from fivevec.exactnum import CNum, SqrtNum
from fivevec.matrix import frac_inverse, mat_mul
from fivevec.poly import ZERO, Poly4, X, substitute_chart

from conftest import curved_models
from test_gauge import make_connection

SEED = 411


def _chart(rng):
    return frames.LorentzChart(randomize.lorentz(rng), randomize.translation(rng))


def _zero(v):
    return v.is_zero() if hasattr(v, "is_zero") else not v


def _all_zero(table):
    stack = [table]
    while stack:
        t = stack.pop()
        if isinstance(t, (list, tuple)):
            stack.extend(t)
        elif not _zero(t):
            return False
    return True


def test_clifford_algebra_and_frame_transforms():
    rng = random.Random(SEED)
    gs = clifford.build_gamma_set()  # constructor checks all index pairs
    g4 = clifford.gamma4_from(gs)
    for a in range(4):
        for b in range(4):
            anti = clifford.cmat_add(
                clifford.cmat_mul(g4[a], g4[b]), clifford.cmat_mul(g4[b], g4[a])
            )
            assert clifford.cmat_eq(anti, clifford.cmat_eye(4, 2 * (ETA4[a] if a == b else 0)))
    for _ in range(5):
        O = random_o32(rng)
        clifford.transform_o32(gs, O)  # re-validates the relations


def test_flat_frame_suite():
    rng = random.Random(SEED)
    kappa = Fraction(1)
    for _ in range(10):
        pt = randomize.point(rng)
        hm = frames.h_matrix_p_basis(pt, kappa)
        assert frames.recover_coords(hm, kappa) == pt
        for a in range(4):
            for b in range(4):
                xa, xb = ETA4[a] * pt[a], ETA4[b] * pt[b]
                assert hm[a][b] == (ETA4[a] if a == b else 0) + kappa * kappa * xa * xb
    w = frames.covariant_position_form("P")
    for _ in range(5):
        chart = _chart(rng)
        moved = frames.p_component_transform(
            tuple(Poly4.const(0) + c for c in w.w), chart, kind="form"
        )
        for A in range(5):
            subbed = substitute_chart(moved[A], [list(r) for r in chart.Lambda], list(chart.a))
            assert (subbed - w.w[A]).is_zero()
    for _ in range(20):
        c1, c2 = _chart(rng), _chart(rng)
        both = c2.compose(c1)
        for mat in (frames.p_component_matrix, frames.o_component_matrix):
            assert mat(both) == mat_mul(mat(c2), mat(c1))


def test_poincare_parameter_laws():
    rng = random.Random(SEED)
    for _ in range(10):
        chart = _chart(rng)
        T = frames.p_component_matrix(chart)
        p = frames.PoincareParams(randomize.lorentz(rng), randomize.translation(rng))
        want = mat_mul(mat_mul(T, p.as_tensor()), frac_inverse(T))
        assert frames.poincare_T_transform(p, chart).as_tensor() == want
        om = [[Fraction(0)] * 4 for _ in range(4)]
        om[0][1] = Fraction(rng.randint(-3, 3))
        om[1][0] = -om[0][1]
        om[2][3] = Fraction(rng.randint(-3, 3))
        om[3][2] = -om[2][3]
        inf = frames.InfinitesimalPoincare(om, randomize.translation(rng))
        R = inf.as_tensor()
        want = [
            [
                sum(T[a][c] * T[b][d] * R[c][d] for c in range(5) for d in range(5))
                for b in range(5)
            ]
            for a in range(5)
        ]
        assert frames.poincare_R_transform(inf, chart).as_tensor() == want


def test_connection_transport():
    rng = random.Random(SEED)
    g = MetricG.eta()
    G = build_G(g, Fraction(1), christoffel(g), mode="active")
    for b in range(4):
        for m in range(4):
            assert (G[4, b, m] + g[b, m]).is_zero()
        assert all(G[A, 4, m].is_zero() for A in range(5) for m in range(4))
    N = frames.p_basis_fields().N
    for a in range(5):
        p_field = FiveVecField([N[B][a] for B in range(5)])
        for mu in range(4):
            assert _all_zero(nabla_five(p_field, G, mu).u)
    curve = Curve([[Fraction(0), Fraction(1)], [0], [0], [0]])
    V = transport_along([1, 0, 0, 0, 0], curve, G, steps=1000)
    assert max(abs(a - b) for a, b in zip(V, [1.0, 0.0, 0.0, 0.0, 1.0])) < 1e-9
    G4 = ConnectionG(
        [
            [[G[a, b, m] for m in range(4)] if a < 4 and b < 4 else [ZERO] * 4 for b in range(5)]
            for a in range(5)
        ]
    )
    for _ in range(5):
        cv = Curve([[randomize.rational(rng, 2), randomize.rational(rng, 2)] for _ in range(4)])
        u0 = [randomize.rational(rng, 3) for _ in range(5)]
        V5 = transport_along(u0, cv, G, steps=400)
        V4 = transport_along([u0[0], u0[1], u0[2], u0[3], 0], cv, G4, steps=400)
        assert max(abs(a - b) for a, b in zip(V5[:4], V4[:4])) < 1e-9


def test_transport_bivector_bridge():
    rng = random.Random(SEED)
    g, S = curved_models()[0]
    lc = christoffel(g)
    H = build_H(g, S, lc)
    for _ in range(10):
        u = FiveVecField(randomize.fivevec_components(rng, degree=1))
        for _ in range(5):
            f = randomize.poly(rng, 2, 2)
            assert bivder.check_bridge(u, f, S, g, lc, H).is_zero()
            U = FourVecField(randomize.fivevec_components(rng, degree=1)[:4])
            assert _all_zero(bivder.check_bridge(u, U, S, g, lc, H))
            x = FiveVecField(randomize.fivevec_components(rng, degree=1))
            assert _all_zero(bivder.check_bridge(u, x, S, g, lc, H))


def test_curvature_tables():
    gf = MetricG.eta()
    assert _all_zero(curvature.curvature_from_H(build_H(gf, SForm.zero(), christoffel(gf))))
    for g, S in curved_models():
        H = build_H(g, S, christoffel(g))
        R = curvature.curvature_from_H(H)
        for C in range(5):
            for D in range(5):
                assert _zero(R[4][4][C][D])
                assert all(_zero(R[a][4][C][D]) for a in range(4))
        for a in range(4):
            for b in range(4):
                for C in range(5):
                    for D in range(5):
                        v = sum(
                            (g[a, w] * R[w][b][C][D] + g[b, w] * R[w][a][C][D] for w in range(4)),
                            ZERO,
                        )
                        assert _zero(v)
        for b in range(4):
            for m in range(4):
                for n in range(4):
                    rhs = sum(
                        (
                            -(g[b, w] * (S.mixed(g, w, m, n) - S.mixed(g, w, n, m)))
                            for w in range(4)
                        ),
                        ZERO,
                    )
                    assert _zero(R[4][b][m][n] - rhs)
        K = curvature.build_K(R, g, S)
        assert _zero(
            curvature.curvature_scalar(K) - curvature.scalar_curvature_four(g, H.four_block())
        )
    g, S = curved_models()[0]
    H = build_H(g, S, christoffel(g))
    R = curvature.curvature_from_H(H)
    Gtab = ConnectionG(
        [[[H.H[A][B][m] for m in range(4)] for B in range(5)] for A in range(5)]
    )
    base = (Fraction(1, 8), Fraction(1, 8), Fraction(1, 8), Fraction(1, 8))
    fb = [float(c) for c in base]
    est = curvature.holonomy_curvature_estimate(Gtab, 0, 1, 1e-3, base)
    for A in range(5):
        for B in range(5):
            v = R[A][B][0][1]
            want = v.eval_float(fb) if hasattr(v, "eval_float") else float(v)
            assert abs(est[A][B] - want) < 1e-6


def test_field_equations():
    rng = random.Random(SEED)
    gf = MetricG.eta()
    Z = [[ZERO] * 4 for _ in range(4)]
    Z3 = [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
    inp = curvature.FieldEqInputs(gf, SForm.zero(), Z, Z3, Z, Fraction(1), Fraction(1))
    assert _all_zero(curvature.field_eq_residuals(inp, christoffel(gf)))
    g, S = curved_models()[0]
    ginv = g.inverse()
    Sig = [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
    for a in range(4):
        for m in range(4):
            for n in range(m + 1, 4):
                p = randomize.poly(rng, 1, 2)
                Sig[a][m][n] = p
                Sig[a][n][m] = -p
    inp = curvature.FieldEqInputs(g, S, Z, Sig, Z, Fraction(1), Fraction(1))
    _, r2, _ = curvature.field_eq_residuals(inp, christoffel(g))
    Sigup = [
        [
            [
                sum(
                    (ginv[a][s] * ginv[b][t] * Sig[m][s][t] for s in range(4) for t in range(4)),
                    ZERO,
                )
                for m in range(4)
            ]
            for b in range(4)
        ]
        for a in range(4)
    ]
    ks = curvature.kibble_sciama_residual(g, S, Sigup, Fraction(1))
    for a in range(4):
        for b in range(4):
            for m in range(4):
                want = sum(
                    (ginv[a][s] * ginv[b][t] * r2[m][s][t] for s in range(4) for t in range(4)),
                    ZERO,
                )
                assert _zero(ks[a][b][m] - want)
    cons = curvature.check_consistency_identities(
        g, S, christoffel(g), Fraction(1), Fraction(1), 1
    )
    assert set(cons) == {"proportionality", "commutation", "gradient", "contraction"}
    assert _all_zero(list(cons.values()))
    for g, S in curved_models():
        four = build_H(g, S, christoffel(g)).four_block()
        assert _all_zero(curvature.divergence_identity_residual(g, S, four))


def test_current_tensor():
    rng = random.Random(SEED)
    for _ in range(10):
        chart = _chart(rng)
        L = [list(r) for r in chart.Lambda]
        Linv = frac_inverse(L)
        theta = [[randomize.poly(rng, 2, 2) for _ in range(4)] for _ in range(4)]
        sig = [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
        for m in range(4):
            for a in range(4):
                for b in range(a + 1, 4):
                    p = randomize.poly(rng, 1, 2)
                    sig[m][a][b] = p
                    sig[m][b][a] = -p
        got = noether.transform_chart(noether.assemble_M(theta, sig), chart)

        def sub(p):
            return substitute_chart(p, L, list(chart.a))

        theta_p = [
            [
                sub(sum((theta[p][q].scale(L[m][p] * Linv[q][n]) for p in range(4) for q in range(4)), ZERO))
                for n in range(4)
            ]
            for m in range(4)
        ]
        sig_p = [
            [
                [
                    sub(
                        sum(
                            (
                                sig[p][q][r].scale(L[m][p] * Linv[q][a] * Linv[r][b])
                                for p in range(4)
                                for q in range(4)
                                for r in range(4)
                            ),
                            ZERO,
                        )
                    )
                    for b in range(4)
                ]
                for a in range(4)
            ]
            for m in range(4)
        ]
        want = noether.assemble_M(theta_p, sig_p)
        for A in range(4):
            for B in range(5):
                for C in range(5):
                    assert (got[A, B, C] - want[A, B, C]).is_zero()
    theta = [[Poly4.const(ETA4[i] if i == j else 0) for j in range(4)] for i in range(4)]
    sig = [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
    M = noether.assemble_M(theta, sig)
    assert _all_zero(noether.flat_conservation_residual_P(M))
    assert _all_zero(noether.flat_conservation_residual_O(noether.M_to_O_basis(M)))
    g, S = curved_models()[0]
    H = build_H(g, S, christoffel(g))
    M5_s5 = [randomize.poly(rng, 1, 2) for _ in range(4)]
    lhs, rhs = noether.m5_sigma5_cancellation(M5_s5, H, g, S)
    assert _all_zero([a - b for a, b in zip(lhs, rhs)])


def test_gauge_sector():
    rng = random.Random(SEED)
    for n in (2, 3):
        gc = Fraction(3, 2)
        conn = make_connection(rng, n, gc)
        Ca, C0s, herm, trace = gauge.su_u1_decompose(conn, gc)
        back = gauge.compose_nn(n, Ca, C0s, gc)
        for A in range(5):
            assert gauge.c_is_zero(gauge.csub(back[A], conn.nn[A]))
        assert all(gauge.c_is_zero(h) for h in herm)
        assert all(t.is_zero() for t in trace)
        # amplitude coefficient is -i g [n/(2(n+1))]^(1/2) times the trace part
        coef = CNum(SqrtNum.sqrt(Fraction(n, 2 * (n + 1))))
        for A in range(5):
            assert (conn.amp[A] + CNum.I * coef * C0s[A] * CNum.of(gc)).is_zero()
        comp = [[(CNum.of(rng.randint(-3, 3)), randomize.poly(rng, 1, 2))] for _ in range(n + 1)]
        u = gauge.MultipletField(n, comp)
        for A in range(5):
            got = gauge.c_violation(u, conn, gc, A)
            want = gauge.expected_column_terms(u, conn, A)
            for slot in range(n + 1):
                assert (gauge.pairs_collapse(got[slot]) - gauge.pairs_collapse(want[slot])).is_zero()
        plain = make_connection(rng, n, gc, with_column=False)
        for A in range(5):
            got = gauge.c_violation(u, plain, gc, A)
            assert all(gauge.pairs_is_zero(got[slot]) for slot in range(n + 1))
        for _ in range(5):
            L = [[CNum.of(int(i == j)) for j in range(n + 1)] for i in range(n + 1)]
            for j in range(n):
                L[n][j] = CNum(rng.randint(-2, 2), rng.randint(-2, 2))
            dL = [[[CNum.of(0)] * (n + 1) for _ in range(n + 1)] for _ in range(5)]
            gauge.transform_connection(conn, L, dL)


def test_cli_contract(capsys, tmp_path):
    import os

    models = os.path.join(os.path.dirname(__file__), os.pardir, "models")
    args = ["verify", "--model", f"{models}/curved.toml", "--suite", "curved", "--seed", "11"]
    assert cli_main(args) == 0
    first = capsys.readouterr().out
    assert cli_main(args) == 0
    assert capsys.readouterr().out == first
    probe = [
        c
        for c in json.loads(first)["checks"]
        if c["id"] == "curvature.mu5_sign_probe"
    ]
    assert probe and probe[0]["status"] == "flagged"
    assert "general=" in probe[0]["details"] and "candidate=" in probe[0]["details"]
    assert cli_main(args + ["--strict"]) == 1
    capsys.readouterr()
    bad = tmp_path / "bad.toml"
    bad.write_text("[metric]\nrows = 3\n")
    assert cli_main(["verify", "--model", str(bad), "--suite", "curved"]) == 2
    capsys.readouterr()
