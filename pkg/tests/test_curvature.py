from fractions import Fraction

import pytest

from fivevec import randomize
from fivevec.connection import ConnectionG, SForm, build_H, christoffel
from fivevec.core5 import MetricG
from fivevec.curvature import (
    FieldEqInputs,
    build_K,
    check_consistency_identities,
    curvature_from_H,
    curvature_scalar,
    divergence_identity_residual,
    field_eq_residuals,
    holonomy_curvature_estimate,
    kibble_sciama_residual,
    mu5_sign_probe,
    riemann_four,
    scalar_curvature_four,
)
from fivevec.poly import ZERO, Poly4

from conftest import curved_models


def _zero(v):
    return v.is_zero() if hasattr(v, "is_zero") else not v


def test_flat_curvature_vanishes():
    g = MetricG.eta()
    H = build_H(g, SForm.zero(), christoffel(g))
    R = curvature_from_H(H)
    for A in range(5):
        for B in range(5):
            for C in range(5):
                for D in range(5):
                    assert _zero(R[A][B][C][D])


def test_four_block_is_riemann_without_sources():
    g, _ = curved_models()[1]
    lc = christoffel(g)
    H = build_H(g, SForm.zero(), lc)
    R = curvature_from_H(H)
    R4 = riemann_four(lc)
    for a in range(4):
        for b in range(4):
            for m in range(4):
                for n in range(4):
                    assert _zero(R[a][b][m][n] - R4[a][b][m][n])


@pytest.mark.parametrize("idx", [0, 1, 2])
def test_algebraic_rows_and_antisymmetry(idx):
    g, S = curved_models()[idx]
    H = build_H(g, S, christoffel(g))
    R = curvature_from_H(H)
    for C in range(5):
        for D in range(5):
            assert _zero(R[4][4][C][D])
            for a in range(4):
                assert _zero(R[a][4][C][D])
    for a in range(4):
        for b in range(4):
            for C in range(5):
                for D in range(5):
                    v = sum(
                        (g[a, w] * R[w][b][C][D] + g[b, w] * R[w][a][C][D] for w in range(4)),
                        ZERO,
                    )
                    assert _zero(v)


@pytest.mark.parametrize("idx", [0, 1, 2])
def test_fifth_row_closed_form(idx):
    g, S = curved_models()[idx]
    H = build_H(g, S, christoffel(g))
    R = curvature_from_H(H)
    for b in range(4):
        for m in range(4):
            for n in range(4):
                rhs = sum(
                    (-(g[b, w] * (S.mixed(g, w, m, n) - S.mixed(g, w, n, m))) for w in range(4)),
                    ZERO,
                )
                assert _zero(R[4][b][m][n] - rhs)


def test_scalar_trace():
    g, S = curved_models()[0]
    lc = christoffel(g)
    H = build_H(g, S, lc)
    K = build_K(curvature_from_H(H), g, S)
    assert _zero(curvature_scalar(K) - scalar_curvature_four(g, H.four_block()))


@pytest.mark.parametrize("idx", [0, 1, 2])
def test_divergence_identity(idx):
    g, S = curved_models()[idx]
    four = build_H(g, S, christoffel(g)).four_block()
    for row in divergence_identity_residual(g, S, four):
        for v in row:
            assert _zero(v)


def test_consistency_identities():
    g, S = curved_models()[0]
    cons = check_consistency_identities(
        g, S, christoffel(g), Fraction(1), Fraction(1), 1
    )
    assert set(cons) == {"proportionality", "commutation", "gradient", "contraction"}
    for table in cons.values():
        stack = [table]
        while stack:
            t = stack.pop()
            if isinstance(t, list):
                stack.extend(t)
            else:
                assert _zero(t)


def test_vacuum_flat_field_equations():
    g = MetricG.eta()
    Z = [[ZERO] * 4 for _ in range(4)]
    Z3 = [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
    inp = FieldEqInputs(g, SForm.zero(), Z, Z3, Z, Fraction(1), Fraction(1))
    r1, r2, r3 = field_eq_residuals(inp, christoffel(g))
    for t in (r1, r3):
        for row in t:
            for v in row:
                assert _zero(v)
    for plane in r2:
        for row in plane:
            for v in row:
                assert _zero(v)


def test_torsion_equation_forms_agree(rng):
    # the trace-modified torsion equation and its all-indices-up spin-
    # density form are the same system for arbitrary Sigma
    g, S = curved_models()[0]
    ginv = g.inverse()
    Sig = [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
    for a in range(4):
        for m in range(4):
            for n in range(m + 1, 4):
                p = randomize.poly(rng, 1, 2)
                Sig[a][m][n] = p
                Sig[a][n][m] = -p
    Z = [[ZERO] * 4 for _ in range(4)]
    inp = FieldEqInputs(g, S, Z, Sig, Z, Fraction(1), Fraction(1))
    _, r2, _ = field_eq_residuals(inp, christoffel(g))
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
    ks = kibble_sciama_residual(g, S, Sigup, Fraction(1))
    for a in range(4):
        for b in range(4):
            for m in range(4):
                want = sum(
                    (ginv[a][s] * ginv[b][t] * r2[m][s][t] for s in range(4) for t in range(4)),
                    ZERO,
                )
                assert _zero(ks[a][b][m] - want)


def test_sign_probe_reports_discrepancy():
    g, S = curved_models()[0]
    H = build_H(g, S, christoffel(g))
    gen, comp, diff = mu5_sign_probe(H, g, S)
    assert any(
        not _zero(diff[b][m][n]) for b in range(4) for m in range(4) for n in range(4)
    )


def test_holonomy_matches_symbolic_curvature():
    g, S = curved_models()[0]
    H = build_H(g, S, christoffel(g))
    R = curvature_from_H(H)
    Gtab = ConnectionG(
        [[[H.H[A][B][m] for m in range(4)] for B in range(5)] for A in range(5)]
    )
    base = (Fraction(1, 8), Fraction(1, 8), Fraction(1, 8), Fraction(1, 8))
    fb = [float(c) for c in base]
    est = holonomy_curvature_estimate(Gtab, 0, 1, 1e-3, base)
    rmax = 0.0
    for A in range(5):
        for B in range(5):
            v = R[A][B][0][1]
            want = v.eval_float(fb) if hasattr(v, "eval_float") else float(v)
            rmax = max(rmax, abs(est[A][B] - want))
    assert rmax < 1e-6
