"""Shared builders: exact curved metrics with polynomial inverses and a
deterministic RNG fixture."""

from fractions import Fraction

import pytest

from fivevec.connection import SForm
from fivevec.core5 import MetricG
from fivevec.poly import X, Poly4

ZERO = Poly4.zero()
ONE = Poly4.one()
ETA = (1, -1, -1, -1)


def unimodular_metric(entries):
    """g = L^T eta L for L = I + strictly-upper polynomial entries; det L = 1
    keeps the inverse polynomial, so everything downstream stays exact."""
    L = [[ONE if i == j else ZERO for j in range(4)] for i in range(4)]
    for (i, j), p in entries.items():
        L[i][j] = p
    g = [
        [
            sum(((L[k][i] * L[k][j]).scale(ETA[k]) for k in range(4)), ZERO)
            for j in range(4)
        ]
        for i in range(4)
    ]
    return MetricG(g)


def curved_models():
    """Three (metric, S-form) pairs mixing torsion slots and coordinate
    dependence differently."""
    half = Fraction(1, 2)
    third = Fraction(1, 3)
    gA = unimodular_metric({(0, 1): X[2], (1, 3): X[0].scale(half)})
    sA = SForm.from_entries(
        [
            (0, 1, 4, Poly4.const(third)),
            (2, 3, 0, Poly4.const(half)),
            (1, 2, 4, ONE),
        ]
    )
    gB = unimodular_metric({(0, 2): X[1], (2, 3): X[3].scale(third)})
    sB = SForm.from_entries(
        [
            (0, 3, 4, Poly4.const(half)),
            (1, 2, 2, Poly4.const(third)),
        ]
    )
    gC = unimodular_metric({(0, 3): X[1].scale(half), (1, 2): X[0]})
    sC = SForm.from_entries(
        [
            (0, 1, 1, ONE),
            (2, 3, 4, Poly4.const(-half)),
            (0, 2, 4, Poly4.const(third)),
        ]
    )
    return [(gA, sA), (gB, sB), (gC, sC)]


@pytest.fixture
def rng():
    import random

    return random.Random(20260826)
