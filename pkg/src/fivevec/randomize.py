"""Deterministic rational sampling for verification batteries.

Everything here is driven by ``random.Random(seed)`` so a fixed seed
reproduces the exact same charts, points, and fields byte for byte.
Lorentz matrices are built from rational boost/rotation generators, so
pseudo-orthogonality is exact, never approximate.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .poly import Poly4, Point4, X, ZERO

# (cosh, sinh) pairs with cosh^2 - sinh^2 = 1
BOOSTS = [
    (Fraction(5, 4), Fraction(3, 4)),
    (Fraction(13, 12), Fraction(5, 12)),
    (Fraction(17, 15), Fraction(8, 15)),
    (Fraction(25, 24), Fraction(7, 24)),
]

# (cos, sin) pairs on the rational circle
ROTATIONS = [
    (Fraction(3, 5), Fraction(4, 5)),
    (Fraction(5, 13), Fraction(12, 13)),
    (Fraction(8, 17), Fraction(15, 17)),
]


def rational(rng: random.Random, span: int = 6) -> Fraction:
    num = rng.randint(-span, span)
    den = rng.randint(1, 4)
    return Fraction(num, den)


def point(rng: random.Random, span: int = 6) -> Point4:
    return tuple(rational(rng, span) for _ in range(4))


def _eye4():
    return [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]


def _mul4(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(4)) for j in range(4)] for i in range(4)]


def _boost(axis: int, ch: Fraction, sh: Fraction):
    M = _eye4()
    M[0][0] = ch
    M[axis][axis] = ch
    M[0][axis] = sh
    M[axis][0] = sh
    return M


def _rotation(i: int, j: int, c: Fraction, s: Fraction):
    M = _eye4()
    M[i][i] = c
    M[j][j] = c
    M[i][j] = -s
    M[j][i] = s
    return M


def lorentz(rng: random.Random, factors: int = 3):
    """Random exact Lorentz matrix: a product of rational boosts,
    rotations, and spatial reflections."""
    M = _eye4()
    for _ in range(factors):
        kind = rng.randrange(3)
        if kind == 0:
            ch, sh = rng.choice(BOOSTS)
            if rng.random() < 0.5:
                sh = -sh
            M = _mul4(M, _boost(rng.randint(1, 3), ch, sh))
        elif kind == 1:
            c, s = rng.choice(ROTATIONS)
            if rng.random() < 0.5:
                s = -s
            i = rng.randint(1, 2)
            j = rng.randint(i + 1, 3)
            M = _mul4(M, _rotation(i, j, c, s))
        else:
            R = _eye4()
            ax = rng.randint(1, 3)
            R[ax][ax] = Fraction(-1)
            M = _mul4(M, R)
    return M


def translation(rng: random.Random, span: int = 4):
    return tuple(rational(rng, span) for _ in range(4))


def poly(rng: random.Random, degree: int = 2, terms: int = 3) -> Poly4:
    """Small random polynomial in x0..x3 with rational coefficients."""
    out = ZERO
    for _ in range(terms):
        t = Poly4.const(rational(rng, 5))
        for _ in range(rng.randint(0, degree)):
            t = t * X[rng.randrange(4)]
        out = out + t
    return out


def fivevec_components(rng: random.Random, degree: int = 1):
    return tuple(poly(rng, degree=degree, terms=2) for _ in range(5))
