from fractions import Fraction

from fivevec.exactnum import CNum, SqrtNum
from fivevec.matrix import (
    frac_det,
    frac_inverse,
    mat_mul,
    poly_inverse,
    ring_det,
    transpose,
)
from fivevec.poly import X, Poly4


def test_sqrtnum_arithmetic():
    r2 = SqrtNum.sqrt(2)
    assert (r2 * r2 - SqrtNum.of(2)).is_zero()
    r8 = SqrtNum.sqrt(8)
    assert (r8 - r2 * SqrtNum.of(2)).is_zero()
    assert SqrtNum.of(Fraction(3, 4)).is_rational()
    assert SqrtNum.of(Fraction(3, 4)).rational_value() == Fraction(3, 4)
    assert not r2.is_rational()


def test_sqrtnum_mixed_terms():
    v = SqrtNum.sqrt(2) + SqrtNum.sqrt(3)
    sq = v * v  # 5 + 2*sqrt(6)
    assert ((sq - SqrtNum.of(5)) * (sq - SqrtNum.of(5)) - SqrtNum.of(24)).is_zero()


def test_cnum_field_ops():
    z = CNum(Fraction(1, 2), Fraction(-3))
    w = CNum.of(2) + CNum.I
    assert ((z * w).conj() - z.conj() * w.conj()).is_zero()
    assert (CNum.I * CNum.I + CNum.of(1)).is_zero()
    assert not z.is_zero()


def test_frac_inverse_roundtrip():
    M = [[Fraction(2), Fraction(1), Fraction(0)],
         [Fraction(0), Fraction(1), Fraction(3)],
         [Fraction(1), Fraction(0), Fraction(1)]]
    Minv = frac_inverse(M)
    eye = mat_mul(M, Minv)
    assert eye == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    assert frac_det(M) != 0


def test_poly_inverse_unimodular():
    one, zero = Poly4.one(), Poly4.zero()
    M = [[one, X[2], zero], [zero, one, X[0]], [zero, zero, one]]
    assert (ring_det(M) - one).is_zero()
    Minv = poly_inverse(M)
    eye = mat_mul(M, Minv)
    for i in range(3):
        for j in range(3):
            want = one if i == j else zero
            assert (eye[i][j] - want).is_zero()


def test_transpose():
    M = [[1, 2], [3, 4], [5, 6]]
    assert transpose(M) == [[1, 3, 5], [2, 4, 6]]
