"""
Testes da aritmética escalar das álgebras de divisão.
"""

import sys

import numpy as np
import pytest

from algebra import AlgebraTag, Scalar, conj, mul, mul_array, norm_sq, norm_sq_array, structure_constants
from exceptions import AlgebraMismatchError, ConjecturalOctonionError, DimensionError
from samplers import make_rng


def test_real_product():
    assert mul(Scalar.of(2.0, 1), Scalar.of(3.0, 1)) == Scalar.of(6.0, 1)


def test_quaternion_units_do_not_commute():
    i, j, k = (Scalar.basis(4, idx) for idx in (1, 2, 3))
    assert i * j == k
    assert j * i == -k


def test_complex_product_with_conjugate():
    z = Scalar.of([1.0, 1.0], 2)
    assert z * conj(z) == Scalar.of(2.0, 2)


def test_conjugation():
    assert conj(Scalar.of([1.0, 1.0], 2)) == Scalar.of([1.0, -1.0], 2)
    assert conj(Scalar.of(5.0, 1)) == Scalar.of(5.0, 1)
    assert conj(Scalar.of([1.0, 2.0, 3.0, 4.0], 4)) == Scalar.of([1.0, -2.0, -3.0, -4.0], 4)


def test_norm_sq():
    assert norm_sq(Scalar.of([3.0, 4.0], 2)) == 25.0
    assert norm_sq(Scalar.of([1.0, 1.0, 1.0, 1.0], 4)) == 4.0
    assert norm_sq(Scalar.of(-2.0, 1)) == 4.0


def test_mixed_algebras_rejected():
    with pytest.raises(AlgebraMismatchError):
        mul(Scalar.of(1.0, 2), Scalar.of(1.0, 4))


def test_invalid_beta():
    with pytest.raises(DimensionError):
        AlgebraTag(3)
    with pytest.raises(DimensionError):
        Scalar(np.zeros(3), AlgebraTag(4))


def test_octonion_is_scalar_only():
    AlgebraTag(4).require_matrix_level()
    with pytest.raises(ConjecturalOctonionError):
        AlgebraTag(8).require_matrix_level()


@pytest.mark.parametrize("beta", [1, 2, 4, 8])
def test_norm_is_multiplicative(beta):
    rng = make_rng(11)
    x, y = rng.standard_normal((2, 1000, beta))
    produto = norm_sq_array(mul_array(x, y, beta))
    np.testing.assert_allclose(produto, norm_sq_array(x) * norm_sq_array(y), rtol=1e-12)


def test_octonions_are_not_associative():
    rng = make_rng(5)
    x, y, z = rng.standard_normal((3, 8))
    esquerda = mul_array(mul_array(x, y, 8), z, 8)
    direita = mul_array(x, mul_array(y, z, 8), 8)
    assert np.max(np.abs(esquerda - direita)) > 1e-3


def test_structure_constants_read_only():
    tabela = structure_constants(4)
    assert tabela.shape == (4, 4, 4)
    with pytest.raises(ValueError):
        tabela[0, 0, 0] = 2.0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
