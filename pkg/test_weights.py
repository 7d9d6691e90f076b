"""
Testes de q_kappa e variantes.
"""

import sys

import numpy as np
import pytest

from exceptions import DimensionError, DomainError, NotPositiveDefiniteError
from matvar import HermMatrix, MatVar, hermitian_inverse, log_det, random_pd_data
from samplers import make_rng
from weights import WeightVector, q_kappa, q_kappa_minors, q_kappa_of_inverse, q_star_kappa


def _random_pd(m: int, beta: int, seed: int) -> HermMatrix:
    return HermMatrix.from_matvar(MatVar.from_components(random_pd_data((), m, beta, make_rng(seed)), beta))


def test_identity_gives_zero_log():
    for funcao in (q_kappa, q_star_kappa, q_kappa_of_inverse):
        assert funcao(HermMatrix.identity(3, 2), [2.0, -1.0, 0.5]) == 0.0


def test_q_kappa_diagonal():
    assert q_kappa(HermMatrix.diag([2.0, 3.0]), [2.0, 1.0]) == pytest.approx(np.log(12.0), rel=1e-14)
    assert q_kappa_minors(HermMatrix.diag([2.0, 3.0]), [2.0, 1.0]) == pytest.approx(np.log(12.0), rel=1e-14)


def test_q_star_diagonal():
    assert q_star_kappa(HermMatrix.diag([2.0, 3.0]), [2.0, 1.0]) == pytest.approx(np.log(18.0), rel=1e-14)


def test_q_kappa_of_inverse_diagonal():
    esperado = 2.0 * np.log(0.5) + np.log(1.0 / 3.0)
    assert q_kappa_of_inverse(HermMatrix.diag([2.0, 3.0]), [2.0, 1.0]) == pytest.approx(esperado, rel=1e-14)


def test_q_kappa_of_inverse_matches_explicit_inverse():
    s = _random_pd(4, 2, 21)
    kappa = [1.5, 0.5, -0.25, -2.0]
    esperado = q_kappa(hermitian_inverse(s), kappa)
    assert q_kappa_of_inverse(s, kappa) == pytest.approx(esperado, rel=1e-9)


def test_constant_weight_is_power_of_det():
    s = _random_pd(3, 4, 2)
    assert q_kappa(s, [0.7, 0.7, 0.7]) == pytest.approx(0.7 * log_det(s), rel=1e-12)
    assert q_star_kappa(s, [0.7, 0.7, 0.7]) == pytest.approx(q_kappa(s, [0.7, 0.7, 0.7]), rel=1e-12)


def test_minors_agree_with_pivots():
    s = _random_pd(5, 1, 4)
    kappa = [3.0, 2.0, 2.0, 0.5, -1.0]
    assert q_kappa_minors(s, kappa) == pytest.approx(q_kappa(s, kappa), rel=1e-10)


def test_multiplicative_in_weights():
    s = _random_pd(3, 2, 6)
    k, t = np.array([1.0, 0.5, 0.0]), np.array([2.0, -1.0, -1.5])
    assert q_kappa(s, k + t) == pytest.approx(q_kappa(s, k) + q_kappa(s, t), rel=1e-10)


def test_errors():
    with pytest.raises(DimensionError):
        q_kappa(HermMatrix.identity(2, 1), [1.0, 2.0, 3.0])
    with pytest.raises(NotPositiveDefiniteError):
        q_kappa(HermMatrix.from_real([[1.0, 2.0], [2.0, 1.0]]), [1.0, 0.0])
    with pytest.raises(DomainError):
        WeightVector((1.0, np.inf))
    with pytest.raises(DimensionError):
        WeightVector(())


def test_weight_vector_helpers():
    kappa = WeightVector((3.0, 1.0, -2.0))
    assert kappa.reversed().k == (-2.0, 1.0, 3.0)
    assert (-kappa).k == (-3.0, -1.0, 2.0)
    assert kappa.total == 2.0
    assert kappa.is_nonincreasing()
    assert not kappa.reversed().is_nonincreasing()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
