"""
Testes das funções especiais (gama multivariada com peso, Pochhammer, c-beta, k-beta, Stiefel).
"""

import sys

import numpy as np
import pytest
from scipy.special import gammaln

from exceptions import DomainError
from special import (
    lgamma_m,
    log_c_beta,
    log_gamma_weighted,
    log_k_beta,
    log_stiefel_volume,
    pochhammer_weighted,
)


def test_lgamma_reduces_to_euler_gamma():
    assert lgamma_m(0.5, 1, 1) == pytest.approx(0.5 * np.log(np.pi), rel=1e-14)


def test_weighted_gamma_by_hand():
    # pi^{1/2} Gamma(3) Gamma(3/2) = pi
    assert log_gamma_weighted(2.0, [1.0, 0.0], 1) == pytest.approx(np.log(np.pi), rel=1e-14)


def test_minus_sign_scalar():
    assert log_gamma_weighted(3.5, [1.0], 2, "minus") == pytest.approx(gammaln(2.5), rel=1e-14)


def test_octonion_accepted_as_parameter():
    esperado = 4.0 * np.log(np.pi) + gammaln(5.0) + gammaln(1.0)
    assert lgamma_m(5.0, 2, 8) == pytest.approx(esperado, rel=1e-14)


def test_gamma_domain_error_names_index():
    with pytest.raises(DomainError, match="i=2"):
        lgamma_m(0.4, 2, 1)


def test_pochhammer():
    assert pochhammer_weighted(1.7, [0.0, 0.0], 2) == (0.0, 1.0)
    log_abs, sinal = pochhammer_weighted(3.0, [2.0], 1)
    assert sinal == 1.0 and log_abs == pytest.approx(np.log(12.0), rel=1e-14)
    log_abs, sinal = pochhammer_weighted(-0.5, [3.0], 1)
    assert sinal == -1.0 and log_abs == pytest.approx(np.log(0.375), rel=1e-14)
    assert pochhammer_weighted(-1.0, [3.0], 1) == (-np.inf, 0.0)
    log_abs, sinal = pochhammer_weighted(2.0, [0.5], 1)
    assert sinal == 1.0 and log_abs == pytest.approx(np.log(0.75 * np.sqrt(np.pi)), rel=1e-12)


def test_pochhammer_is_gamma_ratio():
    kappa = [3.0, 1.0, 0.0]
    log_abs, sinal = pochhammer_weighted(4.2, kappa, 2)
    assert sinal == 1.0
    esperado = log_gamma_weighted(4.2, kappa, 2) - lgamma_m(4.2, 3, 2)
    assert log_abs == pytest.approx(esperado, rel=1e-12)


def test_c_beta():
    assert log_c_beta(1.0, [0.0], 1.0, [0.0], 1, 1) == pytest.approx(0.0, abs=1e-14)
    assert log_c_beta(1.0, [1.0], 1.0, [0.0], 1, 1) == pytest.approx(np.log(0.5), rel=1e-14)
    with pytest.raises(DomainError):
        log_c_beta(0.2, [0.0, 0.0], 1.0, [0.0, 0.0], 2, 1)


def test_k_beta():
    assert log_k_beta(1.0, [0.0], 1.0, [0.0], 1, 1) == pytest.approx(0.0, abs=1e-14)
    assert log_k_beta(3.0, [1.0], 1.0, [0.0], 1, 1) == pytest.approx(np.log(0.5), rel=1e-14)
    with pytest.raises(DomainError):
        log_k_beta(1.0, [1.0], 1.0, [0.0], 1, 1)


def test_stiefel_volumes():
    assert np.exp(log_stiefel_volume(1, 2, 1)) == pytest.approx(2.0 * np.pi, rel=1e-12)
    assert np.exp(log_stiefel_volume(1, 3, 1)) == pytest.approx(4.0 * np.pi, rel=1e-12)
    assert np.exp(log_stiefel_volume(1, 4, 1)) == pytest.approx(2.0 * np.pi**2, rel=1e-12)
    assert np.exp(log_stiefel_volume(1, 1, 2)) == pytest.approx(2.0 * np.pi, rel=1e-12)
    with pytest.raises(DomainError):
        log_stiefel_volume(3, 2, 1)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
