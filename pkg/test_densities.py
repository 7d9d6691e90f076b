"""
Testes das log-densidades: reduções escalares conhecidas, suporte e locação-escala.
"""

import sys

import numpy as np
import pytest
from scipy import stats

from densities import (
    BetaRieszParams,
    KotzRieszParams,
    PearsonIIRieszParams,
    RieszParams,
    TransposedPearsonIIRieszParams,
    beta_riesz_logpdf,
    evaluate_beta_riesz,
    evaluate_pearson2_riesz,
    evaluate_pearson2_riesz_transposed,
    evaluate_riesz,
    kotz_riesz_logpdf,
    pearson2_riesz_logpdf,
    pearson2_riesz_transposed_logpdf,
    riesz_logpdf,
)
from exceptions import ConjecturalOctonionError, DomainError, NotPositiveDefiniteError
from matvar import HermMatrix, MatVar, conj_transpose, log_det


def _scalar(valor: float, beta: int = 1) -> MatVar:
    return MatVar.from_real([[valor]], beta)


def _herm(valor: float, beta: int = 1) -> HermMatrix:
    return HermMatrix.from_real([[valor]], beta)


# Riesz

def test_riesz_exponential_reduction():
    p = RieszParams(a=1.0, kappa=[0.0], beta=1)
    assert riesz_logpdf(_herm(1.0), p) == pytest.approx(-1.0, abs=1e-14)


def test_riesz_gamma_reduction():
    p = RieszParams(a=1.0, kappa=[1.0], beta=1)
    assert riesz_logpdf(_herm(2.0), p) == pytest.approx(np.log(2.0) - 2.0, abs=1e-14)


def test_riesz_scaled_matches_scipy_gamma():
    p = RieszParams(a=1.5, kappa=[0.5], beta=2, xi=_herm(2.0, 2))
    esperado = stats.gamma(2.0, scale=1.0).logpdf(0.7)
    assert riesz_logpdf(_herm(0.7, 2), p) == pytest.approx(esperado, rel=1e-12)


def test_riesz_type_ii_matches_scipy_gamma():
    p = RieszParams(a=3.0, kappa=[1.0], beta=1, xi=_herm(1.5), variant="II")
    esperado = stats.gamma(2.0, scale=1.5).logpdf(1.2)
    assert riesz_logpdf(_herm(1.2), p) == pytest.approx(esperado, rel=1e-12)


def test_riesz_variant_consistency_scalar():
    tipo_ii = RieszParams(a=2.5, kappa=[0.75], beta=4, variant="II")
    tipo_i = RieszParams(a=2.5, kappa=[-0.75], beta=4, variant="I")
    for v in (0.1, 0.9, 3.0):
        assert riesz_logpdf(_herm(v, 4), tipo_ii) == pytest.approx(riesz_logpdf(_herm(v, 4), tipo_i), abs=1e-10)


def test_riesz_support():
    p = RieszParams(a=2.0, kappa=[0.0, 0.0], beta=1)
    fora = HermMatrix.from_real([[1.0, 2.0], [2.0, 1.0]])
    valor = evaluate_riesz(fora, p)
    assert not valor.in_support and valor.logpdf == -np.inf
    with pytest.raises(NotPositiveDefiniteError):
        riesz_logpdf(fora, p)


def test_riesz_parameter_errors():
    with pytest.raises(DomainError):
        RieszParams(a=0.2, kappa=[0.0, 0.0], beta=1)
    with pytest.raises(DomainError):
        RieszParams(a=1.0, kappa=[1.0, 0.0], beta=1, variant="II")
    with pytest.raises(ConjecturalOctonionError):
        RieszParams(a=5.0, kappa=[0.0], beta=8)


def test_unordered_weights_warn():
    with pytest.warns(UserWarning, match="kappa"):
        RieszParams(a=3.0, kappa=[0.0, 1.0], beta=1)


# Kotz-Riesz

def test_kotz_normal_reduction():
    p = KotzRieszParams(kappa=[0.0], n=1, beta=1)
    assert kotz_riesz_logpdf(_scalar(0.0), p) == pytest.approx(-0.5 * np.log(np.pi), abs=1e-14)


def test_kotz_location_equivariance():
    mu = MatVar.from_real([[0.5, -1.0], [2.0, 0.0], [0.0, 0.3]])
    y = MatVar.from_real([[0.2, 0.1], [-0.4, 0.8], [0.3, -0.6]])
    centrado = KotzRieszParams(kappa=[1.0, 0.5], n=3, beta=1)
    deslocado = KotzRieszParams(kappa=[1.0, 0.5], n=3, beta=1, mu=mu)
    assert kotz_riesz_logpdf(y + mu, deslocado) == pytest.approx(kotz_riesz_logpdf(y, centrado), rel=1e-12)


# Pearson tipo II-Riesz

def test_pearson_uniform_reduction():
    p = PearsonIIRieszParams(nu=2.0, n=1, kappa=[0.0], tau=[0.0], beta=1)
    assert pearson2_riesz_logpdf(_scalar(0.3), p) == pytest.approx(np.log(0.5), abs=1e-14)


def test_pearson_out_of_support():
    p = PearsonIIRieszParams(nu=3.0, n=1, kappa=[1.0], tau=[0.0], beta=1)
    for r in (1.5, 1.0, -1.0):
        valor = evaluate_pearson2_riesz(_scalar(r), p)
        assert not valor.in_support
        assert valor.logpdf == -np.inf


def test_pearson_location_scale_consistency():
    omega = HermMatrix.from_real([[2.0, 0.3], [0.3, 1.0]])
    xi = HermMatrix.from_real([[1.5, 0.2], [0.2, 1.0]])
    mu = MatVar.from_real([[0.1, -0.2], [0.4, 0.0]])
    geral = PearsonIIRieszParams(nu=4.0, n=2, kappa=[1.0, 0.0], tau=[0.5, 0.0], beta=1, mu=mu, omega=omega, xi=xi)
    padrao = PearsonIIRieszParams(nu=4.0, n=2, kappa=[1.0, 0.0], tau=[0.5, 0.0], beta=1)
    r = MatVar.from_real([[0.1, 0.2], [-0.1, 0.3]])
    q = MatVar(geral.location_scale_data(r.data), r.tag)
    esperado = pearson2_riesz_logpdf(r, padrao) + 0.5 * 2 * log_det(omega) - 0.5 * 2 * log_det(xi)
    assert pearson2_riesz_logpdf(q, geral) == pytest.approx(esperado, rel=1e-10)


def test_type_ii_scale_uses_standardized_matrix():
    padrao = PearsonIIRieszParams(nu=4.0, n=2, kappa=[0.5], tau=[0.0], beta=1, variant="II")
    escalado = PearsonIIRieszParams(nu=4.0, n=2, kappa=[0.5], tau=[0.0], beta=1, variant="II", xi=_herm(2.0))
    r = MatVar.from_real([[0.3], [-0.2]])
    q = MatVar.from_real(np.sqrt(2.0) * np.array([[0.3], [-0.2]]))
    # -(n beta/2) log|Xi|
    assert pearson2_riesz_logpdf(q, escalado) == pytest.approx(pearson2_riesz_logpdf(r, padrao) - np.log(2.0), rel=1e-12)
    k_padrao = BetaRieszParams(nu=4.0, n=3, kappa=[1.0], tau=[0.5], beta=1, variant="k")
    k_escalado = BetaRieszParams(nu=4.0, n=3, kappa=[1.0], tau=[0.5], beta=1, variant="k", theta=_herm(2.0))
    esperado = beta_riesz_logpdf(_herm(0.4), k_padrao) - np.log(2.0)
    assert beta_riesz_logpdf(_herm(0.8), k_escalado) == pytest.approx(esperado, abs=1e-12)


def test_transposed_square_matches_conjugate_transpose():
    transposta = TransposedPearsonIIRieszParams(a=3.0, m=2, kappa1=[0.5, 0.5], tau1=[0.0, 0.0], beta=2)
    pearson = PearsonIIRieszParams(nu=3.0, n=2, kappa=[0.5, 0.5], tau=[0.0, 0.0], beta=2)
    dados = np.zeros((2, 2, 2))
    dados[..., 0] = [[0.2, -0.1], [0.3, 0.1]]
    dados[..., 1] = [[0.05, 0.1], [-0.2, 0.0]]
    q1 = MatVar.from_components(dados, 2)
    esperado = pearson2_riesz_logpdf(conj_transpose(q1), pearson)
    assert pearson2_riesz_transposed_logpdf(q1, transposta) == pytest.approx(esperado, rel=1e-12)


def test_transposed_out_of_support():
    p = TransposedPearsonIIRieszParams(a=2.0, m=2, kappa1=[0.0], tau1=[0.0], beta=1)
    valor = evaluate_pearson2_riesz_transposed(MatVar.from_real([[3.0, -4.0]]), p)
    assert not valor.in_support


# beta-Riesz

def test_beta_uniform_reduction():
    p = BetaRieszParams(nu=2.0, n=2, kappa=[0.0], tau=[0.0], beta=1)
    assert beta_riesz_logpdf(_herm(0.5), p) == pytest.approx(0.0, abs=1e-14)


def test_beta_weighted_matches_scipy_beta():
    p = BetaRieszParams(nu=3.0, n=2, kappa=[1.0], tau=[1.0], beta=1)
    assert beta_riesz_logpdf(_herm(0.3), p) == pytest.approx(stats.beta(2.0, 2.5).logpdf(0.3), rel=1e-12)


def test_beta_k_variant_scalar():
    p = BetaRieszParams(nu=4.0, n=3, kappa=[1.0], tau=[0.5], beta=1, variant="k")
    assert beta_riesz_logpdf(_herm(0.4), p) == pytest.approx(0.0, abs=1e-12)


def test_beta_scaling_change_of_variables():
    padrao = BetaRieszParams(nu=3.0, n=2, kappa=[0.5], tau=[0.0], beta=1)
    escalado = BetaRieszParams(nu=3.0, n=2, kappa=[0.5], tau=[0.0], beta=1, theta=_herm(2.0))
    esperado = beta_riesz_logpdf(_herm(0.35), padrao) - np.log(2.0)
    assert beta_riesz_logpdf(_herm(0.7), escalado) == pytest.approx(esperado, rel=1e-12)


def test_beta_requires_n_at_least_m():
    with pytest.raises(DomainError, match="n >= m"):
        BetaRieszParams(nu=4.0, n=1, kappa=[0.0, 0.0], tau=[1.0, 1.0], beta=1)


def test_beta_support():
    p = BetaRieszParams(nu=3.0, n=2, kappa=[0.0, 0.0], tau=[0.0, 0.0], beta=1)
    assert not evaluate_beta_riesz(HermMatrix.diag([0.5, 1.2]), p).in_support
    assert evaluate_beta_riesz(HermMatrix.diag([0.5, 0.2]), p).in_support


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
