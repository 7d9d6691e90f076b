"""
Testes das verificações numéricas (normalização, aderência, Jacobianos, leis conjuntas).
"""

import sys

import numpy as np
import pytest
from scipy import stats

from densities import BetaRieszParams, PearsonIIRieszParams
from distribution_spec import build_spec
from exceptions import ConjecturalOctonionError, DomainError
from matvar import MatVar, HermMatrix
from verify import (
    MC_GRID,
    VerificationReport,
    check_jacobian_hermitian,
    check_jacobian_linear,
    check_jacobian_wishart,
    check_normalization_1d,
    check_normalization_mc,
    check_properties,
    check_theorem1,
    check_theorem2,
    chi_square_gof,
    ks_test,
    mc_mean,
    normalization_grid,
    run_suite,
)


# Normalização

def test_normalization_1d_examples():
    for familia, variante, params in (
        ("riesz", "I", {"a": 1.0, "kappa": [1.0]}),
        ("pearson2_riesz", "I", {"nu": 2.0, "n": 1, "kappa": [0.0], "tau": [0.0]}),
        ("beta_riesz", "c", {"nu": 3.0, "n": 2, "kappa": [1.0], "tau": [1.0]}),
    ):
        relatorio = check_normalization_1d(build_spec(familia, variante, 1, params))
        assert relatorio.passed, relatorio.details
        assert relatorio.details["integral"] == pytest.approx(1.0, abs=1e-8)
        assert relatorio.nodes > 0


@pytest.mark.parametrize("beta", [1, 2])
def test_normalization_grid_passes(beta):
    grade = normalization_grid(beta)
    assert len(grade) == 28
    reprovados = [r.name for r in map(check_normalization_1d, grade) if not r.passed]
    assert reprovados == []


def test_normalization_1d_requires_scalar_case():
    with pytest.raises(DomainError):
        check_normalization_1d(build_spec("riesz", "I", 1, {"a": 3.0, "kappa": [0.0, 0.0]}))


def test_normalization_mc_pearson():
    familia, variante, params = MC_GRID[0]
    relatorio = check_normalization_mc(build_spec(familia, variante, 1, params), N=200_000, seed=3)
    estimativa, erro = relatorio.details["estimate"], relatorio.details["standard_error"]
    assert erro > 0.0
    assert abs(estimativa - 1.0) <= 5.0 * erro
    assert relatorio.sample_size == 200_000


@pytest.mark.parametrize("indice", range(1, len(MC_GRID)))
def test_normalization_mc_grid(indice):
    familia, variante, params = MC_GRID[indice]
    relatorio = check_normalization_mc(build_spec(familia, variante, 1, params), N=200_000, seed=20 + indice)
    estimativa, erro = relatorio.details["estimate"], relatorio.details["standard_error"]
    assert 0.0 < erro < 0.1
    assert abs(estimativa - 1.0) <= 5.0 * erro, (familia, variante, relatorio.details)


def test_normalization_mc_grid_families():
    assert {(f, v) for f, v, _ in MC_GRID} >= {
        ("pearson2_riesz", "I"), ("beta_riesz", "c"), ("beta_riesz", "k"), ("riesz", "I"), ("riesz", "II"),
    }
    assert next(p for f, v, p in MC_GRID if (f, v) == ("riesz", "I"))["kappa"] == [1.0, 0.0]


def test_normalization_mc_requires_m2_beta1():
    with pytest.raises(DomainError):
        check_normalization_mc(build_spec("riesz", "I", 2, {"a": 3.0, "kappa": [1.0, 0.0]}), N=1000)


# Aderência

def test_ks_uniform_passes():
    amostras = np.random.Generator(np.random.Philox(5)).random(100_000)
    relatorio = ks_test(amostras, stats.uniform.cdf)
    assert relatorio.passed
    assert relatorio.details["critical_value_5pct"] == pytest.approx(1.36 / np.sqrt(100_000))


def test_ks_constant_fails():
    relatorio = ks_test(np.full(1000, 0.5), stats.uniform.cdf)
    assert not relatorio.passed
    assert relatorio.statistic == pytest.approx(0.5)


def test_ks_requires_100_samples():
    with pytest.raises(DomainError):
        ks_test(np.linspace(0.0, 1.0, 99), stats.uniform.cdf)


def test_chi_square():
    amostras = np.random.Generator(np.random.Philox(6)).random(20_000)
    assert chi_square_gof(amostras, stats.uniform()).passed
    assert not chi_square_gof(amostras**2, stats.uniform()).passed
    with pytest.raises(DomainError):
        chi_square_gof(amostras[:10], stats.uniform())


# Jacobianos

def test_jacobian_linear_real_scalar():
    relatorio = check_jacobian_linear(1, 1, 1, MatVar.from_real([[2.0]]), MatVar.from_real([[3.0]]), N=10_000)
    assert relatorio.details["ratio"] == pytest.approx(6.0, rel=1e-12)
    assert relatorio.passed


def test_jacobian_linear_complex_scalar():
    um_mais_i = MatVar.from_components(np.array([[[1.0, 1.0]]]), 2)
    relatorio = check_jacobian_linear(1, 1, 2, um_mais_i, MatVar.from_real([[1.0]], 2), N=400_000)
    assert relatorio.details["ratio"] == pytest.approx(2.0, rel=0.01)
    assert relatorio.details["indistinguishable"]
    assert relatorio.passed


def test_jacobian_hermitian_diagonal():
    relatorio = check_jacobian_hermitian(2, 1, MatVar.from_real([[2.0, 0.0], [0.0, 1.0]]), N=10_000)
    assert relatorio.details["closed_form"] == pytest.approx(8.0)
    assert relatorio.details["ratio"] == pytest.approx(8.0, rel=1e-12)


def test_jacobian_singular():
    with pytest.raises(DomainError):
        check_jacobian_linear(1, 1, 1, MatVar.from_real([[0.0]]), MatVar.from_real([[1.0]]), N=1000)


def test_jacobian_wishart():
    relatorio = check_jacobian_wishart(1, 2, 1, N=200_000)
    assert relatorio.details["s_space"] == pytest.approx(np.pi, rel=1e-12)
    assert relatorio.passed
    with pytest.raises(ConjecturalOctonionError):
        check_jacobian_wishart(1, 2, 8, N=1000)


# Leis conjuntas

def _verdict_matches_thresholds(relatorio):
    d = relatorio.details
    dentro = d["ks_statistic"] <= d["ks_threshold"] and abs(d["correlation"]) <= d["correlation_threshold"]
    assert relatorio.passed == dentro


def test_theorem1_scalar_laws():
    for variante, k in (("I", 1.0), ("II", 0.5)):
        params = PearsonIIRieszParams(nu=4.0, n=2, kappa=[k], tau=[0.0], beta=1, variant=variante)
        relatorio = check_theorem1(params, N=100_000, seed=11)
        assert relatorio.details["ks_p_value"] > 1e-3, relatorio.details
        assert abs(relatorio.details["correlation"]) < 4.0 / np.sqrt(100_000)
        _verdict_matches_thresholds(relatorio)


def test_theorem1_thresholds_follow_sample_size():
    params = PearsonIIRieszParams(nu=3.0, n=1, kappa=[1.0], tau=[0.0], beta=1)
    for N in (2_000, 100_000):
        relatorio = check_theorem1(params, N=N, seed=5)
        assert relatorio.details["ks_threshold"] == pytest.approx(1.36 / np.sqrt(N))
        assert relatorio.details["correlation_threshold"] == pytest.approx(0.01 * np.sqrt(100_000 / N))
        _verdict_matches_thresholds(relatorio)
    assert check_theorem1(params, N=100_000, seed=5).details["ks_threshold"] < 0.0044


def test_theorem1_explicit_thresholds_override_defaults():
    tipo_i = PearsonIIRieszParams(nu=3.0, n=1, kappa=[1.0], tau=[0.0], beta=1)
    relatorio = check_theorem1(tipo_i, N=20_000, seed=6, ks_threshold=1e-4, corr_threshold=1.0)
    assert relatorio.details["ks_threshold"] == 1e-4
    assert relatorio.details["correlation_threshold"] == 1.0
    assert relatorio.statistic > 1.0 and not relatorio.passed


def test_theorem1_requires_standard_scalar_case():
    with pytest.raises(DomainError):
        check_theorem1(PearsonIIRieszParams(nu=4.0, n=2, kappa=[0.0, 0.0], tau=[0.0, 0.0], beta=1), N=1000)
    escalado = PearsonIIRieszParams(nu=4.0, n=1, kappa=[0.0], tau=[0.0], beta=1, xi=HermMatrix.from_real([[2.0]]))
    with pytest.raises(DomainError):
        check_theorem1(escalado, N=1000)


def test_theorem2_beta_law():
    params = BetaRieszParams(nu=3.0, n=2, kappa=[1.0], tau=[0.5], beta=1)
    relatorio = check_theorem2(params, N=100_000, seed=12)
    assert relatorio.passed
    assert (relatorio.details["beta_a"], relatorio.details["beta_b"]) == (1.5, 2.5)


def test_theorem2_threshold_scales():
    params = BetaRieszParams(nu=3.0, n=2, kappa=[1.0], tau=[0.5], beta=1)
    assert check_theorem2(params, N=100_000, seed=12).threshold == pytest.approx(0.006)
    assert check_theorem2(params, N=25_000, seed=12).threshold == pytest.approx(0.012)


# Propriedades

def test_properties_octonion():
    relatorios = check_properties(8)
    assert relatorios
    assert [r.name for r in relatorios if not r.passed] == []


def test_properties_real():
    relatorios = check_properties(1, instances=100)
    assert any(r.name.startswith("factorization/") for r in relatorios)
    assert any(r.name.startswith("q_kappa/") for r in relatorios)
    assert [r.name for r in relatorios if not r.passed] == []


# Monte-Carlo em blocos

def test_mc_mean_independent_of_thread_count(monkeypatch):
    def amostrar(rng, tamanho):
        return rng.random(tamanho)

    monkeypatch.setenv("RIESZ_MATVAR_THREADS", "1")
    um = mc_mean(amostrar, 250_000, 9)
    monkeypatch.setenv("RIESZ_MATVAR_THREADS", "4")
    quatro = mc_mean(amostrar, 250_000, 9)
    assert um == quatro
    assert um[0] == pytest.approx(0.5, abs=5.0 * um[1])


def test_mc_mean_requires_two_samples():
    with pytest.raises(DomainError):
        mc_mean(lambda rng, t: rng.random(t), 1, 0)


# Suítes e relatórios

def test_run_suite_errors():
    with pytest.raises(DomainError):
        run_suite("tudo")
    with pytest.raises(ConjecturalOctonionError):
        run_suite("normalization", beta=8)


def test_report_serialization():
    relatorio = VerificationReport(
        name="x", statistic=np.inf, threshold=1.0, passed=False, wall_time=0.5,
        details={"n": np.int64(3), "ok": np.bool_(True), "v": [np.float64(np.nan)]},
    )
    documento = relatorio.to_dict()
    assert documento["statistic"] == "inf"
    assert "wall_time" not in documento
    assert documento["details"] == {"n": 3, "ok": True, "v": ["nan"]}
    assert relatorio.to_dict(include_timing=True)["wall_time"] == 0.5


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
