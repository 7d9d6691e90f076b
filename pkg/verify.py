"""
Verificações numéricas das densidades, geradores e identidades.

Cada verificação devolve um VerificationReport (estatística, limiar, aprovação).
Normalização em m = 1 usa quadratura determinística; em m = 2 (beta = 1) usa
Monte-Carlo em blocos de tamanho fixo (config.MC_CHUNK), cada bloco com seu
próprio fluxo Philox (semente XOR índice do bloco). Os blocos podem rodar em
paralelo, mas a redução é feita sempre na ordem dos blocos, então o resultado
não depende do número de workers.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from algebra import AlgebraTag, conj_array, mul_array, norm_sq_array
from config import DEFAULT_SEED, MC_CHUNK, get_thread_count
from densities import BetaRieszParams, PearsonIIRieszParams
from distribution_spec import DistributionSpec, build_spec
from exceptions import DimensionError, DomainError
from matvar import (
    MatVar,
    cholesky_data,
    conj_transpose_data,
    from_hermitian_coordinates_data,
    gram_data,
    hermitian_basis_data,
    hermitian_coordinates_data,
    hermitize_data,
    identity_data,
    log_det_from_factor,
    log_pivots_from_factor,
    matmul_data,
    matrix_basis_data,
    random_pd_data,
    real_representation,
    tri_inverse_data,
    upper_lower_factor,
)
from quadrature import QuadratureResult, integrate, integrate_half_line, radial_integral
from samplers import beta_riesz_rvs, make_rng, pearson2_riesz_joint_rvs, stream_rng
from special import lgamma_m, log_c_beta, log_gamma_weighted, log_stiefel_volume, pochhammer_weighted
from weights import log_q_data, log_q_from_log_pivots, log_q_inverse_data

logger = logging.getLogger(__name__)

SUITES = ("normalization", "jacobians", "theorem1", "properties", "all")

KS_THRESHOLD = 0.006
CORR_THRESHOLD = 0.01
# tamanho de referência dos limiares fixos acima
LAW_REFERENCE_N = 100_000
MC_SIGMAS = 3.0
JACOBIAN_TOLERANCE = 0.01
NORMALIZATION_TOLERANCE = 1e-8


@dataclass
class VerificationReport:
    """Resultado de uma verificação; passed vale exatamente statistic <= threshold."""

    name: str
    statistic: float
    threshold: float
    passed: bool
    sample_size: Optional[int] = None
    nodes: Optional[int] = None
    seed: Optional[int] = None
    wall_time: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        documento = {
            "name": self.name,
            "statistic": _json_number(self.statistic),
            "threshold": _json_number(self.threshold),
            "passed": self.passed,
            "sample_size": self.sample_size,
            "nodes": self.nodes,
            "seed": self.seed,
            "details": {chave: _json_value(valor) for chave, valor in self.details.items()},
        }
        if include_timing:
            documento["wall_time"] = self.wall_time
        return documento


def _json_number(x: float) -> Any:
    x = float(x)
    return x if np.isfinite(x) else str(x)


def _json_value(valor: Any) -> Any:
    if isinstance(valor, (float, np.floating)):
        return _json_number(valor)
    if isinstance(valor, np.integer):
        return int(valor)
    if isinstance(valor, np.bool_):
        return bool(valor)
    if isinstance(valor, dict):
        return {k: _json_value(v) for k, v in valor.items()}
    if isinstance(valor, (list, tuple)):
        return [_json_value(v) for v in valor]
    return valor


def _report(name: str, statistic: float, threshold: float, inicio: float, **kwargs) -> VerificationReport:
    statistic = float(statistic)
    passed = bool(np.isfinite(statistic) and statistic <= threshold)
    relatorio = VerificationReport(
        name=name,
        statistic=statistic,
        threshold=float(threshold),
        passed=passed,
        wall_time=time.perf_counter() - inicio,
        **kwargs,
    )
    logger.info("%s %s: estatística %.4g (limiar %.4g)", "✅" if passed else "❌", name, statistic, threshold)
    return relatorio


# ---------------------------------------------------------------------------
# Monte-Carlo em blocos
# ---------------------------------------------------------------------------

ChunkSampler = Callable[[np.random.Generator, int], np.ndarray]


def _chunk_sizes(total: int) -> List[int]:
    cheios, resto = divmod(int(total), MC_CHUNK)
    return [MC_CHUNK] * cheios + ([resto] if resto else [])


def _chunk_moments(amostrar: ChunkSampler, rng: np.random.Generator, tamanho: int) -> Tuple[int, float, float]:
    valores = np.asarray(amostrar(rng, tamanho), dtype=float)
    media = float(np.mean(valores))
    return valores.size, media, float(np.sum((valores - media) ** 2))


def mc_mean(amostrar: ChunkSampler, total: int, seed: int) -> Tuple[float, float]:
    """
    Média e erro padrão de amostrar(rng, tamanho) sobre total sorteios.

    Os blocos são combinados em ordem fixa (fórmula de Chan para média e
    soma de quadrados), independente da ordem de término das threads.

    Raises:
        DomainError: Se total < 2
    """
    if total < 2:
        raise DomainError(f"Monte-Carlo precisa de ao menos 2 amostras, recebido {total}.")
    tamanhos = _chunk_sizes(total)
    workers = max(1, min(get_thread_count(), len(tamanhos)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futuros = [pool.submit(_chunk_moments, amostrar, stream_rng(seed, i), t) for i, t in enumerate(tamanhos)]
        blocos = [f.result() for f in futuros]
    n, media, m2 = blocos[0]
    for nb, mb, m2b in blocos[1:]:
        delta = mb - media
        total_n = n + nb
        media += delta * nb / total_n
        m2 += m2b + delta**2 * n * nb / total_n
        n = total_n
    return media, float(np.sqrt(m2 / (n - 1) / n))


# ---------------------------------------------------------------------------
# Normalização
# ---------------------------------------------------------------------------

def _axis_points(rho: np.ndarray, shape: Tuple[int, int], beta: int) -> np.ndarray:
    pontos = np.zeros(rho.shape + shape + (beta,))
    pontos[..., 0, 0, 0] = rho
    return pontos


def _is_isotropic(data: np.ndarray, beta: int) -> bool:
    dim = data.shape[0]
    return bool(np.allclose(data, data[0, 0, 0] * identity_data(dim, beta), rtol=0.0, atol=1e-14))


def _density_on_axis(spec: DistributionSpec) -> Callable[[np.ndarray], np.ndarray]:
    def f(rho: np.ndarray) -> np.ndarray:
        valor, ok = spec.log_density_data(_axis_points(np.asarray(rho, dtype=float), spec.point_shape, spec.beta))
        return np.where(ok, np.exp(valor), 0.0)

    return f


def _pearson_radius(p: PearsonIIRieszParams) -> float:
    """Raio do suporte quando Omega = c I, Xi escalar e mu = 0."""
    if np.any(p.mu.data) or not _is_isotropic(p.omega.data, p.beta):
        raise DomainError("Quadratura radial exige mu = 0 e Omega proporcional à identidade.")
    return float(np.sqrt(p.xi.data[0, 0, 0] / p.omega.data[0, 0, 0]))


def _normalization_integral(spec: DistributionSpec) -> Tuple[QuadratureResult, Dict[str, Any]]:
    p, family, beta = spec.params, spec.family, spec.beta
    f = _density_on_axis(spec)
    if family == "riesz":
        if p.m != 1:
            raise DomainError("Quadratura de Riesz exige m = 1.")
        return integrate_half_line(f), {"reduction": "half_line"}
    if family == "beta_riesz":
        if p.m != 1:
            raise DomainError("Quadratura beta-Riesz exige m = 1.")
        return integrate(f, 0.0, float(p.theta.data[0, 0, 0])), {"reduction": "interval"}
    if family == "kotz_riesz":
        if p.m != 1:
            raise DomainError("Quadratura de Kotz-Riesz exige m = 1.")
        if np.any(p.mu.data) or not _is_isotropic(p.theta.data, beta):
            raise DomainError("Quadratura radial exige mu = 0 e Theta proporcional à identidade.")
        dim = p.n * beta
        return radial_integral(f, dim), {"reduction": "radial", "radial_dimension": dim}
    if family == "pearson2_riesz":
        if p.m != 1:
            raise DomainError("Quadratura de Pearson tipo II-Riesz exige m = 1.")
        dim = p.n * beta
        return radial_integral(f, dim, 0.0, _pearson_radius(p)), {"reduction": "radial", "radial_dimension": dim}
    if p.n != 1:
        raise DomainError("Quadratura da forma transposta exige n = 1.")
    dim = p.m * beta
    return radial_integral(f, dim, 0.0, _pearson_radius(p.as_pearson())), {"reduction": "radial", "radial_dimension": dim}


def check_normalization_1d(spec: DistributionSpec, tol: float = NORMALIZATION_TOLERANCE) -> VerificationReport:
    """
    Integra exp(logpdf) no suporte por quadratura adaptativa (m = 1) e compara com 1.

    Famílias matriciais usam a redução radial
    ∫ f = Vol(V_{1,n}) ∫ f(rho) rho^{n beta - 1} d rho, válida com mu = 0 e escala
    de linhas proporcional à identidade.

    Returns:
        Relatório com estatística |integral - 1|; quadratura sem convergência
        reprova com o motivo em details["reason"]

    Raises:
        DomainError: Se a família/parâmetros não admitirem a redução unidimensional
    """
    inicio = time.perf_counter()
    nome = f"normalization_1d/{spec.family}/{spec.variant}/beta={spec.beta}"
    resultado, detalhes = _normalization_integral(spec)
    detalhes.update(
        {
            "integral": resultado.value,
            "error_estimate": resultado.error,
            "converged": resultado.converged,
            "spec": spec.to_document(),
        }
    )
    estatistica = abs(resultado.value - 1.0)
    if not resultado.converged or not np.isfinite(resultado.value):
        detalhes["reason"] = "quadratura não convergiu: integrando singular demais ou não integrável"
        estatistica = np.inf
    return _report(nome, estatistica, tol, inicio, nodes=resultado.nodes, details=detalhes)


def _box_sampler(spec: DistributionSpec) -> Tuple[ChunkSampler, str]:
    """Amostrador de pesos w = f(x)/g(x) para a verificação de Monte-Carlo em m = 2."""
    p, beta, m = spec.params, spec.beta, spec.params.m
    if spec.family == "pearson2_riesz":
        n = p.n
        volume = 2.0 ** (n * m * beta)
        log_jac = -m * beta / 2.0 * float(log_det_from_factor(p._u_omega)) + n * beta / 2.0 * float(log_det_from_factor(p._u_xi))

        def pesos(rng: np.random.Generator, tamanho: int) -> np.ndarray:
            r = rng.uniform(-1.0, 1.0, size=(tamanho, n, m, beta))
            valor, ok = spec.log_density_data(p.location_scale_data(r))
            return np.where(ok, np.exp(valor + log_jac), 0.0) * volume

        return pesos, f"uniforme em [-1, 1]^{n * m * beta} (R padrão)"

    dim_herm = (m - 1) * beta / 2.0 + 1.0
    if spec.family == "beta_riesz":
        u = p._u_theta
        log_jac = dim_herm * float(log_det_from_factor(u))

        def pesos(rng: np.random.Generator, tamanho: int) -> np.ndarray:
            coords = np.concatenate(
                [rng.uniform(0.0, 1.0, size=(tamanho, m)), rng.uniform(-0.5, 0.5, size=(tamanho, m * (m - 1) // 2 * beta))],
                axis=-1,
            )
            b = from_hermitian_coordinates_data(coords, m, beta)
            c = matmul_data(matmul_data(conj_transpose_data(u, beta), b, beta), u, beta)
            valor, ok = spec.log_density_data(hermitize_data(c, beta))
            return np.where(ok, np.exp(valor + log_jac), 0.0)

        return pesos, "uniforme: diagonal em [0, 1], fora da diagonal em [-1/2, 1/2]"

    if spec.family == "riesz":
        if m != 2 or beta != 1:
            raise DomainError("Proposta de Riesz implementada para m = 2, beta = 1.")
        xi = p.xi
        # V = F A F*: F = u(Xi)* no tipo I, F = L (Xi = L L*) no tipo II
        if p.variant == "I":
            fator = conj_transpose_data(cholesky_data(xi.data, beta)[0], beta)
        else:
            fator = upper_lower_factor(xi).data
        fator_conj = conj_transpose_data(fator, beta)
        log_jac = dim_herm * float(log_det_from_factor(cholesky_data(xi.data, beta)[0]))
        taxa = beta / 2.0

        def pesos(rng: np.random.Generator, tamanho: int) -> np.ndarray:
            diag = rng.exponential(scale=1.0 / taxa, size=(tamanho, 2))
            raio = np.sqrt(diag[:, 0] * diag[:, 1])
            fora = rng.uniform(-1.0, 1.0, size=tamanho) * raio
            a = from_hermitian_coordinates_data(np.column_stack([diag, fora]), 2, 1)
            log_g = 2.0 * np.log(taxa) - taxa * diag.sum(axis=-1) - np.log(2.0 * raio)
            v = matmul_data(matmul_data(fator, a, beta), fator_conj, beta)
            valor, ok = spec.log_density_data(hermitize_data(v, beta))
            return np.where(ok, np.exp(valor + log_jac - log_g), 0.0)

        return pesos, "diagonal Exponencial(beta/2), fora da diagonal Uniforme(±sqrt(a11 a22))"

    raise DomainError(f"Monte-Carlo de normalização não disponível para a família {spec.family}.")


def check_normalization_mc(spec: DistributionSpec, N: int = 1_000_000, seed: int = DEFAULT_SEED) -> VerificationReport:
    """
    Normalização em m = 2, beta = 1 por Monte-Carlo.

    Pearson e beta-Riesz usam proposta uniforme numa caixa que contém o suporte
    compacto (na variável padronizada, com o Jacobiano da locação-escala); Riesz
    usa proposta produto Exponencial x Uniforme e pesos de importância.
    Aprovado se |estimativa - 1| <= 3 erros padrão.

    Raises:
        DomainError: Fora de m = 2, beta = 1, família sem proposta ou pesos todos nulos
    """
    inicio = time.perf_counter()
    if spec.params.m != 2 or spec.beta != 1:
        raise DomainError(f"Monte-Carlo de normalização exige m = 2 e beta = 1; recebido m={spec.params.m}, beta={spec.beta}.")
    pesos, proposta = _box_sampler(spec)
    estimativa, erro_padrao = mc_mean(pesos, N, seed)
    if erro_padrao == 0.0 and estimativa == 0.0:
        raise DomainError("Proposta degenerada: todos os pesos de importância são nulos.")
    estatistica = abs(estimativa - 1.0) / erro_padrao if erro_padrao > 0.0 else np.inf
    nome = f"normalization_mc/{spec.family}/{spec.variant}/beta={spec.beta}"
    detalhes = {"estimate": estimativa, "standard_error": erro_padrao, "proposal": proposta, "spec": spec.to_document()}
    return _report(nome, estatistica, MC_SIGMAS, inicio, sample_size=N, seed=seed, details=detalhes)


# ---------------------------------------------------------------------------
# Aderência
# ---------------------------------------------------------------------------

def ks_test(
    samples: Sequence[float],
    cdf: Callable[[np.ndarray], np.ndarray],
    threshold: float = KS_THRESHOLD,
    name: str = "ks",
) -> VerificationReport:
    """
    Kolmogorov-Smirnov bilateral (scipy.stats.kstest) contra uma CDF contínua.

    Returns:
        Relatório com a estatística D, p-valor assintótico e o valor crítico 1.36/sqrt(N)

    Raises:
        DomainError: Com menos de 100 amostras
    """
    inicio = time.perf_counter()
    amostras = np.asarray(samples, dtype=float).ravel()
    if amostras.size < 100:
        raise DomainError(f"KS exige ao menos 100 amostras, recebido {amostras.size}.")
    resultado = stats.kstest(amostras, cdf)
    detalhes = {"p_value": float(resultado.pvalue), "critical_value_5pct": ks_critical_value(amostras.size)}
    return _report(name, resultado.statistic, threshold, inicio, sample_size=int(amostras.size), details=detalhes)


def chi_square_gof(samples: Sequence[float], dist: Any, bins: int = 50, alpha: float = 1e-3, name: str = "chi2") -> VerificationReport:
    """
    Qui-quadrado em classes equiprováveis de uma distribuição congelada do scipy.

    Aprovado se a estatística não passar do quantil 1 - alpha da qui-quadrado com bins - 1 graus.
    """
    inicio = time.perf_counter()
    amostras = np.asarray(samples, dtype=float).ravel()
    if amostras.size < 5 * bins:
        raise DomainError(f"Qui-quadrado com {bins} classes exige ao menos {5 * bins} amostras.")
    cortes = dist.ppf(np.linspace(0.0, 1.0, bins + 1)[1:-1])
    observados = np.bincount(np.searchsorted(cortes, amostras, side="right"), minlength=bins)
    esperados = np.full(bins, amostras.size / bins)
    resultado = stats.chisquare(observados, esperados)
    limiar = float(stats.chi2.ppf(1.0 - alpha, bins - 1))
    return _report(
        name, resultado.statistic, limiar, inicio,
        sample_size=int(amostras.size), details={"p_value": float(resultado.pvalue), "bins": bins},
    )


# ---------------------------------------------------------------------------
# Jacobianos
# ---------------------------------------------------------------------------

def _volume_ratio(matriz: np.ndarray, N: int, seed: int) -> Tuple[float, float]:
    """
    Volume da imagem do cubo unitário por acerto-ou-erro na caixa envolvente.

    Raises:
        DomainError: Se a aplicação for singular
    """
    d = matriz.shape[0]
    if np.linalg.matrix_rank(matriz) < d:
        raise DomainError("Aplicação linear singular: a razão de volumes é zero.")
    inferior = np.minimum(matriz, 0.0).sum(axis=1)
    superior = np.maximum(matriz, 0.0).sum(axis=1)
    volume_caixa = float(np.prod(superior - inferior))
    inversa = np.linalg.inv(matriz)

    def dentro(rng: np.random.Generator, tamanho: int) -> np.ndarray:
        y = inferior + (superior - inferior) * rng.random((tamanho, d))
        x = y @ inversa.T
        return np.all((x >= 0.0) & (x <= 1.0), axis=-1).astype(float)

    fracao, erro = mc_mean(dentro, N, seed)
    return fracao * volume_caixa, erro * volume_caixa


def _log_det_gram(a: np.ndarray, beta: int) -> float:
    t, ok = cholesky_data(gram_data(a, beta), beta)
    if not bool(ok):
        raise DomainError("Matriz singular na verificação de Jacobiano.")
    return float(log_det_from_factor(t))


def _square_data(a: MatVar, dim: int, nome: str) -> np.ndarray:
    a.tag.require_matrix_level("verificação de Jacobiano")
    if a.shape != (dim, dim):
        raise DimensionError(f"{nome} deve ser {dim}x{dim}, recebido {a.rows}x{a.cols}.")
    return a.data


def check_jacobian_linear(n: int, m: int, beta: int, A: MatVar, B: MatVar, N: int = 2_000_000, seed: int = DEFAULT_SEED) -> VerificationReport:
    """
    Razão de volumes de X -> AXB (X n x m) contra as duas leituras do expoente de |B*B|.

    Candidatos: |A*A|^{m beta/2} |B*B|^{n beta/2} e |A*A|^{m beta/2} |B*B|^{mn beta/2}.
    O candidato mais próximo da estimativa é adotado e registrado em details.

    Raises:
        DomainError: Se A ou B for singular
    """
    inicio = time.perf_counter()
    a, b = _square_data(A, n, "A"), _square_data(B, m, "B")
    if A.beta != beta or B.beta != beta:
        raise DimensionError(f"A e B precisam ter beta={beta}.")
    log_aa, log_bb = _log_det_gram(a, beta), _log_det_gram(b, beta)
    real = real_representation(
        lambda x: matmul_data(matmul_data(a, x, beta), b, beta),
        matrix_basis_data(n, m, beta),
        lambda y: y,
    )
    razao, erro = _volume_ratio(real, N, seed)
    candidatos = {
        "n*beta/2": m * beta / 2.0 * log_aa + n * beta / 2.0 * log_bb,
        "m*n*beta/2": m * beta / 2.0 * log_aa + m * n * beta / 2.0 * log_bb,
    }
    erros = {nome: abs(razao / np.exp(valor) - 1.0) for nome, valor in candidatos.items()}
    adotado = min(erros, key=erros.get)
    logger.info("Jacobiano linear n=%d m=%d beta=%d: expoente adotado de |B*B| = %s", n, m, beta, adotado)
    detalhes = {
        "ratio": razao,
        "ratio_standard_error": erro,
        "adopted_exponent": adotado,
        "candidates": {nome: float(np.exp(v)) for nome, v in candidatos.items()},
        "relative_errors": erros,
        "indistinguishable": bool(abs(candidatos["n*beta/2"] - candidatos["m*n*beta/2"]) < 1e-12),
        "exact_determinant": float(abs(np.linalg.det(real))),
    }
    nome = f"jacobian_linear/n={n}/m={m}/beta={beta}"
    return _report(nome, erros[adotado], JACOBIAN_TOLERANCE, inicio, sample_size=N, seed=seed, details=detalhes)


def check_jacobian_hermitian(m: int, beta: int, A: MatVar, N: int = 2_000_000, seed: int = DEFAULT_SEED) -> VerificationReport:
    """
    Razão de volumes de S -> A S A* no espaço hermitiano contra |A*A|^{(m-1)beta/2+1}.

    Raises:
        DomainError: Se A for singular
    """
    inicio = time.perf_counter()
    a = _square_data(A, m, "A")
    if A.beta != beta:
        raise DimensionError(f"A precisa ter beta={beta}.")
    log_aa = _log_det_gram(a, beta)
    a_conj = conj_transpose_data(a, beta)
    real = real_representation(
        lambda s: matmul_data(matmul_data(a, s, beta), a_conj, beta),
        hermitian_basis_data(m, beta),
        hermitian_coordinates_data,
    )
    razao, erro = _volume_ratio(real, N, seed)
    fechado = float(np.exp(((m - 1) * beta / 2.0 + 1.0) * log_aa))
    detalhes = {"ratio": razao, "ratio_standard_error": erro, "closed_form": fechado}
    nome = f"jacobian_hermitian/m={m}/beta={beta}"
    return _report(nome, abs(razao / fechado - 1.0), JACOBIAN_TOLERANCE, inicio, sample_size=N, seed=seed, details=detalhes)


def check_jacobian_wishart(m: int, n: int, beta: int, N: int = 1_000_000, seed: int = DEFAULT_SEED) -> VerificationReport:
    """
    Jacobiano de X -> S = X*X pela integral ∫ |X*X| etr(-X*X) (dX).

    Em X: Monte-Carlo com X Gaussiano de densidade pi^{-d/2} exp(-||X||^2).
    Em S: 2^{-m} Vol(V_{m,n}) ∫ |S|^{1 + beta(n-m+1)/2 - 1} etr(-S) (dS)
    = 2^{-m} Vol(V_{m,n}) Gamma_m[n beta/2 + 1], usando a medida de Stiefel.
    """
    inicio = time.perf_counter()
    AlgebraTag(beta).require_matrix_level("verificação de Jacobiano de Wishart")
    if not (n >= m >= 1):
        raise DomainError(f"Exige n >= m >= 1; recebido m={m}, n={n}.")
    d = n * m * beta

    def amostra(rng: np.random.Generator, tamanho: int) -> np.ndarray:
        x = rng.normal(0.0, np.sqrt(0.5), size=(tamanho, n, m, beta))
        t, ok = cholesky_data(gram_data(x, beta), beta)
        return np.where(ok, np.exp(log_det_from_factor(t)), 0.0)

    media, erro = mc_mean(amostra, N, seed)
    lado_x = np.pi ** (d / 2.0) * media
    log_lado_s = -m * np.log(2.0) + log_stiefel_volume(m, n, beta) + lgamma_m(n * beta / 2.0 + 1.0, m, beta)
    lado_s = float(np.exp(log_lado_s))
    detalhes = {"x_space": lado_x, "x_space_standard_error": np.pi ** (d / 2.0) * erro, "s_space": lado_s}
    nome = f"jacobian_wishart/m={m}/n={n}/beta={beta}"
    return _report(nome, abs(lado_x / lado_s - 1.0), JACOBIAN_TOLERANCE, inicio, sample_size=N, seed=seed, details=detalhes)


# ---------------------------------------------------------------------------
# Leis conjuntas
# ---------------------------------------------------------------------------

def ks_critical_value(N: int) -> float:
    """Valor crítico assintótico de 5% do KS bilateral."""
    return 1.36 / float(np.sqrt(N))


def scaled_threshold(limiar: float, N: int) -> float:
    """Limiar fixado em LAW_REFERENCE_N amostras, reescalado como 1/sqrt(N)."""
    return limiar * float(np.sqrt(LAW_REFERENCE_N / N))


def _require_scalar_case(p: PearsonIIRieszParams) -> None:
    if p.m != 1:
        raise DomainError(f"Verificação da lei conjunta implementada para m = 1, recebido m={p.m}.")
    if not p.is_standard():
        raise DomainError("Verificação da lei conjunta exige a forma padrão (mu = 0, Omega = I, Xi = I).")


def check_theorem1(
    params: PearsonIIRieszParams,
    N: int = 100_000,
    seed: int = DEFAULT_SEED,
    ks_threshold: Optional[float] = None,
    corr_threshold: Optional[float] = None,
) -> VerificationReport:
    """
    Lei conjunta de (U, R) em m = 1.

    U deve ser Gamma((nu+n)beta/2 ± (k+t), taxa beta) (+ no tipo I, - no tipo II)
    e independente de R; a independência é avaliada por corr(log u, log(1 - r^2)).
    Estatística agregada: max(D/limiar_KS, |corr|/limiar_corr), aprovada se <= 1.

    Limiares padrão: KS 1.36/sqrt(N) (valor crítico de 5%); correlação
    CORR_THRESHOLD escalado por sqrt(LAW_REFERENCE_N / N).
    """
    inicio = time.perf_counter()
    _require_scalar_case(params)
    if ks_threshold is None:
        ks_threshold = ks_critical_value(N)
    if corr_threshold is None:
        corr_threshold = scaled_threshold(CORR_THRESHOLD, N)
    beta = params.beta
    r, u = pearson2_riesz_joint_rvs(params, make_rng(seed), N)
    uu = u[:, 0, 0, 0]
    rr = np.sum(r**2, axis=(-3, -2, -1))
    sinal = 1.0 if params.variant == "I" else -1.0
    forma = (params.nu + params.n) * beta / 2.0 + sinal * (params.kappa.k[0] + params.tau.k[0])
    ks = stats.kstest(uu, stats.gamma(forma, scale=1.0 / beta).cdf)
    correlacao = float(np.corrcoef(np.log(uu), np.log1p(-rr))[0, 1])
    estatistica = max(ks.statistic / ks_threshold, abs(correlacao) / corr_threshold)
    detalhes = {
        "ks_statistic": float(ks.statistic),
        "ks_p_value": float(ks.pvalue),
        "ks_threshold": ks_threshold,
        "correlation": correlacao,
        "correlation_threshold": corr_threshold,
        "gamma_shape": forma,
        "gamma_rate": float(beta),
        "critical_value_5pct": ks_critical_value(N),
    }
    nome = (
        f"theorem1/{params.variant}/beta={beta}/nu={params.nu:g}/n={params.n}"
        f"/kappa={params.kappa.k[0]:g}/tau={params.tau.k[0]:g}"
    )
    return _report(nome, estatistica, 1.0, inicio, sample_size=N, seed=seed, details=detalhes)


def check_theorem2(params: BetaRieszParams, N: int = 100_000, seed: int = DEFAULT_SEED, threshold: Optional[float] = None) -> VerificationReport:
    """
    KS de B = R*R (m = 1) contra Beta(n beta/2 + t, nu beta/2 + k) na variante c
    ou Beta(n beta/2 - t, nu beta/2 - k) na variante k.

    Limiar padrão: KS_THRESHOLD em N = LAW_REFERENCE_N, escalado por sqrt(LAW_REFERENCE_N / N).
    """
    inicio = time.perf_counter()
    if params.m != 1:
        raise DomainError(f"Verificação da lei beta implementada para m = 1, recebido m={params.m}.")
    if threshold is None:
        threshold = scaled_threshold(KS_THRESHOLD, N)
    beta = params.beta
    escala = float(params.theta.data[0, 0, 0])
    b = beta_riesz_rvs(params, make_rng(seed), N)[:, 0, 0, 0] / escala
    sinal = 1.0 if params.variant == "c" else -1.0
    a1 = params.n * beta / 2.0 + sinal * params.tau.k[0]
    a2 = params.nu * beta / 2.0 + sinal * params.kappa.k[0]
    ks = stats.kstest(b, stats.beta(a1, a2).cdf)
    detalhes = {"p_value": float(ks.pvalue), "beta_a": a1, "beta_b": a2, "critical_value_5pct": ks_critical_value(N)}
    nome = (
        f"theorem2/{params.variant}/beta={beta}/nu={params.nu:g}/n={params.n}"
        f"/kappa={params.kappa.k[0]:g}/tau={params.tau.k[0]:g}"
    )
    return _report(nome, ks.statistic, threshold, inicio, sample_size=N, seed=seed, details=detalhes)


# ---------------------------------------------------------------------------
# Propriedades algébricas e identidades
# ---------------------------------------------------------------------------

def _relative_log_error(lhs: np.ndarray, rhs: np.ndarray) -> float:
    return float(np.max(np.abs(lhs - rhs) / np.maximum(1.0, np.abs(rhs))))


def _algebra_reports(beta: int, rng: np.random.Generator, seed: int) -> List[VerificationReport]:
    relatorios = []
    inicio = time.perf_counter()
    x, y, z = (rng.standard_normal((10_000, beta)) for _ in range(3))
    nx, ny, nz = norm_sq_array(x), norm_sq_array(y), norm_sq_array(z)
    erro = np.max(np.abs(norm_sq_array(mul_array(x, y, beta)) - nx * ny) / (nx * ny))
    relatorios.append(_report(f"algebra/norm_multiplicative/beta={beta}", erro, 1e-12, inicio, sample_size=10_000, seed=seed))

    inicio = time.perf_counter()
    escala = np.sqrt(nx * ny * nz)
    if beta <= 4:
        diferenca = mul_array(mul_array(x, y, beta), z, beta) - mul_array(x, mul_array(y, z, beta), beta)
        erro = np.max(np.sqrt(norm_sq_array(diferenca)) / escala)
        relatorios.append(_report(f"algebra/associativity/beta={beta}", erro, 1e-12, inicio, sample_size=10_000, seed=seed))
    else:
        xx = mul_array(x, x, beta)
        esquerda = mul_array(xx, y, beta) - mul_array(x, mul_array(x, y, beta), beta)
        direita = mul_array(mul_array(y, x, beta), x, beta) - mul_array(y, xx, beta)
        erro = np.max(np.sqrt(np.maximum(norm_sq_array(esquerda), norm_sq_array(direita))) / (nx * np.sqrt(ny)))
        relatorios.append(_report(f"algebra/alternativity/beta={beta}", erro, 1e-12, inicio, sample_size=10_000, seed=seed))

    inicio = time.perf_counter()
    erro = np.max(np.abs(mul_array(x, conj_array(x, beta), beta)[..., 0] - nx) / nx)
    relatorios.append(_report(f"algebra/conjugate_norm/beta={beta}", erro, 1e-12, inicio, sample_size=10_000, seed=seed))
    return relatorios


def _random_upper(rng: np.random.Generator, lote: int, m: int, beta: int) -> np.ndarray:
    b = np.triu(np.ones((m, m)))[None, :, :, None] * rng.standard_normal((lote, m, m, beta))
    b[:, np.arange(m), np.arange(m), 0] += 2.0 * np.sign(b[:, np.arange(m), np.arange(m), 0] + 1e-300)
    return b


def _factorization_and_q_reports(beta: int, rng: np.random.Generator, seed: int, instances: int) -> List[VerificationReport]:
    por_m = instances // 5
    chaves = ("cholesky", "ldl", "inverse", "multiplicative", "shift", "congruence", "inverse_congruence", "minors")
    erros: Dict[str, List[float]] = {nome: [] for nome in chaves}
    inicio = time.perf_counter()
    for m in range(1, 6):
        s = random_pd_data((por_m,), m, beta, rng)
        escala = np.max(np.abs(s), axis=(-3, -2, -1))
        t, ok = cholesky_data(s, beta)
        if not np.all(ok):
            raise DomainError("Matriz aleatória não positiva definida na verificação de propriedades.")
        erros["cholesky"].append(float(np.max(np.max(np.abs(gram_data(t, beta) - s), axis=(-3, -2, -1)) / escala)))

        tii = t[..., np.arange(m), np.arange(m), 0]
        unit = t / tii[..., :, None, None]
        d_l = unit * tii[..., :, None, None] ** 2
        ldl = hermitize_data(matmul_data(conj_transpose_data(unit, beta), d_l, beta), beta)
        erros["ldl"].append(float(np.max(np.max(np.abs(ldl - s), axis=(-3, -2, -1)) / escala)))

        k = -np.sort(-rng.uniform(-2.0, 2.0, size=m))
        tau = -np.sort(-rng.uniform(-2.0, 2.0, size=m))
        p = float(rng.uniform(-1.0, 1.0))
        log_piv = log_pivots_from_factor(t)
        log_q = log_q_from_log_pivots(log_piv, k)

        t_inv = tri_inverse_data(t, beta)
        s_inv = hermitize_data(matmul_data(t_inv, conj_transpose_data(t_inv, beta), beta), beta)
        erros["inverse"].append(_relative_log_error(log_q_inverse_data(s, k, beta)[0], log_q_data(s_inv, k, beta)[0]))
        erros["multiplicative"].append(_relative_log_error(log_q_from_log_pivots(log_piv, k + tau), log_q + log_q_from_log_pivots(log_piv, tau)))
        erros["shift"].append(_relative_log_error(log_q_from_log_pivots(log_piv, k + p), p * np.sum(log_piv, axis=-1) + log_q))

        b = _random_upper(rng, por_m, m, beta)
        b_conj = conj_transpose_data(b, beta)
        log_q_c = log_q_data(gram_data(b, beta), k, beta)[0]
        congruente = hermitize_data(matmul_data(matmul_data(b_conj, s, beta), b, beta), beta)
        erros["congruence"].append(_relative_log_error(log_q_data(congruente, k, beta)[0], log_q_c + log_q))
        b_inv = tri_inverse_data(b, beta)
        inversa = hermitize_data(matmul_data(matmul_data(conj_transpose_data(b_inv, beta), s, beta), b_inv, beta), beta)
        erros["inverse_congruence"].append(_relative_log_error(log_q_data(inversa, k, beta)[0], log_q - log_q_c))

        log_menores = np.stack(
            [log_det_from_factor(cholesky_data(s[..., :j, :j, :], beta)[0]) for j in range(1, m + 1)], axis=-1
        )
        expoentes = np.append(k[:-1] - k[1:], k[-1])
        erros["minors"].append(_relative_log_error(log_q_from_log_pivots(log_menores, expoentes), log_q))

    limiares = {"cholesky": 1e-10, "ldl": 1e-10, "inverse": 1e-9, "multiplicative": 1e-10, "shift": 1e-10, "congruence": 1e-9, "inverse_congruence": 1e-9, "minors": 1e-10}
    nomes = {
        "cholesky": "factorization/cholesky",
        "ldl": "factorization/ldl",
        "inverse": "q_kappa/inverse",
        "multiplicative": "q_kappa/multiplicative",
        "shift": "q_kappa/shift",
        "congruence": "q_kappa/congruence",
        "inverse_congruence": "q_kappa/inverse_congruence",
        "minors": "q_kappa/ldl_vs_minors",
    }
    return [
        _report(f"{nomes[chave]}/beta={beta}", max(valores), limiares[chave], inicio, sample_size=por_m * 5, seed=seed)
        for chave, valores in erros.items()
    ]


def _gamma_reports(beta: int, rng: np.random.Generator, seed: int, points: int = 100) -> List[VerificationReport]:
    """Gamma_m[a,kappa] = [a]_kappa Gamma_m[a] e a identidade de sinal da gama com -kappa (kappa inteiro)."""
    inicio = time.perf_counter()
    erro_mais, erro_menos = 0.0, 0.0
    for _ in range(points):
        m = int(rng.integers(1, 4))
        k = -np.sort(-rng.integers(0, 4, size=m)).astype(float)
        a = (m - 1) * beta / 2.0 + k[0] + float(rng.uniform(0.3, 4.0))
        base = lgamma_m(a, m, beta)

        log_poch, sinal = pochhammer_weighted(a, k, beta)
        esperado = log_poch + base
        obtido = log_gamma_weighted(a, k, beta, "plus")
        erro_mais = max(erro_mais, abs(obtido - esperado) / max(1.0, abs(esperado)) if sinal > 0 else np.inf)

        log_poch, sinal = pochhammer_weighted(-a + (m - 1) * beta / 2.0 + 1.0, k, beta)
        esperado = base - log_poch
        obtido = log_gamma_weighted(a, k, beta, "minus")
        sinal_ok = sinal == (-1.0) ** int(k.sum())
        erro_menos = max(erro_menos, abs(obtido - esperado) / max(1.0, abs(esperado)) if sinal_ok else np.inf)
    return [
        _report(f"special/gamma_pochhammer/beta={beta}", erro_mais, 1e-10, inicio, sample_size=points, seed=seed),
        _report(f"special/gamma_minus_sign/beta={beta}", erro_menos, 1e-9, inicio, sample_size=points, seed=seed),
    ]


STIEFEL_CASES = ((1, 2, 1, 2.0 * np.pi), (1, 3, 1, 4.0 * np.pi), (1, 4, 1, 2.0 * np.pi**2))


def _stiefel_report() -> VerificationReport:
    inicio = time.perf_counter()
    erro = max(abs(np.exp(log_stiefel_volume(m, n, beta)) - esperado) for m, n, beta, esperado in STIEFEL_CASES)
    return _report("special/stiefel_volume", erro, 1e-12, inicio, details={"cases": [list(c[:3]) for c in STIEFEL_CASES]})


C_BETA_CASES = ((1.0, 0.0, 1.0, 0.0), (1.0, 1.0, 1.0, 0.0), (2.5, 0.5, 1.5, 1.0), (0.7, 0.0, 0.6, 0.3))


def _c_beta_integral_report() -> VerificationReport:
    """c-beta em m = 1, beta = 1: ∫_0^1 s^{a-1+k}(1-s)^{b-1+t} ds."""
    inicio = time.perf_counter()
    erro, nos = 0.0, 0
    for a, k, b, t in C_BETA_CASES:
        resultado = integrate(lambda s: s ** (a - 1.0 + k) * (1.0 - s) ** (b - 1.0 + t), 0.0, 1.0)
        esperado = np.exp(log_c_beta(a, [k], b, [t], 1, 1))
        erro = max(erro, abs(resultado.value / esperado - 1.0))
        nos += resultado.nodes
    return _report("special/c_beta_integral", erro, NORMALIZATION_TOLERANCE, inicio, nodes=nos)


def check_properties(beta: int, seed: int = DEFAULT_SEED, instances: int = 1_000) -> List[VerificationReport]:
    """
    Leis da álgebra, reconstrução das fatorações, identidades de q_kappa,
    identidades gama/Pochhammer e volumes de Stiefel.

    Com beta = 8 só as verificações escalares rodam.
    """
    AlgebraTag(beta)
    rng = make_rng(seed)
    relatorios = _algebra_reports(beta, rng, seed)
    if beta <= 4:
        relatorios += _factorization_and_q_reports(beta, rng, seed, instances)
    relatorios += _gamma_reports(beta, rng, seed)
    relatorios.append(_stiefel_report())
    relatorios.append(_c_beta_integral_report())
    return relatorios


# ---------------------------------------------------------------------------
# Suítes
# ---------------------------------------------------------------------------

def _scalar_json(valor: float, beta: int) -> Dict[str, Any]:
    return MatVar.from_real([[valor]], beta).to_json()


def normalization_grid(beta: int) -> List[DistributionSpec]:
    """Parâmetros da verificação de normalização em m = 1 (todas as famílias, pesos não nulos)."""
    def esc(v: float) -> Dict[str, Any]:
        return _scalar_json(v, beta)

    grade = [
        ("riesz", "I", {"a": 1.0, "kappa": [1.0]}),
        ("riesz", "I", {"a": 0.8, "kappa": [0.5], "xi": esc(1.5)}),
        ("riesz", "I", {"a": 2.5, "kappa": [-1.0]}),
        ("riesz", "II", {"a": 2.0, "kappa": [1.0]}),
        ("riesz", "II", {"a": 1.5, "kappa": [0.5]}),
        ("riesz", "II", {"a": 1.0, "kappa": [-1.0], "xi": esc(0.7)}),
        ("kotz_riesz", "I", {"n": 2, "kappa": [1.0]}),
        ("kotz_riesz", "I", {"n": 1, "kappa": [0.5], "sigma": esc(2.0)}),
        ("kotz_riesz", "I", {"n": 3, "kappa": [0.0]}),
        ("kotz_riesz", "II", {"n": 2, "kappa": [0.5]}),
        ("kotz_riesz", "II", {"n": 3, "kappa": [1.0]}),
        ("kotz_riesz", "II", {"n": 1, "kappa": [-0.5], "sigma": esc(0.5)}),
        ("pearson2_riesz", "I", {"nu": 2.0, "n": 1, "kappa": [0.0], "tau": [0.0]}),
        ("pearson2_riesz", "I", {"nu": 3.0, "n": 2, "kappa": [1.0], "tau": [1.0]}),
        ("pearson2_riesz", "I", {"nu": 4.0, "n": 1, "kappa": [0.5], "tau": [0.5], "xi": esc(2.0)}),
        ("pearson2_riesz", "II", {"nu": 3.0, "n": 2, "kappa": [0.5], "tau": [0.5]}),
        ("pearson2_riesz", "II", {"nu": 4.0, "n": 3, "kappa": [1.0], "tau": [1.0]}),
        ("pearson2_riesz", "II", {"nu": 2.0, "n": 1, "kappa": [-0.5], "tau": [0.0], "xi": esc(0.5)}),
        ("pearson2_riesz_transposed", "I", {"a": 2.0, "m": 2, "kappa": [0.0], "tau": [0.0]}),
        ("pearson2_riesz_transposed", "I", {"a": 3.0, "m": 1, "kappa": [1.0], "tau": [0.0]}),
        ("pearson2_riesz_transposed", "I", {"a": 2.0, "m": 3, "kappa": [0.5], "tau": [1.0]}),
        ("pearson2_riesz_transposed", "II", {"a": 3.0, "m": 2, "kappa": [0.5], "tau": [0.5]}),
        ("beta_riesz", "c", {"nu": 2.0, "n": 2, "kappa": [0.0], "tau": [0.0]}),
        ("beta_riesz", "c", {"nu": 2.0, "n": 2, "kappa": [1.0], "tau": [1.0]}),
        ("beta_riesz", "c", {"nu": 3.0, "n": 1, "kappa": [0.5], "tau": [0.0], "theta": esc(2.0)}),
        ("beta_riesz", "k", {"nu": 3.0, "n": 2, "kappa": [0.5], "tau": [0.5]}),
        ("beta_riesz", "k", {"nu": 4.0, "n": 3, "kappa": [1.0], "tau": [1.0]}),
        ("beta_riesz", "k", {"nu": 2.0, "n": 2, "kappa": [0.0], "tau": [-0.5]}),
    ]
    return [build_spec(familia, variante, beta, params) for familia, variante, params in grade]


MC_GRID = (
    ("pearson2_riesz", "I", {"nu": 4.0, "n": 2, "kappa": [1.0, 0.0], "tau": [0.0, 0.0]}),
    ("pearson2_riesz", "II", {"nu": 5.0, "n": 2, "kappa": [1.0, 0.0], "tau": [0.0, 0.0]}),
    ("beta_riesz", "c", {"nu": 4.0, "n": 4, "kappa": [1.0, 0.0], "tau": [0.0, 0.0]}),
    ("beta_riesz", "k", {"nu": 5.0, "n": 4, "kappa": [1.0, 0.0], "tau": [0.0, 0.0]}),
    ("riesz", "I", {"a": 3.0, "kappa": [1.0, 0.0]}),
    # tipo II com a > 3 para que os pesos de importância tenham variância finita
    ("riesz", "II", {"a": 4.0, "kappa": [1.0, 0.0]}),
)

THEOREM1_GRID = (
    (1, 3.0, 1, 1.0, 0.0, "I"),
    (1, 2.0, 1, 0.0, 0.0, "I"),
    (2, 3.0, 2, 0.5, 1.0, "I"),
    (4, 2.0, 2, 1.0, 1.0, "I"),
    (1, 5.0, 3, 1.0, 0.5, "II"),
    (2, 4.0, 2, 0.5, 0.5, "II"),
)

THEOREM2_GRID = (
    (1, 3.0, 2, 1.0, 0.5, "c"),
    (1, 2.0, 1, 0.0, 0.0, "c"),
    (1, 4.0, 3, 1.0, 1.0, "k"),
)


def _jacobian_matrices(beta: int) -> Tuple[MatVar, MatVar]:
    """A e B 2x2 bem condicionados, com parte imaginária quando beta >= 2."""
    a = np.zeros((2, 2, beta))
    b = np.zeros((2, 2, beta))
    a[..., 0] = [[1.5, 0.1], [0.0, 1.0]]
    b[..., 0] = [[1.0, 0.0], [0.1, 0.8]]
    if beta >= 2:
        a[0, 1, 1] = 0.05
        b[1, 0, 1] = -0.05
    return MatVar.from_components(a, beta), MatVar.from_components(b, beta)


def _normalization_suite(betas: Sequence[int], seed: int, mc_samples: int) -> List[VerificationReport]:
    relatorios = [check_normalization_1d(spec) for beta in betas for spec in normalization_grid(beta)]
    if 1 in betas:
        for i, (familia, variante, params) in enumerate(MC_GRID):
            relatorios.append(check_normalization_mc(build_spec(familia, variante, 1, params), mc_samples, seed + i))
    return relatorios


def _jacobian_suite(betas: Sequence[int], seed: int, mc_samples: int) -> List[VerificationReport]:
    relatorios = []
    for beta in betas:
        a, b = _jacobian_matrices(beta)
        dois, tres = MatVar.from_real([[2.0]], beta), MatVar.from_real([[3.0]], beta)
        relatorios.append(check_jacobian_linear(1, 1, beta, dois, tres, mc_samples, seed))
        if beta >= 2:
            um_mais_i = np.zeros((1, 1, beta))
            um_mais_i[0, 0, :2] = 1.0
            unidade = MatVar.from_real([[1.0]], beta)
            relatorios.append(
                check_jacobian_linear(1, 1, beta, MatVar.from_components(um_mais_i, beta), unidade, mc_samples, seed + 7)
            )
        relatorios.append(check_jacobian_linear(2, 2, beta, a, b, 2 * mc_samples, seed + 1))
        relatorios.append(check_jacobian_hermitian(1, beta, MatVar.from_real([[1.5]], beta), mc_samples, seed + 2))
        relatorios.append(check_jacobian_hermitian(2, beta, MatVar.from_real([[2.0, 0.0], [0.0, 1.0]], beta), mc_samples, seed + 3))
        relatorios.append(check_jacobian_hermitian(2, beta, a, 2 * mc_samples, seed + 4))
        relatorios.append(check_jacobian_wishart(1, 2, beta, mc_samples, seed + 5))
        relatorios.append(check_jacobian_wishart(2, 2, beta, mc_samples, seed + 6))
    return relatorios


def _theorem_suite(betas: Sequence[int], seed: int, samples: int) -> List[VerificationReport]:
    relatorios = []
    for i, (beta, nu, n, k, t, variante) in enumerate(THEOREM1_GRID):
        if beta in betas:
            params = PearsonIIRieszParams(nu=nu, n=n, kappa=[k], tau=[t], beta=beta, variant=variante)
            relatorios.append(check_theorem1(params, samples, seed + i))
    for i, (beta, nu, n, k, t, variante) in enumerate(THEOREM2_GRID):
        if beta in betas:
            params = BetaRieszParams(nu=nu, n=n, kappa=[k], tau=[t], beta=beta, variant=variante)
            relatorios.append(check_theorem2(params, samples, seed + 100 + i))
    return relatorios


def run_suite(
    suite: str,
    beta: Optional[int] = None,
    seed: int = DEFAULT_SEED,
    mc_samples: int = 1_000_000,
    law_samples: int = 100_000,
) -> List[VerificationReport]:
    """
    Executa uma suíte e devolve a lista de relatórios.

    Args:
        suite: normalization, jacobians, theorem1, properties ou all
        beta: Restringe a um beta; None usa todos os aplicáveis a cada suíte
        seed: Semente base (cada verificação usa seed + deslocamento fixo)
        mc_samples: Tamanho das verificações de Monte-Carlo
        law_samples: Tamanho das verificações de lei (KS)

    Raises:
        DomainError: Suíte desconhecida ou beta não suportado pela suíte
    """
    if suite not in SUITES:
        raise DomainError(f"Suíte desconhecida '{suite}'; use uma de {SUITES}.")
    if beta is not None:
        AlgebraTag(beta)
    if beta == 8 and suite not in ("properties", "all"):
        AlgebraTag(beta).require_matrix_level(f"suíte {suite}")

    def escolher(padrao: Tuple[int, ...]) -> Tuple[int, ...]:
        if beta is None:
            return padrao
        return (beta,) if beta in padrao else ()

    relatorios: List[VerificationReport] = []
    if suite in ("normalization", "all"):
        relatorios += _normalization_suite(escolher((1, 2, 4)), seed, mc_samples)
    if suite in ("jacobians", "all"):
        relatorios += _jacobian_suite(escolher((1, 2, 4) if beta == 4 else (1, 2)), seed, mc_samples)
    if suite in ("theorem1", "all"):
        relatorios += _theorem_suite(escolher((1, 2, 4)), seed, law_samples)
    if suite in ("properties", "all"):
        for b in escolher((1, 2, 4, 8)):
            relatorios += check_properties(b, seed)
    aprovados = sum(r.passed for r in relatorios)
    logger.info("suíte %s: %d/%d verificações aprovadas", suite, aprovados, len(relatorios))
    return relatorios
