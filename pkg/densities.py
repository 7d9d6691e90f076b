"""
Log-densidades das famílias Riesz, Kotz-Riesz, Pearson tipo II-Riesz (e sua
forma transposta) e beta-Riesz.

Cada família tem duas camadas:
  - ``*_log_density_data(pontos, params)``: avaliação em lote sobre arrays
    (..., n, m, beta), devolvendo (logpdf, in_support); usada pelo Monte-Carlo.
  - ``*_logpdf(ponto, params)``: avaliação de um único MatVar/HermMatrix.

Fora do suporte a log-densidade é -inf com in_support = False; parâmetros fora
do domínio levantam DomainError já na construção dos parâmetros.

Convenções: u(A) é o fator de Cholesky superior (A = u(A)* u(A)); matrizes de
escala são sempre recebidas como hermitianas positivas definidas.
"""

import logging
from dataclasses import dataclass
from typing import Literal, Optional, Tuple

import numpy as np

from algebra import AlgebraTag
from exceptions import AlgebraMismatchError, DimensionError, DomainError, NotPositiveDefiniteError
from matvar import (
    HermMatrix,
    MatVar,
    cholesky_data,
    conj_transpose_data,
    gram_data,
    hermitian_inverse,
    identity_data,
    log_det_from_factor,
    log_pivots_from_factor,
    matmul_data,
    real_trace_data,
    tri_solve_left_conj_data,
    tri_solve_right_data,
)
from special import log_c_beta, log_gamma_weighted, log_k_beta, lgamma_m
from weights import (
    WeightLike,
    WeightVector,
    as_weights,
    log_q_from_log_pivots,
    log_q_inverse_data,
    q_kappa,
    q_kappa_of_inverse,
    warn_if_unordered,
)

logger = logging.getLogger(__name__)

Variant = Literal["I", "II"]
BetaVariant = Literal["c", "k"]


@dataclass(frozen=True)
class DensityValue:
    """Resultado de uma avaliação: log-densidade e indicador de suporte."""

    logpdf: float
    in_support: bool

    @property
    def density(self) -> float:
        return float(np.exp(self.logpdf))

    def to_dict(self) -> dict:
        return {"logpdf": self.logpdf, "in_support": self.in_support}


# ---------------------------------------------------------------------------
# Auxiliares
# ---------------------------------------------------------------------------

def _check_variant(variant: str, validos: Tuple[str, ...]) -> None:
    if variant not in validos:
        raise DomainError(f"Variante '{variant}' inválida; use uma de {validos}.")


def _scale_or_identity(h: Optional[HermMatrix], dim: int, beta: int, nome: str) -> HermMatrix:
    if h is None:
        return HermMatrix.identity(dim, beta)
    if not isinstance(h, HermMatrix):
        h = HermMatrix.from_matvar(h)
    if h.beta != beta:
        raise AlgebraMismatchError(f"{nome} tem beta={h.beta}, esperado {beta}.")
    if h.dim != dim:
        raise DimensionError(f"{nome} deve ser {dim}x{dim}, recebido {h.dim}x{h.dim}.")
    return h


def _upper_factor(h: HermMatrix, nome: str) -> np.ndarray:
    t, ok = cholesky_data(h.data, h.beta)
    if not bool(ok):
        raise NotPositiveDefiniteError(f"Matriz de escala {nome} não é positiva definida.")
    return t


def _location_or_zero(mu: Optional[MatVar], n: int, m: int, beta: int) -> MatVar:
    if mu is None:
        return MatVar.zeros(n, m, beta)
    if mu.beta != beta:
        raise AlgebraMismatchError(f"mu tem beta={mu.beta}, esperado {beta}.")
    if mu.shape != (n, m):
        raise DimensionError(f"mu deve ser {n}x{m}, recebido {mu.rows}x{mu.cols}.")
    return mu


def _point_data(ponto: MatVar, beta: int, shape: Tuple[int, int], nome: str) -> np.ndarray:
    if ponto.beta != beta:
        raise AlgebraMismatchError(f"{nome} tem beta={ponto.beta}, esperado {beta}.")
    if ponto.shape != shape:
        raise DimensionError(f"{nome} deve ser {shape[0]}x{shape[1]}, recebido {ponto.rows}x{ponto.cols}.")
    return ponto.data


def _masked(valor: np.ndarray, ok: np.ndarray) -> np.ndarray:
    return np.where(ok, valor, -np.inf)


def _weighted_log_q(log_pivots: np.ndarray, s: np.ndarray, k: np.ndarray, beta: int, inverse: bool):
    """log q_k(S) (ou de S^{-1}) dado o fator já calculado; devolve também a máscara extra."""
    if not np.any(k):
        return np.zeros(s.shape[:-3]), np.ones(s.shape[:-3], dtype=bool)
    if inverse:
        return log_q_inverse_data(s, k, beta)
    return log_q_from_log_pivots(log_pivots, k), np.ones(s.shape[:-3], dtype=bool)


# ---------------------------------------------------------------------------
# Riesz
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RieszParams:
    """
    Parâmetros da distribuição de Riesz tipo I/II.

    Args:
        a: Forma
        kappa: Pesos (tamanho m)
        beta: Dimensão da álgebra
        xi: Escala hermitiana positiva definida (identidade se None)
        variant: "I" ou "II"
    """

    a: float
    kappa: WeightVector
    beta: int
    xi: Optional[HermMatrix] = None
    variant: Variant = "I"

    def __post_init__(self):
        AlgebraTag(self.beta).require_matrix_level("distribuição de Riesz")
        _check_variant(self.variant, ("I", "II"))
        kappa = as_weights(self.kappa)
        object.__setattr__(self, "kappa", kappa)
        m, beta = kappa.m, self.beta
        object.__setattr__(self, "xi", _scale_or_identity(self.xi, m, beta, "Xi"))
        limite = (m - 1) * beta / 2.0
        if self.variant == "I" and not self.a > limite - kappa.k[-1]:
            raise DomainError(f"Riesz I exige a > (m-1)beta/2 - k_m = {limite - kappa.k[-1]:.6g}; recebido a={self.a}.")
        if self.variant == "II" and not self.a > limite + kappa.k[0]:
            raise DomainError(f"Riesz II exige a > (m-1)beta/2 + k_1 = {limite + kappa.k[0]:.6g}; recebido a={self.a}.")
        warn_if_unordered(kappa)
        _upper_factor(self.xi, "Xi")
        object.__setattr__(self, "_xi_inv", hermitian_inverse(self.xi).data)
        object.__setattr__(self, "_log_const", self._normalizer())

    @property
    def m(self) -> int:
        return self.kappa.m

    def _normalizer(self) -> float:
        m, a, beta, k = self.m, self.a, self.beta, self.kappa
        log_det_xi = float(log_det_from_factor(_upper_factor(self.xi, "Xi")))
        if self.variant == "I":
            return (
                (a * m + k.total) * np.log(beta)
                - log_gamma_weighted(a, k, beta, "plus")
                - a * log_det_xi
                - q_kappa(self.xi, k)
            )
        return (
            (a * m - k.total) * np.log(beta)
            - log_gamma_weighted(a, k, beta, "minus")
            - a * log_det_xi
            - q_kappa_of_inverse(self.xi, k)
        )


def riesz_log_density_data(v: np.ndarray, p: RieszParams) -> Tuple[np.ndarray, np.ndarray]:
    beta, m = p.beta, p.m
    t, ok = cholesky_data(v, beta)
    log_piv = log_pivots_from_factor(t)
    log_det = np.sum(log_piv, axis=-1)
    traco = real_trace_data(matmul_data(p._xi_inv, v, beta))
    log_q, ok_q = _weighted_log_q(log_piv, v, p.kappa.as_array(), beta, p.variant == "II")
    ok = ok & ok_q
    with np.errstate(invalid="ignore", divide="ignore"):
        valor = p._log_const - beta * traco + (p.a - (m - 1) * beta / 2.0 - 1.0) * log_det + log_q
    return _masked(valor, ok), ok


def riesz_logpdf(v: HermMatrix, p: RieszParams) -> float:
    """
    Log-densidade de Riesz tipo I/II.

    Tipo I: log[beta^{am+k} / (Gamma_m[a,kappa] |Xi|^a q_kappa(Xi))] - beta tr(Xi^{-1}V)
    + (a-(m-1)beta/2-1) log|V| + log q_kappa(V). Tipo II troca kappa por -kappa na gama
    e usa q_kappa(V^{-1}), q_kappa(Xi^{-1}).

    Raises:
        NotPositiveDefiniteError: Se V não for positiva definida
    """
    dados = _point_data(v, p.beta, (p.m, p.m), "V")
    valor, ok = riesz_log_density_data(dados, p)
    if not bool(ok):
        raise NotPositiveDefiniteError("V precisa ser positiva definida para a densidade de Riesz.")
    return float(valor)


# ---------------------------------------------------------------------------
# Kotz-Riesz
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class KotzRieszParams:
    """Kotz-Riesz tipo I/II: Y n x m com locação mu, escala de linhas Theta e de colunas Sigma."""

    kappa: WeightVector
    n: int
    beta: int
    mu: Optional[MatVar] = None
    theta: Optional[HermMatrix] = None
    sigma: Optional[HermMatrix] = None
    variant: Variant = "I"

    def __post_init__(self):
        AlgebraTag(self.beta).require_matrix_level("distribuição de Kotz-Riesz")
        _check_variant(self.variant, ("I", "II"))
        kappa = as_weights(self.kappa)
        object.__setattr__(self, "kappa", kappa)
        n, m, beta = self.n, kappa.m, self.beta
        if n < 1:
            raise DomainError(f"n precisa ser >= 1, recebido {n}.")
        object.__setattr__(self, "mu", _location_or_zero(self.mu, n, m, beta))
        object.__setattr__(self, "theta", _scale_or_identity(self.theta, n, beta, "Theta"))
        object.__setattr__(self, "sigma", _scale_or_identity(self.sigma, m, beta, "Sigma"))
        limite = (m - 1) * beta / 2.0
        forma = n * beta / 2.0
        if self.variant == "I" and not forma > limite - kappa.k[-1]:
            raise DomainError(f"Kotz-Riesz I exige n beta/2 > (m-1)beta/2 - k_m; recebido n={n}, kappa={kappa.k}.")
        if self.variant == "II" and not forma > limite + kappa.k[0]:
            raise DomainError(f"Kotz-Riesz II exige n beta/2 > (m-1)beta/2 + k_1; recebido n={n}, kappa={kappa.k}.")
        warn_if_unordered(kappa)
        object.__setattr__(self, "_u_theta", _upper_factor(self.theta, "Theta"))
        object.__setattr__(self, "_u_sigma", _upper_factor(self.sigma, "Sigma"))
        object.__setattr__(self, "_log_const", self._normalizer())

    @property
    def m(self) -> int:
        return self.kappa.m

    def _normalizer(self) -> float:
        n, m, beta, k = self.n, self.m, self.beta, self.kappa
        forma = n * beta / 2.0
        sinal = 1.0 if self.variant == "I" else -1.0
        gama = log_gamma_weighted(forma, k, beta, "plus" if self.variant == "I" else "minus")
        return float(
            (m * forma + sinal * k.total) * np.log(beta)
            + lgamma_m(forma, m, beta)
            - m * forma * np.log(np.pi)
            - gama
            - forma * log_det_from_factor(self._u_sigma)
            - m * beta / 2.0 * log_det_from_factor(self._u_theta)
        )

    def standardize_data(self, y: np.ndarray) -> np.ndarray:
        """Y0 = u(Theta)*^{-1} (Y - mu) u(Sigma)^{-1}."""
        d = y - self.mu.data
        return tri_solve_right_data(tri_solve_left_conj_data(self._u_theta, d, self.beta), self._u_sigma, self.beta)


def kotz_riesz_log_density_data(y: np.ndarray, p: KotzRieszParams) -> Tuple[np.ndarray, np.ndarray]:
    beta = p.beta
    z = gram_data(p.standardize_data(y), beta)
    traco = real_trace_data(z)
    k = p.kappa.as_array()
    if np.any(k):
        t, ok = cholesky_data(z, beta)
        log_q, ok_q = _weighted_log_q(log_pivots_from_factor(t), z, k, beta, p.variant == "II")
        ok = ok & ok_q
    else:
        log_q, ok = np.zeros(traco.shape), np.ones(traco.shape, dtype=bool)
    with np.errstate(invalid="ignore", divide="ignore"):
        valor = p._log_const - beta * traco + log_q
    return _masked(valor, ok), ok


def kotz_riesz_logpdf(y: MatVar, p: KotzRieszParams) -> float:
    """
    Log-densidade de Kotz-Riesz tipo I/II.

    Raises:
        NotPositiveDefiniteError: Se a forma quadrática tiver posto deficiente e kappa != 0
    """
    dados = _point_data(y, p.beta, (p.n, p.m), "Y")
    valor, ok = kotz_riesz_log_density_data(dados, p)
    if not bool(ok):
        raise NotPositiveDefiniteError("(Y-mu)* Theta^{-1} (Y-mu) tem posto deficiente.")
    return float(valor)


# ---------------------------------------------------------------------------
# Pearson tipo II-Riesz
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PearsonIIRieszParams:
    """
    Pearson tipo II-Riesz: Q = u(Omega)^{-1} R u(Xi) + mu, R na bola {I - R*R > 0}.

    Args:
        nu: Graus de liberdade
        n: Número de linhas de Q
        kappa, tau: Pesos de tamanho m
        beta: Dimensão da álgebra
        mu: Locação n x m (zero se None)
        omega: Escala n x n (identidade se None)
        xi: Escala m x m (identidade se None)
        variant: "I" (c-beta) ou "II" (k-beta)
    """

    nu: float
    n: int
    kappa: WeightVector
    tau: WeightVector
    beta: int
    mu: Optional[MatVar] = None
    omega: Optional[HermMatrix] = None
    xi: Optional[HermMatrix] = None
    variant: Variant = "I"

    def __post_init__(self):
        AlgebraTag(self.beta).require_matrix_level("distribuição Pearson tipo II-Riesz")
        _check_variant(self.variant, ("I", "II"))
        kappa, tau = as_weights(self.kappa), as_weights(self.tau)
        if kappa.m != tau.m:
            raise DimensionError(f"kappa e tau precisam ter o mesmo tamanho ({kappa.m} != {tau.m}).")
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "tau", tau)
        n, m, beta = self.n, kappa.m, self.beta
        if n < 1:
            raise DomainError(f"n precisa ser >= 1, recebido {n}.")
        object.__setattr__(self, "mu", _location_or_zero(self.mu, n, m, beta))
        object.__setattr__(self, "omega", _scale_or_identity(self.omega, n, beta, "Omega"))
        object.__setattr__(self, "xi", _scale_or_identity(self.xi, m, beta, "Xi"))
        _check_beta_domain(self.nu, n, kappa, tau, beta, self.variant == "I", "Pearson tipo II-Riesz")
        warn_if_unordered(kappa, "kappa")
        warn_if_unordered(tau, "tau")
        object.__setattr__(self, "_u_omega", _upper_factor(self.omega, "Omega"))
        object.__setattr__(self, "_u_xi", _upper_factor(self.xi, "Xi"))
        object.__setattr__(self, "_log_const", self._normalizer())

    @property
    def m(self) -> int:
        return self.kappa.m

    def is_standard(self) -> bool:
        return (
            not np.any(self.mu.data)
            and np.array_equal(self.omega.data, identity_data(self.n, self.beta))
            and np.array_equal(self.xi.data, identity_data(self.m, self.beta))
        )

    def _normalizer(self) -> float:
        n, m, beta = self.n, self.m, self.beta
        log_beta = _log_beta_function(self.nu, n, self.kappa, self.tau, beta, self.variant == "I")
        jacobiano = m * beta / 2.0 * log_det_from_factor(self._u_omega) - n * beta / 2.0 * log_det_from_factor(self._u_xi)
        return float(lgamma_m(n * beta / 2.0, m, beta) - m * n * beta / 2.0 * np.log(np.pi) - log_beta + jacobiano)

    def standardize_data(self, q: np.ndarray) -> np.ndarray:
        """R = u(Omega) (Q - mu) u(Xi)^{-1}."""
        d = q - self.mu.data
        return tri_solve_right_data(matmul_data(self._u_omega, d, self.beta), self._u_xi, self.beta)

    def location_scale_data(self, r: np.ndarray) -> np.ndarray:
        """Q = u(Omega)^{-1} R u(Xi) + mu."""
        inv_omega = tri_solve_right_data(
            np.broadcast_to(identity_data(self.n, self.beta), self._u_omega.shape), self._u_omega, self.beta
        )
        return matmul_data(matmul_data(inv_omega, r, self.beta), self._u_xi, self.beta) + self.mu.data


def _check_beta_domain(nu: float, n: int, kappa: WeightVector, tau: WeightVector, beta: int, tipo_i: bool, familia: str) -> None:
    m = kappa.m
    limite = (m - 1) * beta / 2.0
    if tipo_i:
        if not nu * beta / 2.0 > limite - kappa.k[-1]:
            raise DomainError(f"{familia} I exige nu beta/2 > (m-1)beta/2 - k_m; recebido nu={nu}, kappa={kappa.k}.")
        if not n * beta / 2.0 > limite - tau.k[-1]:
            raise DomainError(f"{familia} I exige n beta/2 > (m-1)beta/2 - t_m; recebido n={n}, tau={tau.k}.")
    else:
        if not nu * beta / 2.0 > limite + kappa.k[0]:
            raise DomainError(f"{familia} II exige nu beta/2 > (m-1)beta/2 + k_1; recebido nu={nu}, kappa={kappa.k}.")
        if not n * beta / 2.0 > limite + tau.k[0]:
            raise DomainError(f"{familia} II exige n beta/2 > (m-1)beta/2 + t_1; recebido n={n}, tau={tau.k}.")


def _log_beta_function(nu: float, n: int, kappa: WeightVector, tau: WeightVector, beta: int, tipo_i: bool) -> float:
    funcao = log_c_beta if tipo_i else log_k_beta
    return funcao(nu * beta / 2.0, kappa, n * beta / 2.0, tau, kappa.m, beta)


def _ball_kernel(rr: np.ndarray, p_nu: float, kappa: np.ndarray, tau: np.ndarray, m: int, beta: int, tipo_ii: bool):
    """
    Núcleo comum de Pearson e beta em termos de B = R*R:
    ((nu-m+1)beta/2-1) log|I-B| + log q_kappa(I-B) + log q_tau(B), com inversos no tipo II.
    """
    complemento = identity_data(m, beta) - rr
    t_c, ok = cholesky_data(complemento, beta)
    log_piv_c = log_pivots_from_factor(t_c)
    log_q_k, ok_k = _weighted_log_q(log_piv_c, complemento, kappa, beta, tipo_ii)
    ok = ok & ok_k
    log_q_t = np.zeros(ok.shape)
    if np.any(tau):
        t_b, ok_b = cholesky_data(rr, beta)
        log_q_t, ok_t = _weighted_log_q(log_pivots_from_factor(t_b), rr, tau, beta, tipo_ii)
        ok = ok & ok_b & ok_t
    with np.errstate(invalid="ignore", divide="ignore"):
        valor = ((p_nu - m + 1) * beta / 2.0 - 1.0) * np.sum(log_piv_c, axis=-1) + log_q_k + log_q_t
    return valor, ok


def pearson2_riesz_log_density_data(q: np.ndarray, p: PearsonIIRieszParams) -> Tuple[np.ndarray, np.ndarray]:
    r = p.standardize_data(q)
    rr = gram_data(r, p.beta)
    valor, ok = _ball_kernel(rr, p.nu, p.kappa.as_array(), p.tau.as_array(), p.m, p.beta, p.variant == "II")
    return _masked(p._log_const + valor, ok), ok


def pearson2_riesz_logpdf(q: MatVar, p: PearsonIIRieszParams) -> float:
    """
    Log-densidade Pearson tipo II-Riesz (forma de locação-escala).

    Forma padrão (tipo I): log Gamma_m[n beta/2] - (mn beta/2) log pi - log B_m[nu beta/2, kappa; n beta/2, tau]
    + ((nu-m+1)beta/2-1) log|I-R*R| + log q_kappa(I-R*R) + log q_tau(R*R).
    A forma geral avalia R = u(Omega)(Q-mu)u(Xi)^{-1} e soma
    (m beta/2) log|Omega| - (n beta/2) log|Xi|. O tipo II usa a k-beta e os
    argumentos invertidos.

    Returns:
        Log-densidade; -inf fora do suporte (ver evaluate_pearson2_riesz para o indicador)
    """
    return evaluate_pearson2_riesz(q, p).logpdf


def evaluate_pearson2_riesz(q: MatVar, p: PearsonIIRieszParams) -> DensityValue:
    dados = _point_data(q, p.beta, (p.n, p.m), "Q")
    valor, ok = pearson2_riesz_log_density_data(dados, p)
    return DensityValue(float(valor), bool(ok))


@dataclass(frozen=True, eq=False)
class TransposedPearsonIIRieszParams:
    """
    Forma transposta: Q1 n x m com R1 R1* < I, parâmetros (a, m, kappa1, tau1) e
    pesos de tamanho n. Obtida pela substituição R -> R1*, m <-> n, nu -> a.

    Args:
        a: Graus de liberdade
        m: Número de colunas de Q1
        kappa1, tau1: Pesos de tamanho n
        beta: Dimensão da álgebra
        mu: Locação n x m
        omega: Escala n x n
        xi: Escala m x m
        variant: "I" ou "II"
    """

    a: float
    m: int
    kappa1: WeightVector
    tau1: WeightVector
    beta: int
    mu: Optional[MatVar] = None
    omega: Optional[HermMatrix] = None
    xi: Optional[HermMatrix] = None
    variant: Variant = "I"

    def __post_init__(self):
        kappa1, tau1 = as_weights(self.kappa1), as_weights(self.tau1)
        object.__setattr__(self, "kappa1", kappa1)
        object.__setattr__(self, "tau1", tau1)
        mu_t = None
        if self.mu is not None:
            mu_t = MatVar(conj_transpose_data(_location_or_zero(self.mu, kappa1.m, self.m, self.beta).data, self.beta), self.mu.tag)
        pearson = PearsonIIRieszParams(
            nu=self.a, n=self.m, kappa=kappa1, tau=tau1, beta=self.beta,
            mu=mu_t, omega=self.xi, xi=self.omega, variant=self.variant,
        )
        object.__setattr__(self, "_pearson", pearson)

    @property
    def n(self) -> int:
        return self.kappa1.m

    def as_pearson(self) -> PearsonIIRieszParams:
        """Parâmetros equivalentes para Q1* (m x n)."""
        return self._pearson


def pearson2_riesz_transposed_log_density_data(q1: np.ndarray, p: TransposedPearsonIIRieszParams):
    return pearson2_riesz_log_density_data(conj_transpose_data(q1, p.beta), p.as_pearson())


def evaluate_pearson2_riesz_transposed(q1: MatVar, p: TransposedPearsonIIRieszParams) -> DensityValue:
    dados = _point_data(q1, p.beta, (p.n, p.m), "Q1")
    valor, ok = pearson2_riesz_transposed_log_density_data(dados, p)
    return DensityValue(float(valor), bool(ok))


def pearson2_riesz_transposed_logpdf(q1: MatVar, p: TransposedPearsonIIRieszParams) -> float:
    """Log-densidade da forma transposta, avaliada como Pearson de Q1* com papéis trocados."""
    return evaluate_pearson2_riesz_transposed(q1, p).logpdf


# ---------------------------------------------------------------------------
# beta-Riesz
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BetaRieszParams:
    """
    beta-Riesz tipo I, variante c (componentes tipo I) ou k (componentes tipo II).

    B = R*R com R Pearson II-Riesz padrão; com Theta, C = u(Theta)* B u(Theta).
    """

    nu: float
    n: int
    kappa: WeightVector
    tau: WeightVector
    beta: int
    theta: Optional[HermMatrix] = None
    variant: BetaVariant = "c"

    def __post_init__(self):
        AlgebraTag(self.beta).require_matrix_level("distribuição beta-Riesz")
        _check_variant(self.variant, ("c", "k"))
        kappa, tau = as_weights(self.kappa), as_weights(self.tau)
        if kappa.m != tau.m:
            raise DimensionError(f"kappa e tau precisam ter o mesmo tamanho ({kappa.m} != {tau.m}).")
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "tau", tau)
        m, beta = kappa.m, self.beta
        if self.n < m:
            raise DomainError(f"beta-Riesz exige n >= m (B = R*R positiva definida); recebido n={self.n}, m={m}.")
        object.__setattr__(self, "theta", _scale_or_identity(self.theta, m, beta, "Theta"))
        _check_beta_domain(self.nu, self.n, kappa, tau, beta, self.variant == "c", f"beta-Riesz ({self.variant})")
        warn_if_unordered(kappa, "kappa")
        warn_if_unordered(tau, "tau")
        u_theta = _upper_factor(self.theta, "Theta")
        object.__setattr__(self, "_u_theta", u_theta)
        log_det_theta = float(log_det_from_factor(u_theta))
        log_const = -_log_beta_function(self.nu, self.n, kappa, tau, beta, self.variant == "c")
        log_const -= ((m - 1) * beta / 2.0 + 1.0) * log_det_theta
        object.__setattr__(self, "_log_const", float(log_const))

    @classmethod
    def transposed(
        cls,
        a: float,
        m: int,
        kappa1: WeightLike,
        tau1: WeightLike,
        beta: int,
        theta: Optional[HermMatrix] = None,
        variant: BetaVariant = "c",
    ) -> "BetaRieszParams":
        """B1 = R1 R1* (n x n) pela substituição B -> B1, m -> n, n -> m, nu -> a."""
        return cls(nu=a, n=m, kappa=as_weights(kappa1), tau=as_weights(tau1), beta=beta, theta=theta, variant=variant)

    @property
    def m(self) -> int:
        return self.kappa.m

    def pearson(self) -> PearsonIIRieszParams:
        """Pearson II-Riesz padrão cuja matriz de Gram tem esta lei (Theta = I)."""
        return PearsonIIRieszParams(
            nu=self.nu, n=self.n, kappa=self.kappa, tau=self.tau, beta=self.beta,
            variant="I" if self.variant == "c" else "II",
        )


def beta_riesz_log_density_data(c: np.ndarray, p: BetaRieszParams) -> Tuple[np.ndarray, np.ndarray]:
    beta, m = p.beta, p.m
    b = _unscale_beta_data(c, p._u_theta, beta)
    t_b, ok_b = cholesky_data(b, beta)
    log_det_b = np.sum(log_pivots_from_factor(t_b), axis=-1)
    valor, ok = _ball_kernel(b, p.nu, p.kappa.as_array(), p.tau.as_array(), m, beta, p.variant == "k")
    ok = ok & ok_b
    with np.errstate(invalid="ignore"):
        valor = p._log_const + ((p.n - m + 1) * beta / 2.0 - 1.0) * log_det_b + valor
    return _masked(valor, ok), ok


def _unscale_beta_data(c: np.ndarray, u_theta: np.ndarray, beta: int) -> np.ndarray:
    """B = u(Theta)*^{-1} C u(Theta)^{-1}, simetrizada."""
    b = tri_solve_right_data(tri_solve_left_conj_data(u_theta, c, beta), u_theta, beta)
    return 0.5 * (b + conj_transpose_data(b, beta))


def evaluate_beta_riesz(b: HermMatrix, p: BetaRieszParams) -> DensityValue:
    dados = _point_data(b, p.beta, (p.m, p.m), "B")
    valor, ok = beta_riesz_log_density_data(dados, p)
    return DensityValue(float(valor), bool(ok))


def beta_riesz_logpdf(b: HermMatrix, p: BetaRieszParams) -> float:
    """
    Log-densidade beta-Riesz.

    Variante c (Theta = I): ((n-m+1)beta/2-1) log|B| - log B_m[nu beta/2, kappa; n beta/2, tau]
    + ((nu-m+1)beta/2-1) log|I-B| + log q_kappa(I-B) + log q_tau(B). A variante k
    usa a k-beta e argumentos invertidos. Com Theta, avalia em
    B = u(Theta)*^{-1} C u(Theta)^{-1} e subtrai ((m-1)beta/2+1) log|Theta|.
    """
    return evaluate_beta_riesz(b, p).logpdf


def evaluate_riesz(v: MatVar, p: RieszParams) -> DensityValue:
    dados = _point_data(v, p.beta, (p.m, p.m), "V")
    valor, ok = riesz_log_density_data(dados, p)
    return DensityValue(float(valor), bool(ok))


def evaluate_kotz_riesz(y: MatVar, p: KotzRieszParams) -> DensityValue:
    dados = _point_data(y, p.beta, (p.n, p.m), "Y")
    valor, ok = kotz_riesz_log_density_data(dados, p)
    return DensityValue(float(valor), bool(ok))
