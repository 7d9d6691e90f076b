"""
Geradores aleatórios para Riesz, Kotz-Riesz, Pearson tipo II-Riesz e beta-Riesz,
além de matrizes de Haar na variedade de Stiefel.

Gerador: numpy Philox (contador) semeado com inteiro de 64 bits; fluxos
paralelos usam a semente base XOR o índice do fluxo. Cada função ``*_rvs``
devolve um lote (size, ...) como array; ``sample_*`` devolve um único objeto.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from algebra import AlgebraTag, conj_array, mul_array, norm_sq_array
from densities import (
    BetaRieszParams,
    KotzRieszParams,
    PearsonIIRieszParams,
    RieszParams,
    TransposedPearsonIIRieszParams,
)
from exceptions import DomainError, NotPositiveDefiniteError
from matvar import (
    HermMatrix,
    MatVar,
    cholesky_data,
    conj_transpose_data,
    gram_data,
    hermitize_data,
    matmul_data,
    reversal_data,
    tri_solve_right_data,
    upper_lower_factor,
)

logger = logging.getLogger(__name__)

GENERATOR_NAME = "Philox4x64"


def make_rng(seed: int) -> np.random.Generator:
    """Gerador Philox reprodutível entre plataformas."""
    return np.random.Generator(np.random.Philox(int(seed) & 0xFFFFFFFFFFFFFFFF))


def stream_rng(seed: int, index: int) -> np.random.Generator:
    """Fluxo independente: semente base XOR índice."""
    return make_rng(int(seed) ^ int(index))


@dataclass(frozen=True)
class RngState:
    """Semente e gerador associado; chamadas iguais produzem fluxos iguais."""

    seed: int

    def generator(self) -> np.random.Generator:
        return make_rng(self.seed)

    def stream(self, index: int) -> np.random.Generator:
        return stream_rng(self.seed, index)


def _size_tuple(size: Optional[int]) -> Tuple[int, ...]:
    return () if size is None else (int(size),)


# ---------------------------------------------------------------------------
# Riesz (Bartlett)
# ---------------------------------------------------------------------------

def _bartlett_factor(shapes: np.ndarray, beta: int, rng: np.random.Generator, size: Tuple[int, ...]) -> np.ndarray:
    """T triangular superior: t_ii^2 ~ Gamma(shapes_i, taxa beta), fora da diagonal N(0, 1/(2 beta)) por componente."""
    if np.any(shapes <= 0.0):
        raise DomainError(f"Formas de Bartlett precisam ser positivas: {shapes.tolist()}.")
    m = shapes.shape[0]
    t = np.zeros(size + (m, m, beta))
    diag = rng.gamma(shape=shapes, scale=1.0 / beta, size=size + (m,))
    t[..., np.arange(m), np.arange(m), 0] = np.sqrt(diag)
    iu, ju = np.triu_indices(m, k=1)
    if iu.size:
        t[..., iu, ju, :] = rng.normal(0.0, np.sqrt(1.0 / (2.0 * beta)), size=size + (iu.size, beta))
    return t


def riesz_rvs(p: RieszParams, rng: np.random.Generator, size: Optional[int] = None) -> np.ndarray:
    """
    Lote de matrizes de Riesz.

    Tipo I: V = T*T com formas a + k_i - (i-1)beta/2. Tipo II: formas
    a - k_{m-i+1} - (i-1)beta/2 e V = J T*T J. Escala geral por congruência:
    u(Xi)* V u(Xi) no tipo I e L V L* (Xi = L L*, L superior) no tipo II.
    """
    m, beta = p.m, p.beta
    k = p.kappa.as_array()
    i = np.arange(m)
    dims = _size_tuple(size)
    if p.variant == "I":
        shapes = p.a + k - i * beta / 2.0
        v = gram_data(_bartlett_factor(shapes, beta, rng, dims), beta)
        u = cholesky_data(p.xi.data, beta)[0]
        v = matmul_data(matmul_data(conj_transpose_data(u, beta), v, beta), u, beta)
    else:
        shapes = p.a - k[::-1] - i * beta / 2.0
        v = reversal_data(gram_data(_bartlett_factor(shapes, beta, rng, dims), beta))
        lower = upper_lower_factor(p.xi).data
        v = matmul_data(matmul_data(lower, v, beta), conj_transpose_data(lower, beta), beta)
    return hermitize_data(v, beta)


def sample_riesz(p: RieszParams, rng: np.random.Generator) -> HermMatrix:
    return HermMatrix(riesz_rvs(p, rng), AlgebraTag(p.beta))


# ---------------------------------------------------------------------------
# Haar na variedade de Stiefel
# ---------------------------------------------------------------------------

def haar_stiefel_rvs(m: int, n: int, beta: int, rng: np.random.Generator, size: Optional[int] = None) -> np.ndarray:
    """
    Matrizes n x m com colunas ortonormais, distribuídas pela medida de Haar.

    Gram-Schmidt (duas passagens) de uma Gaussiana: é o fator Q da
    decomposição X = QT com diagonal de T real positiva.
    """
    AlgebraTag(beta).require_matrix_level("sample_haar_stiefel")
    if not (m >= 1 and n >= m):
        raise DomainError(f"Stiefel exige n >= m >= 1; recebido m={m}, n={n}.")
    dims = _size_tuple(size)
    x = rng.standard_normal(dims + (n, m, beta))
    q = np.zeros_like(x)
    for j in range(m):
        v = x[..., :, j, :]
        if j > 0:
            base = q[..., :, :j, :]
            for _ in range(2):
                coef = np.sum(mul_array(conj_array(base, beta), v[..., :, None, :], beta), axis=-3)
                v = v - np.sum(mul_array(base, coef[..., None, :, :], beta), axis=-2)
        norma = np.sqrt(np.sum(norm_sq_array(v), axis=-1))
        q[..., :, j, :] = v / norma[..., None, None]
    return q


def sample_haar_stiefel(m: int, n: int, beta: int, rng: np.random.Generator) -> MatVar:
    return MatVar(haar_stiefel_rvs(m, n, beta, rng), AlgebraTag(beta))


# ---------------------------------------------------------------------------
# Kotz-Riesz
# ---------------------------------------------------------------------------

def _standard_kotz_riesz(kappa, n: int, beta: int, variant: str, rng: np.random.Generator, dims: Tuple[int, ...]) -> np.ndarray:
    """X0 = V1 u(S), S ~ Riesz(n beta/2, kappa, I) da mesma variante e V1 de Haar."""
    riesz = RieszParams(a=n * beta / 2.0, kappa=kappa, beta=beta, variant=variant)
    s = riesz_rvs(riesz, rng, dims[0] if dims else None)
    u, ok = cholesky_data(s, beta)
    if not np.all(ok):
        raise NotPositiveDefiniteError("Amostra de Riesz degenerada no gerador de Kotz-Riesz.")
    v1 = haar_stiefel_rvs(riesz.m, n, beta, rng, dims[0] if dims else None)
    return matmul_data(v1, u, beta)


def kotz_riesz_rvs(p: KotzRieszParams, rng: np.random.Generator, size: Optional[int] = None) -> np.ndarray:
    """Y = u(Theta)* X0 u(Sigma) + mu."""
    dims = _size_tuple(size)
    x0 = _standard_kotz_riesz(p.kappa, p.n, p.beta, p.variant, rng, dims)
    beta = p.beta
    y = matmul_data(matmul_data(conj_transpose_data(p._u_theta, beta), x0, beta), p._u_sigma, beta)
    return y + p.mu.data


def sample_kotz_riesz(p: KotzRieszParams, rng: np.random.Generator) -> MatVar:
    return MatVar(kotz_riesz_rvs(p, rng), AlgebraTag(p.beta))


# ---------------------------------------------------------------------------
# Pearson tipo II-Riesz
# ---------------------------------------------------------------------------

def construct_pearson2_data(x: np.ndarray, u1: np.ndarray, beta: int, variant: str = "I") -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    U = U1 + X*X e R com I - R*R > 0.

    Tipo I: U = L*L (Cholesky superior) e R = X L^{-1}.
    Tipo II: U = L L* com L superior e R = X (L*)^{-1}, calculado por
    J (Cholesky de J U J) J.

    Returns:
        (R, U, ok) com ok indicando fatoração bem-sucedida
    """
    u = hermitize_data(u1 + gram_data(x, beta), beta)
    if variant == "I":
        t, ok = cholesky_data(u, beta)
        r = tri_solve_right_data(x, t, beta)
    else:
        t, ok = cholesky_data(reversal_data(u), beta)
        r = tri_solve_right_data(x[..., :, ::-1, :], t, beta)[..., :, ::-1, :]
    return r, u, ok


def construct_pearson2(x: MatVar, u1: HermMatrix, variant: str = "I") -> Tuple[MatVar, HermMatrix]:
    """
    Constrói (R, U) a partir de X e U1.

    Raises:
        NotPositiveDefiniteError: Se U = U1 + X*X não puder ser fatorada
    """
    x.tag.require_matrix_level("construct_pearson2")
    r, u, ok = construct_pearson2_data(x.data, u1.data, x.beta, variant)
    if not bool(ok):
        raise NotPositiveDefiniteError("U = U1 + X*X não é positiva definida.")
    return MatVar(r, x.tag), HermMatrix(u, x.tag)


def pearson2_riesz_joint_rvs(p: PearsonIIRieszParams, rng: np.random.Generator, size: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """Pares (R padrão, U) com U1 ~ Riesz(nu beta/2, kappa, I) e X ~ Kotz-Riesz(tau, 0, I, I)."""
    dims = _size_tuple(size)
    riesz = RieszParams(a=p.nu * p.beta / 2.0, kappa=p.kappa, beta=p.beta, variant=p.variant)
    u1 = riesz_rvs(riesz, rng, size)
    x = _standard_kotz_riesz(p.tau, p.n, p.beta, p.variant, rng, dims)
    r, u, ok = construct_pearson2_data(x, u1, p.beta, p.variant)
    if not np.all(ok):
        raise NotPositiveDefiniteError("Falha de fatoração ao construir amostras de Pearson tipo II-Riesz.")
    return r, u


def pearson2_riesz_rvs(p: PearsonIIRieszParams, rng: np.random.Generator, size: Optional[int] = None) -> np.ndarray:
    """Q = u(Omega)^{-1} R u(Xi) + mu."""
    r, _ = pearson2_riesz_joint_rvs(p, rng, size)
    return p.location_scale_data(r)


def sample_pearson2_riesz(p: PearsonIIRieszParams, rng: np.random.Generator) -> MatVar:
    return MatVar(pearson2_riesz_rvs(p, rng), AlgebraTag(p.beta))


def pearson2_riesz_transposed_rvs(p: TransposedPearsonIIRieszParams, rng: np.random.Generator, size: Optional[int] = None) -> np.ndarray:
    """Q1 como conjugada transposta de uma amostra de Pearson com papéis trocados."""
    return conj_transpose_data(pearson2_riesz_rvs(p.as_pearson(), rng, size), p.beta)


def sample_pearson2_riesz_transposed(p: TransposedPearsonIIRieszParams, rng: np.random.Generator) -> MatVar:
    return MatVar(pearson2_riesz_transposed_rvs(p, rng), AlgebraTag(p.beta))


# ---------------------------------------------------------------------------
# beta-Riesz
# ---------------------------------------------------------------------------

def beta_riesz_rvs(p: BetaRieszParams, rng: np.random.Generator, size: Optional[int] = None) -> np.ndarray:
    """B = R*R de Pearson padrão; com Theta, C = u(Theta)* B u(Theta)."""
    beta = p.beta
    r, _ = pearson2_riesz_joint_rvs(p.pearson(), rng, size)
    b = gram_data(r, beta)
    u = p._u_theta
    c = matmul_data(matmul_data(conj_transpose_data(u, beta), b, beta), u, beta)
    return hermitize_data(c, beta)


def sample_beta_riesz(p: BetaRieszParams, rng: np.random.Generator) -> HermMatrix:
    return HermMatrix(beta_riesz_rvs(p, rng), AlgebraTag(p.beta))
