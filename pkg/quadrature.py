"""Quadratura adaptativa de Gauss-Legendre para as verificações de normalização."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.special import roots_legendre

from special import log_stiefel_volume

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error: float
    nodes: int
    converged: bool


@lru_cache(maxsize=None)
def _rule(order: int) -> Tuple[np.ndarray, np.ndarray]:
    x, w = roots_legendre(order)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def _panel(g: Integrand, a: float, b: float, order: int) -> float:
    x, w = _rule(order)
    meio, meia = 0.5 * (a + b), 0.5 * (b - a)
    valores = np.asarray(g(meio + meia * x), dtype=float)
    return float(meia * np.sum(w * valores))


def integrate(
    f: Integrand,
    lo: float,
    hi: float,
    tol: float = 1e-12,
    order: int = 20,
    max_depth: int = 60,
) -> QuadratureResult:
    """
    Integra f em [lo, hi] (f vetorizada).

    Aplica x = c + h(1.5v - 0.5v^3) em v ∈ [-1, 1], o que suaviza
    singularidades algébricas nas extremidades, e depois bissecção adaptativa
    comparando a regra no painel com a soma das duas metades.

    Args:
        f: Integrando vetorizado
        lo, hi: Intervalo finito
        tol: Tolerância absoluta por painel
        order: Pontos da regra de Gauss-Legendre
        max_depth: Profundidade máxima da bissecção

    Returns:
        QuadratureResult com valor, estimativa de erro, número de avaliações e convergência
    """
    c, h = 0.5 * (lo + hi), 0.5 * (hi - lo)

    def g(v: np.ndarray) -> np.ndarray:
        with np.errstate(invalid="ignore", over="ignore"):
            valores = np.asarray(f(c + h * (1.5 * v - 0.5 * v**3)), dtype=float)
        return np.nan_to_num(valores * h * 1.5 * (1.0 - v * v), nan=0.0, posinf=np.inf)

    total, erro, avaliacoes, convergiu = 0.0, 0.0, order, True
    pilha = [(-1.0, 1.0, _panel(g, -1.0, 1.0, order), 0)]
    while pilha:
        a, b, inteiro, profundidade = pilha.pop()
        meio = 0.5 * (a + b)
        esquerda, direita = _panel(g, a, meio, order), _panel(g, meio, b, order)
        avaliacoes += 2 * order
        diferenca = abs(esquerda + direita - inteiro)
        if diferenca <= tol or profundidade >= max_depth:
            if diferenca > tol:
                convergiu = False
            total += esquerda + direita
            erro += diferenca
            continue
        pilha.append((a, meio, esquerda, profundidade + 1))
        pilha.append((meio, b, direita, profundidade + 1))
    logger.debug("quadratura em [%g, %g]: %d avaliações, erro %.3e", lo, hi, avaliacoes, erro)
    return QuadratureResult(total, erro, avaliacoes, convergiu)


def integrate_half_line(f: Integrand, lo: float = 0.0, **kwargs) -> QuadratureResult:
    """Integra em [lo, inf) com x = lo + t/(1 - t)."""

    def g(t: np.ndarray) -> np.ndarray:
        um_menos = 1.0 - t
        seguro = np.where(um_menos > 0.0, um_menos, 1.0)
        valores = np.asarray(f(lo + t / seguro), dtype=float) / seguro**2
        return np.where(um_menos > 0.0, valores, 0.0)

    return integrate(g, 0.0, 1.0, **kwargs)


def radial_integral(f_radial: Integrand, dim: int, lo: float = 0.0, hi: Optional[float] = None, **kwargs) -> QuadratureResult:
    """
    Integral em R^dim de uma função radial: S_dim ∫ f(rho) rho^{dim-1} d rho.

    S_dim = 2 pi^{dim/2} / Gamma(dim/2) é a área da esfera unitária (Stiefel com m = 1).
    """
    area = np.exp(log_stiefel_volume(1, dim, 1))

    def g(rho: np.ndarray) -> np.ndarray:
        return area * np.asarray(f_radial(rho), dtype=float) * rho ** (dim - 1)

    if hi is None or np.isinf(hi):
        return integrate_half_line(g, lo, **kwargs)
    return integrate(g, lo, hi, **kwargs)
