"""
Funções especiais escalares em log: gama multivariada com peso (duas convenções
de sinal), símbolo de Pochhammer generalizado, funções c-beta e k-beta e volume
da variedade de Stiefel.

beta entra aqui apenas como parâmetro real, então beta = 8 é aceito.
"""

from dataclasses import dataclass
from typing import Literal, Tuple

import numpy as np
from scipy.special import gammaln, gammasgn

from algebra import AlgebraTag
from exceptions import DomainError
from weights import WeightLike, WeightVector, as_weights

Sign = Literal["plus", "minus"]


@dataclass(frozen=True, eq=False)
class GammaWeightArgs:
    """Argumentos de Gamma_m^beta[a, kappa] (sign="plus") ou Gamma_m^beta[a, -kappa] (sign="minus")."""

    a: float
    kappa: WeightVector
    beta: int
    sign: Sign = "plus"

    def __post_init__(self):
        AlgebraTag(self.beta)
        object.__setattr__(self, "kappa", as_weights(self.kappa))
        if self.sign not in ("plus", "minus"):
            raise DomainError(f"sign deve ser 'plus' ou 'minus', recebido '{self.sign}'.")

    @property
    def m(self) -> int:
        return self.kappa.m

    def gamma_arguments(self) -> np.ndarray:
        """Argumentos das gamas de Euler do produto."""
        k = self.kappa.as_array()
        i = np.arange(1, self.m + 1)
        if self.sign == "plus":
            return self.a + k - (i - 1) * self.beta / 2.0
        return self.a - k - (self.m - i) * self.beta / 2.0


def _log_pi_prefactor(m: int, beta: int) -> float:
    return m * (m - 1) * beta / 4.0 * np.log(np.pi)


def lgamma_m_weighted(args: GammaWeightArgs) -> float:
    """
    log Gamma_m^beta[a, kappa] (plus) ou log Gamma_m^beta[a, -kappa] (minus).

    Args:
        args: Forma, pesos, beta e convenção de sinal

    Returns:
        (m(m-1)beta/4) log(pi) + soma dos log Gamma dos argumentos deslocados

    Raises:
        DomainError: Se algum argumento for <= 0, indicando o índice
    """
    argumentos = args.gamma_arguments()
    for i, x in enumerate(argumentos, start=1):
        if not x > 0.0:
            raise DomainError(
                f"Gamma_m[{args.a}, {'' if args.sign == 'plus' else '-'}kappa] fora do domínio: "
                f"argumento do índice i={i} vale {x:.6g} (precisa ser > 0)."
            )
    return float(_log_pi_prefactor(args.m, args.beta) + np.sum(gammaln(argumentos)))


def log_gamma_weighted(a: float, kappa: WeightLike, beta: int, sign: Sign = "plus") -> float:
    return lgamma_m_weighted(GammaWeightArgs(a, as_weights(kappa), beta, sign))


def lgamma_m(a: float, m: int, beta: int) -> float:
    """log Gamma_m^beta[a] (peso zero)."""
    return log_gamma_weighted(a, WeightVector.zeros(m), beta)


def _rising_factorial(x: float, k: int) -> Tuple[float, float]:
    """(x)_k com inteiro k de qualquer sinal, em (log|.|, sinal)."""
    if k >= 0:
        fatores = x + np.arange(k)
        if np.any(fatores == 0.0):
            return -np.inf, 0.0
        return float(np.sum(np.log(np.abs(fatores)))), float(np.prod(np.sign(fatores)))
    # (x)_{-j} = 1 / ((x-1)(x-2)...(x-j))
    fatores = x - np.arange(1, -k + 1)
    if np.any(fatores == 0.0):
        raise DomainError(f"Pochhammer ({x})_{k} tem polo.")
    return float(-np.sum(np.log(np.abs(fatores)))), float(np.prod(np.sign(fatores)))


def _is_pole(x: float) -> bool:
    return x <= 0.0 and float(x).is_integer()


def pochhammer_weighted(a: float, kappa: WeightLike, beta: int) -> Tuple[float, float]:
    """
    Símbolo de Pochhammer generalizado [a]_kappa^beta = prod (a - (i-1)beta/2)_{k_i}.

    Pesos inteiros usam o produto ascendente com sinal exato; pesos não inteiros
    usam a razão de gamas.

    Returns:
        Tupla (log|valor|, sinal); sinal 0 indica valor nulo

    Raises:
        DomainError: Se a razão de gamas cair em um polo
    """
    AlgebraTag(beta)
    k = as_weights(kappa).as_array()
    log_abs, sinal = 0.0, 1.0
    for i, ki in enumerate(k, start=1):
        x = a - (i - 1) * beta / 2.0
        if float(ki).is_integer():
            parcial, s = _rising_factorial(x, int(ki))
        else:
            if _is_pole(x + ki) or _is_pole(x):
                raise DomainError(
                    f"Pochhammer generalizado com polo no índice i={i}: Gamma({x + ki:.6g}) / Gamma({x:.6g})."
                )
            parcial = float(gammaln(x + ki) - gammaln(x))
            s = float(gammasgn(x + ki) * gammasgn(x))
        log_abs += parcial
        sinal *= s
        if sinal == 0.0:
            return -np.inf, 0.0
    return log_abs, sinal


def log_c_beta(a: float, kappa: WeightLike, b: float, tau: WeightLike, m: int, beta: int) -> float:
    """
    log da função c-beta generalizada Gamma[a,kappa]Gamma[b,tau] / Gamma[a+b,kappa+tau].

    Raises:
        DomainError: Se a <= (m-1)beta/2 - k_m ou b <= (m-1)beta/2 - t_m
    """
    kappa, tau = as_weights(kappa), as_weights(tau)
    _check_length(kappa, tau, m)
    limite = (m - 1) * beta / 2.0
    if not a > limite - kappa.k[-1]:
        raise DomainError(f"c-beta exige a > (m-1)beta/2 - k_m = {limite - kappa.k[-1]:.6g}; recebido a={a}.")
    if not b > limite - tau.k[-1]:
        raise DomainError(f"c-beta exige b > (m-1)beta/2 - t_m = {limite - tau.k[-1]:.6g}; recebido b={b}.")
    return (
        log_gamma_weighted(a, kappa, beta)
        + log_gamma_weighted(b, tau, beta)
        - log_gamma_weighted(a + b, kappa + tau, beta)
    )


def log_k_beta(a: float, kappa: WeightLike, b: float, tau: WeightLike, m: int, beta: int) -> float:
    """
    log da função k-beta generalizada Gamma[a,-kappa]Gamma[b,-tau] / Gamma[a+b,-kappa-tau].

    Raises:
        DomainError: Se a <= (m-1)beta/2 + k_1 ou b <= (m-1)beta/2 + t_1
    """
    kappa, tau = as_weights(kappa), as_weights(tau)
    _check_length(kappa, tau, m)
    limite = (m - 1) * beta / 2.0
    if not a > limite + kappa.k[0]:
        raise DomainError(f"k-beta exige a > (m-1)beta/2 + k_1 = {limite + kappa.k[0]:.6g}; recebido a={a}.")
    if not b > limite + tau.k[0]:
        raise DomainError(f"k-beta exige b > (m-1)beta/2 + t_1 = {limite + tau.k[0]:.6g}; recebido b={b}.")
    return (
        log_gamma_weighted(a, kappa, beta, "minus")
        + log_gamma_weighted(b, tau, beta, "minus")
        - log_gamma_weighted(a + b, kappa + tau, beta, "minus")
    )


def _check_length(kappa: WeightVector, tau: WeightVector, m: int) -> None:
    if kappa.m != m or tau.m != m:
        raise DomainError(f"Pesos precisam ter tamanho m={m}; recebidos {kappa.m} e {tau.m}.")


def log_stiefel_volume(m: int, n: int, beta: int) -> float:
    """
    log do volume da variedade de Stiefel: log[2^m pi^{mn beta/2} / Gamma_m^beta[n beta/2]].

    Raises:
        DomainError: Se não valer n >= m >= 1
    """
    if not (m >= 1 and n >= m):
        raise DomainError(f"Stiefel exige n >= m >= 1; recebido m={m}, n={n}.")
    return float(m * np.log(2.0) + m * n * beta / 2.0 * np.log(np.pi) - lgamma_m(n * beta / 2.0, m, beta))
