"""
Vetor de pesos kappa e a potência generalizada q_kappa (highest weight vector).

Todos os valores são devolvidos em log. Com A = L*DL (L unitriangular superior)
vale q_kappa(A) = prod lambda_i^{k_i}; a versão "estrela" usa os menores
principais finais, isto é, os pivôs de J A J (J = permutação reversa), o que
dá q_kappa(A^{-1}) = q*_{-kappa*}(A) sem inverter A.
"""

import logging
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple, Union

import numpy as np

from exceptions import DimensionError, DomainError, NotPositiveDefiniteError
from matvar import (
    HermMatrix,
    cholesky_data,
    log_pivots_from_factor,
    principal_minor_dets,
    reversal_data,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class WeightVector:
    """Pesos (k_1, ..., k_m) em R^m."""

    k: Tuple[float, ...]

    def __post_init__(self):
        valores = tuple(float(v) for v in np.atleast_1d(np.asarray(self.k, dtype=float)))
        if not valores:
            raise DimensionError("Vetor de pesos vazio.")
        if not all(np.isfinite(valores)):
            raise DomainError(f"Pesos precisam ser finitos: {valores}.")
        object.__setattr__(self, "k", valores)

    @classmethod
    def zeros(cls, m: int) -> "WeightVector":
        return cls((0.0,) * m)

    @classmethod
    def constant(cls, m: int, p: float) -> "WeightVector":
        return cls((float(p),) * m)

    @property
    def m(self) -> int:
        return len(self.k)

    @property
    def total(self) -> float:
        """k = k_1 + ... + k_m."""
        return float(sum(self.k))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.k, dtype=float)

    def reversed(self) -> "WeightVector":
        """kappa* = (k_m, ..., k_1)."""
        return WeightVector(self.k[::-1])

    def shift(self, p: float) -> "WeightVector":
        return WeightVector(tuple(v + p for v in self.k))

    def is_nonincreasing(self) -> bool:
        return all(a >= b for a, b in zip(self.k, self.k[1:]))

    def is_zero(self) -> bool:
        return all(v == 0.0 for v in self.k)

    def is_integer(self) -> bool:
        return all(float(v).is_integer() for v in self.k)

    def __neg__(self) -> "WeightVector":
        return WeightVector(tuple(-v for v in self.k))

    def __add__(self, other: "WeightVector") -> "WeightVector":
        other = as_weights(other)
        if other.m != self.m:
            raise DimensionError(f"Soma de pesos de tamanhos {self.m} e {other.m}.")
        return WeightVector(tuple(a + b for a, b in zip(self.k, other.k)))

    def __len__(self) -> int:
        return self.m

    def __iter__(self) -> Iterator[float]:
        return iter(self.k)

    def __repr__(self) -> str:
        return f"WeightVector{self.k}"


WeightLike = Union[WeightVector, Sequence[float], Iterable[float]]


def as_weights(kappa: WeightLike) -> WeightVector:
    if isinstance(kappa, WeightVector):
        return kappa
    return WeightVector(tuple(kappa))


def warn_if_unordered(kappa: WeightVector, nome: str = "kappa") -> None:
    """Avisa quando os pesos não são não crescentes (interpretação estatística duvidosa)."""
    if not kappa.is_nonincreasing():
        warnings.warn(
            f"Pesos {nome}={kappa.k} não satisfazem k_1 >= ... >= k_m; "
            "a avaliação é válida, mas a interpretação estatística pode não ser.",
            UserWarning,
            stacklevel=3,
        )


# ---------------------------------------------------------------------------
# Núcleo em arrays
# ---------------------------------------------------------------------------

def log_q_from_log_pivots(log_pivots: np.ndarray, k: np.ndarray) -> np.ndarray:
    """sum k_i log lambda_i, com peso zero anulando o termo mesmo se lambda_i = 0."""
    with np.errstate(invalid="ignore"):
        termos = np.where(k == 0.0, 0.0, k * log_pivots)
    return np.sum(termos, axis=-1)


def log_q_data(s: np.ndarray, k: np.ndarray, beta: int) -> Tuple[np.ndarray, np.ndarray]:
    """log q_kappa(S) em lote; devolve também a máscara de positividade."""
    t, ok = cholesky_data(s, beta)
    return log_q_from_log_pivots(log_pivots_from_factor(t), k), ok


def log_q_star_data(s: np.ndarray, k: np.ndarray, beta: int) -> Tuple[np.ndarray, np.ndarray]:
    """log q*_kappa(S) = log q_kappa(J S J) (menores principais finais)."""
    return log_q_data(reversal_data(s), k, beta)


def log_q_inverse_data(s: np.ndarray, k: np.ndarray, beta: int) -> Tuple[np.ndarray, np.ndarray]:
    """log q_kappa(S^{-1}) = log q*_{-kappa*}(S), sem formar S^{-1}."""
    return log_q_star_data(s, -k[::-1], beta)


# ---------------------------------------------------------------------------
# API
# ---------------------------------------------------------------------------

def _prepare(s: HermMatrix, kappa: WeightLike) -> np.ndarray:
    s.tag.require_matrix_level("q_kappa")
    k = as_weights(kappa).as_array()
    if k.shape[0] != s.dim:
        raise DimensionError(f"Peso de tamanho {k.shape[0]} para matriz {s.dim}x{s.dim}.")
    return k


def _finish(valor: np.ndarray, ok: np.ndarray) -> float:
    if not bool(ok):
        raise NotPositiveDefiniteError("q_kappa exige matriz positiva definida.")
    return float(valor)


def q_kappa(s: HermMatrix, kappa: WeightLike) -> float:
    """
    log q_kappa(S) = sum k_i log lambda_i pelos pivôs L*DL.

    Raises:
        NotPositiveDefiniteError: Se S não for positiva definida
        DimensionError: Se len(kappa) != dim(S)
    """
    k = _prepare(s, kappa)
    return _finish(*log_q_data(s.data, k, s.beta))


def q_kappa_minors(s: HermMatrix, kappa: WeightLike) -> float:
    """log q_kappa(S) pela fórmula dos menores principais líderes."""
    k = _prepare(s, kappa)
    log_menores = np.log(principal_minor_dets(s))
    expoentes = np.append(k[:-1] - k[1:], k[-1])
    return float(log_q_from_log_pivots(log_menores, expoentes))


def q_star_kappa(s: HermMatrix, kappa: WeightLike) -> float:
    """log q*_kappa(S): mesmo esquema de q_kappa com os menores principais finais."""
    k = _prepare(s, kappa)
    return _finish(*log_q_star_data(s.data, k, s.beta))


def q_kappa_of_inverse(s: HermMatrix, kappa: WeightLike) -> float:
    """log q_kappa(S^{-1}) via q*_{-kappa*}(S)."""
    k = _prepare(s, kappa)
    return _finish(*log_q_inverse_data(s.data, k, s.beta))
