"""
Aritmética escalar das quatro álgebras de divisão normadas reais.

Um escalar é um vetor de beta componentes reais (1, i, j, k, ...). A tabela de
multiplicação vem da construção de Cayley-Dickson, com
(a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from exceptions import AlgebraMismatchError, ConjecturalOctonionError, DimensionError

VALID_BETAS = (1, 2, 4, 8)
ALGEBRA_NAMES = {1: "reais", 2: "complexos", 4: "quatérnios", 8: "octônios"}


@dataclass(frozen=True)
class AlgebraTag:
    """Identifica a álgebra pela dimensão real beta."""

    beta: int

    def __post_init__(self):
        if self.beta not in VALID_BETAS:
            raise DimensionError(f"beta deve ser um de {VALID_BETAS}, recebido {self.beta}.")

    @property
    def name(self) -> str:
        return ALGEBRA_NAMES[self.beta]

    def require_matrix_level(self, operacao: str = "operação matricial") -> None:
        """Rejeita beta = 8 em operações matriciais."""
        if self.beta == 8:
            raise ConjecturalOctonionError(operacao)


def _cayley_dickson(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Produto de Cayley-Dickson recursivo sobre o último eixo."""
    dim = x.shape[-1]
    if dim == 1:
        return x * y
    h = dim // 2
    a, b = x[..., :h], x[..., h:]
    c, d = y[..., :h], y[..., h:]
    primeiro = _cayley_dickson(a, c) - _cayley_dickson(_conj_components(d), b)
    segundo = _cayley_dickson(d, a) + _cayley_dickson(b, _conj_components(c))
    return np.concatenate([primeiro, segundo], axis=-1)


def _conj_components(x: np.ndarray) -> np.ndarray:
    out = -x
    out[..., 0] = x[..., 0]
    return out


@lru_cache(maxsize=None)
def structure_constants(beta: int) -> np.ndarray:
    """
    Tensor de constantes de estrutura C[p, q, k] com (e_p e_q) = sum_k C[p, q, k] e_k.

    Args:
        beta: Dimensão da álgebra

    Returns:
        Array (beta, beta, beta) somente leitura
    """
    AlgebraTag(beta)
    base = np.eye(beta)
    tabela = _cayley_dickson(base[:, None, :], base[None, :, :])
    tabela.setflags(write=False)
    return tabela


@lru_cache(maxsize=None)
def conj_signs(beta: int) -> np.ndarray:
    """Vetor de sinais (1, -1, ..., -1) que implementa a conjugação."""
    sinais = -np.ones(beta)
    sinais[0] = 1.0
    sinais.setflags(write=False)
    return sinais


def mul_array(x: np.ndarray, y: np.ndarray, beta: int) -> np.ndarray:
    """Produto componente a componente sobre o último eixo, com broadcasting nos demais."""
    if beta == 1:
        return x * y
    return np.einsum("...p,...q,pqk->...k", x, y, structure_constants(beta))


def conj_array(x: np.ndarray, beta: int) -> np.ndarray:
    return x * conj_signs(beta)


def norm_sq_array(x: np.ndarray) -> np.ndarray:
    return np.sum(x * x, axis=-1)


@dataclass(frozen=True)
class Scalar:
    """Elemento da álgebra: beta coeficientes reais."""

    components: np.ndarray
    tag: AlgebraTag = field(compare=False)

    def __post_init__(self):
        comps = np.array(self.components, dtype=float).reshape(-1)
        if comps.shape[0] != self.tag.beta:
            raise DimensionError(
                f"Escalar de {self.tag.name} precisa de {self.tag.beta} componentes, recebeu {comps.shape[0]}."
            )
        comps.setflags(write=False)
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, values: Union[float, Sequence[float]], beta: int) -> "Scalar":
        """Constrói um escalar; um número real isolado vira a parte real."""
        if np.isscalar(values):
            comps = np.zeros(beta)
            comps[0] = float(values)
            return cls(comps, AlgebraTag(beta))
        return cls(np.asarray(values, dtype=float), AlgebraTag(beta))

    @classmethod
    def basis(cls, beta: int, index: int) -> "Scalar":
        comps = np.zeros(beta)
        comps[index] = 1.0
        return cls(comps, AlgebraTag(beta))

    @classmethod
    def random(cls, beta: int, rng: np.random.Generator) -> "Scalar":
        return cls(rng.standard_normal(beta), AlgebraTag(beta))

    @property
    def beta(self) -> int:
        return self.tag.beta

    @property
    def real(self) -> float:
        return float(self.components[0])

    def __mul__(self, other: "Scalar") -> "Scalar":
        return mul(self, other)

    def __add__(self, other: "Scalar") -> "Scalar":
        _check_tags(self, other)
        return Scalar(self.components + other.components, self.tag)

    def __sub__(self, other: "Scalar") -> "Scalar":
        _check_tags(self, other)
        return Scalar(self.components - other.components, self.tag)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.components, self.tag)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.beta == other.beta and bool(np.array_equal(self.components, other.components))

    def __hash__(self) -> int:
        return hash((self.beta, self.components.tobytes()))

    def __repr__(self) -> str:
        return f"Scalar(beta={self.beta}, {self.components.tolist()})"


def _check_tags(x: Scalar, y: Scalar) -> None:
    if x.beta != y.beta:
        raise AlgebraMismatchError(
            f"Escalares de álgebras diferentes: beta={x.beta} e beta={y.beta}."
        )


def mul(x: Scalar, y: Scalar) -> Scalar:
    """
    Produto na álgebra.

    Associativo para beta em {1, 2, 4}; para beta = 8 usa a tabela octoniônica
    de Cayley-Dickson (somente nível escalar).

    Raises:
        AlgebraMismatchError: Se os escalares forem de álgebras diferentes
    """
    _check_tags(x, y)
    return Scalar(mul_array(x.components, y.components, x.beta), x.tag)


def conj(x: Scalar) -> Scalar:
    """Conjugado: nega todas as componentes não reais."""
    return Scalar(conj_array(x.components, x.beta), x.tag)


def norm_sq(x: Scalar) -> float:
    """Norma ao quadrado (soma dos quadrados das componentes)."""
    return float(norm_sq_array(x.components))
