"""
Matrizes densas sobre uma álgebra de divisão.

Uma matriz n x m é guardada como array numpy de forma (..., n, m, beta): os
eixos iniciais opcionais formam um lote, o que permite avaliar densidades e
amostrar milhares de matrizes de uma vez. As funções ``*_data`` trabalham
diretamente nesses arrays; MatVar e HermMatrix são os invólucros imutáveis
usados pela API pública.

Triangular superior significa zeros abaixo da diagonal.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Tuple

import jsonschema
import numpy as np

from algebra import AlgebraTag, Scalar, conj_array, mul_array, norm_sq_array, structure_constants
from config import get_pd_eps
from exceptions import AlgebraMismatchError, DimensionError, NotPositiveDefiniteError, SpecError

MATRIX_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "beta": {"enum": [1, 2, 4, 8]},
        "rows": {"type": "integer", "minimum": 1},
        "cols": {"type": "integer", "minimum": 1},
        "data": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "number"}},
        },
    },
    "required": ["beta", "rows", "cols", "data"],
    "additionalProperties": False,
}


# ---------------------------------------------------------------------------
# Núcleo em arrays (com lote)
# ---------------------------------------------------------------------------

def conj_transpose_data(a: np.ndarray, beta: int) -> np.ndarray:
    return conj_array(np.swapaxes(a, -3, -2), beta)


def matmul_data(a: np.ndarray, b: np.ndarray, beta: int) -> np.ndarray:
    """Produto matricial respeitando a ordem dos fatores (álgebra não comutativa)."""
    if a.shape[-2] != b.shape[-3]:
        raise DimensionError(
            f"Produto impossível: {a.shape[-3]}x{a.shape[-2]} por {b.shape[-3]}x{b.shape[-2]}."
        )
    if beta == 1:
        return (a[..., 0] @ b[..., 0])[..., None]
    return np.einsum(
        "...ilp,...ljq,pqk->...ijk", a, b, structure_constants(beta), optimize=True
    )


def gram_data(x: np.ndarray, beta: int) -> np.ndarray:
    s = matmul_data(conj_transpose_data(x, beta), x, beta)
    return hermitize_data(s, beta)


def hermitize_data(s: np.ndarray, beta: int) -> np.ndarray:
    """(S + S*)/2: exatamente hermitiana, diagonal real."""
    return 0.5 * (s + conj_transpose_data(s, beta))


def identity_data(m: int, beta: int) -> np.ndarray:
    eye = np.zeros((m, m, beta))
    eye[np.arange(m), np.arange(m), 0] = 1.0
    return eye


def real_trace_data(a: np.ndarray) -> np.ndarray:
    m = a.shape[-2]
    return np.sum(a[..., np.arange(m), np.arange(m), 0], axis=-1)


def cholesky_data(s: np.ndarray, beta: int, eps: Optional[float] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Cholesky superior em lote: S = T*T com T triangular superior e diagonal real > 0.

    Args:
        s: Matrizes hermitianas (..., m, m, beta); só o triângulo superior é lido
        beta: Dimensão da álgebra
        eps: Tolerância relativa dos pivôs (padrão: config.get_pd_eps())

    Returns:
        Tupla (T, ok) onde ok[...] indica se a matriz é positiva definida.
        Onde ok é False, T contém valores finitos sem significado.
    """
    eps = get_pd_eps() if eps is None else eps
    m = s.shape[-2]
    idx = np.arange(m)
    t = np.zeros_like(s, dtype=float)
    diag = s[..., idx, idx, 0]
    escala = np.max(np.abs(diag), axis=-1)
    ok = np.ones(s.shape[:-3], dtype=bool)
    for i in range(m):
        linha = s[..., i, i:, :].astype(float)
        if i > 0:
            # sum_{k<i} conj(t_ki) t_kj, nessa ordem
            coluna = conj_array(t[..., :i, i, :], beta)[..., :, None, :]
            linha = linha - np.sum(mul_array(coluna, t[..., :i, i:, :], beta), axis=-3)
        pivo = linha[..., 0, 0]
        pivo_ok = pivo > eps * escala
        ok &= pivo_ok
        tii = np.sqrt(np.where(pivo_ok, pivo, 1.0))
        t[..., i, i:, :] = linha / tii[..., None, None]
        t[..., i, i, :] = 0.0
        t[..., i, i, 0] = tii
    return t, ok


def tri_solve_right_data(x: np.ndarray, t: np.ndarray, beta: int) -> np.ndarray:
    """Resolve R T = X por substituição, T triangular superior (diagonal inversível)."""
    m = t.shape[-2]
    if x.shape[-2] != m:
        raise DimensionError(f"X tem {x.shape[-2]} colunas mas o fator triangular é {m}x{m}.")
    lote = np.broadcast_shapes(x.shape[:-3], t.shape[:-3])
    r = np.zeros(lote + x.shape[-3:])
    for j in range(m):
        acc = x[..., :, j, :]
        if j > 0:
            termos = mul_array(r[..., :, :j, :], t[..., None, :j, j, :], beta)
            acc = acc - np.sum(termos, axis=-2)
        tjj = t[..., j, j, :]
        inv = conj_array(tjj, beta) / norm_sq_array(tjj)[..., None]
        r[..., :, j, :] = mul_array(acc, inv[..., None, :], beta)
    return r


def tri_solve_left_conj_data(t: np.ndarray, x: np.ndarray, beta: int) -> np.ndarray:
    """Calcula (T*)^{-1} X com T triangular superior."""
    return conj_transpose_data(
        tri_solve_right_data(conj_transpose_data(x, beta), t, beta), beta
    )


def tri_inverse_data(t: np.ndarray, beta: int) -> np.ndarray:
    m = t.shape[-2]
    eye = np.broadcast_to(identity_data(m, beta), t.shape)
    return tri_solve_right_data(eye, t, beta)


def log_det_from_factor(t: np.ndarray) -> np.ndarray:
    m = t.shape[-2]
    return 2.0 * np.sum(np.log(t[..., np.arange(m), np.arange(m), 0]), axis=-1)


def log_pivots_from_factor(t: np.ndarray) -> np.ndarray:
    """log lambda_i = 2 log t_ii, forma (..., m)."""
    m = t.shape[-2]
    return 2.0 * np.log(t[..., np.arange(m), np.arange(m), 0])


def reversal_data(a: np.ndarray) -> np.ndarray:
    """J A J com J a permutação reversa."""
    return a[..., ::-1, ::-1, :]


def hermitian_coordinates_data(s: np.ndarray) -> np.ndarray:
    """Coordenadas reais de S: diagonal seguida das componentes do triângulo superior estrito."""
    m = s.shape[-2]
    partes = [s[..., np.arange(m), np.arange(m), 0]]
    iu, ju = np.triu_indices(m, k=1)
    if iu.size:
        partes.append(s[..., iu, ju, :].reshape(s.shape[:-3] + (-1,)))
    return np.concatenate(partes, axis=-1)


def from_hermitian_coordinates_data(coords: np.ndarray, m: int, beta: int) -> np.ndarray:
    lote = coords.shape[:-1]
    s = np.zeros(lote + (m, m, beta))
    s[..., np.arange(m), np.arange(m), 0] = coords[..., :m]
    iu, ju = np.triu_indices(m, k=1)
    if iu.size:
        fora = coords[..., m:].reshape(lote + (iu.size, beta))
        s[..., iu, ju, :] = fora
        s[..., ju, iu, :] = conj_array(fora, beta)
    return s


def hermitian_dimension(m: int, beta: int) -> int:
    """Dimensão real do espaço das matrizes hermitianas m x m."""
    return m + m * (m - 1) * beta // 2


def real_representation(
    linear_map: Callable[[np.ndarray], np.ndarray],
    basis: np.ndarray,
    coordinates: Callable[[np.ndarray], np.ndarray],
) -> np.ndarray:
    """
    Matriz real de uma aplicação R-linear.

    Args:
        linear_map: Aplicação em arrays de matrizes (com lote)
        basis: Lote (d, ...) com os elementos da base do domínio
        coordinates: Converte o resultado em coordenadas reais (..., d_out)

    Returns:
        Array (d_out, d) cuja coluna j são as coordenadas da imagem do j-ésimo elemento
    """
    imagens = coordinates(linear_map(basis))
    return np.asarray(imagens).reshape(basis.shape[0], -1).T


def matrix_basis_data(n: int, m: int, beta: int) -> np.ndarray:
    d = n * m * beta
    return np.eye(d).reshape(d, n, m, beta)


def hermitian_basis_data(m: int, beta: int) -> np.ndarray:
    d = hermitian_dimension(m, beta)
    return from_hermitian_coordinates_data(np.eye(d), m, beta)


def random_matrix_data(shape: Tuple[int, ...], n: int, m: int, beta: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal(shape + (n, m, beta))


def random_pd_data(shape: Tuple[int, ...], m: int, beta: int, rng: np.random.Generator) -> np.ndarray:
    """Hermitianas positivas definidas bem condicionadas: gram de Gaussiana (m+2) x m mais 0.5 I."""
    x = random_matrix_data(shape, m + 2, m, beta, rng)
    return gram_data(x, beta) + 0.5 * identity_data(m, beta)


# ---------------------------------------------------------------------------
# Tipos da API
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MatVar:
    """Matriz densa n x m com entradas na álgebra indicada por tag."""

    data: np.ndarray
    tag: AlgebraTag = field(compare=False)

    def __post_init__(self):
        arr = np.array(self.data, dtype=float)
        if arr.ndim != 3 or arr.shape[-1] != self.tag.beta:
            raise DimensionError(
                f"MatVar espera forma (n, m, {self.tag.beta}), recebeu {arr.shape}."
            )
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_real(cls, values: Any, beta: int = 1) -> "MatVar":
        """Matriz cujas entradas são reais (demais componentes nulas)."""
        real = np.atleast_2d(np.asarray(values, dtype=float))
        data = np.zeros(real.shape + (beta,))
        data[..., 0] = real
        return cls(data, AlgebraTag(beta))

    @classmethod
    def from_components(cls, values: Any, beta: int) -> "MatVar":
        return cls(np.asarray(values, dtype=float), AlgebraTag(beta))

    @classmethod
    def zeros(cls, n: int, m: int, beta: int) -> "MatVar":
        return cls(np.zeros((n, m, beta)), AlgebraTag(beta))

    @classmethod
    def identity(cls, m: int, beta: int) -> "MatVar":
        return cls(identity_data(m, beta), AlgebraTag(beta))

    @property
    def beta(self) -> int:
        return self.tag.beta

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def entry(self, i: int, j: int):
        return Scalar(self.data[i, j], self.tag)

    def _check(self, other: "MatVar") -> None:
        if self.beta != other.beta:
            raise AlgebraMismatchError(
                f"Matrizes de álgebras diferentes: beta={self.beta} e beta={other.beta}."
            )

    def __matmul__(self, other: "MatVar") -> "MatVar":
        return matmul(self, other)

    def __add__(self, other: "MatVar") -> "MatVar":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"Soma de matrizes {self.shape} e {other.shape}.")
        return MatVar(self.data + other.data, self.tag)

    def __sub__(self, other: "MatVar") -> "MatVar":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"Diferença de matrizes {self.shape} e {other.shape}.")
        return MatVar(self.data - other.data, self.tag)

    def scale(self, c: float) -> "MatVar":
        return MatVar(c * self.data, self.tag)

    def max_norm(self) -> float:
        """Maior módulo de entrada."""
        return float(np.max(np.sqrt(norm_sq_array(self.data)))) if self.data.size else 0.0

    def to_json(self) -> Dict[str, Any]:
        return {
            "beta": self.beta,
            "rows": self.rows,
            "cols": self.cols,
            "data": [[float(c) for c in entrada] for entrada in self.data.reshape(-1, self.beta)],
        }

    @classmethod
    def from_json(cls, documento: Dict[str, Any]) -> "MatVar":
        """
        Lê uma matriz no formato {"beta", "rows", "cols", "data"} (linha a linha).

        Raises:
            SpecError: Se o documento não seguir o esquema ou as dimensões não baterem
        """
        try:
            jsonschema.validate(documento, MATRIX_SCHEMA)
        except jsonschema.ValidationError as erro:
            caminho = "/".join(str(p) for p in erro.absolute_path) or "<raiz>"
            raise SpecError(f"Matriz JSON inválida em '{caminho}': {erro.message}")
        beta, rows, cols = documento["beta"], documento["rows"], documento["cols"]
        entradas = documento["data"]
        if len(entradas) != rows * cols or any(len(e) != beta for e in entradas):
            raise SpecError(
                f"Matriz JSON inválida: esperado {rows * cols} entradas de {beta} componentes."
            )
        return cls(np.asarray(entradas, dtype=float).reshape(rows, cols, beta), AlgebraTag(beta))


class HermMatrix(MatVar):
    """Matriz hermitiana m x m; a simetria S_ij = conj(S_ji) é imposta na construção."""

    def __post_init__(self):
        super().__post_init__()
        if self.rows != self.cols:
            raise DimensionError(f"Matriz hermitiana precisa ser quadrada, recebeu {self.shape}.")
        desvio = np.max(np.abs(self.data - conj_transpose_data(self.data, self.beta)), initial=0.0)
        escala = max(1.0, float(np.max(np.abs(self.data), initial=0.0)))
        if desvio > 1e-8 * escala:
            raise DimensionError(f"Matriz não é hermitiana (desvio {desvio:.3e}).")
        arr = hermitize_data(np.array(self.data), self.beta)
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @property
    def dim(self) -> int:
        return self.rows

    @classmethod
    def from_matvar(cls, a: MatVar) -> "HermMatrix":
        return cls(a.data, a.tag)

    @classmethod
    def from_real(cls, values: Any, beta: int = 1) -> "HermMatrix":
        return cls.from_matvar(MatVar.from_real(values, beta))

    @classmethod
    def identity(cls, m: int, beta: int) -> "HermMatrix":
        return cls(identity_data(m, beta), AlgebraTag(beta))

    @classmethod
    def diag(cls, values: Any, beta: int = 1) -> "HermMatrix":
        return cls.from_real(np.diag(np.asarray(values, dtype=float)), beta)


@dataclass(frozen=True, eq=False)
class CholeskyFactor:
    """S = T*T, T triangular superior com diagonal real positiva."""

    T: MatVar

    @property
    def dim(self) -> int:
        return self.T.rows

    @property
    def diagonal(self) -> np.ndarray:
        return self.T.data[np.arange(self.dim), np.arange(self.dim), 0].copy()


@dataclass(frozen=True, eq=False)
class LdlFactor:
    """S = L*DL, L unitriangular superior e D = diag(lambda_1, ..., lambda_m)."""

    L: MatVar
    D: np.ndarray


# ---------------------------------------------------------------------------
# Operações públicas
# ---------------------------------------------------------------------------

def conj_transpose(a: MatVar) -> MatVar:
    return MatVar(conj_transpose_data(a.data, a.beta), a.tag)


def matmul(a: MatVar, b: MatVar) -> MatVar:
    a._check(b)
    a.tag.require_matrix_level("produto matricial")
    return MatVar(matmul_data(a.data, b.data, a.beta), a.tag)


def gram(x: MatVar) -> HermMatrix:
    """Retorna X*X (hermitiana, semidefinida positiva)."""
    x.tag.require_matrix_level("gram")
    return HermMatrix(gram_data(x.data, x.beta), x.tag)


def cholesky_upper(s: HermMatrix) -> CholeskyFactor:
    """
    Fatoração de Cholesky superior S = T*T.

    Raises:
        NotPositiveDefiniteError: Se algum pivô for <= eps * maior entrada diagonal
        ConjecturalOctonionError: Se beta = 8
    """
    s.tag.require_matrix_level("cholesky_upper")
    t, ok = cholesky_data(s.data, s.beta)
    if not bool(ok):
        raise NotPositiveDefiniteError("Matriz não é positiva definida (pivô de Cholesky abaixo da tolerância).")
    return CholeskyFactor(MatVar(t, s.tag))


def ldl(s: HermMatrix) -> LdlFactor:
    """S = L*DL com lambda_i = t_ii^2 do fator de Cholesky."""
    fator = cholesky_upper(s)
    t = fator.T.data
    tii = fator.diagonal
    l_data = t / tii[:, None, None]
    return LdlFactor(MatVar(l_data, s.tag), tii**2)


def principal_minor_dets(s: HermMatrix) -> np.ndarray:
    """Determinantes dos blocos principais líderes |A_1|, ..., |A_m|."""
    # O fator de Cholesky do bloco p x p é o bloco p x p do fator completo
    tii = cholesky_upper(s).diagonal
    return np.cumprod(tii**2)


def tri_solve_right(x: MatVar, t: CholeskyFactor) -> MatVar:
    """Retorna R com R T = X."""
    x._check(t.T)
    x.tag.require_matrix_level("tri_solve_right")
    if x.cols != t.dim:
        raise DimensionError(f"X tem {x.cols} colunas mas o fator é {t.dim}x{t.dim}.")
    return MatVar(tri_solve_right_data(x.data, t.T.data, x.beta), x.tag)


def log_det(s: HermMatrix) -> float:
    """log|S| como soma dos logaritmos dos pivôs."""
    return float(log_det_from_factor(cholesky_upper(s).T.data))


def hermitian_inverse(s: HermMatrix) -> HermMatrix:
    """S^{-1} = T^{-1} (T^{-1})*."""
    t = cholesky_upper(s).T.data
    t_inv = tri_inverse_data(t, s.beta)
    return HermMatrix(hermitize_data(matmul_data(t_inv, conj_transpose_data(t_inv, s.beta), s.beta), s.beta), s.tag)


def upper_lower_factor(s: HermMatrix) -> MatVar:
    """
    Fator L triangular superior com S = L L* (Cholesky em ordem reversa).

    L = J T* J, onde T*T = J S J e J é a permutação reversa.
    """
    t = cholesky_upper(HermMatrix(reversal_data(s.data), s.tag)).T.data
    return MatVar(reversal_data(conj_transpose_data(t, s.beta)), s.tag)


def real_trace(a: MatVar) -> float:
    return float(real_trace_data(a.data))
