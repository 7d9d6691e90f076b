"""Exceções da biblioteca riesz-matvar.

Todas derivam de ValueError para manter o contrato "erro de valor com mensagem
legível"; a CLI usa as subclasses para escolher o código de saída.
"""


class RieszError(ValueError):
    """Erro base da biblioteca."""


class AlgebraMismatchError(RieszError):
    """Escalares ou matrizes de álgebras diferentes foram combinados."""


class ConjecturalOctonionError(RieszError):
    """Operação matricial solicitada com beta = 8 (caso octoniônico conjectural)."""

    def __init__(self, operacao: str = "operação matricial"):
        super().__init__(
            f"{operacao} não suportada para beta = 8: o caso octoniônico é conjectural "
            "e só é aceito em fórmulas onde beta entra como parâmetro real."
        )


class NotPositiveDefiniteError(RieszError):
    """Matriz hermitiana não é positiva definida (pivô abaixo da tolerância)."""


class DimensionError(RieszError):
    """Dimensões incompatíveis entre matrizes, pesos ou parâmetros."""


class DomainError(RieszError):
    """Parâmetro fora do domínio de uma função especial ou distribuição."""


class ConfigError(RieszError):
    """Variável de ambiente com valor inválido."""


class SpecError(RieszError):
    """Documento JSON de DistributionSpec inválido (campo desconhecido, ausente ou de tipo errado)."""
