import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from exceptions import ConfigError

# Carrega as variáveis de ambiente do arquivo .env
env_path = Path(__file__).parent / ".env"
load_dotenv(dotenv_path=env_path)
load_dotenv()

DEFAULT_SEED = 42

# Tamanho fixo dos blocos de Monte-Carlo: o resultado não depende do número de workers
MC_CHUNK = 100_000

DEFAULT_PD_EPS = 1e-12


def _read(name: str) -> Optional[str]:
    valor = os.getenv(name)
    if valor is not None:
        valor = valor.strip()
    return valor or None


def get_thread_count() -> int:
    """
    Retorna o número máximo de workers para o fan-out de Monte-Carlo.

    Lê RIESZ_MATVAR_THREADS; ausente ou 0 significa automático (os.cpu_count()).

    Raises:
        ConfigError: Se o valor não for um inteiro não negativo
    """
    valor = _read("RIESZ_MATVAR_THREADS")
    if valor is None:
        return os.cpu_count() or 1
    try:
        threads = int(valor)
    except ValueError:
        raise ConfigError(f"RIESZ_MATVAR_THREADS inválido: '{valor}' (esperado inteiro >= 0).")
    if threads < 0:
        raise ConfigError(f"RIESZ_MATVAR_THREADS inválido: {threads} (esperado inteiro >= 0).")
    if threads == 0:
        return os.cpu_count() or 1
    return threads


def get_log_level() -> int:
    """Retorna o nível de log configurado em RIESZ_MATVAR_LOG_LEVEL (padrão WARNING)."""
    nome = (_read("RIESZ_MATVAR_LOG_LEVEL") or "WARNING").upper()
    nivel = logging.getLevelName(nome)
    if not isinstance(nivel, int):
        raise ConfigError(f"RIESZ_MATVAR_LOG_LEVEL inválido: '{nome}'.")
    return nivel


def get_pd_eps() -> float:
    """Tolerância relativa de positividade dos pivôs (RIESZ_MATVAR_PD_EPS, padrão 1e-12)."""
    valor = _read("RIESZ_MATVAR_PD_EPS")
    if valor is None:
        return DEFAULT_PD_EPS
    try:
        eps = float(valor)
    except ValueError:
        raise ConfigError(f"RIESZ_MATVAR_PD_EPS inválido: '{valor}'.")
    if not 0.0 < eps < 1.0:
        raise ConfigError(f"RIESZ_MATVAR_PD_EPS fora do intervalo (0, 1): {eps}.")
    return eps
