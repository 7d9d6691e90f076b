#!/usr/bin/env python3
"""
Linha de comando: pdf, sample, verify e tables.

Códigos de saída:
    0 sucesso
    1 erro de parâmetro, domínio ou esquema
    2 verificação reprovada
    3 erro de entrada/saída ou JSON malformado
"""

import json
import logging
import sys
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO

import click
import numpy as np
import pandas as pd

from config import DEFAULT_SEED, get_log_level
from distribution_spec import FAMILIES, build_spec, parse_spec
from exceptions import RieszError
from matvar import MatVar
from samplers import make_rng
from special import (
    lgamma_m,
    log_c_beta,
    log_gamma_weighted,
    log_k_beta,
    log_stiefel_volume,
    pochhammer_weighted,
)
from verify import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARAMETER = 1
EXIT_VERIFICATION = 2
EXIT_IO = 3

TABLE_KINDS = ("gamma", "pochhammer", "cbeta", "kbeta", "stiefel")


class InputError(Exception):
    """Arquivo ilegível ou JSON malformado."""


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else get_log_level(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _parse_json(texto: str, origem: str) -> Any:
    try:
        return json.loads(texto)
    except json.JSONDecodeError as erro:
        raise InputError(f"JSON malformado em '{origem}' (linha {erro.lineno}, coluna {erro.colno}): {erro.msg}")


def _load_json(caminho: str) -> Any:
    """Lê JSON de um arquivo ('-' para stdin)."""
    try:
        if caminho == "-":
            texto = sys.stdin.read()
        else:
            with open(caminho, "r", encoding="utf-8") as arquivo:
                texto = arquivo.read()
    except OSError as erro:
        raise InputError(f"Não foi possível ler '{caminho}': {erro.strerror or erro}")
    return _parse_json(texto, caminho)


@contextmanager
def _output(caminho: str) -> Iterator[TextIO]:
    if caminho == "-":
        yield sys.stdout
        return
    try:
        arquivo = open(caminho, "w", encoding="utf-8", newline="\n")
    except OSError as erro:
        raise InputError(f"Não foi possível escrever '{caminho}': {erro.strerror or erro}")
    with arquivo:
        yield arquivo


@click.group()
@click.option("--verbose", is_flag=True, help="Log em nível DEBUG.")
def main(verbose: bool) -> None:
    """Distribuições Pearson tipo II-Riesz sobre álgebras de divisão normadas."""
    _configure_logging(verbose)


@main.command()
@click.option("--spec", "spec_path", required=True, help="Arquivo JSON do DistributionSpec ('-' para stdin).")
@click.option("--point", "point_path", required=True, help="Arquivo JSON da matriz onde avaliar.")
@click.option("--out", "out_path", default="-", show_default=True)
def pdf(spec_path: str, point_path: str, out_path: str) -> int:
    """Avalia a log-densidade em um ponto."""
    spec = parse_spec(_load_json(spec_path))
    ponto = MatVar.from_json(_load_json(point_path))
    valor = spec.evaluate(ponto)
    documento = {"logpdf": valor.logpdf if valor.in_support else None, "in_support": valor.in_support}
    with _output(out_path) as saida:
        saida.write(json.dumps(documento) + "\n")
    return EXIT_OK


@main.command()
@click.option("--family", type=click.Choice(FAMILIES), required=True)
@click.option("--variant", required=True, help="I/II (c/k para beta_riesz).")
@click.option("--beta", type=click.Choice(["1", "2", "4", "8"]), required=True)
@click.option("--m", "m", type=int, default=None)
@click.option("--n", "n", type=int, default=None)
@click.option("--params", "params_json", default="{}", help="Parâmetros em JSON (a, nu, kappa, tau, mu, omega, xi, sigma, theta).")
@click.option("--count", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--out", "out_path", default="-", show_default=True)
def sample(family: str, variant: str, beta: str, m: Optional[int], n: Optional[int], params_json: str, count: int, seed: int, out_path: str) -> int:
    """Gera amostras, uma matriz JSON por linha."""
    params = _parse_json(params_json, "--params")
    if not isinstance(params, dict):
        raise InputError("--params precisa ser um objeto JSON.")
    spec = build_spec(family, variant, int(beta), params, m=m, n=n)
    amostras = spec.sample(make_rng(seed), count)
    logger.info("%d amostras de %s/%s geradas com semente %d", count, family, variant, seed)
    with _output(out_path) as saida:
        for amostra in amostras:
            saida.write(json.dumps(amostra.to_json()) + "\n")
    return EXIT_OK


@main.command()
@click.option("--suite", type=click.Choice(SUITES), default="all", show_default=True)
@click.option("--beta", type=click.Choice(["1", "2", "4", "8"]), default=None, help="Restringe a um beta (padrão: todos).")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--out", "out_path", default="-", show_default=True)
@click.option("--timings", is_flag=True, help="Inclui wall_time no relatório.")
@click.option("--mc-samples", type=click.IntRange(min=2), default=1_000_000, show_default=True)
@click.option("--law-samples", type=click.IntRange(min=100), default=100_000, show_default=True)
def verify(suite: str, beta: Optional[str], seed: int, out_path: str, timings: bool, mc_samples: int, law_samples: int) -> int:
    """Executa uma suíte de verificação e grava o relatório JSON."""
    relatorios = run_suite(suite, None if beta is None else int(beta), seed, mc_samples, law_samples)
    documento = [r.to_dict(include_timing=timings) for r in relatorios]
    with _output(out_path) as saida:
        saida.write(json.dumps(documento, indent=2) + "\n")
    for r in relatorios:
        click.echo(f"{'✅' if r.passed else '❌'} {r.name}: {r.statistic:.4g} (limiar {r.threshold:.4g})", err=True)
    aprovados = sum(r.passed for r in relatorios)
    click.echo(f"{aprovados}/{len(relatorios)} verificações aprovadas", err=True)
    return EXIT_OK if aprovados == len(relatorios) else EXIT_VERIFICATION


def _weights(texto: Optional[str], m: int, nome: str) -> List[float]:
    if texto is None:
        return [0.0] * m
    valores = _parse_json(texto, nome)
    if not isinstance(valores, list) or len(valores) != m:
        raise InputError(f"{nome} precisa ser uma lista JSON de {m} números.")
    return [float(v) for v in valores]


def _shape_grid(limite: float, points: int) -> np.ndarray:
    return limite + np.linspace(0.05, 10.0, points)


def build_table(kind: str, beta: int, m: int, kappa: Sequence[float], tau: Sequence[float], b: Optional[float], points: int) -> pd.DataFrame:
    """
    Tabela pronta para gráfico de uma função especial.

    gamma, pochhammer, cbeta e kbeta variam a no domínio válido; stiefel lista
    (m, n, beta) para n = m..m+7 e os quatro betas.
    """
    if kind == "stiefel":
        linhas = [
            {"m": m, "n": n, "beta": bb, "log_volume": log_stiefel_volume(m, n, bb), "volume": float(np.exp(log_stiefel_volume(m, n, bb)))}
            for bb in (1, 2, 4, 8)
            for n in range(m, m + 8)
        ]
        return pd.DataFrame(linhas)
    meio = (m - 1) * beta / 2.0
    if kind == "gamma":
        grade = _shape_grid(meio - kappa[-1], points)
        return pd.DataFrame(
            {
                "a": grade,
                "log_gamma_m": [lgamma_m(a, m, beta) for a in grade] if meio < grade[0] else np.nan,
                "log_gamma_m_kappa": [log_gamma_weighted(a, kappa, beta, "plus") for a in grade],
            }
        )
    if kind == "pochhammer":
        grade = _shape_grid(meio, points)
        valores = [pochhammer_weighted(a, kappa, beta) for a in grade]
        return pd.DataFrame({"a": grade, "log_abs": [v[0] for v in valores], "sign": [v[1] for v in valores]})
    if kind == "cbeta":
        b = meio - tau[-1] + 1.0 if b is None else b
        grade = _shape_grid(meio - kappa[-1], points)
        return pd.DataFrame({"a": grade, "b": b, "log_c_beta": [log_c_beta(a, kappa, b, tau, m, beta) for a in grade]})
    b = meio + tau[0] + 1.0 if b is None else b
    grade = _shape_grid(meio + kappa[0], points)
    return pd.DataFrame({"a": grade, "b": b, "log_k_beta": [log_k_beta(a, kappa, b, tau, m, beta) for a in grade]})


@main.command()
@click.option("--kind", type=click.Choice(TABLE_KINDS), required=True)
@click.option("--beta", type=click.Choice(["1", "2", "4", "8"]), default="1", show_default=True)
@click.option("--m", "m", type=click.IntRange(min=1), default=2, show_default=True)
@click.option("--kappa", "kappa_json", default=None, help="Pesos kappa em JSON (padrão: zeros).")
@click.option("--tau", "tau_json", default=None, help="Pesos tau em JSON (padrão: zeros).")
@click.option("--b", "b", type=float, default=None, help="Segundo argumento das funções beta.")
@click.option("--points", type=click.IntRange(min=2), default=200, show_default=True)
@click.option("--out", "out_path", default="-", show_default=True)
def tables(kind: str, beta: str, m: int, kappa_json: Optional[str], tau_json: Optional[str], b: Optional[float], points: int, out_path: str) -> int:
    """Grava em CSV valores de funções especiais."""
    kappa = _weights(kappa_json, m, "--kappa")
    tau = _weights(tau_json, m, "--tau")
    tabela = build_table(kind, int(beta), m, kappa, tau, b, points)
    with _output(out_path) as saida:
        tabela.to_csv(saida, index=False, lineterminator="\n")
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Executa a CLI e devolve o código de saída (sem chamar sys.exit).

    Args:
        argv: Argumentos (padrão: sys.argv[1:])

    Returns:
        0 sucesso, 1 parâmetro/domínio/esquema, 2 verificação reprovada, 3 E/S ou JSON malformado
    """
    try:
        codigo = main.main(args=list(argv) if argv is not None else None, standalone_mode=False)
    except InputError as erro:
        click.echo(f"❌ {erro}", err=True)
        return EXIT_IO
    except OSError as erro:
        click.echo(f"❌ Erro de E/S: {erro}", err=True)
        return EXIT_IO
    except RieszError as erro:
        click.echo(f"❌ {erro}", err=True)
        return EXIT_PARAMETER
    except click.exceptions.Abort:
        return EXIT_PARAMETER
    except click.ClickException as erro:
        erro.show()
        return EXIT_PARAMETER
    if isinstance(codigo, int):
        return codigo
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
